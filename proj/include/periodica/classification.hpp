#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "periodica/bigint.hpp"
#include "periodica/catalog.hpp"

namespace periodica {

/// Lower bound on alpha_[1](Q; q) for |Q| = n, as the exact rational
/// (q^n - q^(n-1)) / n. It follows from psi >= q^n - q^(n-1) and the orbit
/// size n, and is increasing in both n >= 2 and q >= 2.
struct AlphaLowerBound {
  BigInt numerator;
  std::uint64_t denominator = 1;

  bool exceeds(std::uint64_t alpha_max) const {
    return numerator > BigInt(alpha_max) * denominator;
  }
  std::string to_string() const;
};

AlphaLowerBound alpha_lower_bound(std::uint64_t n, std::uint64_t q);

struct SmallAlphaEntry {
  std::string group;  // quotient G/H
  std::size_t order = 0;
  std::uint64_t q = 0;
  BigInt alpha;
};

/// For one alphabet size: orders 2..last_order were scanned, and the bound at
/// stop_order already exceeds alpha_max.
struct ScanRow {
  std::uint64_t q = 0;
  std::size_t last_order = 1;
  std::size_t stop_order = 2;
  AlphaLowerBound stop_bound;
};

struct ScanCertificate {
  std::vector<ScanRow> rows;
  std::uint64_t stop_q = 2;  // bound(2, stop_q) > alpha_max
  AlphaLowerBound stop_bound;
  std::size_t cells_examined = 0;
};

struct SmallAlphaClassification {
  std::uint64_t alpha_max = 0;
  /// Sorted by alpha, then order, then group name, then q.
  std::vector<SmallAlphaEntry> entries;
  ScanCertificate certificate;

  /// Entries attaining exactly v.
  std::vector<SmallAlphaEntry> attaining(std::uint64_t v) const;
};

/// Every (Q, q) with Q != 1 in the catalog and alpha_[1](Q; q) <= alpha_max.
/// Only cells whose lower bound is <= alpha_max are evaluated; throws
/// CatalogIncomplete if the catalog does not hold every group of a scanned
/// order. Cells may run on `jobs` threads; the result does not depend on it.
SmallAlphaClassification classify_small_alpha(std::uint64_t alpha_max,
                                              const GroupCatalog& catalog,
                                              unsigned jobs = 1);

/// alpha_[1](Q; q) for Q = Z2, Z3, Z2xZ2, Z4, Z5, S3, Z6, Z7 and q = 2..q_max,
/// each through the generic lattice computation.
struct SmallValueTable {
  std::vector<std::string> rows;
  std::vector<std::uint64_t> qs;
  std::vector<std::vector<BigInt>> alpha;  // [row][q]
};

SmallValueTable table_small_values(std::uint64_t q_max = 5);

/// "group,q2,q3,..." header plus one line per row.
std::string table_csv(const SmallValueTable& table);

}  // namespace periodica
