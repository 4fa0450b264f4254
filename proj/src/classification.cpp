#include "periodica/classification.hpp"

#include <algorithm>
#include <future>
#include <sstream>

#include "periodica/counting.hpp"
#include "periodica/error.hpp"

namespace periodica {

std::string AlphaLowerBound::to_string() const {
  return periodica::to_string(numerator) + "/" + std::to_string(denominator);
}

AlphaLowerBound alpha_lower_bound(std::uint64_t n, std::uint64_t q) {
  if (n == 0) throw Error(ErrorCode::InvalidInput, "order must be positive");
  return {fix_count(n, q) - fix_count(n - 1, q), n};
}

std::vector<SmallAlphaEntry> SmallAlphaClassification::attaining(std::uint64_t v) const {
  std::vector<SmallAlphaEntry> out;
  for (const auto& e : entries) {
    if (e.alpha == v) out.push_back(e);
  }
  return out;
}

SmallAlphaClassification classify_small_alpha(std::uint64_t alpha_max,
                                              const GroupCatalog& catalog, unsigned jobs) {
  if (alpha_max < 1) throw Error(ErrorCode::InvalidInput, "alpha_max must be at least 1");
  SmallAlphaClassification out;
  out.alpha_max = alpha_max;

  struct Cell {
    const FiniteGroup* group;
    std::uint64_t q;
  };
  std::vector<Cell> cells;
  auto& cert = out.certificate;
  std::uint64_t q = 2;
  for (;; ++q) {
    auto first = alpha_lower_bound(2, q);
    if (first.exceeds(alpha_max)) {
      cert.stop_q = q;
      cert.stop_bound = std::move(first);
      break;
    }
    ScanRow row;
    row.q = q;
    std::size_t n = 2;
    for (;; ++n) {
      auto bound = alpha_lower_bound(n, q);
      if (bound.exceeds(alpha_max)) {
        row.stop_order = n;
        row.stop_bound = std::move(bound);
        break;
      }
      if (!catalog.covers_order(n)) {
        throw Error(ErrorCode::CatalogIncomplete,
                    "catalog does not contain every group of order " + std::to_string(n));
      }
      for (const auto* g : catalog.of_order(n)) cells.push_back({g, q});
    }
    row.last_order = n - 1;
    cert.rows.push_back(std::move(row));
  }
  cert.cells_examined = cells.size();

  auto evaluate = [](const Cell& c) {
    return psi_normal(*c.group, c.q).alpha;
  };
  std::vector<BigInt> alphas(cells.size());
  const unsigned workers = std::max(1U, jobs);
  std::vector<std::future<void>> tasks;
  for (unsigned w = 0; w < workers; ++w) {
    tasks.push_back(std::async(workers == 1 ? std::launch::deferred : std::launch::async,
                               [&, w] {
                                 for (std::size_t i = w; i < cells.size(); i += workers) {
                                   alphas[i] = evaluate(cells[i]);
                                 }
                               }));
  }
  for (auto& t : tasks) t.get();

  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (alphas[i] <= alpha_max) {
      out.entries.push_back(
          {cells[i].group->label(), cells[i].group->order(), cells[i].q, alphas[i]});
    }
  }
  std::sort(out.entries.begin(), out.entries.end(), [](const auto& a, const auto& b) {
    return std::tie(a.alpha, a.order, a.group, a.q) < std::tie(b.alpha, b.order, b.group, b.q);
  });
  return out;
}

SmallValueTable table_small_values(std::uint64_t q_max) {
  if (q_max < 2) throw Error(ErrorCode::AlphabetTooSmall, "q_max must be at least 2");
  SmallValueTable t;
  t.rows = {"Z2", "Z3", "Z2xZ2", "Z4", "Z5", "S3", "Z6", "Z7"};
  for (std::uint64_t q = 2; q <= q_max; ++q) t.qs.push_back(q);
  for (const auto& name : t.rows) {
    auto lattice = all_subgroups(builtin_group(name));
    std::vector<BigInt> row;
    for (auto q : t.qs) row.push_back(psi(lattice, lattice.trivial(), q).alpha);
    t.alpha.push_back(std::move(row));
  }
  return t;
}

std::string table_csv(const SmallValueTable& table) {
  std::ostringstream os;
  os << "group";
  for (auto q : table.qs) os << ",q" << q;
  os << '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    os << table.rows[r];
    for (const auto& v : table.alpha[r]) os << ',' << v;
    os << '\n';
  }
  return os.str();
}

}  // namespace periodica
