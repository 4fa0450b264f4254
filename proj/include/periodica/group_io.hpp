#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "periodica/finite_group.hpp"

namespace periodica {

/// Cayley-table text: first line n, then n lines of n space-separated ids.
/// Errors carry the 1-based line number.
std::vector<std::vector<std::int64_t>> parse_cayley_text(std::string_view text);

FiniteGroup read_cayley_group(std::string_view text, std::string label = {});

struct PermutationGenerators {
  std::vector<Permutation> generators;
  std::size_t degree = 1;
};

/// One generator per line in cycle notation, e.g. "(0 1 2)(3 4)".
/// Blank lines are skipped; "()" is the identity. The degree is one more
/// than the largest point mentioned (at least 1).
PermutationGenerators parse_permutation_text(std::string_view text);

/// Parses one line of cycle notation on the given degree.
Permutation parse_cycles(std::string_view cycles, std::size_t degree);

std::string write_cayley_text(const FiniteGroup& g);

std::string read_file(const std::string& path);

}  // namespace periodica
