#include "periodica/group_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "periodica/error.hpp"

namespace periodica {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

Error line_error(std::size_t line, const std::string& msg) {
  return Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ": " + msg);
}

std::vector<std::int64_t> parse_ints(std::string_view line, std::size_t lineno) {
  std::vector<std::int64_t> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + line.size(), v);
    if (ec != std::errc() ||
        (ptr != line.data() + line.size() && !std::isspace(static_cast<unsigned char>(*ptr)))) {
      throw line_error(lineno, "expected an integer at column " + std::to_string(i + 1));
    }
    out.push_back(v);
    i = static_cast<std::size_t>(ptr - line.data());
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::int64_t>> parse_cayley_text(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t k = 0;
  while (k < lines.size() && is_blank(lines[k])) ++k;
  if (k == lines.size()) throw line_error(1, "missing group order");
  auto header = parse_ints(lines[k], k + 1);
  if (header.size() != 1 || header[0] < 1) {
    throw line_error(k + 1, "first line must be a single positive integer n");
  }
  const auto n = static_cast<std::size_t>(header[0]);
  std::vector<std::vector<std::int64_t>> rows;
  for (++k; k < lines.size() && rows.size() < n; ++k) {
    auto row = parse_ints(lines[k], k + 1);
    if (row.size() != n) {
      throw line_error(k + 1, "expected " + std::to_string(n) + " entries, found " +
                                  std::to_string(row.size()));
    }
    for (auto v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= n) {
        throw line_error(k + 1, "entry " + std::to_string(v) + " outside 0.." +
                                    std::to_string(n - 1));
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.size() != n) {
    throw line_error(k + 1, "expected " + std::to_string(n) + " rows, found " +
                                std::to_string(rows.size()));
  }
  for (; k < lines.size(); ++k) {
    if (!is_blank(lines[k])) throw line_error(k + 1, "trailing data after table");
  }
  return rows;
}

FiniteGroup read_cayley_group(std::string_view text, std::string label) {
  return group_from_cayley_table(parse_cayley_text(text), std::move(label));
}

namespace {

// cycles as lists of points; throws with a column on malformed input
std::vector<std::vector<std::uint32_t>> parse_cycle_list(std::string_view s) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::size_t i = 0;
  auto fail = [&](const std::string& msg) {
    return Error(ErrorCode::SyntaxError, "column " + std::to_string(i + 1) + ": " + msg);
  };
  while (i < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[i]))) {
      ++i;
      continue;
    }
    if (s[i] != '(') throw fail("expected '('");
    ++i;
    std::vector<std::uint32_t> cycle;
    for (;;) {
      while (i < s.size() && (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',')) ++i;
      if (i == s.size()) throw fail("unterminated cycle");
      if (s[i] == ')') {
        ++i;
        break;
      }
      std::uint32_t v = 0;
      auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), v);
      if (ec != std::errc()) throw fail("expected a nonnegative integer");
      cycle.push_back(v);
      i = static_cast<std::size_t>(ptr - s.data());
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

Permutation cycles_to_permutation(const std::vector<std::vector<std::uint32_t>>& cycles,
                                  std::size_t degree) {
  Permutation p(degree);
  for (std::size_t i = 0; i < degree; ++i) p[i] = static_cast<std::uint32_t>(i);
  std::vector<char> used(degree, 0);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] >= degree) {
        throw Error(ErrorCode::SyntaxError,
                    "point " + std::to_string(c[k]) + " outside degree " + std::to_string(degree));
      }
      if (used[c[k]]) {
        throw Error(ErrorCode::SyntaxError, "point " + std::to_string(c[k]) + " repeated");
      }
      used[c[k]] = 1;
      p[c[k]] = c[(k + 1) % c.size()];
    }
  }
  return p;
}

}  // namespace

Permutation parse_cycles(std::string_view cycles, std::size_t degree) {
  return cycles_to_permutation(parse_cycle_list(cycles), degree);
}

PermutationGenerators parse_permutation_text(std::string_view text) {
  auto lines = split_lines(text);
  std::vector<std::pair<std::size_t, std::vector<std::vector<std::uint32_t>>>> parsed;
  std::size_t degree = 1;
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (is_blank(lines[k])) continue;
    try {
      auto cycles = parse_cycle_list(lines[k]);
      for (const auto& c : cycles) {
        for (auto v : c) degree = std::max<std::size_t>(degree, std::size_t{v} + 1);
      }
      parsed.emplace_back(k + 1, std::move(cycles));
    } catch (const Error& e) {
      throw line_error(k + 1, e.what());
    }
  }
  PermutationGenerators out;
  out.degree = degree;
  for (const auto& [lineno, cycles] : parsed) {
    try {
      out.generators.push_back(cycles_to_permutation(cycles, degree));
    } catch (const Error& e) {
      throw line_error(lineno, e.what());
    }
  }
  return out;
}

std::string write_cayley_text(const FiniteGroup& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) os << (b ? " " : "") << g.mul(a, b);
    os << '\n';
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace periodica
