#include "periodica/integer_matrix.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "periodica/error.hpp"
#include "periodica/number_theory.hpp"

namespace periodica {

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::parse(std::string_view text) {
  std::vector<std::vector<BigInt>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    auto row_text = text.substr(start, end - start);
    std::vector<BigInt> row;
    std::size_t s = 0;
    while (s <= row_text.size()) {
      auto e = row_text.find(',', s);
      if (e == std::string_view::npos) e = row_text.size();
      std::string cell(row_text.substr(s, e - s));
      cell.erase(std::remove_if(cell.begin(), cell.end(),
                                [](unsigned char c) { return std::isspace(c); }),
                 cell.end());
      const bool ok = !cell.empty() &&
                      std::all_of(cell.begin() + (cell[0] == '-' ? 1 : 0), cell.end(),
                                  [](unsigned char c) { return std::isdigit(c); }) &&
                      cell != "-";
      if (!ok) {
        throw Error(ErrorCode::SyntaxError, "matrix row " + std::to_string(rows.size() + 1) +
                                                ": bad entry '" + cell + "'");
      }
      row.emplace_back(cell);
      s = e + 1;
    }
    rows.push_back(std::move(row));
    start = end + 1;
  }
  const auto cols = rows.front().size();
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw Error(ErrorCode::SyntaxError,
                  "matrix row " + std::to_string(r + 1) + " has " +
                      std::to_string(rows[r].size()) + " entries, expected " +
                      std::to_string(cols));
    }
  }
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::string IntegerMatrix::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) out += ';';
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) out += ',';
      out += (*this)(r, c).str();
    }
  }
  return out;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& other) const {
  if (cols_ != other.rows_) throw Error(ErrorCode::InvalidInput, "matrix shape mismatch");
  IntegerMatrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if ((*this)(i, k) == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) out(i, j) += (*this)(i, k) * other(k, j);
    }
  }
  return out;
}

BigInt determinant(const IntegerMatrix& input) {
  if (input.rows() != input.cols()) throw Error(ErrorCode::InvalidInput, "matrix is not square");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntegerMatrix m = input;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

std::vector<IntegerMatrix> hnf_sublattices(std::size_t d, std::uint64_t index) {
  if (d < 1 || index < 1) throw Error(ErrorCode::InvalidInput, "need d >= 1 and index >= 1");
  std::vector<IntegerMatrix> out;
  std::vector<std::uint64_t> diag(d);
  // diagonals in lexicographic order, then free entries in lexicographic order
  std::function<void(std::size_t, std::uint64_t)> choose_diag = [&](std::size_t i, std::uint64_t rest) {
    if (i + 1 == d) {
      diag[i] = rest;
      IntegerMatrix m(d, d);
      for (std::size_t k = 0; k < d; ++k) m(k, k) = diag[k];
      std::vector<std::pair<std::size_t, std::size_t>> free;
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = r + 1; c < d; ++c) free.emplace_back(r, c);
      }
      std::function<void(std::size_t)> fill = [&](std::size_t k) {
        if (k == free.size()) {
          out.push_back(m);
          return;
        }
        auto [r, c] = free[k];
        for (std::uint64_t v = 0; v < diag[r]; ++v) {
          m(r, c) = v;
          fill(k + 1);
        }
      };
      fill(0);
      return;
    }
    for (auto q : divisors(rest)) {
      diag[i] = q;
      choose_diag(i + 1, rest / q);
    }
  };
  choose_diag(0, index);
  return out;
}

std::vector<BigInt> smith_diagonal(const IntegerMatrix& input) {
  if (input.rows() != input.cols()) throw Error(ErrorCode::InvalidInput, "matrix is not square");
  const std::size_t n = input.rows();
  IntegerMatrix m = input;
  auto swap_rows = [&](std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < n; ++c) std::swap(m(a, c), m(b, c));
  };
  auto swap_cols = [&](std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < n; ++r) std::swap(m(r, a), m(r, b));
  };
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // move the smallest nonzero entry of the trailing block to (k, k)
      std::size_t pr = n;
      std::size_t pc = n;
      for (std::size_t r = k; r < n; ++r) {
        for (std::size_t c = k; c < n; ++c) {
          if (m(r, c) != 0 && (pr == n || abs(m(r, c)) < abs(m(pr, pc)))) {
            pr = r;
            pc = c;
          }
        }
      }
      if (pr == n) throw Error(ErrorCode::SingularMatrix, "matrix is singular");
      swap_rows(k, pr);
      swap_cols(k, pc);
      bool clean = true;
      for (std::size_t r = k + 1; r < n; ++r) {
        BigInt f = m(r, k) / m(k, k);
        if (f != 0) {
          for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
        }
        if (m(r, k) != 0) clean = false;
      }
      for (std::size_t c = k + 1; c < n; ++c) {
        BigInt f = m(k, c) / m(k, k);
        if (f != 0) {
          for (std::size_t r = k; r < n; ++r) m(r, c) -= f * m(r, k);
        }
        if (m(k, c) != 0) clean = false;
      }
      if (!clean) continue;
      // enforce d_k | every remaining entry
      bool divides = true;
      for (std::size_t r = k + 1; r < n && divides; ++r) {
        for (std::size_t c = k + 1; c < n; ++c) {
          if (m(r, c) % m(k, k) != 0) {
            for (std::size_t cc = k; cc < n; ++cc) m(k, cc) += m(r, cc);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
  }
  std::vector<BigInt> diag;
  for (std::size_t k = 0; k < n; ++k) diag.push_back(abs(m(k, k)));
  return diag;
}

FiniteGroup smith_quotient(const IntegerMatrix& m, std::size_t max_order) {
  auto diag = smith_diagonal(m);
  std::vector<std::uint64_t> moduli;
  for (const auto& d : diag) {
    if (d > max_order) {
      throw Error(ErrorCode::OrderLimitExceeded,
                  "quotient order exceeds limit " + std::to_string(max_order));
    }
    moduli.push_back(static_cast<std::uint64_t>(d));
  }
  return direct_sum_of_cyclics(moduli, max_order);
}

}  // namespace periodica
