#include "periodica/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

#include "periodica/error.hpp"

namespace periodica {

Word free_reduce(const Word& w) {
  Word out;
  for (auto l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word inverse_word(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (auto& l : out) l = -l;
  return out;
}

std::string Presentation::word_to_string(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const auto run = static_cast<long>(j - i);
    if (!out.empty()) out += ' ';
    out += generators[static_cast<std::size_t>(std::abs(w[i]) - 1)];
    const long exponent = w[i] > 0 ? run : -run;
    if (exponent != 1) out += '^' + std::to_string(exponent);
    i = j;
  }
  return out;
}

std::string Presentation::to_string() const {
  std::string out = "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) out += (i ? ", " : "") + generators[i];
  out += " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) out += (i ? ", " : "") + word_to_string(relators[i]);
  out += relators.empty() ? ">" : " >";
  if (!subgroup_words.empty()) {
    out += " ; H = ";
    for (std::size_t i = 0; i < subgroup_words.size(); ++i) {
      out += (i ? ", " : "") + word_to_string(subgroup_words[i]);
    }
  }
  return out;
}

namespace {

constexpr long kMaxExponent = 100000;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation parse() {
    Presentation p;
    expect('<');
    skip_space();
    if (peek() != '|') {
      for (;;) {
        auto start = pos_;
        auto name = identifier();
        if (!(name[0] >= 'a' && name[0] <= 'z')) {
          fail_at(start, "generator names must start with a lowercase letter");
        }
        if (std::find(p.generators.begin(), p.generators.end(), name) != p.generators.end()) {
          fail_at(start, "duplicate generator '" + name + "'");
        }
        p.generators.push_back(std::move(name));
        skip_space();
        if (peek() != ',') break;
        ++pos_;
      }
    }
    gens_ = &p.generators;
    expect('|');
    skip_space();
    if (peek() != '>' && peek() != ';') {
      for (;;) {
        auto w = free_reduce(word());
        if (!w.empty()) p.relators.push_back(std::move(w));
        skip_space();
        if (peek() != ',') break;
        ++pos_;
      }
    }
    // the subgroup clause may sit inside the brackets or after them
    bool clause = subgroup_clause(p);
    expect('>');
    if (!clause) subgroup_clause(p);
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  bool subgroup_clause(Presentation& p) {
    skip_space();
    if (peek() != ';') return false;
    ++pos_;
    skip_space();
    auto start = pos_;
    if (identifier() != "H") fail_at(start, "expected 'H'");
    expect('=');
    for (;;) {
      p.subgroup_words.push_back(free_reduce(word()));
      skip_space();
      if (peek() != ',') break;
      ++pos_;
    }
    return true;
  }

  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    throw Error(ErrorCode::SyntaxError, "column " + std::to_string(at + 1) + ": " + msg);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  static bool ident_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
  static bool ident_char(char c) {
    return ident_start(c) || (c >= '0' && c <= '9') || c == '_';
  }

  std::string identifier() {
    skip_space();
    if (!ident_start(peek())) fail("expected an identifier");
    auto start = pos_;
    while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Word generator_run(std::size_t start, const std::string& name) {
    const auto& gens = *gens_;
    auto it = std::find(gens.begin(), gens.end(), name);
    if (it != gens.end()) return {static_cast<Letter>(it - gens.begin()) + 1};
    // "ab" for single-letter generators a, b
    Word out;
    for (char c : name) {
      auto jt = std::find(gens.begin(), gens.end(), std::string(1, c));
      if (jt == gens.end()) {
        throw Error(ErrorCode::UnknownGenerator,
                    "column " + std::to_string(start + 1) + ": unknown generator '" + name + "'");
      }
      out.push_back(static_cast<Letter>(jt - gens.begin()) + 1);
    }
    return out;
  }

  bool at_atom_start() {
    skip_space();
    char c = peek();
    return ident_start(c) || c == '(' || c == '[' || c == '1';
  }

  Word word() {
    skip_space();
    if (!at_atom_start()) fail("expected a word");
    Word w;
    while (at_atom_start()) {
      auto f = factor();
      w.insert(w.end(), f.begin(), f.end());
      skip_space();
      if (peek() == '*') {
        ++pos_;
        if (!at_atom_start()) fail("expected a word after '*'");
      }
    }
    return w;
  }

  // atom ('^' integer)?; a bare generator run "ab^2" powers only its last letter
  Word factor() {
    skip_space();
    Word prefix;
    Word base;
    char c = peek();
    if (c == '(') {
      ++pos_;
      base = word();
      expect(')');
    } else if (c == '[') {
      ++pos_;
      auto u = word();
      expect(',');
      auto v = word();
      expect(']');
      base = inverse_word(u);
      auto vi = inverse_word(v);
      base.insert(base.end(), vi.begin(), vi.end());
      base.insert(base.end(), u.begin(), u.end());
      base.insert(base.end(), v.begin(), v.end());
    } else if (c == '1') {
      ++pos_;
    } else {
      auto start = pos_;
      auto run = generator_run(start, identifier());
      prefix.assign(run.begin(), run.end() - 1);
      base = {run.back()};
    }
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      long exponent = 0;
      const char* first = text_.data() + pos_;
      const char* last = text_.data() + text_.size();
      if (first != last && *first == '+') ++first;
      auto [ptr, ec] = std::from_chars(first, last, exponent);
      if (ec != std::errc()) fail("expected an integer exponent");
      if (exponent > kMaxExponent || exponent < -kMaxExponent) fail("exponent too large");
      pos_ = static_cast<std::size_t>(ptr - text_.data());
      if (exponent < 0) {
        base = inverse_word(base);
        exponent = -exponent;
      }
      Word powered;
      for (long i = 0; i < exponent; ++i) powered.insert(powered.end(), base.begin(), base.end());
      base = std::move(powered);
    }
    prefix.insert(prefix.end(), base.begin(), base.end());
    return prefix;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  const std::vector<std::string>* gens_ = nullptr;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).parse(); }

}  // namespace periodica
