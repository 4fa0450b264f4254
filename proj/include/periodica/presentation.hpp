#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace periodica {

/// Letters are signed generator numbers: +k is generator k-1, -k its inverse.
using Letter = int;
using Word = std::vector<Letter>;

Word free_reduce(const Word& w);
Word inverse_word(const Word& w);

/// Group presentation <generators | relators>, optionally with words
/// generating a subgroup H (empty = trivial subgroup).
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
  std::vector<Word> subgroup_words;

  std::string word_to_string(const Word& w) const;
  /// Round-trippable text form.
  std::string to_string() const;
};

/// Parses "< a, b | a^2, b^3, (a b)^2 ; H = a >" (the H clause may also
/// follow the closing bracket). Words are products of
/// generators, "^n" powers (n may be negative), parentheses and
/// commutators [u,v] = u^-1 v^-1 u v. Adjacent single-letter generators may
/// be written without spaces ("ab"). Throws SyntaxError (with column) or
/// UnknownGenerator.
Presentation parse_presentation(std::string_view text);

}  // namespace periodica
