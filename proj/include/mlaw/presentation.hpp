#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mlaw {

/// A word in the generators: sequence of (generator index, exponent) pairs
/// with nonzero exponents and no two consecutive factors on the same
/// generator. The empty word is the identity.
struct Word {
  std::vector<std::pair<int, int>> factors;

  bool operator==(const Word&) const = default;

  void append(int gen, int exponent);
  Word inverse() const;
};

/// Abstract syntax of <g1,...,gk | r1, r2, ...>. Parsed presentations use
/// single-letter generator names; programmatically built ones may use any
/// symbol strings.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  bool operator==(const Presentation&) const = default;
};

/// Parse the grammar `<g1,...,gk | r1, r2, ...>`. A relator is a word with
/// juxtaposition, `^n` integer exponents and parentheses; `u=v` (chains
/// allowed) abbreviates the relator u v^-1, and `1` is the empty word.
/// Throws ParseError with the offending position.
Presentation parse_presentation(std::string_view text);

/// Inverse of parse_presentation up to word normalization:
/// parse_presentation(print_presentation(p)) == p for parsed p.
std::string print_presentation(const Presentation& p);

std::string print_word(const Presentation& p, const Word& w);

}  // namespace mlaw
