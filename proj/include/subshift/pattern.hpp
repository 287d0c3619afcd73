#ifndef SUBSHIFT_PATTERN_HPP
#define SUBSHIFT_PATTERN_HPP

#include <string>
#include <vector>

#include "subshift/words.hpp"

namespace subshift {

/// One atom of a word pattern: a literal letter, a+ (one or more), a* (zero
/// or more), a letter class, or a trailing "anything from here" marker.
struct PatternAtom {
  enum class Kind { Lit, Plus, Star, OneOf, AnySuffix };
  Kind kind = Kind::Lit;
  Symbol sym = 0;               // Lit / Plus / Star
  std::vector<Symbol> choices;  // OneOf, nonempty, sorted

  static PatternAtom lit(Symbol a) { return {Kind::Lit, a, {}}; }
  static PatternAtom plus(Symbol a) { return {Kind::Plus, a, {}}; }
  static PatternAtom star(Symbol a) { return {Kind::Star, a, {}}; }
  static PatternAtom one_of(std::vector<Symbol> cs);
  static PatternAtom any_suffix() { return {Kind::AnySuffix, 0, {}}; }

  bool operator==(const PatternAtom&) const = default;
};

using Pattern = std::vector<PatternAtom>;

/// Presentation of a subshift: an alphabet plus a list of forbidden word
/// patterns, each denoting a regular set of finite words.
struct SubshiftSpec {
  Alphabet alphabet;
  std::vector<Pattern> forbidden;
  std::string name;
  std::string notes;
};

// Throws std::invalid_argument when an atom is out of range, a OneOf is
// empty, an AnySuffix is not the final atom, or the pattern can denote the
// empty word.
void validate_pattern(const Pattern& p, int alphabet_size);

// Direct matcher for the pattern's denotation; used by brute-force checks
// and never by the compiled automata.
bool pattern_matches(const Pattern& p, const Word& w);

std::string render_pattern(const Pattern& p, const Alphabet& alpha);

}  // namespace subshift

#endif
