#ifndef SUBSHIFT_AUTOMATON_HPP
#define SUBSHIFT_AUTOMATON_HPP

#include <memory>
#include <vector>

#include "subshift/dfa.hpp"
#include "subshift/pattern.hpp"
#include "subshift/words.hpp"

namespace subshift {

struct FollowerLattice;  // built once per automaton, see lattice.hpp

/// Compiled factor-avoidance recognizer.  `graph` is the deterministic
/// partial automaton of factor-clean words (a run that dies means some
/// forbidden factor was completed); a state is live when an infinite run
/// starts there, and a word belongs to the language exactly when its run
/// survives and ends in a live state.  `graph.accept` is the live set, so
/// `graph` doubles as the language acceptor.  All states are reachable.
class ShiftAutomaton {
 public:
  SubshiftSpec spec;
  Dfa graph;
  std::vector<char> live;
  Dfa lang;  // acceptor of the language as a set of nonempty words

  int alphabet_size() const { return spec.alphabet.size(); }
  const Alphabet& alphabet() const { return spec.alphabet; }

  bool factor_clean(const Word& w) const { return graph.run(w) >= 0; }
  bool in_language(const Word& w) const;          // w in L_X
  bool in_shift(const EvPeriodicWord& w) const;   // w in X
  bool in_language(const ExtWord& w) const;       // Unit -> false, words as above

  // Run from an arbitrary state; -1 once dead.
  int step_from(int state, const Word& w) const;

  const FollowerLattice& lattice() const { return *lattice_; }

  ShiftAutomaton() = default;
  ShiftAutomaton(ShiftAutomaton&&) = default;
  ShiftAutomaton& operator=(ShiftAutomaton&&) = default;

 private:
  std::shared_ptr<const FollowerLattice> lattice_;
  friend ShiftAutomaton compile(const SubshiftSpec&);
};

// Compile a presentation into the factor-avoidance automaton.
// Throws std::invalid_argument on an empty alphabet or malformed pattern.
ShiftAutomaton compile(const SubshiftSpec& spec);

// Product in the extended semigroup: Zero absorbs, Unit is neutral, and two
// words multiply to their concatenation when that stays in the language.
ExtWord sx_mul(const ShiftAutomaton& aut, const ExtWord& x, const ExtWord& y);

// All of the language up to max_len, in length-lex order.
std::vector<Word> enumerate_language(const ShiftAutomaton& aut, int max_len);
std::vector<long long> language_counts(const ShiftAutomaton& aut, int max_len);

// Anchored acceptor for the words a pattern denotes, restricted to the
// language.  Backs set expressions in reports and tests.
Dfa pattern_word_set(const ShiftAutomaton& aut, const Pattern& p);
// Same, not intersected with the language.
Dfa pattern_word_set_raw(int alphabet_size, const Pattern& p);

}  // namespace subshift

#endif
