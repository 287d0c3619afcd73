#ifndef SUBSHIFT_STRINGS_HPP
#define SUBSHIFT_STRINGS_HPP

#include <optional>
#include <string>
#include <vector>

#include "subshift/constructible.hpp"

namespace subshift {

/// The string of an admissible word: the set of all its nonempty prefixes,
/// represented by the word itself (finite or eventually periodic).
struct StringPoint {
  bool finite = true;
  Word fin;
  std::optional<EvPeriodicWord> inf;

  static StringPoint of(const ShiftAutomaton& aut, const Word& w);
  static StringPoint of(const ShiftAutomaton& aut, const EvPeriodicWord& w);
};

struct StringClass {
  bool open = false;
  bool maximal = false;
  bool bounded = true;
};

// Open and maximal exactly for infinite words; bounded exactly for finite ones.
StringClass classify_string(const StringPoint& s);

/// A character on the semilattice of constructible sets: either evaluation
/// along a string, or the principal ultrafilter of a minimal finite set.
struct Character {
  enum class Kind { FinString, InfString, PrincipalUltra };
  Kind kind = Kind::FinString;
  StringPoint sp;
  std::optional<ConstructibleSet> base;  // PrincipalUltra only

  static Character of_string(StringPoint s);
  // Validates that the set is nonempty, finite and minimal among nonempty
  // constructible sets; throws otherwise.
  static Character principal_ultra(const ShiftAutomaton& aut, ConstructibleSet y);
};

int char_eval(const ShiftAutomaton& aut, const Character& c, const ConstructibleSet& x);

// The three mutually checking criteria for infinite strings.
int eval_prefix_criterion(const ShiftAutomaton& aut, const EvPeriodicWord& w,
                          const ConstructibleSet& x);
int eval_epsilon_criterion(const ShiftAutomaton& aut, const EvPeriodicWord& w,
                           const ConstructibleSet& x);
int eval_finiteness_criterion(const ShiftAutomaton& aut, const EvPeriodicWord& w,
                              const ConstructibleSet& x);

/// How the prefix chain of an eventually periodic word eventually sits
/// inside a regular set.
struct LassoStats {
  bool cofinitely_in = false;       // all long enough prefixes belong
  bool infinitely_often_in = false; // infinitely many prefixes belong
};
LassoStats lasso_membership(const Dfa& set, const EvPeriodicWord& w);

struct EssWitnessReport {
  int phi_x = 0;
  int join_phi_y = 0;
  bool agree = false;
  std::optional<int> finiteness_recheck;  // infinite strings only
};

// Requires the symmetric difference of x and the union of ys to be finite;
// throws std::invalid_argument otherwise (rejected input, not a verdict).
EssWitnessReport ess_membership_witness(const ShiftAutomaton& aut, const Character& c,
                                        const ConstructibleSet& x,
                                        const std::vector<ConstructibleSet>& ys);

struct GroundReport {
  bool holds = false;  // every nonempty follower-set meet is infinite
  // Witness when it fails: a finite nonempty constructible set.
  WordSetLambda witness_lambda;
  std::vector<Word> witness_words;
};

GroundReport ground_report(const ShiftAutomaton& aut);

// Exact search for a nonempty constructible subset of a regular set,
// optionally different from a given language.  Returns the first witness in
// a fixed deterministic order, or nullopt when none exists.
std::optional<ConstructibleSet> find_constructible_inside(
    const ShiftAutomaton& aut, const RegularSet& container,
    const Dfa* not_equal_to = nullptr);

}  // namespace subshift

#endif
