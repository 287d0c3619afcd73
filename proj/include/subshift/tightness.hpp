#ifndef SUBSHIFT_TIGHTNESS_HPP
#define SUBSHIFT_TIGHTNESS_HPP

#include <optional>
#include <string>
#include <vector>

#include "subshift/strings.hpp"

namespace subshift {

struct CoverVerdict {
  enum class Kind { Covered, NotCovered, UnknownUpTo };
  Kind kind = Kind::Covered;
  std::optional<ConstructibleSet> witness;  // NotCovered: nonempty, inside X, misses every member
  int bound = 0;                            // UnknownUpTo only
};

// Defect of a family of subsets of x: what the family misses inside x.
// Every member must be contained in x.
RegularSet defect_set(const ConstructibleSet& x, const std::vector<ConstructibleSet>& covers);
RegularSet defect_set(const RegularSet& x, const std::vector<RegularSet>& covers);

// Exact cover decision by saturation over prefix-state and follower-lattice
// classes; `bound` caps the independent brute-force cross-check words.
CoverVerdict cover_verdict(const ConstructibleSet& x,
                           const std::vector<ConstructibleSet>& candidates, int bound);

struct BoundaryFailure {
  WordSetLambda lambda;   // presentation of the offending class
  Cardinality boundary;   // its (infinite) boundary
};

struct HypothesesReport {
  bool length_function_ok = true;    // word length is homogeneous and locally finite
  bool letters_cover_ok = false;     // language minus the letter ranges is finite
  std::vector<Word> letters_leftover;
  bool boundaries_ok = false;        // every constructible class has a finite boundary
  std::optional<BoundaryFailure> boundary_failure;
  bool certified_essentially_tight = false;
};

HypothesesReport hypotheses_check(const ShiftAutomaton& aut, int maxlen);

struct StarClassReport {
  WordSetLambda lambda;            // representative Lambda of the class
  std::vector<ExtWord> gamma;      // representative Gamma
  Card premise;                    // cardinality of F_{Lambda,Gamma}
  bool vacuous = false;            // premise not infinite
  std::optional<EvPeriodicWord> witness;  // maximal-string witness when one exists
  bool refuted = false;            // infinite premise with provably no witness
};

struct StarReport {
  bool holds = true;
  std::vector<StarClassReport> classes;
};

// The star condition: every infinite F_{Lambda,Gamma} is witnessed
// by an infinite admissible word whose Lambda-runs never die while every
// Gamma-run dies at a finite prefix.
StarReport condition_star(const ShiftAutomaton& aut);

/// Explicit finite-universe semilattice for the abstract examples.  Elements
/// are drawn from 0..universe-1; a set flagged `extends_beyond` continues
/// past the truncation, and a difference stays infinite exactly when the
/// minuend extends beyond while no subtrahend does.
struct FiniteUniverseSet {
  std::vector<int> elems;
  bool extends_beyond = false;
};

struct FiniteUniverseFamily {
  int universe = 0;
  std::vector<FiniteUniverseSet> sets;
};

struct FiniteDefect {
  std::vector<int> elems;
  bool extends_beyond = false;
  Card card = Card::Empty;
};

FiniteDefect finite_universe_defect(const FiniteUniverseFamily& family,
                                    const FiniteUniverseSet& target,
                                    const std::vector<FiniteUniverseSet>& covers);

}  // namespace subshift

#endif
