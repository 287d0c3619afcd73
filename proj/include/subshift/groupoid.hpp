#ifndef SUBSHIFT_GROUPOID_HPP
#define SUBSHIFT_GROUPOID_HPP

#include <optional>
#include <string>
#include <vector>

#include "subshift/automaton.hpp"

namespace subshift {

/// Finite set of eventually periodic points of the shift, closed under the
/// shift map and under admissible one-letter prepends for `budget` rounds.
struct PointSample {
  const ShiftAutomaton* aut = nullptr;
  std::vector<EvPeriodicWord> points;  // sorted, canonical
  int budget = 0;

  bool contains(const EvPeriodicWord& p) const;
  int index_of(const EvPeriodicWord& p) const;  // -1 when absent
  int size() const { return static_cast<int>(points.size()); }
};

// Seeded from one shortest cycle word per cyclic automaton state (those
// periodic points always lie in the shift), or from every admissible point
// with preperiod and period up to the given lengths when both are
// nonnegative.  The seeds are then closed under shifts and `budget` rounds
// of prepends.
PointSample build_sample(const ShiftAutomaton& aut, int budget, int seed_pre = -1,
                         int seed_per = -1);

// Reduced words of length <= radius over the free group on the alphabet.
std::vector<FreeGroupWord> free_ball(int alphabet_size, int radius);

// The partial action: defined only for g = u v^-1 reduced with positive u, v;
// x must start with v and u.(x after v) must stay admissible.
std::optional<EvPeriodicWord> alpha_apply(const ShiftAutomaton& aut, const FreeGroupWord& g,
                                          const EvPeriodicWord& x);

struct PTGerm {
  EvPeriodicWord y;  // alpha_g(x)
  FreeGroupWord g;
  EvPeriodicWord x;
  bool operator==(const PTGerm& o) const { return y == o.y && g == o.g && x == o.x; }
};

struct DRGerm {
  EvPeriodicWord y;
  int k;  // m - n
  EvPeriodicWord x;
  int m, n;  // minimum representative: shift^m(y) = shift^n(x)
  bool operator==(const DRGerm& o) const {
    return y == o.y && k == o.k && x == o.x && m == o.m && n == o.n;
  }
};

// Both directions of the groupoid identification; conversion recomputes the
// minimum representative, inversion reads the positive parts off the points
// and checks they stay reduced.
DRGerm dr_convert(const ShiftAutomaton& aut, const PTGerm& germ);
PTGerm dr_invert(const ShiftAutomaton& aut, const DRGerm& germ);

std::optional<PTGerm> germ_compose(const ShiftAutomaton& aut, const PTGerm& g1, const PTGerm& g2);
std::optional<DRGerm> germ_compose(const ShiftAutomaton& aut, const DRGerm& g1, const DRGerm& g2);
PTGerm germ_inverse(const PTGerm& g);
DRGerm dr_inverse(const ShiftAutomaton& aut, const DRGerm& g);

// All partial-action germs over the sample within the given ball.
std::vector<PTGerm> enumerate_pt_germs(const ShiftAutomaton& aut, const PointSample& sample,
                                       int radius);

struct ActionReport {
  int sample_size = 0;
  int radius = 0;
  bool orthogonal = false;        // ranges of distinct letters are disjoint
  bool semi_saturated = false;    // reduced concatenations compose
  bool prefix_nesting = false;    // overlapping positive ranges nest by prefix
  bool power_decomposition = false;  // shift^n agrees with the unique n-prefix inverse
  long long checks = 0;
  std::string failure;
};

ActionReport action_report(const PointSample& sample, int radius);

}  // namespace subshift

#endif
