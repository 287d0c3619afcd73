#ifndef SUBSHIFT_HULL_HPP
#define SUBSHIFT_HULL_HPP

#include <optional>

#include "subshift/constructible.hpp"

namespace subshift {

/// Element of the inverse hull in normal form theta_u f_Lambda theta_v^-1,
/// the partial bijection v.s -> u.s over s in F_Lambda, or zero.  Any
/// presentation whose follower set dies collapses to zero at construction.
/// The identity map on the language is admitted as u = v = unit with
/// Lambda = {unit}.
class HullElement {
 public:
  static HullElement zero(const ShiftAutomaton& aut);
  static HullElement identity(const ShiftAutomaton& aut);
  // Normal form; requires u, v in Lambda.
  static HullElement make(const ShiftAutomaton& aut, const ExtWord& u,
                          const WordSetLambda& lambda, const ExtWord& v);

  bool is_zero() const { return zero_; }
  bool is_idempotent() const { return !zero_ && u_ == v_; }
  const ExtWord& u() const { return u_; }
  const ExtWord& v() const { return v_; }
  const WordSetLambda& lambda() const { return lambda_; }
  int f_class() const { return f_class_; }
  const ShiftAutomaton& automaton() const { return *aut_; }

  RegularSet domain() const;  // v . F_Lambda
  RegularSet range() const;   // u . F_Lambda

 private:
  HullElement() = default;
  const ShiftAutomaton* aut_ = nullptr;
  bool zero_ = true;
  ExtWord u_, v_;
  WordSetLambda lambda_;
  int f_class_ = -1;
};

// Generator theta_mu: s -> mu.s with domain F_mu.  Requires mu in the language.
HullElement theta(const ShiftAutomaton& aut, const Word& mu);
// Idempotent f_Lambda: the identity on F_Lambda.
HullElement f_idempotent(const ShiftAutomaton& aut, const WordSetLambda& lambda);

// Partial-bijection application; Zero when w is outside the domain.
ExtWord apply_word(const HullElement& e, const Word& w);
// The same bijection on points of the shift.
std::optional<EvPeriodicWord> apply_point(const HullElement& e, const EvPeriodicWord& w);

HullElement mul(const HullElement& a, const HullElement& b);
HullElement invert(const HullElement& a);
bool equals(const HullElement& a, const HullElement& b);
// Natural partial order: a below b when a = b restricted to dom(a).
bool leq(const HullElement& a, const HullElement& b);

// Grading into the free group; nullopt marks zero.
std::optional<FreeGroupWord> d_map(const HullElement& a);

}  // namespace subshift

#endif
