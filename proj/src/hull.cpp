#include "subshift/hull.hpp"

#include <algorithm>
#include <stdexcept>

namespace subshift {

namespace {

// ext . w, zero-propagating.
ExtWord ext_concat(const ShiftAutomaton& aut, const ExtWord& t, const Word& w) {
  if (w.empty()) return t;
  if (t.is_zero()) return ExtWord::zero();
  if (t.is_unit()) return aut.in_language(w) ? ExtWord::word(w) : ExtWord::zero();
  Word joined = t.letters();
  joined.insert(joined.end(), w.begin(), w.end());
  return aut.in_language(joined) ? ExtWord::word(joined) : ExtWord::zero();
}

// Strict or equal prefix test on extended words; the unit prefixes everything.
bool ext_prefix(const ExtWord& p, const ExtWord& w, Word* rest) {
  if (p.is_unit()) {
    if (rest) *rest = w.is_word() ? w.letters() : Word{};
    return true;
  }
  if (!w.is_word()) return false;
  if (!is_prefix(p.letters(), w.letters())) return false;
  if (rest) rest->assign(w.letters().begin() + p.letters().size(), w.letters().end());
  return true;
}

}  // namespace

HullElement HullElement::zero(const ShiftAutomaton& aut) {
  HullElement e;
  e.aut_ = &aut;
  e.zero_ = true;
  return e;
}

HullElement HullElement::identity(const ShiftAutomaton& aut) {
  HullElement e;
  e.aut_ = &aut;
  e.zero_ = false;
  e.u_ = ExtWord::unit();
  e.v_ = ExtWord::unit();
  e.lambda_ = {ExtWord::unit()};
  e.f_class_ = aut.lattice().full_elem;
  return e;
}

HullElement HullElement::make(const ShiftAutomaton& aut, const ExtWord& u,
                              const WordSetLambda& lambda_in, const ExtWord& v) {
  if (u.is_zero() || v.is_zero()) return zero(aut);
  WordSetLambda lambda = normalize_lambda(lambda_in);
  auto member = [&](const ExtWord& x) {
    return std::find(lambda.begin(), lambda.end(), x) != lambda.end();
  };
  if (!member(u) || !member(v)) throw std::invalid_argument("u and v must belong to Lambda");
  int cls = lattice_class_of(aut, lambda);
  if (aut.lattice().at(cls).card.kind == Card::Empty) return zero(aut);
  HullElement e;
  e.aut_ = &aut;
  e.zero_ = false;
  e.u_ = u;
  e.v_ = v;
  e.lambda_ = std::move(lambda);
  e.f_class_ = cls;
  return e;
}

namespace {

RegularSet empty_set(const ShiftAutomaton& aut) {
  RegularSet out;
  out.aut = &aut;
  out.dfa.nsym = aut.alphabet_size();
  out.dfa.start = out.dfa.add_state(false);
  out.card.kind = Card::Empty;
  return out;
}

}  // namespace

RegularSet HullElement::domain() const {
  if (zero_) return empty_set(*aut_);
  return shifted_follower(*aut_, v_, f_class_);
}

RegularSet HullElement::range() const {
  if (zero_) return empty_set(*aut_);
  return shifted_follower(*aut_, u_, f_class_);
}

HullElement theta(const ShiftAutomaton& aut, const Word& mu) {
  if (!aut.in_language(mu)) throw std::invalid_argument("word outside the language");
  return HullElement::make(aut, ExtWord::word(mu), {ExtWord::unit(), ExtWord::word(mu)},
                           ExtWord::unit());
}

HullElement f_idempotent(const ShiftAutomaton& aut, const WordSetLambda& lambda_in) {
  WordSetLambda lambda = normalize_lambda(lambda_in);
  if (std::find(lambda.begin(), lambda.end(), ExtWord::unit()) == lambda.end())
    lambda.push_back(ExtWord::unit());
  return HullElement::make(aut, ExtWord::unit(), lambda, ExtWord::unit());
}

ExtWord apply_word(const HullElement& e, const Word& w) {
  if (e.is_zero()) return ExtWord::zero();
  const auto& aut = e.automaton();
  Word s;
  if (!ext_prefix(e.v(), ExtWord::word(w), &s)) return ExtWord::zero();
  if (s.empty()) return ExtWord::zero();  // the follower part is a genuine word
  if (!aut.lattice().at(e.f_class()).lang.accepts(s)) return ExtWord::zero();
  return ext_concat(aut, e.u(), s);
}

std::optional<EvPeriodicWord> apply_point(const HullElement& e, const EvPeriodicWord& w) {
  if (e.is_zero()) return std::nullopt;
  const auto& aut = e.automaton();
  int vn = e.v().is_word() ? e.v().length() : 0;
  if (vn > 0 && w.prefix(vn) != e.v().letters()) return std::nullopt;
  EvPeriodicWord eta = w.shifted(vn);
  for (const auto& t : e.lambda()) {
    if (t.is_unit()) continue;
    EvPeriodicWord t_eta = eta;
    const Word& tw = t.letters();
    for (auto it = tw.rbegin(); it != tw.rend(); ++it) t_eta = t_eta.prepend(*it);
    if (!aut.in_shift(t_eta)) return std::nullopt;
  }
  EvPeriodicWord out = eta;
  if (e.u().is_word()) {
    const Word& uw = e.u().letters();
    for (auto it = uw.rbegin(); it != uw.rend(); ++it) out = out.prepend(*it);
  }
  return out;
}

HullElement mul(const HullElement& a, const HullElement& b) {
  if (&a.automaton() != &b.automaton()) throw std::invalid_argument("automaton mismatch");
  const auto& aut = a.automaton();
  if (a.is_zero() || b.is_zero()) return HullElement::zero(aut);

  // Case split on how v1 and u2 compare as prefixes.
  Word y;
  if (ext_prefix(a.v(), b.u(), &y)) {
    // u2 = v1 y: new element theta_{u1 y} f_{Lambda1 y  union  Lambda2} theta_{v2}^-1.
    ExtWord new_u = ext_concat(aut, a.u(), y);
    if (new_u.is_zero()) return HullElement::zero(aut);
    WordSetLambda lam;
    for (const auto& t : a.lambda()) {
      ExtWord ty = ext_concat(aut, t, y);
      if (ty.is_zero()) return HullElement::zero(aut);
      lam.push_back(ty);
    }
    for (const auto& t : b.lambda()) lam.push_back(t);
    return HullElement::make(aut, new_u, lam, b.v());
  }
  Word x;
  if (ext_prefix(b.u(), a.v(), &x)) {
    // v1 = u2 x with x nonempty: theta_{u1} f_{Lambda1 union Lambda2 x} theta_{v2 x}^-1.
    ExtWord new_v = ext_concat(aut, b.v(), x);
    if (new_v.is_zero()) return HullElement::zero(aut);
    WordSetLambda lam;
    for (const auto& t : a.lambda()) lam.push_back(t);
    for (const auto& t : b.lambda()) {
      ExtWord tx = ext_concat(aut, t, x);
      if (tx.is_zero()) return HullElement::zero(aut);
      lam.push_back(tx);
    }
    return HullElement::make(aut, a.u(), lam, new_v);
  }
  return HullElement::zero(aut);
}

HullElement invert(const HullElement& a) {
  if (a.is_zero()) return a;
  return HullElement::make(a.automaton(), a.v(), a.lambda(), a.u());
}

bool equals(const HullElement& a, const HullElement& b) {
  if (&a.automaton() != &b.automaton()) throw std::invalid_argument("automaton mismatch");
  if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
  // Uniqueness of the normal form: u, v and the follower language decide.
  return a.u() == b.u() && a.v() == b.v() && a.f_class() == b.f_class();
}

bool leq(const HullElement& a, const HullElement& b) {
  if (a.is_zero()) return true;
  return equals(a, mul(b, mul(invert(a), a)));
}

std::optional<FreeGroupWord> d_map(const HullElement& a) {
  if (a.is_zero()) return std::nullopt;
  FreeGroupWord u = a.u().is_word() ? FreeGroupWord::from_positive(a.u().letters())
                                    : FreeGroupWord();
  FreeGroupWord v = a.v().is_word() ? FreeGroupWord::from_positive(a.v().letters())
                                    : FreeGroupWord();
  return u.times(v.inverse());
}

}  // namespace subshift
