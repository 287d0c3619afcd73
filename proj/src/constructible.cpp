#include "subshift/constructible.hpp"

#include <algorithm>
#include <stdexcept>

namespace subshift {

namespace {

void require_same(const RegularSet& a, const RegularSet& b) {
  if (a.aut != b.aut) throw std::invalid_argument("sets over different automata");
}

RegularSet wrap(const ShiftAutomaton& aut, Dfa d) {
  RegularSet out;
  out.aut = &aut;
  out.dfa = trim(std::move(d));
  out.card = classify(out.dfa);
  return out;
}

}  // namespace

RegularSet make_regular(const ShiftAutomaton& aut, Dfa raw) {
  return wrap(aut, product(std::move(raw), aut.lang, BoolOp::And));
}

RegularSet regular_from_words(const ShiftAutomaton& aut, const std::vector<Word>& words) {
  // Trie acceptor; fine for the small explicit sets that reach this path.
  Dfa d;
  d.nsym = aut.alphabet_size();
  d.start = d.add_state(false);
  for (const Word& w : words) {
    int s = d.start;
    for (Symbol a : w) {
      if (d.next[s][a] < 0) d.next[s][a] = d.add_state(false);
      s = d.next[s][a];
    }
    d.accept[s] = 1;
  }
  return make_regular(aut, std::move(d));
}

RegularSet whole_language(const ShiftAutomaton& aut) {
  return wrap(aut, aut.lang);
}

RegularSet rs_intersect(const RegularSet& a, const RegularSet& b) {
  require_same(a, b);
  return wrap(*a.aut, product(a.dfa, b.dfa, BoolOp::And));
}

RegularSet rs_union(const RegularSet& a, const RegularSet& b) {
  require_same(a, b);
  return wrap(*a.aut, product(a.dfa, b.dfa, BoolOp::Or));
}

RegularSet rs_diff(const RegularSet& a, const RegularSet& b) {
  require_same(a, b);
  return wrap(*a.aut, product(a.dfa, b.dfa, BoolOp::Diff));
}

RegularSet rs_symdiff(const RegularSet& a, const RegularSet& b) {
  require_same(a, b);
  return wrap(*a.aut, product(a.dfa, b.dfa, BoolOp::SymDiff));
}

RegularSet rs_complement(const RegularSet& a) {
  return wrap(*a.aut, product(a.aut->lang, a.dfa, BoolOp::Diff));
}

bool rs_equal(const RegularSet& a, const RegularSet& b) {
  require_same(a, b);
  return dfa_equivalent(a.dfa, b.dfa);
}

bool rs_subset(const RegularSet& a, const RegularSet& b) {
  require_same(a, b);
  return dfa_subset(a.dfa, b.dfa);
}

WordSetLambda normalize_lambda(WordSetLambda lambda) {
  for (const auto& t : lambda)
    if (t.is_zero()) throw std::invalid_argument("zero not allowed in a word set");
  std::sort(lambda.begin(), lambda.end(), extword_less);
  lambda.erase(std::unique(lambda.begin(), lambda.end()), lambda.end());
  return lambda;
}

int lattice_class_of(const ShiftAutomaton& aut, const WordSetLambda& lambda) {
  const auto& lat = aut.lattice();
  std::vector<int> states;
  for (const auto& t : lambda) {
    if (t.is_zero()) throw std::invalid_argument("zero not allowed in a word set");
    if (t.is_unit()) {
      states.push_back(aut.graph.start);
    } else {
      int q = aut.graph.run(t.letters());
      if (q < 0 || !aut.live[q]) return lat.empty_elem;
      states.push_back(q);
    }
  }
  return lat.elem_of_states(states);
}

RegularSet follower(const ShiftAutomaton& aut, const ExtWord& t) {
  if (t.is_zero()) throw std::invalid_argument("follower of zero");
  return f_lambda(aut, {t});
}

RegularSet f_lambda(const ShiftAutomaton& aut, const WordSetLambda& lambda) {
  if (lambda.empty()) throw std::invalid_argument("empty Lambda");
  int id = lattice_class_of(aut, lambda);
  RegularSet out;
  out.aut = &aut;
  out.dfa = aut.lattice().at(id).lang;
  out.card = aut.lattice().at(id).card;
  return out;
}

RegularSet f_lambda_gamma(const ShiftAutomaton& aut, const WordSetLambda& lambda,
                          const WordSetLambda& gamma) {
  RegularSet acc = f_lambda(aut, lambda);
  for (const auto& r : gamma) {
    if (r.is_zero()) throw std::invalid_argument("zero not allowed in Gamma");
    acc = rs_diff(acc, follower(aut, r));
  }
  return acc;
}

namespace {

// Acceptor of w . L for an existing acceptor of L.
Dfa prepend_word(const Dfa& tail, const Word& w) {
  if (w.empty()) return tail;
  Dfa out = tail;
  std::vector<int> chain;
  for (size_t i = 0; i < w.size(); ++i) chain.push_back(out.add_state(false));
  for (size_t i = 0; i + 1 < w.size(); ++i) out.next[chain[i]][w[i]] = chain[i + 1];
  out.next[chain.back()][w.back()] = tail.start;
  out.start = chain[0];
  return out;
}

}  // namespace

RegularSet e_set(const ShiftAutomaton& aut, const Word& mu) {
  if (!aut.in_language(mu)) throw std::invalid_argument("word outside the language");
  RegularSet f = follower(aut, ExtWord::word(mu));
  return wrap(aut, prepend_word(f.dfa, mu));
}

RegularSet shifted_follower(const ShiftAutomaton& aut, const ExtWord& u, int lattice_elem) {
  const auto& elem = aut.lattice().at(lattice_elem);
  if (u.is_unit()) {
    RegularSet out;
    out.aut = &aut;
    out.dfa = elem.lang;
    out.card = elem.card;
    return out;
  }
  return wrap(aut, prepend_word(elem.lang, u.letters()));
}

ConstructibleSet make_constructible(const ShiftAutomaton& aut, const ExtWord& u,
                                    const WordSetLambda& lambda_in) {
  WordSetLambda lambda = normalize_lambda(lambda_in);
  if (u.is_zero()) throw std::invalid_argument("u must be the unit or a word");
  if (std::find(lambda.begin(), lambda.end(), u) == lambda.end())
    throw std::invalid_argument("u must be a member of Lambda");
  bool has_word = false;
  for (const auto& t : lambda) has_word = has_word || t.is_word();
  if (!has_word) throw std::invalid_argument("Lambda consists of the unit only");

  ConstructibleSet out;
  out.u = u;
  out.lambda = std::move(lambda);
  out.f_class = lattice_class_of(aut, out.lambda);
  out.set = shifted_follower(aut, u, out.f_class);
  out.empty = out.set.card.kind == Card::Empty;
  return out;
}

std::pair<RegularSet, RegularSet> interior_boundary_of(const RegularSet& x) {
  // Interior keeps the accepting states with an accepting one-letter successor.
  Dfa inter = x.dfa;
  for (int s = 0; s < inter.size(); ++s) {
    if (!x.dfa.accept[s]) continue;
    bool extendable = false;
    for (int a = 0; a < inter.nsym && !extendable; ++a) {
      int t = x.dfa.next[s][a];
      extendable = t >= 0 && x.dfa.accept[t];
    }
    inter.accept[s] = extendable ? 1 : 0;
  }
  RegularSet interior;
  interior.aut = x.aut;
  interior.dfa = trim(inter);
  interior.card = classify(interior.dfa);
  RegularSet boundary = rs_diff(x, interior);
  return {std::move(interior), std::move(boundary)};
}

std::pair<RegularSet, RegularSet> interior_boundary(const ConstructibleSet& x) {
  return interior_boundary_of(x.set);
}

}  // namespace subshift
