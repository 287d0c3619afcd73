#include "subshift/strings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

namespace subshift {

StringPoint StringPoint::of(const ShiftAutomaton& aut, const Word& w) {
  if (!aut.in_language(w)) throw std::invalid_argument("inadmissible word");
  StringPoint s;
  s.finite = true;
  s.fin = w;
  return s;
}

StringPoint StringPoint::of(const ShiftAutomaton& aut, const EvPeriodicWord& w) {
  if (!aut.in_shift(w)) throw std::invalid_argument("inadmissible word");
  StringPoint s;
  s.finite = false;
  s.inf = w;
  return s;
}

StringClass classify_string(const StringPoint& s) {
  StringClass c;
  c.open = !s.finite;
  c.maximal = !s.finite;
  c.bounded = s.finite;
  return c;
}

Character Character::of_string(StringPoint s) {
  Character c;
  c.kind = s.finite ? Kind::FinString : Kind::InfString;
  c.sp = std::move(s);
  return c;
}

Character Character::principal_ultra(const ShiftAutomaton& aut, ConstructibleSet y) {
  if (y.set.card.kind != Card::Finite || y.set.card.words.empty())
    throw std::invalid_argument("principal ultrafilter needs a nonempty finite set");
  // Minimality: no nonempty constructible set sits strictly inside.
  if (find_constructible_inside(aut, y.set, &y.set.dfa))
    throw std::invalid_argument("set is not minimal among nonempty constructible sets");
  Character c;
  c.kind = Kind::PrincipalUltra;
  c.base = std::move(y);
  return c;
}

namespace {

// Completed-run state sequence over prefixes, -1 once outside.
int completed_step(const Dfa& d, int s, Symbol a) {
  return s < 0 ? -1 : d.next[s][a];
}

}  // namespace

LassoStats lasso_membership(const Dfa& set, const EvPeriodicWord& w) {
  int s = set.start;
  for (Symbol a : w.preperiod()) s = completed_step(set, s, a);
  // Boundary states at period multiples eventually cycle.
  std::map<int, int> seen;  // state -> step index
  std::vector<int> boundary{s};
  seen[s] = 0;
  int cycle_from;
  for (;;) {
    int t = boundary.back();
    for (Symbol a : w.period()) t = completed_step(set, t, a);
    auto it = seen.find(t);
    if (it != seen.end()) {
      cycle_from = it->second;
      break;
    }
    seen[t] = static_cast<int>(boundary.size());
    boundary.push_back(t);
  }
  // Scan acceptance along one pass of the cycle, letter by letter.
  LassoStats stats;
  bool all_in = true, any_in = false;
  for (size_t bi = cycle_from; bi < boundary.size(); ++bi) {
    int t = boundary[bi];
    for (Symbol a : w.period()) {
      t = completed_step(set, t, a);
      bool in = t >= 0 && set.accept[t];
      all_in = all_in && in;
      any_in = any_in || in;
    }
  }
  stats.cofinitely_in = all_in;
  stats.infinitely_often_in = any_in;
  return stats;
}

int eval_prefix_criterion(const ShiftAutomaton& aut, const EvPeriodicWord& w,
                          const ConstructibleSet& x) {
  int un = x.u.is_word() ? x.u.length() : 0;
  if (un > 0 && w.prefix(un) != x.u.letters()) return 0;
  EvPeriodicWord eta = w.shifted(un);
  for (const auto& t : x.lambda) {
    if (t.is_unit()) continue;
    EvPeriodicWord t_eta = eta;
    const Word& tw = t.letters();
    for (auto it = tw.rbegin(); it != tw.rend(); ++it) t_eta = t_eta.prepend(*it);
    if (!aut.in_shift(t_eta)) return 0;
  }
  return 1;
}

int eval_epsilon_criterion(const ShiftAutomaton& aut, const EvPeriodicWord& w,
                           const ConstructibleSet& x) {
  // sigma meets E_u iff u is a proper prefix; containment in u F_Lambda asks
  // every longer prefix to split as u s with s in F_Lambda.
  int un = x.u.is_word() ? x.u.length() : 0;
  if (un > 0 && w.prefix(un) != x.u.letters()) return 0;
  const Dfa& f = aut.lattice().at(x.f_class).lang;
  EvPeriodicWord eta = w.shifted(un);
  // All prefixes of eta must be accepted by F_Lambda; step letter by letter
  // with cycle detection on (period phase, state).
  int s = f.start;
  size_t pre = eta.preperiod().size(), per = eta.period().size();
  for (size_t i = 0; i < pre; ++i) {
    s = completed_step(f, s, eta.preperiod()[i]);
    if (s < 0 || !f.accept[s]) return 0;
  }
  std::map<std::pair<size_t, int>, bool> visited;
  size_t phase = 0;
  for (;;) {
    if (visited.count({phase, s})) break;
    visited[{phase, s}] = true;
    s = completed_step(f, s, eta.period()[phase]);
    if (s < 0 || !f.accept[s]) return 0;
    phase = (phase + 1) % per;
  }
  return 1;
}

int eval_finiteness_criterion(const ShiftAutomaton& aut, const EvPeriodicWord& w,
                              const ConstructibleSet& x) {
  (void)aut;
  LassoStats st = lasso_membership(x.set.dfa, w);
  // For an unbounded string exactly one of the two alternatives holds.
  if (st.cofinitely_in) return 1;
  if (!st.infinitely_often_in) return 0;
  throw std::logic_error("prefix chain split into two infinite parts");
}

int char_eval(const ShiftAutomaton& aut, const Character& c, const ConstructibleSet& x) {
  switch (c.kind) {
    case Character::Kind::InfString:
      return eval_prefix_criterion(aut, *c.sp.inf, x);
    case Character::Kind::FinString: {
      const Word& w = c.sp.fin;
      int un = x.u.is_word() ? x.u.length() : 0;
      if (static_cast<int>(w.size()) <= un) return 0;  // sigma misses E_u
      if (un > 0 && !is_prefix(x.u.letters(), w)) return 0;
      const Dfa& f = aut.lattice().at(x.f_class).lang;
      // Every prefix of w extending u must land in u F_Lambda.
      int s = f.start;
      for (size_t i = un; i < w.size(); ++i) {
        s = completed_step(f, s, w[i]);
        if (s < 0 || !f.accept[s]) return 0;
      }
      return 1;
    }
    case Character::Kind::PrincipalUltra:
      return rs_subset(c.base->set, x.set) ? 1 : 0;
  }
  return 0;
}

EssWitnessReport ess_membership_witness(const ShiftAutomaton& aut, const Character& c,
                                        const ConstructibleSet& x,
                                        const std::vector<ConstructibleSet>& ys) {
  RegularSet uni = ys.empty() ? rs_diff(x.set, x.set) : ys.front().set;
  for (size_t i = 1; i < ys.size(); ++i) uni = rs_union(uni, ys[i].set);
  RegularSet sym = rs_symdiff(x.set, uni);
  if (sym.card.kind == Card::Infinite)
    throw std::invalid_argument("family rejected: symmetric difference is infinite");

  EssWitnessReport rep;
  rep.phi_x = char_eval(aut, c, x);
  rep.join_phi_y = 0;
  for (const auto& y : ys) rep.join_phi_y |= char_eval(aut, c, y);
  rep.agree = rep.phi_x == rep.join_phi_y;
  if (c.kind == Character::Kind::InfString) {
    int fin = eval_finiteness_criterion(aut, *c.sp.inf, x);
    if (fin != rep.phi_x) throw std::logic_error("criteria disagree on the same set");
    rep.finiteness_recheck = fin;
  }
  return rep;
}

GroundReport ground_report(const ShiftAutomaton& aut) {
  const auto& lat = aut.lattice();
  GroundReport rep;
  rep.holds = true;
  for (int id = 0; id < lat.size(); ++id) {
    const auto& e = lat.at(id);
    if (!e.word_rep) continue;  // needs a presentation meeting the semigroup
    if (e.card.kind == Card::Finite && !e.card.words.empty()) {
      rep.holds = false;
      rep.witness_lambda = e.rep;
      rep.witness_words = e.card.words;
      return rep;
    }
  }
  return rep;
}

std::optional<ConstructibleSet> find_constructible_inside(
    const ShiftAutomaton& aut, const RegularSet& container, const Dfa* not_equal_to) {
  const auto& lat = aut.lattice();
  const Dfa& g = aut.graph;
  const Dfa& d = container.dfa;

  // Reachable (automaton state, container state) pairs along surviving runs
  // that stay inside live prefixes; BFS by length and symbol keeps the first
  // witness length-lex minimal.
  std::map<std::pair<int, int>, Word> seen;
  std::deque<std::pair<int, int>> queue;
  auto push = [&](int q, int dd, Word w) {
    auto key = std::make_pair(q, dd);
    if (seen.count(key)) return;
    seen.emplace(key, std::move(w));
    queue.push_back(key);
  };
  push(g.start, d.start, {});

  // Checks whether every word of cls read from container-state d0 is accepted.
  auto contained_from = [&](const Dfa& cls, int d0) {
    std::map<std::pair<int, int>, char> vis;
    std::deque<std::pair<int, int>> q2{{cls.start, d0}};
    vis[{cls.start, d0}] = 1;
    while (!q2.empty()) {
      auto [cs, ds] = q2.front();
      q2.pop_front();
      if (cls.accept[cs] && (ds < 0 || !d.accept[ds])) return false;
      for (int a = 0; a < cls.nsym; ++a) {
        int cn = cls.next[cs][a];
        if (cn < 0) continue;  // outside cls, irrelevant
        int dn = ds < 0 ? -1 : d.next[ds][a];
        if (!vis.count({cn, dn})) {
          vis[{cn, dn}] = 1;
          q2.emplace_back(cn, dn);
        }
      }
    }
    return true;
  };

  while (!queue.empty()) {
    auto [q, dd] = queue.front();
    queue.pop_front();
    Word w = seen.at({q, dd});
    bool at_unit = w.empty();
    int q_class_elem = lat.elem_of_states({q});

    for (int id = 0; id < lat.size(); ++id) {
      const auto& e = lat.at(id);
      if (e.card.kind == Card::Empty) continue;
      if (lat.meet(id, q_class_elem) != id) continue;  // need F inside F_q
      if (at_unit && !e.word_rep) continue;            // Lambda must meet the semigroup
      if (dd < 0) continue;
      if (!contained_from(e.lang, dd)) continue;
      ExtWord u = at_unit ? ExtWord::unit() : ExtWord::word(w);
      WordSetLambda lambda = e.rep;
      lambda.push_back(u);
      ConstructibleSet z = make_constructible(aut, u, lambda);
      if (z.empty) continue;
      if (not_equal_to && dfa_equivalent(z.set.dfa, *not_equal_to)) continue;
      return z;
    }

    for (int a = 0; a < g.nsym; ++a) {
      int qn = g.next[q][a];
      if (qn < 0 || !aut.live[qn]) continue;
      int dn = dd < 0 ? -1 : d.next[dd][a];
      if (dn < 0) continue;  // nothing below this prefix stays inside
      Word w2 = w;
      w2.push_back(a);
      push(qn, dn, std::move(w2));
    }
  }
  return std::nullopt;
}

}  // namespace subshift
