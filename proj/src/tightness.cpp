#include "subshift/tightness.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace subshift {

RegularSet defect_set(const RegularSet& x, const std::vector<RegularSet>& covers) {
  RegularSet acc = x;
  for (const auto& y : covers) {
    if (!rs_subset(y, x)) throw std::invalid_argument("cover member not contained in the set");
    acc = rs_diff(acc, y);
  }
  return acc;
}

RegularSet defect_set(const ConstructibleSet& x, const std::vector<ConstructibleSet>& covers) {
  std::vector<RegularSet> sets;
  sets.reserve(covers.size());
  for (const auto& y : covers) sets.push_back(y.set);
  return defect_set(x.set, sets);
}

CoverVerdict cover_verdict(const ConstructibleSet& x,
                           const std::vector<ConstructibleSet>& candidates, int bound) {
  for (const auto& y : candidates)
    if (!rs_subset(y.set, x.set))
      throw std::invalid_argument("cover candidate not contained in the set");
  RegularSet defect = defect_set(x, candidates);
  CoverVerdict out;
  out.bound = bound;
  const ShiftAutomaton& aut = *x.set.aut;
  auto witness = find_constructible_inside(aut, defect);
  if (witness) {
    out.kind = CoverVerdict::Kind::NotCovered;
    out.witness = std::move(witness);
  } else {
    out.kind = CoverVerdict::Kind::Covered;
  }
  return out;
}

HypothesesReport hypotheses_check(const ShiftAutomaton& aut, int maxlen) {
  HypothesesReport rep;
  rep.length_function_ok = true;  // word length: homogeneous, locally finite

  // Language minus the one-letter ranges leaves at most the alphabet.
  RegularSet leftover = whole_language(aut);
  for (Symbol a = 0; a < aut.alphabet_size(); ++a) {
    Word la{a};
    if (!aut.in_language(la)) continue;
    leftover = rs_diff(leftover, e_set(aut, la));
  }
  rep.letters_cover_ok = leftover.card.kind != Card::Infinite;
  if (leftover.card.kind == Card::Finite) rep.letters_leftover = leftover.card.words;

  // Boundary finiteness class by class; prefixing a word never changes the
  // boundary size, so the lattice classes decide it for every presentation.
  rep.boundaries_ok = true;
  const auto& lat = aut.lattice();
  for (int id = 0; id < lat.size() && rep.boundaries_ok; ++id) {
    const auto& e = lat.at(id);
    if (e.card.kind == Card::Empty) continue;
    if (!e.word_rep) continue;
    RegularSet cls;
    cls.aut = &aut;
    cls.dfa = e.lang;
    cls.card = e.card;
    auto [interior, boundary] = interior_boundary_of(cls);
    if (boundary.card.kind == Card::Infinite) {
      rep.boundaries_ok = false;
      rep.boundary_failure = BoundaryFailure{e.rep, boundary.card};
    }
  }
  (void)maxlen;
  rep.certified_essentially_tight =
      rep.length_function_ok && rep.letters_cover_ok && rep.boundaries_ok;
  return rep;
}

namespace {

// Searches for an eventually periodic word whose runs from every state of
// `alive_from` stay defined forever while each run in `dead_from` dies at a
// finite prefix.  The word is also required to be admissible.
std::optional<EvPeriodicWord> star_witness(const ShiftAutomaton& aut,
                                           const std::vector<int>& alive_from,
                                           const std::vector<int>& dead_from) {
  const Dfa& g = aut.graph;
  struct Node {
    std::vector<int> alive;  // image states, all must stay defined
    std::vector<int> dead;   // -1 once the run has died (the goal for each)
    bool operator<(const Node& o) const {
      if (alive != o.alive) return alive < o.alive;
      return dead < o.dead;
    }
  };
  Node start;
  start.alive.push_back(g.start);  // admissibility of the word itself
  for (int q : alive_from) start.alive.push_back(q);
  std::sort(start.alive.begin(), start.alive.end());
  start.alive.erase(std::unique(start.alive.begin(), start.alive.end()), start.alive.end());
  start.dead = dead_from;

  std::map<Node, std::pair<Node, Symbol>> parent;
  std::vector<Node> discovered;
  std::map<Node, int> index;
  std::deque<Node> queue{start};
  index[start] = 0;
  discovered.push_back(start);

  auto step = [&](const Node& n, Symbol a) -> std::optional<Node> {
    Node m;
    for (int q : n.alive) {
      int t = g.next[q][a];
      if (t < 0) return std::nullopt;
      m.alive.push_back(t);
    }
    std::sort(m.alive.begin(), m.alive.end());
    m.alive.erase(std::unique(m.alive.begin(), m.alive.end()), m.alive.end());
    for (int q : n.dead) m.dead.push_back(q < 0 ? -1 : g.next[q][a]);
    return m;
  };

  while (!queue.empty()) {
    Node n = queue.front();
    queue.pop_front();
    for (int a = 0; a < g.nsym; ++a) {
      auto m = step(n, a);
      if (!m) continue;
      if (!index.count(*m)) {
        index[*m] = static_cast<int>(discovered.size());
        discovered.push_back(*m);
        parent[*m] = {n, a};
        queue.push_back(*m);
      }
    }
  }

  auto all_dead = [](const Node& n) {
    return std::all_of(n.dead.begin(), n.dead.end(), [](int q) { return q < 0; });
  };

  // Death is absorbing, so the all-dead nodes form a closed subgraph.  An
  // infinite continuation exists exactly from the nodes of that subgraph
  // that reach a cycle inside it.
  int nn = static_cast<int>(discovered.size());
  std::vector<char> in_sub(nn, 0);
  for (int i = 0; i < nn; ++i) in_sub[i] = all_dead(discovered[i]);
  std::vector<std::vector<std::pair<int, int>>> succ(nn);  // (symbol, node)
  for (int i = 0; i < nn; ++i) {
    if (!in_sub[i]) continue;
    for (int a = 0; a < g.nsym; ++a) {
      auto m = step(discovered[i], a);
      if (!m) continue;
      succ[i].push_back({a, index.at(*m)});  // stays all-dead by absorption
    }
  }
  // A node is live-in-subgraph when it reaches a node lying on a cycle;
  // iterate "has a live successor" from the cyclic seeds.
  std::vector<char> on_cycle(nn, 0);
  {
    // Tarjan over the subgraph.
    std::vector<int> idx(nn, -1), low(nn, 0);
    std::vector<char> on_stack(nn, 0);
    std::vector<int> stck;
    int counter = 0;
    for (int root = 0; root < nn; ++root) {
      if (!in_sub[root] || idx[root] >= 0) continue;
      std::vector<std::pair<int, size_t>> call{{root, 0}};
      idx[root] = low[root] = counter++;
      stck.push_back(root);
      on_stack[root] = 1;
      while (!call.empty()) {
        auto& [v, ei] = call.back();
        if (ei < succ[v].size()) {
          int w = succ[v][ei++].second;
          if (idx[w] < 0) {
            idx[w] = low[w] = counter++;
            stck.push_back(w);
            on_stack[w] = 1;
            call.push_back({w, 0});
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], idx[w]);
          }
          continue;
        }
        if (low[v] == idx[v]) {
          std::vector<int> comp;
          for (;;) {
            int w = stck.back();
            stck.pop_back();
            on_stack[w] = 0;
            comp.push_back(w);
            if (w == v) break;
          }
          bool cyclic = comp.size() > 1;
          if (!cyclic)
            for (auto [a, t] : succ[v])
              if (t == v) cyclic = true;
          if (cyclic)
            for (int w : comp) on_cycle[w] = 1;
        }
        int done = v;
        call.pop_back();
        if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
      }
    }
  }
  std::vector<char> live_sub = on_cycle;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < nn; ++i) {
      if (!in_sub[i] || live_sub[i]) continue;
      for (auto [a, t] : succ[i])
        if (live_sub[t]) {
          live_sub[i] = 1;
          changed = true;
          break;
        }
    }
  }

  int target = -1;
  for (int i = 0; i < nn && target < 0; ++i)
    if (in_sub[i] && live_sub[i]) target = i;
  if (target < 0) return std::nullopt;

  Word preperiod;
  {
    Node cur = discovered[target];
    while (parent.count(cur)) {
      auto [p, a] = parent.at(cur);
      preperiod.push_back(a);
      cur = p;
    }
    std::reverse(preperiod.begin(), preperiod.end());
  }
  // Pump along live successors until a node repeats.
  std::map<int, int> pos;
  std::vector<Symbol> tail;
  int walk = target;
  int at = 0;
  while (!pos.count(walk)) {
    pos[walk] = at++;
    for (auto [a, t] : succ[walk])
      if (live_sub[t]) {
        tail.push_back(a);
        walk = t;
        break;
      }
  }
  int loop_from = pos.at(walk);
  for (int i = 0; i < loop_from; ++i) preperiod.push_back(tail[i]);
  Word period(tail.begin() + loop_from, tail.end());
  return EvPeriodicWord(preperiod, period);
}

}  // namespace

StarReport condition_star(const ShiftAutomaton& aut) {
  const auto& lat = aut.lattice();
  StarReport rep;
  if (lat.nclasses > 16) throw std::runtime_error("Gamma class space too large");

  std::vector<RegularSet> single(lat.nclasses);
  for (int c = 0; c < lat.nclasses; ++c) {
    single[c].aut = &aut;
    single[c].dfa = follower_dfa(aut.graph, aut.live, {lat.class_rep_state[c]});
    single[c].card = classify(single[c].dfa);
  }

  for (int id = 0; id < lat.size(); ++id) {
    const auto& e = lat.at(id);
    if (e.card.kind == Card::Empty) continue;
    std::vector<int> lam_states;
    for (int c : e.class_bits) lam_states.push_back(lat.class_rep_state[c]);
    if (lam_states.empty()) continue;

    RegularSet base;
    base.aut = &aut;
    base.dfa = e.lang;
    base.card = e.card;

    // A Gamma member whose follower misses F_Lambda changes neither the
    // premise nor the witness condition, so only meeting classes matter.
    std::vector<int> relevant;
    for (int c = 0; c < lat.nclasses; ++c)
      if (rs_intersect(base, single[c]).card.kind != Card::Empty) relevant.push_back(c);
    int m = static_cast<int>(relevant.size());

    // premise[mask] over subsets of the relevant classes; subsets precede
    // supersets numerically, so the incremental difference is available.
    std::vector<RegularSet> premise(1u << m);
    premise[0] = base;
    for (unsigned gmask = 0; gmask < (1u << m); ++gmask) {
      if (gmask != 0) {
        unsigned low = gmask & (gmask - 1);
        int bit = __builtin_ctz(gmask);
        premise[gmask] = rs_diff(premise[low], single[relevant[bit]]);
      }
      std::vector<int> gam_states;
      std::vector<ExtWord> gam_words;
      for (int i = 0; i < m; ++i)
        if (gmask & (1u << i)) {
          gam_states.push_back(lat.class_rep_state[relevant[i]]);
          gam_words.push_back(lat.class_rep_word[relevant[i]]);
        }
      StarClassReport cls;
      cls.lambda = e.rep;
      cls.gamma = gam_words;
      cls.premise = premise[gmask].card.kind;
      if (cls.premise != Card::Infinite) {
        cls.vacuous = true;
        rep.classes.push_back(std::move(cls));
        continue;
      }
      auto w = star_witness(aut, lam_states, gam_states);
      if (w) {
        cls.witness = *w;
      } else {
        cls.refuted = true;
        rep.holds = false;
      }
      rep.classes.push_back(std::move(cls));
    }
  }
  return rep;
}

FiniteDefect finite_universe_defect(const FiniteUniverseFamily& family,
                                    const FiniteUniverseSet& target,
                                    const std::vector<FiniteUniverseSet>& covers) {
  auto in_universe = [&](const FiniteUniverseSet& s) {
    for (int e : s.elems)
      if (e < 0 || e >= family.universe) return false;
    return true;
  };
  if (!in_universe(target)) throw std::invalid_argument("target outside the universe");
  std::set<int> d(target.elems.begin(), target.elems.end());
  bool covered_tail = false;
  for (const auto& y : covers) {
    if (!in_universe(y)) throw std::invalid_argument("cover member outside the universe");
    for (int e : y.elems) {
      if (!d.count(e) && !target.extends_beyond)
        throw std::invalid_argument("cover member not contained in the target");
      d.erase(e);
    }
    covered_tail = covered_tail || y.extends_beyond;
  }
  FiniteDefect out;
  out.elems.assign(d.begin(), d.end());
  out.extends_beyond = target.extends_beyond && !covered_tail;
  if (out.extends_beyond)
    out.card = Card::Infinite;
  else
    out.card = out.elems.empty() ? Card::Empty : Card::Finite;
  return out;
}

}  // namespace subshift
