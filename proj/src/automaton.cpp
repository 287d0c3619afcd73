#include "subshift/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "subshift/lattice.hpp"

namespace subshift {

namespace {

// Epsilon-NFA over the alphabet; state 0 is the root.  Accepting states are
// "pattern completed".
struct Nfa {
  int nsym;
  std::vector<std::vector<std::pair<Symbol, int>>> edges;
  std::vector<std::vector<int>> eps;
  std::vector<char> accept;

  explicit Nfa(int k) : nsym(k) { add(); }
  int add() {
    edges.emplace_back();
    eps.emplace_back();
    accept.push_back(0);
    return static_cast<int>(edges.size()) - 1;
  }
};

// Append one pattern as a chain hanging off the NFA root.
void add_pattern(Nfa& nfa, const Pattern& p) {
  int cur = 0;
  for (const auto& at : p) {
    switch (at.kind) {
      case PatternAtom::Kind::Lit: {
        int nx = nfa.add();
        nfa.edges[cur].push_back({at.sym, nx});
        cur = nx;
        break;
      }
      case PatternAtom::Kind::Plus: {
        int nx = nfa.add();
        nfa.edges[cur].push_back({at.sym, nx});
        nfa.edges[nx].push_back({at.sym, nx});
        cur = nx;
        break;
      }
      case PatternAtom::Kind::Star: {
        int nx = nfa.add();
        nfa.eps[cur].push_back(nx);
        nfa.edges[nx].push_back({at.sym, nx});
        cur = nx;
        break;
      }
      case PatternAtom::Kind::OneOf: {
        int nx = nfa.add();
        for (Symbol a : at.choices) nfa.edges[cur].push_back({a, nx});
        cur = nx;
        break;
      }
      case PatternAtom::Kind::AnySuffix: {
        // Trailing "anything": completion is already decided here.
        nfa.accept[cur] = 1;
        for (int a = 0; a < nfa.nsym; ++a) nfa.edges[cur].push_back({a, cur});
        break;
      }
    }
  }
  nfa.accept[cur] = 1;
}

std::vector<int> eps_closure(const Nfa& nfa, std::vector<int> states) {
  std::set<int> seen(states.begin(), states.end());
  std::deque<int> q(states.begin(), states.end());
  while (!q.empty()) {
    int s = q.front();
    q.pop_front();
    for (int t : nfa.eps[s])
      if (seen.insert(t).second) q.push_back(t);
  }
  return {seen.begin(), seen.end()};
}

bool any_accept(const Nfa& nfa, const std::vector<int>& states) {
  for (int s : states)
    if (nfa.accept[s]) return true;
  return false;
}

// Subset construction.  In factor mode the root loops on every symbol and a
// subset containing an accepting NFA state is a dead end (the word is dirty
// for good), so the result recognizes exactly the clean words.  In anchored
// mode acceptance is kept per subset and the result recognizes the denotation.
Dfa determinize(const Nfa& nfa, bool factor_mode) {
  Dfa out;
  out.nsym = nfa.nsym;
  std::map<std::vector<int>, int> ids;
  std::deque<std::vector<int>> q;
  auto get = [&](std::vector<int> subset) -> int {
    bool acc = any_accept(nfa, subset);
    if (factor_mode && acc) return -1;
    auto it = ids.find(subset);
    if (it != ids.end()) return it->second;
    int id = out.add_state(factor_mode ? false : acc);
    ids.emplace(subset, id);
    q.push_back(std::move(subset));
    return id;
  };
  int start = get(eps_closure(nfa, {0}));
  out.start = start;
  if (start < 0) {
    // Every word, including the empty one, is dirty: empty automaton.
    out = Dfa{};
    out.nsym = nfa.nsym;
    out.start = out.add_state(false);
    for (int a = 0; a < out.nsym; ++a) out.next[0][a] = -1;
    return out;
  }
  while (!q.empty()) {
    std::vector<int> subset = q.front();
    q.pop_front();
    int id = ids.at(subset);
    for (int a = 0; a < out.nsym; ++a) {
      std::vector<int> move;
      for (int s : subset)
        for (auto [sym, t] : nfa.edges[s])
          if (sym == a) move.push_back(t);
      std::sort(move.begin(), move.end());
      move.erase(std::unique(move.begin(), move.end()), move.end());
      out.next[id][a] = get(eps_closure(nfa, std::move(move)));
    }
  }
  return out;
}

// live[s]: some infinite run starts at s, i.e. a cycle is reachable.
std::vector<char> mark_live(const Dfa& d) {
  int n = d.size();
  // Tarjan SCC, iterative.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int next_index = 0, ncomp = 0;
  std::vector<char> comp_cyclic;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    std::vector<std::pair<int, int>> call{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [s, ai] = call.back();
      if (ai < d.nsym) {
        int t = d.next[s][ai++];
        if (t < 0) continue;
        if (index[t] < 0) {
          index[t] = low[t] = next_index++;
          stack.push_back(t);
          on_stack[t] = 1;
          call.emplace_back(t, 0);
        } else if (on_stack[t]) {
          low[s] = std::min(low[s], index[t]);
        }
        continue;
      }
      if (low[s] == index[s]) {
        int c = ncomp++;
        bool multi = false;
        int members = 0;
        for (;;) {
          int v = stack.back();
          stack.pop_back();
          on_stack[v] = 0;
          comp[v] = c;
          ++members;
          if (v == s) break;
        }
        multi = members > 1;
        bool self_loop = false;
        // Self loop check only needed for singleton components.
        if (!multi)
          for (int a = 0; a < d.nsym; ++a)
            if (d.next[s][a] == s) self_loop = true;
        comp_cyclic.push_back(multi || self_loop);
      }
      call.pop_back();
      if (!call.empty()) {
        int parent = call.back().first;
        low[parent] = std::min(low[parent], low[s]);
      }
    }
  }
  // Live = can reach a cyclic component.
  std::vector<char> live(n, 0);
  for (int s = 0; s < n; ++s)
    if (comp_cyclic[comp[s]]) live[s] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < n; ++s) {
      if (live[s]) continue;
      for (int a = 0; a < d.nsym; ++a) {
        int t = d.next[s][a];
        if (t >= 0 && live[t]) {
          live[s] = 1;
          changed = true;
          break;
        }
      }
    }
  }
  return live;
}

}  // namespace

ShiftAutomaton compile(const SubshiftSpec& spec) {
  if (spec.alphabet.size() == 0) throw std::invalid_argument("empty alphabet");
  for (const auto& p : spec.forbidden) validate_pattern(p, spec.alphabet.size());

  Nfa nfa(spec.alphabet.size());
  for (int a = 0; a < nfa.nsym; ++a) nfa.edges[0].push_back({a, 0});
  for (const auto& p : spec.forbidden) add_pattern(nfa, p);

  ShiftAutomaton aut;
  aut.spec = spec;
  aut.graph = trim(determinize(nfa, /*factor_mode=*/true));
  aut.live = mark_live(aut.graph);
  for (int s = 0; s < aut.graph.size(); ++s) aut.graph.accept[s] = aut.live[s];
  aut.lang = drop_epsilon(aut.graph);
  aut.lattice_ = std::make_shared<const FollowerLattice>(build_lattice(aut.graph, aut.live));
  return aut;
}

bool ShiftAutomaton::in_language(const Word& w) const {
  if (w.empty()) return false;
  for (Symbol a : w)
    if (a < 0 || a >= alphabet_size()) throw std::invalid_argument("foreign symbol");
  int s = graph.run(w);
  return s >= 0 && live[s];
}

bool ShiftAutomaton::in_shift(const EvPeriodicWord& w) const {
  int s = graph.run(w.preperiod());
  if (s < 0) return false;
  // Iterate the period until the boundary state repeats; the infinite run
  // exists exactly when no prefix dies before the cycle closes.
  std::vector<char> seen(graph.size(), 0);
  while (!seen[s]) {
    seen[s] = 1;
    s = step_from(s, w.period());
    if (s < 0) return false;
  }
  return true;
}

bool ShiftAutomaton::in_language(const ExtWord& w) const {
  return w.is_word() && in_language(w.letters());
}

int ShiftAutomaton::step_from(int state, const Word& w) const {
  int s = state;
  for (Symbol a : w) {
    if (s < 0) return -1;
    s = graph.next[s][a];
  }
  return s;
}

ExtWord sx_mul(const ShiftAutomaton& aut, const ExtWord& x, const ExtWord& y) {
  if (x.is_zero() || y.is_zero()) return ExtWord::zero();
  if (x.is_unit()) return y;
  if (y.is_unit()) return x;
  Word w = x.letters();
  w.insert(w.end(), y.letters().begin(), y.letters().end());
  if (!aut.in_language(w)) return ExtWord::zero();
  return ExtWord::word(std::move(w));
}

std::vector<Word> enumerate_language(const ShiftAutomaton& aut, int max_len) {
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  return dfa_enumerate(aut.graph, max_len);
}

std::vector<long long> language_counts(const ShiftAutomaton& aut, int max_len) {
  if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
  return dfa_counts(aut.graph, max_len);
}

Dfa pattern_word_set_raw(int alphabet_size, const Pattern& p) {
  validate_pattern(p, alphabet_size);
  Nfa nfa(alphabet_size);
  add_pattern(nfa, p);
  return trim(determinize(nfa, /*factor_mode=*/false));
}

Dfa pattern_word_set(const ShiftAutomaton& aut, const Pattern& p) {
  return trim(product(pattern_word_set_raw(aut.alphabet_size(), p), aut.lang, BoolOp::And));
}

}  // namespace subshift
