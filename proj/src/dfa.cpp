#include "subshift/dfa.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace subshift {

int Dfa::add_state(bool acc) {
  next.emplace_back(nsym, -1);
  accept.push_back(acc ? 1 : 0);
  return size() - 1;
}

int Dfa::run(const Word& w) const {
  int s = start;
  for (Symbol a : w) {
    if (s < 0) return -1;
    s = next[s][a];
  }
  return s;
}

bool Dfa::accepts(const Word& w) const {
  int s = run(w);
  return s >= 0 && accept[s];
}

Dfa trim(const Dfa& d) {
  std::vector<int> remap(d.size(), -1);
  std::vector<int> order;
  std::deque<int> q{d.start};
  remap[d.start] = 0;
  order.push_back(d.start);
  while (!q.empty()) {
    int s = q.front();
    q.pop_front();
    for (int a = 0; a < d.nsym; ++a) {
      int t = d.next[s][a];
      if (t >= 0 && remap[t] < 0) {
        remap[t] = static_cast<int>(order.size());
        order.push_back(t);
        q.push_back(t);
      }
    }
  }
  Dfa out;
  out.nsym = d.nsym;
  out.start = 0;
  for (int s : order) {
    int id = out.add_state(d.accept[s]);
    (void)id;
  }
  for (size_t i = 0; i < order.size(); ++i)
    for (int a = 0; a < d.nsym; ++a) {
      int t = d.next[order[i]][a];
      out.next[i][a] = t < 0 ? -1 : remap[t];
    }
  return out;
}

Dfa drop_epsilon(const Dfa& d) {
  if (d.start < 0 || !d.accept[d.start]) return d;
  Dfa out = d;
  int fresh = out.add_state(false);
  out.next[fresh] = d.next[d.start];
  out.start = fresh;
  return trim(out);
}

Dfa product(const Dfa& a, const Dfa& b, BoolOp op) {
  if (a.nsym != b.nsym) throw std::invalid_argument("alphabet mismatch in product");
  auto comb = [op](bool x, bool y) {
    switch (op) {
      case BoolOp::And: return x && y;
      case BoolOp::Or: return x || y;
      case BoolOp::Diff: return x && !y;
      case BoolOp::SymDiff: return x != y;
    }
    return false;
  };
  auto acc = [&](int s, const Dfa& d) { return s >= 0 && d.accept[s]; };
  Dfa out;
  out.nsym = a.nsym;
  std::map<std::pair<int, int>, int> ids;
  std::deque<std::pair<int, int>> q;
  auto get = [&](int s, int t) -> int {
    if (s < 0 && t < 0) return -1;  // joint sink never accepts under any op here
    auto key = std::make_pair(s, t);
    auto it = ids.find(key);
    if (it != ids.end()) return it->second;
    int id = out.add_state(comb(acc(s, a), acc(t, b)));
    ids.emplace(key, id);
    q.emplace_back(s, t);
    return id;
  };
  out.start = 0;
  get(a.start, b.start);
  while (!q.empty()) {
    auto [s, t] = q.front();
    q.pop_front();
    int id = ids.at({s, t});
    for (int c = 0; c < out.nsym; ++c) {
      int s2 = s < 0 ? -1 : a.next[s][c];
      int t2 = t < 0 ? -1 : b.next[t][c];
      out.next[id][c] = get(s2, t2);
    }
  }
  return out;
}

namespace {

// States that can reach an accepting state (within defined transitions).
std::vector<char> coaccessible(const Dfa& d) {
  std::vector<std::vector<int>> rev(d.size());
  for (int s = 0; s < d.size(); ++s)
    for (int a = 0; a < d.nsym; ++a)
      if (d.next[s][a] >= 0) rev[d.next[s][a]].push_back(s);
  std::vector<char> co(d.size(), 0);
  std::deque<int> q;
  for (int s = 0; s < d.size(); ++s)
    if (d.accept[s]) {
      co[s] = 1;
      q.push_back(s);
    }
  while (!q.empty()) {
    int s = q.front();
    q.pop_front();
    for (int p : rev[s])
      if (!co[p]) {
        co[p] = 1;
        q.push_back(p);
      }
  }
  return co;
}

bool has_cycle_within(const Dfa& d, const std::vector<char>& keep) {
  // Iterative DFS, colors: 0 unseen, 1 on stack, 2 done.
  std::vector<int> color(d.size(), 0);
  for (int root = 0; root < d.size(); ++root) {
    if (!keep[root] || color[root] != 0) continue;
    std::vector<std::pair<int, int>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
      auto& [s, ai] = stack.back();
      if (ai == d.nsym) {
        color[s] = 2;
        stack.pop_back();
        continue;
      }
      int t = d.next[s][ai++];
      if (t < 0 || !keep[t]) continue;
      if (color[t] == 1) return true;
      if (color[t] == 0) {
        color[t] = 1;
        stack.emplace_back(t, 0);
      }
    }
  }
  return false;
}

}  // namespace

bool dfa_is_empty(const Dfa& d) {
  Dfa t = trim(d);
  for (char a : t.accept)
    if (a) return false;
  return true;
}

Cardinality classify(const Dfa& d) {
  Dfa t = trim(d);
  std::vector<char> co = coaccessible(t);
  std::vector<char> useful(t.size(), 0);
  bool any = false;
  for (int s = 0; s < t.size(); ++s) {
    useful[s] = co[s];
    if (t.accept[s]) any = true;
  }
  Cardinality out;
  if (!any) {
    out.kind = Card::Empty;
    return out;
  }
  if (has_cycle_within(t, useful)) {
    out.kind = Card::Infinite;
    return out;
  }
  out.kind = Card::Finite;
  // Useful subgraph is acyclic, so word lengths are bounded by its size.
  out.words = dfa_enumerate(t, t.size() + 1);
  return out;
}

bool dfa_equivalent(const Dfa& a, const Dfa& b) {
  return dfa_is_empty(product(a, b, BoolOp::SymDiff));
}

bool dfa_subset(const Dfa& a, const Dfa& b) {
  return dfa_is_empty(product(a, b, BoolOp::Diff));
}

std::vector<Word> dfa_enumerate(const Dfa& d, int maxlen) {
  std::vector<char> co = coaccessible(d);
  std::vector<Word> out;
  // Length-layered BFS in symbol order keeps length-lex order.
  std::vector<std::pair<int, Word>> layer;
  if (d.start >= 0 && co[d.start]) layer.emplace_back(d.start, Word{});
  for (int len = 1; len <= maxlen && !layer.empty(); ++len) {
    std::vector<std::pair<int, Word>> next_layer;
    for (const auto& [s, w] : layer) {
      for (int a = 0; a < d.nsym; ++a) {
        int t = d.next[s][a];
        if (t < 0 || !co[t]) continue;
        Word w2 = w;
        w2.push_back(a);
        if (d.accept[t]) out.push_back(w2);
        next_layer.emplace_back(t, std::move(w2));
      }
    }
    layer = std::move(next_layer);
  }
  return out;
}

std::vector<Word> dfa_enumerate_limited(const Dfa& d, int maxlen, int max_count) {
  std::vector<char> co = coaccessible(d);
  std::vector<Word> out;
  std::vector<std::pair<int, Word>> layer;
  if (d.start >= 0 && co[d.start]) layer.emplace_back(d.start, Word{});
  for (int len = 1; len <= maxlen && !layer.empty(); ++len) {
    std::vector<std::pair<int, Word>> next_layer;
    for (const auto& [s, w] : layer) {
      for (int a = 0; a < d.nsym; ++a) {
        int t = d.next[s][a];
        if (t < 0 || !co[t]) continue;
        Word w2 = w;
        w2.push_back(a);
        if (d.accept[t]) {
          out.push_back(w2);
          if (static_cast<int>(out.size()) >= max_count) return out;
        }
        next_layer.emplace_back(t, std::move(w2));
      }
    }
    layer = std::move(next_layer);
  }
  return out;
}

std::vector<long long> dfa_counts(const Dfa& d, int maxlen) {
  std::vector<long long> counts(maxlen, 0);
  // Count paths per state per length; avoids materializing words.
  std::vector<long long> cur(d.size(), 0);
  if (d.start >= 0) cur[d.start] = 1;
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<long long> nxt(d.size(), 0);
    for (int s = 0; s < d.size(); ++s) {
      if (cur[s] == 0) continue;
      for (int a = 0; a < d.nsym; ++a) {
        int t = d.next[s][a];
        if (t >= 0) nxt[t] += cur[s];
      }
    }
    for (int s = 0; s < d.size(); ++s)
      if (d.accept[s]) counts[len - 1] += nxt[s];
    cur = std::move(nxt);
  }
  return counts;
}

Dfa dfa_minimize(const Dfa& d) {
  // Complete with a sink, then Moore partition refinement.
  Dfa t = trim(d);
  int n = t.size();
  int sink = n;
  auto nx = [&](int s, int a) {
    int r = s == sink ? -1 : t.next[s][a];
    return r < 0 ? sink : r;
  };
  std::vector<int> cls(n + 1);
  for (int s = 0; s < n; ++s) cls[s] = t.accept[s] ? 1 : 0;
  cls[sink] = 0;
  int ncls = 2;
  for (;;) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next_cls(n + 1);
    for (int s = 0; s <= n; ++s) {
      std::vector<int> sig{cls[s]};
      for (int a = 0; a < t.nsym; ++a) sig.push_back(cls[nx(s, a)]);
      auto [it, fresh] = sig_ids.emplace(std::move(sig), static_cast<int>(sig_ids.size()));
      (void)fresh;
      next_cls[s] = it->second;
    }
    int m = static_cast<int>(sig_ids.size());
    if (m == ncls) break;
    ncls = m;
    cls = std::move(next_cls);
  }
  // Rebuild over classes, then drop the sink class by re-partializing.
  Dfa out;
  out.nsym = t.nsym;
  std::vector<int> rep(ncls, -1);
  for (int s = 0; s <= n; ++s)
    if (rep[cls[s]] < 0) rep[cls[s]] = s;
  std::vector<int> id_of(ncls, -1);
  int sink_cls = cls[sink];
  // BFS order from the start class for a stable layout.
  std::deque<int> q;
  auto cid = [&](int c) {
    if (id_of[c] < 0) {
      bool acc = rep[c] != sink && (rep[c] == sink ? false : t.accept[rep[c]]);
      id_of[c] = out.add_state(acc);
      q.push_back(c);
    }
    return id_of[c];
  };
  out.start = cid(cls[t.start]);
  while (!q.empty()) {
    int c = q.front();
    q.pop_front();
    int s = rep[c];
    for (int a = 0; a < t.nsym; ++a) {
      int tc = cls[nx(s, a)];
      out.next[id_of[c]][a] = tc == sink_cls ? -1 : cid(tc);
    }
  }
  return trim(out);
}

std::string dfa_canonical_key(const Dfa& d) {
  Dfa m = dfa_minimize(d);
  std::string key = std::to_string(m.size()) + ";" + std::to_string(m.start) + ";";
  for (int s = 0; s < m.size(); ++s) {
    key += m.accept[s] ? 'A' : '.';
    for (int a = 0; a < m.nsym; ++a) key += "," + std::to_string(m.next[s][a]);
    key += ";";
  }
  return key;
}

std::vector<Word> dfa_shortest_witness(const Dfa& d) {
  auto words = dfa_enumerate(d, trim(d).size() + 1);
  if (words.empty()) return {};
  return {words.front()};
}

}  // namespace subshift
