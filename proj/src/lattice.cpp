#include "subshift/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <unordered_map>

namespace subshift {

Dfa follower_dfa(const Dfa& graph, const std::vector<char>& live, const std::vector<int>& states) {
  Dfa out;
  out.nsym = graph.nsym;
  for (int q : states)
    if (q < 0 || !live[q]) {
      // Some member follower is empty, hence so is the intersection.
      out.start = out.add_state(false);
      return out;
    }
  // Build with plain acceptance, then strip the empty word at the end.
  std::map<std::vector<int>, int> ids;
  std::deque<std::vector<int>> queue;
  auto get = [&](std::vector<int> set) -> int {
    auto it = ids.find(set);
    if (it != ids.end()) return it->second;
    bool all_live = true;
    for (int q : set) all_live = all_live && live[q];
    int id = out.add_state(all_live);
    ids.emplace(set, id);
    queue.push_back(std::move(set));
    return id;
  };
  std::vector<int> start_set = states;
  std::sort(start_set.begin(), start_set.end());
  start_set.erase(std::unique(start_set.begin(), start_set.end()), start_set.end());
  out.start = get(start_set);
  while (!queue.empty()) {
    std::vector<int> set = queue.front();
    queue.pop_front();
    int id = ids.at(set);
    for (int a = 0; a < out.nsym; ++a) {
      std::vector<int> img;
      bool dead = false;
      for (int q : set) {
        int t = graph.next[q][a];
        if (t < 0) {
          dead = true;
          break;
        }
        img.push_back(t);
      }
      if (dead) {
        out.next[id][a] = -1;
        continue;
      }
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      out.next[id][a] = get(std::move(img));
    }
  }
  return drop_epsilon(out);
}

FollowerLattice build_lattice(const Dfa& graph, const std::vector<char>& live) {
  FollowerLattice lat;
  int n = graph.size();
  lat.state_class.assign(n, -1);

  // Shortest surviving word to each state, in BFS order over symbols.
  std::vector<Word> reach_word(n);
  std::vector<char> reached(n, 0);
  std::deque<int> bfs{graph.start};
  reached[graph.start] = 1;
  while (!bfs.empty()) {
    int s = bfs.front();
    bfs.pop_front();
    for (int a = 0; a < graph.nsym; ++a) {
      int t = graph.next[s][a];
      if (t >= 0 && !reached[t]) {
        reached[t] = 1;
        reach_word[t] = reach_word[s];
        reach_word[t].push_back(a);
        bfs.push_back(t);
      }
    }
  }

  // Shortest nonempty word reaching each state; for the start this needs an
  // incoming edge, everything else already has one from the BFS.
  auto nonempty_witness = [&](int q) -> std::optional<Word> {
    if (q != graph.start) return reached[q] ? std::optional<Word>(reach_word[q]) : std::nullopt;
    std::optional<Word> best;
    for (int s = 0; s < n; ++s) {
      if (!reached[s]) continue;
      for (int a = 0; a < graph.nsym; ++a) {
        if (graph.next[s][a] != q) continue;
        Word w = reach_word[s];
        w.push_back(a);
        if (!best || lenlex_less(w, *best)) best = w;
      }
    }
    return best;
  };

  // Merge relevant states (the start plus every live state) by follower
  // language.  Non-live states other than the start have empty followers and
  // stay out of the class list.
  std::unordered_map<std::string, int> key_to_class;
  auto witness = [&](int q) -> ExtWord {
    if (q == graph.start) return ExtWord::unit();
    return ExtWord::word(reach_word[q]);
  };
  auto consider = [&](int q) {
    Dfa f = follower_dfa(graph, live, {q});
    std::string key = dfa_canonical_key(f);
    auto it = key_to_class.find(key);
    if (it == key_to_class.end()) {
      int c = lat.nclasses++;
      key_to_class.emplace(key, c);
      lat.class_rep_state.push_back(q);
      lat.class_rep_word.push_back(witness(q));
      lat.state_class[q] = c;
    } else {
      int c = it->second;
      lat.state_class[q] = c;
      // Prefer a word witness over the bare unit when one exists.
      if (lat.class_rep_word[c].is_unit() && live[q] && q != graph.start)
        lat.class_rep_word[c] = ExtWord::word(reach_word[q]);
    }
  };
  consider(graph.start);
  for (int q = 0; q < n; ++q)
    if (live[q] && q != graph.start) consider(q);
  // A live start reached by a word makes its class word-realizable too.
  if (live[graph.start] && lat.class_rep_word[lat.state_class[graph.start]].is_unit()) {
    if (auto w = nonempty_witness(graph.start); w && !w->empty())
      lat.class_rep_word[lat.state_class[graph.start]] = ExtWord::word(*w);
  }

  if (lat.nclasses > 20)
    throw std::runtime_error("follower lattice too large for exact enumeration");

  // All meets of single classes, deduplicated by language.
  unsigned total = 1u << lat.nclasses;
  lat.mask_to_elem.assign(total, -1);
  std::unordered_map<std::string, int> lang_to_elem;
  for (unsigned mask = 1; mask < total; ++mask) {
    std::vector<int> states;
    std::vector<int> bits;
    for (int c = 0; c < lat.nclasses; ++c)
      if (mask & (1u << c)) {
        states.push_back(lat.class_rep_state[c]);
        bits.push_back(c);
      }
    Dfa f = trim(follower_dfa(graph, live, states));
    std::string key = dfa_canonical_key(f);
    auto it = lang_to_elem.find(key);
    if (it != lang_to_elem.end()) {
      lat.mask_to_elem[mask] = it->second;
      continue;
    }
    LatticeElem e;
    e.class_bits = bits;
    e.lang = std::move(f);
    e.card = classify(e.lang);
    bool word = false;
    for (int c : bits) {
      e.rep.push_back(lat.class_rep_word[c]);
      word = word || lat.class_rep_word[c].is_word();
    }
    e.word_rep = word;
    int id = static_cast<int>(lat.elems.size());
    lat.elems.push_back(std::move(e));
    lang_to_elem.emplace(key, id);
    lat.mask_to_elem[mask] = id;
  }

  // Dedicated empty element (may or may not already occur among the meets).
  {
    Dfa empty;
    empty.nsym = graph.nsym;
    empty.start = empty.add_state(false);
    std::string key = dfa_canonical_key(empty);
    auto it = lang_to_elem.find(key);
    if (it != lang_to_elem.end()) {
      lat.empty_elem = it->second;
    } else {
      LatticeElem e;
      e.lang = std::move(empty);
      e.card.kind = Card::Empty;
      lat.empty_elem = static_cast<int>(lat.elems.size());
      lat.elems.push_back(std::move(e));
      lang_to_elem.emplace(key, lat.empty_elem);
    }
  }
  lat.full_elem = lat.mask_to_elem[1u << lat.state_class[graph.start]];
  return lat;
}

int FollowerLattice::elem_of_mask(unsigned mask) const {
  if (mask == 0) return full_elem;  // no constraints beyond the language itself
  return mask_to_elem.at(mask);
}

unsigned FollowerLattice::mask_of(int elem) const {
  if (elem == empty_elem && at(elem).class_bits.empty()) return 0;
  unsigned m = 0;
  for (int c : elems.at(elem).class_bits) m |= 1u << c;
  return m;
}

int FollowerLattice::elem_of_states(const std::vector<int>& states) const {
  unsigned mask = 0;
  for (int q : states) {
    if (q < 0 || state_class[q] < 0) return empty_elem;
    mask |= 1u << state_class[q];
  }
  return elem_of_mask(mask);
}

int FollowerLattice::meet(int x, int y) const {
  if (x == empty_elem || y == empty_elem) return empty_elem;
  unsigned mx = mask_of(x), my = mask_of(y);
  if (mx == 0 && my == 0) return empty_elem;
  return elem_of_mask(mx | my);
}

}  // namespace subshift
