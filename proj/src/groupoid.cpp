#include "subshift/groupoid.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace subshift {

bool PointSample::contains(const EvPeriodicWord& p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

int PointSample::index_of(const EvPeriodicWord& p) const {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || !(*it == p)) return -1;
  return static_cast<int>(it - points.begin());
}

namespace {

// Shortest cycle word through q within defined transitions, empty when none.
Word cycle_word_at(const Dfa& g, int q) {
  std::vector<int> par_state(g.size(), -2);  // -2 unvisited, -1 root
  std::vector<Symbol> par_sym(g.size(), -1);
  std::deque<int> queue{q};
  par_state[q] = -1;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop_front();
    for (int a = 0; a < g.nsym; ++a) {
      int t = g.next[s][a];
      if (t < 0) continue;
      if (t == q) {
        Word rev{a};
        for (int cur = s; cur != q; cur = par_state[cur]) rev.push_back(par_sym[cur]);
        std::reverse(rev.begin(), rev.end());
        return rev;
      }
      if (par_state[t] == -2) {
        par_state[t] = s;
        par_sym[t] = a;
        queue.push_back(t);
      }
    }
  }
  return {};
}

}  // namespace

namespace {

// Shifts plus `budget` rounds of admissible one-letter prepends of the
// given seeds, merged into pts.
void close_orbit(const ShiftAutomaton& aut, int budget, std::vector<EvPeriodicWord> seeds,
                 std::set<EvPeriodicWord>& pts) {
  std::vector<EvPeriodicWord> work;
  for (auto& s : seeds)
    if (pts.insert(s).second) work.push_back(s);
  std::vector<EvPeriodicWord> fresh = work;
  while (!work.empty()) {
    EvPeriodicWord p = work.back();
    work.pop_back();
    EvPeriodicWord s = p.shifted(1);
    if (pts.insert(s).second) {
      work.push_back(s);
      fresh.push_back(s);
    }
  }
  for (int round = 0; round < budget; ++round) {
    std::vector<EvPeriodicWord> added;
    for (const auto& p : fresh)
      for (Symbol a = 0; a < aut.alphabet_size(); ++a) {
        EvPeriodicWord q = p.prepend(a);
        if (!aut.in_shift(q)) continue;
        if (pts.insert(q).second) added.push_back(q);
      }
    fresh = std::move(added);
  }
}

}  // namespace

PointSample build_sample(const ShiftAutomaton& aut, int budget, int seed_pre, int seed_per) {
  std::set<EvPeriodicWord> pts;

  if (seed_pre < 0 || seed_per < 0) {
    // One periodic point per cyclic state; tails of shift points are points,
    // so a cycle word anywhere in the automaton gives an admissible point.
    // Seeds join in canonical order until the closed sample reaches a size
    // that keeps the exhaustive germ checks tractable; the closure property
    // holds for whatever subset of seeds made it in.
    constexpr int kSampleCap = 800;
    std::set<EvPeriodicWord> seeds;
    for (int q = 0; q < aut.graph.size(); ++q) {
      if (!aut.live[q]) continue;
      Word c = cycle_word_at(aut.graph, q);
      if (c.empty()) continue;
      seeds.insert(EvPeriodicWord({}, c));
    }
    for (const auto& s : seeds) {
      if (!pts.empty() && static_cast<int>(pts.size()) >= kSampleCap) break;
      close_orbit(aut, budget, {s}, pts);
    }
    PointSample out;
    out.aut = &aut;
    out.budget = budget;
    out.points.assign(pts.begin(), pts.end());
    return out;
  }

  {
    // All admissible points with short preperiod and period.
    std::vector<Word> pres{{}};
    std::vector<Word> grow = pres;
    for (int len = 1; len <= seed_pre; ++len) {
      std::vector<Word> next;
      for (const auto& w : grow)
        for (Symbol a = 0; a < aut.alphabet_size(); ++a) {
          Word w2 = w;
          w2.push_back(a);
          next.push_back(w2);
        }
      pres.insert(pres.end(), next.begin(), next.end());
      grow = std::move(next);
    }
    std::vector<Word> pers;
    std::vector<Word> frontier{{}};
    for (int len = 1; len <= seed_per; ++len) {
      std::vector<Word> next;
      for (const auto& w : frontier)
        for (Symbol a = 0; a < aut.alphabet_size(); ++a) {
          Word w2 = w;
          w2.push_back(a);
          next.push_back(w2);
          pers.push_back(w2);
        }
      frontier = std::move(next);
    }
    std::vector<EvPeriodicWord> seeds;
    for (const auto& pre : pres)
      for (const auto& per : pers) {
        EvPeriodicWord p(pre, per);
        if (aut.in_shift(p)) seeds.push_back(p);
      }
    close_orbit(aut, budget, std::move(seeds), pts);
  }

  PointSample out;
  out.aut = &aut;
  out.budget = budget;
  out.points.assign(pts.begin(), pts.end());
  return out;
}

std::vector<FreeGroupWord> free_ball(int alphabet_size, int radius) {
  std::vector<FreeGroupWord> ball{FreeGroupWord()};
  std::vector<std::vector<int>> frontier{{}};
  for (int len = 1; len <= radius; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (int a = 0; a < alphabet_size; ++a)
        for (int sign : {1, -1}) {
          int l = sign * (a + 1);
          if (!w.empty() && w.back() == -l) continue;  // keep it reduced
          auto w2 = w;
          w2.push_back(l);
          ball.push_back(FreeGroupWord::reduce(w2));
          next.push_back(std::move(w2));
        }
    frontier = std::move(next);
  }
  return ball;
}

namespace {

// Same as alpha_apply, with the admissibility of x already settled and the
// positive and negative parts precomputed.
std::optional<EvPeriodicWord> alpha_apply_parts(const ShiftAutomaton& aut, const Word& u,
                                                const Word& v, const EvPeriodicWord& x) {
  int vn = static_cast<int>(v.size());
  for (int i = 0; i < vn; ++i)
    if (x.letter_at(i) != v[i]) return std::nullopt;
  EvPeriodicWord out = x.shifted(vn);
  for (auto it = u.rbegin(); it != u.rend(); ++it) out = out.prepend(*it);
  if (!aut.in_shift(out)) return std::nullopt;
  return out;
}

}  // namespace

std::optional<EvPeriodicWord> alpha_apply(const ShiftAutomaton& aut, const FreeGroupWord& g,
                                          const EvPeriodicWord& x) {
  if (!aut.in_shift(x)) throw std::invalid_argument("point outside the shift");
  if (!g.is_positive_negative()) return std::nullopt;  // empty domain
  auto [u, v] = g.positive_negative_parts();
  return alpha_apply_parts(aut, u, v, x);
}

DRGerm dr_convert(const ShiftAutomaton& aut, const PTGerm& germ) {
  if (!germ.g.is_positive_negative()) throw std::invalid_argument("not a partial-action germ");
  auto [u, v] = germ.g.positive_negative_parts();
  auto check = alpha_apply(aut, germ.g, germ.x);
  if (!check || !(*check == germ.y)) throw std::invalid_argument("germ does not act");
  int k = static_cast<int>(u.size()) - static_cast<int>(v.size());
  // Minimum representative: smallest m >= max(k, 0) with the shifts agreeing.
  int bound = static_cast<int>(u.size());
  for (int m = std::max(k, 0); m <= bound; ++m) {
    int n = m - k;
    if (germ.y.shifted(m) == germ.x.shifted(n)) return DRGerm{germ.y, k, germ.x, m, n};
  }
  throw std::logic_error("no representative below the defining one");
}

PTGerm dr_invert(const ShiftAutomaton& aut, const DRGerm& germ) {
  if (germ.m < 0 || germ.n < 0 || germ.m - germ.n != germ.k)
    throw std::invalid_argument("inconsistent representative");
  if (!(germ.y.shifted(germ.m) == germ.x.shifted(germ.n)))
    throw std::invalid_argument("not a groupoid element over these points");
  Word u = germ.y.prefix(germ.m);
  Word v = germ.x.prefix(germ.n);
  FreeGroupWord g = FreeGroupWord::from_positive(u).times(FreeGroupWord::from_positive(v).inverse());
  if (g.length() != static_cast<int>(u.size() + v.size()))
    throw std::invalid_argument("representative is not minimal");
  PTGerm out{germ.y, g, germ.x};
  auto check = alpha_apply(aut, g, germ.x);
  if (!check || !(*check == germ.y)) throw std::invalid_argument("germ does not act");
  return out;
}

std::optional<PTGerm> germ_compose(const ShiftAutomaton& aut, const PTGerm& g1, const PTGerm& g2) {
  if (!(g1.x == g2.y)) return std::nullopt;
  FreeGroupWord g = g1.g.times(g2.g);
  auto y = alpha_apply(aut, g, g2.x);
  if (!y || !(*y == g1.y)) return std::nullopt;  // composite undefined at the point
  return PTGerm{g1.y, g, g2.x};
}

std::optional<DRGerm> germ_compose(const ShiftAutomaton& aut, const DRGerm& g1, const DRGerm& g2) {
  (void)aut;
  if (!(g1.x == g2.y)) return std::nullopt;
  int k = g1.k + g2.k;
  // Recompute the minimum representative from scratch.
  int bound = g1.m + g2.m;
  for (int m = std::max(k, 0); m <= bound; ++m) {
    int n = m - k;
    if (g1.y.shifted(m) == g2.x.shifted(n)) return DRGerm{g1.y, k, g2.x, m, n};
  }
  return std::nullopt;
}

PTGerm germ_inverse(const PTGerm& g) { return PTGerm{g.x, g.g.inverse(), g.y}; }

DRGerm dr_inverse(const ShiftAutomaton& aut, const DRGerm& g) {
  (void)aut;
  return DRGerm{g.x, -g.k, g.y, g.n, g.m};
}

std::vector<PTGerm> enumerate_pt_germs(const ShiftAutomaton& aut, const PointSample& sample,
                                       int radius) {
  std::vector<PTGerm> out;
  auto ball = free_ball(aut.alphabet_size(), radius);
  for (const auto& g : ball) {
    if (!g.is_positive_negative()) continue;
    auto [u, v] = g.positive_negative_parts();
    for (const auto& x : sample.points) {
      auto y = alpha_apply_parts(aut, u, v, x);
      if (!y || !sample.contains(*y)) continue;
      out.push_back(PTGerm{*y, g, x});
    }
  }
  return out;
}

ActionReport action_report(const PointSample& sample, int radius) {
  const ShiftAutomaton& aut = *sample.aut;
  ActionReport rep;
  rep.sample_size = sample.size();
  rep.radius = radius;
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");

  auto fail = [&](const std::string& what) {
    if (rep.failure.empty()) rep.failure = what;
  };

  // Orthogonality: a sample point sits in the range of at most one letter.
  rep.orthogonal = true;
  for (const auto& p : sample.points) {
    int owners = 0;
    for (Symbol a = 0; a < aut.alphabet_size(); ++a) {
      // p in X_a iff p starts with a (its shift is then automatically a point).
      if (p.letter_at(0) == a) ++owners;
    }
    ++rep.checks;
    if (owners > 1) {
      rep.orthogonal = false;
      fail("orthogonality");
    }
  }

  // Semi-saturation over reduced concatenations in the ball.  Elements that
  // are not of the shape u v^-1 act nowhere (checked below), so only those
  // pairs need the pointwise comparison.
  rep.semi_saturated = true;
  auto ball = free_ball(aut.alphabet_size(), radius);
  struct PosNeg {
    FreeGroupWord g;
    Word u, v;
  };
  std::vector<PosNeg> posneg;
  for (const auto& g : ball)
    if (g.is_positive_negative()) {
      auto [u, v] = g.positive_negative_parts();
      posneg.push_back({g, std::move(u), std::move(v)});
    }
  for (const auto& G : posneg)
    for (const auto& H : posneg) {
      if (G.g.length() + H.g.length() > radius) continue;
      FreeGroupWord gh = G.g.times(H.g);
      if (gh.length() != G.g.length() + H.g.length()) continue;  // cancellation: no claim
      bool gh_acts = gh.is_positive_negative();
      Word ghu, ghv;
      if (gh_acts) std::tie(ghu, ghv) = gh.positive_negative_parts();
      for (const auto& x : sample.points) {
        auto hx = alpha_apply_parts(aut, H.u, H.v, x);
        auto lhs = hx ? alpha_apply_parts(aut, G.u, G.v, *hx) : std::nullopt;
        auto rhs = gh_acts ? alpha_apply_parts(aut, ghu, ghv, x) : std::nullopt;
        ++rep.checks;
        if (lhs.has_value() != rhs.has_value() || (lhs && !(*lhs == *rhs))) {
          rep.semi_saturated = false;
          fail("semi-saturation");
        }
      }
    }
  // Everything else in the ball has empty domain on the sample, which also
  // settles the pairs skipped above.
  size_t probe_cap = std::min<size_t>(sample.points.size(), 50);
  for (const auto& g : ball) {
    if (g.is_positive_negative()) continue;
    for (size_t i = 0; i < probe_cap; ++i) {
      ++rep.checks;
      if (alpha_apply(aut, g, sample.points[i])) {
        rep.semi_saturated = false;
        fail("non-reduced shape acted somewhere");
      }
    }
  }

  // Positive ranges nest by prefix wherever they overlap on the sample.  A
  // pair of blocks overlaps exactly when both prefix some sampled point, so
  // the pairs worth checking come from the sampled prefixes themselves.
  rep.prefix_nesting = true;
  std::set<Word> point_prefixes;
  for (const auto& p : sample.points)
    for (int n = 1; n <= radius; ++n) point_prefixes.insert(p.prefix(n));
  auto in_range = [&](const Word& u, const EvPeriodicWord& p) {
    int n = static_cast<int>(u.size());
    for (int i = 0; i < n; ++i)
      if (p.letter_at(i) != u[i]) return false;
    return true;
  };
  std::set<std::pair<Word, Word>> overlapping;
  for (const auto& pref : point_prefixes)
    for (size_t i = 1; i <= pref.size(); ++i)
      for (size_t j = i; j <= pref.size(); ++j)
        overlapping.insert({Word(pref.begin(), pref.begin() + i),
                            Word(pref.begin(), pref.begin() + j)});
  for (const auto& [u, v] : overlapping) {
    ++rep.checks;
    if (!is_prefix(u, v)) {
      rep.prefix_nesting = false;
      fail("prefix-nesting");
      continue;
    }
    for (const auto& p : sample.points)
      if (in_range(v, p) && !in_range(u, p)) {
        rep.prefix_nesting = false;
        fail("prefix-nesting");
      }
  }

  // shift^n as the disjoint union of the n-letter inverses.
  rep.power_decomposition = true;
  std::vector<std::vector<Word>> blocks(radius + 1);
  blocks[0] = {Word{}};
  for (int n = 1; n <= radius; ++n)
    for (const auto& w : blocks[n - 1])
      for (Symbol a = 0; a < aut.alphabet_size(); ++a) {
        Word w2 = w;
        w2.push_back(a);
        blocks[n].push_back(std::move(w2));
      }
  for (const auto& x : sample.points)
    for (int n = 1; n <= radius; ++n) {
      EvPeriodicWord direct = x.shifted(n);
      Word w = x.prefix(n);
      auto via = alpha_apply_parts(aut, Word{}, w, x);
      ++rep.checks;
      if (!via || !(*via == direct)) {
        rep.power_decomposition = false;
        fail("power-decomposition");
      }
      // Every other n-letter block must be undefined at x.
      for (const auto& u : blocks[n]) {
        if (u == w) continue;
        ++rep.checks;
        if (alpha_apply_parts(aut, Word{}, u, x)) {
          rep.power_decomposition = false;
          fail("power-decomposition");
        }
      }
    }

  return rep;
}

}  // namespace subshift
