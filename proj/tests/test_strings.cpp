#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "corpus.hpp"
#include "oracle.hpp"
#include "subshift/groupoid.hpp"
#include "subshift/setexpr.hpp"
#include "subshift/strings.hpp"
#include "subshift/tightness.hpp"

using namespace subshift;

namespace {

// Deterministic batch of eventually periodic points.
std::vector<EvPeriodicWord> some_points(const ShiftAutomaton& aut, size_t want) {
  PointSample s = aut.alphabet_size() <= 3 ? build_sample(aut, 4, 2, 3) : build_sample(aut, 3);
  std::vector<EvPeriodicWord> out = s.points;
  if (out.size() > want) out.erase(out.begin() + want, out.end());
  return out;
}

// All constructible sets presented straight off the follower lattice.
std::vector<ConstructibleSet> lattice_sets(const ShiftAutomaton& aut) {
  std::vector<ConstructibleSet> out;
  const auto& lat = aut.lattice();
  for (int id = 0; id < lat.size(); ++id) {
    const auto& e = lat.at(id);
    if (!e.word_rep) continue;
    WordSetLambda lambda = e.rep;
    lambda.push_back(ExtWord::unit());
    out.push_back(make_constructible(aut, ExtWord::unit(), normalize_lambda(lambda)));
  }
  return out;
}

}  // namespace

TEST_CASE("strings classify by finiteness") {
  ShiftAutomaton golden = corpus::load("golden");
  const Alphabet& al = golden.alphabet();
  StringPoint fin = StringPoint::of(golden, al.parse_word("0"));
  StringClass cf = classify_string(fin);
  CHECK_FALSE(cf.open);
  CHECK_FALSE(cf.maximal);
  CHECK(cf.bounded);

  StringPoint inf = StringPoint::of(golden, parse_ev_word(al, "(0)"));
  StringClass ci = classify_string(inf);
  CHECK(ci.open);
  CHECK(ci.maximal);
  CHECK_FALSE(ci.bounded);

  CHECK_THROWS_AS(StringPoint::of(golden, al.parse_word("11")), std::invalid_argument);
  CHECK_THROWS_AS(StringPoint::of(golden, parse_ev_word(al, "(1)")), std::invalid_argument);

  ShiftAutomaton ex4 = corpus::load("ex4");
  StringPoint ones = StringPoint::of(ex4, parse_ev_word(ex4.alphabet(), "(1)"));
  CHECK(classify_string(ones).maximal);
}

TEST_CASE("character evaluation on followers matches shift membership") {
  ShiftAutomaton ex4 = corpus::load("ex4");
  const Alphabet& al = ex4.alphabet();
  // phi_{sigma_omega}(F_mu) = [mu omega in X] for omega = (1) and mu = 10^n 4.
  Character ones = Character::of_string(StringPoint::of(ex4, parse_ev_word(al, "(1)")));
  for (int n = 1; n <= 4; ++n) {
    Word mu{1};
    mu.insert(mu.end(), n, 0);
    mu.push_back(4);
    ConstructibleSet fmu = make_constructible(
        ex4, ExtWord::unit(), {ExtWord::unit(), ExtWord::word(mu)});
    CHECK(char_eval(ex4, ones, fmu) == 1);
    EvPeriodicWord muw = parse_ev_word(al, al.render(mu) + "(1)");
    CHECK(ex4.in_shift(muw));
  }
  Character twos = Character::of_string(StringPoint::of(ex4, parse_ev_word(al, "(2)")));
  ConstructibleSet f104 = parse_constructible_expr(ex4, "F:104");
  CHECK(char_eval(ex4, twos, f104) == 0);
}

TEST_CASE("the principal ultrafilter of the singleton evaluates and fails essential membership") {
  ShiftAutomaton abc = corpus::load("abc");
  ConstructibleSet c_set = parse_constructible_expr(abc, "F:a,b");
  Character psi1 = Character::principal_ultra(abc, c_set);
  CHECK(char_eval(abc, psi1, c_set) == 1);

  // With no covering family at all, the finite set certifies the failure.
  EssWitnessReport rep = ess_membership_witness(abc, psi1, c_set, {});
  CHECK(rep.phi_x == 1);
  CHECK(rep.join_phi_y == 0);
  CHECK_FALSE(rep.agree);

  // Not minimal: the whole language properly contains constructible sets.
  ShiftAutomaton golden = corpus::load("golden");
  CHECK_THROWS_AS(
      Character::principal_ultra(golden, parse_constructible_expr(golden, "F:0")),
      std::invalid_argument);
}

TEST_CASE("finite string characters use the endpoint") {
  ShiftAutomaton golden = corpus::load("golden");
  const Alphabet& al = golden.alphabet();
  Character c = Character::of_string(StringPoint::of(golden, al.parse_word("010")));
  // X = E_0 contains 010 but not 10...
  ConstructibleSet e0 = parse_constructible_expr(golden, "E:0");
  CHECK(char_eval(golden, c, e0) == 1);
  ConstructibleSet e1 = parse_constructible_expr(golden, "E:1");
  CHECK(char_eval(golden, c, e1) == 0);
  // Any character vanishes on an empty constructible set.
  ShiftAutomaton abc = corpus::load("abc");
  ConstructibleSet dead = parse_constructible_expr(abc, "C:_|aa");
  CHECK(dead.empty);
  Character fc = Character::of_string(StringPoint::of(abc, abc.alphabet().parse_word("ab")));
  CHECK(char_eval(abc, fc, dead) == 0);
}

TEST_CASE("the three criteria agree over the lattice and sampled strings") {
  for (const char* name : corpus::kAll) {
    ShiftAutomaton aut = corpus::load(name);
    auto sets = lattice_sets(aut);
    auto points = some_points(aut, 50);
    for (const auto& p : points) {
      for (const auto& x : sets) {
        int a = eval_prefix_criterion(aut, p, x);
        int b = eval_epsilon_criterion(aut, p, x);
        int c = eval_finiteness_criterion(aut, p, x);
        CHECK(a == b);
        CHECK(b == c);
      }
    }
  }
}

TEST_CASE("characters are multiplicative across lattice meets") {
  for (const char* name : {"golden", "abc", "ex4"}) {
    ShiftAutomaton aut = corpus::load(name);
    auto sets = lattice_sets(aut);
    auto points = some_points(aut, 12);
    for (const auto& p : points) {
      Character c = Character::of_string(StringPoint::of(aut, p));
      for (const auto& x : sets)
        for (const auto& y : sets) {
          WordSetLambda joined = x.lambda;
          for (const auto& t : y.lambda) joined.push_back(t);
          ConstructibleSet meet = make_constructible(aut, ExtWord::unit(),
                                                     normalize_lambda(joined));
          CHECK(char_eval(aut, c, meet) == (char_eval(aut, c, x) & char_eval(aut, c, y)));
        }
    }
  }
}

TEST_CASE("zero value means finite intersection with the string") {
  // For an infinite string, value 0 on X happens exactly when only finitely
  // many prefixes lie in X; enumerate prefixes to a cycle-certified bound.
  for (const char* name : {"golden", "ex4"}) {
    ShiftAutomaton aut = corpus::load(name);
    auto sets = lattice_sets(aut);
    auto points = some_points(aut, 10);
    for (const auto& p : points) {
      int horizon = static_cast<int>(p.preperiod().size() +
                                     p.period().size() * (aut.graph.size() + 2));
      for (const auto& x : sets) {
        int bit = eval_finiteness_criterion(aut, p, x);
        // Count prefixes in X up to the horizon and at double the horizon.
        auto count_upto = [&](int n) {
          int c = 0;
          for (int k = 1; k <= n; ++k)
            if (x.set.contains(p.prefix(k))) ++c;
          return c;
        };
        int c1 = count_upto(horizon), c2 = count_upto(2 * horizon);
        if (bit == 0)
          CHECK(c1 == c2);  // intersection stopped growing
        else
          CHECK(c2 > c1);  // keeps growing forever
      }
    }
  }
}

TEST_CASE("infinite-string characters pass every admissible family") {
  for (const char* name : {"golden", "abc"}) {
    ShiftAutomaton aut = corpus::load(name);
    auto sets = lattice_sets(aut);
    auto points = some_points(aut, 8);
    for (const auto& p : points) {
      Character c = Character::of_string(StringPoint::of(aut, p));
      for (const auto& x : sets) {
        for (size_t i = 0; i < sets.size(); ++i)
          for (size_t j = i; j < sets.size(); ++j) {
            std::vector<ConstructibleSet> ys{sets[i], sets[j]};
            RegularSet uni = rs_union(sets[i].set, sets[j].set);
            if (rs_symdiff(x.set, uni).card.kind == Card::Infinite) continue;
            EssWitnessReport rep = ess_membership_witness(aut, c, x, ys);
            CHECK(rep.agree);
          }
      }
    }
  }
}

TEST_CASE("family with infinite symmetric difference is rejected") {
  ShiftAutomaton golden = corpus::load("golden");
  Character c = Character::of_string(
      StringPoint::of(golden, parse_ev_word(golden.alphabet(), "(0)")));
  ConstructibleSet whole = parse_constructible_expr(golden, "F:0");
  ConstructibleSet small = parse_constructible_expr(golden, "E:1");
  bool premise = rs_symdiff(whole.set, small.set).card.kind != Card::Infinite;
  REQUIRE_FALSE(premise);
  CHECK_THROWS_AS(ess_membership_witness(golden, c, whole, {small}), std::invalid_argument);
}

TEST_CASE("exact family always agrees") {
  ShiftAutomaton golden = corpus::load("golden");
  Character c = Character::of_string(
      StringPoint::of(golden, parse_ev_word(golden.alphabet(), "(01)")));
  ConstructibleSet x = parse_constructible_expr(golden, "E:0");
  EssWitnessReport rep = ess_membership_witness(golden, c, x, {x});
  CHECK(rep.agree);
}

TEST_CASE("ground reports") {
  ShiftAutomaton abc = corpus::load("abc");
  GroundReport g = ground_report(abc);
  CHECK_FALSE(g.holds);
  REQUIRE(g.witness_words.size() == 1);
  CHECK(abc.alphabet().render(g.witness_words[0]) == "c");
  // The witness presentation denotes that very set.
  RegularSet denoted = f_lambda(abc, g.witness_lambda);
  CHECK(denoted.card.kind == Card::Finite);
  CHECK(denoted.card.words == g.witness_words);

  CHECK(ground_report(corpus::load("full2")).holds);
  CHECK(ground_report(corpus::load("golden")).holds);
  CHECK(ground_report(corpus::load("ex4")).holds);
}

TEST_CASE("on certified shifts every infinite-string character is tight on covers") {
  // Essential tightness of the semilattice plus essential tightness of the
  // character forces the genuine join equation on every certified cover.
  for (const char* name : {"golden", "abc", "full2", "single"}) {
    ShiftAutomaton aut = corpus::load(name);
    REQUIRE(hypotheses_check(aut, 20).certified_essentially_tight);
    auto sets = lattice_sets(aut);
    auto points = some_points(aut, 10);
    for (const auto& x : sets) {
      for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = i; j < sets.size(); ++j) {
          std::vector<ConstructibleSet> family;
          for (const auto& cand : {sets[i], sets[j]})
            if (rs_subset(cand.set, x.set)) family.push_back(cand);
          if (family.empty()) continue;
          if (cover_verdict(x, family, 4).kind != CoverVerdict::Kind::Covered) continue;
          for (const auto& p : points) {
            Character c = Character::of_string(StringPoint::of(aut, p));
            int join = 0;
            for (const auto& y : family) join |= char_eval(aut, c, y);
            CHECK(char_eval(aut, c, x) == join);
          }
        }
    }
  }
}

TEST_CASE("string of a word round-trips through prefixes") {
  ShiftAutomaton abc = corpus::load("abc");
  const Alphabet& al = abc.alphabet();
  StringPoint s = StringPoint::of(abc, al.parse_word("abc"));
  REQUIRE(s.finite);
  CHECK(al.render(s.fin) == "abc");
}
