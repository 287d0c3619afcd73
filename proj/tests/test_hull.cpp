#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "oracle.hpp"
#include "subshift/setexpr.hpp"

using namespace subshift;

namespace {

// Deterministic random generator chains over short words.
std::vector<oracle::Gen> random_chain(std::mt19937& rng, const std::vector<Word>& words,
                                      int max_gens) {
  std::uniform_int_distribution<int> count(1, max_gens);
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<size_t> pick(0, words.size() - 1);
  std::vector<oracle::Gen> out;
  int n = count(rng);
  for (int i = 0; i < n; ++i) {
    oracle::Gen g;
    switch (kind(rng)) {
      case 0:
        g.kind = oracle::Gen::Kind::Theta;
        g.w = words[pick(rng)];
        break;
      case 1:
        g.kind = oracle::Gen::Kind::ThetaInv;
        g.w = words[pick(rng)];
        break;
      default:
        g.kind = oracle::Gen::Kind::F;
        g.lambda = {words[pick(rng)]};
        if (pick(rng) % 2) g.lambda.push_back(words[pick(rng)]);
        break;
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Word> sample_words(std::mt19937& rng, const std::vector<Word>& lang, size_t n) {
  if (lang.size() <= n) return lang;
  std::vector<Word> out;
  std::uniform_int_distribution<size_t> pick(0, lang.size() - 1);
  for (size_t i = 0; i < n; ++i) out.push_back(lang[pick(rng)]);
  return out;
}

}  // namespace

TEST_CASE("theta generators act by prepending") {
  ShiftAutomaton golden = corpus::load("golden");
  const Alphabet& al = golden.alphabet();
  HullElement t0 = theta(golden, al.parse_word("0"));
  CHECK(apply_word(t0, al.parse_word("1")) == parse_term(al, "01"));
  CHECK(apply_word(t0, al.parse_word("01")) == parse_term(al, "001"));
  // Outside the domain.
  HullElement t1 = theta(golden, al.parse_word("1"));
  CHECK(apply_word(t1, al.parse_word("1")).is_zero());

  HullElement id = HullElement::identity(golden);
  for (const auto& w : enumerate_language(golden, 5)) CHECK(apply_word(id, w) == ExtWord::word(w));

  ShiftAutomaton abc = corpus::load("abc");
  HullElement ta = theta(abc, abc.alphabet().parse_word("a"));
  RegularSet dom = ta.domain();
  CHECK(dom.contains(abc.alphabet().parse_word("b")));
  CHECK_FALSE(dom.contains(abc.alphabet().parse_word("a")));
  CHECK(rs_equal(ta.range(), e_set(abc, abc.alphabet().parse_word("a"))));

  CHECK_THROWS_AS(theta(golden, al.parse_word("11")), std::invalid_argument);
}

TEST_CASE("products compose prefixes the right way") {
  ShiftAutomaton golden = corpus::load("golden");
  const Alphabet& al = golden.alphabet();
  CHECK(equals(mul(theta(golden, al.parse_word("0")), theta(golden, al.parse_word("1"))),
               theta(golden, al.parse_word("01"))));
  CHECK(mul(theta(golden, al.parse_word("1")), theta(golden, al.parse_word("1"))).is_zero());

  // a^-1 a is the idempotent on the domain of a.
  HullElement a = theta(golden, al.parse_word("0"));
  HullElement e = mul(invert(a), a);
  CHECK(e.is_idempotent());
  CHECK(rs_equal(e.domain(), a.domain()));

  // Disjoint follower sets kill mixed products.
  ShiftAutomaton ex4 = corpus::load("ex4");
  HullElement h104 = theta(ex4, ex4.alphabet().parse_word("104"));
  HullElement h204 = theta(ex4, ex4.alphabet().parse_word("204"));
  CHECK(mul(h104, invert(h204)).is_zero());
}

TEST_CASE("inversion is an involution matching the relational inverse") {
  ShiftAutomaton golden = corpus::load("golden");
  const Alphabet& al = golden.alphabet();
  HullElement a = theta(golden, al.parse_word("01"));
  CHECK(equals(invert(invert(a)), a));
  CHECK(rs_equal(invert(a).domain(), a.range()));
  CHECK(invert(HullElement::zero(golden)).is_zero());
  for (const auto& w : enumerate_language(golden, 6)) {
    ExtWord y = apply_word(a, w);
    if (y.is_word()) CHECK(apply_word(invert(a), y.letters()) == ExtWord::word(w));
  }
}

TEST_CASE("equality goes through the follower language, not the presentation") {
  ShiftAutomaton abc = corpus::load("abc");
  const Alphabet& al = abc.alphabet();
  // Adding a longer word to Lambda only matters if it changes the language.
  HullElement lhs = parse_hull_expr(abc, "nf:_|a,ac|_");
  HullElement rhs = parse_hull_expr(abc, "nf:_|a|_");
  bool lang_equal = rs_equal(f_lambda(abc, parse_terms(al, "a,ac")),
                             f_lambda(abc, parse_terms(al, "a")));
  CHECK(equals(lhs, rhs) == lang_equal);

  HullElement t0 = parse_hull_expr(abc, "th:a");
  HullElement t1 = parse_hull_expr(abc, "th:b");
  CHECK_FALSE(equals(t0, t1));
  CHECK(equals(t0, t0));
}

TEST_CASE("natural partial order") {
  ShiftAutomaton golden = corpus::load("golden");
  const Alphabet& al = golden.alphabet();
  HullElement a = theta(golden, al.parse_word("0"));
  CHECK(leq(HullElement::zero(golden), a));
  CHECK(leq(a, a));
  // Restriction to a smaller follower set sits below.
  HullElement restricted = mul(a, f_idempotent(golden, parse_terms(al, "1")));
  CHECK(leq(restricted, a));
  CHECK_FALSE(leq(a, restricted));
  // Graph containment agrees on sampled words.
  for (const auto& w : enumerate_language(golden, 6)) {
    ExtWord y = apply_word(restricted, w);
    if (!y.is_zero()) CHECK(apply_word(a, w) == y);
  }
}

TEST_CASE("grading map") {
  ShiftAutomaton golden = corpus::load("golden");
  const Alphabet& al = golden.alphabet();
  Word mu = al.parse_word("01");
  auto d = d_map(theta(golden, mu));
  REQUIRE(d.has_value());
  CHECK(*d == FreeGroupWord::from_positive(mu));
  CHECK_FALSE(d_map(HullElement::zero(golden)).has_value());
  auto idem = d_map(mul(invert(theta(golden, mu)), theta(golden, mu)));
  REQUIRE(idem.has_value());
  CHECK(idem->identity());
  // d(theta_u theta_v^-1) = u v^-1 reduced.
  HullElement m = mul(theta(golden, al.parse_word("00")), invert(theta(golden, al.parse_word("0"))));
  REQUIRE(!m.is_zero());
  auto g = d_map(m);
  REQUIRE(g.has_value());
  CHECK(g->render(al) == "0");
}

TEST_CASE("randomized chains against the brute-force partial maps") {
  std::mt19937 rng(2024);
  for (const char* name : {"golden", "ex4"}) {
    SubshiftSpec spec = corpus::load_spec(name);
    ShiftAutomaton aut = compile(spec);
    auto gen_words = enumerate_language(aut, 3);
    bool exhaustive = std::string(name) == "golden";
    auto test_words = exhaustive ? oracle::language(spec, 8)
                                 : sample_words(rng, oracle::language(spec, 6), 250);

    for (int trial = 0; trial < 120; ++trial) {
      auto chain = random_chain(rng, gen_words, 4);
      HullElement folded = oracle::fold_chain(aut, chain);
      for (const auto& w : test_words) {
        auto expect = oracle::apply_chain(spec, chain, w);
        ExtWord got = apply_word(folded, w);
        if (expect) {
          REQUIRE(got == ExtWord::word(*expect));
        } else {
          REQUIRE(got.is_zero());
        }
      }
    }
  }
}

TEST_CASE("inverse semigroup axioms on random triples") {
  std::mt19937 rng(4711);
  for (const char* name : {"golden", "ex4", "abc"}) {
    ShiftAutomaton aut = corpus::load(name);
    auto gen_words = enumerate_language(aut, 3);
    auto element = [&](int) {
      auto chain = random_chain(rng, gen_words, 3);
      return oracle::fold_chain(aut, chain);
    };
    for (int trial = 0; trial < 120; ++trial) {
      HullElement a = element(0), b = element(1), c = element(2);
      CHECK(equals(mul(mul(a, b), c), mul(a, mul(b, c))));
      CHECK(equals(mul(a, mul(invert(a), a)), a));
      HullElement e = mul(invert(a), a), f = mul(invert(b), b);
      CHECK(equals(mul(e, f), mul(f, e)));
      // Partial homomorphism of the grading.
      HullElement ab = mul(a, b);
      if (!ab.is_zero()) {
        auto da = d_map(a), db = d_map(b), dab = d_map(ab);
        REQUIRE(dab.has_value());
        CHECK(*dab == da->times(*db));
      }
      // Strong 0-E-unitarity: an element above a nonzero idempotent is one.
      HullElement ae = mul(a, e);
      if (!ae.is_zero() && equals(mul(ae, ae), ae)) CHECK(a.is_idempotent());
    }
  }
}

TEST_CASE("apply distributes over products with zero propagation") {
  std::mt19937 rng(99);
  ShiftAutomaton aut = corpus::load("golden");
  auto gen_words = enumerate_language(aut, 3);
  auto lang = enumerate_language(aut, 7);
  for (int trial = 0; trial < 200; ++trial) {
    HullElement a = oracle::fold_chain(aut, random_chain(rng, gen_words, 3));
    HullElement b = oracle::fold_chain(aut, random_chain(rng, gen_words, 3));
    HullElement ab = mul(a, b);
    for (const auto& w : sample_words(rng, lang, 40)) {
      ExtWord via_b = apply_word(b, w);
      ExtWord lhs = apply_word(ab, w);
      ExtWord rhs = via_b.is_word() ? apply_word(a, via_b.letters()) : ExtWord::zero();
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("equality agrees with graph comparison on words up to 8") {
  std::mt19937 rng(31337);
  SubshiftSpec spec = corpus::load_spec("golden");
  ShiftAutomaton aut = compile(spec);
  auto gen_words = enumerate_language(aut, 3);
  auto lang = enumerate_language(aut, 8);
  auto graph_of = [&](const HullElement& e) {
    std::vector<std::pair<Word, Word>> g;
    for (const auto& w : lang) {
      ExtWord y = apply_word(e, w);
      if (y.is_word()) g.emplace_back(w, y.letters());
    }
    return g;
  };
  for (int trial = 0; trial < 150; ++trial) {
    HullElement a = oracle::fold_chain(aut, random_chain(rng, gen_words, 3));
    HullElement b = oracle::fold_chain(aut, random_chain(rng, gen_words, 3));
    CHECK(equals(a, b) == (graph_of(a) == graph_of(b)));
    CHECK(equals(a, a));
  }
}

TEST_CASE("points transform like words along the string bijection") {
  ShiftAutomaton ex4 = corpus::load("ex4");
  const Alphabet& al = ex4.alphabet();
  HullElement t1 = theta(ex4, al.parse_word("1"));
  EvPeriodicWord x = parse_ev_word(al, "004(1)");
  auto y = apply_point(t1, x);
  REQUIRE(y.has_value());
  CHECK(*y == parse_ev_word(al, "1004(1)"));
  // 2.004(2)... dies: 2004 needs the letter after 4 outside {0,1,3,4}.
  HullElement t2 = theta(ex4, al.parse_word("2"));
  CHECK_FALSE(apply_point(t2, parse_ev_word(al, "004(1)")).has_value());
  CHECK(apply_point(t2, parse_ev_word(al, "004(2)")).has_value());
}
