#ifndef SUBSHIFT_DFA_HPP
#define SUBSHIFT_DFA_HPP

#include <string>
#include <vector>

#include "subshift/words.hpp"

namespace subshift {

/// Deterministic partial automaton over symbol indices 0..nsym-1.
/// A missing transition (-1) is an implicit non-accepting sink.
struct Dfa {
  int nsym = 0;
  int start = 0;
  std::vector<std::vector<int>> next;  // next[s][a] in [0,n) or -1
  std::vector<char> accept;

  int size() const { return static_cast<int>(next.size()); }
  int add_state(bool acc);
  int step(int s, Symbol a) const { return s < 0 ? -1 : next[s][a]; }
  int run(const Word& w) const;  // -1 once dead
  bool accepts(const Word& w) const;
};

enum class Card { Empty, Finite, Infinite };

struct Cardinality {
  Card kind = Card::Empty;
  std::vector<Word> words;  // explicit list in length-lex order when Finite
};

// Keep only states reachable from the start.
Dfa trim(const Dfa& d);

// All set languages here are languages of nonempty words.  This strips
// acceptance of the empty word by splitting the start state when needed, so
// emptiness and equivalence checks see only genuine words.
Dfa drop_epsilon(const Dfa& d);

enum class BoolOp { And, Or, Diff, SymDiff };

Dfa product(const Dfa& a, const Dfa& b, BoolOp op);

bool dfa_is_empty(const Dfa& d);
Cardinality classify(const Dfa& d);
bool dfa_equivalent(const Dfa& a, const Dfa& b);
bool dfa_subset(const Dfa& a, const Dfa& b);

// All accepted words of length <= maxlen, in length-lex order.
std::vector<Word> dfa_enumerate(const Dfa& d, int maxlen);
// Length-lex prefix of the language: stops after max_count words.
std::vector<Word> dfa_enumerate_limited(const Dfa& d, int maxlen, int max_count);
// Count of accepted words per length 1..maxlen.
std::vector<long long> dfa_counts(const Dfa& d, int maxlen);

Dfa dfa_minimize(const Dfa& d);
// Identical strings exactly for language-equal automata.
std::string dfa_canonical_key(const Dfa& d);

// Shortest accepted word in length-lex order, if any.
std::vector<Word> dfa_shortest_witness(const Dfa& d);

}  // namespace subshift

#endif
