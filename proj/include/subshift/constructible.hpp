#ifndef SUBSHIFT_CONSTRUCTIBLE_HPP
#define SUBSHIFT_CONSTRUCTIBLE_HPP

#include <vector>

#include "subshift/automaton.hpp"
#include "subshift/lattice.hpp"

namespace subshift {

/// A regular subset of the language, with its cardinality class decided at
/// construction.  Holds a non-owning reference to the automaton; keep the
/// automaton alive for as long as the set is used.
struct RegularSet {
  const ShiftAutomaton* aut = nullptr;
  Dfa dfa;  // language contained in L_X, empty word excluded
  Cardinality card;

  bool contains(const Word& w) const { return dfa.accepts(w); }
  std::vector<Word> enumerate(int maxlen) const { return dfa_enumerate(dfa, maxlen); }
};

// Wrap a raw acceptor: intersect with the language, trim, classify.
RegularSet make_regular(const ShiftAutomaton& aut, Dfa raw);
RegularSet regular_from_words(const ShiftAutomaton& aut, const std::vector<Word>& words);
RegularSet whole_language(const ShiftAutomaton& aut);

RegularSet rs_intersect(const RegularSet& a, const RegularSet& b);
RegularSet rs_union(const RegularSet& a, const RegularSet& b);
RegularSet rs_diff(const RegularSet& a, const RegularSet& b);
RegularSet rs_symdiff(const RegularSet& a, const RegularSet& b);
RegularSet rs_complement(const RegularSet& a);  // within the language
bool rs_equal(const RegularSet& a, const RegularSet& b);
bool rs_subset(const RegularSet& a, const RegularSet& b);

/// Finite set of nonzero extended words; the Lambda of a normal form.
using WordSetLambda = std::vector<ExtWord>;
// Sorted, deduplicated; throws on a Zero member.
WordSetLambda normalize_lambda(WordSetLambda lambda);

// F_t: everything t extends by.  F of the unit is the whole language; a word
// outside the language has an empty follower set.
RegularSet follower(const ShiftAutomaton& aut, const ExtWord& t);

// { s : ts != 0 for all t in Lambda, rs = 0 for all r in Gamma }.
RegularSet f_lambda(const ShiftAutomaton& aut, const WordSetLambda& lambda);
RegularSet f_lambda_gamma(const ShiftAutomaton& aut, const WordSetLambda& lambda,
                          const WordSetLambda& gamma);

// E_mu = mu . F_mu; requires mu in the language.
RegularSet e_set(const ShiftAutomaton& aut, const Word& mu);

// The set u . F_Lambda as a plain regular set (u a word or the unit).
RegularSet shifted_follower(const ShiftAutomaton& aut, const ExtWord& u, int lattice_elem);

/// Presentation u F_Lambda with u in Lambda.  The cached set is the honest
/// language of the presentation; `empty` flags a degenerate one.
struct ConstructibleSet {
  ExtWord u;
  WordSetLambda lambda;
  int f_class = -1;  // lattice element of F_Lambda
  RegularSet set;
  bool empty = true;
};

// Throws when u is not a member of Lambda or Lambda has no word at all
// (the bare-unit presentation is reserved for the hull identity).
ConstructibleSet make_constructible(const ShiftAutomaton& aut, const ExtWord& u,
                                    const WordSetLambda& lambda);

// interior = elements extendable by one letter inside the set; boundary is
// the rest.  The one-letter test is equivalent to arbitrary extensions
// because follower sets are prefix-hereditary.
std::pair<RegularSet, RegularSet> interior_boundary(const ConstructibleSet& x);
// Same split for any regular set (used on lattice classes directly).
std::pair<RegularSet, RegularSet> interior_boundary_of(const RegularSet& x);

// Lattice element reached by a Lambda; empty element when some member kills it.
int lattice_class_of(const ShiftAutomaton& aut, const WordSetLambda& lambda);

}  // namespace subshift

#endif
