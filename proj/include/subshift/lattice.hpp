#ifndef SUBSHIFT_LATTICE_HPP
#define SUBSHIFT_LATTICE_HPP

#include <vector>

#include "subshift/dfa.hpp"
#include "subshift/words.hpp"

namespace subshift {

/// One class of the follower-intersection lattice: the language
/// F_S = { s : the run of s from every state of S survives and ends live },
/// deduplicated up to language equality.
struct LatticeElem {
  std::vector<int> class_bits;   // single-class indices whose meet this is
  Dfa lang;                      // trimmed acceptor of F_S
  Cardinality card;
  std::vector<ExtWord> rep;      // witness Lambda: Unit / shortest word per class
  bool word_rep = false;         // rep contains an actual word
};

/// The finitely many follower languages of an automaton and their meets.
/// Follower sets depend on a word only through the state it reaches, so the
/// single-state languages generate everything under intersection.
struct FollowerLattice {
  int nclasses = 0;                    // distinct single-state follower languages
  std::vector<int> state_class;        // automaton state -> class, -1 when follower is empty
  std::vector<int> class_rep_state;    // class -> representative state
  std::vector<ExtWord> class_rep_word; // class -> Unit or a shortest word reaching it

  std::vector<LatticeElem> elems;
  std::vector<int> mask_to_elem;       // meet of a class subset -> elem id
  int empty_elem = -1;                 // the empty language
  int full_elem = -1;                  // the whole language (follower of the unit)

  int elem_of_mask(unsigned mask) const;
  int elem_of_states(const std::vector<int>& states) const;  // -> empty_elem when any follower dies
  int meet(int x, int y) const;
  unsigned mask_of(int elem) const;
  const LatticeElem& at(int id) const { return elems.at(id); }
  int size() const { return static_cast<int>(elems.size()); }
};

FollowerLattice build_lattice(const Dfa& graph, const std::vector<char>& live);

// Acceptor of F_S for a raw state set (all runs survive and end live).
Dfa follower_dfa(const Dfa& graph, const std::vector<char>& live, const std::vector<int>& states);

}  // namespace subshift

#endif
