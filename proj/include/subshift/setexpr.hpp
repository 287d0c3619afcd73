#ifndef SUBSHIFT_SETEXPR_HPP
#define SUBSHIFT_SETEXPR_HPP

#include <string>

#include "subshift/hull.hpp"
#include "subshift/strings.hpp"

namespace subshift {

// Textual syntax for the objects the commands work on.
//
//   terms      words over the alphabet symbols; the unit is spelled "1"
//              whenever "1" is not itself an alphabet symbol, and "_" always
//              works (needed for alphabets containing the symbol 1)
//   sets       F:t1,t2        follower set of a finite word set
//              F:t1,t2/r1,r2  followers of Lambda avoiding every r
//              E:a            range of a letter
//              C:u|t1,t2      u F_Lambda with u adjoined to Lambda
//   hull       th:w           generator theta_w
//              id             the identity map on the language
//              nf:u|t1,t2|v   normal form theta_u f_Lambda theta_v^-1
//              a leading ~ inverts any of the above
//   character  str:w          finite-string character
//              str:p(q)       eventually periodic word p q q q ...
//              ultra:SET      principal ultrafilter of a minimal finite set
//   points     p(q) as above, p possibly empty

ExtWord parse_term(const Alphabet& alpha, const std::string& tok);
WordSetLambda parse_terms(const Alphabet& alpha, const std::string& csv);
EvPeriodicWord parse_ev_word(const Alphabet& alpha, const std::string& text);

RegularSet parse_set_expr(const ShiftAutomaton& aut, const std::string& expr);
ConstructibleSet parse_constructible_expr(const ShiftAutomaton& aut, const std::string& expr);
HullElement parse_hull_expr(const ShiftAutomaton& aut, const std::string& expr);
Character parse_char_expr(const ShiftAutomaton& aut, const std::string& expr);

std::string render_term(const Alphabet& alpha, const ExtWord& w);
std::string render_ev_word(const Alphabet& alpha, const EvPeriodicWord& w);

}  // namespace subshift

#endif
