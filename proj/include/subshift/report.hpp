#ifndef SUBSHIFT_REPORT_HPP
#define SUBSHIFT_REPORT_HPP

#include <string>

#include <json.hpp>

#include "subshift/constructible.hpp"

namespace subshift {

// Reports keep insertion order so machine output is byte-stable.
using Json = nlohmann::ordered_json;

std::string card_name(Card c);

// Cardinality block with a witness list truncated at `limit` words; the
// infinitude verdict always comes from the automaton, never from the list.
Json describe_set(const RegularSet& s, int limit);

Json words_json(const Alphabet& alpha, const std::vector<Word>& words, int limit);

// Indented human rendering of the same content.
std::string render_human(const Json& j);

}  // namespace subshift

#endif
