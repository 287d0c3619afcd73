#ifndef SUBSHIFT_SPECFILE_HPP
#define SUBSHIFT_SPECFILE_HPP

#include <string>

#include "subshift/pattern.hpp"

namespace subshift {

// Presentation file format, one key per line:
//   name: golden-mean
//   alphabet: 0 1
//   forbidden: 1 1
//   forbidden: 1 0+ 4 [0234]
//   notes: optional free text
// Atom tokens: a literal symbol, sym+, sym*, [symbols], and a bare * as the
// trailing anything-marker.  '#' starts a comment line.
SubshiftSpec parse_spec_text(const std::string& text);
SubshiftSpec parse_spec_file(const std::string& path);

// Canonical rendering; parse(serialize(parse(x))) == parse(x) and the bytes
// of serialize are stable.
std::string serialize_spec(const SubshiftSpec& spec);

}  // namespace subshift

#endif
