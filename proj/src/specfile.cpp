#include "subshift/specfile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace subshift {

namespace {

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::invalid_argument("line " + std::to_string(line) + ": " + what);
}

PatternAtom parse_atom(const Alphabet& alpha, const std::string& tok, int line) {
  if (tok == "*") return PatternAtom::any_suffix();
  if (tok.size() >= 2 && tok.front() == '[' && tok.back() == ']') {
    std::vector<Symbol> cs;
    for (size_t i = 1; i + 1 < tok.size(); ++i) {
      if (tok[i] == ' ') continue;
      auto a = alpha.index_of(tok[i]);
      if (!a) fail(line, std::string("unknown symbol '") + tok[i] + "' in class");
      cs.push_back(*a);
    }
    if (cs.empty()) fail(line, "empty symbol class");
    return PatternAtom::one_of(cs);
  }
  if (tok.size() == 2 && (tok[1] == '+' || tok[1] == '*')) {
    auto a = alpha.index_of(tok[0]);
    if (!a) fail(line, std::string("unknown symbol '") + tok[0] + "'");
    return tok[1] == '+' ? PatternAtom::plus(*a) : PatternAtom::star(*a);
  }
  if (tok.size() == 1) {
    auto a = alpha.index_of(tok[0]);
    if (!a) fail(line, std::string("unknown symbol '") + tok[0] + "'");
    return PatternAtom::lit(*a);
  }
  fail(line, "cannot read atom '" + tok + "'");
}

}  // namespace

SubshiftSpec parse_spec_text(const std::string& text) {
  SubshiftSpec spec;
  bool have_alphabet = false;
  std::vector<std::pair<int, std::string>> forbidden_lines;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos) fail(lineno, "expected 'key: value'");
    std::string key = strip(line.substr(0, colon));
    std::string value = strip(line.substr(colon + 1));
    if (key == "name") {
      spec.name = value;
    } else if (key == "alphabet") {
      std::vector<std::string> syms = split_ws(value);
      if (syms.empty()) fail(lineno, "empty alphabet");
      spec.alphabet = Alphabet(syms);
      have_alphabet = true;
    } else if (key == "forbidden") {
      forbidden_lines.emplace_back(lineno, value);
    } else if (key == "notes") {
      spec.notes = value;
    } else {
      fail(lineno, "unknown key '" + key + "'");
    }
  }
  if (!have_alphabet) throw std::invalid_argument("missing alphabet");
  for (auto& [ln, value] : forbidden_lines) {
    Pattern p;
    for (const auto& tok : split_ws(value)) p.push_back(parse_atom(spec.alphabet, tok, ln));
    if (p.empty()) fail(ln, "empty forbidden pattern");
    size_t star = 0;
    for (size_t i = 0; i < p.size(); ++i)
      if (p[i].kind == PatternAtom::Kind::AnySuffix) {
        ++star;
        if (i + 1 != p.size()) fail(ln, "anything-marker must be last");
      }
    if (star > 1) fail(ln, "at most one anything-marker");
    validate_pattern(p, spec.alphabet.size());
    spec.forbidden.push_back(std::move(p));
  }
  return spec;
}

SubshiftSpec parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_spec_text(buf.str());
}

std::string serialize_spec(const SubshiftSpec& spec) {
  std::string out;
  out += "name: " + spec.name + "\n";
  out += "alphabet:";
  for (const auto& s : spec.alphabet.symbols()) out += " " + s;
  out += "\n";
  for (const auto& p : spec.forbidden) out += "forbidden: " + render_pattern(p, spec.alphabet) + "\n";
  if (!spec.notes.empty()) out += "notes: " + spec.notes + "\n";
  return out;
}

}  // namespace subshift
