#include "subshift/setexpr.hpp"

#include <stdexcept>

namespace subshift {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

ExtWord parse_term(const Alphabet& alpha, const std::string& tok) {
  if (tok.empty()) throw std::invalid_argument("empty term");
  if (tok == "_") return ExtWord::unit();
  if (tok == "1" && !alpha.index_of('1')) return ExtWord::unit();
  return ExtWord::word(alpha.parse_word(tok));
}

WordSetLambda parse_terms(const Alphabet& alpha, const std::string& csv) {
  WordSetLambda out;
  for (const auto& tok : split(csv, ','))
    if (!tok.empty()) out.push_back(parse_term(alpha, tok));
  if (out.empty()) throw std::invalid_argument("empty term list");
  return normalize_lambda(out);
}

EvPeriodicWord parse_ev_word(const Alphabet& alpha, const std::string& text) {
  size_t open = text.find('(');
  size_t close = text.find(')');
  if (open == std::string::npos || close == std::string::npos || close < open || close + 1 != text.size())
    throw std::invalid_argument("expected pre(period)");
  std::string pre = text.substr(0, open);
  std::string per = text.substr(open + 1, close - open - 1);
  if (per.empty()) throw std::invalid_argument("empty period");
  Word pre_w;
  if (!pre.empty()) pre_w = alpha.parse_word(pre);
  return EvPeriodicWord(pre_w, alpha.parse_word(per));
}

RegularSet parse_set_expr(const ShiftAutomaton& aut, const std::string& expr) {
  const Alphabet& alpha = aut.alphabet();
  if (expr.rfind("F:", 0) == 0) {
    std::string body = expr.substr(2);
    auto parts = split(body, '/');
    if (parts.size() > 2) throw std::invalid_argument("too many '/' in set expression");
    WordSetLambda lambda = parse_terms(alpha, parts[0]);
    if (parts.size() == 2) {
      WordSetLambda gamma = parse_terms(alpha, parts[1]);
      return f_lambda_gamma(aut, lambda, gamma);
    }
    return f_lambda(aut, lambda);
  }
  if (expr.rfind("E:", 0) == 0) {
    ExtWord t = parse_term(alpha, expr.substr(2));
    if (!t.is_word()) throw std::invalid_argument("E: needs a word");
    return e_set(aut, t.letters());
  }
  if (expr.rfind("C:", 0) == 0) {
    return parse_constructible_expr(aut, expr).set;
  }
  throw std::invalid_argument("cannot read set expression '" + expr + "'");
}

ConstructibleSet parse_constructible_expr(const ShiftAutomaton& aut, const std::string& expr) {
  const Alphabet& alpha = aut.alphabet();
  if (expr.rfind("F:", 0) == 0) {
    std::string body = expr.substr(2);
    if (body.find('/') != std::string::npos)
      throw std::invalid_argument("a follower set with Gamma is not constructible");
    WordSetLambda lambda = parse_terms(alpha, body);
    lambda.push_back(ExtWord::unit());
    return make_constructible(aut, ExtWord::unit(), normalize_lambda(lambda));
  }
  if (expr.rfind("E:", 0) == 0) {
    ExtWord t = parse_term(alpha, expr.substr(2));
    if (!t.is_word()) throw std::invalid_argument("E: needs a word");
    return make_constructible(aut, t, {t});
  }
  if (expr.rfind("C:", 0) == 0) {
    std::string body = expr.substr(2);
    auto parts = split(body, '|');
    if (parts.size() != 2) throw std::invalid_argument("C: needs u|terms");
    ExtWord u = parse_term(alpha, parts[0]);
    WordSetLambda lambda = parse_terms(alpha, parts[1]);
    lambda.push_back(u);  // the prefix joins Lambda, keeping the normal form
    return make_constructible(aut, u, normalize_lambda(lambda));
  }
  throw std::invalid_argument("cannot read constructible expression '" + expr + "'");
}

HullElement parse_hull_expr(const ShiftAutomaton& aut, const std::string& expr_in) {
  std::string expr = expr_in;
  bool inverted = false;
  if (!expr.empty() && expr[0] == '~') {
    inverted = true;
    expr = expr.substr(1);
  }
  HullElement e = HullElement::zero(aut);
  if (expr == "id") {
    e = HullElement::identity(aut);
  } else if (expr == "0") {
    e = HullElement::zero(aut);
  } else if (expr.rfind("th:", 0) == 0) {
    ExtWord w = parse_term(aut.alphabet(), expr.substr(3));
    if (!w.is_word()) throw std::invalid_argument("th: needs a word");
    e = theta(aut, w.letters());
  } else if (expr.rfind("nf:", 0) == 0) {
    auto parts = split(expr.substr(3), '|');
    if (parts.size() != 3) throw std::invalid_argument("nf: needs u|terms|v");
    ExtWord u = parse_term(aut.alphabet(), parts[0]);
    ExtWord v = parse_term(aut.alphabet(), parts[2]);
    WordSetLambda lambda = parse_terms(aut.alphabet(), parts[1]);
    lambda.push_back(u);
    lambda.push_back(v);
    e = HullElement::make(aut, u, normalize_lambda(lambda), v);
  } else {
    throw std::invalid_argument("cannot read hull expression '" + expr_in + "'");
  }
  return inverted ? invert(e) : e;
}

Character parse_char_expr(const ShiftAutomaton& aut, const std::string& expr) {
  if (expr.rfind("str:", 0) == 0) {
    std::string body = expr.substr(4);
    if (body.find('(') != std::string::npos)
      return Character::of_string(StringPoint::of(aut, parse_ev_word(aut.alphabet(), body)));
    return Character::of_string(StringPoint::of(aut, aut.alphabet().parse_word(body)));
  }
  if (expr.rfind("ultra:", 0) == 0)
    return Character::principal_ultra(aut, parse_constructible_expr(aut, expr.substr(6)));
  throw std::invalid_argument("cannot read character expression '" + expr + "'");
}

std::string render_term(const Alphabet& alpha, const ExtWord& w) {
  switch (w.kind()) {
    case ExtWord::Kind::Zero: return "0";
    case ExtWord::Kind::Unit: return alpha.index_of('1') ? "_" : "1";
    default: return alpha.render(w.letters());
  }
}

std::string render_ev_word(const Alphabet& alpha, const EvPeriodicWord& w) {
  return alpha.render(w.preperiod()) + "(" + alpha.render(w.period()) + ")";
}

}  // namespace subshift
