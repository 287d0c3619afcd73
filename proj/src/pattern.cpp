#include "subshift/pattern.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace subshift {

PatternAtom PatternAtom::one_of(std::vector<Symbol> cs) {
  if (cs.empty()) throw std::invalid_argument("empty letter class in pattern");
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
  return {Kind::OneOf, 0, std::move(cs)};
}

void validate_pattern(const Pattern& p, int alphabet_size) {
  if (p.empty()) throw std::invalid_argument("empty pattern");
  auto check_sym = [&](Symbol a) {
    if (a < 0 || a >= alphabet_size) throw std::invalid_argument("pattern symbol out of range");
  };
  bool can_be_empty = true;
  for (size_t i = 0; i < p.size(); ++i) {
    const auto& at = p[i];
    switch (at.kind) {
      case PatternAtom::Kind::Lit:
      case PatternAtom::Kind::Plus:
        check_sym(at.sym);
        can_be_empty = false;
        break;
      case PatternAtom::Kind::Star:
        check_sym(at.sym);
        break;
      case PatternAtom::Kind::OneOf:
        if (at.choices.empty()) throw std::invalid_argument("empty letter class in pattern");
        for (Symbol a : at.choices) check_sym(a);
        can_be_empty = false;
        break;
      case PatternAtom::Kind::AnySuffix:
        if (i + 1 != p.size()) throw std::invalid_argument("anything-marker must be the final atom");
        break;
    }
  }
  if (can_be_empty)
    throw std::invalid_argument("pattern denotes the empty word");
}

bool pattern_matches(const Pattern& p, const Word& w) {
  // Backtracking over atom/position pairs; patterns are tiny.
  std::function<bool(size_t, size_t)> go = [&](size_t ai, size_t wi) -> bool {
    if (ai == p.size()) return wi == w.size();
    const auto& at = p[ai];
    switch (at.kind) {
      case PatternAtom::Kind::Lit:
        return wi < w.size() && w[wi] == at.sym && go(ai + 1, wi + 1);
      case PatternAtom::Kind::OneOf:
        return wi < w.size() &&
               std::binary_search(at.choices.begin(), at.choices.end(), w[wi]) &&
               go(ai + 1, wi + 1);
      case PatternAtom::Kind::Plus: {
        size_t j = wi;
        while (j < w.size() && w[j] == at.sym) {
          ++j;
          if (go(ai + 1, j)) return true;
        }
        return false;
      }
      case PatternAtom::Kind::Star: {
        size_t j = wi;
        if (go(ai + 1, j)) return true;
        while (j < w.size() && w[j] == at.sym) {
          ++j;
          if (go(ai + 1, j)) return true;
        }
        return false;
      }
      case PatternAtom::Kind::AnySuffix:
        return true;
    }
    return false;
  };
  return go(0, 0);
}

std::string render_pattern(const Pattern& p, const Alphabet& alpha) {
  std::string out;
  bool first = true;
  for (const auto& at : p) {
    if (!first) out += " ";
    first = false;
    switch (at.kind) {
      case PatternAtom::Kind::Lit: out += alpha.symbol(at.sym); break;
      case PatternAtom::Kind::Plus: out += alpha.symbol(at.sym) + "+"; break;
      case PatternAtom::Kind::Star: out += alpha.symbol(at.sym) + "*"; break;
      case PatternAtom::Kind::OneOf: {
        out += "[";
        for (Symbol a : at.choices) out += alpha.symbol(a);
        out += "]";
        break;
      }
      case PatternAtom::Kind::AnySuffix: out += "*"; break;
    }
  }
  return out;
}

}  // namespace subshift
