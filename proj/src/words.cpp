#include "subshift/words.hpp"

#include <algorithm>
#include <unordered_set>

namespace subshift {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet must be nonempty");
  std::unordered_set<std::string> seen;
  for (const auto& s : symbols_) {
    if (s.size() != 1) throw std::invalid_argument("alphabet symbols must be single characters");
    if (!seen.insert(s).second) throw std::invalid_argument("duplicate alphabet symbol: " + s);
  }
}

std::optional<Symbol> Alphabet::index_of(const std::string& tok) const {
  for (int i = 0; i < size(); ++i)
    if (symbols_[i] == tok) return i;
  return std::nullopt;
}

std::optional<Symbol> Alphabet::index_of(char c) const {
  return index_of(std::string(1, c));
}

std::string Alphabet::render(const Word& w) const {
  std::string out;
  for (Symbol a : w) out += symbol(a);
  return out;
}

Word Alphabet::parse_word(const std::string& text) const {
  Word w;
  for (char c : text) {
    auto a = index_of(c);
    if (!a) throw std::invalid_argument(std::string("foreign symbol '") + c + "'");
    w.push_back(*a);
  }
  if (w.empty()) throw std::invalid_argument("empty word");
  return w;
}

ExtWord ExtWord::word(Word w) {
  if (w.empty()) throw std::invalid_argument("ExtWord::word requires length >= 1");
  return ExtWord(Kind::Word, std::move(w));
}

const Word& ExtWord::letters() const {
  if (!is_word()) throw std::logic_error("letters() on non-word ExtWord");
  return w_;
}

bool lenlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

bool extword_less(const ExtWord& a, const ExtWord& b) {
  auto rank = [](const ExtWord& e) {
    switch (e.kind()) {
      case ExtWord::Kind::Unit: return 0;
      case ExtWord::Kind::Word: return 1;
      default: return 2;
    }
  };
  if (rank(a) != rank(b)) return rank(a) < rank(b);
  if (a.is_word() && b.is_word()) return lenlex_less(a.letters(), b.letters());
  return false;
}

namespace {

// Smallest d dividing n such that w is a repetition of its first d letters.
int primitive_root_length(const Word& w) {
  int n = static_cast<int>(w.size());
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool ok = true;
    for (int i = d; i < n && ok; ++i) ok = (w[i] == w[i - d]);
    if (ok) return d;
  }
  return n;
}

}  // namespace

EvPeriodicWord::EvPeriodicWord(Word preperiod, Word period)
    : pre_(std::move(preperiod)), per_(std::move(period)) {
  if (per_.empty()) throw std::invalid_argument("period must be nonempty");
  int d = primitive_root_length(per_);
  per_.resize(d);
  // Absorb a preperiod tail that already matches the periodic part.
  while (!pre_.empty() && pre_.back() == per_.back()) {
    pre_.pop_back();
    std::rotate(per_.begin(), per_.end() - 1, per_.end());
  }
}

Symbol EvPeriodicWord::letter_at(std::int64_t i) const {
  std::int64_t p = static_cast<std::int64_t>(pre_.size());
  if (i < p) return pre_[static_cast<size_t>(i)];
  return per_[static_cast<size_t>((i - p) % static_cast<std::int64_t>(per_.size()))];
}

Word EvPeriodicWord::prefix(int n) const {
  Word w;
  w.reserve(n);
  for (int i = 0; i < n; ++i) w.push_back(letter_at(i));
  return w;
}

EvPeriodicWord EvPeriodicWord::shifted(int n) const {
  if (n < 0) throw std::invalid_argument("negative shift");
  Word pre = pre_;
  Word per = per_;
  for (int i = 0; i < n; ++i) {
    if (!pre.empty()) {
      pre.erase(pre.begin());
    } else {
      std::rotate(per.begin(), per.begin() + 1, per.end());
    }
  }
  return EvPeriodicWord(std::move(pre), std::move(per));
}

EvPeriodicWord EvPeriodicWord::prepend(Symbol a) const {
  Word pre = pre_;
  pre.insert(pre.begin(), a);
  return EvPeriodicWord(std::move(pre), per_);
}

bool EvPeriodicWord::operator<(const EvPeriodicWord& o) const {
  if (pre_ != o.pre_) return lenlex_less(pre_, o.pre_);
  return lenlex_less(per_, o.per_);
}

bool is_prefix(const Word& p, const Word& w) {
  if (p.size() > w.size()) return false;
  return std::equal(p.begin(), p.end(), w.begin());
}

FreeGroupWord FreeGroupWord::from_positive(const Word& u) {
  std::vector<int> ls;
  ls.reserve(u.size());
  for (Symbol a : u) ls.push_back(a + 1);
  return FreeGroupWord(std::move(ls));
}

FreeGroupWord FreeGroupWord::reduce(const std::vector<int>& letters) {
  std::vector<int> stack;
  for (int l : letters) {
    if (l == 0) throw std::invalid_argument("0 is not a free group letter");
    if (!stack.empty() && stack.back() == -l)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return FreeGroupWord(std::move(stack));
}

FreeGroupWord FreeGroupWord::inverse() const {
  std::vector<int> ls(letters_.rbegin(), letters_.rend());
  for (int& l : ls) l = -l;
  return FreeGroupWord(std::move(ls));
}

FreeGroupWord FreeGroupWord::times(const FreeGroupWord& o) const {
  std::vector<int> ls = letters_;
  ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
  return reduce(ls);
}

bool FreeGroupWord::is_positive_negative() const {
  bool seen_negative = false;
  for (int l : letters_) {
    if (l < 0) seen_negative = true;
    else if (seen_negative) return false;
  }
  return true;
}

std::pair<Word, Word> FreeGroupWord::positive_negative_parts() const {
  if (!is_positive_negative()) throw std::logic_error("not of the form u v^-1");
  Word u, v;
  for (int l : letters_) {
    if (l > 0) u.push_back(l - 1);
    else v.push_back(-l - 1);
  }
  std::reverse(v.begin(), v.end());
  return {u, v};
}

std::string FreeGroupWord::render(const Alphabet& alpha) const {
  if (letters_.empty()) return "1";
  std::string out;
  for (int l : letters_) {
    out += alpha.symbol(std::abs(l) - 1);
    if (l < 0) out += "'";
  }
  return out;
}

}  // namespace subshift
