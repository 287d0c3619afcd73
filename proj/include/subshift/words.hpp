#ifndef SUBSHIFT_WORDS_HPP
#define SUBSHIFT_WORDS_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace subshift {

using Symbol = int;
using Word = std::vector<Symbol>;  // letters index into an Alphabet; length >= 1 where a word is meant

/// Ordered list of distinct single-character tokens.  The order is fixed at
/// construction and defines the length-lex order used everywhere.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string& symbol(Symbol a) const { return symbols_.at(a); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  std::optional<Symbol> index_of(const std::string& tok) const;
  std::optional<Symbol> index_of(char c) const;

  // Words render as the concatenation of their single-character tokens.
  std::string render(const Word& w) const;
  Word parse_word(const std::string& text) const;  // throws on foreign symbol

  bool operator==(const Alphabet& o) const { return symbols_ == o.symbols_; }

 private:
  std::vector<std::string> symbols_;
};

/// Element of the unitized semigroup: Zero, the adjoined unit, or a word.
class ExtWord {
 public:
  enum class Kind { Zero, Unit, Word };

  ExtWord() : kind_(Kind::Unit) {}
  static ExtWord zero() { return ExtWord(Kind::Zero, {}); }
  static ExtWord unit() { return ExtWord(Kind::Unit, {}); }
  static ExtWord word(Word w);

  Kind kind() const { return kind_; }
  bool is_zero() const { return kind_ == Kind::Zero; }
  bool is_unit() const { return kind_ == Kind::Unit; }
  bool is_word() const { return kind_ == Kind::Word; }
  const Word& letters() const;
  int length() const { return is_word() ? static_cast<int>(w_.size()) : 0; }

  bool operator==(const ExtWord& o) const { return kind_ == o.kind_ && w_ == o.w_; }
  bool operator!=(const ExtWord& o) const { return !(*this == o); }

 private:
  ExtWord(Kind k, Word w) : kind_(k), w_(std::move(w)) {}
  Kind kind_;
  Word w_;
};

// Length-lex on words; Unit sorts before all words, Zero after everything.
bool lenlex_less(const Word& a, const Word& b);
bool extword_less(const ExtWord& a, const ExtWord& b);

/// Eventually periodic infinite word, stored canonically: the period is
/// primitive and the preperiod is minimal (its last letter differs from the
/// matching rotation of the period).  Canonical form is unique per infinite
/// word, so equality is field comparison.
class EvPeriodicWord {
 public:
  EvPeriodicWord(Word preperiod, Word period);

  const Word& preperiod() const { return pre_; }
  const Word& period() const { return per_; }

  Symbol letter_at(std::int64_t i) const;   // 0-based position
  Word prefix(int n) const;
  EvPeriodicWord shifted(int n = 1) const;  // drop the first n letters
  EvPeriodicWord prepend(Symbol a) const;

  bool operator==(const EvPeriodicWord& o) const {
    return pre_ == o.pre_ && per_ == o.per_;
  }
  bool operator!=(const EvPeriodicWord& o) const { return !(*this == o); }
  bool operator<(const EvPeriodicWord& o) const;

 private:
  Word pre_;
  Word per_;
};

bool is_prefix(const Word& p, const Word& w);

/// Reduced word over the free group on the alphabet.  Letters are stored as
/// +(a+1) for a generator and -(a+1) for its inverse; the empty sequence is
/// the group identity.
class FreeGroupWord {
 public:
  FreeGroupWord() = default;

  static FreeGroupWord generator(Symbol a) { return FreeGroupWord({a + 1}); }
  static FreeGroupWord from_positive(const Word& u);
  // Free reduction of an arbitrary letter sequence; idempotent.
  static FreeGroupWord reduce(const std::vector<int>& letters);

  bool identity() const { return letters_.empty(); }
  int length() const { return static_cast<int>(letters_.size()); }
  const std::vector<int>& letters() const { return letters_; }

  FreeGroupWord inverse() const;
  FreeGroupWord times(const FreeGroupWord& o) const;

  // True when the reduced word has the shape u v^-1 with u, v positive words.
  bool is_positive_negative() const;
  std::pair<Word, Word> positive_negative_parts() const;  // requires the shape above

  bool operator==(const FreeGroupWord& o) const { return letters_ == o.letters_; }
  bool operator!=(const FreeGroupWord& o) const { return !(*this == o); }
  bool operator<(const FreeGroupWord& o) const { return letters_ < o.letters_; }

  std::string render(const Alphabet& alpha) const;

 private:
  explicit FreeGroupWord(std::vector<int> letters) : letters_(std::move(letters)) {}
  std::vector<int> letters_;
};

}  // namespace subshift

#endif
