#include "subshift/report.hpp"

namespace subshift {

std::string card_name(Card c) {
  switch (c) {
    case Card::Empty: return "Empty";
    case Card::Finite: return "Finite";
    case Card::Infinite: return "Infinite";
  }
  return "?";
}

Json words_json(const Alphabet& alpha, const std::vector<Word>& words, int limit) {
  Json arr = Json::array();
  int n = 0;
  for (const auto& w : words) {
    if (n++ >= limit) break;
    arr.push_back(alpha.render(w));
  }
  return arr;
}

Json describe_set(const RegularSet& s, int limit) {
  Json out;
  out["cardinality"] = card_name(s.card.kind);
  if (s.card.kind == Card::Finite) {
    out["size"] = s.card.words.size();
    out["words"] = words_json(s.aut->alphabet(), s.card.words, limit);
    out["truncated"] = static_cast<int>(s.card.words.size()) > limit;
  } else if (s.card.kind == Card::Infinite) {
    auto sample = dfa_enumerate_limited(s.dfa, 20, limit);
    out["sample_up_to_length_20"] = words_json(s.aut->alphabet(), sample, limit);
    out["truncated"] = true;
  }
  return out;
}

namespace {

void render_rec(const Json& j, int depth, std::string& out) {
  std::string pad(2 * depth, ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                     (it.value().front().is_object() || it.value().front().is_array()))) {
        out += pad + it.key() + ":\n";
        render_rec(it.value(), depth + 1, out);
      } else {
        out += pad + it.key() + ": " + (it.value().is_string() ? it.value().get<std::string>()
                                                               : it.value().dump()) + "\n";
      }
    }
  } else if (j.is_array()) {
    int idx = 0;
    for (const auto& item : j) {
      if (item.is_object() || item.is_array()) {
        out += pad + "- [" + std::to_string(idx++) + "]\n";
        render_rec(item, depth + 1, out);
      } else {
        out += pad + "- " + (item.is_string() ? item.get<std::string>() : item.dump()) + "\n";
      }
    }
  } else {
    out += pad + j.dump() + "\n";
  }
}

}  // namespace

std::string render_human(const Json& j) {
  std::string out;
  render_rec(j, 0, out);
  return out;
}

}  // namespace subshift
