// Command line front end: loads a presentation file and answers language,
// hull, character, cover, tightness, groupoid and matrix questions with
// deterministic reports (text by default, machine JSON with --json).

#include <CLI11.hpp>

#include <iostream>
#include <random>

#include "subshift/matrix.hpp"
#include "subshift/report.hpp"
#include "subshift/setexpr.hpp"
#include "subshift/specfile.hpp"
#include "subshift/tightness.hpp"

using namespace subshift;

namespace {

struct Ctx {
  std::string spec_path;
  bool json = false;
  int limit = 40;
};

void emit(const Ctx& ctx, Json& out) {
  if (ctx.json)
    std::cout << out.dump(2) << "\n";
  else
    std::cout << render_human(out);
}

ShiftAutomaton load(const Ctx& ctx) {
  if (ctx.spec_path.empty()) throw std::invalid_argument("--spec is required");
  return compile(parse_spec_file(ctx.spec_path));
}

std::vector<std::string> split_list(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Json lambda_json(const Alphabet& alpha, const WordSetLambda& lambda) {
  Json arr = Json::array();
  for (const auto& t : lambda) arr.push_back(render_term(alpha, t));
  return arr;
}

// ---- command bodies ----------------------------------------------------

int cmd_lang(const Ctx& ctx, int max_len, bool count_only) {
  ShiftAutomaton aut = load(ctx);
  Json out;
  out["command"] = "lang";
  out["spec"] = aut.spec.name;
  out["max_len"] = max_len;
  if (count_only) {
    Json counts = Json::array();
    for (long long c : language_counts(aut, max_len)) counts.push_back(c);
    out["counts_per_length"] = counts;
  } else {
    auto words = dfa_enumerate_limited(aut.graph, max_len, ctx.limit);
    out["words"] = words_json(aut.alphabet(), words, ctx.limit);
    auto counts = language_counts(aut, max_len);
    long long total = 0;
    for (long long c : counts) total += c;
    out["total"] = total;
    out["truncated"] = total > ctx.limit;
  }
  emit(ctx, out);
  return 0;
}

int cmd_mul(const Ctx& ctx, const std::string& left, const std::string& right) {
  ShiftAutomaton aut = load(ctx);
  ExtWord l = parse_term(aut.alphabet(), left);
  ExtWord r = parse_term(aut.alphabet(), right);
  Json out;
  out["command"] = "mul";
  out["left"] = render_term(aut.alphabet(), l);
  out["right"] = render_term(aut.alphabet(), r);
  out["product"] = render_term(aut.alphabet(), sx_mul(aut, l, r));
  emit(ctx, out);
  return 0;
}

int cmd_follower(const Ctx& ctx, const std::string& lambda_s, const std::string& gamma_s,
                 bool boundary) {
  ShiftAutomaton aut = load(ctx);
  WordSetLambda lambda = parse_terms(aut.alphabet(), lambda_s);
  Json out;
  out["command"] = "follower";
  out["spec"] = aut.spec.name;
  out["lambda"] = lambda_json(aut.alphabet(), lambda);
  RegularSet f;
  if (!gamma_s.empty()) {
    WordSetLambda gamma = parse_terms(aut.alphabet(), gamma_s);
    out["gamma"] = lambda_json(aut.alphabet(), gamma);
    f = f_lambda_gamma(aut, lambda, gamma);
  } else {
    f = f_lambda(aut, lambda);
  }
  out["set"] = describe_set(f, ctx.limit);
  if (boundary) {
    auto [interior, bd] = interior_boundary_of(f);
    out["interior"] = describe_set(interior, ctx.limit);
    out["boundary"] = describe_set(bd, ctx.limit);
  }
  emit(ctx, out);
  return 0;
}

Json hull_json(const Alphabet& alpha, const HullElement& e) {
  Json out;
  if (e.is_zero()) {
    out["zero"] = true;
    return out;
  }
  out["zero"] = false;
  out["u"] = render_term(alpha, e.u());
  out["lambda"] = lambda_json(alpha, e.lambda());
  out["v"] = render_term(alpha, e.v());
  out["idempotent"] = e.is_idempotent();
  auto d = d_map(e);
  out["d"] = d ? d->render(alpha) : "0";
  return out;
}

int cmd_hull_mul(const Ctx& ctx, const std::string& a_s, const std::string& b_s) {
  ShiftAutomaton aut = load(ctx);
  HullElement a = parse_hull_expr(aut, a_s);
  HullElement b = parse_hull_expr(aut, b_s);
  Json out;
  out["command"] = "hull-mul";
  out["a"] = hull_json(aut.alphabet(), a);
  out["b"] = hull_json(aut.alphabet(), b);
  out["product"] = hull_json(aut.alphabet(), mul(a, b));
  emit(ctx, out);
  return 0;
}

int cmd_hull_eq(const Ctx& ctx, const std::string& a_s, const std::string& b_s) {
  ShiftAutomaton aut = load(ctx);
  HullElement a = parse_hull_expr(aut, a_s);
  HullElement b = parse_hull_expr(aut, b_s);
  Json out;
  out["command"] = "hull-eq";
  out["a"] = hull_json(aut.alphabet(), a);
  out["b"] = hull_json(aut.alphabet(), b);
  out["equal"] = equals(a, b);
  emit(ctx, out);
  return 0;
}

int cmd_char_eval(const Ctx& ctx, const std::string& char_s, const std::string& set_s) {
  ShiftAutomaton aut = load(ctx);
  Character c = parse_char_expr(aut, char_s);
  ConstructibleSet x = parse_constructible_expr(aut, set_s);
  Json out;
  out["command"] = "char-eval";
  out["character"] = char_s;
  out["set"] = set_s;
  out["value"] = char_eval(aut, c, x);
  emit(ctx, out);
  return 0;
}

int cmd_cover(const Ctx& ctx, const std::string& set_s, const std::string& with_s, int bound,
              bool defect_only) {
  ShiftAutomaton aut = load(ctx);
  ConstructibleSet x = parse_constructible_expr(aut, set_s);
  std::vector<ConstructibleSet> members;
  for (const auto& expr : split_list(with_s, ';'))
    members.push_back(parse_constructible_expr(aut, expr));
  Json out;
  out["command"] = defect_only ? "defect" : "cover";
  out["spec"] = aut.spec.name;
  out["set"] = set_s;
  out["with"] = with_s;
  RegularSet defect = defect_set(x, members);
  out["defect"] = describe_set(defect, ctx.limit);
  if (!defect_only) {
    CoverVerdict v = cover_verdict(x, members, bound);
    switch (v.kind) {
      case CoverVerdict::Kind::Covered: out["verdict"] = "Covered"; break;
      case CoverVerdict::Kind::NotCovered: out["verdict"] = "NotCovered"; break;
      case CoverVerdict::Kind::UnknownUpTo: out["verdict"] = "UnknownUpTo"; break;
    }
    if (v.witness) {
      Json w;
      w["u"] = render_term(aut.alphabet(), v.witness->u);
      w["lambda"] = lambda_json(aut.alphabet(), v.witness->lambda);
      w["set"] = describe_set(v.witness->set, ctx.limit);
      out["witness"] = w;
    }
  }
  emit(ctx, out);
  return 0;
}

int cmd_defect_universe(const Ctx& ctx, int universe, const std::string& target_s,
                        const std::string& covers_s) {
  auto parse_fset = [&](const std::string& s) {
    FiniteUniverseSet out;
    std::string body = s;
    if (body.size() >= 2 && body.substr(body.size() - 2) == "..") {
      out.extends_beyond = true;
      body = body.substr(0, body.size() - 2);
      if (!body.empty() && body.back() == ',') body.pop_back();
    }
    for (const auto& tok : split_list(body, ','))
      out.elems.push_back(std::stoi(tok));
    return out;
  };
  FiniteUniverseFamily family;
  family.universe = universe;
  FiniteUniverseSet target = parse_fset(target_s);
  if (target.extends_beyond) {
    // "k.." fills the truncated tail explicitly.
    int from = target.elems.empty() ? 0 : target.elems.back() + 1;
    for (int i = from; i < universe; ++i) target.elems.push_back(i);
  }
  std::vector<FiniteUniverseSet> covers;
  for (const auto& tok : split_list(covers_s, ';')) covers.push_back(parse_fset(tok));
  FiniteDefect d = finite_universe_defect(family, target, covers);
  Json out;
  out["command"] = "defect";
  out["universe"] = universe;
  out["target"] = target_s;
  out["covers"] = covers_s;
  Json elems = Json::array();
  for (int e : d.elems) elems.push_back(e);
  out["defect_elements"] = elems;
  out["defect_extends_beyond"] = d.extends_beyond;
  out["cardinality"] = card_name(d.card);
  emit(ctx, out);
  return 0;
}

int cmd_hyp(const Ctx& ctx) {
  ShiftAutomaton aut = load(ctx);
  HypothesesReport r = hypotheses_check(aut, 20);
  Json out;
  out["command"] = "hyp";
  out["spec"] = aut.spec.name;
  out["length_function_ok"] = r.length_function_ok;
  out["letters_cover_ok"] = r.letters_cover_ok;
  out["letters_leftover"] = words_json(aut.alphabet(), r.letters_leftover, ctx.limit);
  out["boundaries_ok"] = r.boundaries_ok;
  if (r.boundary_failure) {
    Json f;
    f["lambda"] = lambda_json(aut.alphabet(), r.boundary_failure->lambda);
    f["boundary_cardinality"] = card_name(r.boundary_failure->boundary.kind);
    out["boundary_failure"] = f;
  }
  out["certified_essentially_tight"] = r.certified_essentially_tight;
  emit(ctx, out);
  return 0;
}

int cmd_star(const Ctx& ctx, bool full) {
  ShiftAutomaton aut = load(ctx);
  StarReport r = condition_star(aut);
  Json out;
  out["command"] = "star";
  out["spec"] = aut.spec.name;
  out["holds"] = r.holds;
  int vacuous = 0, witnessed = 0, refuted = 0;
  Json classes = Json::array();
  for (const auto& c : r.classes) {
    if (c.vacuous) ++vacuous;
    if (c.witness) ++witnessed;
    if (c.refuted) ++refuted;
    if (!full && c.vacuous) continue;
    Json e;
    e["lambda"] = lambda_json(aut.alphabet(), c.lambda);
    e["gamma"] = lambda_json(aut.alphabet(), c.gamma);
    e["premise"] = card_name(c.premise);
    if (c.vacuous) e["verdict"] = "VacuouslyTrue";
    else if (c.witness) {
      e["verdict"] = "Witnessed";
      e["witness"] = render_ev_word(aut.alphabet(), *c.witness);
    } else {
      e["verdict"] = "Refuted";
    }
    classes.push_back(e);
  }
  out["classes_vacuous"] = vacuous;
  out["classes_witnessed"] = witnessed;
  out["classes_refuted"] = refuted;
  out["classes"] = classes;
  emit(ctx, out);
  return 0;
}

int cmd_ground(const Ctx& ctx) {
  ShiftAutomaton aut = load(ctx);
  GroundReport r = ground_report(aut);
  Json out;
  out["command"] = "ground";
  out["spec"] = aut.spec.name;
  out["holds"] = r.holds;
  out["note"] = "conditions (i)-(iii) are equivalent; (iv),(v) follow";
  if (!r.holds) {
    Json w;
    w["lambda"] = lambda_json(aut.alphabet(), r.witness_lambda);
    w["finite_set"] = words_json(aut.alphabet(), r.witness_words, ctx.limit);
    out["witness"] = w;
  }
  emit(ctx, out);
  return 0;
}

int cmd_groupoid(const Ctx& ctx, int budget, int radius) {
  ShiftAutomaton aut = load(ctx);
  PointSample sample = build_sample(aut, budget);
  ActionReport rep = action_report(sample, radius);
  Json out;
  out["command"] = "groupoid-check";
  out["spec"] = aut.spec.name;
  out["sample_size"] = rep.sample_size;
  out["budget"] = budget;
  out["radius"] = radius;
  out["orthogonal"] = rep.orthogonal;
  out["semi_saturated"] = rep.semi_saturated;
  out["prefix_nesting"] = rep.prefix_nesting;
  out["power_decomposition"] = rep.power_decomposition;

  auto germs = enumerate_pt_germs(aut, sample, radius);
  out["sampled_germs"] = static_cast<int>(germs.size());
  bool roundtrip = true;
  for (const auto& g : germs) {
    DRGerm d = dr_convert(aut, g);
    PTGerm back = dr_invert(aut, d);
    if (!(back == g)) roundtrip = false;
  }
  out["dr_roundtrip"] = roundtrip;

  bool functor = true;
  long long composable = 0;
  for (const auto& g1 : germs)
    for (const auto& g2 : germs) {
      auto comp = germ_compose(aut, g1, g2);
      if (!comp) continue;
      ++composable;
      DRGerm lhs = dr_convert(aut, *comp);
      auto rhs = germ_compose(aut, dr_convert(aut, g1), dr_convert(aut, g2));
      if (!rhs || !(lhs == *rhs)) functor = false;
    }
  out["composable_pairs"] = composable;
  out["dr_functorial"] = functor;
  out["scope"] = "germs with both endpoints inside the sample";
  out["all_ok"] = rep.orthogonal && rep.semi_saturated && rep.prefix_nesting &&
                  rep.power_decomposition && roundtrip && functor;
  emit(ctx, out);
  return 0;
}

int cmd_matrix_verify(const Ctx& ctx, const std::string& sizes_s, int radius,
                      const std::string& export_word) {
  ShiftAutomaton aut = load(ctx);
  if (!export_word.empty()) {
    // Coordinate-triplet dump of one generator matrix at the first size.
    int n = std::stoi(split_list(sizes_s, ',').front());
    TruncatedBasis b = word_basis(aut, n, true);
    Word mu = aut.alphabet().parse_word(export_word);
    std::cout << export_triplets(t_matrix(aut, mu, b));
    return 0;
  }
  Json out;
  out["command"] = "matrix-verify";
  out["spec"] = aut.spec.name;
  bool all_ok = true;
  Json per_size = Json::array();
  for (const auto& tok : split_list(sizes_s, ',')) {
    int n = std::stoi(tok);
    TruncatedBasis unit_basis = word_basis(aut, n, true);
    TruncatedBasis plain = word_basis(aut, n, false);
    Json j;
    j["N"] = n;
    j["dim_unitized"] = unit_basis.dim();

    std::vector<Word> mus = enumerate_language(aut, std::min(n, 3));
    if (mus.size() > 12) mus.resize(12);

    bool isometries = true;
    for (const auto& mu : mus) {
      if (!is_partial_isometry(t_matrix(aut, mu, unit_basis))) isometries = false;
      if (!is_partial_isometry(t_matrix(aut, mu, plain))) isometries = false;
      if (!is_partial_isometry(pi_matrix(theta(aut, mu), plain))) isometries = false;
    }
    j["partial_isometries"] = isometries;

    SparseOp vac = vacuum_projection(aut, unit_basis);
    bool vacuum_ok = vac.entries() == 1 && vac.col_to_row[0] == 0;
    j["vacuum_rank_one"] = vacuum_ok;

    bool units_ok = true;
    for (const auto& mu : mus)
      for (const auto& nu : mus) {
        SparseOp unit = compose(t_matrix(aut, mu, unit_basis),
                                compose(vac, adjoint(t_matrix(aut, nu, unit_basis))));
        int r = unit_basis.index_of(mu), c = unit_basis.index_of(nu);
        SparseOp expect = op_zero(unit_basis.dim());
        if (r >= 0 && c >= 0) expect.col_to_row[c] = r;
        if (!op_equal(unit, expect)) units_ok = false;
      }
    j["matrix_units"] = units_ok;

    bool diag_ok = true;
    for (const auto& mu : mus)
      for (const auto& nu : mus) {
        HullElement alpha = mul(theta(aut, mu), invert(theta(aut, nu)));
        if (alpha.is_zero()) continue;
        SparseOp p = pi_matrix(alpha, plain);
        SparseOp d = diag_expectation(p);
        if (alpha.is_idempotent()) {
          if (!op_equal(d, p)) diag_ok = false;
        } else {
          if (d.entries() != 0) diag_ok = false;
        }
      }
    j["diag_expectation"] = diag_ok;

    bool grading_ok = true;
    for (const auto& mu : mus) {
      HullElement alpha = theta(aut, mu);
      GradedOp g = tensor_rep(alpha, plain, radius);
      Materialized m = materialize(g, aut.alphabet_size());
      bool grade_identity = g.grade && g.grade->identity();
      for (const auto& [r, gr, c, gc] : m.entries)
        if (gr == gc && !grade_identity) grading_ok = false;
    }
    j["tensor_grading"] = grading_ok;

    all_ok = all_ok && isometries && vacuum_ok && units_ok && diag_ok && grading_ok;
    per_size.push_back(j);
  }
  out["sizes"] = per_size;
  out["all_ok"] = all_ok;
  emit(ctx, out);
  return 0;
}

int cmd_spec_echo(const Ctx& ctx) {
  SubshiftSpec spec = parse_spec_file(ctx.spec_path);
  std::cout << serialize_spec(spec);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"subshift semigroup toolkit"};
  app.require_subcommand(1);
  Ctx ctx;
  app.add_option("--spec", ctx.spec_path, "presentation file")->envname("SXT_SPEC");
  app.add_flag("--json", ctx.json, "machine readable report");
  app.add_option("--limit", ctx.limit, "witness list bound");

  int max_len = 5;
  bool count_only = false;
  auto* lang = app.add_subcommand("lang", "enumerate the language");
  lang->add_option("--max-len", max_len)->required();
  lang->add_flag("--count", count_only);

  std::string left, right;
  auto* mulc = app.add_subcommand("mul", "semigroup product");
  mulc->add_option("--left", left)->required();
  mulc->add_option("--right", right)->required();

  std::string lambda_s, gamma_s;
  bool boundary = false;
  auto* fol = app.add_subcommand("follower", "follower sets");
  fol->add_option("--lambda", lambda_s)->required();
  fol->add_option("--gamma", gamma_s);
  fol->add_flag("--boundary", boundary);

  std::string a_s, b_s;
  auto* hm = app.add_subcommand("hull-mul", "inverse hull product");
  hm->add_option("--a", a_s)->required();
  hm->add_option("--b", b_s)->required();
  auto* he = app.add_subcommand("hull-eq", "inverse hull equality");
  he->add_option("--a", a_s)->required();
  he->add_option("--b", b_s)->required();

  std::string char_s, set_s;
  auto* ce = app.add_subcommand("char-eval", "evaluate a character");
  ce->add_option("--char", char_s)->required();
  ce->add_option("--set", set_s)->required();

  std::string with_s;
  int bound = 6;
  auto* cov = app.add_subcommand("cover", "cover verdict and defect");
  cov->add_option("--set", set_s)->required();
  cov->add_option("--with", with_s)->required();
  cov->add_option("--bound", bound);

  int universe = 0;
  std::string target_s, covers_s;
  auto* def = app.add_subcommand("defect", "defect set");
  def->add_option("--set", set_s);
  def->add_option("--with", with_s);
  def->add_option("--universe", universe);
  def->add_option("--target", target_s);
  def->add_option("--covers", covers_s);

  auto* hyp = app.add_subcommand("hyp", "essential tightness hypotheses");

  bool star_full = false;
  auto* star = app.add_subcommand("star", "condition (*) verdict");
  star->add_flag("--full", star_full, "include vacuous classes");

  auto* ground = app.add_subcommand("ground", "finite constructible sets");

  int budget = 4, radius = 4;
  auto* gc = app.add_subcommand("groupoid-check", "partial action and groupoid checks");
  gc->add_option("--budget", budget);
  gc->add_option("--radius", radius);

  std::string sizes_s = "4,6,8";
  int mradius = 2;
  std::string export_word;
  auto* mv = app.add_subcommand("matrix-verify", "finite matrix identities");
  mv->add_option("--sizes", sizes_s);
  mv->add_option("--radius", mradius);
  mv->add_option("--export-t", export_word, "dump one generator matrix as triplets");

  auto* echo = app.add_subcommand("spec-echo", "canonical presentation");

  CLI11_PARSE(app, argc, argv);

  try {
    if (lang->parsed()) return cmd_lang(ctx, max_len, count_only);
    if (mulc->parsed()) return cmd_mul(ctx, left, right);
    if (fol->parsed()) return cmd_follower(ctx, lambda_s, gamma_s, boundary);
    if (hm->parsed()) return cmd_hull_mul(ctx, a_s, b_s);
    if (he->parsed()) return cmd_hull_eq(ctx, a_s, b_s);
    if (ce->parsed()) return cmd_char_eval(ctx, char_s, set_s);
    if (cov->parsed()) return cmd_cover(ctx, set_s, with_s, bound, false);
    if (def->parsed()) {
      if (universe > 0) return cmd_defect_universe(ctx, universe, target_s, covers_s);
      return cmd_cover(ctx, set_s, with_s, bound, true);
    }
    if (hyp->parsed()) return cmd_hyp(ctx);
    if (star->parsed()) return cmd_star(ctx, star_full);
    if (ground->parsed()) return cmd_ground(ctx);
    if (gc->parsed()) return cmd_groupoid(ctx, budget, radius);
    if (mv->parsed()) return cmd_matrix_verify(ctx, sizes_s, mradius, export_word);
    if (echo->parsed()) return cmd_spec_echo(ctx);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
