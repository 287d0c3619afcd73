#include "subshift/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace subshift {

int TruncatedBasis::dim() const {
  if (kind == Kind::Points) return static_cast<int>(points.size());
  return static_cast<int>(words.size()) + (unitized ? 1 : 0);
}

int TruncatedBasis::index_of(const Word& w) const {
  if (kind != Kind::Words) throw std::logic_error("word lookup in a point basis");
  if (w.empty()) return unitized ? 0 : -1;
  auto it = std::lower_bound(words.begin(), words.end(), w, lenlex_less);
  if (it == words.end() || *it != w) return -1;
  return static_cast<int>(it - words.begin()) + (unitized ? 1 : 0);
}

int TruncatedBasis::index_of_point(const EvPeriodicWord& p) const {
  if (kind != Kind::Points) throw std::logic_error("point lookup in a word basis");
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || !(*it == p)) return -1;
  return static_cast<int>(it - points.begin());
}

std::string TruncatedBasis::label(int i) const {
  if (kind == Kind::Points) {
    const auto& p = points.at(i);
    return aut->alphabet().render(p.preperiod()) + "(" + aut->alphabet().render(p.period()) + ")";
  }
  if (unitized && i == 0) return "";
  return aut->alphabet().render(words.at(i - (unitized ? 1 : 0)));
}

TruncatedBasis word_basis(const ShiftAutomaton& aut, int max_len, bool unitized) {
  TruncatedBasis b;
  b.kind = TruncatedBasis::Kind::Words;
  b.aut = &aut;
  b.unitized = unitized;
  b.max_len = max_len;
  b.words = enumerate_language(aut, max_len);
  return b;
}

TruncatedBasis point_basis(const PointSample& sample) {
  TruncatedBasis b;
  b.kind = TruncatedBasis::Kind::Points;
  b.aut = sample.aut;
  b.points = sample.points;
  return b;
}

int SparseOp::entries() const {
  int n = 0;
  for (int r : col_to_row)
    if (r >= 0) ++n;
  return n;
}

bool SparseOp::is_diagonal() const {
  for (int c = 0; c < dim; ++c)
    if (col_to_row[c] >= 0 && col_to_row[c] != c) return false;
  return true;
}

std::vector<std::pair<int, int>> SparseOp::entry_list() const {
  std::vector<std::pair<int, int>> out;
  for (int c = 0; c < dim; ++c)
    if (col_to_row[c] >= 0) out.emplace_back(col_to_row[c], c);
  std::sort(out.begin(), out.end());
  return out;
}

SparseOp op_zero(int dim) {
  SparseOp op;
  op.dim = dim;
  op.col_to_row.assign(dim, -1);
  return op;
}

SparseOp op_identity(int dim) {
  SparseOp op = op_zero(dim);
  for (int i = 0; i < dim; ++i) op.col_to_row[i] = i;
  return op;
}

SparseOp compose(const SparseOp& a, const SparseOp& b) {
  if (a.dim != b.dim) throw std::invalid_argument("dimension mismatch");
  SparseOp out = op_zero(a.dim);
  for (int c = 0; c < b.dim; ++c) {
    int mid = b.col_to_row[c];
    if (mid < 0) continue;
    out.col_to_row[c] = a.col_to_row[mid];
  }
  return out;
}

SparseOp adjoint(const SparseOp& a) {
  SparseOp out = op_zero(a.dim);
  for (int c = 0; c < a.dim; ++c) {
    int r = a.col_to_row[c];
    if (r < 0) continue;
    if (out.col_to_row[r] >= 0) throw std::logic_error("row used twice, not a partial permutation");
    out.col_to_row[r] = c;
  }
  return out;
}

bool op_equal(const SparseOp& a, const SparseOp& b) {
  return a.dim == b.dim && a.col_to_row == b.col_to_row;
}

bool is_partial_isometry(const SparseOp& m) {
  std::vector<char> row_used(m.dim, 0);
  for (int c = 0; c < m.dim; ++c) {
    int r = m.col_to_row[c];
    if (r < 0) continue;
    if (row_used[r]) return false;
    row_used[r] = 1;
  }
  SparseOp mm = compose(adjoint(m), m);
  SparseOp mm2 = compose(m, adjoint(m));
  return mm.is_diagonal() && mm2.is_diagonal();
}

SparseOp t_matrix(const ShiftAutomaton& aut, const Word& mu, const TruncatedBasis& basis) {
  if (!aut.in_language(mu)) throw std::invalid_argument("word outside the language");
  if (basis.kind != TruncatedBasis::Kind::Words) throw std::invalid_argument("word basis required");
  SparseOp op = op_zero(basis.dim());
  for (int c = 0; c < basis.dim(); ++c) {
    Word w;
    if (!(basis.unitized && c == 0)) w = basis.words[c - (basis.unitized ? 1 : 0)];
    Word target = mu;
    target.insert(target.end(), w.begin(), w.end());
    if (!aut.in_language(target)) continue;  // product vanishes outright
    int idx = basis.index_of(target);
    if (idx < 0) {
      op.truncation_dropped.push_back(c);  // image exists beyond the bound
      continue;
    }
    op.col_to_row[c] = idx;
  }
  return op;
}

SparseOp pi_matrix(const HullElement& alpha, const TruncatedBasis& basis) {
  if (basis.kind != TruncatedBasis::Kind::Words) throw std::invalid_argument("word basis required");
  if (basis.unitized) throw std::invalid_argument("hull representation lives on the plain basis");
  SparseOp op = op_zero(basis.dim());
  if (alpha.is_zero()) return op;
  for (int c = 0; c < basis.dim(); ++c) {
    ExtWord img = apply_word(alpha, basis.words[c]);
    if (!img.is_word()) continue;
    int idx = basis.index_of(img.letters());
    if (idx < 0) {
      op.truncation_dropped.push_back(c);
      continue;
    }
    op.col_to_row[c] = idx;
  }
  return op;
}

SparseOp vacuum_projection(const ShiftAutomaton& aut, const TruncatedBasis& basis) {
  if (!basis.unitized) throw std::invalid_argument("vacuum projection needs the unitized basis");
  // I - sum_a T_a T_a^*; each summand is the diagonal projection onto words
  // beginning with the letter, so the difference stays diagonal.
  std::vector<int> diag(basis.dim(), 1);
  for (Symbol a = 0; a < aut.alphabet_size(); ++a) {
    Word la{a};
    if (!aut.in_language(la)) continue;
    SparseOp ta = t_matrix(aut, la, basis);
    SparseOp range_proj = compose(ta, adjoint(ta));
    if (!range_proj.is_diagonal()) throw std::logic_error("letter range projection not diagonal");
    for (int c = 0; c < basis.dim(); ++c)
      if (range_proj.col_to_row[c] == c) {
        if (diag[c] == 0) throw std::logic_error("letter ranges overlap");
        diag[c] = 0;
      }
  }
  SparseOp out = op_zero(basis.dim());
  for (int c = 0; c < basis.dim(); ++c)
    if (diag[c]) out.col_to_row[c] = c;
  return out;
}

SparseOp diag_expectation(const SparseOp& op) {
  SparseOp out = op_zero(op.dim);
  for (int c = 0; c < op.dim; ++c)
    if (op.col_to_row[c] == c) out.col_to_row[c] = c;
  return out;
}

PointRepResult point_rep(const ShiftAutomaton& aut, const Word& mu, const PointSample& sample) {
  if (!aut.in_language(mu)) throw std::invalid_argument("word outside the language");
  TruncatedBasis basis = point_basis(sample);
  PointRepResult res;
  res.op = op_zero(basis.dim());
  for (int c = 0; c < basis.dim(); ++c) {
    EvPeriodicWord img = basis.points[c];
    for (auto it = mu.rbegin(); it != mu.rend(); ++it) img = img.prepend(*it);
    if (!aut.in_shift(img)) {
      res.undefined.push_back(c);
      continue;
    }
    int idx = basis.index_of_point(img);
    if (idx < 0) {
      res.outside_sample.push_back(c);
      continue;
    }
    res.op.col_to_row[c] = idx;
  }
  return res;
}

GradedOp tensor_rep(const HullElement& alpha, const TruncatedBasis& basis, int radius) {
  if (radius < 1) throw std::invalid_argument("radius must be >= 1");
  GradedOp out;
  out.base = pi_matrix(alpha, basis);
  out.radius = radius;
  auto d = d_map(alpha);
  if (d) out.grade = *d;
  return out;
}

Materialized materialize(const GradedOp& op, int alphabet_size) {
  Materialized out;
  out.ball = free_ball(alphabet_size, op.radius);
  if (!op.grade) return out;
  // lambda_g delta_h = delta_{g h}: one block per ball element whose image
  // stays inside the ball.
  for (size_t h = 0; h < out.ball.size(); ++h) {
    FreeGroupWord gh = op.grade->times(out.ball[h]);
    int gh_idx = -1;
    for (size_t i = 0; i < out.ball.size(); ++i)
      if (out.ball[i] == gh) {
        gh_idx = static_cast<int>(i);
        break;
      }
    if (gh_idx < 0) continue;
    for (auto [r, c] : op.base.entry_list())
      out.entries.emplace_back(r, gh_idx, c, static_cast<int>(h));
  }
  return out;
}

std::string export_triplets(const SparseOp& op) {
  auto entries = op.entry_list();
  std::string out = std::to_string(op.dim) + " " + std::to_string(op.dim) + " " +
                    std::to_string(entries.size()) + "\n";
  for (auto [r, c] : entries)
    out += std::to_string(r) + " " + std::to_string(c) + " 1\n";
  return out;
}

}  // namespace subshift
