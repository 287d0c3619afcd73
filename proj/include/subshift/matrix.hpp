#ifndef SUBSHIFT_MATRIX_HPP
#define SUBSHIFT_MATRIX_HPP

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "subshift/groupoid.hpp"
#include "subshift/hull.hpp"

namespace subshift {

/// Ordered basis of a finite truncation: the language up to a length bound
/// (optionally with the empty word in front), or a point sample.
struct TruncatedBasis {
  enum class Kind { Words, Points };
  Kind kind = Kind::Words;
  const ShiftAutomaton* aut = nullptr;
  bool unitized = false;
  int max_len = 0;
  std::vector<Word> words;              // length-lex, empty word not stored
  std::vector<EvPeriodicWord> points;   // sorted canonical

  int dim() const;
  // Index of a word (unitized: the empty word sits at 0); -1 when absent.
  int index_of(const Word& w) const;
  int index_of_point(const EvPeriodicWord& p) const;
  std::string label(int i) const;
};

TruncatedBasis word_basis(const ShiftAutomaton& aut, int max_len, bool unitized);
TruncatedBasis point_basis(const PointSample& sample);

/// 0/1 partial-permutation operator over a truncated basis: at most one
/// entry per column and per row.
struct SparseOp {
  int dim = 0;
  std::vector<int> col_to_row;       // -1 marks a zero column
  std::vector<int> truncation_dropped;  // columns zeroed only by the length bound

  int entries() const;
  bool is_diagonal() const;
  std::vector<std::pair<int, int>> entry_list() const;  // (row, col), row-major
};

SparseOp op_zero(int dim);
SparseOp op_identity(int dim);
SparseOp compose(const SparseOp& a, const SparseOp& b);
SparseOp adjoint(const SparseOp& a);
bool op_equal(const SparseOp& a, const SparseOp& b);
// M*M and MM* both diagonal 0/1; partial permutations always pass, so this
// doubles as a representation-invariant check.
bool is_partial_isometry(const SparseOp& m);

// delta_w -> delta_{mu w} while the image fits the bound; requires mu in the
// language.  Unitized bases map the vacuum to delta_mu.
SparseOp t_matrix(const ShiftAutomaton& aut, const Word& mu, const TruncatedBasis& basis);

// Hull representation: delta_w -> delta_{alpha(w)}.
SparseOp pi_matrix(const HullElement& alpha, const TruncatedBasis& basis);

// I minus the sum of the letter range projections; exactly the rank-one
// projection fixing the vacuum vector at every truncation size.
SparseOp vacuum_projection(const ShiftAutomaton& aut, const TruncatedBasis& basis);

SparseOp diag_expectation(const SparseOp& op);

// delta_omega -> delta_{mu omega}; images that leave the sample are dropped
// and reported apart from genuinely undefined columns.
struct PointRepResult {
  SparseOp op;
  std::vector<int> outside_sample;  // columns whose true image exists but is not sampled
  std::vector<int> undefined;       // columns with no image in the shift at all
};
PointRepResult point_rep(const ShiftAutomaton& aut, const Word& mu, const PointSample& sample);

/// Matrix part plus a symbolic free-group grade; the regular factor is only
/// materialized over a ball when asked.
struct GradedOp {
  SparseOp base;
  std::optional<FreeGroupWord> grade;  // nullopt for the zero element
  int radius = 1;
};

GradedOp tensor_rep(const HullElement& alpha, const TruncatedBasis& basis, int radius);

// Entries ((word row, ball row), (word col, ball col)) of base x lambda_grade
// over the free ball of the op's radius, in deterministic order.
struct Materialized {
  std::vector<FreeGroupWord> ball;
  std::vector<std::tuple<int, int, int, int>> entries;
};
Materialized materialize(const GradedOp& op, int alphabet_size);

// Coordinate-triplet text: header "rows cols nnz", one "row col 1" per entry.
std::string export_triplets(const SparseOp& op);

}  // namespace subshift

#endif
