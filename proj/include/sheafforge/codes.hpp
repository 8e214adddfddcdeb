#ifndef SHEAFFORGE_CODES_HPP
#define SHEAFFORGE_CODES_HPP

#include <optional>

#include "sheafforge/matrices.hpp"
#include "sheafforge/posets.hpp"

namespace sheafforge {

// Budget and worker knobs for exhaustive weight searches.
struct WeightSearch {
  std::uint64_t budget = 1ull << 24;
  unsigned jobs = 1;
};

// Linear code over a field, indexed by an ordered label set. Holds a
// parity-check matrix and/or a generator matrix; whichever is missing is
// derived on demand through the kernel. Both are kept in canonical reduced
// form so code equality is literal matrix equality.
class LinearCode {
 public:
  static LinearCode from_parity(Matrix h);
  static LinearCode from_generator(Matrix g);
  static LinearCode from_both(Matrix h, Matrix g);  // cross-validated
  static LinearCode full_code(const FieldPtr& f, const std::vector<std::string>& labels);
  static LinearCode zero_code(const FieldPtr& f, const std::vector<std::string>& labels);
  static LinearCode repetition_code(const FieldPtr& f, const std::vector<std::string>& labels);

  const FieldPtr& field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }
  size_t length() const { return labels_.size(); }
  size_t dim() const;

  const Matrix& parity() const;     // canonical rref, zero rows dropped
  const Matrix& generator() const;  // canonical rref, zero rows dropped

  bool contains(const std::vector<std::uint64_t>& word) const;
  bool equals(const LinearCode& o) const;
  bool subcode_of(const LinearCode& o) const;

  LinearCode dual() const;
  // Exact minimum distance by enumerating the message space; nullopt encodes
  // infinity (the zero code).
  std::optional<std::uint64_t> min_distance(const WeightSearch& ws = {}) const;
  bool is_information_set(const std::vector<std::string>& coords) const;
  bool is_mds(std::uint64_t subset_budget = 1000000) const;
  LinearCode puncture(const std::vector<std::string>& keep) const;

  static LinearCode tensor(std::span<const LinearCode> components);

 private:
  LinearCode(FieldPtr f, std::vector<std::string> labels) : field_(std::move(f)), labels_(std::move(labels)) {}
  FieldPtr field_;
  std::vector<std::string> labels_;
  mutable std::optional<Matrix> parity_;
  mutable std::optional<Matrix> generator_;
};

// Minimum weight over span(p) \ span(q); span(q) must lie inside span(p).
// nullopt encodes an empty search domain (infinite weight).
std::optional<std::uint64_t> min_weight_excluding(const Matrix& p, const Matrix& q,
                                                  const WeightSearch& ws);

// Finite group by multiplication table. Element 0..n-1; identity found from
// the table. Kept small deliberately (order <= 64).
class Group;
using GroupPtr = std::shared_ptr<const Group>;

class Group {
 public:
  static GroupPtr from_table(const std::vector<std::vector<size_t>>& table);
  static GroupPtr cyclic(size_t n);
  static GroupPtr trivial();

  size_t order() const { return table_.size(); }
  size_t mul(size_t a, size_t b) const { return table_[a][b]; }
  size_t inverse(size_t a) const { return inverse_[a]; }
  size_t identity() const { return identity_; }
  const std::vector<std::vector<size_t>>& table() const { return table_; }

 private:
  Group() = default;
  std::vector<std::vector<size_t>> table_;
  std::vector<size_t> inverse_;
  size_t identity_ = 0;
};

// Group algebra F[G] elements as coefficient vectors indexed by G.
using GroupAlgebraElement = std::vector<std::uint64_t>;

GroupAlgebraElement ga_mul(const Field& f, const Group& g, const GroupAlgebraElement& a,
                           const GroupAlgebraElement& b);
GroupAlgebraElement ga_antipode(const Group& g, const GroupAlgebraElement& a);
std::uint64_t ga_epsilon(const Field& f, const GroupAlgebraElement& a);

// Matrix over the group algebra R = F[G].
class GroupAlgebraMatrix {
 public:
  GroupAlgebraMatrix(FieldPtr field, GroupPtr group, size_t rows, size_t cols);
  const FieldPtr& field() const { return field_; }
  const GroupPtr& group() const { return group_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  const GroupAlgebraElement& get(size_t i, size_t j) const { return entries_[i * cols_ + j]; }
  void set(size_t i, size_t j, GroupAlgebraElement e);

  // Expands each entry into the |G| x |G| matrix of its left multiplication
  // action (block structure row-major by (row, group element)).
  Matrix lift() const;
  GroupAlgebraMatrix transpose() const;
  GroupAlgebraMatrix antipode() const;
  Matrix epsilon() const;  // entrywise coefficient sum

 private:
  FieldPtr field_;
  GroupPtr group_;
  size_t rows_, cols_;
  std::vector<GroupAlgebraElement> entries_;
};

// Quotient, invariants and coinvariants of a code under a permutation action
// on its coordinates. The code need not be invariant for quotient_code.
LinearCode quotient_code(const LinearCode& c, const PermutationAction& action);
LinearCode invariants_code(const LinearCode& c, const PermutationAction& action);
LinearCode coinvariants_code(const LinearCode& c, const PermutationAction& action);
bool is_g_code(const LinearCode& c, const PermutationAction& action);

// Quotient of the tensor code under the diagonal action; both inputs must be
// invariant under their actions (matched generator lists).
LinearCode balanced_product_codes(const LinearCode& a, const PermutationAction& act_a,
                                  const LinearCode& b, const PermutationAction& act_b);

// CSS code as a nested pair B <= A on a common index set.
class CssCode {
 public:
  CssCode(LinearCode a, LinearCode b);
  size_t length() const { return a_.length(); }
  size_t dim() const { return a_.dim() - b_.dim(); }
  const LinearCode& code_a() const { return a_; }
  const LinearCode& code_b() const { return b_; }
  std::optional<std::uint64_t> d_x(const WeightSearch& ws = {}) const;
  std::optional<std::uint64_t> d_z(const WeightSearch& ws = {}) const;

 private:
  LinearCode a_, b_;
};

// Hypergraph / lifted product constructions. With transpose_b set (the usual
// convention) the code is built from the pairs (u, v) with A u = v B and the
// degenerate words (w B, A w); without it, B enters transposed.
CssCode lp_code(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b, bool transpose_b = true);
CssCode hp_code(const Matrix& a, const Matrix& b, bool transpose_b = true);
CssCode gb_code(const FieldPtr& f, const GroupPtr& g, const GroupAlgebraElement& a,
                const GroupAlgebraElement& b);

// Double-cover parity-check matrix over F[G] from a generator set and a
// local parity matrix h (m x Delta): rows [1_G h; s_j-scaled h].
GroupAlgebraMatrix zemor_parity(const FieldPtr& f, const GroupPtr& g,
                                const std::vector<size_t>& s, const Matrix& h);

}  // namespace sheafforge

#endif
