#ifndef SHEAFFORGE_POLYMAT_HPP
#define SHEAFFORGE_POLYMAT_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "sheafforge/matrices.hpp"

namespace sheafforge {

// Multivariate polynomial ring F_p[v] over an ordered variable set.
struct PolyRing {
  std::uint64_t p;
  std::vector<std::string> vars;

  static std::shared_ptr<const PolyRing> make(std::uint64_t p, std::vector<std::string> vars);
  bool same(const PolyRing& o) const { return p == o.p && vars == o.vars; }
  size_t var_index(const std::string& name) const;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

// Sparse polynomial: map from exponent vectors to nonzero F_p coefficients.
class Polynomial {
 public:
  using Exponents = std::vector<std::uint32_t>;

  explicit Polynomial(PolyRingPtr ring);
  static Polynomial constant(PolyRingPtr ring, std::uint64_t c);
  static Polynomial variable(PolyRingPtr ring, size_t var);

  const PolyRingPtr& ring() const { return ring_; }
  const std::map<Exponents, std::uint64_t>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Max total degree; -1 for the zero polynomial.
  long long degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }

  // Exact division; fails if the divisor does not divide exactly.
  Polynomial divexact(const Polynomial& divisor) const;

  // Evaluation into a field of the same characteristic; assignment gives one
  // encoding per ring variable.
  std::uint64_t eval(const FieldPtr& field, const std::vector<std::uint64_t>& assignment) const;

  void add_term(Exponents e, std::uint64_t coeff);
  std::string str() const;

 private:
  PolyRingPtr ring_;
  std::map<Exponents, std::uint64_t> terms_;
};

// Matrix with polynomial entries and labeled columns.
class PolyMatrix {
 public:
  PolyMatrix(PolyRingPtr ring, size_t rows, std::vector<std::string> labels);

  const PolyRingPtr& ring() const { return ring_; }
  size_t rows() const { return rows_; }
  size_t cols() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Polynomial& get(size_t i, size_t j) const { return entries_[i * cols() + j]; }
  void set(size_t i, size_t j, Polynomial p);

  long long degree() const;  // max entry degree, -1 if all zero

  Matrix instantiate(const FieldPtr& field, const std::vector<std::uint64_t>& assignment) const;
  PolyMatrix restrict_columns(const std::vector<std::string>& keep) const;
  static PolyMatrix stack(std::span<const PolyMatrix> ms, const std::vector<std::string>& universe);
  static PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b);
  PolyMatrix transpose() const;
  PolyMatrix mul(const PolyMatrix& o) const;
  bool is_zero() const;

  // Rank over the rational function field by fraction-free elimination.
  size_t exact_rank() const;
  // Determinant of a square matrix (fraction-free).
  Polynomial determinant() const;

 private:
  PolyRingPtr ring_;
  size_t rows_;
  std::vector<std::string> labels_;
  std::vector<Polynomial> entries_;
};

struct PolyRankMode {
  bool exact = false;
  unsigned trials = 8;
  unsigned field_bits = 16;
  std::uint64_t seed = 0;
};

struct PolyRankReport {
  size_t rank = 0;
  bool exact = false;
  unsigned trials = 0;
  unsigned field_bits = 0;
  std::uint64_t seed = 0;
  std::vector<size_t> per_trial;
};

// Probabilistic mode reports the max rank over seeded random instantiations
// (a lower bound on the true rank that is exact with high probability);
// exact mode runs fraction-free elimination over F_p(v).
PolyRankReport poly_rank(const PolyMatrix& m, const PolyRankMode& mode);

// Polynomial generator matrix for ker H over F_p(v): for every nonsingular
// r x r minor M of H (r = rank), contributes det(M) * pi^-1([-P^T, I]) rows.
// The minor count C(rows, r) * C(cols, r) must stay within `minor_budget`.
PolyMatrix kernel_generator(const PolyMatrix& h, std::uint64_t minor_budget = 100000);

}  // namespace sheafforge

#endif
