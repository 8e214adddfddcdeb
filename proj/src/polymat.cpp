#include "sheafforge/polymat.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace sheafforge {

std::shared_ptr<const PolyRing> PolyRing::make(std::uint64_t p, std::vector<std::string> vars) {
  require(Field::is_prime(p), "polynomial ring characteristic must be prime");
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i + 1; j < vars.size(); ++j)
      require(vars[i] != vars[j], "duplicate ring variable " + vars[i]);
  auto r = std::make_shared<PolyRing>();
  r->p = p;
  r->vars = std::move(vars);
  return r;
}

size_t PolyRing::var_index(const std::string& name) const {
  for (size_t i = 0; i < vars.size(); ++i)
    if (vars[i] == name) return i;
  fail("unknown ring variable " + name);
}

Polynomial::Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {
  require(ring_ != nullptr, "polynomial without a ring");
}

Polynomial Polynomial::constant(PolyRingPtr ring, std::uint64_t c) {
  Polynomial p(std::move(ring));
  c %= p.ring_->p;
  if (c) p.terms_[Exponents(p.ring_->vars.size(), 0)] = c;
  return p;
}

Polynomial Polynomial::variable(PolyRingPtr ring, size_t var) {
  Polynomial p(std::move(ring));
  require(var < p.ring_->vars.size(), "variable index out of range");
  Exponents e(p.ring_->vars.size(), 0);
  e[var] = 1;
  p.terms_[std::move(e)] = 1;
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](std::uint32_t e) { return e == 0; });
}

long long Polynomial::degree() const {
  long long d = -1;
  for (const auto& [e, c] : terms_) {
    long long total = 0;
    for (auto x : e) total += x;
    d = std::max(d, total);
  }
  return d;
}

void Polynomial::add_term(Exponents e, std::uint64_t coeff) {
  require(e.size() == ring_->vars.size(), "exponent vector length mismatch");
  coeff %= ring_->p;
  if (coeff == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_[std::move(e)] = coeff;
  } else {
    it->second = (it->second + coeff) % ring_->p;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require(ring_->same(*o.ring_), "ring mismatch");
  Polynomial r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_);
  for (const auto& [e, c] : terms_) r.terms_[e] = ring_->p - c;
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require(ring_->same(*o.ring_), "ring mismatch");
  Polynomial r(ring_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(std::move(e), ca * cb % ring_->p);
    }
  return r;
}

Polynomial Polynomial::divexact(const Polynomial& divisor) const {
  require(ring_->same(*divisor.ring_), "ring mismatch");
  require(!divisor.is_zero(), "division by the zero polynomial");
  Polynomial rem = *this;
  Polynomial quot(ring_);
  const auto& d_lead = *divisor.terms_.rbegin();
  std::uint64_t p = ring_->p;
  std::uint64_t d_inv = 1;
  {
    // inverse of the leading coefficient mod p
    std::uint64_t e = p - 2, base = d_lead.second, r = 1;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    d_inv = r;
  }
  while (!rem.is_zero()) {
    const auto& r_lead = *rem.terms_.rbegin();
    Exponents q(r_lead.first.size());
    for (size_t i = 0; i < q.size(); ++i) {
      require(r_lead.first[i] >= d_lead.first[i], "inexact polynomial division");
      q[i] = r_lead.first[i] - d_lead.first[i];
    }
    std::uint64_t qc = r_lead.second * d_inv % p;
    Polynomial t(ring_);
    t.terms_[q] = qc;
    quot = quot + t;
    rem = rem - t * divisor;
  }
  return quot;
}

std::uint64_t Polynomial::eval(const FieldPtr& field, const std::vector<std::uint64_t>& assignment) const {
  require(field->characteristic() == ring_->p, "characteristic mismatch in evaluation");
  require(assignment.size() == ring_->vars.size(), "assignment must cover every ring variable");
  const Field& f = *field;
  std::uint64_t acc = 0;
  for (const auto& [e, c] : terms_) {
    std::uint64_t term = f.from_int(c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) term = f.mul(term, f.pow(assignment[i], e[i]));
    acc = f.add(acc, term);
  }
  return acc;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool printed = false;
    if (c != 1 || std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; })) {
      os << c;
      printed = true;
    }
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << ring_->vars[i];
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

PolyMatrix::PolyMatrix(PolyRingPtr ring, size_t rows, std::vector<std::string> labels)
    : ring_(std::move(ring)), rows_(rows), labels_(std::move(labels)) {
  require(ring_ != nullptr, "polynomial matrix without a ring");
  entries_.assign(rows_ * labels_.size(), Polynomial(ring_));
}

void PolyMatrix::set(size_t i, size_t j, Polynomial p) {
  require(p.ring()->same(*ring_), "ring mismatch");
  entries_[i * cols() + j] = std::move(p);
}

long long PolyMatrix::degree() const {
  long long d = -1;
  for (const auto& e : entries_) d = std::max(d, e.degree());
  return d;
}

Matrix PolyMatrix::instantiate(const FieldPtr& field, const std::vector<std::uint64_t>& assignment) const {
  Matrix m(field, rows_, labels_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols(); ++j) m.set(i, j, get(i, j).eval(field, assignment));
  return m;
}

PolyMatrix PolyMatrix::restrict_columns(const std::vector<std::string>& keep) const {
  std::unordered_map<std::string, size_t> where;
  for (size_t j = 0; j < cols(); ++j) where[labels_[j]] = j;
  PolyMatrix r(ring_, rows_, keep);
  for (size_t j = 0; j < keep.size(); ++j) {
    auto it = where.find(keep[j]);
    require(it != where.end(), "unknown column label: " + keep[j]);
    for (size_t i = 0; i < rows_; ++i) r.set(i, j, get(i, it->second));
  }
  return r;
}

PolyMatrix PolyMatrix::stack(std::span<const PolyMatrix> ms, const std::vector<std::string>& universe) {
  require(!ms.empty(), "stack of no matrices");
  std::unordered_map<std::string, size_t> where;
  for (size_t i = 0; i < universe.size(); ++i) where[universe[i]] = i;
  size_t total = 0;
  for (const auto& m : ms) total += m.rows();
  PolyMatrix r(ms[0].ring(), total, universe);
  size_t row = 0;
  for (const auto& m : ms) {
    require(m.ring()->same(*r.ring_), "ring mismatch");
    for (size_t i = 0; i < m.rows(); ++i, ++row)
      for (size_t j = 0; j < m.cols(); ++j) {
        auto it = where.find(m.labels()[j]);
        require(it != where.end(), "label outside column universe: " + m.labels()[j]);
        r.set(row, it->second, m.get(i, j));
      }
  }
  return r;
}

PolyMatrix PolyMatrix::kronecker(const PolyMatrix& a, const PolyMatrix& b) {
  require(a.ring()->same(*b.ring()), "ring mismatch");
  std::vector<std::string> labels;
  labels.reserve(a.cols() * b.cols());
  for (const auto& la : a.labels())
    for (const auto& lb : b.labels()) labels.push_back("(" + la + "," + lb + ")");
  PolyMatrix r(a.ring(), a.rows() * b.rows(), std::move(labels));
  for (size_t ia = 0; ia < a.rows(); ++ia)
    for (size_t ja = 0; ja < a.cols(); ++ja) {
      if (a.get(ia, ja).is_zero()) continue;
      for (size_t ib = 0; ib < b.rows(); ++ib)
        for (size_t jb = 0; jb < b.cols(); ++jb) {
          if (b.get(ib, jb).is_zero()) continue;
          r.set(ia * b.rows() + ib, ja * b.cols() + jb, a.get(ia, ja) * b.get(ib, jb));
        }
    }
  return r;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(ring_, cols(), Matrix::default_labels(rows_));
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols(); ++j) t.set(j, i, get(i, j));
  return t;
}

PolyMatrix PolyMatrix::mul(const PolyMatrix& o) const {
  require(ring_->same(*o.ring_), "ring mismatch");
  require(cols() == o.rows(), "shape mismatch in matrix product");
  PolyMatrix r(ring_, rows_, o.labels());
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols(); ++k) {
      if (get(i, k).is_zero()) continue;
      for (size_t j = 0; j < o.cols(); ++j) {
        if (o.get(k, j).is_zero()) continue;
        r.set(i, j, r.get(i, j) + get(i, k) * o.get(k, j));
      }
    }
  return r;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

namespace {

// Fraction-free elimination; returns the pivots consumed and, for square
// inputs, the determinant (with swap signs folded in).
struct BareissResult {
  size_t rank = 0;
  Polynomial det;
  BareissResult(PolyRingPtr r) : det(Polynomial::constant(r, 0)) {}
};

BareissResult bareiss(const PolyMatrix& m) {
  BareissResult out(m.ring());
  size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Polynomial>> a;
  a.reserve(rows);
  for (size_t i = 0; i < rows; ++i) {
    std::vector<Polynomial> row;
    row.reserve(cols);
    for (size_t j = 0; j < cols; ++j) row.push_back(m.get(i, j));
    a.push_back(std::move(row));
  }
  Polynomial prev = Polynomial::constant(m.ring(), 1);
  size_t swaps = 0;
  size_t steps = std::min(rows, cols);
  size_t k = 0;
  for (; k < steps; ++k) {
    // deterministic pivot: leftmost column with a nonzero entry, then the
    // smallest row index
    size_t pr = rows, pc = cols;
    for (size_t j = k; j < cols && pc == cols; ++j)
      for (size_t i = k; i < rows; ++i)
        if (!a[i][j].is_zero()) {
          pr = i;
          pc = j;
          break;
        }
    if (pc == cols) break;
    if (pr != k) {
      std::swap(a[pr], a[k]);
      ++swaps;
    }
    if (pc != k) {
      for (size_t i = 0; i < rows; ++i) std::swap(a[i][pc], a[i][k]);
      ++swaps;
    }
    for (size_t i = k + 1; i < rows; ++i) {
      for (size_t j = k + 1; j < cols; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divexact(prev);
      a[i][k] = Polynomial::constant(m.ring(), 0);
    }
    prev = a[k][k];
  }
  out.rank = k;
  if (rows == cols) {
    if (k < rows) {
      out.det = Polynomial::constant(m.ring(), 0);
    } else {
      out.det = (swaps % 2 == 0) ? prev : -prev;
    }
  }
  return out;
}

}  // namespace

size_t PolyMatrix::exact_rank() const { return bareiss(*this).rank; }

Polynomial PolyMatrix::determinant() const {
  require(rows_ == cols(), "determinant of a non-square matrix");
  if (rows_ == 0) return Polynomial::constant(ring_, 1);
  return bareiss(*this).det;
}

PolyRankReport poly_rank(const PolyMatrix& m, const PolyRankMode& mode) {
  PolyRankReport rep;
  rep.exact = mode.exact;
  if (mode.exact) {
    rep.rank = m.exact_rank();
    return rep;
  }
  rep.trials = mode.trials;
  rep.field_bits = mode.field_bits;
  rep.seed = mode.seed;
  std::uint64_t p = m.ring()->p;
  long long bound = std::max<long long>(m.degree(), 0) *
                    static_cast<long long>(std::min(m.rows(), m.cols()));
  std::uint64_t q = checked_pow(p, mode.field_bits);
  require(static_cast<long long>(q) > bound,
          "sampling field too small for the degree bound; raise field_bits");
  FieldPtr f = Field::make(p, mode.field_bits);
  size_t nv = m.ring()->vars.size();
  for (unsigned tr = 0; tr < mode.trials; ++tr) {
    std::mt19937_64 rng(mix_seed(mode.seed, tr));
    std::vector<std::uint64_t> a(nv);
    for (auto& x : a) x = uniform_below(rng, f->order());
    size_t r = m.instantiate(f, a).rank();
    rep.per_trial.push_back(r);
    rep.rank = std::max(rep.rank, r);
  }
  return rep;
}

namespace {

// Adjugate via cofactor determinants; inputs are small by the minor budget.
PolyMatrix adjugate(const std::vector<std::vector<Polynomial>>& m, PolyRingPtr ring) {
  size_t r = m.size();
  PolyMatrix adj(ring, r, Matrix::default_labels(r));
  if (r == 0) return adj;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      PolyMatrix minor(ring, r - 1, Matrix::default_labels(r - 1));
      size_t mi = 0;
      for (size_t a = 0; a < r; ++a) {
        if (a == j) continue;
        size_t mj = 0;
        for (size_t b = 0; b < r; ++b) {
          if (b == i) continue;
          minor.set(mi, mj, m[a][b]);
          ++mj;
        }
        ++mi;
      }
      Polynomial c = minor.determinant();
      if ((i + j) % 2 == 1) c = -c;
      adj.set(i, j, std::move(c));
    }
  return adj;
}

void subsets(size_t n, size_t k, const std::function<void(const std::vector<size_t>&)>& fn) {
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(idx);
    size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

PolyMatrix kernel_generator(const PolyMatrix& h, std::uint64_t minor_budget) {
  PolyRingPtr ring = h.ring();
  size_t n = h.cols(), m = h.rows();
  size_t r = h.exact_rank();
  if (r == 0) {
    // No constraints: the kernel is everything.
    PolyMatrix g(ring, n, h.labels());
    for (size_t i = 0; i < n; ++i) g.set(i, i, Polynomial::constant(ring, 1));
    return g;
  }
  std::uint64_t row_minors = checked_binomial(m, r);
  std::uint64_t col_minors = checked_binomial(n, r);
  unsigned __int128 pairs = static_cast<unsigned __int128>(row_minors) * col_minors;
  if (pairs > minor_budget) {
    fail_budget("minor enumeration " + std::to_string(row_minors) + " x " + std::to_string(col_minors) +
                " exceeds the generator budget " + std::to_string(minor_budget));
  }
  std::vector<std::vector<Polynomial>> rows_out;
  std::unordered_set<std::string> row_keys;
  subsets(m, r, [&](const std::vector<size_t>& rsel) {
    subsets(n, r, [&](const std::vector<size_t>& csel) {
      std::vector<std::vector<Polynomial>> mm(r, std::vector<Polynomial>(r, Polynomial(ring)));
      PolyMatrix msq(ring, r, Matrix::default_labels(r));
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
          mm[i][j] = h.get(rsel[i], csel[j]);
          msq.set(i, j, mm[i][j]);
        }
      Polynomial det = msq.determinant();
      if (det.is_zero()) return;
      std::vector<size_t> rest;
      {
        std::vector<bool> used(n, false);
        for (size_t c : csel) used[c] = true;
        for (size_t c = 0; c < n; ++c)
          if (!used[c]) rest.push_back(c);
      }
      PolyMatrix adj = adjugate(mm, ring);
      // dP = adj(M) * N = det(M) * M^-1 N
      PolyMatrix nmat(ring, r, Matrix::default_labels(rest.size()));
      for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < rest.size(); ++j) nmat.set(i, j, h.get(rsel[i], rest[j]));
      PolyMatrix dp = adj.mul(nmat);
      for (size_t j = 0; j < rest.size(); ++j) {
        std::vector<Polynomial> row(n, Polynomial(ring));
        row[rest[j]] = det;
        for (size_t i = 0; i < r; ++i) row[csel[i]] = -dp.get(i, j);
        std::ostringstream key;
        for (const auto& p : row) key << p.str() << ";";
        if (row_keys.insert(key.str()).second) rows_out.push_back(std::move(row));
      }
    });
  });
  PolyMatrix g(ring, rows_out.size(), h.labels());
  for (size_t i = 0; i < rows_out.size(); ++i)
    for (size_t j = 0; j < n; ++j) g.set(i, j, rows_out[i][j]);
  return g;
}

}  // namespace sheafforge
