#include "sheafforge/codes.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <thread>

namespace sheafforge {

LinearCode LinearCode::from_parity(Matrix h) {
  LinearCode c(h.field(), h.labels());
  c.parity_ = h.row_canonical();
  return c;
}

LinearCode LinearCode::from_generator(Matrix g) {
  LinearCode c(g.field(), g.labels());
  c.generator_ = g.row_canonical();
  return c;
}

LinearCode LinearCode::from_both(Matrix h, Matrix g) {
  require(h.labels() == g.labels(), "parity and generator must share the index set");
  require(h.field()->same(*g.field()), "field mismatch");
  Matrix prod = g.mul(h.transpose());
  require(prod.is_zero(), "generator rows must satisfy the parity checks");
  LinearCode c(h.field(), h.labels());
  c.parity_ = h.row_canonical();
  c.generator_ = g.row_canonical();
  require(c.parity_->rows() + c.generator_->rows() == c.length(),
          "parity and generator ranks must add up to the length");
  return c;
}

LinearCode LinearCode::full_code(const FieldPtr& f, const std::vector<std::string>& labels) {
  return from_parity(Matrix(f, 0, labels));
}

LinearCode LinearCode::zero_code(const FieldPtr& f, const std::vector<std::string>& labels) {
  Matrix m(f, labels.size(), labels);
  for (size_t i = 0; i < labels.size(); ++i) m.set(i, i, 1);
  return from_parity(m);
}

LinearCode LinearCode::repetition_code(const FieldPtr& f, const std::vector<std::string>& labels) {
  Matrix g(f, labels.empty() ? 0 : 1, labels);
  for (size_t j = 0; j < labels.size(); ++j) g.set(0, j, 1);
  return from_generator(g);
}

size_t LinearCode::dim() const { return length() - parity().rows(); }

const Matrix& LinearCode::parity() const {
  if (!parity_) parity_ = generator_->kernel_basis().row_canonical();
  return *parity_;
}

const Matrix& LinearCode::generator() const {
  if (!generator_) generator_ = parity_->kernel_basis().row_canonical();
  return *generator_;
}

bool LinearCode::contains(const std::vector<std::uint64_t>& word) const {
  auto y = parity().mul_vec(word);
  return std::all_of(y.begin(), y.end(), [](std::uint64_t v) { return v == 0; });
}

bool LinearCode::equals(const LinearCode& o) const {
  return field_->same(*o.field_) && labels_ == o.labels_ && parity().same_content(o.parity());
}

bool LinearCode::subcode_of(const LinearCode& o) const {
  if (!field_->same(*o.field_) || labels_ != o.labels_) return false;
  const Matrix& g = generator();
  for (size_t i = 0; i < g.rows(); ++i) {
    std::vector<std::uint64_t> row(length());
    for (size_t j = 0; j < length(); ++j) row[j] = g.get(i, j);
    if (!o.contains(row)) return false;
  }
  return true;
}

LinearCode LinearCode::dual() const {
  LinearCode d(field_, labels_);
  d.parity_ = generator().row_canonical();
  d.generator_ = parity().row_canonical();
  return d;
}

namespace {

// Enumeration core: minimum Hamming weight over span(basis) \ span(excl),
// with basis and excl in canonical rref form. Splits the message space
// across workers; deterministic min-merge.
std::optional<std::uint64_t> min_weight_core(const Matrix& basis, const Matrix& excl,
                                             const WeightSearch& ws) {
  const FieldPtr& f = basis.field();
  size_t k = basis.rows(), n = basis.cols();
  std::uint64_t q = f->order();
  if (k == 0) return std::nullopt;
  unsigned __int128 total128 = 1;
  for (size_t i = 0; i < k; ++i) {
    total128 *= q;
    if (total128 > ws.budget) fail_budget("weight enumeration q^k exceeds the budget");
  }
  std::uint64_t total = static_cast<std::uint64_t>(total128);

  std::vector<size_t> excl_pivots;  // pivot column of each excl row
  for (size_t i = 0; i < excl.rows(); ++i)
    for (size_t j = 0; j < n; ++j)
      if (excl.get(i, j) != 0) {
        excl_pivots.push_back(j);
        break;
      }

  unsigned jobs = std::max(1u, ws.jobs);
  if (total < 4096) jobs = 1;
  std::vector<std::optional<std::uint64_t>> results(jobs);

  auto worker = [&](unsigned w) {
    std::uint64_t lo = total / jobs * w + std::min<std::uint64_t>(w, total % jobs);
    std::uint64_t hi = lo + total / jobs + (w < total % jobs ? 1 : 0);
    if (lo >= hi) return;
    const Field& ff = *f;
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    auto member_excl = [&](std::vector<std::uint64_t> v) {
      for (size_t i = 0; i < excl.rows(); ++i) {
        std::uint64_t c = v[excl_pivots[i]];
        if (c == 0) continue;
        for (size_t j = excl_pivots[i]; j < n; ++j) v[j] = ff.sub(v[j], ff.mul(c, excl.get(i, j)));
      }
      return std::all_of(v.begin(), v.end(), [](std::uint64_t x) { return x == 0; });
    };
    if (q == 2) {
      // Gray-coded walk; one basis row flips per step.
      std::vector<std::uint64_t> cur(n, 0);
      auto apply_row = [&](size_t r) {
        for (size_t j = 0; j < n; ++j) cur[j] ^= basis.get(r, j);
      };
      std::uint64_t g0 = lo ^ (lo >> 1);
      for (size_t r = 0; r < k; ++r)
        if (g0 >> r & 1) apply_row(r);
      for (std::uint64_t i = lo;; ++i) {
        std::uint64_t gray = i ^ (i >> 1);
        if (gray != 0) {
          std::uint64_t wt = 0;
          for (size_t j = 0; j < n; ++j) wt += cur[j] != 0;
          if (wt < best && !member_excl(cur)) best = wt;
        }
        if (i + 1 >= hi) break;
        std::uint64_t change = gray ^ ((i + 1) ^ ((i + 1) >> 1));
        apply_row(static_cast<size_t>(std::countr_zero(change)));
      }
    } else {
      // mixed-radix odometer with incremental row updates
      std::vector<std::uint64_t> digits(k, 0);
      std::vector<std::uint64_t> cur(n, 0);
      std::uint64_t rest = lo;
      for (size_t r = 0; r < k; ++r) {
        digits[r] = rest % q;
        rest /= q;
        if (digits[r])
          for (size_t j = 0; j < n; ++j)
            cur[j] = ff.add(cur[j], ff.mul(digits[r], basis.get(r, j)));
      }
      for (std::uint64_t i = lo;; ++i) {
        if (i != 0) {
          std::uint64_t wt = 0;
          for (size_t j = 0; j < n; ++j) wt += cur[j] != 0;
          if (wt < best && !member_excl(cur)) best = wt;
        }
        if (i + 1 >= hi) break;
        size_t r = 0;
        for (;;) {
          std::uint64_t old = digits[r];
          std::uint64_t next = (old + 1) % q;
          digits[r] = next;
          std::uint64_t delta = ff.sub(next, old);
          for (size_t j = 0; j < n; ++j)
            cur[j] = ff.add(cur[j], ff.mul(delta, basis.get(r, j)));
          if (next != 0) break;
          ++r;
        }
      }
    }
    if (best != std::numeric_limits<std::uint64_t>::max()) results[w] = best;
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (auto& t : threads) t.join();
  }
  std::optional<std::uint64_t> best;
  for (const auto& r : results)
    if (r && (!best || *r < *best)) best = r;
  return best;
}

}  // namespace

std::optional<std::uint64_t> min_weight_excluding(const Matrix& p, const Matrix& q,
                                                  const WeightSearch& ws) {
  return min_weight_core(p.row_canonical(), q.row_canonical(), ws);
}

std::optional<std::uint64_t> LinearCode::min_distance(const WeightSearch& ws) const {
  return min_weight_core(generator(), Matrix(field_, 0, labels_), ws);
}

bool LinearCode::is_information_set(const std::vector<std::string>& coords) const {
  if (coords.size() != dim()) return false;
  return generator().restrict_columns(coords).rank() == dim();
}

bool LinearCode::is_mds(std::uint64_t subset_budget) const {
  size_t n = length(), k = dim();
  std::uint64_t count = checked_binomial(n, k);
  if (count > subset_budget) fail_budget("too many k-subsets for the MDS check");
  if (k == 0) return true;
  std::vector<size_t> idx(k);
  for (size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::vector<std::string> coords;
    for (size_t i : idx) coords.push_back(labels_[i]);
    if (!is_information_set(coords)) return false;
    size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

LinearCode LinearCode::puncture(const std::vector<std::string>& keep) const {
  return from_generator(generator().restrict_columns(keep));
}

LinearCode LinearCode::tensor(std::span<const LinearCode> components) {
  require(!components.empty(), "tensor of no codes");
  const FieldPtr& f = components[0].field();
  size_t d = components.size();
  std::vector<size_t> lens(d);
  size_t total = 1;
  for (size_t i = 0; i < d; ++i) {
    require(components[i].field()->same(*f), "field mismatch");
    lens[i] = components[i].length();
    total *= lens[i];
  }
  // flat tuple labels in row-major order
  std::vector<std::string> labels(total);
  for (size_t idx = 0; idx < total; ++idx) {
    size_t rest = idx;
    std::vector<size_t> multi(d);
    for (size_t i = d; i-- > 0;) {
      multi[i] = rest % lens[i];
      rest /= lens[i];
    }
    std::string l = "(";
    for (size_t i = 0; i < d; ++i) {
      if (i) l += ",";
      l += components[i].labels()[multi[i]];
    }
    l += ")";
    labels[idx] = l;
  }
  // stack a lift of each factor's parity matrix: identity on every other axis
  std::vector<std::vector<std::uint64_t>> rows;
  for (size_t i = 0; i < d; ++i) {
    const Matrix& hi = components[i].parity();
    size_t other = total / lens[i];
    // rows indexed by (parity row r, assignment of the other axes)
    for (size_t r = 0; r < hi.rows(); ++r) {
      for (size_t rest_idx = 0; rest_idx < other; ++rest_idx) {
        std::vector<std::uint64_t> row(total, 0);
        // decode rest_idx into the other axes (row-major among them)
        std::vector<size_t> multi(d, 0);
        size_t rest = rest_idx;
        for (size_t a = d; a-- > 0;) {
          if (a == i) continue;
          multi[a] = rest % lens[a];
          rest /= lens[a];
        }
        for (size_t x = 0; x < lens[i]; ++x) {
          multi[i] = x;
          size_t flat = 0;
          for (size_t a = 0; a < d; ++a) flat = flat * lens[a] + multi[a];
          row[flat] = hi.get(r, x);
        }
        rows.push_back(std::move(row));
      }
    }
  }
  Matrix h = rows.empty() ? Matrix(f, 0, labels) : Matrix::from_rows(f, rows, labels);
  return from_parity(h);
}

GroupPtr Group::from_table(const std::vector<std::vector<size_t>>& table) {
  size_t n = table.size();
  require(n >= 1 && n <= 64, "group order must be between 1 and 64");
  for (const auto& row : table) {
    require(row.size() == n, "multiplication table must be square");
    for (size_t v : row) require(v < n, "table entry out of range");
  }
  auto g = std::shared_ptr<Group>(new Group());
  g->table_ = table;
  // identity
  size_t id = n;
  for (size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (size_t a = 0; a < n; ++a) ok &= table[e][a] == a && table[a][e] == a;
    if (ok) {
      id = e;
      break;
    }
  }
  require(id < n, "table has no identity element");
  g->identity_ = id;
  g->inverse_.assign(n, n);
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b)
      if (table[a][b] == id && table[b][a] == id) g->inverse_[a] = b;
    require(g->inverse_[a] < n, "element without inverse");
  }
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c)
        require(table[table[a][b]][c] == table[a][table[b][c]], "table is not associative");
  return g;
}

GroupPtr Group::cyclic(size_t n) {
  std::vector<std::vector<size_t>> table(n, std::vector<size_t>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  return from_table(table);
}

GroupPtr Group::trivial() { return cyclic(1); }

GroupAlgebraElement ga_mul(const Field& f, const Group& g, const GroupAlgebraElement& a,
                           const GroupAlgebraElement& b) {
  size_t n = g.order();
  GroupAlgebraElement out(n, 0);
  for (size_t s = 0; s < n; ++s) {
    if (a[s] == 0) continue;
    for (size_t t = 0; t < n; ++t) {
      if (b[t] == 0) continue;
      size_t h = g.mul(s, t);
      out[h] = f.add(out[h], f.mul(a[s], b[t]));
    }
  }
  return out;
}

GroupAlgebraElement ga_antipode(const Group& g, const GroupAlgebraElement& a) {
  GroupAlgebraElement out(g.order(), 0);
  for (size_t s = 0; s < g.order(); ++s) out[g.inverse(s)] = a[s];
  return out;
}

std::uint64_t ga_epsilon(const Field& f, const GroupAlgebraElement& a) {
  std::uint64_t s = 0;
  for (auto c : a) s = f.add(s, c);
  return s;
}

GroupAlgebraMatrix::GroupAlgebraMatrix(FieldPtr field, GroupPtr group, size_t rows, size_t cols)
    : field_(std::move(field)), group_(std::move(group)), rows_(rows), cols_(cols) {
  entries_.assign(rows_ * cols_, GroupAlgebraElement(group_->order(), 0));
}

void GroupAlgebraMatrix::set(size_t i, size_t j, GroupAlgebraElement e) {
  require(e.size() == group_->order(), "coefficient vector length mismatch");
  for (auto c : e) require(c < field_->order(), "coefficient out of field range");
  entries_[i * cols_ + j] = std::move(e);
}

Matrix GroupAlgebraMatrix::lift() const {
  size_t n = group_->order();
  std::vector<std::string> labels;
  for (size_t j = 0; j < cols_; ++j)
    for (size_t h = 0; h < n; ++h) labels.push_back("(" + std::to_string(j) + "," + std::to_string(h) + ")");
  Matrix m(field_, rows_ * n, labels);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      const auto& e = get(i, j);
      // block row g, block col h carries the coefficient of h in e*g
      for (size_t g = 0; g < n; ++g)
        for (size_t s = 0; s < n; ++s) {
          if (e[s] == 0) continue;
          size_t h = group_->mul(s, g);
          m.set(i * n + g, j * n + h, field_->add(m.get(i * n + g, j * n + h), e[s]));
        }
    }
  return m;
}

GroupAlgebraMatrix GroupAlgebraMatrix::transpose() const {
  GroupAlgebraMatrix t(field_, group_, cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.set(j, i, get(i, j));
  return t;
}

GroupAlgebraMatrix GroupAlgebraMatrix::antipode() const {
  GroupAlgebraMatrix t(field_, group_, rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) t.set(i, j, ga_antipode(*group_, get(i, j)));
  return t;
}

Matrix GroupAlgebraMatrix::epsilon() const {
  Matrix m(field_, rows_, cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) m.set(i, j, ga_epsilon(*field_, get(i, j)));
  return m;
}

namespace {

Matrix repetition_map(const FieldPtr& f, const std::vector<std::string>& domain,
                      const std::vector<std::vector<size_t>>& orbits,
                      const std::vector<std::string>& orbit_labels) {
  // matrix of rho_G: F^{S/G} -> F^S
  Matrix p(f, domain.size(), orbit_labels);
  for (size_t o = 0; o < orbits.size(); ++o)
    for (size_t x : orbits[o]) p.set(x, o, 1);
  return p;
}

std::vector<std::string> orbit_labels_of(const PermutationAction& action,
                                         const std::vector<std::vector<size_t>>& orbits) {
  std::vector<std::string> out;
  for (const auto& o : orbits) {
    std::vector<std::string> members;
    for (size_t i : o) members.push_back(action.domain[i]);
    out.push_back(orbit_label(members));
  }
  return out;
}

}  // namespace

LinearCode quotient_code(const LinearCode& c, const PermutationAction& action) {
  require(action.domain == c.labels(), "action must permute the code coordinates");
  auto orbits = action.orbits();
  auto labels = orbit_labels_of(action, orbits);
  Matrix p = repetition_map(c.field(), c.labels(), orbits, labels);
  return LinearCode::from_parity(c.parity().mul(p));
}

LinearCode invariants_code(const LinearCode& c, const PermutationAction& action) {
  require(action.domain == c.labels(), "action must permute the code coordinates");
  size_t n = c.length();
  std::vector<std::vector<std::uint64_t>> rows;
  const Field& f = *c.field();
  for (const auto& g : action.generators) {
    // fixed-vector constraint: c(g^{-1} x) - c(x) = 0. Row per coordinate x;
    // g maps index y to g[y], so g^{-1} x is the preimage of x.
    std::vector<size_t> pre(n);
    for (size_t y = 0; y < n; ++y) pre[g[y]] = y;
    for (size_t x = 0; x < n; ++x) {
      if (pre[x] == x) continue;
      std::vector<std::uint64_t> row(n, 0);
      row[pre[x]] = 1;
      row[x] = f.sub(row[x], 1);
      rows.push_back(std::move(row));
    }
  }
  Matrix extra = rows.empty() ? Matrix(c.field(), 0, c.labels())
                              : Matrix::from_rows(c.field(), rows, c.labels());
  return LinearCode::from_parity(c.parity().append_rows(extra));
}

LinearCode coinvariants_code(const LinearCode& c, const PermutationAction& action) {
  require(action.domain == c.labels(), "action must permute the code coordinates");
  auto orbits = action.orbits();
  auto labels = orbit_labels_of(action, orbits);
  Matrix p = repetition_map(c.field(), c.labels(), orbits, labels);
  // generator rows map through the orbit-sum operator: c -> (sum over orbit)
  return LinearCode::from_generator(c.generator().mul(p));
}

bool is_g_code(const LinearCode& c, const PermutationAction& action) {
  if (action.domain != c.labels()) return false;
  const Matrix& g = c.generator();
  for (const auto& perm : action.generators) {
    for (size_t r = 0; r < g.rows(); ++r) {
      std::vector<std::uint64_t> moved(c.length(), 0);
      for (size_t x = 0; x < c.length(); ++x) moved[perm[x]] = g.get(r, x);
      if (!c.contains(moved)) return false;
    }
  }
  return true;
}

LinearCode balanced_product_codes(const LinearCode& a, const PermutationAction& act_a,
                                  const LinearCode& b, const PermutationAction& act_b) {
  require(act_a.generators.size() == act_b.generators.size(),
          "actions must share one generator list");
  require(is_g_code(a, act_a), "left factor is not invariant under the action");
  require(is_g_code(b, act_b), "right factor is not invariant under the action");
  std::array<LinearCode, 2> comps = {a, b};
  LinearCode t = LinearCode::tensor(comps);
  // diagonal action on the product coordinates
  size_t na = a.length(), nb = b.length();
  std::vector<std::vector<size_t>> gens;
  for (size_t gi = 0; gi < act_a.generators.size(); ++gi) {
    std::vector<size_t> perm(na * nb);
    for (size_t x = 0; x < na; ++x)
      for (size_t y = 0; y < nb; ++y)
        perm[x * nb + y] = act_a.generators[gi][x] * nb + act_b.generators[gi][y];
    gens.push_back(std::move(perm));
  }
  auto action = PermutationAction::make(t.labels(), gens);
  return quotient_code(t, action);
}

CssCode::CssCode(LinearCode a, LinearCode b) : a_(std::move(a)), b_(std::move(b)) {
  require(a_.labels() == b_.labels(), "CSS pair must share the index set");
  require(b_.subcode_of(a_), "CSS pair requires B <= A");
}

std::optional<std::uint64_t> CssCode::d_x(const WeightSearch& ws) const {
  return min_weight_excluding(a_.generator(), b_.generator(), ws);
}

std::optional<std::uint64_t> CssCode::d_z(const WeightSearch& ws) const {
  // weights over B-perp \ A-perp
  return min_weight_excluding(b_.dual().generator(), a_.dual().generator(), ws);
}

namespace {

struct LpShape {
  size_t na, nb, ma, mb, n;  // u is na x nb over R, v is ma x mb over R
};

// Assembles the CSS pair for the lifted product from coefficient equations.
CssCode lp_build(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b, bool transpose_b) {
  require(a.field()->same(*b.field()), "field mismatch");
  require(a.group().get() == b.group().get() || a.group()->table() == b.group()->table(),
          "group mismatch");
  const Field& f = *a.field();
  const Group& g = *a.group();
  size_t go = g.order();
  LpShape s;
  s.ma = a.rows();
  s.na = a.cols();
  if (transpose_b) {
    // pairs (u, v), u in R^{na x nb}, v in R^{ma x mb}, with A u = v B
    s.mb = b.rows();
    s.nb = b.cols();
  } else {
    // A u = v B^T
    s.mb = b.cols();
    s.nb = b.rows();
  }
  s.n = (s.na * s.nb + s.ma * s.mb) * go;

  std::vector<std::string> labels;
  for (size_t i = 0; i < s.na; ++i)
    for (size_t j = 0; j < s.nb; ++j)
      for (size_t h = 0; h < go; ++h)
        labels.push_back("u(" + std::to_string(i) + "," + std::to_string(j) + "," +
                         std::to_string(h) + ")");
  for (size_t i = 0; i < s.ma; ++i)
    for (size_t j = 0; j < s.mb; ++j)
      for (size_t h = 0; h < go; ++h)
        labels.push_back("v(" + std::to_string(i) + "," + std::to_string(j) + "," +
                         std::to_string(h) + ")");
  auto ucol = [&](size_t i, size_t j, size_t h) { return (i * s.nb + j) * go + h; };
  auto vcol = [&](size_t i, size_t j, size_t h) { return s.na * s.nb * go + (i * s.mb + j) * go + h; };
  auto bentry = [&](size_t k, size_t c) -> const GroupAlgebraElement& {
    return transpose_b ? b.get(k, c) : b.get(c, k);
  };

  // parity: (A u)[r,c] - (v B)[r,c] = 0, coefficientwise over G
  Matrix hx(a.field(), s.ma * s.nb * go, labels);
  for (size_t r = 0; r < s.ma; ++r)
    for (size_t c = 0; c < s.nb; ++c)
      for (size_t h = 0; h < go; ++h) {
        size_t row = (r * s.nb + c) * go + h;
        for (size_t i = 0; i < s.na; ++i) {
          const auto& e = a.get(r, i);
          for (size_t gg = 0; gg < go; ++gg) {
            // coefficient of u[i,c]_gg in (A u)[r,c]_h is A[r,i]_{h gg^{-1}}
            std::uint64_t coef = e[g.mul(h, g.inverse(gg))];
            if (coef)
              hx.set(row, ucol(i, c, gg), f.add(hx.get(row, ucol(i, c, gg)), coef));
          }
        }
        for (size_t k = 0; k < s.mb; ++k) {
          const auto& e = bentry(k, c);
          for (size_t gg = 0; gg < go; ++gg) {
            // coefficient of v[r,k]_gg in (v B)[r,c]_h is B[k,c]_{gg^{-1} h}
            std::uint64_t coef = e[g.mul(g.inverse(gg), h)];
            if (coef)
              hx.set(row, vcol(r, k, gg), f.sub(hx.get(row, vcol(r, k, gg)), coef));
          }
        }
      }

  // degenerate words: w in R^{na x mb} maps to (w B, A w)
  Matrix gb(a.field(), s.na * s.mb * go, labels);
  for (size_t i = 0; i < s.na; ++i)
    for (size_t k = 0; k < s.mb; ++k)
      for (size_t gg = 0; gg < go; ++gg) {
        size_t row = (i * s.mb + k) * go + gg;
        for (size_t c = 0; c < s.nb; ++c) {
          const auto& e = bentry(k, c);
          for (size_t h = 0; h < go; ++h) {
            // (w B)[i,c]_h picks up w[i,k]_gg * B[k,c]_{gg^{-1} h}
            std::uint64_t coef = e[g.mul(g.inverse(gg), h)];
            if (coef) gb.set(row, ucol(i, c, h), f.add(gb.get(row, ucol(i, c, h)), coef));
          }
        }
        for (size_t r = 0; r < s.ma; ++r) {
          const auto& e = a.get(r, i);
          for (size_t h = 0; h < go; ++h) {
            // (A w)[r,k]_h picks up A[r,i]_{h gg^{-1}} * w[i,k]_gg
            std::uint64_t coef = e[g.mul(h, g.inverse(gg))];
            if (coef) gb.set(row, vcol(r, k, h), f.add(gb.get(row, vcol(r, k, h)), coef));
          }
        }
      }

  return CssCode(LinearCode::from_parity(hx), LinearCode::from_generator(gb));
}

}  // namespace

CssCode lp_code(const GroupAlgebraMatrix& a, const GroupAlgebraMatrix& b, bool transpose_b) {
  return lp_build(a, b, transpose_b);
}

CssCode hp_code(const Matrix& a, const Matrix& b, bool transpose_b) {
  require(a.field()->same(*b.field()), "field mismatch");
  auto g1 = Group::trivial();
  GroupAlgebraMatrix ga(a.field(), g1, a.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) ga.set(i, j, {a.get(i, j)});
  GroupAlgebraMatrix gb(b.field(), g1, b.rows(), b.cols());
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) gb.set(i, j, {b.get(i, j)});
  return lp_build(ga, gb, transpose_b);
}

CssCode gb_code(const FieldPtr& f, const GroupPtr& g, const GroupAlgebraElement& a,
                const GroupAlgebraElement& b) {
  GroupAlgebraMatrix ma(f, g, 1, 1), mb(f, g, 1, 1);
  ma.set(0, 0, a);
  mb.set(0, 0, b);
  return lp_build(ma, mb, true);
}

GroupAlgebraMatrix zemor_parity(const FieldPtr& f, const GroupPtr& g,
                                const std::vector<size_t>& s, const Matrix& h) {
  require(s.size() == h.cols(), "generator count must equal the local block length");
  for (size_t x : s) require(x < g->order(), "generator index out of range");
  size_t m = h.rows(), delta = h.cols();
  GroupAlgebraMatrix z(f, g, 2 * m, delta);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < delta; ++j) {
      GroupAlgebraElement top(g->order(), 0), bottom(g->order(), 0);
      top[g->identity()] = h.get(i, j);
      bottom[s[j]] = h.get(i, j);
      z.set(i, j, top);
      z.set(m + i, j, bottom);
    }
  return z;
}

}  // namespace sheafforge
