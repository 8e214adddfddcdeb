#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sheafforge/matrices.hpp"

using namespace sheafforge;

namespace {

Matrix hamming_parity(const FieldPtr& f2) {
  // columns are the binary encodings of 1..7
  std::vector<std::vector<std::uint64_t>> rows(3, std::vector<std::uint64_t>(7, 0));
  for (int col = 1; col <= 7; ++col)
    for (int bit = 0; bit < 3; ++bit) rows[bit][col - 1] = (col >> bit) & 1;
  return Matrix::from_rows(f2, rows);
}

// Independent rank oracle: the row space of an m x n matrix over GF(q) has
// q^rank distinct elements; enumerate all row combinations and count.
size_t rank_by_span_count(const Matrix& m) {
  const Field& f = *m.field();
  std::uint64_t q = f.order();
  std::vector<std::vector<std::uint64_t>> seen;
  std::vector<std::uint64_t> coeff(m.rows(), 0);
  size_t count = 0;
  for (;;) {
    std::vector<std::uint64_t> v(m.cols(), 0);
    for (size_t i = 0; i < m.rows(); ++i)
      for (size_t j = 0; j < m.cols(); ++j)
        v[j] = f.add(v[j], f.mul(coeff[i], m.get(i, j)));
    if (std::find(seen.begin(), seen.end(), v) == seen.end()) seen.push_back(v);
    size_t pos = 0;
    while (pos < coeff.size() && coeff[pos] + 1 == q) coeff[pos++] = 0;
    if (pos == coeff.size()) break;
    ++coeff[pos];
    ++count;
    if (count > 100000) break;  // guard; inputs stay tiny
  }
  size_t r = 0;
  size_t n = seen.size();
  while (n > 1) {
    n /= q;
    ++r;
  }
  return r;
}

Matrix random_matrix(const FieldPtr& f, size_t m, size_t n, std::mt19937_64& rng) {
  Matrix out(f, m, n);
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) out.set(i, j, uniform_below(rng, f->order()));
  return out;
}

}  // namespace

TEST_CASE("rref basics") {
  auto f2 = Field::make(2, 1);
  auto id = Matrix::identity(f2, 2);
  auto e = id.rref();
  CHECK(e.rank == 2);
  CHECK(e.pivot_columns == std::vector<size_t>{0, 1});

  auto ones = Matrix::from_rows(f2, {{1, 1, 1}});
  CHECK(ones.rank() == 1);

  auto h = hamming_parity(f2);
  CHECK(rank_by_span_count(h) == 3);
  CHECK(h.rank() == 3);
}

TEST_CASE("rref is idempotent and pivots increase") {
  std::mt19937_64 rng(7);
  for (auto field : {Field::make(2, 1), Field::make(2, 2), Field::make(3, 1)}) {
    for (int it = 0; it < 30; ++it) {
      auto m = random_matrix(field, 2 + it % 4, 3 + it % 3, rng);
      auto e = m.rref();
      CHECK(e.reduced.rref().reduced.same_content(e.reduced));
      for (size_t i = 1; i < e.pivot_columns.size(); ++i)
        CHECK(e.pivot_columns[i - 1] < e.pivot_columns[i]);
    }
  }
}

TEST_CASE("kernel basis") {
  auto f2 = Field::make(2, 1);
  auto zero = Matrix(f2, 1, 3);
  auto k = zero.kernel_basis();
  CHECK(k.rows() == 3);
  CHECK(k.same_content(Matrix::identity(f2, 3)));

  auto par = Matrix::from_rows(f2, {{1, 1}});
  auto k2 = par.kernel_basis();
  CHECK(k2.rows() == 1);
  CHECK(k2.get(0, 0) == 1);
  CHECK(k2.get(0, 1) == 1);

  auto h = hamming_parity(f2);
  auto hk = h.kernel_basis();
  CHECK(hk.rows() == 4);
  for (size_t r = 0; r < hk.rows(); ++r) {
    std::vector<std::uint64_t> x(7);
    for (size_t j = 0; j < 7; ++j) x[j] = hk.get(r, j);
    auto y = h.mul_vec(x);
    CHECK(std::all_of(y.begin(), y.end(), [](std::uint64_t v) { return v == 0; }));
  }
}

TEST_CASE("rank-nullity and kernel orthogonality on random matrices") {
  std::mt19937_64 rng(11);
  for (auto field : {Field::make(2, 1), Field::make(2, 2), Field::make(3, 1), Field::make(5, 1)}) {
    for (int it = 0; it < 25; ++it) {
      auto m = random_matrix(field, 1 + it % 5, 2 + it % 5, rng);
      auto k = m.kernel_basis();
      CHECK(m.rank() + k.rows() == m.cols());
      for (size_t r = 0; r < k.rows(); ++r) {
        std::vector<std::uint64_t> x(m.cols());
        for (size_t j = 0; j < m.cols(); ++j) x[j] = k.get(r, j);
        auto y = m.mul_vec(x);
        CHECK(std::all_of(y.begin(), y.end(), [](std::uint64_t v) { return v == 0; }));
      }
    }
  }
}

TEST_CASE("kronecker") {
  auto f2 = Field::make(2, 1);
  auto i2 = Matrix::identity(f2, 2);
  CHECK(Matrix::kronecker(i2, i2).rank() == 4);

  auto row = Matrix::from_rows(f2, {{1, 1}});
  auto kr = Matrix::kronecker(row, i2);
  CHECK(kr.rows() == 2);
  CHECK(kr.cols() == 4);
  std::vector<std::vector<std::uint64_t>> expect = {{1, 0, 1, 0}, {0, 1, 0, 1}};
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 4; ++j) CHECK(kr.get(i, j) == expect[i][j]);

  auto f4 = Field::make(2, 2);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 10; ++it) {
    auto a = random_matrix(f4, 3, 3, rng);
    auto b = random_matrix(f4, 3, 3, rng);
    CHECK(Matrix::kronecker(a, b).rank() == a.rank() * b.rank());
  }
}

TEST_CASE("stack zero-pads into the universe") {
  auto f2 = Field::make(2, 1);
  auto a = Matrix::from_rows(f2, {{1}}, {"a"});
  auto b = Matrix::from_rows(f2, {{1}}, {"b"});
  std::vector<Matrix> ms = {a, b};
  auto s = Matrix::stack(ms, {"a", "b"});
  CHECK(s.rows() == 2);
  CHECK(s.get(0, 0) == 1);
  CHECK(s.get(0, 1) == 0);
  CHECK(s.get(1, 0) == 0);
  CHECK(s.get(1, 1) == 1);

  std::vector<Matrix> single = {a};
  CHECK(Matrix::stack(single, {"a"}).same_content(a));

  CHECK_THROWS_AS(Matrix::stack(single, {"b"}), Error);
}

TEST_CASE("stacked kronecker factors give the tensor-code kernel") {
  // [3,2] x [3,1] over F_2: stacking H1 (x) I and I (x) H2 must cut out the
  // same kernel as the direct tensor-product generator.
  auto f2 = Field::make(2, 1);
  auto h1 = Matrix::from_rows(f2, {{1, 1, 1}});           // [3,2]
  auto h2 = Matrix::from_rows(f2, {{1, 1, 0}, {0, 1, 1}});  // [3,1]
  auto i3 = Matrix::identity(f2, 3);
  auto lift1 = Matrix::kronecker(h1, i3);
  auto lift2 = Matrix::kronecker(i3, h2);
  std::vector<Matrix> parts = {lift1, lift2};
  auto h = Matrix::stack(parts, lift1.labels());
  // tensor generator = g1 (x) g2
  auto g1 = h1.kernel_basis();
  auto g2 = h2.kernel_basis();
  auto g = Matrix::kronecker(g1, g2);
  CHECK(h.kernel_basis().row_canonical().same_content(g.restrict_columns(h.labels()).row_canonical()));
}

TEST_CASE("restrict_columns") {
  auto f2 = Field::make(2, 1);
  auto h = hamming_parity(f2);
  auto g = h.kernel_basis();
  CHECK(g.restrict_columns(g.labels()).same_content(g));
  CHECK(g.restrict_columns({}).cols() == 0);
  auto first4 = g.restrict_columns({"0", "1", "2", "3"});
  CHECK(first4.rank() == 4);  // information set

  std::mt19937_64 rng(5);
  for (int it = 0; it < 20; ++it) {
    auto m = random_matrix(Field::make(2, 2), 3, 5, rng);
    auto j = std::vector<std::string>{"0", "2", "4"};
    CHECK(m.restrict_columns(j).rank() <= m.rank());
  }
  CHECK_THROWS_AS(g.restrict_columns({"9"}), Error);
}
