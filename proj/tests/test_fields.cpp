#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sheafforge/fields.hpp"

using namespace sheafforge;

namespace {

// Independent irreducibility oracle: a polynomial of degree <= 4 over F_2 is
// reducible iff it has a root or is divisible by the one irreducible
// quadratic x^2+x+1.
bool reducible_deg_le4_f2(const std::vector<std::uint64_t>& c) {
  auto eval = [&](std::uint64_t x) {
    std::uint64_t acc = 0, xp = 1;
    for (auto ci : c) {
      if (ci & 1) acc ^= xp;
      xp = xp * x;
    }
    return acc & 1;
  };
  if (eval(0) == 0 || eval(1) == 0) return true;
  // division by x^2+x+1 via linear recurrence on coefficients
  std::vector<std::uint64_t> r = c;
  while (r.size() > 2) {
    std::uint64_t lead = r.back() & 1;
    size_t d = r.size() - 1;
    if (lead) {
      r[d] ^= 1;
      r[d - 1] ^= 1;
      r[d - 2] ^= 1;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.size() <= 2) break;
  }
  bool divisible = r.empty() || std::all_of(r.begin(), r.end(), [](std::uint64_t v) { return v == 0; });
  return divisible;
}

}  // namespace

TEST_CASE("prime field and forced GF(4) modulus") {
  auto f2 = Field::make(2, 1);
  CHECK(f2->order() == 2);
  CHECK(f2->modulus() == std::vector<std::uint64_t>{0, 1});  // x
  CHECK(f2->add(1, 1) == 0);

  auto f4 = Field::make(2, 2);
  CHECK(f4->modulus() == std::vector<std::uint64_t>{1, 1, 1});  // x^2+x+1
  CHECK(f4->mul(2, 2) == 3);                                    // x*x = x+1
}

TEST_CASE("explicit GF(16) modulus accepted after an independent check") {
  std::vector<std::uint64_t> mod = {1, 1, 0, 0, 1};  // x^4+x+1
  CHECK_FALSE(reducible_deg_le4_f2(mod));
  auto f16 = Field::make(2, 4, mod);
  CHECK(f16->order() == 16);
  // multiplicative order of x divides 15; brute-force powers
  std::uint64_t acc = 1;
  for (int i = 0; i < 15; ++i) acc = f16->mul(acc, 2);
  CHECK(acc == 1);
  CHECK(f16->pow(2, 15) == 1);

  std::vector<std::uint64_t> red = {1, 0, 0, 0, 1};  // x^4+1 = (x+1)^4
  CHECK(reducible_deg_le4_f2(red));
  CHECK_THROWS_AS(Field::make(2, 4, red), Error);
}

TEST_CASE("constructor rejections") {
  CHECK_THROWS_AS(Field::make(4, 1), Error);   // non-prime
  CHECK_THROWS_AS(Field::make(6, 2), Error);   // non-prime
  CHECK_THROWS_AS(Field::make(2, 3, std::vector<std::uint64_t>{1, 1, 1}), Error);  // wrong degree
}

TEST_CASE("field axioms hold exhaustively for small orders") {
  for (auto [p, t] : {std::pair<std::uint64_t, unsigned>{2, 1}, {3, 1}, {2, 2}, {5, 1},
                      {7, 1}, {2, 3}, {3, 2}, {2, 4}, {5, 2}, {3, 3}, {2, 5}, {2, 6}}) {
    auto f = Field::make(p, t);
    std::uint64_t q = f->order();
    for (std::uint64_t a = 0; a < q; ++a) {
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
      for (std::uint64_t b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
        for (std::uint64_t c = 0; c < q; ++c) {
          CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
          CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
    }
  }
}

TEST_CASE("field axioms on the largest table-backed orders, pairwise plus strided triples") {
  for (auto [p, t] : {std::pair<std::uint64_t, unsigned>{2, 8}, {3, 5}, {5, 3}, {2, 7}}) {
    auto f = Field::make(p, t);
    std::uint64_t q = f->order();
    for (std::uint64_t a = 0; a < q; ++a) {
      CHECK(f->add(a, f->neg(a)) == 0);
      if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
      for (std::uint64_t b = 0; b < q; ++b) {
        CHECK(f->add(a, b) == f->add(b, a));
        CHECK(f->mul(a, b) == f->mul(b, a));
      }
    }
    for (std::uint64_t a = 0; a < q; a += 3)
      for (std::uint64_t b = 1; b < q; b += 5)
        for (std::uint64_t c = 2; c < q; c += 7) {
          CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
          CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
          CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
        }
  }
}

TEST_CASE("Frobenius is additive") {
  for (auto [p, t] : {std::pair<std::uint64_t, unsigned>{2, 4}, {3, 3}, {5, 2}, {2, 8}, {7, 2}, {13, 2}}) {
    auto f = Field::make(p, t);
    for (std::uint64_t a = 0; a < f->order(); ++a)
      for (std::uint64_t b = 0; b < f->order(); ++b)
        CHECK(f->pow(f->add(a, b), p) == f->add(f->pow(a, p), f->pow(b, p)));
  }
}

TEST_CASE("default modulus is deterministic") {
  for (auto [p, t] : {std::pair<std::uint64_t, unsigned>{2, 4}, {3, 3}, {2, 8}}) {
    auto a = Field::make(p, t);
    auto b = Field::make(p, t);
    CHECK(a->modulus() == b->modulus());
    CHECK(a->same(*b));
  }
}

TEST_CASE("element wrapper checks field identity") {
  auto f4 = Field::make(2, 2);
  auto f8 = Field::make(2, 3);
  FieldElement a(2, f4), b(3, f4), c(2, f8);
  CHECK((a * b).value == f4->mul(2, 3));
  CHECK((a + b).value == 1);
  CHECK((-a).value == 2);
  CHECK(a.pow(3).value == 1);  // x^3 = 1 in GF(4)
  CHECK_THROWS_AS(a + c, Error);
  CHECK_THROWS_AS(a / FieldElement(0, f4), Error);
}

TEST_CASE("large tableless field arithmetic stays consistent") {
  auto f = Field::make(2, 20);  // above the table threshold
  std::uint64_t x = 2;
  std::uint64_t acc = 1;
  for (int i = 0; i < 10; ++i) acc = f->mul(acc, x);
  CHECK(acc == f->pow(x, 10));
  CHECK(f->mul(acc, f->inv(acc)) == 1);
  CHECK(f->pow(x, f->order() - 1) == 1);
}
