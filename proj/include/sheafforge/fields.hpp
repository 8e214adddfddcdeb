#ifndef SHEAFFORGE_FIELDS_HPP
#define SHEAFFORGE_FIELDS_HPP

#include <memory>
#include <optional>
#include <vector>

#include "sheafforge/common.hpp"

namespace sheafforge {

// A finite field GF(p^t) with a fixed monic irreducible modulus over F_p.
// Elements are encoded as integers in [0, p^t): the base-p digits of the
// encoding are the coordinates in the polynomial basis 1, x, ..., x^{t-1}.
// The encodings 0 and 1 are the additive and multiplicative identities.
//
// All arithmetic is exact. Fields are immutable after construction and safe
// to share between threads.
class Field {
 public:
  // When no modulus is given, the lexicographically smallest monic
  // irreducible of degree t is chosen (coefficient lists compared low-to-high),
  // so two constructions of the same (p, t) are identical.
  static std::shared_ptr<const Field> make(std::uint64_t p, unsigned t,
                                           std::optional<std::vector<std::uint64_t>> modulus = std::nullopt);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return t_; }
  std::uint64_t order() const { return q_; }
  // Monic modulus, coefficients low-to-high, length t+1.
  const std::vector<std::uint64_t>& modulus() const { return modulus_; }

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t div(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;

  // Embeds an integer through the prime subfield.
  std::uint64_t from_int(std::uint64_t n) const { return n % p_; }

  bool same(const Field& other) const {
    return p_ == other.p_ && t_ == other.t_ && modulus_ == other.modulus_;
  }
  std::string describe() const;

  static bool is_prime(std::uint64_t n);
  static bool is_irreducible(const std::vector<std::uint64_t>& poly, std::uint64_t p);

 private:
  Field(std::uint64_t p, unsigned t, std::vector<std::uint64_t> modulus);
  void build_tables();
  std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const;

  std::uint64_t p_;
  unsigned t_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  bool tables_ = false;
  std::vector<std::uint64_t> exp_;  // exp_[i] = g^i, doubled length to skip a reduction
  std::vector<std::uint64_t> log_;  // log_[a] for a != 0
};

using FieldPtr = std::shared_ptr<const Field>;

// An element bound to its field; mixed-field arithmetic is an error.
struct FieldElement {
  std::uint64_t value = 0;
  FieldPtr field;

  FieldElement() = default;
  FieldElement(std::uint64_t v, FieldPtr f) : value(v), field(std::move(f)) {
    require(field != nullptr, "element without a field");
    require(value < field->order(), "element encoding out of range");
  }

  FieldElement operator+(const FieldElement& o) const { return bin(o, &Field::add); }
  FieldElement operator-(const FieldElement& o) const { return bin(o, &Field::sub); }
  FieldElement operator*(const FieldElement& o) const { return bin(o, &Field::mul); }
  FieldElement operator/(const FieldElement& o) const { return bin(o, &Field::div); }
  FieldElement operator-() const { return FieldElement(field->neg(value), field); }
  FieldElement inv() const { return FieldElement(field->inv(value), field); }
  FieldElement pow(std::uint64_t e) const { return FieldElement(field->pow(value, e), field); }
  bool operator==(const FieldElement& o) const {
    check_same(o);
    return value == o.value;
  }

 private:
  void check_same(const FieldElement& o) const {
    require(o.field != nullptr && field->same(*o.field), "field mismatch");
  }
  FieldElement bin(const FieldElement& o, std::uint64_t (Field::*op)(std::uint64_t, std::uint64_t) const) const {
    check_same(o);
    return FieldElement(((*field).*op)(value, o.value), field);
  }
};

}  // namespace sheafforge

#endif
