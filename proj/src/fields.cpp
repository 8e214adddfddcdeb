#include "sheafforge/fields.hpp"

#include <algorithm>
#include <sstream>

namespace sheafforge {

namespace {

using Poly = std::vector<std::uint64_t>;  // coefficients low-to-high over F_p

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
  // Fermat; p is prime and a != 0.
  std::uint64_t r = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r;
}

// Remainder of a mod b (b nonzero), coefficients over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint64_t p) {
  trim(a);
  std::uint64_t lead_inv = inv_mod_prime(b.back(), p);
  while (deg(a) >= deg(b)) {
    std::uint64_t c = a.back() * lead_inv % p;
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      std::uint64_t sub = c * b[i] % p;
      a[shift + i] = (a[shift + i] + p - sub) % p;
    }
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod, std::uint64_t p) {
  return poly_mod(poly_mul(a, b, p), mod, p);
}

// x^(p^k) mod f via k successive Frobenius powers.
Poly frobenius_power(const Poly& f, std::uint64_t p, unsigned k) {
  Poly x = {0, 1};
  Poly acc = poly_mod(x, f, p);
  for (unsigned i = 0; i < k; ++i) {
    // acc = acc^p mod f by square-and-multiply on the exponent p.
    Poly r = {1};
    Poly base = acc;
    std::uint64_t e = p;
    while (e) {
      if (e & 1) r = poly_mulmod(r, base, f, p);
      base = poly_mulmod(base, base, f, p);
      e >>= 1;
    }
    acc = std::move(r);
  }
  return acc;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> fs;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) fs.push_back(n);
  return fs;
}

Poly decode_poly(std::uint64_t enc, std::uint64_t p) {
  Poly out;
  while (enc) {
    out.push_back(enc % p);
    enc /= p;
  }
  return out;
}

}  // namespace

bool Field::is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool Field::is_irreducible(const std::vector<std::uint64_t>& poly, std::uint64_t p) {
  Poly f = poly;
  trim(f);
  int t = deg(f);
  require(t >= 1, "modulus must have positive degree");
  if (t == 1) return true;
  // Trial factorization when the candidate divisor space is small, otherwise
  // the derandomized Rabin criterion.
  std::uint64_t trial_count = checked_pow(p, static_cast<std::uint64_t>(t / 2 + 1));
  if (trial_count <= (1u << 20)) {
    for (int d = 1; d <= t / 2; ++d) {
      std::uint64_t count = checked_pow(p, static_cast<std::uint64_t>(d));
      for (std::uint64_t low = 0; low < count; ++low) {
        Poly g = decode_poly(low, p);
        g.resize(d + 1, 0);
        g[d] = 1;
        if (poly_mod(f, g, p).empty()) return false;
      }
    }
    return true;
  }
  unsigned n = static_cast<unsigned>(t);
  for (std::uint64_t r : prime_factors(n)) {
    Poly h = frobenius_power(f, p, n / static_cast<unsigned>(r));
    // h - x must be coprime with f
    Poly diff = h;
    diff.resize(std::max<size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim(diff);
    Poly g = poly_gcd(f, diff, p);
    if (deg(g) != 0) return false;
  }
  Poly top = frobenius_power(f, p, n);
  Poly x = {0, 1};
  return poly_mod(top, f, p) == poly_mod(x, f, p);
}

std::shared_ptr<const Field> Field::make(std::uint64_t p, unsigned t,
                                         std::optional<std::vector<std::uint64_t>> modulus) {
  if (!is_prime(p)) fail("field characteristic must be prime, got " + std::to_string(p));
  require(t >= 1, "extension degree must be >= 1");
  require(p < (1u << 20), "characteristic too large");
  // Keep p^t inside the 62-bit encoding range.
  unsigned __int128 q = 1;
  for (unsigned i = 0; i < t; ++i) {
    q *= p;
    require(q < (static_cast<unsigned __int128>(1) << 62), "field order too large");
  }
  Poly m;
  if (modulus) {
    m = *modulus;
    trim(m);
    require(deg(m) == static_cast<int>(t), "modulus degree must equal extension degree");
    for (auto& c : m) require(c < p, "modulus coefficient out of range");
    require(m.back() == 1, "modulus must be monic");
    if (!is_irreducible(m, p)) fail("modulus is reducible over F_p");
  } else {
    // Smallest monic irreducible in low-to-high lexicographic coefficient
    // order, so c_0 is the most significant digit of the search index.
    std::uint64_t count = checked_pow(p, t);
    bool found = false;
    for (std::uint64_t idx = 0; idx < count && !found; ++idx) {
      Poly cand(t + 1, 0);
      cand[t] = 1;
      std::uint64_t weight = count / p;
      std::uint64_t left = idx;
      for (unsigned pos = 0; pos < t; ++pos) {
        cand[pos] = left / weight;
        left %= weight;
        weight = (pos + 1 < t) ? weight / p : 1;
      }
      if (is_irreducible(cand, p)) {
        m = cand;
        found = true;
      }
    }
    require(found, "no irreducible polynomial found");
  }
  return std::shared_ptr<const Field>(new Field(p, t, std::move(m)));
}

Field::Field(std::uint64_t p, unsigned t, std::vector<std::uint64_t> modulus)
    : p_(p), t_(t), modulus_(std::move(modulus)) {
  q_ = checked_pow(p_, t_);
  if (q_ <= (1u << 16)) build_tables();
}

std::uint64_t Field::mul_slow(std::uint64_t a, std::uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  Poly pa = decode_poly(a, p_);
  Poly pb = decode_poly(b, p_);
  Poly r = poly_mod(poly_mul(pa, pb, p_), modulus_, p_);
  std::uint64_t enc = 0;
  for (size_t i = r.size(); i-- > 0;) enc = enc * p_ + r[i];
  return enc;
}

void Field::build_tables() {
  // Find a multiplicative generator, then fill log/antilog tables.
  std::uint64_t group = q_ - 1;
  auto factors = prime_factors(group);
  auto pow_slow = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1, base = a;
    while (e) {
      if (e & 1) r = mul_slow(r, base);
      base = mul_slow(base, base);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t gen = 0;
  for (std::uint64_t g = 1; g < q_; ++g) {
    bool ok = g != 0;
    for (std::uint64_t r : factors) {
      if (pow_slow(g, group / r) == 1) {
        ok = false;
        break;
      }
    }
    if (ok && pow_slow(g, group) == 1) {
      gen = g;
      break;
    }
  }
  require(gen != 0, "no multiplicative generator found");
  exp_.assign(2 * group, 0);
  log_.assign(q_, 0);
  std::uint64_t cur = 1;
  for (std::uint64_t i = 0; i < group; ++i) {
    exp_[i] = cur;
    exp_[i + group] = cur;
    log_[cur] = i;
    cur = mul_slow(cur, gen);
  }
  tables_ = true;
}

std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const {
  if (p_ == 2) return a ^ b;
  std::uint64_t r = 0, mult = 1;
  while (a || b) {
    std::uint64_t da = a % p_, db = b % p_;
    r += (da + db) % p_ * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

std::uint64_t Field::neg(std::uint64_t a) const {
  if (p_ == 2) return a;
  std::uint64_t r = 0, mult = 1;
  while (a) {
    std::uint64_t da = a % p_;
    r += (p_ - da) % p_ * mult;
    mult *= p_;
    a /= p_;
  }
  return r;
}

std::uint64_t Field::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
  if (a == 0 || b == 0) return 0;
  if (tables_) return exp_[log_[a] + log_[b]];
  return mul_slow(a, b);
}

std::uint64_t Field::inv(std::uint64_t a) const {
  if (a == 0) fail("division by zero");
  if (tables_) return exp_[(q_ - 1) - log_[a]];
  return pow(a, q_ - 2);
}

std::uint64_t Field::div(std::uint64_t a, std::uint64_t b) const { return mul(a, inv(b)); }

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  if (tables_) {
    std::uint64_t group = q_ - 1;
    return exp_[static_cast<std::uint64_t>((static_cast<unsigned __int128>(log_[a]) * e) % group)];
  }
  std::uint64_t r = 1, base = a;
  while (e) {
    if (e & 1) r = mul_slow(r, base);
    base = mul_slow(base, base);
    e >>= 1;
  }
  return r;
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p_;
  if (t_ > 1) os << "^" << t_;
  os << ")";
  return os.str();
}

}  // namespace sheafforge
