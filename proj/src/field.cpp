#include "matcode/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace matcode {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

using Poly = std::vector<std::uint32_t>;  // coefficients low to high

int poly_degree(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

// a mod b over GF(p); b must be nonzero.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  const int db = poly_degree(b);
  const std::uint32_t lead = b[db];
  // lead^{-1} mod p by Fermat; p is small
  std::uint32_t inv_lead = 1;
  {
    std::uint64_t base = lead % p, acc = 1, e = p - 2;
    while (e) {
      if (e & 1) acc = (acc * base) % p;
      base = (base * base) % p;
      e >>= 1;
    }
    inv_lead = static_cast<std::uint32_t>(acc);
  }
  int da = poly_degree(a);
  while (da >= db) {
    const std::uint32_t factor = (a[da] * inv_lead) % p;
    if (factor != 0) {
      for (int i = 0; i <= db; ++i) {
        const std::uint32_t sub = (factor * b[i]) % p;
        const int pos = da - db + i;
        a[pos] = (a[pos] + p - sub) % p;
      }
    }
    da = poly_degree(a);
  }
  return a;
}

bool poly_is_zero(const Poly& a) { return poly_degree(a) < 0; }

// Irreducibility over GF(p) by trial division with every monic polynomial
// of degree up to deg/2; any factorization contains such a divisor.
bool poly_irreducible(const Poly& f, std::uint32_t p) {
  const int deg = poly_degree(f);
  if (deg <= 0) return false;
  if (deg == 1) return true;
  for (int d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
      Poly div(d + 1, 0);
      std::uint64_t t = v;
      for (int i = 0; i < d; ++i) {
        div[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      div[d] = 1;
      if (poly_is_zero(poly_mod(f, div, p))) return false;
    }
  }
  return true;
}

}  // namespace

Field::Field(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {
  q_ = 1;
  for (std::uint32_t i = 0; i < n_; ++i) q_ *= p_;

  if (q_ <= 256) {
    // exp/log tables over a primitive element; found by direct order count.
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    std::uint32_t g = 0;
    for (std::uint32_t cand = 2; cand < q_; ++cand) {
      std::uint32_t x = cand, order = 1;
      while (x != 1) {
        x = mul_poly(x, cand);
        ++order;
        if (order > q_) break;
      }
      if (order == q_ - 1) {
        g = cand;
        break;
      }
    }
    if (g == 0 && q_ == 2) g = 1;  // GF(2): the unit group is trivial
    if (g == 0) throw std::logic_error("no primitive element found");
    std::uint32_t x = 1;
    for (std::uint32_t i = 0; i + 1 < q_; ++i) {
      exp_[i] = x;
      log_[x] = i;
      x = mul_poly(x, g);
    }
  }
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t n) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (n < 1) throw std::invalid_argument("field degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > 65536) throw std::invalid_argument("fields beyond 2^16 elements are not supported");
  }
  // Sieve for the irreducible candidate with the smallest packed value.
  for (std::uint64_t v = 0; v < q; ++v) {
    Poly f(n + 1, 0);
    std::uint64_t t = v;
    for (std::uint32_t i = 0; i < n; ++i) {
      f[i] = static_cast<std::uint32_t>(t % p);
      t /= p;
    }
    f[n] = 1;
    if (poly_irreducible(f, p)) return make(p, n, f);
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t n, const std::vector<std::uint32_t>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (n < 1) throw std::invalid_argument("field degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > 65536) throw std::invalid_argument("fields beyond 2^16 elements are not supported");
  }
  if (modulus.size() != n + 1) throw std::invalid_argument("modulus must list n+1 coefficients");
  for (std::uint32_t c : modulus)
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  if (modulus[n] != 1) throw std::invalid_argument("modulus must be monic");
  if (!poly_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible");
  return FieldPtr(new Field(p, n, modulus));
}

void Field::check_value(std::uint32_t v) const {
  if (v >= q_) throw std::invalid_argument("element value out of range");
}

std::uint32_t Field::add(std::uint32_t a, std::uint32_t b) const {
  check_value(a);
  check_value(b);
  if (p_ == 2) return a ^ b;
  std::uint32_t r = 0, shift = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    r += ((a % p_ + b % p_) % p_) * shift;
    a /= p_;
    b /= p_;
    shift *= p_;
  }
  return r;
}

std::uint32_t Field::neg(std::uint32_t a) const {
  check_value(a);
  if (p_ == 2) return a;
  std::uint32_t r = 0, shift = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    r += ((p_ - a % p_) % p_) * shift;
    a /= p_;
    shift *= p_;
  }
  return r;
}

std::uint32_t Field::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t Field::mul_poly(std::uint32_t a, std::uint32_t b) const {
  // schoolbook product of the digit vectors, then reduction by the modulus
  std::vector<std::uint32_t> da(n_), db(n_), prod(2 * n_, 0);
  for (std::uint32_t i = 0; i < n_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (da[i] == 0) continue;
    for (std::uint32_t j = 0; j < n_; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  }
  for (int d = static_cast<int>(2 * n_) - 2; d >= static_cast<int>(n_); --d) {
    const std::uint32_t c = prod[d];
    if (c == 0) continue;
    prod[d] = 0;
    // x^d = x^{d-n} * (x^n) = -x^{d-n} * (modulus - x^n)
    for (std::uint32_t i = 0; i < n_; ++i) {
      const std::uint32_t sub_v = (c * modulus_[i]) % p_;
      const std::uint32_t pos = d - n_ + i;
      prod[pos] = (prod[pos] + p_ - sub_v) % p_;
    }
  }
  std::uint32_t r = 0, shift = 1;
  for (std::uint32_t i = 0; i < n_; ++i) {
    r += prod[i] * shift;
    shift *= p_;
  }
  return r;
}

std::uint32_t Field::mul(std::uint32_t a, std::uint32_t b) const {
  check_value(a);
  check_value(b);
  if (a == 0 || b == 0) return 0;
  if (!exp_.empty()) {
    const std::uint32_t s = log_[a] + log_[b];
    return exp_[s % (q_ - 1)];
  }
  return mul_poly(a, b);
}

std::uint32_t Field::inv(std::uint32_t a) const {
  check_value(a);
  if (a == 0) throw std::invalid_argument("zero has no inverse");
  if (!exp_.empty()) {
    const std::uint32_t l = log_[a];
    return exp_[(q_ - 1 - l) % (q_ - 1)];
  }
  return pow(a, q_ - 2);
}

std::uint32_t Field::div(std::uint32_t a, std::uint32_t b) const { return mul(a, inv(b)); }

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
  check_value(a);
  std::uint32_t acc = 1;
  std::uint32_t base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

FieldElem Field::element(std::uint32_t v) const {
  check_value(v);
  return FieldElem(v, shared_from_this());
}

std::string Field::describe() const {
  std::ostringstream out;
  out << "GF(" << p_;
  if (n_ > 1) out << "^" << n_;
  out << ")";
  return out.str();
}

namespace {
const Field& common_field(const FieldElem& a, const FieldElem& b) {
  if (!a.field || !b.field) throw std::invalid_argument("element has no field");
  if (!a.field->same_as(*b.field))
    throw std::invalid_argument("elements belong to different fields");
  return *a.field;
}
}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
  const Field& f = common_field(*this, o);
  return FieldElem(f.add(value, o.value), field);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  const Field& f = common_field(*this, o);
  return FieldElem(f.sub(value, o.value), field);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  const Field& f = common_field(*this, o);
  return FieldElem(f.mul(value, o.value), field);
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  const Field& f = common_field(*this, o);
  return FieldElem(f.div(value, o.value), field);
}

FieldElem FieldElem::operator-() const {
  if (!field) throw std::invalid_argument("element has no field");
  return FieldElem(field->neg(value), field);
}

FieldElem FieldElem::inverse() const {
  if (!field) throw std::invalid_argument("element has no field");
  return FieldElem(field->inv(value), field);
}

bool FieldElem::operator==(const FieldElem& o) const {
  common_field(*this, o);
  return value == o.value;
}

}  // namespace matcode
