#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace matcode {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

// An element of a specific finite field. Values pack the coefficient vector
// of the residue polynomial in base p, low digit first, so 0 and 1 are the
// additive and multiplicative identities of every field and prime-subfield
// elements are exactly the values below p.
struct FieldElem {
  std::uint32_t value = 0;
  FieldPtr field;

  FieldElem() = default;
  FieldElem(std::uint32_t v, FieldPtr f) : value(v), field(std::move(f)) {}

  bool is_zero() const { return value == 0; }

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem inverse() const;
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }
};

// Exact arithmetic in GF(p^n), q = p^n <= 65536. Immutable after
// construction: multiplication tables (built once for q <= 256) are
// read-only, so a Field may be shared freely across threads.
class Field : public std::enable_shared_from_this<Field> {
 public:
  // modulus: monic irreducible polynomial of degree n over GF(p), listed as
  // n+1 coefficients low to high. When omitted, the candidate with the
  // smallest packed value is chosen by sieve, so (p, n) alone pins the field.
  static FieldPtr make(std::uint32_t p, std::uint32_t n);
  static FieldPtr make(std::uint32_t p, std::uint32_t n,
                       const std::vector<std::uint32_t>& modulus);

  std::uint32_t p() const { return p_; }
  std::uint32_t degree() const { return n_; }
  std::uint32_t q() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  bool same_as(const Field& o) const {
    return p_ == o.p_ && n_ == o.n_ && modulus_ == o.modulus_;
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;  // throws on 0
  std::uint32_t div(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

  bool in_prime_subfield(std::uint32_t a) const { return a < p_; }

  FieldElem element(std::uint32_t v) const;
  FieldElem zero() const { return element(0); }
  FieldElem one() const { return element(1); }

  // "x^3 + x + 1 over GF(2)" style, for messages.
  std::string describe() const;

 private:
  Field(std::uint32_t p, std::uint32_t n, std::vector<std::uint32_t> modulus);

  std::uint32_t mul_poly(std::uint32_t a, std::uint32_t b) const;
  void check_value(std::uint32_t v) const;

  std::uint32_t p_, n_, q_;
  std::vector<std::uint32_t> modulus_;
  // exp/log tables over a primitive element; empty when q > 256.
  std::vector<std::uint32_t> exp_, log_;
};

}  // namespace matcode
