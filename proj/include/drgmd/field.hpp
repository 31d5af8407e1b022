#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace drg {

// Element code of a finite field. For GF(p^m) built over GF(p) the code of
// a_0 + a_1 x + ... + a_{m-1} x^{m-1} is sum a_i p^i; for an extension of
// degree d over GF(q) the digits are base-q codes of the coefficients.
using Code = std::uint16_t;

inline constexpr int kMaxFieldOrder = 4096;

class Field {
 public:
  /// Prime field GF(p). Throws NotPrime / TooLarge.
  static std::shared_ptr<const Field> prime(int p);

  /// Field of order base.order()^d defined by a monic irreducible `modulus`
  /// (low-degree coefficient first, length d + 1) over `base`.
  static std::shared_ptr<const Field> extension(const Field& base, std::span<const Code> modulus);

  int characteristic() const noexcept { return p_; }
  int degree() const noexcept { return m_; }
  int order() const noexcept { return q_; }
  // Order of the field the modulus coefficients live in (p for fields built
  // directly over the prime field).
  int base_order() const noexcept { return base_q_; }
  const std::vector<Code>& modulus() const noexcept { return modulus_; }

  Code add(Code a, Code b) const noexcept { return add_[index(a, b)]; }
  Code mul(Code a, Code b) const noexcept { return mul_[index(a, b)]; }
  Code neg(Code a) const noexcept { return neg_[a]; }
  Code sub(Code a, Code b) const noexcept { return add(a, neg(b)); }
  Code inv(Code a) const;  // throws ZeroInverse
  Code pow(Code a, std::uint64_t k) const noexcept;

  std::span<const Code> add_table() const noexcept { return add_; }
  std::span<const Code> mul_table() const noexcept { return mul_; }
  std::span<const Code> inv_table() const noexcept { return inv_; }

  bool same_as(const Field& other) const noexcept;

 private:
  Field() = default;
  std::size_t index(Code a, Code b) const noexcept {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(q_) + b;
  }

  int p_ = 0;
  int m_ = 0;
  int q_ = 0;
  int base_q_ = 0;
  std::vector<Code> modulus_;
  std::vector<Code> add_;
  std::vector<Code> mul_;
  std::vector<Code> neg_;
  std::vector<Code> inv_;  // inv_[0] is unused (0)
};

using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^m) with the smallest monic irreducible modulus over GF(p), where
/// polynomials are ordered by their integer code. Results are cached and
/// shared.
FieldPtr make_field(int p, int m);

/// GF(q) for a prime power q; same object as make_field(p, m).
FieldPtr field_of_order(int q);

/// Splits q = p^m; returns false when q is not a prime power.
bool prime_power(int q, int& p, int& m) noexcept;
bool is_prime(int n) noexcept;

/// GF(q^d) as a d-dimensional vector space over GF(q) with basis
/// {1, x, ..., x^{d-1}}.
struct ExtField {
  FieldPtr base;
  int degree = 0;
  std::vector<Code> modulus;  // over base, low degree first, monic
  FieldPtr field;

  std::vector<Code> coordinates(Code a) const;
  Code from_coordinates(std::span<const Code> coords) const;
  // Row i holds the coordinates of a * x^i, so a row vector of coordinates of
  // y times this matrix gives the coordinates of a * y.
  std::vector<std::vector<Code>> multiplication_matrix(Code a) const;
};

/// Degree-d extension of `base` with the smallest monic irreducible modulus.
/// Throws TooLarge when base.order()^d exceeds kMaxFieldOrder.
const ExtField& extend_field(const FieldPtr& base, int d);

/// Monic irreducibility over `f` by trial division (low-degree first
/// coefficient list, leading 1 included).
bool is_irreducible(const Field& f, std::span<const Code> poly);

}  // namespace drg
