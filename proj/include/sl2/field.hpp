#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "sl2/errors.hpp"

namespace sl2 {

/// Element of F_q in canonical form. For q = p the code is the residue in
/// [0, p); for q = p^2 the element c0 + c1*w (w the adjoined root) is coded
/// as c0 + p*c1. One code per field element, so codes double as map keys.
struct FqElem {
  uint32_t code = 0;
  auto operator<=>(const FqElem&) const = default;
};

enum class QuadClass { Zero, Square, NonSquare };

/// F_p or F_{p^2} with exact residue arithmetic. For degree 2 the modulus
/// x^2 + m1*x + m0 is the lexicographically smallest monic irreducible
/// quadratic over F_p (m1 most significant), so element codes are stable
/// across runs.
class Field {
 public:
  Field() = default;  // inert until assigned from make()

  /// p must be prime, alpha in {1,2}, and q = p^alpha at most 2^16
  /// (everything downstream allocates structures of size ~q^3).
  static Field make(uint32_t p, uint32_t alpha);

  uint32_t p() const { return p_; }
  uint32_t alpha() const { return alpha_; }
  uint32_t q() const { return q_; }
  uint32_t modulus_m0() const { return m0_; }
  uint32_t modulus_m1() const { return m1_; }

  bool same_as(const Field& o) const { return p_ == o.p_ && alpha_ == o.alpha_; }

  FqElem zero() const { return {0}; }
  FqElem one() const { return {1}; }
  FqElem elem(uint32_t code) const;
  /// Embeds an integer via its residue mod p (constant coefficient).
  FqElem from_int(int64_t n) const;
  /// Element c0 + c1*w; c0, c1 taken mod p.
  FqElem from_coeffs(int64_t c0, int64_t c1) const;

  FqElem add(FqElem a, FqElem b) const;
  FqElem sub(FqElem a, FqElem b) const;
  FqElem neg(FqElem a) const;
  FqElem mul(FqElem a, FqElem b) const;
  FqElem inv(FqElem a) const;  // DivisionByZero on 0
  FqElem div(FqElem a, FqElem b) const;
  FqElem pow(FqElem a, int64_t e) const;

  /// x -> x^p, the nontrivial field automorphism when alpha = 2.
  FqElem frobenius(FqElem a) const { return pow(a, p_); }

  QuadClass quad_class(FqElem t) const;

  std::string to_string(FqElem a) const;

 private:
  uint32_t p_ = 0, alpha_ = 0, q_ = 0;
  uint32_t m0_ = 0, m1_ = 0;  // modulus x^2 + m1 x + m0, alpha = 2 only
};

bool is_prime_u32(uint32_t n);

}  // namespace sl2
