#include "sl2/field.hpp"

#include <cstdio>

namespace sl2 {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotPrime: return "NotPrime";
    case Err::UnsupportedDegree: return "UnsupportedDegree";
    case Err::DivisionByZero: return "DivisionByZero";
    case Err::FieldMismatch: return "FieldMismatch";
    case Err::CapExceeded: return "CapExceeded";
    case Err::DetNotOne: return "DetNotOne";
    case Err::NotGenerating: return "NotGenerating";
    case Err::NotSymmetric: return "NotSymmetric";
    case Err::EmptySet: return "EmptySet";
    case Err::NotInPower: return "NotInPower";
    case Err::NotRss: return "NotRss";
    case Err::BadG: return "BadG";
    case Err::NotSplit: return "NotSplit";
    case Err::OrbitTrapped: return "OrbitTrapped";
    case Err::KmaxExceeded: return "KmaxExceeded";
    case Err::BudgetExceeded: return "BudgetExceeded";
    case Err::TooLarge: return "TooLarge";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::NoConvergence: return "NoConvergence";
    case Err::BadInput: return "BadInput";
  }
  return "Unknown";
}

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// true iff x^2 + m1 x + m0 has no root in F_p
bool irreducible_quadratic(uint32_t p, uint32_t m1, uint32_t m0) {
  for (uint64_t x = 0; x < p; ++x)
    if ((x * x + m1 * x + m0) % p == 0) return false;
  return true;
}

}  // namespace

Field Field::make(uint32_t p, uint32_t alpha) {
  if (p < 2 || !is_prime_u32(p)) fail(Err::NotPrime, "p = " + std::to_string(p));
  if (alpha != 1 && alpha != 2)
    fail(Err::UnsupportedDegree, "alpha = " + std::to_string(alpha));
  uint64_t q = (alpha == 1) ? p : static_cast<uint64_t>(p) * p;
  if (q > (1u << 16)) fail(Err::CapExceeded, "q = " + std::to_string(q) + " exceeds 2^16");

  Field F;
  F.p_ = p;
  F.alpha_ = alpha;
  F.q_ = static_cast<uint32_t>(q);
  if (alpha == 2) {
    bool found = false;
    for (uint32_t m1 = 0; m1 < p && !found; ++m1)
      for (uint32_t m0 = 0; m0 < p && !found; ++m0)
        if (irreducible_quadratic(p, m1, m0)) {
          F.m1_ = m1;
          F.m0_ = m0;
          found = true;
        }
    if (!found) fail(Err::BadInput, "no irreducible quadratic found");  // unreachable
  }
  return F;
}

FqElem Field::elem(uint32_t code) const {
  if (code >= q_) fail(Err::BadInput, "element code out of range");
  return {code};
}

FqElem Field::from_int(int64_t n) const {
  int64_t r = n % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<uint32_t>(r)};
}

FqElem Field::from_coeffs(int64_t c0, int64_t c1) const {
  if (alpha_ == 1 && c1 % p_ != 0) fail(Err::BadInput, "root coefficient in a prime field");
  return {from_int(c0).code + p_ * from_int(c1).code};
}

FqElem Field::add(FqElem a, FqElem b) const {
  if (alpha_ == 1) {
    uint32_t s = a.code + b.code;
    return {s >= p_ ? s - p_ : s};
  }
  uint32_t a0 = a.code % p_, a1 = a.code / p_;
  uint32_t b0 = b.code % p_, b1 = b.code / p_;
  uint32_t s0 = a0 + b0, s1 = a1 + b1;
  if (s0 >= p_) s0 -= p_;
  if (s1 >= p_) s1 -= p_;
  return {s0 + p_ * s1};
}

FqElem Field::neg(FqElem a) const {
  if (alpha_ == 1) return {a.code == 0 ? 0 : p_ - a.code};
  uint32_t a0 = a.code % p_, a1 = a.code / p_;
  uint32_t n0 = a0 == 0 ? 0 : p_ - a0;
  uint32_t n1 = a1 == 0 ? 0 : p_ - a1;
  return {n0 + p_ * n1};
}

FqElem Field::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem Field::mul(FqElem a, FqElem b) const {
  uint64_t p = p_;
  if (alpha_ == 1) return {static_cast<uint32_t>((uint64_t)a.code * b.code % p)};
  uint64_t a0 = a.code % p_, a1 = a.code / p_;
  uint64_t b0 = b.code % p_, b1 = b.code / p_;
  // (a0 + a1 w)(b0 + b1 w) with w^2 = -m1 w - m0
  uint64_t t2 = a1 * b1 % p;
  uint64_t c0 = (a0 * b0 + (p - m0_ % p) * t2) % p;
  uint64_t c1 = (a0 * b1 + a1 * b0 + (p - m1_ % p) * t2) % p;
  return {static_cast<uint32_t>(c0 + p * c1)};
}

FqElem Field::pow(FqElem a, int64_t e) const {
  if (e < 0) return pow(inv(a), -e);
  FqElem r = one(), base = a;
  uint64_t k = static_cast<uint64_t>(e);
  while (k) {
    if (k & 1) r = mul(r, base);
    base = mul(base, base);
    k >>= 1;
  }
  return r;
}

FqElem Field::inv(FqElem a) const {
  if (a.code == 0) fail(Err::DivisionByZero, "inverse of 0");
  if (alpha_ == 1) return pow(a, static_cast<int64_t>(p_) - 2);
  // Norm trick: conjugate of c0 + c1 w is c0 + c1 (-m1 - w); the product
  // N = c0^2 - m1 c0 c1 + m0 c1^2 lies in F_p.
  uint64_t p = p_;
  uint64_t c0 = a.code % p_, c1 = a.code / p_;
  uint64_t n = (c0 * c0 % p + (p - m1_ % p) * (c0 * c1 % p) % p + (uint64_t)m0_ * (c1 * c1 % p)) % p;
  // Fermat inverse of the norm inside F_p
  uint64_t ninv = 1, base = n, k = p - 2;
  while (k) {
    if (k & 1) ninv = ninv * base % p;
    base = base * base % p;
    k >>= 1;
  }
  // conjugate = (c0 + c1*(-m1)) + (-c1) w
  uint64_t g0 = (c0 + (p - m1_ % p) * c1) % p;
  uint64_t g1 = (p - c1) % p;
  FqElem conj{static_cast<uint32_t>(g0 + p * g1)};
  return mul(conj, FqElem{static_cast<uint32_t>(ninv)});
}

FqElem Field::div(FqElem a, FqElem b) const { return mul(a, inv(b)); }

QuadClass Field::quad_class(FqElem t) const {
  if (t.code == 0) return QuadClass::Zero;
  if (p_ == 2) return QuadClass::Square;  // squaring is bijective in char 2
  FqElem r = pow(t, (static_cast<int64_t>(q_) - 1) / 2);
  return r == one() ? QuadClass::Square : QuadClass::NonSquare;
}

std::string Field::to_string(FqElem a) const {
  if (alpha_ == 1) return std::to_string(a.code);
  return std::to_string(a.code % p_) + "+" + std::to_string(a.code / p_) + "w";
}

}  // namespace sl2
