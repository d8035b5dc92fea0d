#pragma once

// Polynomials over the prime field F_b.
//
// A polynomial is identified with the integer whose base-b digits are its
// coefficients (digit k is the coefficient of x^k). For b = 2 the integer is a
// bitmask and the hot paths in namespace gf2 work on raw 64-bit words.

#include <bit>
#include <cstdint>
#include <vector>

#include "polylat/errors.hpp"

#if defined(__PCLMUL__)
#include <immintrin.h>
#endif

namespace polylat {

/// Largest precision m supported by the b = 2 word representation. Products
/// n(x) g(x) have degree at most 2m - 2 and fit one 64-bit word.
inline constexpr int kMaxBinaryPrecision = 30;

bool is_prime(unsigned b) noexcept;

/// b^e, throwing ResourceLimit if the result does not fit 64 bits.
std::uint64_t checked_pow(unsigned b, int e);

class Poly {
 public:
  Poly() = default;
  explicit Poly(unsigned base);
  /// Coefficients are given lowest degree first and must lie in [0, base).
  Poly(unsigned base, std::vector<std::uint32_t> coeffs);

  static Poly from_bits(std::uint64_t bits);

  unsigned base() const noexcept { return base_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::uint32_t coeff(int i) const noexcept {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0U;
  }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }

  /// Bitmask encoding; only valid for base 2.
  std::uint64_t bits() const;

  /// Copy with the coefficient of x^i replaced by c.
  Poly with_coeff(int i, std::uint32_t c) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void normalize();

  unsigned base_ = 2;
  std::vector<std::uint32_t> coeffs_;
};

Poly poly_from_index(std::uint64_t n, unsigned b);
std::uint64_t index_from_poly(const Poly& q);

Poly poly_add(const Poly& a, const Poly& c);
Poly poly_mul(const Poly& a, const Poly& c);
/// Remainder of a modulo p (p nonzero).
Poly poly_mod(const Poly& a, const Poly& p);

/// (a g) mod x^w.
Poly mul_mod_xw(const Poly& a, const Poly& g, int w);

/// Numerator u over b^m of v_m(q / x^m); only q mod x^m matters.
std::uint64_t vm_numerator(const Poly& q, int m);

/// Numerator over b^m of v_m(q / p) via the long-division recurrence on the
/// first m Laurent coefficients. Requires deg p = m and deg q < m.
std::uint64_t laurent_numerator(const Poly& q, const Poly& p, int m);

/// floor(log_b(v_w(q / x^w))) + 1 computed from the position of the highest
/// nonzero coefficient of q mod x^w. Result lies in {1 - w, ..., 0}.
int digitlog(const Poly& q, int w);

/// Fixed primitive polynomial of degree m over F_2, 1 <= m <= 24.
Poly primitive_poly_f2(int m);

namespace gf2 {

constexpr std::uint64_t low_mask(int w) noexcept {
  return w >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << w) - 1;
}

/// Carry-less product. Caller guarantees deg a + deg c < 64.
inline std::uint64_t clmul(std::uint64_t a, std::uint64_t c) noexcept {
#if defined(__PCLMUL__)
  const __m128i x = _mm_cvtsi64_si128(static_cast<long long>(a));
  const __m128i y = _mm_cvtsi64_si128(static_cast<long long>(c));
  return static_cast<std::uint64_t>(_mm_cvtsi128_si64(_mm_clmulepi64_si128(x, y, 0)));
#else
  std::uint64_t r = 0;
  while (c != 0) {
    r ^= a << std::countr_zero(c);
    c &= c - 1;
  }
  return r;
#endif
}

inline std::uint64_t mul_mod_xw(std::uint64_t a, std::uint64_t c, int w) noexcept {
  return clmul(a & low_mask(w), c & low_mask(w)) & low_mask(w);
}

/// Unchecked: q mod x^w must be nonzero.
inline int digitlog(std::uint64_t q, int w) noexcept {
  return std::bit_width(q & low_mask(w)) - w;
}

std::uint64_t mod(std::uint64_t a, std::uint64_t p) noexcept;
std::uint64_t mulmod(std::uint64_t a, std::uint64_t c, std::uint64_t p) noexcept;
/// Laurent numerator of q/p, deg p = m, deg q < m.
std::uint64_t laurent_numerator(std::uint64_t q, std::uint64_t p, int m) noexcept;

}  // namespace gf2

}  // namespace polylat
