#include "polylat/field_poly.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

namespace polylat {

namespace {

void require_prime(unsigned b) {
  if (!is_prime(b)) throw InvalidParameter("base " + std::to_string(b) + " is not prime");
}

void require_same_base(const Poly& a, const Poly& c) {
  if (a.base() != c.base())
    throw InvalidParameter("polynomials over different bases " + std::to_string(a.base()) +
                           " and " + std::to_string(c.base()));
}

std::uint32_t inverse_mod(std::uint32_t a, unsigned b) {
  // a^(b-2) mod b; b is prime and a nonzero.
  std::uint64_t result = 1, base = a % b;
  for (unsigned e = b - 2; e != 0; e >>= 1) {
    if (e & 1U) result = result * base % b;
    base = base * base % b;
  }
  return static_cast<std::uint32_t>(result);
}

constexpr std::array<std::uint32_t, 25> kPrimitiveF2 = {
    0,      3,      7,       11,      19,      37,      67,      131,     285,
    529,    1033,   2053,    4179,    8219,    16427,   32771,   65581,   131081,
    262183, 524327, 1048585, 2097157, 4194307, 8388641, 16777243};

}  // namespace

bool is_prime(unsigned b) noexcept {
  if (b < 2) return false;
  for (unsigned k = 2; k * k <= b; ++k)
    if (b % k == 0) return false;
  return true;
}

std::uint64_t checked_pow(unsigned b, int e) {
  if (e < 0) throw InvalidParameter("negative exponent");
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / b)
      throw ResourceLimit(std::to_string(b) + "^" + std::to_string(e) + " overflows 64 bits");
    r *= b;
  }
  return r;
}

Poly::Poly(unsigned base) : base_(base) { require_prime(base); }

Poly::Poly(unsigned base, std::vector<std::uint32_t> coeffs) : base_(base), coeffs_(std::move(coeffs)) {
  require_prime(base);
  for (auto c : coeffs_)
    if (c >= base) throw InvalidParameter("coefficient " + std::to_string(c) + " not below base");
  normalize();
}

Poly Poly::from_bits(std::uint64_t bits) { return poly_from_index(bits, 2); }

std::uint64_t Poly::bits() const {
  if (base_ != 2) throw UnsupportedBase("bitmask encoding requires base 2");
  if (coeffs_.size() > 64) throw ResourceLimit("polynomial does not fit a 64-bit word");
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r |= std::uint64_t{coeffs_[i]} << i;
  return r;
}

Poly Poly::with_coeff(int i, std::uint32_t c) const {
  if (i < 0) throw InvalidParameter("negative coefficient index");
  if (c >= base_) throw InvalidParameter("coefficient not below base");
  Poly out = *this;
  if (static_cast<std::size_t>(i) >= out.coeffs_.size()) out.coeffs_.resize(i + 1, 0);
  out.coeffs_[i] = c;
  out.normalize();
  return out;
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly poly_from_index(std::uint64_t n, unsigned b) {
  require_prime(b);
  std::vector<std::uint32_t> digits;
  for (; n != 0; n /= b) digits.push_back(static_cast<std::uint32_t>(n % b));
  return Poly(b, std::move(digits));
}

std::uint64_t index_from_poly(const Poly& q) {
  std::uint64_t n = 0;
  const auto& c = q.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    if (n > (std::numeric_limits<std::uint64_t>::max() - *it) / q.base())
      throw ResourceLimit("polynomial index overflows 64 bits");
    n = n * q.base() + *it;
  }
  return n;
}

Poly poly_add(const Poly& a, const Poly& c) {
  require_same_base(a, c);
  const unsigned b = a.base();
  std::vector<std::uint32_t> out(std::max(a.coeffs().size(), c.coeffs().size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = (a.coeff(static_cast<int>(i)) + c.coeff(static_cast<int>(i))) % b;
  return Poly(b, std::move(out));
}

Poly poly_mul(const Poly& a, const Poly& c) {
  require_same_base(a, c);
  if (a.is_zero() || c.is_zero()) return Poly(a.base());
  return mul_mod_xw(a, c, a.degree() + c.degree() + 1);
}

Poly poly_mod(const Poly& a, const Poly& p) {
  require_same_base(a, p);
  if (p.is_zero()) throw DegenerateInput("reduction modulo the zero polynomial");
  const unsigned b = a.base();
  const int dp = p.degree();
  std::vector<std::uint32_t> r = a.coeffs();
  const std::uint32_t lead_inv = inverse_mod(p.coeff(dp), b);
  for (int i = static_cast<int>(r.size()) - 1; i >= dp; --i) {
    if (r[i] == 0) continue;
    const std::uint64_t f = std::uint64_t{r[i]} * lead_inv % b;
    for (int k = 0; k <= dp; ++k) {
      const std::uint64_t sub = f * p.coeff(k) % b;
      r[i - dp + k] = static_cast<std::uint32_t>((r[i - dp + k] + b - sub) % b);
    }
  }
  if (static_cast<int>(r.size()) > dp) r.resize(std::max(dp, 0));
  return Poly(b, std::move(r));
}

Poly mul_mod_xw(const Poly& a, const Poly& g, int w) {
  require_same_base(a, g);
  if (w < 1) throw InvalidParameter("truncation order must be positive");
  const unsigned b = a.base();
  if (b == 2 && w <= 64 && a.degree() < 64 && g.degree() < 64)
    return Poly::from_bits(gf2::mul_mod_xw(a.bits(), g.bits(), w));
  std::vector<std::uint64_t> acc(w, 0);
  const int da = std::min(a.degree(), w - 1), dg = std::min(g.degree(), w - 1);
  for (int i = 0; i <= da; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int k = 0; k <= dg && i + k < w; ++k)
      acc[i + k] = (acc[i + k] + std::uint64_t{a.coeff(i)} * g.coeff(k)) % b;
  }
  std::vector<std::uint32_t> out(acc.begin(), acc.end());
  return Poly(b, std::move(out));
}

std::uint64_t vm_numerator(const Poly& q, int m) {
  if (m < 1) throw InvalidParameter("precision must be positive");
  const unsigned b = q.base();
  std::uint64_t u = 0;
  for (int l = 1; l <= m; ++l) u = u * b + q.coeff(m - l);
  return u;
}

std::uint64_t laurent_numerator(const Poly& q, const Poly& p, int m) {
  require_same_base(q, p);
  if (p.degree() != m) throw InvalidParameter("modulus degree differs from precision m");
  if (q.degree() >= m) throw InvalidParameter("numerator must be reduced modulo p");
  const unsigned b = q.base();
  const std::uint64_t lead_inv = inverse_mod(p.coeff(m), b);
  std::vector<std::uint64_t> t(m + 1, 0);
  std::uint64_t u = 0;
  for (int l = 1; l <= m; ++l) {
    std::uint64_t s = q.coeff(m - l);
    for (int i = 1; i < l; ++i) s = (s + b * b - std::uint64_t{p.coeff(m - i)} * t[l - i] % b) % b;
    t[l] = s * lead_inv % b;
    u = u * b + t[l];
  }
  return u;
}

int digitlog(const Poly& q, int w) {
  if (w < 1) throw InvalidParameter("truncation order must be positive");
  for (int j = std::min(q.degree(), w - 1); j >= 0; --j)
    if (q.coeff(j) != 0) return j - w + 1;
  throw DegenerateInput("digitlog of a polynomial divisible by x^w");
}

Poly primitive_poly_f2(int m) {
  if (m < 1 || m > 24) throw InvalidParameter("primitive polynomial table covers degrees 1..24");
  return Poly::from_bits(kPrimitiveF2[m]);
}

namespace gf2 {

std::uint64_t mod(std::uint64_t a, std::uint64_t p) noexcept {
  const int dp = std::bit_width(p) - 1;
  for (int i = std::bit_width(a) - 1; i >= dp; i = std::bit_width(a) - 1) a ^= p << (i - dp);
  return a;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t c, std::uint64_t p) noexcept {
  return mod(clmul(mod(a, p), mod(c, p)), p);
}

std::uint64_t laurent_numerator(std::uint64_t q, std::uint64_t p, int m) noexcept {
  // t_l = q_{m-l} + sum_{i<l} p_{m-i} t_{l-i}; t is accumulated as the
  // numerator u whose bit (m-l) holds t_l.
  std::uint64_t u = 0;
  for (int l = 1; l <= m; ++l) {
    std::uint64_t s = (q >> (m - l)) & 1U;
    for (int i = 1; i < l; ++i) s ^= ((p >> (m - i)) & 1U) & ((u >> (m - l + i)) & 1U);
    u |= s << (m - l);
  }
  return u;
}

}  // namespace gf2

}  // namespace polylat
