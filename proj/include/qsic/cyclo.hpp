#pragma once

// Exact arithmetic in the cyclotomic field Q(q), q = exp(2*pi*i/k).
//
// A CycNum stores a polynomial in q of degree < k (exponents are reduced with
// q^k = 1). Equality and zero-testing go through divisibility by the k-th
// cyclotomic polynomial, so the stored coefficient vector is not canonical.

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsic/error.hpp"
#include "qsic/rational.hpp"

namespace qsic {

/// Dense integer polynomial, coefficient of x^t at index t.
using IntPoly = std::vector<BigInt>;

namespace detail {

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of integer polynomials whose divisor is monic.
inline IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  trim(num);
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    BigInt c = num[i];
    quot[i - dd] = c;
    if (c == 0) continue;
    for (std::size_t t = 0; t <= dd; ++t) num[i - dd + t] -= c * den[t];
  }
  trim(num);
  if (!num.empty()) fail(ErrorKind::internal_error, "non-exact cyclotomic division");
  return quot;
}

inline IntPoly compute_cyclotomic(int k, std::map<int, IntPoly>& cache) {
  IntPoly p(static_cast<std::size_t>(k) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(k)] = 1;
  for (int d = 1; d < k; ++d) {
    if (k % d != 0) continue;
    auto it = cache.find(d);
    if (it == cache.end()) it = cache.emplace(d, compute_cyclotomic(d, cache)).first;
    p = divide_monic(std::move(p), it->second);
  }
  return p;
}

}  // namespace detail

/// Phi_k, obtained from x^k - 1 by dividing out Phi_d for every proper
/// divisor d of k. Results are memoized process-wide.
inline IntPoly cyclotomic_poly(int k) {
  require(k >= 1, "cyclotomic order must be >= 1, got " + std::to_string(k));
  static std::mutex mutex;
  static std::map<int, IntPoly> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, detail::compute_cyclotomic(k, cache)).first;
  return it->second;
}

inline std::complex<double> evaluate_poly(const IntPoly& p, std::complex<double> x) {
  std::complex<double> acc = 0.0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i].get_d();
  return acc;
}

inline std::complex<double> root_of_unity(int k, long t) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(k);
  return {std::cos(angle), std::sin(angle)};
}

/// Element of Q(q) for a fixed order k.
class CycNum {
 public:
  CycNum() : CycNum(1) {}
  explicit CycNum(int order) : order_(order) {
    require(order >= 1, "cyclotomic order must be >= 1");
    coeffs_.assign(static_cast<std::size_t>(order), Rational(0));
  }
  CycNum(int order, const Rational& value) : CycNum(order) { coeffs_[0] = value; }

  static CycNum zero(int order) { return CycNum(order); }
  static CycNum one(int order) { return CycNum(order, Rational(1)); }

  /// coefficient * q^exponent, exponent taken mod order.
  static CycNum monomial(int order, long exponent, const Rational& coefficient = Rational(1)) {
    CycNum r(order);
    r.coeffs_[r.wrap(exponent)] = coefficient;
    return r;
  }

  int order() const noexcept { return order_; }
  const Rational& coeff(long exponent) const { return coeffs_[wrap(exponent)]; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  /// True if every stored coefficient is zero (stronger than is_zero()).
  bool trivially_zero() const {
    for (const auto& c : coeffs_)
      if (sgn(c) != 0) return false;
    return true;
  }

  CycNum& operator+=(const CycNum& o) {
    check_order(o);
    for (std::size_t t = 0; t < coeffs_.size(); ++t)
      if (sgn(o.coeffs_[t]) != 0) coeffs_[t] += o.coeffs_[t];
    return *this;
  }
  CycNum& operator-=(const CycNum& o) {
    check_order(o);
    for (std::size_t t = 0; t < coeffs_.size(); ++t)
      if (sgn(o.coeffs_[t]) != 0) coeffs_[t] -= o.coeffs_[t];
    return *this;
  }
  CycNum& operator*=(const Rational& s) {
    for (auto& c : coeffs_)
      if (sgn(c) != 0) c *= s;
    return *this;
  }
  CycNum& operator/=(const Rational& s) {
    require(sgn(s) != 0, "division of CycNum by zero");
    for (auto& c : coeffs_)
      if (sgn(c) != 0) c /= s;
    return *this;
  }

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const Rational& s) { return a *= s; }
  friend CycNum operator*(const Rational& s, CycNum a) { return a *= s; }
  friend CycNum operator/(CycNum a, const Rational& s) { return a /= s; }
  CycNum operator-() const {
    CycNum r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend CycNum operator*(const CycNum& a, const CycNum& b) {
    a.check_order(b);
    const std::size_t k = a.coeffs_.size();
    CycNum r(a.order_);
    for (std::size_t s = 0; s < k; ++s) {
      if (sgn(a.coeffs_[s]) == 0) continue;
      for (std::size_t t = 0; t < k; ++t) {
        if (sgn(b.coeffs_[t]) == 0) continue;
        r.coeffs_[(s + t) % k] += a.coeffs_[s] * b.coeffs_[t];
      }
    }
    return r;
  }
  CycNum& operator*=(const CycNum& o) { return *this = *this * o; }

  /// Complex conjugate: q^t -> q^{k-t}.
  CycNum conj() const {
    CycNum r(order_);
    const std::size_t k = coeffs_.size();
    for (std::size_t t = 0; t < k; ++t) r.coeffs_[(k - t) % k] = coeffs_[t];
    return r;
  }

  /// Remainder of the coefficient polynomial modulo Phi_k; the canonical
  /// representative, of length phi(k) (trailing zeros kept).
  std::vector<Rational> reduced() const {
    const IntPoly phi = cyclotomic_poly(order_);
    const std::size_t deg = phi.size() - 1;
    std::vector<Rational> rem(coeffs_);
    for (std::size_t i = rem.size(); i-- > deg;) {
      if (sgn(rem[i]) == 0) continue;
      Rational c = rem[i];
      for (std::size_t t = 0; t <= deg; ++t)
        if (phi[t] != 0) rem[i - deg + t] -= c * phi[t];
    }
    rem.resize(deg);
    return rem;
  }

  bool is_zero() const {
    if (trivially_zero()) return true;
    for (const auto& c : reduced())
      if (sgn(c) != 0) return false;
    return true;
  }

  /// The rational value if this element lies in Q.
  std::optional<Rational> as_rational() const {
    auto rem = reduced();
    for (std::size_t t = 1; t < rem.size(); ++t)
      if (sgn(rem[t]) != 0) return std::nullopt;
    return rem.empty() ? Rational(0) : rem[0];
  }

  std::complex<double> evaluate() const {
    std::complex<double> acc = 0.0;
    for (std::size_t t = 0; t < coeffs_.size(); ++t)
      if (sgn(coeffs_[t]) != 0) acc += coeffs_[t].get_d() * root_of_unity(order_, static_cast<long>(t));
    return acc;
  }

  friend bool operator==(const CycNum& a, const CycNum& b) {
    if (a.order_ != b.order_) return false;
    return (a - b).is_zero();
  }

  /// Human-readable form such as "1 - q^2 + 1/3 q^5".
  std::string to_string() const {
    std::string out;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
      const Rational& c = coeffs_[t];
      if (sgn(c) == 0) continue;
      Rational mag = abs(c);
      if (out.empty())
        out += sgn(c) < 0 ? "-" : "";
      else
        out += sgn(c) < 0 ? " - " : " + ";
      const bool unit = mag == 1;
      if (!unit || t == 0) out += qsic::to_string(mag);
      if (t > 0) {
        if (!unit) out += " ";
        out += t == 1 ? "q" : "q^" + std::to_string(t);
      }
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::size_t wrap(long exponent) const {
    long k = order_;
    return static_cast<std::size_t>(((exponent % k) + k) % k);
  }
  void check_order(const CycNum& o) const {
    if (o.order_ != order_)
      fail(ErrorKind::invalid_parameter,
           "cyclotomic order mismatch: " + std::to_string(order_) + " vs " + std::to_string(o.order_));
  }

  int order_;
  std::vector<Rational> coeffs_;
};

inline CycNum conj(const CycNum& a) { return a.conj(); }
inline bool is_zero(const CycNum& a) { return a.is_zero(); }
inline std::complex<double> evaluate(const CycNum& a) { return a.evaluate(); }

using CycVec3 = std::array<CycNum, 3>;

/// Hermitian inner product <u|v> = sum conj(u_t) v_t.
inline CycNum inner_product(const CycVec3& u, const CycVec3& v) {
  CycNum acc = CycNum::zero(u[0].order());
  for (std::size_t t = 0; t < 3; ++t) acc += u[t].conj() * v[t];
  return acc;
}

inline std::array<std::complex<double>, 3> evaluate(const CycVec3& v) {
  return {v[0].evaluate(), v[1].evaluate(), v[2].evaluate()};
}

}  // namespace qsic
