#pragma once

// The three-class ray family built from k-th roots of unity q:
//   class I   : (1,0,0), (0,1,0), (0,0,1)
//   class II  : (1,-q^i,0), (1,0,-q^i), (0,1,-q^i)
//   class III : (1,q^i,q^j)
// with i, j in 0..k-1. Rays are stored unnormalized.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsic/cyclo.hpp"
#include "qsic/error.hpp"
#include "qsic/rational.hpp"

namespace qsic {

enum class RayClass { I, II, III };

inline const char* to_string(RayClass c) {
  switch (c) {
    case RayClass::I: return "I";
    case RayClass::II: return "II";
    case RayClass::III: return "III";
  }
  return "?";
}

inline std::optional<RayClass> parse_ray_class(std::string_view s) {
  if (s == "I") return RayClass::I;
  if (s == "II") return RayClass::II;
  if (s == "III") return RayClass::III;
  return std::nullopt;
}

struct Ray {
  int order = 0;
  RayClass cls = RayClass::I;
  int family = 0;  // which basis vector (I) or which zero slot (II); 0 for III
  int exp_i = 0;
  int exp_j = 0;  // class III only
  CycVec3 components;

  Rational norm_squared() const {
    CycNum n = inner_product(components, components);
    auto r = n.as_rational();
    if (!r) fail(ErrorKind::internal_error, "ray norm is not rational");
    return *r;
  }
};

inline Rational norm_squared(const Ray& r) { return r.norm_squared(); }

inline Ray make_class_one(int k, int family) {
  require(family >= 0 && family < 3, "class I family out of range");
  Ray r{k, RayClass::I, family, 0, 0, {CycNum(k), CycNum(k), CycNum(k)}};
  r.components[static_cast<std::size_t>(family)] = CycNum::one(k);
  return r;
}

inline Ray make_class_two(int k, int family, int exponent) {
  require(family >= 0 && family < 3, "class II family out of range");
  const int e = ((exponent % k) + k) % k;
  Ray r{k, RayClass::II, family, e, 0, {CycNum(k), CycNum(k), CycNum(k)}};
  const CycNum minus_q = CycNum::monomial(k, e, Rational(-1));
  switch (family) {
    case 0: r.components = {CycNum::one(k), minus_q, CycNum(k)}; break;
    case 1: r.components = {CycNum::one(k), CycNum(k), minus_q}; break;
    default: r.components = {CycNum(k), CycNum::one(k), minus_q}; break;
  }
  return r;
}

inline Ray make_class_three(int k, int i, int j) {
  const int ei = ((i % k) + k) % k, ej = ((j % k) + k) % k;
  return Ray{k, RayClass::III, 0, ei, ej, {CycNum::one(k), CycNum::monomial(k, ei), CycNum::monomial(k, ej)}};
}

/// Whether u and v span the same line: every 2x2 minor u_a v_b - u_b v_a vanishes.
inline bool projectively_equal(const CycVec3& u, const CycVec3& v) {
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b)
      if (!(u[a] * v[b] - u[b] * v[a]).is_zero()) return false;
  bool u_zero = u[0].is_zero() && u[1].is_zero() && u[2].is_zero();
  bool v_zero = v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
  return u_zero == v_zero;
}

/// The full ray set for one k in canonical order: class I, class II by
/// family then exponent, class III row-major in (i, j).
class RaySet {
 public:
  static RaySet generate(int k) {
    require(k >= 2, "ray family requires k >= 2, got " + std::to_string(k));
    RaySet s;
    s.order_ = k;
    s.rays_.reserve(static_cast<std::size_t>(3 + 3 * k + k * k));
    for (int f = 0; f < 3; ++f) s.rays_.push_back(make_class_one(k, f));
    for (int f = 0; f < 3; ++f)
      for (int e = 0; e < k; ++e) s.rays_.push_back(make_class_two(k, f, e));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) s.rays_.push_back(make_class_three(k, i, j));
    return s;
  }

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return rays_.size(); }
  const Ray& operator[](std::size_t v) const { return rays_[v]; }
  std::span<const Ray> rays() const noexcept { return rays_; }
  auto begin() const { return rays_.begin(); }
  auto end() const { return rays_.end(); }

  // Canonical vertex indices.
  std::size_t index_of_class_one(int family) const { return static_cast<std::size_t>(family); }
  std::size_t index_of_class_two(int family, int exponent) const {
    return static_cast<std::size_t>(3 + family * order_ + wrap(exponent));
  }
  std::size_t index_of_class_three(int i, int j) const {
    return static_cast<std::size_t>(3 + 3 * order_ + wrap(i) * order_ + wrap(j));
  }

 private:
  int wrap(int e) const { return ((e % order_) + order_) % order_; }

  int order_ = 0;
  std::vector<Ray> rays_;
};

inline RaySet generate_set(int k) { return RaySet::generate(k); }

inline std::size_t ray_count(int k) { return static_cast<std::size_t>(3 + 3 * k + k * k); }

/// 3x3 matrix over Q(q).
class ProjectorMatrix {
 public:
  explicit ProjectorMatrix(int order) : order_(order) {
    for (auto& row : m_) row = {CycNum(order), CycNum(order), CycNum(order)};
  }

  static ProjectorMatrix scalar(int order, const Rational& c) {
    ProjectorMatrix p(order);
    for (std::size_t a = 0; a < 3; ++a) p.m_[a][a] = CycNum(order, c);
    return p;
  }

  int order() const noexcept { return order_; }
  const CycNum& operator()(std::size_t a, std::size_t b) const { return m_[a][b]; }
  CycNum& operator()(std::size_t a, std::size_t b) { return m_[a][b]; }

  ProjectorMatrix& operator+=(const ProjectorMatrix& o) {
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) m_[a][b] += o.m_[a][b];
    return *this;
  }
  ProjectorMatrix& operator*=(const Rational& s) {
    for (auto& row : m_)
      for (auto& e : row) e *= s;
    return *this;
  }
  friend ProjectorMatrix operator*(const ProjectorMatrix& x, const ProjectorMatrix& y) {
    ProjectorMatrix r(x.order_);
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t c = 0; c < 3; ++c) r.m_[a][b] += x.m_[a][c] * y.m_[c][b];
    return r;
  }
  friend bool operator==(const ProjectorMatrix& x, const ProjectorMatrix& y) {
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b)
        if (!(x.m_[a][b] == y.m_[a][b])) return false;
    return true;
  }

  CycNum trace() const { return m_[0][0] + m_[1][1] + m_[2][2]; }

  bool is_hermitian() const {
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = a; b < 3; ++b)
        if (!(m_[a][b] == m_[b][a].conj())) return false;
    return true;
  }

  std::array<std::array<std::complex<double>, 3>, 3> evaluate() const {
    std::array<std::array<std::complex<double>, 3>, 3> out{};
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) out[a][b] = m_[a][b].evaluate();
    return out;
  }

 private:
  int order_;
  std::array<std::array<CycNum, 3>, 3> m_;
};

/// |v><v| / <v|v>.
inline ProjectorMatrix projector(const Ray& r) {
  const Rational norm = r.norm_squared();
  ProjectorMatrix p(r.order);
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) p(a, b) = r.components[a] * r.components[b].conj() / norm;
  return p;
}

/// sum_v weights[v] * P_v.
inline ProjectorMatrix weighted_projector_sum(const RaySet& rs, std::span<const Rational> weights) {
  if (weights.size() != rs.size())
    fail(ErrorKind::invalid_parameter, "weights length " + std::to_string(weights.size()) +
                                           " does not match ray count " + std::to_string(rs.size()));
  ProjectorMatrix sum(rs.order());
  for (std::size_t v = 0; v < rs.size(); ++v) {
    if (sgn(weights[v]) == 0) continue;
    ProjectorMatrix p = projector(rs[v]);
    p *= weights[v];
    sum += p;
  }
  return sum;
}

/// Expands per-class weights (class I, II, III) to one weight per ray.
inline std::vector<Rational> class_weights(const RaySet& rs, const std::array<Rational, 3>& by_class) {
  std::vector<Rational> w;
  w.reserve(rs.size());
  for (const auto& r : rs) w.push_back(by_class[static_cast<std::size_t>(r.cls)]);
  return w;
}

/// Sum of projectors over the rays of one class.
inline ProjectorMatrix class_projector_sum(const RaySet& rs, RayClass cls) {
  std::array<Rational, 3> w{Rational(0), Rational(0), Rational(0)};
  w[static_cast<std::size_t>(cls)] = 1;
  return weighted_projector_sum(rs, class_weights(rs, w));
}

/// c when m = c * Identity exactly; empty otherwise.
inline std::optional<Rational> proportional_to_identity(const ProjectorMatrix& m) {
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b)
      if (a != b && !m(a, b).is_zero()) return std::nullopt;
  auto c = m(0, 0).as_rational();
  if (!c) return std::nullopt;
  for (std::size_t a = 1; a < 3; ++a) {
    auto d = m(a, a).as_rational();
    if (!d || *d != *c) return std::nullopt;
  }
  return c;
}

/// Largest eigenvalue of a Hermitian positive semidefinite 3x3 matrix by
/// power iteration; used only when the operator is not a multiple of the
/// identity.
inline double largest_eigenvalue(const std::array<std::array<std::complex<double>, 3>, 3>& m,
                                 double tolerance = 1e-12, int max_iterations = 1000000) {
  std::array<std::complex<double>, 3> x{1.0, std::complex<double>(0.5, 0.25), std::complex<double>(0.25, -0.5)};
  double lambda = 0.0;
  for (int it = 0; it < max_iterations; ++it) {
    std::array<std::complex<double>, 3> y{};
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) y[a] += m[a][b] * x[b];
    double norm = std::sqrt(std::norm(y[0]) + std::norm(y[1]) + std::norm(y[2]));
    if (norm == 0.0) return 0.0;
    for (auto& c : y) c /= norm;
    // Rayleigh quotient
    std::complex<double> rq = 0.0;
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) rq += std::conj(y[a]) * m[a][b] * y[b];
    const double next = rq.real();
    x = y;
    if (it > 0 && std::abs(next - lambda) <= tolerance * std::max(1.0, std::abs(next))) return next;
    lambda = next;
  }
  return lambda;
}

}  // namespace qsic
