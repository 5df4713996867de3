#pragma once

// Fractional chromatic number as the set-cover linear program
//
//   minimize sum_S x_S   subject to   sum_{S containing v} x_S >= 1,  x >= 0
//
// over independent sets S, solved by a revised simplex in exact rational
// arithmetic with Bland's rule. Columns come either from a full enumeration
// of maximal independent sets or from pricing (maximum weight independent
// set under the current duals). The final basis gives both a fractional
// coloring (primal) and a fractional clique (dual) of equal value.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsic/budget.hpp"
#include "qsic/combinat.hpp"
#include "qsic/error.hpp"
#include "qsic/rational.hpp"
#include "qsic/vertex_set.hpp"
#include "qsic/xgraph.hpp"

namespace qsic {

enum class ChifMethod { enumerate, column_generation };
enum class ChifStatus { exact, bounds };

inline const char* to_string(ChifMethod m) { return m == ChifMethod::enumerate ? "enumerate" : "column-generation"; }
inline const char* to_string(ChifStatus s) { return s == ChifStatus::exact ? "exact" : "bounds"; }

constexpr std::size_t kEnumerationPoolCap = 200000;

struct WeightedSet {
  std::vector<int> set;
  Rational weight;
  friend bool operator==(const WeightedSet&, const WeightedSet&) = default;
};

struct FractionalColoring {
  Rational value;                   // exact optimum when status == exact, else the upper bound
  std::vector<WeightedSet> primal;  // fractional coloring
  std::vector<Rational> dual;       // fractional clique, one entry per vertex
  ChifStatus status = ChifStatus::exact;
  Rational lower;
  Rational upper;
  std::uint64_t pivots = 0;
  std::size_t columns = 0;  // pool size at termination
  Duration elapsed{0};

  bool exact() const { return status == ChifStatus::exact; }
};

struct AbColoring {
  long a = 0;
  long b = 0;
  std::vector<std::vector<long>> colors;  // per vertex, b colors from 1..a, ascending
};

namespace detail {

class SetCoverSimplex {
 public:
  explicit SetCoverSimplex(std::size_t n) : n_(n) {
    binv_.assign(n, std::vector<Rational>(n, Rational(0)));
    xb_.assign(n, Rational(1));
    basic_.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
      VertexSet s;
      s.set(v);
      pool_.push_back(s);
      binv_[v][v] = 1;
      basic_[v] = static_cast<long>(n + v);
    }
  }

  std::size_t add_column(const VertexSet& s) {
    pool_.push_back(s);
    return pool_.size() - 1;
  }
  std::size_t pool_size() const { return pool_.size(); }
  std::uint64_t pivots() const { return pivots_; }

  /// Pivots with Bland's rule until no pool column prices out. Returns false
  /// if the deadline hit first.
  bool optimize(const Deadline& deadline) {
    for (;;) {
      if (deadline.expired()) return false;
      const auto y = duals();
      const long entering = bland_entering(y);
      if (entering < 0) return true;
      pivot(entering);
    }
  }

  /// y = c_B^T B^{-1}.
  std::vector<Rational> duals() const {
    std::vector<Rational> y(n_, Rational(0));
    for (std::size_t i = 0; i < n_; ++i) {
      if (basic_[i] < static_cast<long>(n_)) continue;  // surplus variables cost 0
      for (std::size_t r = 0; r < n_; ++r)
        if (sgn(binv_[i][r]) != 0) y[r] += binv_[i][r];
    }
    return y;
  }

  Rational objective() const {
    Rational z = 0;
    for (std::size_t i = 0; i < n_; ++i)
      if (basic_[i] >= static_cast<long>(n_)) z += xb_[i];
    return z;
  }

  /// Basic set columns with positive value.
  std::vector<std::pair<VertexSet, Rational>> solution() const {
    std::vector<std::pair<VertexSet, Rational>> out;
    for (std::size_t i = 0; i < n_; ++i)
      if (basic_[i] >= static_cast<long>(n_) && sgn(xb_[i]) > 0)
        out.emplace_back(pool_[static_cast<std::size_t>(basic_[i]) - n_], xb_[i]);
    return out;
  }

 private:
  // Variable ids: 0..n-1 surplus of row v, n + c for pool column c.
  long bland_entering(const std::vector<Rational>& y) const {
    for (std::size_t v = 0; v < n_; ++v)
      if (sgn(y[v]) < 0) return static_cast<long>(v);
    Rational price;
    for (std::size_t c = 0; c < pool_.size(); ++c) {
      price = 0;
      pool_[c].for_each([&](std::size_t v) { price += y[v]; });
      if (price > 1) return static_cast<long>(n_ + c);
    }
    return -1;
  }

  std::vector<Rational> direction(long var) const {
    std::vector<Rational> d(n_, Rational(0));
    if (var < static_cast<long>(n_)) {
      const auto v = static_cast<std::size_t>(var);
      for (std::size_t i = 0; i < n_; ++i) d[i] = -binv_[i][v];
    } else {
      const VertexSet& s = pool_[static_cast<std::size_t>(var) - n_];
      for (std::size_t i = 0; i < n_; ++i) s.for_each([&](std::size_t v) { d[i] += binv_[i][v]; });
    }
    return d;
  }

  void pivot(long entering) {
    const auto d = direction(entering);
    std::size_t row = n_;
    Rational best_ratio;
    for (std::size_t i = 0; i < n_; ++i) {
      if (sgn(d[i]) <= 0) continue;
      Rational ratio = xb_[i] / d[i];
      if (row == n_ || ratio < best_ratio || (ratio == best_ratio && basic_[i] < basic_[row])) {
        row = i;
        best_ratio = ratio;
      }
    }
    if (row == n_) fail(ErrorKind::internal_error, "set-cover LP reported unbounded");
    const Rational pivot_value = d[row];
    for (auto& e : binv_[row])
      if (sgn(e) != 0) e /= pivot_value;
    xb_[row] /= pivot_value;
    for (std::size_t i = 0; i < n_; ++i) {
      if (i == row || sgn(d[i]) == 0) continue;
      const Rational f = d[i];
      for (std::size_t r = 0; r < n_; ++r)
        if (sgn(binv_[row][r]) != 0) binv_[i][r] -= f * binv_[row][r];
      xb_[i] -= f * xb_[row];
    }
    basic_[row] = entering;
    ++pivots_;
  }

  std::size_t n_;
  std::vector<VertexSet> pool_;
  std::vector<std::vector<Rational>> binv_;
  std::vector<Rational> xb_;
  std::vector<long> basic_;
  std::uint64_t pivots_ = 0;
};

// Extends every primal set to a maximal one and merges duplicates.
inline std::vector<WeightedSet> normalize_primal(const ExclusivityGraph& g,
                                                 const std::vector<std::pair<VertexSet, Rational>>& raw) {
  std::map<std::vector<int>, Rational> merged;
  for (const auto& [s, w] : raw) merged[extend_to_maximal(g, s.to_vector())] += w;
  std::vector<WeightedSet> out;
  for (auto& [s, w] : merged) out.push_back({s, w});
  return out;
}

}  // namespace detail

/// Exact fractional chromatic number with primal and dual certificates.
/// On deadline, status is `bounds` with the best primal value as `upper`
/// and the scaled dual bound as `lower`.
inline FractionalColoring fractional_chromatic(const ExclusivityGraph& g, ChifMethod method, Duration budget) {
  Deadline deadline(budget);
  require(g.size() >= 1, "fractional chromatic number needs at least one vertex");
  const std::size_t n = g.size();
  detail::SetCoverSimplex lp(n);

  if (method == ChifMethod::enumerate)
    for (const auto& s : enumerate_maximal_independent_sets(g, kEnumerationPoolCap)) lp.add_column(VertexSet::of(s));

  bool closed = false;
  while (!closed) {
    if (!lp.optimize(deadline)) break;
    if (method == ChifMethod::enumerate) {
      closed = true;
      break;
    }
    auto priced = heavier_independent_set(g, lp.duals(), Rational(1), deadline);
    if (!priced.complete) break;
    if (!priced.set) {
      closed = true;
      break;
    }
    lp.add_column(VertexSet::of(extend_to_maximal(g, *priced.set)));
  }

  FractionalColoring fc;
  fc.primal = detail::normalize_primal(g, lp.solution());
  fc.dual = lp.duals();
  fc.pivots = lp.pivots();
  fc.columns = lp.pool_size();
  fc.upper = lp.objective();
  fc.value = fc.upper;
  if (closed) {
    fc.status = ChifStatus::exact;
    fc.lower = fc.upper;
  } else {
    fc.status = ChifStatus::bounds;
    // Any nonnegative y scaled by its heaviest independent set is a
    // feasible fractional clique.
    fc.lower = 1;
    bool nonnegative = std::all_of(fc.dual.begin(), fc.dual.end(), [](const Rational& r) { return sgn(r) >= 0; });
    Rational total = 0;
    for (const auto& r : fc.dual) total += r;
    if (nonnegative && sgn(total) > 0) {
      auto heaviest = max_independent_set(g, fc.dual, Duration(5.0));
      if (sgn(heaviest.upper_bound) > 0) fc.lower = std::max(fc.lower, Rational(total / heaviest.upper_bound));
    }
  }
  fc.elapsed = deadline.elapsed();
  return fc;
}

/// Re-checks a certificate from scratch: primal coverage and value, dual
/// nonnegativity and value, and dual feasibility against a fresh exact
/// maximum weight independent set (not the solver's column pool).
inline bool verify_certificates(const ExclusivityGraph& g, const FractionalColoring& fc,
                                Duration budget = Duration(60.0)) {
  if (!fc.exact()) return false;
  const std::size_t n = g.size();
  std::vector<Rational> coverage(n, Rational(0));
  Rational primal_total = 0;
  for (const auto& ws : fc.primal) {
    if (sgn(ws.weight) <= 0) return false;
    for (int v : ws.set)
      if (v < 0 || static_cast<std::size_t>(v) >= n) return false;
    if (!g.is_independent(VertexSet::of(ws.set))) return false;
    for (int v : ws.set) coverage[static_cast<std::size_t>(v)] += ws.weight;
    primal_total += ws.weight;
  }
  for (const auto& c : coverage)
    if (c < 1) return false;
  if (primal_total != fc.value) return false;

  if (fc.dual.size() != n) return false;
  Rational dual_total = 0;
  for (const auto& y : fc.dual) {
    if (sgn(y) < 0) return false;
    dual_total += y;
  }
  if (dual_total != fc.value) return false;
  auto heaviest = max_independent_set(g, fc.dual, budget);
  return heaviest.exact() && heaviest.value <= 1;
}

/// a:b-coloring from an exact fractional coloring: weights scaled by their
/// common denominator b become color multiplicities, giving a = b * chi_f
/// colors; vertices covered more than b times keep their b lowest colors.
inline AbColoring extract_ab_coloring(const FractionalColoring& fc) {
  if (!fc.exact()) fail(ErrorKind::invalid_state, "a:b-coloring needs an exact fractional coloring");
  std::vector<Rational> weights;
  for (const auto& ws : fc.primal) weights.push_back(ws.weight);
  const BigInt scale = lcm_of_denominators(weights);
  require(scale.fits_slong_p(), "color multiplicity too large");
  AbColoring ab;
  ab.b = scale.get_si();
  ab.colors.assign(fc.dual.size(), {});
  long next_color = 1;
  for (const auto& ws : fc.primal) {
    Rational times = ws.weight * Rational(scale);
    const long count = times.get_num().get_si();
    for (long c = 0; c < count; ++c, ++next_color)
      for (int v : ws.set) {
        auto& mine = ab.colors[static_cast<std::size_t>(v)];
        if (static_cast<long>(mine.size()) < ab.b) mine.push_back(next_color);
      }
  }
  ab.a = next_color - 1;
  for (const auto& mine : ab.colors)
    if (static_cast<long>(mine.size()) != ab.b) fail(ErrorKind::internal_error, "fractional coloring does not cover every vertex");
  if (make_rational(ab.a, ab.b) != fc.value) fail(ErrorKind::internal_error, "a/b does not equal the fractional chromatic number");
  return ab;
}

/// Every vertex has b distinct colors in 1..a and adjacent color sets are disjoint.
inline bool is_valid_ab_coloring(const ExclusivityGraph& g, const AbColoring& ab) {
  if (ab.colors.size() != g.size() || ab.b <= 0) return false;
  for (const auto& mine : ab.colors) {
    if (static_cast<long>(mine.size()) != ab.b) return false;
    for (std::size_t t = 0; t < mine.size(); ++t) {
      if (mine[t] < 1 || mine[t] > ab.a) return false;
      if (t > 0 && mine[t] <= mine[t - 1]) return false;
    }
  }
  for (auto [u, v] : g.edges()) {
    const auto& cu = ab.colors[static_cast<std::size_t>(u)];
    const auto& cv = ab.colors[static_cast<std::size_t>(v)];
    std::vector<long> common;
    std::set_intersection(cu.begin(), cu.end(), cv.begin(), cv.end(), std::back_inserter(common));
    if (!common.empty()) return false;
  }
  return true;
}

/// Cheap sandwich: max(n / alpha, omega) <= chi_f <= greedy chi.
inline std::pair<Rational, Rational> chif_bounds(const ExclusivityGraph& g, Duration budget = Duration(60.0)) {
  require(g.size() >= 1, "bounds need at least one vertex");
  const auto alpha = max_independent_set(g, std::nullopt, budget);
  const auto omega = max_clique(g, budget);
  Rational lower = Rational(static_cast<long>(g.size())) / alpha.upper_bound;
  lower.canonicalize();
  lower = std::max(lower, omega.value);
  const auto greedy = greedy_coloring(g);
  return {lower, Rational(greedy.value)};
}

}  // namespace qsic
