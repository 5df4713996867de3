#pragma once

// Exact combinatorial solvers on exclusivity graphs: maximum (weighted)
// independent set, maximal independent set enumeration and chromatic number.
//
// The independent-set solver searches for a maximum (weight) clique in the
// complement graph with bitset candidate sets and greedy-coloring bounds.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsic/budget.hpp"
#include "qsic/error.hpp"
#include "qsic/rational.hpp"
#include "qsic/rays.hpp"
#include "qsic/vertex_set.hpp"
#include "qsic/xgraph.hpp"

namespace qsic {

enum class SolveStatus { exact, lower_bound };

inline const char* to_string(SolveStatus s) { return s == SolveStatus::exact ? "exact" : "lower-bound"; }

struct IndependenceResult {
  Rational value;
  std::vector<int> witness;  // ascending vertex indices
  SolveStatus status = SolveStatus::exact;
  Rational upper_bound;  // equals value when exact
  Duration elapsed{0};
  std::uint64_t nodes_explored = 0;

  bool exact() const { return status == SolveStatus::exact; }
};

struct ColoringResult {
  int value = 0;                // colors used by `assignment`
  std::vector<int> assignment;  // vertex -> color in 0..value-1
  bool exact = true;
  int lower_bound = 0;
  Duration elapsed{0};
  std::uint64_t nodes_explored = 0;
};

inline Rational weight_of(std::span<const int> vertices, const std::optional<std::vector<Rational>>& weights) {
  if (!weights) return Rational(static_cast<long>(vertices.size()));
  Rational s = 0;
  for (int v : vertices) s += (*weights)[static_cast<std::size_t>(v)];
  return s;
}

namespace detail {

/// Order for the clique search on `h`: repeatedly strip a minimum-degree
/// vertex (ties by lowest index); the reverse removal order puts the
/// densest core first.
inline std::vector<int> degeneracy_order(const ExclusivityGraph& h) {
  const std::size_t n = h.size();
  std::vector<int> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = static_cast<int>(h.degree(v));
  std::vector<bool> removed(n, false);
  std::vector<int> removal;
  removal.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    int best = -1;
    for (std::size_t v = 0; v < n; ++v)
      if (!removed[v] && (best < 0 || degree[v] < degree[static_cast<std::size_t>(best)])) best = static_cast<int>(v);
    removed[static_cast<std::size_t>(best)] = true;
    removal.push_back(best);
    h.neighbors(static_cast<std::size_t>(best)).for_each([&](std::size_t u) {
      if (!removed[u]) --degree[u];
    });
  }
  std::reverse(removal.begin(), removal.end());
  return removal;
}

template <typename W>
struct CliqueOutcome {
  bool found = false;  // a clique heavier than the initial bound was found
  W best{};
  std::vector<int> clique;  // original vertex indices
  bool complete = true;     // search closed before the deadline
  W root_bound{};
  std::uint64_t nodes = 0;
};

/// Maximum weight clique of `h` strictly heavier than `initial_best`.
/// Weights must be nonnegative.
template <typename W>
class CliqueSearch {
 public:
  CliqueSearch(const ExclusivityGraph& h, std::span<const W> weights, const Deadline& deadline)
      : deadline_(deadline), n_(h.size()) {
    order_ = degeneracy_order(h);
    std::vector<int> position(n_);
    for (std::size_t p = 0; p < n_; ++p) position[static_cast<std::size_t>(order_[p])] = static_cast<int>(p);
    adj_.resize(n_);
    weight_.resize(n_);
    for (std::size_t p = 0; p < n_; ++p) {
      const auto v = static_cast<std::size_t>(order_[p]);
      weight_[p] = weights[v];
      h.neighbors(v).for_each([&](std::size_t u) { adj_[p].set(static_cast<std::size_t>(position[u])); });
    }
    scratch_.resize(n_ + 1);
  }

  CliqueOutcome<W> run(const W& initial_best, const std::vector<int>& initial_clique) {
    CliqueOutcome<W> out;
    best_ = initial_best;
    best_clique_.clear();
    found_ = false;
    if (!initial_clique.empty()) {
      W w{};
      for (int v : initial_clique) w += weight_[static_cast<std::size_t>(position_of(v))];
      if (w > best_) {
        best_ = w;
        for (int v : initial_clique) best_clique_.push_back(position_of(v));
        found_ = true;
      }
    }
    current_.clear();
    aborted_ = false;
    nodes_ = 0;
    root_bound_ = W{};
    if (n_ > 0) expand(VertexSet::first_n(n_), W{}, 0);
    out.found = found_;
    out.best = best_;
    for (int p : best_clique_) out.clique.push_back(order_[static_cast<std::size_t>(p)]);
    std::sort(out.clique.begin(), out.clique.end());
    out.complete = !aborted_;
    out.root_bound = root_bound_;
    out.nodes = nodes_;
    return out;
  }

 private:
  struct Frame {
    std::vector<int> vertices;
    std::vector<W> bounds;
  };

  int position_of(int v) const {
    for (std::size_t p = 0; p < n_; ++p)
      if (order_[p] == v) return static_cast<int>(p);
    fail(ErrorKind::invalid_parameter, "warm-start vertex out of range");
  }

  void color(VertexSet candidates, Frame& frame) {
    frame.vertices.clear();
    frame.bounds.clear();
    W running{};
    while (candidates.any()) {
      VertexSet pool = candidates;
      W heaviest{};
      const std::size_t class_start = frame.vertices.size();
      while (pool.any()) {
        const std::size_t v = pool.first();
        pool.reset(v);
        candidates.reset(v);
        pool.subtract(adj_[v]);
        frame.vertices.push_back(static_cast<int>(v));
        if (weight_[v] > heaviest) heaviest = weight_[v];
      }
      running += heaviest;
      for (std::size_t t = class_start; t < frame.vertices.size(); ++t) frame.bounds.push_back(running);
    }
  }

  void expand(VertexSet candidates, const W& current_weight, std::size_t depth) {
    if ((++nodes_ & 255U) == 0 && deadline_.expired()) aborted_ = true;
    if (aborted_) return;
    Frame& frame = scratch_[depth];
    color(candidates, frame);
    if (depth == 0 && !frame.bounds.empty()) root_bound_ = frame.bounds.back();
    for (std::size_t idx = frame.vertices.size(); idx-- > 0;) {
      if (!(current_weight + frame.bounds[idx] > best_)) return;
      const auto v = static_cast<std::size_t>(frame.vertices[idx]);
      current_.push_back(static_cast<int>(v));
      W next_weight = current_weight + weight_[v];
      if (next_weight > best_) {
        best_ = next_weight;
        best_clique_ = current_;
        found_ = true;
      }
      VertexSet next = candidates & adj_[v];
      if (next.any()) expand(next, next_weight, depth + 1);
      current_.pop_back();
      candidates.reset(v);
      if (aborted_) return;
    }
  }

  const Deadline& deadline_;
  std::size_t n_;
  std::vector<int> order_;
  std::vector<VertexSet> adj_;
  std::vector<W> weight_;
  std::vector<Frame> scratch_;
  std::vector<int> current_;
  std::vector<int> best_clique_;
  W best_{};
  W root_bound_{};
  bool found_ = false;
  bool aborted_ = false;
  std::uint64_t nodes_ = 0;
};

/// Integer weights for the search: rational weights times the lcm of their
/// denominators. `int64` when every partial sum fits, big integers otherwise.
struct ScaledWeights {
  BigInt scale = 1;
  std::vector<BigInt> values;
  bool fits_int64 = true;
};

inline ScaledWeights scale_weights(std::span<const Rational> weights) {
  ScaledWeights sw;
  sw.scale = lcm_of_denominators(weights);
  BigInt total = 0;
  for (const auto& w : weights) {
    BigInt z = w.get_num() * (sw.scale / w.get_den());
    total += z;
    sw.values.push_back(z);
  }
  BigInt limit = BigInt(1) << 60;
  sw.fits_int64 = total < limit && sw.scale < limit;
  return sw;
}

inline void check_weights(const ExclusivityGraph& g, const std::optional<std::vector<Rational>>& weights) {
  if (!weights) return;
  require(weights->size() == g.size(), "weights length " + std::to_string(weights->size()) +
                                           " does not match vertex count " + std::to_string(g.size()));
  for (const auto& w : *weights) require(sgn(w) >= 0, "weights must be nonnegative");
}

// Runs the clique search on the complement with the right integer type;
// `threshold` is a scaled lower bound that results must strictly exceed.
struct GenericOutcome {
  bool found = false;
  Rational best;
  std::vector<int> set;
  bool complete = true;
  Rational root_bound;
  std::uint64_t nodes = 0;
};

inline GenericOutcome search_independent(const ExclusivityGraph& g, const std::optional<std::vector<Rational>>& weights,
                                         const Rational& threshold, const std::vector<int>& warm_start,
                                         const Deadline& deadline) {
  const ExclusivityGraph h = complement(g);
  GenericOutcome go;
  auto finish = [&](const auto& out, const BigInt& scale) {
    go.found = out.found;
    go.complete = out.complete;
    go.nodes = out.nodes;
    go.set = out.clique;
    go.best = Rational(BigInt(out.best)) / Rational(scale);
    go.root_bound = Rational(BigInt(out.root_bound)) / Rational(scale);
    go.best.canonicalize();
    go.root_bound.canonicalize();
  };
  if (!weights) {
    std::vector<std::int64_t> unit(g.size(), 1);
    CliqueSearch<std::int64_t> search(h, unit, deadline);
    BigInt floor_t;
    mpz_fdiv_q(floor_t.get_mpz_t(), threshold.get_num_mpz_t(), threshold.get_den_mpz_t());
    auto out = search.run(static_cast<std::int64_t>(floor_t.get_si()), warm_start);
    finish(out, BigInt(1));
    return go;
  }
  ScaledWeights sw = scale_weights(*weights);
  Rational scaled_t = threshold * Rational(sw.scale);
  BigInt floor_t;
  mpz_fdiv_q(floor_t.get_mpz_t(), scaled_t.get_num_mpz_t(), scaled_t.get_den_mpz_t());
  if (sw.fits_int64 && floor_t.fits_slong_p()) {
    std::vector<std::int64_t> w;
    for (const auto& z : sw.values) w.push_back(static_cast<std::int64_t>(z.get_si()));
    CliqueSearch<std::int64_t> search(h, w, deadline);
    auto out = search.run(static_cast<std::int64_t>(floor_t.get_si()), warm_start);
    finish(out, sw.scale);
  } else {
    CliqueSearch<BigInt> search(h, sw.values, deadline);
    auto out = search.run(floor_t, warm_start);
    finish(out, sw.scale);
  }
  return go;
}

}  // namespace detail

/// Maximum (weight) independent set. Unit weights when `weights` is empty.
/// On deadline the best set found is returned with status lower-bound.
/// `warm_start`, when given, must be independent and seeds the incumbent.
inline IndependenceResult max_independent_set(const ExclusivityGraph& g,
                                              const std::optional<std::vector<Rational>>& weights,
                                              Duration budget, const std::vector<int>& warm_start = {}) {
  Deadline deadline(budget);
  detail::check_weights(g, weights);
  if (!warm_start.empty() && !g.is_independent(VertexSet::of(warm_start)))
    fail(ErrorKind::invalid_parameter, "warm-start set is not independent");

  // The threshold -1 makes the empty set (weight 0) an acceptable answer.
  auto go = detail::search_independent(g, weights, Rational(-1), warm_start, deadline);

  IndependenceResult r;
  r.witness = go.set;
  r.value = weight_of(r.witness, weights);
  r.status = go.complete ? SolveStatus::exact : SolveStatus::lower_bound;
  r.upper_bound = go.complete ? r.value : std::max(go.root_bound, r.value);
  r.nodes_explored = go.nodes;
  r.elapsed = deadline.elapsed();
  if (!g.is_independent(VertexSet::of(r.witness)) || (go.found && r.value != go.best))
    fail(ErrorKind::internal_error, "independent-set witness failed re-verification");
  return r;
}

inline IndependenceResult max_independent_set(const ExclusivityGraph& g, Duration budget) {
  return max_independent_set(g, std::nullopt, budget);
}

/// Heaviest independent set with weight strictly above `threshold`, or an
/// empty optional when the search proves none exists. Deadline expiry is
/// reported through `complete == false`.
struct ThresholdSearch {
  std::optional<std::vector<int>> set;
  Rational weight;
  bool complete = true;
  std::uint64_t nodes = 0;
};

inline ThresholdSearch heavier_independent_set(const ExclusivityGraph& g, const std::vector<Rational>& weights,
                                               const Rational& threshold, const Deadline& deadline) {
  std::optional<std::vector<Rational>> w(weights);
  detail::check_weights(g, w);
  auto go = detail::search_independent(g, w, threshold, {}, deadline);
  ThresholdSearch ts;
  ts.complete = go.complete;
  ts.nodes = go.nodes;
  if (go.found) {
    ts.set = go.set;
    ts.weight = weight_of(go.set, w);
    if (!g.is_independent(VertexSet::of(go.set)) || ts.weight <= threshold)
      fail(ErrorKind::internal_error, "pricing witness failed re-verification");
  }
  return ts;
}

/// Maximum clique of `g` (independent set of its complement).
inline IndependenceResult max_clique(const ExclusivityGraph& g, Duration budget) {
  return max_independent_set(complement(g), std::nullopt, budget);
}

/// Greedily adds vertices in index order until the set is maximal.
inline std::vector<int> extend_to_maximal(const ExclusivityGraph& g, const std::vector<int>& set) {
  VertexSet s = VertexSet::of(set);
  VertexSet blocked = s;
  s.for_each([&](std::size_t v) { blocked |= g.neighbors(v); });
  for (std::size_t v = 0; v < g.size(); ++v)
    if (!blocked.test(v)) {
      s.set(v);
      blocked.set(v);
      blocked |= g.neighbors(v);
    }
  return s.to_vector();
}

/// All inclusion-maximal independent sets (Bron-Kerbosch with Tomita
/// pivoting on the complement), sorted lexicographically. Throws
/// capacity-exceeded once more than `cap` sets are found.
inline std::vector<std::vector<int>> enumerate_maximal_independent_sets(const ExclusivityGraph& g, std::size_t cap) {
  require(cap > 0, "enumeration cap must be positive");
  const std::size_t n = g.size();
  std::vector<VertexSet> comp(n);
  const VertexSet all = g.all();
  for (std::size_t v = 0; v < n; ++v) {
    comp[v] = all - g.neighbors(v);
    comp[v].reset(v);
  }
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto recurse = [&](auto&& self, VertexSet candidates, VertexSet excluded) -> void {
    if (candidates.none()) {
      if (excluded.none()) {
        if (out.size() >= cap)
          fail(ErrorKind::capacity_exceeded, "more than " + std::to_string(cap) + " maximal independent sets");
        std::vector<int> s = current;
        std::sort(s.begin(), s.end());
        out.push_back(std::move(s));
      }
      return;
    }
    std::size_t pivot = 0, pivot_score = 0;
    bool have_pivot = false;
    (candidates | excluded).for_each([&](std::size_t u) {
      std::size_t score = (candidates & comp[u]).count();
      if (!have_pivot || score > pivot_score) {
        pivot = u;
        pivot_score = score;
        have_pivot = true;
      }
    });
    VertexSet branch = candidates - comp[pivot];
    branch.for_each([&](std::size_t v) {
      current.push_back(static_cast<int>(v));
      self(self, candidates & comp[v], excluded & comp[v]);
      current.pop_back();
      candidates.reset(v);
      excluded.set(v);
    });
  };
  if (n == 0) return {{}};
  recurse(recurse, all, VertexSet{});
  std::sort(out.begin(), out.end());
  return out;
}

namespace detail {

// DSATUR heuristic coloring; returns colors per vertex.
inline std::vector<int> dsatur_greedy(const ExclusivityGraph& g) {
  const std::size_t n = g.size();
  std::vector<int> color(n, -1);
  std::vector<VertexSet> seen(n);  // colors present around each vertex
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    std::size_t best_sat = 0, best_deg = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      std::size_t sat = seen[v].count(), deg = g.degree(v);
      if (pick == n || sat > best_sat || (sat == best_sat && deg > best_deg)) {
        pick = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    int c = 0;
    while (seen[pick].test(static_cast<std::size_t>(c))) ++c;
    color[pick] = c;
    g.neighbors(pick).for_each([&](std::size_t u) { seen[u].set(static_cast<std::size_t>(c)); });
  }
  return color;
}

}  // namespace detail

/// Greedy proper coloring (DSATUR order); an upper bound on chi.
inline ColoringResult greedy_coloring(const ExclusivityGraph& g) {
  ColoringResult r;
  r.assignment = detail::dsatur_greedy(g);
  r.value = r.assignment.empty() ? 0 : *std::max_element(r.assignment.begin(), r.assignment.end()) + 1;
  r.exact = false;
  r.lower_bound = g.size() > 0 ? 1 : 0;
  return r;
}

inline bool is_proper_coloring(const ExclusivityGraph& g, const std::vector<int>& assignment) {
  if (assignment.size() != g.size()) return false;
  for (auto [u, v] : g.edges())
    if (assignment[static_cast<std::size_t>(u)] == assignment[static_cast<std::size_t>(v)]) return false;
  return true;
}

/// Exact chromatic number by DSATUR branch and bound. The lower bound is
/// the clique number; on deadline the best coloring is returned with
/// `exact == false`.
inline ColoringResult chromatic_number(const ExclusivityGraph& g, Duration budget) {
  Deadline deadline(budget);
  const std::size_t n = g.size();
  ColoringResult best = greedy_coloring(g);
  if (n == 0) {
    best.exact = true;
    return best;
  }
  auto clique = max_clique(g, deadline.remaining().count() > 0 ? deadline.remaining() : Duration(1e-3));
  const int lower = static_cast<int>(clique.value.get_num().get_si());
  best.lower_bound = lower;

  std::vector<int> color(n, -1);
  std::vector<std::vector<int>> around(n, std::vector<int>(n + 1, 0));  // neighbor color counts
  std::vector<int> saturation(n, 0);
  std::uint64_t nodes = 0;
  bool aborted = false;
  // Seed with the clique so symmetric colorings are not re-explored.
  auto assign = [&](std::size_t v, int c) {
    color[v] = c;
    g.neighbors(v).for_each([&](std::size_t u) {
      if (around[u][static_cast<std::size_t>(c)]++ == 0) ++saturation[u];
    });
  };
  auto unassign = [&](std::size_t v) {
    const int c = color[v];
    color[v] = -1;
    g.neighbors(v).for_each([&](std::size_t u) {
      if (--around[u][static_cast<std::size_t>(c)] == 0) --saturation[u];
    });
  };
  int seeded = 0;
  for (int v : clique.witness) assign(static_cast<std::size_t>(v), seeded++);

  auto search = [&](auto&& self, std::size_t colored, int used) -> void {
    if (best.value <= lower || aborted || used >= best.value) return;
    if ((++nodes & 255U) == 0 && deadline.expired()) {
      aborted = true;
      return;
    }
    if (colored == n) {
      best.value = used;
      best.assignment = color;
      return;
    }
    std::size_t pick = n;
    for (std::size_t v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      if (pick == n || saturation[v] > saturation[pick] ||
          (saturation[v] == saturation[pick] && g.degree(v) > g.degree(pick)))
        pick = v;
    }
    for (int c = 0; c <= used; ++c) {
      if (c == used && used + 1 >= best.value) break;
      if (around[pick][static_cast<std::size_t>(c)] > 0) continue;
      assign(pick, c);
      self(self, colored + 1, std::max(used, c + 1));
      unassign(pick);
      if (best.value <= lower || aborted) return;
    }
  };
  search(search, static_cast<std::size_t>(seeded), seeded);

  best.exact = !aborted && clique.exact();
  if (best.exact) best.lower_bound = best.value;
  best.nodes_explored = nodes;
  best.elapsed = deadline.elapsed();
  if (!is_proper_coloring(g, best.assignment)) fail(ErrorKind::internal_error, "coloring failed re-verification");
  return best;
}

/// Closed-form independence number of the ray family: k^2/3 + k when 3 | k,
/// else 1 + k^2. A conjectured value, compared against the exact solver.
inline Rational alpha_formula(int k) {
  require(k >= 2, "alpha formula requires k >= 2");
  if (k % 3 == 0) return Rational(k * k / 3 + k);
  return Rational(1 + k * k);
}

/// Explicit independent set of size alpha_formula(k), re-verified on `g`.
/// 3 does not divide k: ray (1,0,0) plus all of class III.
/// k = 3m: class II rays (1,-q^i,0), (1,0,-q^j), (0,1,-q^mu) with -i, j,
/// -mu-1 (mod k) in 0..m-1, and class III rays (1,q^i,q^j) with -i, j,
/// i-j-1 (mod k) all outside 0..m-1.
inline std::vector<int> construct_independent_set(int k, const RaySet& rs, const ExclusivityGraph& g) {
  require(k >= 2, "construction requires k >= 2");
  require(rs.order() == k && g.size() == rs.size(), "ray set / graph do not match k");
  auto mod = [k](int x) { return ((x % k) + k) % k; };
  std::vector<int> set;
  if (k % 3 != 0) {
    set.push_back(static_cast<int>(rs.index_of_class_one(0)));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) set.push_back(static_cast<int>(rs.index_of_class_three(i, j)));
  } else {
    const int m = k / 3;
    auto low = [&](int x) { return mod(x) < m; };
    for (int e = 0; e < k; ++e) {
      if (low(-e)) set.push_back(static_cast<int>(rs.index_of_class_two(0, e)));
      if (low(e)) set.push_back(static_cast<int>(rs.index_of_class_two(1, e)));
      if (low(-e - 1)) set.push_back(static_cast<int>(rs.index_of_class_two(2, e)));
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (!low(-i) && !low(j) && !low(i - j - 1)) set.push_back(static_cast<int>(rs.index_of_class_three(i, j)));
  }
  std::sort(set.begin(), set.end());
  if (!g.is_independent(VertexSet::of(set)))
    fail(ErrorKind::internal_error, "constructed set for k=" + std::to_string(k) + " is not independent");
  return set;
}

inline std::vector<int> construct_independent_set(int k) {
  const RaySet rs = generate_set(k);
  return construct_independent_set(k, rs, build_graph(rs));
}

}  // namespace qsic
