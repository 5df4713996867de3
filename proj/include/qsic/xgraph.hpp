#pragma once

// Exclusivity graphs: one vertex per ray, an edge for every exactly
// orthogonal pair.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "qsic/cyclo.hpp"
#include "qsic/error.hpp"
#include "qsic/rays.hpp"
#include "qsic/vertex_set.hpp"

namespace qsic {

struct VertexLabel {
  std::optional<RayClass> cls;  // empty for abstract test graphs
  int family = 0;
  int i = 0;
  int j = 0;

  /// "class:family:i:j"; abstract vertices use "v" as the class.
  std::string to_string() const {
    return std::string(cls ? qsic::to_string(*cls) : "v") + ":" + std::to_string(family) + ":" +
           std::to_string(i) + ":" + std::to_string(j);
  }
  friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

class ExclusivityGraph {
 public:
  ExclusivityGraph() = default;
  explicit ExclusivityGraph(std::size_t n) : rows_(n), labels_(n) {
    require(n <= VertexSet::capacity, "graph exceeds " + std::to_string(VertexSet::capacity) + " vertices");
    for (std::size_t v = 0; v < n; ++v) labels_[v].i = static_cast<int>(v);
  }

  std::size_t size() const noexcept { return rows_.size(); }
  const VertexSet& neighbors(std::size_t v) const { return rows_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
  std::size_t degree(std::size_t v) const { return rows_[v].count(); }
  VertexSet all() const { return VertexSet::first_n(size()); }

  void add_edge(std::size_t u, std::size_t v) {
    require(u < size() && v < size(), "edge endpoint out of range");
    require(u != v, "self-loops are not allowed");
    rows_[u].set(v);
    rows_[v].set(u);
  }

  const VertexLabel& label(std::size_t v) const { return labels_[v]; }
  void set_label(std::size_t v, VertexLabel l) { labels_[v] = l; }
  const std::vector<VertexLabel>& labels() const noexcept { return labels_; }

  std::size_t edge_count() const {
    std::size_t c = 0;
    for (const auto& r : rows_) c += r.count();
    return c / 2;
  }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t u = 0; u < size(); ++u)
      rows_[u].for_each([&](std::size_t v) {
        if (v > u) out.emplace_back(static_cast<int>(u), static_cast<int>(v));
      });
    return out;
  }

  bool is_independent(const VertexSet& s) const {
    bool ok = true;
    s.for_each([&](std::size_t v) {
      if (v >= size() || rows_[v].intersects(s)) ok = false;
    });
    return ok;
  }
  bool is_clique(const VertexSet& s) const {
    bool ok = true;
    s.for_each([&](std::size_t v) {
      VertexSet others = s;
      others.reset(v);
      if (v >= size() || (others - rows_[v]).any()) ok = false;
    });
    return ok;
  }

  /// Independent and no outside vertex can be added.
  bool is_maximal_independent(const VertexSet& s) const {
    if (!is_independent(s)) return false;
    for (std::size_t v = 0; v < size(); ++v)
      if (!s.test(v) && !rows_[v].intersects(s)) return false;
    return true;
  }

  friend bool operator==(const ExclusivityGraph& a, const ExclusivityGraph& b) {
    return a.rows_ == b.rows_;
  }

 private:
  std::vector<VertexSet> rows_;
  std::vector<VertexLabel> labels_;
};

inline VertexLabel label_of(const Ray& r) {
  return VertexLabel{r.cls, r.family, r.exp_i, r.exp_j};
}

/// Edge (u, v) iff <ray_u|ray_v> is exactly zero. Rows are split across
/// `threads` workers; the result does not depend on the split.
inline ExclusivityGraph build_graph(const RaySet& rs, unsigned threads = 1) {
  const std::size_t n = rs.size();
  ExclusivityGraph g(n);
  for (std::size_t v = 0; v < n; ++v) g.set_label(v, label_of(rs[v]));

  std::vector<VertexSet> rows(n);
  auto work = [&](std::size_t first_row, std::size_t stride) {
    for (std::size_t u = first_row; u < n; u += stride)
      for (std::size_t v = u + 1; v < n; ++v)
        if (inner_product(rs[u].components, rs[v].components).is_zero()) rows[u].set(v);
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, n));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
    for (auto& t : pool) t.join();
  }
  for (std::size_t u = 0; u < n; ++u) rows[u].for_each([&](std::size_t v) { g.add_edge(u, v); });
  return g;
}

inline ExclusivityGraph complement(const ExclusivityGraph& g) {
  ExclusivityGraph h(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) h.set_label(v, g.label(v));
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

/// Subgraph induced by `vertices` (kept in the given order).
inline ExclusivityGraph induced_subgraph(const ExclusivityGraph& g, const std::vector<int>& vertices) {
  ExclusivityGraph h(vertices.size());
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    h.set_label(a, g.label(static_cast<std::size_t>(vertices[a])));
    for (std::size_t b = a + 1; b < vertices.size(); ++b)
      if (g.adjacent(static_cast<std::size_t>(vertices[a]), static_cast<std::size_t>(vertices[b]))) h.add_edge(a, b);
  }
  return h;
}

inline ExclusivityGraph graph_from_edges(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  ExclusivityGraph g(n);
  for (auto [u, v] : edges) {
    require(u >= 0 && v >= 0, "negative vertex index");
    g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  }
  return g;
}

// Named test graphs.
inline ExclusivityGraph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle needs at least 3 vertices");
  ExclusivityGraph g(n);
  for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}
inline ExclusivityGraph pentagon() { return cycle_graph(5); }
inline ExclusivityGraph complete_graph(std::size_t n) {
  ExclusivityGraph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}
inline ExclusivityGraph empty_graph(std::size_t n) { return ExclusivityGraph(n); }

/// All triangles {u < v < w}; for rays in dimension 3 each one is a
/// complete orthogonal basis.
inline std::vector<std::array<int, 3>> orthogonal_bases(const ExclusivityGraph& g) {
  std::vector<std::array<int, 3>> out;
  for (std::size_t u = 0; u < g.size(); ++u)
    g.neighbors(u).for_each([&](std::size_t v) {
      if (v <= u) return;
      (g.neighbors(u) & g.neighbors(v)).for_each([&](std::size_t w) {
        if (w > v) out.push_back({static_cast<int>(u), static_cast<int>(v), static_cast<int>(w)});
      });
    });
  return out;
}

inline std::string export_dot(const ExclusivityGraph& g, const std::string& name = "G") {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t v = 0; v < g.size(); ++v) out << "  " << v << " [label=\"" << g.label(v).to_string() << "\"];\n";
  for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

/// Vertices of the given class, in canonical order.
inline std::vector<int> vertices_of_class(const ExclusivityGraph& g, RayClass cls) {
  std::vector<int> out;
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.label(v).cls == cls) out.push_back(static_cast<int>(v));
  return out;
}

struct StructuralCheck {
  std::string item;         // "a" .. "d"
  std::string description;
  bool passed = true;
  std::vector<int> counterexample;  // offending vertices when failed
};

struct StructuralReport {
  std::vector<StructuralCheck> checks;
  bool all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
  }
  const StructuralCheck& item(const std::string& id) const {
    for (const auto& c : checks)
      if (c.item == id) return c;
    fail(ErrorKind::invalid_parameter, "no structural item '" + id + "'");
  }
};

/// The four class-level facts that fix the independence number when 3 does
/// not divide k. They are evaluated for any k; at k = 3m item (b) fails.
inline StructuralReport structural_report(const ExclusivityGraph& g) {
  const auto one = vertices_of_class(g, RayClass::I);
  const auto two = vertices_of_class(g, RayClass::II);
  const auto three = vertices_of_class(g, RayClass::III);
  StructuralReport rep;

  StructuralCheck a{"a", "class I rays are mutually orthogonal", true, {}};
  if (one.size() != 3) {
    a.passed = false;
    a.counterexample = one;
  }
  for (std::size_t x = 0; x < one.size() && a.passed; ++x)
    for (std::size_t y = x + 1; y < one.size(); ++y)
      if (!g.adjacent(one[x], one[y])) {
        a.passed = false;
        a.counterexample = {one[x], one[y]};
        break;
      }
  rep.checks.push_back(a);

  StructuralCheck b{"b", "class III rays are mutually nonorthogonal", true, {}};
  for (std::size_t x = 0; x < three.size() && b.passed; ++x)
    for (std::size_t y = x + 1; y < three.size(); ++y)
      if (g.adjacent(three[x], three[y])) {
        b.passed = false;
        b.counterexample = {three[x], three[y]};
        break;
      }
  rep.checks.push_back(b);

  StructuralCheck c{"c", "no class I ray is orthogonal to a class III ray", true, {}};
  for (int u : one) {
    for (int w : three)
      if (g.adjacent(u, w)) {
        c.passed = false;
        c.counterexample = {u, w};
        break;
      }
    if (!c.passed) break;
  }
  rep.checks.push_back(c);

  StructuralCheck d{"d", "every class II ray is orthogonal to some class III ray", true, {}};
  const VertexSet third = VertexSet::of(three);
  for (int u : two)
    if (!g.neighbors(u).intersects(third)) {
      d.passed = false;
      d.counterexample = {u};
      break;
    }
  rep.checks.push_back(d);
  return rep;
}

/// Image of each canonical vertex under diag(1, q, q): class III (i, j) ->
/// (i+1, j+1), class II families 0 and 1 shift their exponent, family 2 and
/// class I are fixed.
inline std::vector<int> exponent_shift_permutation(const RaySet& rs) {
  std::vector<int> perm(rs.size());
  for (std::size_t v = 0; v < rs.size(); ++v) {
    const Ray& r = rs[v];
    switch (r.cls) {
      case RayClass::I: perm[v] = static_cast<int>(v); break;
      case RayClass::II:
        perm[v] = static_cast<int>(r.family == 2 ? v : rs.index_of_class_two(r.family, r.exp_i + 1));
        break;
      case RayClass::III: perm[v] = static_cast<int>(rs.index_of_class_three(r.exp_i + 1, r.exp_j + 1)); break;
    }
  }
  return perm;
}

inline bool is_automorphism(const ExclusivityGraph& g, const std::vector<int>& perm) {
  if (perm.size() != g.size()) return false;
  std::vector<bool> seen(g.size(), false);
  for (int p : perm) {
    if (p < 0 || static_cast<std::size_t>(p) >= g.size() || seen[static_cast<std::size_t>(p)]) return false;
    seen[static_cast<std::size_t>(p)] = true;
  }
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = u + 1; v < g.size(); ++v)
      if (g.adjacent(u, v) != g.adjacent(static_cast<std::size_t>(perm[u]), static_cast<std::size_t>(perm[v])))
        return false;
  return true;
}

}  // namespace qsic
