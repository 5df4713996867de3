#pragma once

// Self-verification suites run by `qsic verify`. Each check reports one
// pass/fail line; suites are grouped by library layer.

#include <cmath>
#include <complex>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qsic/combinat.hpp"
#include "qsic/cyclo.hpp"
#include "qsic/fraccolor.hpp"
#include "qsic/rays.hpp"
#include "qsic/sicval.hpp"
#include "qsic/xgraph.hpp"

namespace qsic {

struct CheckOutcome {
  std::string suite;
  std::string name;
  bool passed = false;
  std::string detail;
};

class SelfCheck {
 public:
  SelfCheck(int kmax, Duration alpha_budget, Duration chif_budget)
      : kmax_(kmax), alpha_budget_(alpha_budget), chif_budget_(chif_budget) {
    require(kmax >= 2, "--kmax must be >= 2");
  }

  static const std::vector<std::string>& suites() {
    static const std::vector<std::string> names{"cyclo", "rays", "graph", "combinat", "fraccolor", "sicval"};
    return names;
  }

  std::vector<CheckOutcome> run(const std::string& suite) {
    results_.clear();
    bool known = suite == "all";
    for (const auto& s : suites()) {
      if (suite != "all" && suite != s) continue;
      known = true;
      if (s == "cyclo") cyclo();
      if (s == "rays") rays();
      if (s == "graph") graph();
      if (s == "combinat") combinat();
      if (s == "fraccolor") fraccolor();
      if (s == "sicval") sicval();
    }
    require(known, "unknown suite '" + suite + "'");
    return results_;
  }

 private:
  void check(const std::string& suite, const std::string& name, const std::function<std::string()>& body) {
    CheckOutcome c{suite, name, false, {}};
    try {
      c.detail = body();
      c.passed = c.detail.empty();
    } catch (const std::exception& e) {
      c.detail = std::string("exception: ") + e.what();
    }
    results_.push_back(c);
  }

  void cyclo() {
    check("cyclo", "phi_k vanishes at exp(2 pi i/k), k <= 24", [] {
      for (int k = 1; k <= 24; ++k)
        if (std::abs(evaluate_poly(cyclotomic_poly(k), root_of_unity(k, 1))) >= 1e-9) return "k=" + std::to_string(k);
      return std::string();
    });
    check("cyclo", "exact zero test agrees with float on 10^4 random values", [] {
      std::mt19937_64 rng(20240601);
      std::uniform_int_distribution<int> order(1, 24), coeff(-9, 9), sparse(0, 3);
      for (int trial = 0; trial < 10000; ++trial) {
        const int k = order(rng);
        CycNum a(k);
        for (int t = 0; t < k; ++t)
          if (sparse(rng) == 0) a += CycNum::monomial(k, t, Rational(coeff(rng)));
        if (a.is_zero() != (std::abs(a.evaluate()) < 1e-9)) return "disagreement at k=" + std::to_string(k);
      }
      return std::string();
    });
  }

  void rays() {
    check("rays", "ray count and projective distinctness", [this] {
      for (int k = 2; k <= kmax_; ++k) {
        const RaySet rs = generate_set(k);
        if (rs.size() != ray_count(k)) return "count at k=" + std::to_string(k);
        for (std::size_t u = 0; u < rs.size(); ++u)
          for (std::size_t v = u + 1; v < rs.size(); ++v)
            if (projectively_equal(rs[u].components, rs[v].components)) return "duplicate ray at k=" + std::to_string(k);
      }
      return std::string();
    });
    check("rays", "class sums equal Identity, k Identity, k^2/3 Identity", [this] {
      for (int k = 2; k <= kmax_; ++k) {
        const RaySet rs = generate_set(k);
        const Rational expect[3] = {Rational(1), Rational(k), Rational(k * k, 3)};
        for (int c = 0; c < 3; ++c) {
          auto s = proportional_to_identity(class_projector_sum(rs, static_cast<RayClass>(c)));
          Rational e = expect[c];
          e.canonicalize();
          if (!s || *s != e) return "class " + std::to_string(c + 1) + " at k=" + std::to_string(k);
        }
      }
      return std::string();
    });
    check("rays", "projectors are Hermitian idempotents of trace 1", [this] {
      for (int k = 2; k <= std::min(kmax_, 6); ++k)
        for (const auto& r : generate_set(k)) {
          const ProjectorMatrix p = projector(r);
          if (!p.is_hermitian() || !(p * p == p) || !(p.trace() == CycNum::one(k))) return "k=" + std::to_string(k);
        }
      return std::string();
    });
  }

  void graph() {
    check("graph", "exact orthogonality agrees with float for every pair", [this] {
      for (int k = 2; k <= kmax_; ++k) {
        const RaySet rs = generate_set(k);
        const ExclusivityGraph g = build_graph(rs);
        for (std::size_t u = 0; u < rs.size(); ++u) {
          const auto a = evaluate(rs[u].components);
          for (std::size_t v = u + 1; v < rs.size(); ++v) {
            const auto b = evaluate(rs[v].components);
            std::complex<double> ip = std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1] + std::conj(a[2]) * b[2];
            if ((std::abs(ip) < 1e-9) != g.adjacent(u, v)) return "k=" + std::to_string(k);
          }
        }
      }
      return std::string();
    });
    check("graph", "structural items (a)-(d) hold when 3 does not divide k", [this] {
      for (int k = 2; k <= kmax_; ++k) {
        if (k % 3 == 0 || k == 2) continue;
        if (!structural_report(build_graph(generate_set(k))).all_passed()) return "k=" + std::to_string(k);
      }
      return std::string();
    });
    check("graph", "diag(1,q,q) relabeling is an automorphism", [this] {
      for (int k = 2; k <= kmax_; ++k) {
        const RaySet rs = generate_set(k);
        if (!is_automorphism(build_graph(rs), exponent_shift_permutation(rs))) return "k=" + std::to_string(k);
      }
      return std::string();
    });
  }

  void combinat() {
    check("combinat", "constructed sets are independent with closed-form size (k >= 4)", [this] {
      for (int k = 4; k <= kmax_; ++k)
        if (Rational(static_cast<long>(construct_independent_set(k).size())) != alpha_formula(k))
          return "k=" + std::to_string(k);
      return std::string();
    });
    check("combinat", "exact alpha matches closed form for 4 <= k <= kmax", [this] {
      for (int k = 4; k <= kmax_; ++k) {
        auto r = max_independent_set(build_graph(generate_set(k)), alpha_budget_);
        if (!r.exact() || r.value != alpha_formula(k)) return "k=" + std::to_string(k);
      }
      return std::string();
    });
    check("combinat", "pentagon: chi = 3, alpha = 2", [this] {
      const auto p = pentagon();
      if (chromatic_number(p, alpha_budget_).value != 3) return std::string("chi");
      if (max_independent_set(p, alpha_budget_).value != 2) return std::string("alpha");
      return std::string();
    });
  }

  void fraccolor() {
    check("fraccolor", "pentagon chi_f = 5/2 with a 5:2-coloring", [this] {
      const auto p = pentagon();
      auto fc = fractional_chromatic(p, ChifMethod::column_generation, chif_budget_);
      if (fc.value != make_rational(5, 2) || !verify_certificates(p, fc)) return std::string("value");
      auto ab = extract_ab_coloring(fc);
      if (ab.a != 5 || ab.b != 2 || !is_valid_ab_coloring(p, ab)) return std::string("a:b");
      return std::string();
    });
    check("fraccolor", "chi_f certificates for k = 2..min(5, kmax)", [this] {
      const Rational expect[4] = {make_rational(35, 11), make_rational(10, 3), make_rational(67, 21), Rational(3)};
      for (int k = 2; k <= std::min(5, kmax_); ++k) {
        const auto g = build_graph(generate_set(k));
        auto fc = fractional_chromatic(g, ChifMethod::column_generation, chif_budget_);
        if (!fc.exact() || fc.value != expect[k - 2] || !verify_certificates(g, fc)) return "k=" + std::to_string(k);
      }
      return std::string();
    });
    check("fraccolor", "enumeration and column generation agree (k <= 4)", [this] {
      for (int k = 2; k <= std::min(4, kmax_); ++k) {
        const auto g = build_graph(generate_set(k));
        auto a = fractional_chromatic(g, ChifMethod::enumerate, chif_budget_);
        auto b = fractional_chromatic(g, ChifMethod::column_generation, chif_budget_);
        if (a.value != b.value) return "k=" + std::to_string(k);
      }
      return std::string();
    });
  }

  void sicval() {
    check("sicval", "vanishing triples exist iff 3 | k (k <= 24)", [] {
      for (int k = 2; k <= 24; ++k) {
        auto t = vanishing_triples(k);
        if (k % 3 == 0) {
          const int m = k / 3;
          std::vector<std::pair<int, int>> expect{{m, 2 * m}, {2 * m, m}};
          if (t != expect) return "k=" + std::to_string(k);
        } else if (!t.empty()) {
          return "k=" + std::to_string(k);
        }
      }
      return std::string();
    });
    check("sicval", "class III shift law and basis partition for 3 | k", [this] {
      for (int k = 3; k <= kmax_; k += 3) {
        const RaySet rs = generate_set(k);
        const auto g = build_graph(rs);
        auto part = class_three_basis_partition(g);
        if (!orthogonality_shift_law(k, rs, g) || !part || part->size() != static_cast<std::size_t>(k * k / 3))
          return "k=" + std::to_string(k);
      }
      return std::string();
    });
    check("sicval", "k = 4 weighted inequality: bound 21, quantum 67/3", [this] {
      if (kmax_ < 4) return std::string();
      const RaySet rs = generate_set(4);
      auto wi = evaluate_weighted_inequality(rs, class_weights(rs, {Rational(5), Rational(3), Rational(1)}), alpha_budget_);
      if (wi.classical.value != 21 || !wi.quantum_exact || *wi.quantum_exact != make_rational(67, 3) || !wi.violated)
        return std::string("mismatch");
      return std::string();
    });
    check("sicval", "unit-weight violation matches the inequality criterion", [this] {
      for (int k = 2; k <= kmax_; ++k) {
        const RaySet rs = generate_set(k);
        const auto g = build_graph(rs);
        auto wi = evaluate_weighted_inequality(rs, g, std::vector<Rational>(rs.size(), Rational(1)), alpha_budget_);
        if (!wi.quantum_exact || *wi.quantum_exact != Rational(static_cast<long>(rs.size())) / Rational(3))
          return "quantum value at k=" + std::to_string(k);
        if (wi.violated != (inequality_criterion(wi.classical, rs.size()) == IneqVerdict::sic))
          return "k=" + std::to_string(k);
      }
      return std::string();
    });
  }

  int kmax_;
  Duration alpha_budget_;
  Duration chif_budget_;
  std::vector<CheckOutcome> results_;
};

}  // namespace qsic
