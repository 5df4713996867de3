#pragma once

// State-independent contextuality verdicts for the qutrit ray family.
//
// Two criteria are combined:
//  * the fractional chromatic number test chi_f(G) > 3, a necessary
//    condition only;
//  * violation of a sum-of-projectors inequality sum_i w_i P_i <= bound
//    whose operator is a multiple of the identity, so every state (the
//    maximally mixed one included) violates it.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsic/budget.hpp"
#include "qsic/combinat.hpp"
#include "qsic/cyclo.hpp"
#include "qsic/error.hpp"
#include "qsic/fraccolor.hpp"
#include "qsic/rational.hpp"
#include "qsic/rays.hpp"
#include "qsic/xgraph.hpp"

namespace qsic {

/// Qutrit dimension.
constexpr int kDimension = 3;

enum class RhVerdict { not_sic, necessary_condition_passed, inconclusive };
enum class IneqVerdict { sic, inconclusive };
enum class SicVerdict { sic, not_sic, inconclusive };

inline const char* to_string(RhVerdict v) {
  switch (v) {
    case RhVerdict::not_sic: return "not-SIC";
    case RhVerdict::necessary_condition_passed: return "necessary-condition-passed";
    case RhVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}
inline const char* to_string(IneqVerdict v) { return v == IneqVerdict::sic ? "SIC" : "inconclusive"; }
inline const char* to_string(SicVerdict v) {
  switch (v) {
    case SicVerdict::sic: return "SIC";
    case SicVerdict::not_sic: return "not-SIC";
    case SicVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

inline RhVerdict rh_criterion(const Rational& chif_value, bool exact) {
  if (!exact) return RhVerdict::inconclusive;
  return chif_value > kDimension ? RhVerdict::necessary_condition_passed : RhVerdict::not_sic;
}

inline RhVerdict rh_criterion(const FractionalColoring& fc) { return rh_criterion(fc.value, fc.exact()); }

/// SIC when the exact independence number is below n/3.
inline IneqVerdict inequality_criterion(const IndependenceResult& alpha, std::size_t n) {
  const Rational third = Rational(static_cast<long>(n)) / Rational(3);
  return alpha.exact() && alpha.value < third ? IneqVerdict::sic : IneqVerdict::inconclusive;
}

struct WeightedInequality {
  std::vector<Rational> weights;
  IndependenceResult classical;             // weighted independence number
  std::optional<Rational> quantum_exact;    // set when sum w_i P_i = c * Identity
  double quantum_numeric = 0.0;             // c, or lambda_max when state dependent
  bool state_independent = false;
  bool violated = false;
  std::optional<Rational> violation_ratio;  // quantum / classical when both exact
};

/// Classical bound = exact weighted independence number; quantum value =
/// c when the operator is c * Identity, else its largest eigenvalue
/// (numeric, flagged state dependent). With a non-exact classical bound the
/// violation is only claimed against its upper bound.
inline WeightedInequality evaluate_weighted_inequality(const RaySet& rs, const ExclusivityGraph& g,
                                                       const std::vector<Rational>& weights, Duration budget) {
  require(weights.size() == rs.size(), "weights length does not match ray count");
  for (const auto& w : weights) require(sgn(w) >= 0, "weights must be nonnegative");
  WeightedInequality wi;
  wi.weights = weights;
  if (std::all_of(weights.begin(), weights.end(), [](const Rational& w) { return w == 1; })) {
    wi.classical = max_independent_set(g, std::nullopt, budget, construct_independent_set(rs.order(), rs, g));
  } else {
    wi.classical = max_independent_set(g, weights, budget);
  }

  const ProjectorMatrix op = weighted_projector_sum(rs, weights);
  wi.quantum_exact = proportional_to_identity(op);
  wi.state_independent = wi.quantum_exact.has_value();
  if (wi.quantum_exact) {
    wi.quantum_numeric = wi.quantum_exact->get_d();
    wi.violated = *wi.quantum_exact > wi.classical.upper_bound;
    if (wi.classical.exact() && sgn(wi.classical.value) > 0)
      wi.violation_ratio = Rational(*wi.quantum_exact / wi.classical.value);
  } else {
    wi.quantum_numeric = largest_eigenvalue(op.evaluate());
    wi.violated = wi.quantum_numeric > wi.classical.upper_bound.get_d();
  }
  return wi;
}

inline WeightedInequality evaluate_weighted_inequality(const RaySet& rs, const std::vector<Rational>& weights,
                                                       Duration budget) {
  return evaluate_weighted_inequality(rs, build_graph(rs), weights, budget);
}

/// All (i, j) in 0..k-1 with 1 + q^i + q^j = 0, by exhaustive exact test.
inline std::vector<std::pair<int, int>> vanishing_triples(int k) {
  require(k >= 2, "vanishing triples need k >= 2");
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if ((CycNum::one(k) + CycNum::monomial(k, i) + CycNum::monomial(k, j)).is_zero()) out.emplace_back(i, j);
  return out;
}

/// For k = 3m: class III rays (1,q^i1,q^j1), (1,q^i2,q^j2) are orthogonal
/// exactly when (i2-i1, j2-j1) = (m,-m) or (-m,m) mod k. Compares that law
/// with the edges of the exact graph.
inline bool orthogonality_shift_law(int k, const RaySet& rs, const ExclusivityGraph& g) {
  require(k >= 3 && k % 3 == 0, "shift law needs k divisible by 3, got " + std::to_string(k));
  const int m = k / 3;
  auto mod = [k](int x) { return ((x % k) + k) % k; };
  const auto three = vertices_of_class(g, RayClass::III);
  for (std::size_t a = 0; a < three.size(); ++a)
    for (std::size_t b = a + 1; b < three.size(); ++b) {
      const Ray& r1 = rs[static_cast<std::size_t>(three[a])];
      const Ray& r2 = rs[static_cast<std::size_t>(three[b])];
      const int di = mod(r2.exp_i - r1.exp_i), dj = mod(r2.exp_j - r1.exp_j);
      const bool law = (di == mod(m) && dj == mod(-m)) || (di == mod(-m) && dj == mod(m));
      if (law != g.adjacent(static_cast<std::size_t>(three[a]), static_cast<std::size_t>(three[b]))) return false;
    }
  return true;
}

inline bool orthogonality_shift_law(int k) {
  require(k >= 3 && k % 3 == 0, "shift law needs k divisible by 3, got " + std::to_string(k));
  const RaySet rs = generate_set(k);
  return orthogonality_shift_law(k, rs, build_graph(rs));
}

/// The orthogonal bases inside class III when they partition it (every
/// class III vertex in exactly one triangle); empty otherwise.
inline std::optional<std::vector<std::array<int, 3>>> class_three_basis_partition(const ExclusivityGraph& g) {
  const auto three = vertices_of_class(g, RayClass::III);
  const ExclusivityGraph sub = induced_subgraph(g, three);
  auto bases = orthogonal_bases(sub);
  std::vector<int> hits(three.size(), 0);
  for (auto& t : bases)
    for (auto& v : t) {
      ++hits[static_cast<std::size_t>(v)];
      v = three[static_cast<std::size_t>(v)];
    }
  for (std::size_t v = 0; v < three.size(); ++v) {
    if (hits[v] != 1) return std::nullopt;
    if (sub.degree(v) != 2) return std::nullopt;
  }
  return bases;
}

struct AnalyzeOptions {
  Duration alpha_budget{60.0};
  Duration chif_budget{300.0};
  std::size_t chif_max_vertices = 64;  // larger graphs get sandwich bounds only
  ChifMethod chif_method = ChifMethod::column_generation;
  std::optional<std::array<Rational, 3>> class_weights;  // extra weighted inequality
  bool default_k4_weights = true;                        // (5, 3, 1) at k = 4 if none given
  unsigned threads = 1;
};

struct SicReport {
  int k = 0;
  std::size_t n = 0;
  std::size_t edges = 0;
  IndependenceResult alpha;
  Rational alpha_conjecture;
  std::vector<int> constructed_set;
  std::optional<FractionalColoring> chif;  // empty when skipped
  Rational chif_lower;                     // bounds, always filled
  Rational chif_upper;
  std::optional<Rational> quantum_value;  // unit-weight operator scalar
  RhVerdict rh_verdict = RhVerdict::inconclusive;
  IneqVerdict ineq_verdict = IneqVerdict::inconclusive;
  std::optional<WeightedInequality> weighted;
  std::array<Rational, 3> weighted_class_weights{};
  SicVerdict verdict = SicVerdict::inconclusive;
  StructuralReport structure;
  std::vector<std::pair<int, int>> vanishing;
  std::vector<std::string> notes;
};

/// generate -> graph -> alpha -> chi_f -> criteria. Never reports exactness a
/// solver did not establish; every deviation goes into `notes`.
inline SicReport analyze(int k, const AnalyzeOptions& opt = {}) {
  require(k >= 2, "analysis requires k >= 2, got " + std::to_string(k));
  SicReport rep;
  rep.k = k;
  const RaySet rs = generate_set(k);
  const ExclusivityGraph g = build_graph(rs, opt.threads);
  rep.n = rs.size();
  rep.edges = g.edge_count();
  rep.structure = structural_report(g);
  rep.vanishing = vanishing_triples(k);

  rep.alpha_conjecture = alpha_formula(k);
  rep.constructed_set = construct_independent_set(k, rs, g);
  rep.alpha = max_independent_set(g, std::nullopt, opt.alpha_budget, rep.constructed_set);
  const Rational third = Rational(static_cast<long>(rep.n)) / Rational(3);
  if (!rep.alpha.exact()) {
    rep.notes.push_back("independence search hit its budget: alpha in [" + to_string(rep.alpha.value) + ", " +
                        to_string(rep.alpha.upper_bound) + "]");
  } else if (rep.alpha.value != rep.alpha_conjecture) {
    rep.notes.push_back("closed-form alpha " + to_string(rep.alpha_conjecture) + " disagrees with exact alpha " +
                        to_string(rep.alpha.value));
  }

  rep.quantum_value = proportional_to_identity(weighted_projector_sum(rs, std::vector<Rational>(rep.n, Rational(1))));
  if (!rep.quantum_value || *rep.quantum_value != third)
    fail(ErrorKind::internal_error, "sum of projectors is not (n/3) * Identity");
  rep.ineq_verdict = inequality_criterion(rep.alpha, rep.n);

  if (rep.n <= opt.chif_max_vertices) {
    rep.chif = fractional_chromatic(g, opt.chif_method, opt.chif_budget);
    rep.chif_lower = rep.chif->lower;
    rep.chif_upper = rep.chif->upper;
    rep.rh_verdict = rh_criterion(*rep.chif);
    if (!rep.chif->exact())
      rep.notes.push_back("fractional chromatic number hit its budget: chi_f in [" + to_string(rep.chif_lower) +
                          ", " + to_string(rep.chif_upper) + "]");
  } else {
    auto [lower, upper] = chif_bounds(g, opt.alpha_budget);
    rep.chif_lower = lower;
    rep.chif_upper = upper;
    rep.rh_verdict = RhVerdict::inconclusive;
    rep.notes.push_back("fractional chromatic number skipped (n > " + std::to_string(opt.chif_max_vertices) +
                        "); sandwich bounds only");
  }
  if (rep.rh_verdict == RhVerdict::necessary_condition_passed)
    rep.notes.push_back("chi_f > 3 is necessary but not sufficient for SIC");

  std::optional<std::array<Rational, 3>> cw = opt.class_weights;
  if (!cw && opt.default_k4_weights && k == 4) cw = std::array<Rational, 3>{Rational(5), Rational(3), Rational(1)};
  if (cw) {
    rep.weighted_class_weights = *cw;
    rep.weighted = evaluate_weighted_inequality(rs, g, class_weights(rs, *cw), opt.alpha_budget);
  }

  const bool unit_violation = rep.ineq_verdict == IneqVerdict::sic;
  const bool weighted_violation = rep.weighted && rep.weighted->violated && rep.weighted->state_independent;
  if (unit_violation || weighted_violation)
    rep.verdict = SicVerdict::sic;
  else if (rep.rh_verdict == RhVerdict::not_sic)
    rep.verdict = SicVerdict::not_sic;
  if (rep.verdict == SicVerdict::sic && rep.rh_verdict == RhVerdict::not_sic)
    fail(ErrorKind::internal_error, "violated inequality contradicts chi_f <= 3");

  if (rep.alpha.exact() && rep.alpha.value >= third && k % 3 == 0)
    rep.notes.push_back("alpha >= n/3 although 3 | k: the unit-weight inequality does not certify SIC here");
  return rep;
}

struct Table1Row {
  int k = 0;
  std::size_t n = 0;
  FractionalColoring chif;
  bool certified = false;  // certificates re-verified
};

struct Table2Row {
  int k = 0;
  std::size_t n = 0;
  IndependenceResult alpha;
  std::vector<int> constructed_set;  // verified independent lower bound
  Rational alpha_conjecture;
  Rational n_over_3;
};

struct TableOptions {
  Duration alpha_budget{60.0};
  Duration chif_budget{300.0};
  ChifMethod chif_method = ChifMethod::column_generation;
  int table1_kmin = 2, table1_kmax = 5;
  int table2_kmin = 6, table2_kmax = 12;
  unsigned threads = 1;
};

inline Table1Row table1_row(int k, const TableOptions& opt) {
  const RaySet rs = generate_set(k);
  const ExclusivityGraph g = build_graph(rs, opt.threads);
  Table1Row row{k, rs.size(), fractional_chromatic(g, opt.chif_method, opt.chif_budget), false};
  row.certified = row.chif.exact() && verify_certificates(g, row.chif, opt.chif_budget);
  return row;
}

inline Table2Row table2_row(int k, const TableOptions& opt) {
  const RaySet rs = generate_set(k);
  const ExclusivityGraph g = build_graph(rs, opt.threads);
  Table2Row row;
  row.k = k;
  row.n = rs.size();
  row.constructed_set = construct_independent_set(k, rs, g);
  row.alpha = max_independent_set(g, std::nullopt, opt.alpha_budget, row.constructed_set);
  row.alpha_conjecture = alpha_formula(k);
  row.n_over_3 = Rational(static_cast<long>(row.n)) / Rational(3);
  return row;
}

struct Tables {
  std::vector<Table1Row> table1;
  std::vector<Table2Row> table2;
};

inline Tables reproduce_tables(const TableOptions& opt = {}, bool first = true, bool second = true) {
  Tables t;
  if (first)
    for (int k = opt.table1_kmin; k <= opt.table1_kmax; ++k) t.table1.push_back(table1_row(k, opt));
  if (second)
    for (int k = opt.table2_kmin; k <= opt.table2_kmax; ++k) t.table2.push_back(table2_row(k, opt));
  return t;
}

}  // namespace qsic
