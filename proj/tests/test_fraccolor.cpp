#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qsic/fraccolor.hpp"
#include "qsic/serialize.hpp"

using namespace qsic;

namespace {

const Duration kBudget{120.0};

ExclusivityGraph to_graph(const oracle::SmallGraph& s) {
  ExclusivityGraph g(static_cast<std::size_t>(s.n));
  for (int u = 0; u < s.n; ++u)
    for (int v = u + 1; v < s.n; ++v)
      if ((s.adj[static_cast<std::size_t>(u)] >> v) & 1U) g.add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
  return g;
}

FractionalColoring hand_pentagon_certificate() {
  FractionalColoring fc;
  fc.value = make_rational(5, 2);
  fc.lower = fc.upper = fc.value;
  for (auto s : std::vector<std::vector<int>>{{0, 2}, {1, 3}, {2, 4}, {0, 3}, {1, 4}}) fc.primal.push_back({s, make_rational(1, 2)});
  fc.dual.assign(5, make_rational(1, 2));
  return fc;
}

}  // namespace

TEST(FractionalChromatic, Pentagon) {
  for (auto method : {ChifMethod::enumerate, ChifMethod::column_generation}) {
    const auto fc = fractional_chromatic(pentagon(), method, kBudget);
    ASSERT_TRUE(fc.exact());
    EXPECT_EQ(fc.value, make_rational(5, 2));
    EXPECT_TRUE(verify_certificates(pentagon(), fc));
  }
}

TEST(FractionalChromatic, SimpleFamilies) {
  EXPECT_EQ(fractional_chromatic(complete_graph(4), ChifMethod::column_generation, kBudget).value, Rational(4));
  EXPECT_EQ(fractional_chromatic(empty_graph(4), ChifMethod::column_generation, kBudget).value, Rational(1));
  EXPECT_EQ(fractional_chromatic(cycle_graph(7), ChifMethod::column_generation, kBudget).value, make_rational(7, 3));
  EXPECT_EQ(fractional_chromatic(cycle_graph(8), ChifMethod::enumerate, kBudget).value, Rational(2));
  EXPECT_THROW(fractional_chromatic(ExclusivityGraph(0), ChifMethod::enumerate, kBudget), Error);
}

TEST(FractionalChromatic, RayGraphsTwoToFive) {
  const Rational expected[] = {make_rational(35, 11), make_rational(10, 3), make_rational(67, 21), Rational(3)};
  for (int k = 2; k <= 5; ++k) {
    const ExclusivityGraph g = build_graph(generate_set(k));
    const auto fc = fractional_chromatic(g, ChifMethod::column_generation, kBudget);
    ASSERT_TRUE(fc.exact()) << k;
    EXPECT_EQ(fc.value, expected[k - 2]) << k;
    EXPECT_TRUE(verify_certificates(g, fc)) << k;
  }
}

TEST(FractionalChromatic, MethodsAgreeOnRayGraphs) {
  for (int k = 2; k <= 4; ++k) {
    const ExclusivityGraph g = build_graph(generate_set(k));
    const auto a = fractional_chromatic(g, ChifMethod::enumerate, kBudget);
    const auto b = fractional_chromatic(g, ChifMethod::column_generation, kBudget);
    EXPECT_EQ(a.value, b.value) << k;
    EXPECT_TRUE(verify_certificates(g, a)) << k;
  }
}

TEST(FractionalChromatic, MethodsAgreeOnRandomGraphs) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> size(1, 15);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int t = 0; t < 50; ++t) {
    const auto g = to_graph(oracle::random_graph(size(rng), density(rng), rng));
    const auto a = fractional_chromatic(g, ChifMethod::enumerate, kBudget);
    const auto b = fractional_chromatic(g, ChifMethod::column_generation, kBudget);
    ASSERT_TRUE(a.exact() && b.exact());
    EXPECT_EQ(a.value, b.value);
    EXPECT_TRUE(verify_certificates(g, a));
    EXPECT_TRUE(verify_certificates(g, b));
    // sandwich against independent quantities
    const auto alpha = max_independent_set(g, kBudget);
    EXPECT_GE(a.value, Rational(static_cast<long>(g.size())) / alpha.value);
    EXPECT_LE(a.value, Rational(chromatic_number(g, kBudget).value));
  }
}

TEST(Certificates, HandCertificateAccepted) { EXPECT_TRUE(verify_certificates(pentagon(), hand_pentagon_certificate())); }

TEST(Certificates, TamperedCertificatesRejected) {
  const ExclusivityGraph p = pentagon();
  auto fc = hand_pentagon_certificate();
  fc.primal[0].weight = make_rational(1, 3);
  EXPECT_FALSE(verify_certificates(p, fc));

  fc = hand_pentagon_certificate();
  fc.primal[0].set = {0, 1};
  EXPECT_FALSE(verify_certificates(p, fc));

  fc = hand_pentagon_certificate();
  fc.dual[0] = make_rational(1, 1);
  fc.dual[1] = 0;
  EXPECT_FALSE(verify_certificates(p, fc));  // {0,2} would then weigh 3/2

  fc = hand_pentagon_certificate();
  fc.value = 3;
  EXPECT_FALSE(verify_certificates(p, fc));

  fc = hand_pentagon_certificate();
  fc.status = ChifStatus::bounds;
  EXPECT_FALSE(verify_certificates(p, fc));

  const ExclusivityGraph g = build_graph(generate_set(3));
  auto real = fractional_chromatic(g, ChifMethod::column_generation, kBudget);
  ASSERT_TRUE(verify_certificates(g, real));
  real.primal.pop_back();
  EXPECT_FALSE(verify_certificates(g, real));
}

TEST(Certificates, JsonRoundTrip) {
  const ExclusivityGraph g = build_graph(generate_set(4));
  const auto fc = fractional_chromatic(g, ChifMethod::column_generation, kBudget);
  const auto back = fractional_coloring_from_json(json::parse(to_json(fc).dump()));
  EXPECT_EQ(back.value, fc.value);
  EXPECT_EQ(back.primal, fc.primal);
  EXPECT_EQ(back.dual, fc.dual);
  EXPECT_TRUE(verify_certificates(g, back));
}

TEST(AbColoring, Pentagon) {
  const auto fc = fractional_chromatic(pentagon(), ChifMethod::column_generation, kBudget);
  const auto ab = extract_ab_coloring(fc);
  EXPECT_EQ(ab.a, 5);
  EXPECT_EQ(ab.b, 2);
  EXPECT_TRUE(is_valid_ab_coloring(pentagon(), ab));
  auto broken = ab;
  broken.colors[1] = broken.colors[0];
  EXPECT_FALSE(is_valid_ab_coloring(pentagon(), broken));
}

TEST(AbColoring, RayGraphs) {
  for (int k = 2; k <= 5; ++k) {
    const ExclusivityGraph g = build_graph(generate_set(k));
    const auto fc = fractional_chromatic(g, ChifMethod::column_generation, kBudget);
    const auto ab = extract_ab_coloring(fc);
    EXPECT_EQ(make_rational(ab.a, ab.b), fc.value) << k;
    EXPECT_TRUE(is_valid_ab_coloring(g, ab)) << k;
  }
}

TEST(AbColoring, NeedsExactInput) {
  auto fc = hand_pentagon_certificate();
  fc.status = ChifStatus::bounds;
  try {
    extract_ab_coloring(fc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_state);
  }
}

TEST(Bounds, Sandwich) {
  auto [lo, hi] = chif_bounds(pentagon());
  EXPECT_EQ(lo, make_rational(5, 2));
  EXPECT_EQ(hi, Rational(3));
  auto [lo5, hi5] = chif_bounds(build_graph(generate_set(5)));
  EXPECT_GE(lo5, Rational(3));
  EXPECT_GE(hi5, Rational(3));
}

TEST(Budget, TinyBudgetGivesBounds) {
  const ExclusivityGraph g = build_graph(generate_set(5));
  const auto fc = fractional_chromatic(g, ChifMethod::column_generation, Duration(1e-6));
  if (!fc.exact()) {
    EXPECT_LE(fc.lower, Rational(3));
    EXPECT_GE(fc.upper, Rational(3));
    EXPECT_FALSE(verify_certificates(g, fc));
  }
}
