#include "minkarr/generators.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "minkarr/cover.hpp"
#include "support/oracles.hpp"

namespace minkarr {
namespace {

TEST(PentagonTight, HypothesisRatioAndStrictness) {
  const Instance inst = gen_pentagon_tight();
  EXPECT_TRUE(check_hypothesis(inst).all_satisfied);
  EXPECT_EQ(global_ratio(inst), 0.2);
  EXPECT_TRUE(strictness_violations(inst.red_family()).empty());

  // 2 sin 36 deg, evaluated independently of the generator's cos/sin.
  const double side = 1.1755705045849463;
  EXPECT_NEAR(2 * std::sin(std::numbers::pi / 5), side, 1e-15);
  for (std::size_t i = 0; i < 5; ++i) {
    const Point& a = inst.red()[i].center();
    const Point& b = inst.red()[(i + 1) % 5].center();
    EXPECT_NEAR(oracle::euclid({a[0] - b[0], a[1] - b[1]}), side, 1e-12);
    EXPECT_GT(side, TolerancePolicy{}.inflate(inst.red()[i].ratio()));
  }
}

TEST(HypercubeTight, SmallDimensions) {
  const Instance one = gen_hypercube_tight(1);
  ASSERT_EQ(one.red().size(), 2u);
  EXPECT_EQ(one.red()[0].center(), Point{-1});
  EXPECT_EQ(one.red()[1].center(), Point{1});
  EXPECT_EQ(one.red()[0].ratio(), kTightInflation);
  EXPECT_EQ(one.blue(), std::vector<Point>{Point{0}});
  EXPECT_EQ(global_ratio(one), 0.5);

  EXPECT_EQ(depth(gen_hypercube_tight(2).red_family(), Point{0, 0}).depth, 4u);
  EXPECT_EQ(global_ratio(gen_hypercube_tight(3)), 0.125);
}

TEST(HypercubeTight, PairwiseDistanceTwoAndStrict) {
  const Instance inst = gen_hypercube_tight(4);
  const Family f = inst.red_family();
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = i + 1; j < f.size(); ++j) {
      EXPECT_EQ(gauge(inst.body(), f[i].center() - f[j].center()), 2.0);
    }
  }
  EXPECT_TRUE(strictness_violations(f).empty());
  EXPECT_TRUE(check_hypothesis(inst).all_satisfied);
}

TEST(HypercubeTight, RangeChecked) {
  EXPECT_THROW(gen_hypercube_tight(0), std::invalid_argument);
  EXPECT_THROW(gen_hypercube_tight(11), std::invalid_argument);
}

TEST(TightGenerators, VerifyWithDefaultBound) {
  std::vector<Instance> tight{gen_pentagon_tight()};
  for (std::size_t d = 1; d <= 5; ++d) tight.push_back(gen_hypercube_tight(d));
  for (const Instance& inst : tight) {
    const std::size_t m = default_depth_bound(inst.body());
    const Certificate c = make_certificate(inst, m);
    EXPECT_TRUE(verify_certificate(inst, c).ok);
    EXPECT_EQ(global_ratio(inst), inst.lambda() / static_cast<double>(m));
    EXPECT_EQ(c.max_blue_depth, m);
  }
}

// Largest shift s such that the unit disk centered at (s, 0) holds both
// endpoints of I, found by bisection on the raw distance.
double disk_shift_limit(const Segment& blue_segment) {
  auto holds = [&](double s) {
    for (const Point& p : {blue_segment.a, blue_segment.b}) {
      if (std::hypot(p[0] - s, p[1]) > 1.0) return false;
    }
    return true;
  };
  double lo = 0;
  double hi = 2;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (holds(mid) ? lo : hi) = mid;
  }
  return lo;
}

TEST(Counterexample, DiskSegmentsMatchBisectionOracle) {
  const Counterexample cx = gen_counterexample(NormBody::euclidean(2), 10, 0.01, 2000);
  // I: middle half of the chord at height 1/2, i.e. x in [-sqrt3/4, sqrt3/4].
  EXPECT_NEAR(cx.blue_segment.a[1], 0.5, 1e-15);
  EXPECT_NEAR(cx.blue_segment.b[0] - cx.blue_segment.a[0], std::sqrt(3.0) / 2, 1e-15);
  // J lies on the tangent line y = 1 and spans every admissible shift.
  const double limit = disk_shift_limit(cx.blue_segment);
  EXPECT_NEAR(limit, 0.4330127018922193, 1e-12);
  EXPECT_NEAR(cx.red_segment.a[0], -limit, 1e-12);
  EXPECT_NEAR(cx.red_segment.b[0], limit, 1e-12);
  EXPECT_EQ(cx.red_segment.a[1], 1.0);
  EXPECT_EQ(cx.tangency, (Point{0, 1}));
}

void expect_witness_property(const Counterexample& cx) {
  const Instance& inst = cx.instance;
  ASSERT_EQ(cx.witnesses.size(), inst.red().size());
  for (std::size_t i = 0; i < cx.witnesses.size(); ++i) {
    const MemberCounts c = count_points(inst, cx.witnesses[i]);
    EXPECT_EQ(c.red_count, 1u) << "witness " << i;
    EXPECT_TRUE(contains(inst.body(), cx.witnesses[i], inst.red()[i].center()));
    EXPECT_GE(static_cast<double>(c.blue_count), inst.lambda() * c.red_count);
    EXPECT_EQ(cx.witnesses[i].ratio(), 1.0);
  }
}

TEST(Counterexample, DiskWitnesses) {
  const Counterexample cx = gen_counterexample(NormBody::euclidean(2), 10, 0.01, 2000);
  EXPECT_EQ(cx.instance.blue().size(), 10u);
  EXPECT_EQ(cx.instance.red().size(), 2000u);
  EXPECT_DOUBLE_EQ(global_ratio(cx.instance), 0.005);
  expect_witness_property(cx);
}

TEST(Counterexample, PolygonAndSquareWitnesses) {
  std::vector<Point> hex;
  for (int k = 0; k < 6; ++k) {
    const double a = 0.2 + std::numbers::pi * k / 3;
    hex.push_back({2 * std::cos(a), std::sin(a)});
  }
  for (const NormBody& body : {NormBody::polygon(hex), NormBody::linf(2)}) {
    const Counterexample cx = gen_counterexample(body, 2.5, 0.1, 300);
    EXPECT_EQ(cx.instance.blue().size(), 3u);
    expect_witness_property(cx);
  }
}

TEST(Counterexample, SingleRed) {
  const Counterexample cx = gen_counterexample(NormBody::euclidean(2), 1, 2.0, 1);
  EXPECT_EQ(cx.instance.blue().size(), 1u);
  EXPECT_EQ(cx.instance.red().size(), 1u);
  expect_witness_property(cx);
}

TEST(Counterexample, CenteredDisksDoNotSatisfyHypothesis) {
  // The red-centered unit disks see hundreds of reds and only ten blues.
  const Counterexample cx = gen_counterexample(NormBody::euclidean(2), 10, 0.01, 2000);
  EXPECT_FALSE(check_hypothesis(cx.instance).all_satisfied);
}

TEST(Counterexample, Errors) {
  EXPECT_THROW(gen_counterexample(NormBody::euclidean(2), 10, 0.01, 1000), std::invalid_argument);
  EXPECT_THROW(gen_counterexample(NormBody::euclidean(3), 1, 1, 10), std::invalid_argument);
  EXPECT_THROW(gen_counterexample(NormBody::euclidean(2), 0, 1, 10), std::invalid_argument);
  // Neighbouring reds along J closer than the tolerance can resolve.
  EXPECT_THROW(gen_counterexample(NormBody::euclidean(2), 1, 1, 200000), std::invalid_argument);
}

TEST(RandomGenerator, SingleRedGetsCeilLambdaBlue) {
  RandomSpec spec;
  spec.seed = 1;
  spec.lambda = 2.5;
  const Instance inst = gen_random(spec);
  ASSERT_EQ(inst.red().size(), 1u);
  ASSERT_EQ(inst.blue().size(), 3u);
  for (const Point& b : inst.blue()) EXPECT_EQ(b, inst.red()[0].center());
}

TEST(RandomGenerator, HundredRedsSatisfyHypothesis) {
  RandomSpec spec;
  spec.seed = 42;
  spec.n_red = 100;
  EXPECT_TRUE(check_hypothesis(gen_random(spec)).all_satisfied);
}

TEST(RandomGenerator, DeterministicInSeed) {
  RandomSpec spec;
  spec.seed = 42;
  spec.n_red = 30;
  EXPECT_EQ(gen_random(spec), gen_random(spec));
  RandomSpec other = spec;
  other.seed = 43;
  EXPECT_FALSE(gen_random(spec) == gen_random(other));
}

TEST(RandomGenerator, PinnedFirstDraw) {
  // Guards the platform-independent sampling path.
  RandomSpec spec;
  spec.seed = 5489;
  spec.dim = 1;
  spec.box_side = 1.0;
  const Instance inst = gen_random(spec);
  const std::uint64_t first = 14514284786278117030ull;  // mt19937_64 default-seed first output
  EXPECT_EQ(inst.red()[0].center()[0], static_cast<double>(first >> 11) * 0x1.0p-53);
}

TEST(RandomGenerator, SatisfierAlwaysSucceeds) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    RandomSpec spec;
    spec.seed = seed;
    spec.n_red = 1 + seed % 40;
    spec.dim = 1 + seed % 3;
    spec.kind = seed % 3 == 0 ? NormKind::Linf : NormKind::Euclidean;
    spec.lambda = 0.3 + static_cast<double>(seed % 7) * 0.45;
    spec.box_side = 3.0 + static_cast<double>(seed % 5);
    EXPECT_TRUE(check_hypothesis(gen_random(spec)).all_satisfied) << "seed " << seed;
  }
}

TEST(RandomGenerator, PolygonBody) {
  RandomSpec spec;
  spec.seed = 3;
  spec.n_red = 20;
  spec.kind = NormKind::Polygon;
  spec.polygon_vertices = {{1, -1}, {1, 1}, {-1, 1}, {-1, -1}};
  EXPECT_TRUE(check_hypothesis(gen_random(spec)).all_satisfied);
}

TEST(RandomSpec, Validation) {
  RandomSpec spec;
  spec.n_red = 0;
  EXPECT_THROW(spec.validate(), std::invalid_argument);
  spec = {};
  spec.radius_lo = 3;
  spec.radius_hi = 2;
  EXPECT_THROW(spec.validate(), std::invalid_argument);
  spec = {};
  spec.kind = NormKind::Polygon;
  spec.dim = 3;
  EXPECT_THROW(spec.validate(), std::invalid_argument);
}

}  // namespace
}  // namespace minkarr
