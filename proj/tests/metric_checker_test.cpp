#include <gtest/gtest.h>

#include <map>

#include "test_util.hpp"
#include "trihole/cut_checker.hpp"
#include "trihole/error.hpp"
#include "trihole/generator.hpp"
#include "trihole/metric_checker.hpp"
#include "trihole/oracle.hpp"
#include "trihole/reduction.hpp"

namespace trihole {
namespace {

using testing::add_demand;
using testing::theta;

struct Checked {
  Instance inst;
  DualGraph dual;
  DistanceTable dist;
  std::vector<SeparatedDemandTable> sep;

  explicit Checked(Instance i) : inst(std::move(i)), dual(build_dual(inst)), dist(dual) {
    sep = separated_demand_tables(inst, dual);
  }
  Checked(const Checked&) = delete;
};

int pos(const Checked& c, int h, int e) { return c.dual.boundaries[h].edge_position[e]; }

// A = ((e1,e1,e2,e2), (e2,e2,e3,e3), (e3,e3,e1,e1)) on the theta graph.
QuadrupleTriple theta_triple(const Checked& c) {
  QuadrupleTriple q;
  q.pos[0] = {pos(c, 0, 0), pos(c, 0, 0), pos(c, 0, 1), pos(c, 0, 1)};
  q.pos[1] = {pos(c, 1, 1), pos(c, 1, 1), pos(c, 1, 2), pos(c, 1, 2)};
  q.pos[2] = {pos(c, 2, 2), pos(c, 2, 2), pos(c, 2, 0), pos(c, 2, 0)};
  return q;
}

// Minimum over all perfect matchings of the twelve terminals with no pair
// inside one hole, by Floyd distances.
ExtInt zeta_brute(const Checked& c, const QuadrupleTriple& q) {
  const auto ref = testing::dual_distances(c.dual);
  std::vector<std::pair<int, int>> slots;
  for (int h = 0; h < 3; ++h)
    for (int k = 0; k < 4; ++k) slots.push_back({h, c.dual.terminals[h][q.pos[h][k]]});
  std::vector<char> used(12, 0);
  ExtInt best = ExtInt::infinity();
  auto rec = [&](auto&& self, ExtInt acc) -> void {
    int first = -1;
    for (int i = 0; i < 12 && first < 0; ++i)
      if (!used[i]) first = i;
    if (first < 0) {
      best = min(best, acc);
      return;
    }
    used[first] = 1;
    for (int j = first + 1; j < 12; ++j) {
      if (used[j] || slots[j].first == slots[first].first) continue;
      used[j] = 1;
      self(self, acc + ref[slots[first].second][slots[j].second]);
      used[j] = 0;
    }
    used[first] = 0;
  };
  rec(rec, ExtInt(0));
  return best;
}

std::vector<Instance> directly_checkable_instances(int count, int n, GenTarget target,
                                                  int hole_max = 5) {
  std::vector<Instance> out;
  for (int s = 1; s <= count; ++s) {
    GenParams p;
    p.seed = s;
    p.n = n;
    p.demands = 4;
    p.target = target;
    p.hole_max = hole_max;
    p.outer_size = std::min(4, hole_max);
    Instance inst = generate(p);
    if (directly_checkable(inst)) out.push_back(std::move(inst));
  }
  return out;
}

QuadrupleTriple random_triple(const DistanceTable& dist, std::uint64_t seed) {
  QuadrupleTriple q;
  for (int h = 0; h < 3; ++h) {
    const int L = dist.boundary_size(h);
    std::array<int, 4> b{};
    for (auto& x : b) {
      seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
      x = static_cast<int>((seed >> 33) % L);
    }
    std::sort(b.begin(), b.end());
    q.pos[h] = b;
  }
  return q;
}

TEST(QuadDemand, Theta) {
  const Checked c(theta({1, 1, 2}, 2));
  const std::array<int, 4> b = {pos(c, 0, 0), pos(c, 0, 0), pos(c, 0, 1), pos(c, 0, 1)};
  EXPECT_EQ(quad_demand(c.sep[0], b), 4);
  EXPECT_EQ(quad_demand(c.sep[0], {0, 0, 0, 0}), 0);
}

TEST(QuadDemand, EightCycleSegments) {
  Instance c8 = testing::cycle(8, std::vector<std::int64_t>(8, 2), true, true);
  add_demand(c8, 1, 3, 1, 5);
  const DualGraph dual = build_dual(c8);
  const SeparatedDemandTable sep(c8, dual.boundaries[0]);
  auto p = [&](int e) { return dual.boundaries[0].edge_position[e]; };
  // Segments between edges 0|2|4|6: {1,2}, {3,4}, {5,6}, {7,0}.
  EXPECT_EQ(quad_demand(sep, {p(0), p(2), p(4), p(6)}), 5);
  Instance opposite = testing::cycle(8, std::vector<std::int64_t>(8, 2), true, true);
  add_demand(opposite, 1, 5, 1, 5);
  const SeparatedDemandTable sep2(opposite, build_dual(opposite).boundaries[0]);
  EXPECT_EQ(quad_demand(sep2, {p(0), p(2), p(4), p(6)}), 10);
  EXPECT_EQ(quad_demand(sep2, {p(0), p(0), p(0), p(0)}), 0);
}

TEST(QuadDemand, RejectsOutOfOrder) {
  Instance c8 = testing::cycle(8, std::vector<std::int64_t>(8, 2), true, true);
  const SeparatedDemandTable sep(c8, build_dual(c8).boundaries[0]);
  EXPECT_THROW(quad_demand(sep, {0, 4, 2, 6}), Error);
  EXPECT_THROW(quad_demand(sep, {0, 1, 2, 8}), Error);
}

TEST(Zeta, Theta) {
  const Checked c(theta({1, 1, 2}, 2));
  const ZetaResult z = zeta(c.dist, theta_triple(c));
  EXPECT_EQ(z.value, ExtInt(8));
  EXPECT_EQ(z.matching.size(), 6u);
}

TEST(Zeta, ZeroCapacities) {
  for (Instance inst : directly_checkable_instances(10, 8, GenTarget::kAny)) {
    for (auto& x : inst.capacity) x = 0;
    const Checked c(std::move(inst));
    for (std::uint64_t s = 1; s <= 5; ++s) {
      // Terminals whose dual edge ends at another hole stay unreachable.
      const QuadrupleTriple q = random_triple(c.dist, s);
      const ExtInt z = zeta(c.dist, q).value;
      EXPECT_TRUE(z.is_infinite() || z == ExtInt(0));
      EXPECT_EQ(z, zeta_brute(c, q));
    }
  }
}

TEST(Zeta, MatchesMatchingEnumeration) {
  for (Instance inst : directly_checkable_instances(12, 8, GenTarget::kAny)) {
    const Checked c(std::move(inst));
    for (std::uint64_t s = 1; s <= 8; ++s) {
      const QuadrupleTriple q = random_triple(c.dist, s);
      EXPECT_EQ(zeta(c.dist, q).value, zeta_brute(c, q));
    }
  }
}

TEST(Zeta, TwoPathsPerHolePair) {
  for (Instance inst : directly_checkable_instances(12, 8, GenTarget::kAny)) {
    const Checked c(std::move(inst));
    for (std::uint64_t s = 1; s <= 8; ++s) {
      const QuadrupleTriple q = random_triple(c.dist, s);
      const ZetaResult z = zeta(c.dist, q);
      if (z.value.is_infinite()) continue;
      ASSERT_EQ(z.matching.size(), 6u);
      std::map<std::pair<int, int>, int> per_pair;
      std::map<std::pair<int, int>, int> ends, expected;
      for (const auto& [a, b] : z.matching) {
        ASSERT_NE(a.first, b.first);
        ++per_pair[{std::min(a.first, b.first), std::max(a.first, b.first)}];
        ++ends[a];
        ++ends[b];
      }
      for (int h = 0; h < 3; ++h)
        for (int k = 0; k < 4; ++k) ++expected[{h, q.pos[h][k]}];
      EXPECT_EQ(ends, expected);
      for (const auto& [k, v] : per_pair) EXPECT_EQ(v, 2);
    }
  }
}

TEST(ExcessTilde, Theta) {
  const Checked ok(theta({1, 1, 2}, 2));
  EXPECT_EQ(excess_tilde(ok.dist, ok.sep, theta_triple(ok)), ExtInt(4));
  const Checked bad(theta({1, 1, 1}, 5));
  EXPECT_EQ(excess_tilde(bad.dist, bad.sep, theta_triple(bad)), ExtInt(-4));
}

TEST(ExcessTilde, ZeroDemandsGiveZeta) {
  GenParams p;
  p.demands = 0;
  const Checked c(generate(p));
  for (std::uint64_t s = 1; s <= 10; ++s) {
    const QuadrupleTriple q = random_triple(c.dist, s);
    EXPECT_EQ(excess_tilde(c.dist, c.sep, q), zeta(c.dist, q).value);
  }
}

TEST(ExcessTilde, RotationInvariant) {
  for (Instance inst : directly_checkable_instances(10, 8, GenTarget::kAny)) {
    const Checked c(std::move(inst));
    for (std::uint64_t s = 1; s <= 6; ++s) {
      const QuadrupleTriple q = random_triple(c.dist, s);
      const ExtInt base = excess_tilde(c.dist, c.sep, q);
      for (int h = 0; h < 3; ++h) {
        QuadrupleTriple r = q;
        std::rotate(r.pos[h].begin(), r.pos[h].begin() + 1, r.pos[h].end());
        EXPECT_EQ(excess_tilde(c.dist, c.sep, r), base);
      }
    }
  }
}

TEST(MuHat, Theta) {
  const ExcessReport ok = check_excess(theta({1, 1, 2}, 2));
  EXPECT_TRUE(ok.metric_computed);
  EXPECT_EQ(ok.mu_hat, ExtInt(4));
  EXPECT_EQ(check_excess(theta({1, 1, 1}, 5)).mu_hat, ExtInt(-4));
}

TEST(MuHat, MatchesScan) {
  // The scan is cubic in L^4; keep boundaries short.
  for (Instance inst : directly_checkable_instances(5, 5, GenTarget::kAny, 3)) {
    const Checked c(std::move(inst));
    const MetricCertificate m = mu_hat(c.inst, c.dual, c.dist, c.sep);
    EXPECT_EQ(m.value, mu_hat_scan(c.dist, c.sep));
    EXPECT_TRUE(m.value.is_infinite() || m.value.value() % 2 == 0);
    if (m.value.is_finite()) EXPECT_EQ(m.value, m.zeta - m.demand);
  }
}

TEST(MuHat, ThreadCountDoesNotMatter) {
  for (Instance inst : directly_checkable_instances(6, 9, GenTarget::kAny)) {
    const Checked c(std::move(inst));
    MetricOptions two;
    two.threads = 3;
    const MetricCertificate a = mu_hat(c.inst, c.dual, c.dist, c.sep);
    const MetricCertificate b = mu_hat(c.inst, c.dual, c.dist, c.sep, two);
    EXPECT_EQ(a.value, b.value);
    EXPECT_EQ(a.quads, b.quads);
  }
}

TEST(MuHat, SolvableIsNonnegative) {
  int solvable = 0;
  for (const Instance& inst : directly_checkable_instances(30, 7, GenTarget::kAny)) {
    if (!oracle_solvable(inst)) continue;
    ++solvable;
    EXPECT_FALSE(check_excess(inst).mu_hat < ExtInt(0));
  }
  EXPECT_GT(solvable, 0);
}

TEST(MuHat, SandwichedByOracle) {
  for (const Instance& inst : directly_checkable_instances(20, 7, GenTarget::kAny)) {
    const ExtInt m = check_excess(inst).mu_hat;
    EXPECT_FALSE(m < oracle_metric_min(inst, MetricFilter::kAll).value);
    EXPECT_FALSE(oracle_metric_min(inst, MetricFilter::kRegular).value < m);
  }
}

TEST(MuHat, GadgetViolatesMetricOnly) {
  for (int s = 1; s <= 5; ++s) {
    GenParams p;
    p.seed = s;
    p.n = 8;
    p.target = GenTarget::kMetricViolating;
    const Instance inst = generate(p);
    const ExcessReport r = check_excess(inst);
    EXPECT_FALSE(r.cut_minimum() < ExtInt(0));
    EXPECT_LT(r.mu_hat, ExtInt(0));
    EXPECT_EQ(r.mu_hat, oracle_metric_min(inst, MetricFilter::kSemiRegular).value);
  }
}

TEST(MetricProperties, RegularAgreeableBound) {
  int checked = 0;
  for (Instance inst : directly_checkable_instances(15, 7, GenTarget::kAny)) {
    const Checked c(std::move(inst));
    for (const auto& sigma : oracle_regular_metrics(c.inst)) {
      const auto q = testing::agreeable_quadruples(c.inst, c.dual, sigma);
      if (!q) continue;
      ++checked;
      std::int64_t d = 0;
      for (int h = 0; h < 3; ++h) d += quad_demand(c.sep[h], q->pos[h]);
      EXPECT_EQ(d, metric_demand(c.inst, sigma));
      EXPECT_FALSE(ExtInt(metric_capacity(c.inst, sigma)) < zeta(c.dist, *q).value);
    }
  }
  EXPECT_GT(checked, 0);
}

}  // namespace
}  // namespace trihole
