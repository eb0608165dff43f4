#include <gtest/gtest.h>

#include "test_util.hpp"
#include "trihole/io.hpp"
#include "trihole/normalize.hpp"
#include "trihole/oracle.hpp"
#include "trihole/reduction.hpp"

namespace trihole {
namespace {

// Two thetas joined by the bridge 4 = (1,2); demand 0-3 on the outer face.
Instance two_thetas(std::int64_t bridge, std::int64_t d) {
  return parse_instance_text(
      "vertices 4\n"
      "edge 1 0 1 1\nedge 2 0 1 1\nedge 3 0 1 1\n"
      "edge 4 1 2 " + std::to_string(bridge) + "\n"
      "edge 5 2 3 1\nedge 6 2 3 1\nedge 7 2 3 1\n"
      "rot 0 1 2 3\nrot 1 3 2 1 4\nrot 2 4 5 6 7\nrot 3 7 6 5\n"
      "outer 4 +\nhole 1 1 -\nhole 2 5 -\nhole 3 4 +\n"
      "demand 0 3 3 " + std::to_string(d) + "\n");
}

TEST(Normalize, SplitsAtCutVertices) {
  const Instance inst = two_thetas(1, 1);
  const Normalization n = normalize(inst);
  ASSERT_TRUE(n.feasible);
  ASSERT_EQ(n.blocks.size(), 3u);
  int bridges = 0;
  for (const BlockProblem& b : n.blocks) bridges += b.bridge;
  EXPECT_EQ(bridges, 1);
  ASSERT_EQ(n.chains.size(), 1u);
  EXPECT_EQ(n.chains[0].vertices, (std::vector<std::int64_t>{0, 1, 2, 3}));
  for (const BlockProblem& b : n.blocks) {
    if (b.bridge) continue;
    EXPECT_TRUE(is_eulerian(b.instance));
    for (const Hole& h : b.instance.holes) EXPECT_NO_THROW(hole_boundary(b.instance, h.label));
  }
}

TEST(Normalize, BridgeOverloadIsVertexCut) {
  const Normalization n = normalize(two_thetas(1, 3));
  ASSERT_FALSE(n.feasible);
  EXPECT_EQ(n.violated.capacity, 1);
  EXPECT_EQ(n.violated.demand, 3);
  EXPECT_EQ(n.violated.excess(), -2);
  EXPECT_EQ(n.violated.vertices, (std::vector<std::int64_t>{0, 1}));
}

TEST(Normalize, ZeroCapacitySplitsComponents) {
  const Normalization n = normalize(two_thetas(0, 1));
  ASSERT_FALSE(n.feasible);
  EXPECT_EQ(n.violated.capacity, 0);
  EXPECT_EQ(n.violated.demand, 1);
}

TEST(Normalize, GluedFlowIsAdmissible) {
  const Instance inst = two_thetas(1, 1);
  const SolveResult r = solve(inst);
  ASSERT_TRUE(r.solved);
  EXPECT_TRUE(check_admissible(inst, r.flow).admissible());
  EXPECT_TRUE(oracle_solvable(inst));
  const SolveResult bad = solve(two_thetas(1, 3));
  ASSERT_FALSE(bad.solved);
  EXPECT_EQ(bad.failure.kind, Infeasible::Kind::kVertexCut);
  EXPECT_FALSE(oracle_solvable(two_thetas(1, 3)));
}

TEST(Normalize, BlockWithoutBridgeKeepsHoles) {
  const Normalization n = normalize(testing::theta({1, 1, 2}, 2));
  ASSERT_TRUE(n.feasible);
  ASSERT_EQ(n.blocks.size(), 1u);
  EXPECT_FALSE(n.blocks[0].bridge);
  // Holes 2 and 3 carry no demand and are withdrawn.
  ASSERT_EQ(n.blocks[0].instance.holes.size(), 1u);
  EXPECT_EQ(n.blocks[0].instance.holes[0].label, 1);
}

}  // namespace
}  // namespace trihole
