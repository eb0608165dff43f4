#include <gtest/gtest.h>

#include "test_util.hpp"
#include "trihole/error.hpp"
#include "trihole/generator.hpp"
#include "trihole/io.hpp"
#include "trihole/reduction.hpp"

namespace trihole {
namespace {

const std::string kTheta =
    "vertices 2\n"
    "edge 1 0 1 1\nedge 2 0 1 1\nedge 3 0 1 2\n"
    "rot 0 1 2 3\nrot 1 3 2 1\n"
    "outer 1 +\nhole 1 1 -\nhole 2 2 -\nhole 3 1 +\n"
    "demand 0 1 1 2\n";

std::string error_of(const std::string& text) {
  try {
    parse_instance_text(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidInput);
    return e.what();
  }
  return {};
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
  const auto at = s.find(from);
  EXPECT_NE(at, std::string::npos) << from;
  return s.replace(at, from.size(), to);
}

TEST(ParseInstance, Theta) {
  const Instance t = parse_instance_text(kTheta);
  EXPECT_EQ(t.g().vertex_count(), 2);
  EXPECT_EQ(t.g().edge_count(), 3);
  EXPECT_EQ(t.capacity, (std::vector<std::int64_t>{1, 1, 2}));
  ASSERT_EQ(t.holes.size(), 3u);
  EXPECT_EQ(t.holes[2].face, t.outer_face);
  EXPECT_TRUE(validate_instance(t).valid());
}

TEST(ParseInstance, CommentsAndBlankLines) {
  const Instance t = parse_instance_text("# theta\n\n" + replace(kTheta, "edge 2", "edge 2") +
                                         "  # trailing\n");
  EXPECT_EQ(t.g().edge_count(), 3);
}

TEST(ParseInstance, DropsZeroAndLoopDemands) {
  const Instance t = parse_instance_text(kTheta + "demand 0 1 1 0\ndemand 1 1 1 4\n");
  EXPECT_EQ(t.demands.size(), 1u);
}

TEST(ParseInstance, KeepsZeroCapacity) {
  const Instance t = parse_instance_text(replace(kTheta, "edge 3 0 1 2", "edge 3 0 1 0"));
  EXPECT_EQ(t.capacity[2], 0);
}

TEST(ParseInstance, ErrorsCarryLineNumbers) {
  EXPECT_NE(error_of(replace(kTheta, "edge 2 0 1 1", "edge 2 0 1 x")).find("line 3"),
            std::string::npos);
  EXPECT_NE(error_of(replace(kTheta, "edge 2 0 1 1", "edge 2 0 1 -1")).find("line 3"),
            std::string::npos);
  EXPECT_NE(error_of(replace(kTheta, "demand 0 1 1 2", "demand 0 1 1")).find("line 11"),
            std::string::npos);
  EXPECT_NE(error_of(kTheta + "frobnicate 1\n").find("line 12"), std::string::npos);
}

TEST(ParseInstance, StructuralErrors) {
  EXPECT_NE(error_of(replace(kTheta, "rot 1 3 2 1\n", "")).find("rot"), std::string::npos);
  // Hole 3 must be the outer face.
  EXPECT_FALSE(error_of(replace(kTheta, "hole 3 1 +", "hole 3 2 +")).empty());
  // Two holes on one face.
  EXPECT_FALSE(error_of(replace(kTheta, "hole 2 2 -", "hole 2 1 -")).empty());
  // Demand on an undeclared hole.
  EXPECT_FALSE(error_of(replace(kTheta, "hole 1 1 -\n", "")).empty());
  // Non-planar rotation.
  EXPECT_FALSE(error_of(replace(kTheta, "rot 1 3 2 1", "rot 1 1 2 3")).empty());
  // Vertex out of range.
  EXPECT_FALSE(error_of(replace(kTheta, "edge 3 0 1 2", "edge 3 0 5 2")).empty());
  EXPECT_FALSE(error_of("").empty());
}

TEST(ParseInstance, NonEulerianParsesButFailsValidation) {
  const Instance t = parse_instance_text(replace(kTheta, "demand 0 1 1 2", "demand 0 1 1 1"));
  const ValidationReport r = validate_instance(t);
  EXPECT_TRUE(r.valid());
  EXPECT_FALSE(r.eulerian);
  EXPECT_EQ(r.odd_vertices, (std::vector<int>{0, 1}));
}

TEST(ParseInstance, Fixtures) {
  for (const char* f : {"t0a.txt", "t0b.txt", "t0c.txt"}) {
    const Instance t = read_instance_file(std::string(TRIHOLE_FIXTURES) + "/" + f);
    EXPECT_TRUE(is_eulerian(t)) << f;
  }
  EXPECT_THROW(read_instance_file(std::string(TRIHOLE_FIXTURES) + "/missing.txt"), Error);
}

TEST(FormatInstance, FixedPoint) {
  for (int s = 1; s <= 20; ++s) {
    GenParams p;
    p.seed = s;
    p.n = 6 + s % 10;
    const std::string once = format_instance(generate(p));
    const std::string twice = format_instance(parse_instance_text(once));
    EXPECT_EQ(once, twice) << "seed " << s;
  }
  const std::string t = format_instance(parse_instance_text(kTheta));
  EXPECT_EQ(format_instance(parse_instance_text(t)), t);
}

TEST(FormatInstance, CanonicalRotation) {
  const std::string t = format_instance(parse_instance_text(kTheta));
  EXPECT_NE(t.find("rot 1 1 3 2\n"), std::string::npos) << t;
}

TEST(Solution, RoundTrip) {
  for (int s = 1; s <= 10; ++s) {
    GenParams p;
    p.seed = s;
    p.n = 10;
    p.target = GenTarget::kSolvable;
    const Instance inst = generate(p);
    const SolveResult r = solve(inst);
    ASSERT_TRUE(r.solved);
    const SolutionFile f = parse_solution_text(format_solution(r));
    EXPECT_TRUE(f.solved);
    EXPECT_EQ(f.flow.total_weight(), r.flow.total_weight());
    EXPECT_TRUE(check_admissible(inst, f.flow).admissible());
  }
}

TEST(Solution, InfeasibleRoundTrip) {
  const Instance t = parse_instance_text(replace(
      replace(kTheta, "edge 3 0 1 2", "edge 3 0 1 1"), "demand 0 1 1 2", "demand 0 1 1 5"));
  const SolveResult r = solve(t);
  ASSERT_FALSE(r.solved);
  const SolutionFile f = parse_solution_text(format_solution(r));
  EXPECT_FALSE(f.solved);
  EXPECT_EQ(f.certificate_kind, "cut");
  EXPECT_EQ(f.excess, -2);
}

TEST(Solution, RejectsMalformed) {
  EXPECT_THROW(parse_solution_text("verdict MAYBE\n"), Error);
  EXPECT_THROW(parse_solution_text("verdict SOLVED\npath 0 0 1 1\n"), Error);
  EXPECT_THROW(parse_solution_text("verdict SOLVED\npath 1 0 1\n"), Error);
}

}  // namespace
}  // namespace trihole
