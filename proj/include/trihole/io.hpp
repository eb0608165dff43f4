#pragma once

#include <iosfwd>
#include <string>

#include "trihole/instance.hpp"
#include "trihole/multiflow.hpp"
#include "trihole/reduction.hpp"

namespace trihole {

// Instance text format, one directive per line, '#' starts a comment:
//   vertices <n>
//   edge <id> <u> <v> <cap>
//   rot <v> <edge ids, clockwise>
//   outer <edge id> <+|->        face left of the edge-end (+ is u->v)
//   hole <1|2|3> <edge id> <+|->
//   demand <s> <t> <hole> <value>
// Vertices are 0..n-1 and double as labels; edge ids are the edge labels.
// Zero capacities are kept; zero demands and pairs with s = t are dropped.
// Errors are Error(kInvalidInput) carrying "line N: ...".
Instance parse_instance(std::istream& in);
Instance parse_instance_text(const std::string& text);
Instance read_instance_file(const std::string& path);

// Canonical form: edges by id, rotations starting at their smallest id,
// faces named by their smallest edge-end, demands merged and sorted.
std::string format_instance(const Instance& inst);

// Solution text format:
//   verdict SOLVED
//   path <weight> v0 e1 v1 ... vk
// or
//   verdict INFEASIBLE
//   certificate cut|metric
//   ... certificate lines ...
//   excess <value>
std::string format_solution(const SolveResult& r);
std::string format_trace(const SolveResult& r);

struct SolutionFile {
  bool solved = false;
  Multiflow flow;
  std::string certificate_kind;  // "cut" or "metric" when infeasible
  std::int64_t excess = 0;
};
SolutionFile parse_solution_text(const std::string& text);

}  // namespace trihole
