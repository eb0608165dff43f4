#include "trihole/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "trihole/error.hpp"

namespace trihole {
namespace {

constexpr std::int64_t kTotalLimit = std::int64_t{1} << 60;

struct Line {
  int number = 0;
  std::vector<std::string> tok;
};

[[noreturn]] void fail(int line, const std::string& msg) {
  throw_invalid("line " + std::to_string(line) + ": " + msg);
}

std::int64_t to_int(const Line& l, std::size_t k, const char* what) {
  if (k >= l.tok.size()) fail(l.number, std::string("missing ") + what);
  const std::string& s = l.tok[k];
  std::int64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc::result_out_of_range) fail(l.number, std::string(what) + " out of range: " + s);
  if (ec != std::errc() || p != s.data() + s.size())
    fail(l.number, std::string("bad ") + what + ": " + s);
  return v;
}

bool to_sign(const Line& l, std::size_t k) {
  if (k >= l.tok.size()) fail(l.number, "missing edge-end sign");
  if (l.tok[k] == "+") return true;
  if (l.tok[k] == "-") return false;
  fail(l.number, "edge-end sign must be + or -, got " + l.tok[k]);
}

void expect_arity(const Line& l, std::size_t n) {
  if (l.tok.size() != n)
    fail(l.number, l.tok[0] + " takes " + std::to_string(n - 1) + " fields, got " +
                       std::to_string(l.tok.size() - 1));
}

std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> out;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ss(raw);
    Line l{number, {}};
    for (std::string t; ss >> t;) l.tok.push_back(t);
    if (!l.tok.empty()) out.push_back(std::move(l));
  }
  return out;
}

// Smallest edge-end of face f, by (edge label, + before -).
std::pair<std::int64_t, bool> face_name(const EmbeddedGraph& g, int f) {
  std::optional<std::pair<std::int64_t, bool>> best;
  for (Dart d : g.face(f)) {
    const std::pair<std::int64_t, bool> cand{g.edge_label(edge_of(d)), (d & 1) == 0};
    if (!best || cand.first < best->first ||
        (cand.first == best->first && cand.second && !best->second))
      best = cand;
  }
  return *best;
}

std::string sign(bool forward) { return forward ? "+" : "-"; }

}  // namespace

Instance parse_instance(std::istream& in) {
  const std::vector<Line> lines = tokenize(in);
  std::optional<int> n;
  int vertices_line = 0;
  struct EdgeIn {
    std::int64_t id;
    std::int64_t u, v, cap;
    int line;
  };
  std::vector<EdgeIn> edges;
  std::map<std::int64_t, const Line*> rots;
  const Line* outer = nullptr;
  std::map<int, const Line*> holes;
  std::vector<const Line*> demands;

  for (const Line& l : lines) {
    const std::string& kw = l.tok[0];
    if (kw == "vertices") {
      expect_arity(l, 2);
      if (n) fail(l.number, "duplicate vertices line");
      const std::int64_t v = to_int(l, 1, "vertex count");
      if (v < 1 || v > 10'000'000) fail(l.number, "vertex count out of range");
      n = static_cast<int>(v);
      vertices_line = l.number;
      continue;
    }
    if (!n) fail(l.number, "'" + kw + "' before the vertices line");
    if (kw == "edge") {
      expect_arity(l, 5);
      EdgeIn e{to_int(l, 1, "edge id"), to_int(l, 2, "endpoint"), to_int(l, 3, "endpoint"),
               to_int(l, 4, "capacity"), l.number};
      if (e.u < 0 || e.u >= *n || e.v < 0 || e.v >= *n) fail(l.number, "endpoint out of range");
      if (e.u == e.v) fail(l.number, "self-loop on vertex " + std::to_string(e.u));
      if (e.cap < 0) fail(l.number, "negative capacity");
      edges.push_back(e);
    } else if (kw == "rot") {
      if (l.tok.size() < 2) fail(l.number, "rot needs a vertex");
      const std::int64_t v = to_int(l, 1, "vertex");
      if (v < 0 || v >= *n) fail(l.number, "vertex out of range");
      if (!rots.emplace(v, &l).second) fail(l.number, "second rot line for vertex " + l.tok[1]);
    } else if (kw == "outer") {
      expect_arity(l, 3);
      if (outer) fail(l.number, "duplicate outer line");
      outer = &l;
    } else if (kw == "hole") {
      expect_arity(l, 4);
      const std::int64_t h = to_int(l, 1, "hole index");
      if (h < 1 || h > 3) fail(l.number, "hole index must be 1, 2 or 3");
      if (!holes.emplace(static_cast<int>(h), &l).second) fail(l.number, "duplicate hole " + l.tok[1]);
    } else if (kw == "demand") {
      expect_arity(l, 5);
      demands.push_back(&l);
    } else {
      fail(l.number, "unknown directive '" + kw + "'");
    }
  }
  if (!n) throw_invalid("line 1: missing vertices line");
  if (edges.empty()) fail(vertices_line, "no edges");
  if (!outer) fail(vertices_line, "missing outer line");

  std::map<std::int64_t, int> index_of;
  std::vector<EdgeEnds> ends;
  std::vector<std::int64_t> labels;
  std::int64_t total = 0;
  for (const EdgeIn& e : edges) {
    if (!index_of.emplace(e.id, static_cast<int>(ends.size())).second)
      fail(e.line, "duplicate edge id " + std::to_string(e.id));
    ends.push_back({static_cast<int>(e.u), static_cast<int>(e.v)});
    labels.push_back(e.id);
    total += e.cap;
    if (total > kTotalLimit) fail(e.line, "total capacity exceeds 2^60");
  }
  auto edge_index = [&](const Line& l, std::size_t k) {
    const std::int64_t id = to_int(l, k, "edge id");
    const auto it = index_of.find(id);
    if (it == index_of.end()) fail(l.number, "unknown edge id " + std::to_string(id));
    return it->second;
  };

  std::vector<std::vector<Dart>> rotation(*n);
  std::vector<int> degree(*n, 0);
  for (const EdgeEnds& e : ends) {
    ++degree[e.u];
    ++degree[e.v];
  }
  for (int v = 0; v < *n; ++v) {
    const auto it = rots.find(v);
    if (it == rots.end()) {
      if (degree[v] > 0) fail(vertices_line, "vertex " + std::to_string(v) + " has no rot line");
      continue;
    }
    const Line& l = *it->second;
    for (std::size_t k = 2; k < l.tok.size(); ++k) {
      const int e = edge_index(l, k);
      if (ends[e].u != v && ends[e].v != v)
        fail(l.number, "edge " + l.tok[k] + " is not incident to vertex " + std::to_string(v));
      rotation[v].push_back(dart_of(e, ends[e].u == v));
    }
    if (static_cast<int>(rotation[v].size()) != degree[v])
      fail(l.number, "rot of vertex " + std::to_string(v) + " lists " +
                         std::to_string(rotation[v].size()) + " edge-ends, degree is " +
                         std::to_string(degree[v]));
  }

  Instance inst;
  inst.graph = std::make_shared<const EmbeddedGraph>(
      EmbeddedGraph::build(*n, std::move(ends), std::move(rotation), {}, std::move(labels)));
  const EmbeddedGraph& g = inst.g();
  for (const EdgeIn& e : edges) inst.capacity.push_back(e.cap);

  {
    const Line& l = *outer;
    inst.outer_face = g.face_of(dart_of(edge_index(l, 1), to_sign(l, 2)));
  }
  for (const auto& [h, lp] : holes) {
    const int f = g.face_of(dart_of(edge_index(*lp, 2), to_sign(*lp, 3)));
    for (const Hole& other : inst.holes)
      if (other.face == f) fail(lp->number, "holes " + std::to_string(other.label) + " and " +
                                                std::to_string(h) + " name the same face");
    if (h == 3 && f != inst.outer_face) fail(lp->number, "hole 3 must be the outer face");
    inst.holes.push_back({h, f});
  }
  std::int64_t dtotal = 0;
  for (const Line* lp : demands) {
    const Line& l = *lp;
    const std::int64_t s = to_int(l, 1, "endpoint"), t = to_int(l, 2, "endpoint");
    const std::int64_t h = to_int(l, 3, "hole index"), value = to_int(l, 4, "demand");
    if (s < 0 || s >= *n || t < 0 || t >= *n) fail(l.number, "endpoint out of range");
    if (!holes.count(static_cast<int>(h))) fail(l.number, "demand on undeclared hole " + l.tok[3]);
    if (value < 0) fail(l.number, "negative demand");
    dtotal += value;
    if (dtotal > kTotalLimit) fail(l.number, "total demand exceeds 2^60");
    inst.demands.push_back({static_cast<int>(s), static_cast<int>(t), static_cast<int>(h), value});
  }
  inst.demands = canonical_demands(std::move(inst.demands));
  return inst;
}

Instance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_invalid("cannot open " + path);
  return parse_instance(in);
}

std::string format_instance(const Instance& inst) {
  const EmbeddedGraph& g = inst.g();
  std::ostringstream out;
  out << "vertices " << g.vertex_count() << "\n";
  std::vector<int> order(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) order[e] = e;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return g.edge_label(a) < g.edge_label(b); });
  for (int e : order)
    out << "edge " << g.edge_label(e) << " " << g.edge(e).u << " " << g.edge(e).v << " "
        << inst.capacity[e] << "\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto rot = g.rotation(v);
    if (rot.empty()) continue;
    std::size_t start = 0;
    for (std::size_t k = 1; k < rot.size(); ++k)
      if (g.edge_label(edge_of(rot[k])) < g.edge_label(edge_of(rot[start]))) start = k;
    out << "rot " << v;
    for (std::size_t k = 0; k < rot.size(); ++k)
      out << " " << g.edge_label(edge_of(rot[(start + k) % rot.size()]));
    out << "\n";
  }
  const auto [oe, of] = face_name(g, inst.outer_face);
  out << "outer " << oe << " " << sign(of) << "\n";
  for (const Hole& h : inst.holes) {
    const auto [he, hf] = face_name(g, h.face);
    out << "hole " << h.label << " " << he << " " << sign(hf) << "\n";
  }
  for (const Demand& d : canonical_demands(inst.demands))
    out << "demand " << d.s << " " << d.t << " " << d.hole << " " << d.value << "\n";
  return out.str();
}

std::string format_solution(const SolveResult& r) {
  std::ostringstream out;
  if (r.solved) {
    out << "verdict SOLVED\n";
    for (const FlowPath& p : r.flow.paths) {
      out << "path " << p.weight << " " << p.vertices[0];
      for (std::size_t k = 0; k < p.edges.size(); ++k)
        out << " " << p.edges[k] << " " << p.vertices[k + 1];
      out << "\n";
    }
    return out.str();
  }
  const Infeasible& f = r.failure;
  out << "verdict INFEASIBLE\n";
  switch (f.kind) {
    case Infeasible::Kind::kVertexCut:
      out << "certificate cut\nset";
      for (std::int64_t v : f.vertex_cut.vertices) out << " " << v;
      out << "\ncapacity " << f.vertex_cut.capacity << "\ndemand " << f.vertex_cut.demand << "\n";
      break;
    case Infeasible::Kind::kCut:
      out << "certificate cut\ntype " << f.cut.type << "\n";
      for (const HoleEdgePair& p : f.cut.pairs)
        out << "pair " << p.hole << " " << p.e << " " << p.g << "\n";
      out << "bound " << (f.cut.exact ? "exact" : "lower") << "\n";
      break;
    case Infeasible::Kind::kMetric:
      out << "certificate metric\n";
      for (int i = 0; i < 3; ++i) {
        out << "quad " << f.metric.holes[i];
        for (std::int64_t b : f.metric.quads[i]) out << " " << b;
        out << "\n";
      }
      for (const auto& [a, b] : f.metric.matching)
        out << "match " << a.hole << " " << a.edge << " " << b.hole << " " << b.edge << "\n";
      out << "zeta " << f.metric.zeta.to_string() << "\ndemand " << f.metric.demand << "\n";
      break;
  }
  out << "excess " << f.excess << "\n";
  return out.str();
}

std::string format_trace(const SolveResult& r) {
  std::ostringstream out;
  for (const ReductionRecord& rec : r.trace)
    out << "reduce hole " << rec.hole << " edge " << rec.edge << " s " << rec.s << " u " << rec.u
        << " v " << rec.v << " t " << rec.t << " eps " << rec.eps << "\n";
  for (const std::string& ev : r.events) out << "event " << ev << "\n";
  out << "iterations " << r.stats.iterations << "\nchecker_rounds " << r.stats.checker_rounds
      << "\nblocks " << r.stats.blocks_solved << "\nmax_depth " << r.stats.max_depth
      << "\nzero_eps " << r.stats.zero_eps << "\n";
  return out.str();
}

SolutionFile parse_solution_text(const std::string& text) {
  std::istringstream in(text);
  const std::vector<Line> lines = tokenize(in);
  if (lines.empty() || lines[0].tok[0] != "verdict" || lines[0].tok.size() != 2)
    throw_invalid("line 1: missing verdict");
  SolutionFile sol;
  const std::string& v = lines[0].tok[1];
  if (v == "SOLVED") {
    sol.solved = true;
  } else if (v != "INFEASIBLE") {
    fail(lines[0].number, "unknown verdict " + v);
  }
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    const std::string& kw = l.tok[0];
    if (sol.solved) {
      if (kw != "path") fail(l.number, "expected a path line");
      if (l.tok.size() < 5 || l.tok.size() % 2 == 0) fail(l.number, "malformed path");
      FlowPath p;
      p.weight = to_int(l, 1, "weight");
      if (p.weight <= 0) fail(l.number, "path weight must be positive");
      for (std::size_t i = 2; i < l.tok.size(); ++i)
        ((i % 2 == 0) ? p.vertices : p.edges).push_back(to_int(l, i, "path entry"));
      sol.flow.paths.push_back(std::move(p));
    } else if (kw == "certificate") {
      expect_arity(l, 2);
      sol.certificate_kind = l.tok[1];
    } else if (kw == "excess") {
      expect_arity(l, 2);
      sol.excess = to_int(l, 1, "excess");
    }
  }
  return sol;
}

}  // namespace trihole
