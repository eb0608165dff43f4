#include "trihole/instance.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "trihole/error.hpp"

namespace trihole {

const Hole* Instance::find_hole(int label) const {
  for (const Hole& h : holes)
    if (h.label == label) return &h;
  return nullptr;
}

int Instance::hole_index_of_face(int face) const {
  for (int i = 0; i < static_cast<int>(holes.size()); ++i)
    if (holes[i].face == face) return i;
  return -1;
}

BoundaryCycle hole_boundary(const Instance& inst, int hole_label) {
  const Hole* h = inst.find_hole(hole_label);
  if (!h) throw_invalid("no hole with label " + std::to_string(hole_label));
  const EmbeddedGraph& g = inst.g();
  BoundaryCycle bc;
  bc.hole = hole_label;
  bc.face = h->face;
  bc.edge_position.assign(g.edge_count(), -1);
  bc.vertex_position.assign(g.vertex_count(), -1);
  bc.on_boundary.assign(g.vertex_count(), 0);
  std::vector<int> seen(g.vertex_count(), 0);
  const auto darts = g.face(h->face);
  for (int k = 0; k < static_cast<int>(darts.size()); ++k) {
    const Dart d = darts[k];
    const int v = g.tail(d);
    const int e = edge_of(d);
    if (bc.edge_position[e] != -1)
      throw_invalid("boundary of hole " + std::to_string(hole_label) +
                    " passes edge " + std::to_string(g.edge_label(e)) +
                    " twice (isthmus)");
    bc.vertices.push_back(v);
    bc.edges.push_back(e);
    bc.edge_position[e] = k;
    bc.on_boundary[v] = 1;
    bc.vertex_position[v] = seen[v]++ ? -1 : k;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (seen[v] > 1) bc.vertex_position[v] = -1;
  return bc;
}

std::vector<int> odd_parity_vertices(const Instance& inst) {
  const EmbeddedGraph& g = inst.g();
  std::vector<std::int64_t> excess(g.vertex_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    excess[g.edge(e).u] += inst.capacity[e];
    excess[g.edge(e).v] += inst.capacity[e];
  }
  for (const Demand& d : inst.demands) {
    if (d.s == d.t) continue;
    excess[d.s] -= d.value;
    excess[d.t] -= d.value;
  }
  std::vector<int> odd;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (excess[v] % 2 != 0) odd.push_back(v);
  return odd;
}

bool is_eulerian(const Instance& inst) { return odd_parity_vertices(inst).empty(); }

std::vector<Demand> canonical_demands(std::vector<Demand> demands) {
  std::map<std::tuple<int, int, int>, std::int64_t> merged;
  for (const Demand& d : demands) {
    if (d.s == d.t || d.value == 0) continue;
    merged[{d.hole, std::min(d.s, d.t), std::max(d.s, d.t)}] += d.value;
  }
  std::vector<Demand> out;
  for (const auto& [key, value] : merged) {
    if (value == 0) continue;
    const auto [hole, s, t] = key;
    out.push_back({s, t, hole, value});
  }
  return out;
}

ValidationReport validate_instance(const Instance& inst) {
  ValidationReport rep;
  const EmbeddedGraph& g = inst.g();
  if (inst.holes.size() != 3) rep.problems.push_back("instance must have exactly 3 holes");
  for (int i = 0; i < static_cast<int>(inst.holes.size()); ++i) {
    if (inst.holes[i].label != i + 1)
      rep.problems.push_back("holes must be labeled 1, 2, 3");
    for (int j = 0; j < i; ++j)
      if (inst.holes[i].face == inst.holes[j].face)
        rep.problems.push_back("holes " + std::to_string(inst.holes[j].label) + " and " +
                               std::to_string(inst.holes[i].label) + " are the same face");
  }
  if (const Hole* h3 = inst.find_hole(3); h3 && h3->face != inst.outer_face)
    rep.problems.push_back("hole 3 must be the outer face");
  for (int e = 0; e < g.edge_count(); ++e)
    if (inst.capacity[e] < 0)
      rep.problems.push_back("edge " + std::to_string(g.edge_label(e)) +
                             " has negative capacity");

  std::map<int, std::vector<char>> on_hole;
  for (const Hole& h : inst.holes) {
    std::vector<char> mark(g.vertex_count(), 0);
    for (Dart d : g.face(h.face)) mark[g.tail(d)] = 1;
    on_hole[h.label] = std::move(mark);
  }
  for (const Demand& d : inst.demands) {
    const std::string pair = std::to_string(g.vertex_label(d.s)) + "-" +
                             std::to_string(g.vertex_label(d.t));
    if (d.value < 0) rep.problems.push_back("demand " + pair + " is negative");
    auto it = on_hole.find(d.hole);
    if (it == on_hole.end()) {
      rep.problems.push_back("demand " + pair + " names unknown hole " +
                             std::to_string(d.hole));
      continue;
    }
    for (int x : {d.s, d.t})
      if (!it->second[x])
        rep.problems.push_back("demand " + pair + ": vertex " +
                               std::to_string(g.vertex_label(x)) +
                               " is not on the boundary of hole " +
                               std::to_string(d.hole));
  }
  rep.odd_vertices = odd_parity_vertices(inst);
  rep.eulerian = rep.odd_vertices.empty();
  return rep;
}

std::string ValidationReport::to_text(const Instance& inst) const {
  std::ostringstream os;
  for (const std::string& p : problems) os << "error: " << p << "\n";
  for (int v : odd_vertices)
    os << "parity: vertex " << inst.g().vertex_label(v)
       << " has odd c(delta) - d(rho)\n";
  os << "eulerian " << (eulerian ? "yes" : "no") << "\n";
  os << "valid " << (valid() ? "yes" : "no") << "\n";
  return os.str();
}

std::string to_string(const TopologyEvent& ev) {
  switch (ev.kind) {
    case TopologyEventKind::kHolesMerged:
      return "HOLES_MERGED(" + std::to_string(ev.hole_a) + "," +
             std::to_string(ev.hole_b) + ")";
    case TopologyEventKind::kHoleGrew:
      return "HOLE_GREW(" + std::to_string(ev.hole_a) + ")";
    case TopologyEventKind::kInterior:
      return "INTERIOR";
  }
  return "?";
}

EdgeDeletion delete_edge(const Instance& inst, int e) {
  const EmbeddedGraph& g = inst.g();
  if (e < 0 || e >= g.edge_count()) throw_invalid("delete_edge: edge out of range");
  if (inst.capacity[e] != 0)
    throw_invalid("delete_edge: edge " + std::to_string(g.edge_label(e)) +
                  " has positive capacity");

  const int del[] = {e};
  auto ng = std::make_shared<const EmbeddedGraph>(g.without_edges(del));
  auto map_dart = [e](Dart d) {
    const int old = edge_of(d);
    return dart_of(old < e ? old : old - 1, (d & 1) == 0);
  };
  // New face of an old face: any surviving dart of it, or -1.
  auto surviving_face = [&](int old_face) {
    for (Dart d : g.face(old_face))
      if (edge_of(d) != e) return ng->face_of(map_dart(d));
    return -1;
  };

  const auto [f1, f2] = g.faces_of_edge(e);
  const int h1 = inst.hole_index_of_face(f1);
  const int h2 = inst.hole_index_of_face(f2);

  EdgeDeletion out;
  Instance& ni = out.instance;
  ni.graph = ng;
  ni.capacity = inst.capacity;
  ni.capacity.erase(ni.capacity.begin() + e);
  ni.outer_face = surviving_face(inst.outer_face);
  if (ni.outer_face < 0) ni.outer_face = 0;

  std::map<int, int> relabel;
  for (const Hole& h : inst.holes) {
    const int nf = surviving_face(h.face);
    if (nf < 0) continue;
    bool merged = false;
    for (Hole& existing : ni.holes) {
      if (existing.face == nf) {
        relabel[h.label] = existing.label;
        merged = true;
      }
    }
    if (!merged) {
      ni.holes.push_back({h.label, nf});
      relabel[h.label] = h.label;
    }
  }
  for (Demand d : inst.demands) {
    auto it = relabel.find(d.hole);
    if (it == relabel.end()) {
      if (d.value != 0) throw_internal("delete_edge: demand on a vanished hole");
      continue;
    }
    d.hole = it->second;
    ni.demands.push_back(d);
  }

  if (h1 >= 0 && h2 >= 0 && f1 != f2) {
    const int a = inst.holes[h1].label, b = inst.holes[h2].label;
    out.event = {TopologyEventKind::kHolesMerged, std::min(a, b), std::max(a, b)};
  } else if (h1 >= 0 || h2 >= 0) {
    out.event = {TopologyEventKind::kHoleGrew, inst.holes[h1 >= 0 ? h1 : h2].label, 0};
  } else {
    out.event = {TopologyEventKind::kInterior, 0, 0};
  }
  return out;
}

}  // namespace trihole
