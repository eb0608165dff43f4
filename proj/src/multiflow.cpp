#include "trihole/multiflow.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "trihole/error.hpp"

namespace trihole {

FlowPath FlowPath::reversed() const {
  FlowPath r = *this;
  std::reverse(r.vertices.begin(), r.vertices.end());
  std::reverse(r.edges.begin(), r.edges.end());
  return r;
}

std::int64_t Multiflow::total_weight() const {
  std::int64_t w = 0;
  for (const FlowPath& p : paths) w += p.weight;
  return w;
}

void Multiflow::append(const Multiflow& other) {
  paths.insert(paths.end(), other.paths.begin(), other.paths.end());
}

AdmissibilityReport check_admissible(const Instance& inst, const Multiflow& flow) {
  const EmbeddedGraph& g = inst.g();
  AdmissibilityReport rep;
  std::unordered_map<std::int64_t, int> vertex_of, edge_of_label;
  for (int v = 0; v < g.vertex_count(); ++v) vertex_of[g.vertex_label(v)] = v;
  for (int e = 0; e < g.edge_count(); ++e) edge_of_label[g.edge_label(e)] = e;

  std::map<std::pair<std::int64_t, std::int64_t>, PairRouting> pairs;
  for (const Demand& d : inst.demands) {
    if (d.s == d.t) continue;
    std::int64_t a = g.vertex_label(d.s), b = g.vertex_label(d.t);
    if (a > b) std::swap(a, b);
    auto& pr = pairs[{a, b}];
    pr.s = a;
    pr.t = b;
    pr.demand += d.value;
  }

  std::vector<std::int64_t> load(g.edge_count(), 0);
  for (std::size_t k = 0; k < flow.paths.size(); ++k) {
    const FlowPath& p = flow.paths[k];
    const std::string tag = "path " + std::to_string(k);
    if (p.weight <= 0) {
      rep.violations.push_back(tag + ": weight must be a positive integer");
      continue;
    }
    if (p.vertices.size() != p.edges.size() + 1 || p.edges.empty()) {
      rep.violations.push_back(tag + ": malformed vertex/edge sequence");
      continue;
    }
    bool ok = true;
    for (std::size_t i = 0; i < p.edges.size() && ok; ++i) {
      auto ie = edge_of_label.find(p.edges[i]);
      auto ia = vertex_of.find(p.vertices[i]);
      auto ib = vertex_of.find(p.vertices[i + 1]);
      if (ie == edge_of_label.end() || ia == vertex_of.end() || ib == vertex_of.end()) {
        rep.violations.push_back(tag + ": unknown vertex or edge");
        ok = false;
        break;
      }
      const EdgeEnds& ee = g.edge(ie->second);
      const bool match = (ee.u == ia->second && ee.v == ib->second) ||
                         (ee.v == ia->second && ee.u == ib->second);
      if (!match) {
        rep.violations.push_back(tag + ": edge " + std::to_string(p.edges[i]) +
                                 " does not join consecutive vertices");
        ok = false;
      }
    }
    if (!ok) continue;
    for (std::int64_t el : p.edges) load[edge_of_label[el]] += p.weight;
    std::int64_t a = p.first(), b = p.last();
    if (a > b) std::swap(a, b);
    auto it = pairs.find({a, b});
    if (it == pairs.end()) {
      rep.violations.push_back(tag + ": endpoints " + std::to_string(a) + "-" +
                               std::to_string(b) + " are not a demand pair");
      continue;
    }
    it->second.routed += p.weight;
  }

  for (int e = 0; e < g.edge_count(); ++e) {
    rep.edges.push_back({e, load[e], inst.capacity[e]});
    if (load[e] > inst.capacity[e])
      rep.violations.push_back("capacity violated on edge " +
                               std::to_string(g.edge_label(e)) + ": load " +
                               std::to_string(load[e]) + " > " +
                               std::to_string(inst.capacity[e]));
  }
  for (const auto& [key, pr] : pairs) {
    rep.pairs.push_back(pr);
    if (pr.routed != pr.demand)
      rep.violations.push_back("demand " + std::to_string(pr.s) + "-" +
                               std::to_string(pr.t) + " routed " +
                               std::to_string(pr.routed) + " of " +
                               std::to_string(pr.demand));
  }
  return rep;
}

std::string AdmissibilityReport::to_text(const Instance& inst) const {
  std::ostringstream os;
  for (const EdgeLoad& el : edges)
    os << "edge " << inst.g().edge_label(el.edge) << " load " << el.load
       << " capacity " << el.capacity << " slack " << el.capacity - el.load << "\n";
  for (const PairRouting& pr : pairs)
    os << "pair " << pr.s << " " << pr.t << " demand " << pr.demand << " routed "
       << pr.routed << "\n";
  for (const std::string& v : violations) os << "violation: " << v << "\n";
  os << "admissible " << (admissible() ? "yes" : "no") << "\n";
  return os.str();
}

SubflowSplit extract_subflow(const Multiflow& flow, std::int64_t a, std::int64_t b,
                             std::int64_t amount) {
  SubflowSplit out;
  std::int64_t need = amount;
  for (const FlowPath& p : flow.paths) {
    const bool fwd = p.first() == a && p.last() == b;
    const bool bwd = p.first() == b && p.last() == a;
    if (need == 0 || !(fwd || bwd)) {
      out.remainder.paths.push_back(p);
      continue;
    }
    FlowPath oriented = fwd ? p : p.reversed();
    const std::int64_t take = std::min(need, p.weight);
    need -= take;
    if (take < p.weight) {
      FlowPath rest = p;
      rest.weight = p.weight - take;
      out.remainder.paths.push_back(std::move(rest));
    }
    oriented.weight = take;
    out.subflow.paths.push_back(std::move(oriented));
  }
  if (need != 0)
    throw_internal("extract_subflow: shortfall of " + std::to_string(need) +
                   " units between " + std::to_string(a) + " and " + std::to_string(b));
  return out;
}

FlowPath simplify_path(const FlowPath& p) {
  FlowPath out;
  out.weight = p.weight;
  std::unordered_map<std::int64_t, std::size_t> pos;  // vertex label -> index in out
  out.vertices.push_back(p.vertices.front());
  pos[p.vertices.front()] = 0;
  for (std::size_t i = 0; i < p.edges.size(); ++i) {
    const std::int64_t next = p.vertices[i + 1];
    auto it = pos.find(next);
    if (it != pos.end()) {
      const std::size_t keep = it->second;
      for (std::size_t j = keep + 1; j < out.vertices.size(); ++j) pos.erase(out.vertices[j]);
      out.vertices.resize(keep + 1);
      out.edges.resize(keep);
      continue;
    }
    out.edges.push_back(p.edges[i]);
    out.vertices.push_back(next);
    pos[next] = out.vertices.size() - 1;
  }
  return out;
}

Multiflow concatenate_flows(const Multiflow& first, const Multiflow& second) {
  if (first.total_weight() != second.total_weight())
    throw_internal("concatenate_flows: weight mismatch");
  Multiflow out;
  std::size_t i = 0, j = 0;
  std::int64_t left_i = first.paths.empty() ? 0 : first.paths[0].weight;
  std::int64_t left_j = second.paths.empty() ? 0 : second.paths[0].weight;
  while (i < first.paths.size() && j < second.paths.size()) {
    const FlowPath& p = first.paths[i];
    const FlowPath& q = second.paths[j];
    if (p.last() != q.first()) throw_internal("concatenate_flows: endpoints do not meet");
    const std::int64_t w = std::min(left_i, left_j);
    FlowPath joined;
    joined.vertices = p.vertices;
    joined.vertices.insert(joined.vertices.end(), q.vertices.begin() + 1, q.vertices.end());
    joined.edges = p.edges;
    joined.edges.insert(joined.edges.end(), q.edges.begin(), q.edges.end());
    joined.weight = w;
    out.paths.push_back(simplify_path(joined));
    left_i -= w;
    left_j -= w;
    if (left_i == 0 && ++i < first.paths.size()) left_i = first.paths[i].weight;
    if (left_j == 0 && ++j < second.paths.size()) left_j = second.paths[j].weight;
  }
  return out;
}

Multiflow canonical_multiflow(const Multiflow& flow) {
  std::map<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>, std::int64_t> acc;
  for (const FlowPath& p0 : flow.paths) {
    if (p0.weight == 0) continue;
    FlowPath p = p0;
    // Orient from the smaller endpoint label.
    if (p.first() > p.last() ||
        (p.first() == p.last() && p.vertices > p.reversed().vertices))
      p = p.reversed();
    acc[{p.vertices, p.edges}] += p.weight;
  }
  Multiflow out;
  for (const auto& [key, w] : acc) out.paths.push_back({key.first, key.second, w});
  return out;
}

}  // namespace trihole
