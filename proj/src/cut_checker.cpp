#include "trihole/cut_checker.hpp"

#include <sstream>

#include "terminal_matrix.hpp"
#include "trihole/error.hpp"

namespace trihole {

using detail::add;
using detail::kInf;
using detail::TerminalMatrix;
using detail::to_ext;

SeparatedDemandTable::SeparatedDemandTable(const Instance& inst, const BoundaryCycle& cycle)
    : size_(cycle.size()) {
  const int L = size_;
  // W[a][b] = total weight of pairs whose edge interval [p, q) holds a and b.
  std::vector<std::int64_t> w((L + 1) * (L + 1), 0);
  auto at = [&](int a, int b) -> std::int64_t& { return w[a * (L + 1) + b]; };
  for (const Demand& d : inst.demands) {
    if (d.hole != cycle.hole || d.value == 0) continue;
    int p = cycle.vertex_position[d.s], q = cycle.vertex_position[d.t];
    if (p < 0 || q < 0)
      throw_invalid("demand endpoint not on a simple stretch of the boundary of hole " +
                    std::to_string(cycle.hole));
    if (p > q) std::swap(p, q);
    if (p == q) continue;
    at(p, p) += d.value;
    at(p, q) -= d.value;
    at(q, p) -= d.value;
    at(q, q) += d.value;
  }
  for (int a = 0; a <= L; ++a)
    for (int b = 0; b <= L; ++b) {
      if (a > 0) at(a, b) += at(a - 1, b);
      if (b > 0) at(a, b) += at(a, b - 1);
      if (a > 0 && b > 0) at(a, b) -= at(a - 1, b - 1);
    }
  table_.assign(L * L, 0);
  for (int a = 0; a < L; ++a)
    for (int b = 0; b < L; ++b) table_[a * L + b] = at(a, a) + at(b, b) - 2 * at(a, b);
}

std::vector<SeparatedDemandTable> separated_demand_tables(const Instance& inst,
                                                          const DualGraph& dual) {
  std::vector<SeparatedDemandTable> out;
  for (const BoundaryCycle& bc : dual.boundaries) out.emplace_back(inst, bc);
  return out;
}

std::int64_t separated_demand(const Instance& inst, int label, int e, int g) {
  const BoundaryCycle bc = hole_boundary(inst, label);
  const int a = bc.edge_position[e], b = bc.edge_position[g];
  if (a < 0 || b < 0)
    throw_invalid("edge not on the boundary of hole " + std::to_string(label));
  return SeparatedDemandTable(inst, bc)(a, b);
}

namespace {

HoleEdgePair pair_of(const Instance& inst, const DualGraph& dual, int h, int a, int b) {
  const auto& edges = dual.boundaries[h].edges;
  return {inst.holes[h].label, inst.g().edge_label(edges[a]), inst.g().edge_label(edges[b])};
}

}  // namespace

CutCertificate mu1(const Instance& inst, const DualGraph& dual, const DistanceTable& dist,
                   const std::vector<SeparatedDemandTable>& sep) {
  CutCertificate best;
  best.type = 1;
  best.exact = true;
  for (int h = 0; h < dual.hole_count(); ++h) {
    const int L = dual.boundaries[h].size();
    for (int a = 0; a < L; ++a)
      for (int b = a + 1; b < L; ++b) {
        const ExtInt v = dist.between(h, a, h, b) - sep[h](a, b);
        if (v < best.value) {
          best.value = v;
          best.pairs = {pair_of(inst, dual, h, a, b)};
        }
      }
  }
  return best;
}

CutCertificate nu2(const Instance& inst, const DualGraph& dual, const DistanceTable& dist,
                   const std::vector<SeparatedDemandTable>& sep) {
  const TerminalMatrix tm(dist);
  CutCertificate best;
  best.type = 2;
  std::int64_t best_v = kInf;
  const int k = dual.hole_count();
  for (int h1 = 0; h1 < k; ++h1)
    for (int h2 = h1 + 1; h2 < k; ++h2) {
      const int L1 = dual.boundaries[h1].size(), L2 = dual.boundaries[h2].size();
      for (int a = 0; a < L1; ++a)
        for (int b = a + 1; b < L1; ++b) {
          const std::int64_t* ra = tm.row(h1, a, h2);
          const std::int64_t* rb = tm.row(h1, b, h2);
          const std::int64_t d1 = sep[h1](a, b);
          for (int a2 = 0; a2 < L2; ++a2)
            for (int b2 = a2 + 1; b2 < L2; ++b2) {
              const std::int64_t c = std::min(add(ra[a2], rb[b2]), add(ra[b2], rb[a2]));
              if (c == kInf) continue;
              const std::int64_t v = c - d1 - sep[h2](a2, b2);
              if (v < best_v) {
                best_v = v;
                best.pairs = {pair_of(inst, dual, h1, a, b), pair_of(inst, dual, h2, a2, b2)};
              }
            }
        }
    }
  best.value = to_ext(best_v);
  return best;
}

CutCertificate nu3(const Instance& inst, const DualGraph& dual, const DistanceTable& dist,
                   const std::vector<SeparatedDemandTable>& sep) {
  CutCertificate best;
  best.type = 3;
  if (dual.hole_count() != 3) return best;
  const TerminalMatrix tm(dist);
  const int L0 = dual.boundaries[0].size(), L1 = dual.boundaries[1].size(),
            L2 = dual.boundaries[2].size();
  // p_i leads to hole i+1, q_i to hole i-1; paths (p0,q1), (p1,q2), (p2,q0).
  std::int64_t best_v = kInf;
  std::array<int, 6> arg{};
  std::vector<std::int64_t> f(L1);
  std::vector<std::pair<int, int>> f_arg(L1);
  for (int q0 = 0; q0 < L0; ++q0) {
    for (int p1 = 0; p1 < L1; ++p1) {
      f[p1] = kInf;
      const std::int64_t* r1 = tm.row(1, p1, 2);
      for (int p2 = 0; p2 < L2; ++p2) {
        const std::int64_t back = tm(2, p2, 0, q0);
        if (back == kInf) continue;
        for (int q2 = 0; q2 < L2; ++q2) {
          if (q2 == p2 || r1[q2] == kInf) continue;
          const std::int64_t v = r1[q2] + back - sep[2](p2, q2);
          if (v < f[p1]) {
            f[p1] = v;
            f_arg[p1] = {p2, q2};
          }
        }
      }
    }
    for (int p0 = 0; p0 < L0; ++p0) {
      if (p0 == q0) continue;
      const std::int64_t* r0 = tm.row(0, p0, 1);
      for (int q1 = 0; q1 < L1; ++q1) {
        if (r0[q1] == kInf) continue;
        for (int p1 = 0; p1 < L1; ++p1) {
          if (p1 == q1 || f[p1] == kInf) continue;
          const std::int64_t v = r0[q1] - sep[1](p1, q1) + f[p1] - sep[0](p0, q0);
          if (v < best_v) {
            best_v = v;
            arg = {p0, q0, p1, q1, f_arg[p1].first, f_arg[p1].second};
          }
        }
      }
    }
  }
  best.value = to_ext(best_v);
  if (best_v != kInf)
    best.pairs = {pair_of(inst, dual, 0, arg[0], arg[1]), pair_of(inst, dual, 1, arg[2], arg[3]),
                  pair_of(inst, dual, 2, arg[4], arg[5])};
  return best;
}

ExcessReport min_cut_excess(const Instance& inst) {
  const DualGraph dual = build_dual(inst);
  const DistanceTable dist(dual);
  const auto sep = separated_demand_tables(inst, dual);
  ExcessReport r;
  r.cut1 = mu1(inst, dual, dist, sep);
  r.cut2 = nu2(inst, dual, dist, sep);
  r.cut3 = nu3(inst, dual, dist, sep);
  r.mu1 = r.cut1.value;
  r.nu2 = r.cut2.value;
  r.nu3 = r.cut3.value;
  return r;
}

std::string to_text(const CutCertificate& c) {
  std::ostringstream os;
  os << "cut type " << c.type << " value " << c.value.to_string()
     << (c.exact ? " exact" : " bound");
  for (const HoleEdgePair& p : c.pairs) os << " hole " << p.hole << " edges " << p.e << " " << p.g;
  return os.str();
}

std::string to_text(const MetricCertificate& m) {
  std::ostringstream os;
  os << "metric value " << m.value.to_string() << " zeta " << m.zeta.to_string() << " demand "
     << m.demand;
  for (int i = 0; i < 3; ++i) {
    os << " hole " << m.holes[i] << " quad";
    for (std::int64_t e : m.quads[i]) os << " " << e;
  }
  return os.str();
}

}  // namespace trihole
