#include "trihole/metric_checker.hpp"

#include <algorithm>
#include <thread>

#include "terminal_matrix.hpp"
#include "trihole/error.hpp"

namespace trihole {

using detail::add;
using detail::kInf;
using detail::TerminalMatrix;
using detail::to_ext;

bool quadruple_in_order(const std::array<int, 4>& b, int L) {
  for (int x : b)
    if (x < 0 || x >= L) return false;
  int total = 0;
  for (int k = 0; k < 3; ++k) total += ((b[k + 1] - b[k]) % L + L) % L;
  return total <= L;
}

std::int64_t quad_demand(const SeparatedDemandTable& sep, const std::array<int, 4>& b) {
  if (!quadruple_in_order(b, sep.size())) throw_invalid("quadruple entries out of boundary order");
  return sep(b[0], b[2]) + sep(b[1], b[3]);
}

namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

std::array<int, 2> complement(int k) {
  std::array<int, 2> out{};
  int n = 0;
  for (int x = 0; x < 4; ++x)
    if (x != kPairs[k][0] && x != kPairs[k][1]) out[n++] = x;
  return out;
}

}  // namespace

ZetaResult zeta(const DistanceTable& dist, const QuadrupleTriple& q) {
  TRIHOLE_CHECK(dist.hole_count() == 3, "zeta needs three holes");
  ZetaResult best;
  std::int64_t best_v = kInf;
  auto d = [&](int h, int p, int h2, int p2) {
    const ExtInt v = dist.between(h, p, h2, p2);
    return v.is_finite() ? v.value() : kInf;
  };
  for (int s0 = 0; s0 < 6; ++s0)
    for (int s1 = 0; s1 < 6; ++s1)
      for (int s2 = 0; s2 < 6; ++s2) {
        const int s[3] = {s0, s1, s2};
        std::int64_t total = 0;
        std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> m;
        for (int i = 0; i < 3 && total != kInf; ++i) {
          const int j = (i + 1) % 3;
          const int a = q.pos[i][kPairs[s[i]][0]], b = q.pos[i][kPairs[s[i]][1]];
          const auto cj = complement(s[j]);
          const int a2 = q.pos[j][cj[0]], b2 = q.pos[j][cj[1]];
          const std::int64_t straight = add(d(i, a, j, a2), d(i, b, j, b2));
          const std::int64_t crossed = add(d(i, a, j, b2), d(i, b, j, a2));
          if (straight <= crossed) {
            m.push_back({{i, a}, {j, a2}});
            m.push_back({{i, b}, {j, b2}});
          } else {
            m.push_back({{i, a}, {j, b2}});
            m.push_back({{i, b}, {j, a2}});
          }
          total = add(total, std::min(straight, crossed));
        }
        if (total < best_v) {
          best_v = total;
          best.matching = std::move(m);
        }
      }
  best.value = to_ext(best_v);
  if (best_v == kInf) best.matching.clear();
  return best;
}

ExtInt excess_tilde(const DistanceTable& dist, const std::vector<SeparatedDemandTable>& sep,
                    const QuadrupleTriple& q) {
  std::int64_t demand = 0;
  for (int i = 0; i < 3; ++i) demand += quad_demand(sep[i], q.pos[i]);
  return zeta(dist, q).value - demand;
}

namespace {

struct QuadState {
  int x;  // b1 * L + b2, leads to the next hole
  int y;  // b3 * L + b4, leads to the previous hole
  std::int64_t v;  // minus the demand term
};

std::vector<QuadState> valid_quads(const SeparatedDemandTable& sep) {
  const int L = sep.size();
  std::vector<QuadState> out;
  for (int b1 = 0; b1 < L; ++b1)
    for (int g1 = 0; g1 < L; ++g1)
      for (int g2 = 0; g2 < L && g1 + g2 <= L; ++g2)
        for (int g3 = 0; g3 < L && g1 + g2 + g3 <= L; ++g3) {
          const int b2 = (b1 + g1) % L, b3 = (b2 + g2) % L, b4 = (b3 + g3) % L;
          out.push_back({b1 * L + b2, b3 * L + b4, -(sep(b1, b3) + sep(b2, b4))});
        }
  return out;
}

// Two-path cost between (b1, b2) on hole h and (b3, b4) on hole h2, both pairings.
std::vector<std::int64_t> pair_costs(const TerminalMatrix& tm, int h, int L, int h2, int L2) {
  const int nx = L * L, ny = L2 * L2;
  std::vector<std::int64_t> out(static_cast<std::size_t>(nx) * ny, kInf);
  for (int b1 = 0; b1 < L; ++b1)
    for (int b2 = 0; b2 < L; ++b2) {
      const std::int64_t* r1 = tm.row(h, b1, h2);
      const std::int64_t* r2 = tm.row(h, b2, h2);
      std::int64_t* dst = out.data() + static_cast<std::size_t>(b1 * L + b2) * ny;
      for (int b3 = 0; b3 < L2; ++b3)
        for (int b4 = 0; b4 < L2; ++b4)
          dst[b3 * L2 + b4] = std::min(add(r1[b3], r2[b4]), add(r1[b4], r2[b3]));
    }
  return out;
}

struct CycleDp {
  // Holes in cyclic order a -> b -> c -> a.
  int La, Lb, Lc;
  std::vector<QuadState> qa, qb, qc;
  std::vector<std::vector<std::pair<int, std::int64_t>>> qa_by_x;  // x -> (y, v)
  std::vector<std::int64_t> pab, pbc, pca;

  struct Trace {
    int yb, xb, yc, xc, ya;
  };

  // Minimum over everything with hole a's first pair fixed to xa.
  std::int64_t run(int xa, Trace* trace) const {
    const int nb = Lb * Lb, nc = Lc * Lc, na = La * La;
    std::vector<std::int64_t> B(nb, kInf), C(nc, kInf), E(nc, kInf), F(na, kInf);
    std::vector<int> argB, argC, argE, argF;
    if (trace) {
      argB.assign(nb, -1);
      argC.assign(nc, -1);
      argE.assign(nc, -1);
      argF.assign(na, -1);
    }
    const std::int64_t* A = pab.data() + static_cast<std::size_t>(xa) * nb;
    for (const QuadState& s : qb) {
      if (A[s.y] == kInf) continue;
      const std::int64_t v = A[s.y] + s.v;
      if (v < B[s.x]) {
        B[s.x] = v;
        if (trace) argB[s.x] = s.y;
      }
    }
    for (int xb = 0; xb < nb; ++xb) {
      if (B[xb] == kInf) continue;
      const std::int64_t* row = pbc.data() + static_cast<std::size_t>(xb) * nc;
      for (int yc = 0; yc < nc; ++yc) {
        if (row[yc] == kInf) continue;
        const std::int64_t v = B[xb] + row[yc];
        if (v < C[yc]) {
          C[yc] = v;
          if (trace) argC[yc] = xb;
        }
      }
    }
    for (const QuadState& s : qc) {
      if (C[s.y] == kInf) continue;
      const std::int64_t v = C[s.y] + s.v;
      if (v < E[s.x]) {
        E[s.x] = v;
        if (trace) argE[s.x] = s.y;
      }
    }
    for (int xc = 0; xc < nc; ++xc) {
      if (E[xc] == kInf) continue;
      const std::int64_t* row = pca.data() + static_cast<std::size_t>(xc) * na;
      for (int ya = 0; ya < na; ++ya) {
        if (row[ya] == kInf) continue;
        const std::int64_t v = E[xc] + row[ya];
        if (v < F[ya]) {
          F[ya] = v;
          if (trace) argF[ya] = xc;
        }
      }
    }
    std::int64_t best = kInf;
    int best_ya = -1;
    for (const auto& [ya, v] : qa_by_x[xa]) {
      if (F[ya] == kInf) continue;
      if (F[ya] + v < best) {
        best = F[ya] + v;
        best_ya = ya;
      }
    }
    if (trace && best != kInf) {
      trace->ya = best_ya;
      trace->xc = argF[best_ya];
      trace->yc = argE[trace->xc];
      trace->xb = argC[trace->yc];
      trace->yb = argB[trace->xb];
    }
    return best;
  }
};

}  // namespace

MetricCertificate mu_hat(const Instance& inst, const DualGraph& dual, const DistanceTable& dist,
                         const std::vector<SeparatedDemandTable>& sep, const MetricOptions& opt) {
  TRIHOLE_CHECK(dual.hole_count() == 3, "mu_hat needs three holes");
  for (int h = 0; h < 3; ++h)
    if (opt.max_quad > 0 && sep[h].size() > opt.max_quad)
      throw_resource("boundary of hole " + std::to_string(inst.holes[h].label) + " has " +
                     std::to_string(sep[h].size()) + " edges, above the quadruple cap " +
                     std::to_string(opt.max_quad));
  const TerminalMatrix tm(dist);

  // Start the cycle at the shortest boundary; the cyclic direction is kept.
  int a = 0;
  for (int h = 1; h < 3; ++h)
    if (sep[h].size() < sep[a].size()) a = h;
  const int b = (a + 1) % 3, c = (a + 2) % 3;

  CycleDp dp;
  dp.La = sep[a].size();
  dp.Lb = sep[b].size();
  dp.Lc = sep[c].size();
  dp.qa = valid_quads(sep[a]);
  dp.qb = valid_quads(sep[b]);
  dp.qc = valid_quads(sep[c]);
  dp.qa_by_x.resize(dp.La * dp.La);
  for (const QuadState& s : dp.qa) dp.qa_by_x[s.x].push_back({s.y, s.v});
  dp.pab = pair_costs(tm, a, dp.La, b, dp.Lb);
  dp.pbc = pair_costs(tm, b, dp.Lb, c, dp.Lc);
  dp.pca = pair_costs(tm, c, dp.Lc, a, dp.La);

  const int na = dp.La * dp.La;
  std::vector<std::int64_t> per_x(na, kInf);
  const int threads = std::max(1, std::min(opt.threads, na));
  auto work = [&](int w) {
    for (int xa = w; xa < na; xa += threads) per_x[xa] = dp.run(xa, nullptr);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  int best_x = -1;
  std::int64_t best = kInf;
  for (int xa = 0; xa < na; ++xa)
    if (per_x[xa] < best) {
      best = per_x[xa];
      best_x = xa;
    }

  MetricCertificate cert;
  for (int h = 0; h < 3; ++h) cert.holes[h] = inst.holes[h].label;
  if (best == kInf) return cert;

  CycleDp::Trace tr{};
  TRIHOLE_CHECK(dp.run(best_x, &tr) == best, "metric recursion is not reproducible");
  QuadrupleTriple q;
  auto quad = [](int x, int y, int L) {
    return std::array<int, 4>{x / L, x % L, y / L, y % L};
  };
  q.pos[a] = quad(best_x, tr.ya, dp.La);
  q.pos[b] = quad(tr.xb, tr.yb, dp.Lb);
  q.pos[c] = quad(tr.xc, tr.yc, dp.Lc);

  const ZetaResult z = zeta(dist, q);
  std::int64_t demand = 0;
  for (int h = 0; h < 3; ++h) demand += quad_demand(sep[h], q.pos[h]);
  TRIHOLE_CHECK(z.value.is_finite() && z.value.value() - demand == best,
                "metric recursion disagrees with zeta at its minimizer");
  const EmbeddedGraph& g = inst.g();
  for (int h = 0; h < 3; ++h)
    for (int k = 0; k < 4; ++k)
      cert.quads[h][k] = g.edge_label(dual.boundaries[h].edges[q.pos[h][k]]);
  cert.zeta = z.value;
  cert.demand = demand;
  cert.value = ExtInt(best);
  for (const auto& [u, v] : z.matching) {
    auto ref = [&](std::pair<int, int> t) {
      return TerminalRef{inst.holes[t.first].label,
                         g.edge_label(dual.boundaries[t.first].edges[t.second])};
    };
    cert.matching.push_back({ref(u), ref(v)});
  }
  return cert;
}

ExtInt mu_hat_scan(const DistanceTable& dist, const std::vector<SeparatedDemandTable>& sep) {
  std::vector<std::vector<std::array<int, 4>>> quads(3);
  for (int h = 0; h < 3; ++h) {
    const int L = sep[h].size();
    for (int b1 = 0; b1 < L; ++b1)
      for (int b2 = 0; b2 < L; ++b2)
        for (int b3 = 0; b3 < L; ++b3)
          for (int b4 = 0; b4 < L; ++b4)
            if (quadruple_in_order({b1, b2, b3, b4}, L)) quads[h].push_back({b1, b2, b3, b4});
  }
  ExtInt best = ExtInt::infinity();
  QuadrupleTriple q;
  for (const auto& q0 : quads[0])
    for (const auto& q1 : quads[1])
      for (const auto& q2 : quads[2]) {
        q.pos = {q0, q1, q2};
        best = min(best, excess_tilde(dist, sep, q));
      }
  return best;
}

ExcessReport check_excess(const Instance& inst, const CheckOptions& opt) {
  const DualGraph dual = build_dual(inst);
  const DistanceTable dist(dual, opt.metric.threads);
  const auto sep = separated_demand_tables(inst, dual);
  ExcessReport r;
  r.cut1 = mu1(inst, dual, dist, sep);
  r.cut2 = nu2(inst, dual, dist, sep);
  r.cut3 = nu3(inst, dual, dist, sep);
  r.mu1 = r.cut1.value;
  r.nu2 = r.cut2.value;
  r.nu3 = r.cut3.value;
  if (!opt.skip_metric && dual.hole_count() == 3) {
    r.metric = mu_hat(inst, dual, dist, sep, opt.metric);
    r.mu_hat = r.metric.value;
    r.metric_computed = true;
  }
  return r;
}

}  // namespace trihole
