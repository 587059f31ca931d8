#include <algorithm>

#include "supertree/ordering.hpp"

namespace supertree {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& items) {
  return items[uniform(rng, 0, static_cast<int>(items.size()) - 1)];
}

int random_rank(std::mt19937_64& rng) { return uniform(rng, 2, 4); }

// Adds one fresh edge at `at`; returns the new vertices.
std::vector<Vertex> grow(Hypergraph& h, Vertex at) {
  std::vector<Edge> edges = h.edges();
  Edge e{at};
  std::vector<Vertex> added;
  for (int j = 0; j < h.rank() - 1; ++j) added.push_back(h.order() + j);
  e.insert(e.end(), added.begin(), added.end());
  edges.push_back(std::move(e));
  h = Hypergraph::from_edges(h.order() + h.rank() - 1, std::move(edges), h.rank());
  return added;
}

GraftingCheck one_vertex_instance(std::mt19937_64& rng, int max_edges) {
  const Hypergraph t = random_supertree(uniform(rng, 1, max_edges - 2), random_rank(rng), rng);
  const int room = max_edges - t.size();
  const int q = uniform(rng, 1, room / 2);
  const int p = uniform(rng, q, room - q);
  return verify_grafting(GraftKind::OneVertex, t, uniform(rng, 0, t.order() - 1), 0, p, q);
}

GraftingCheck adjacent_instance(std::mt19937_64& rng, int max_edges) {
  for (;;) {
    const Hypergraph t = random_supertree(uniform(rng, 2, max_edges - 2), random_rank(rng), rng);
    const Edge& e = t.edge(uniform(rng, 0, t.size() - 1));
    const int a = uniform(rng, 0, t.rank() - 1);
    int b = uniform(rng, 0, t.rank() - 2);
    if (b >= a) ++b;
    const int room = max_edges - t.size();
    const int q = uniform(rng, 1, room / 2);
    const int p = uniform(rng, q, room - q);
    try {
      return verify_grafting(GraftKind::Adjacent, t, e[a], e[b], p, q);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::PreconditionViolated) throw;
    }
  }
}

// A base with a u-v path of length s whose edges after the first carry only
// degree-one vertices off the path; extra edges hang anywhere else.
GraftingCheck distance_instance(std::mt19937_64& rng, int max_edges) {
  const int r = random_rank(rng);
  const int s = uniform(rng, 1, std::min(3, (max_edges - 3) / 2));
  const int spare = max_edges - 2 * s - 2;  // edges left for the base beyond the path
  Hypergraph t = random_supertree(uniform(rng, 1, spare), r, rng);
  const Vertex u = uniform(rng, 0, t.order() - 1);
  std::vector<Vertex> allowed(t.order());
  for (Vertex x = 0; x < t.order(); ++x) allowed[x] = x;
  Vertex cur = u;
  for (int k = 1; k <= s; ++k) {
    const std::vector<Vertex> added = grow(t, cur);
    cur = added.back();
    if (k == 1) {
      allowed.insert(allowed.end(), added.begin(), added.end());
    } else {
      allowed.push_back(cur);
    }
  }
  const Vertex v = cur;
  const int extras = uniform(rng, 0, spare - (t.size() - s));
  for (int k = 0; k < extras; ++k) {
    const std::vector<Vertex> added = grow(t, pick(rng, allowed));
    allowed.insert(allowed.end(), added.begin(), added.end());
  }
  const int room = max_edges - t.size();
  const int q = uniform(rng, 1, (room - s) / 2);
  const int p = uniform(rng, q + s, room - q);
  return verify_grafting(GraftKind::DistanceS, t, u, v, p, q, s);
}

GraftingCheck release_instance(std::mt19937_64& rng, int max_edges) {
  for (;;) {
    const Hypergraph t = random_supertree(uniform(rng, 2, max_edges), random_rank(rng), rng);
    std::vector<int> inner;
    for (int e = 0; e < t.size(); ++e) {
      if (!is_pendent_edge(t, e)) inner.push_back(e);
    }
    if (inner.empty()) continue;
    const int e = pick(rng, inner);
    return verify_edge_release(t, e, pick(rng, t.edge(e)));
  }
}

GraftingCheck moving_instance(std::mt19937_64& rng, int max_edges) {
  for (;;) {
    const Hypergraph h = random_supertree(uniform(rng, 2, max_edges), random_rank(rng), rng);
    const std::vector<double> x = rho_power_iteration(h).eigenvector;
    const Vertex u = uniform(rng, 0, h.order() - 1);
    std::vector<EdgeMove> options;
    for (int e = 0; e < h.size(); ++e) {
      if (h.edge_contains(e, u)) continue;
      for (Vertex w : h.edge(e)) {
        if (x[w] <= x[u]) options.push_back({static_cast<std::size_t>(e), w});
      }
    }
    if (options.empty()) continue;
    std::shuffle(options.begin(), options.end(), rng);
    std::vector<EdgeMove> moves;
    const int want = uniform(rng, 1, 2);
    for (const auto& mv : options) {
      const bool used = std::any_of(moves.begin(), moves.end(), [&](const EdgeMove& o) { return o.edge == mv.edge; });
      if (!used && static_cast<int>(moves.size()) < want) moves.push_back(mv);
    }
    try {
      return verify_edge_moving(h, moves, u);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonLinearResult) throw;
    }
  }
}

}  // namespace

Hypergraph random_supertree(int edges, int r, std::mt19937_64& rng) {
  Hypergraph h = Hypergraph::empty(1, r);
  for (int k = 0; k < edges; ++k) grow(h, uniform(rng, 0, h.order() - 1));
  return h;
}

std::string property_name(PropertyKind k) {
  switch (k) {
    case PropertyKind::GraftOneVertex: return "graft-one-vertex";
    case PropertyKind::GraftAdjacent: return "graft-adjacent";
    case PropertyKind::GraftDistance: return "graft-distance";
    case PropertyKind::EdgeRelease: return "edge-release";
    case PropertyKind::EdgeMoving: return "edge-moving";
  }
  return "unknown";
}

SuiteReport run_property_suite(PropertyKind kind, int count, std::uint64_t seed, int max_edges) {
  if (max_edges < 5) throw Error(ErrorCode::BadParams, "property suites need max_edges >= 5");
  std::mt19937_64 rng(seed);
  SuiteReport report;
  report.name = property_name(kind);
  report.seed = seed;
  for (int k = 0; k < count; ++k) {
    GraftingCheck c;
    switch (kind) {
      case PropertyKind::GraftOneVertex: c = one_vertex_instance(rng, max_edges); break;
      case PropertyKind::GraftAdjacent: c = adjacent_instance(rng, max_edges); break;
      case PropertyKind::GraftDistance: c = distance_instance(rng, max_edges); break;
      case PropertyKind::EdgeRelease: c = release_instance(rng, max_edges); break;
      case PropertyKind::EdgeMoving: c = moving_instance(rng, max_edges); break;
    }
    ++report.instances;
    if (!c.pass) {
      ++report.violations;
      report.failures.push_back("instance " + std::to_string(k) + ": " + c.detail);
    }
  }
  report.pass = report.violations == 0;
  return report;
}

}  // namespace supertree
