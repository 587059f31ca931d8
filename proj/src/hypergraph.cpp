#include "supertree/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>
#include <utility>

namespace supertree {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonUniformEdge: return "NonUniformEdge";
    case ErrorCode::NonLinear: return "NonLinear";
    case ErrorCode::DanglingVertexRef: return "DanglingVertexRef";
    case ErrorCode::NoSuchEdge: return "NoSuchEdge";
    case ErrorCode::NoSuchVertex: return "NoSuchVertex";
    case ErrorCode::DiameterUndefined: return "DiameterUndefined";
    case ErrorCode::RankTooSmall: return "RankTooSmall";
    case ErrorCode::TargetInsideEdge: return "TargetInsideEdge";
    case ErrorCode::PivotNotInEdge: return "PivotNotInEdge";
    case ErrorCode::NonLinearResult: return "NonLinearResult";
    case ErrorCode::PendentEdge: return "PendentEdge";
    case ErrorCode::NotAcyclic: return "NotAcyclic";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::RankNotTwo: return "RankNotTwo";
    case ErrorCode::NoPositiveRoot: return "NoPositiveRoot";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NotConverged: return "NotConverged";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

void check_vertex(const Hypergraph& h, Vertex v) {
  if (!h.contains(v)) {
    throw Error(ErrorCode::NoSuchVertex, "vertex " + std::to_string(v) + " not in hypergraph of order " +
                                             std::to_string(h.order()));
  }
}

void check_edge_index(const Hypergraph& h, std::size_t e) {
  if (e >= static_cast<std::size_t>(h.size())) {
    throw Error(ErrorCode::NoSuchEdge, "edge index " + std::to_string(e) + " out of range");
  }
}

// Adjacency lists of the vertex-edge incidence graph: nodes 0..n-1 are
// vertices, n..n+m-1 are edges.
std::vector<std::vector<int>> incidence_graph(const Hypergraph& h) {
  const int n = h.order();
  std::vector<std::vector<int>> adj(n + h.size());
  for (int e = 0; e < h.size(); ++e) {
    for (Vertex v : h.edge(e)) {
      adj[v].push_back(n + e);
      adj[n + e].push_back(v);
    }
  }
  return adj;
}

std::string encode_rooted(const std::vector<std::vector<int>>& adj, int n, int node, int parent) {
  std::vector<std::string> parts;
  parts.reserve(adj[node].size());
  for (int next : adj[node]) {
    if (next != parent) parts.push_back(encode_rooted(adj, n, next, node));
  }
  std::sort(parts.begin(), parts.end());
  const bool is_vertex = node < n;
  std::string out(1, is_vertex ? '(' : '[');
  for (const auto& p : parts) out += p;
  out += is_vertex ? ')' : ']';
  return out;
}

// Canonical string of one incidence tree, rooted at its center (or the
// lexicographically smaller rooting at a bicenter).
std::string encode_component(const std::vector<std::vector<int>>& adj, int n,
                             const std::vector<int>& nodes) {
  if (nodes.size() == 1) return encode_rooted(adj, n, nodes.front(), -1);

  std::unordered_map<int, int> remaining;
  std::vector<int> layer;
  for (int node : nodes) {
    remaining[node] = static_cast<int>(adj[node].size());
    if (adj[node].size() <= 1) layer.push_back(node);
  }
  std::size_t left = nodes.size();
  while (left > 2) {
    std::vector<int> next;
    for (int leaf : layer) {
      --left;
      remaining[leaf] = -1;
      for (int nb : adj[leaf]) {
        if (remaining[nb] > 0 && --remaining[nb] == 1) next.push_back(nb);
      }
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int node : nodes) {
    if (remaining[node] >= 0) centers.push_back(node);
  }
  std::string best;
  for (int c : centers) {
    std::string code = encode_rooted(adj, n, c, -1);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

}  // namespace

Hypergraph::Hypergraph(int n, std::vector<Edge> edges, int rank)
    : rank_(rank), order_(n), edges_(std::move(edges)), incidence_(static_cast<std::size_t>(n)) {
  if (rank_ < 2) throw Error(ErrorCode::RankTooSmall, "rank must be at least 2");
  if (order_ < 0) throw Error(ErrorCode::BadParams, "negative order");
  std::map<std::pair<Vertex, Vertex>, int> pair_owner;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    Edge& e = edges_[i];
    std::sort(e.begin(), e.end());
    if (static_cast<int>(e.size()) != rank_ || std::adjacent_find(e.begin(), e.end()) != e.end()) {
      throw Error(ErrorCode::NonUniformEdge, "edge " + std::to_string(i) + " does not have " +
                                                 std::to_string(rank_) + " distinct vertices");
    }
    for (Vertex v : e) {
      if (v < 0 || v >= order_) {
        throw Error(ErrorCode::DanglingVertexRef,
                    "edge " + std::to_string(i) + " references vertex " + std::to_string(v));
      }
      incidence_[v].push_back(static_cast<int>(i));
    }
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        auto [it, inserted] = pair_owner.emplace(std::pair{e[a], e[b]}, static_cast<int>(i));
        if (!inserted) {
          throw Error(ErrorCode::NonLinear, "edges " + std::to_string(it->second) + " and " +
                                                std::to_string(i) + " share at least two vertices");
        }
      }
    }
  }
}

Hypergraph Hypergraph::validate(std::span<const long long> raw_vertices,
                                std::span<const std::vector<long long>> raw_edges, int rank) {
  std::unordered_map<long long, int> dense;
  for (long long raw : raw_vertices) {
    dense.emplace(raw, static_cast<int>(dense.size()));
  }
  std::vector<Edge> edges;
  edges.reserve(raw_edges.size());
  for (std::size_t i = 0; i < raw_edges.size(); ++i) {
    Edge e;
    for (long long raw : raw_edges[i]) {
      auto it = dense.find(raw);
      if (it == dense.end()) {
        throw Error(ErrorCode::DanglingVertexRef,
                    "edge " + std::to_string(i) + " references unknown vertex " + std::to_string(raw));
      }
      e.push_back(it->second);
    }
    edges.push_back(std::move(e));
  }
  return Hypergraph(static_cast<int>(dense.size()), std::move(edges), rank);
}

Hypergraph Hypergraph::from_edges(int n, std::vector<Edge> edges, int rank) {
  return Hypergraph(n, std::move(edges), rank);
}

Hypergraph Hypergraph::empty(int n, int rank) { return Hypergraph(n, {}, rank); }

VertexRole Hypergraph::role(Vertex v) const {
  const int d = degree(v);
  return VertexRole{d, d == 1};
}

bool Hypergraph::edge_contains(std::size_t e, Vertex v) const {
  const Edge& edge = edges_.at(e);
  return std::binary_search(edge.begin(), edge.end(), v);
}

std::optional<std::size_t> Hypergraph::find_edge(Edge e) const {
  std::sort(e.begin(), e.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i] == e) return i;
  }
  return std::nullopt;
}

bool operator==(const Hypergraph& a, const Hypergraph& b) {
  if (a.rank_ != b.rank_ || a.order_ != b.order_ || a.edges_.size() != b.edges_.size()) return false;
  auto ea = a.edges_;
  auto eb = b.edges_;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

std::vector<int> distances_from(const Hypergraph& h, Vertex source) {
  check_vertex(h, source);
  std::vector<int> dist(h.order(), -1);
  std::vector<char> edge_seen(h.size(), 0);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex v = frontier.front();
    frontier.pop();
    for (int e : h.incident_edges(v)) {
      if (edge_seen[e]) continue;
      edge_seen[e] = 1;
      for (Vertex w : h.edge(e)) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          frontier.push(w);
        }
      }
    }
  }
  return dist;
}

std::vector<std::vector<Vertex>> components(const Hypergraph& h) {
  std::vector<int> label(h.order(), -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < h.order(); ++s) {
    if (label[s] >= 0) continue;
    std::vector<Vertex> comp;
    std::vector<Vertex> stack{s};
    label[s] = static_cast<int>(out.size());
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (int e : h.incident_edges(v)) {
        for (Vertex w : h.edge(e)) {
          if (label[w] < 0) {
            label[w] = label[s];
            stack.push_back(w);
          }
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Hypergraph& h) { return components(h).size() <= 1; }

bool is_acyclic(const Hypergraph& h) {
  // The incidence graph is a forest iff #arcs = #nodes - #components.
  const long long arcs = static_cast<long long>(h.size()) * h.rank();
  // Incidence components coincide with vertex components because every edge
  // node touches r >= 2 vertices.
  const auto comps = static_cast<long long>(components(h).size());
  return arcs == static_cast<long long>(h.order()) + h.size() - comps;
}

bool is_supertree(const Hypergraph& h) {
  return h.order() == h.size() * (h.rank() - 1) + 1 && is_connected(h) && is_acyclic(h);
}

int diameter(const Hypergraph& h) {
  if (h.order() == 0 || !is_connected(h)) {
    throw Error(ErrorCode::DiameterUndefined, "diameter requires a connected hypergraph");
  }
  int best = 0;
  for (Vertex v = 0; v < h.order(); ++v) {
    const auto dist = distances_from(h, v);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

Structure structure(const Hypergraph& h) {
  Structure s;
  s.is_connected = h.order() > 0 && is_connected(h);
  s.is_acyclic = is_acyclic(h);
  s.is_supertree = is_supertree(h);
  if (s.is_connected) s.diameter = diameter(h);
  s.roles.reserve(h.order());
  for (Vertex v = 0; v < h.order(); ++v) s.roles.push_back(h.role(v));
  return s;
}

Hypergraph induced(const Hypergraph& h, std::span<const Vertex> vertices) {
  std::vector<int> map(h.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    check_vertex(h, vertices[i]);
    map[vertices[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const Edge& e : h.edges()) {
    Edge mapped;
    mapped.reserve(e.size());
    for (Vertex v : e) {
      if (map[v] < 0) break;
      mapped.push_back(map[v]);
    }
    if (mapped.size() == e.size()) edges.push_back(std::move(mapped));
  }
  return Hypergraph::from_edges(static_cast<int>(vertices.size()), std::move(edges), h.rank());
}

Hypergraph delete_edge(const Hypergraph& h, std::size_t edge_index) {
  check_edge_index(h, edge_index);
  std::vector<Edge> edges = h.edges();
  edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(edge_index));
  return Hypergraph::from_edges(h.order(), std::move(edges), h.rank());
}

Hypergraph delete_edge(const Hypergraph& h, const Edge& e) {
  auto idx = h.find_edge(e);
  if (!idx) throw Error(ErrorCode::NoSuchEdge, "edge not present");
  return delete_edge(h, *idx);
}

Hypergraph delete_vertices(const Hypergraph& h, std::span<const Vertex> removed) {
  std::vector<char> drop(h.order(), 0);
  for (Vertex v : removed) {
    check_vertex(h, v);
    drop[v] = 1;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < h.order(); ++v) {
    if (!drop[v]) keep.push_back(v);
  }
  return induced(h, keep);
}

Hypergraph disjoint_union(const Hypergraph& g, const Hypergraph& h) {
  if (g.rank() != h.rank()) throw Error(ErrorCode::RankMismatch, "union of different ranks");
  std::vector<Edge> edges = g.edges();
  for (Edge e : h.edges()) {
    for (Vertex& v : e) v += g.order();
    edges.push_back(std::move(e));
  }
  return Hypergraph::from_edges(g.order() + h.order(), std::move(edges), g.rank());
}

Vertex coalesced_label(const Hypergraph& g, Vertex v, Vertex x) {
  if (x == v) throw Error(ErrorCode::BadParams, "the identified vertex keeps the label from G");
  return g.order() + (x < v ? x : x - 1);
}

Hypergraph coalesce(const Hypergraph& g, Vertex u, const Hypergraph& h, Vertex v) {
  check_vertex(g, u);
  check_vertex(h, v);
  if (g.rank() != h.rank()) throw Error(ErrorCode::RankMismatch, "coalescence of different ranks");
  std::vector<Edge> edges = g.edges();
  for (Edge e : h.edges()) {
    for (Vertex& x : e) x = (x == v) ? u : coalesced_label(g, v, x);
    edges.push_back(std::move(e));
  }
  return Hypergraph::from_edges(g.order() + h.order() - 1, std::move(edges), g.rank());
}

Hypergraph power(const Hypergraph& graph, int r) {
  if (graph.rank() != 2) throw Error(ErrorCode::BadParams, "power expects an ordinary graph (rank 2)");
  if (r < 3) throw Error(ErrorCode::RankTooSmall, "power requires r >= 3");
  int next = graph.order();
  std::vector<Edge> edges;
  edges.reserve(graph.size());
  for (const Edge& e : graph.edges()) {
    Edge grown = e;
    for (int k = 0; k < r - 2; ++k) grown.push_back(next++);
    edges.push_back(std::move(grown));
  }
  return Hypergraph::from_edges(next, std::move(edges), r);
}

Hypergraph move_edges(const Hypergraph& h, std::span<const EdgeMove> moves, Vertex target) {
  check_vertex(h, target);
  std::vector<Edge> edges = h.edges();
  std::set<std::size_t> seen;
  for (const EdgeMove& mv : moves) {
    check_edge_index(h, mv.edge);
    if (!seen.insert(mv.edge).second) {
      throw Error(ErrorCode::BadParams, "edge " + std::to_string(mv.edge) + " moved twice");
    }
    if (!h.edge_contains(mv.edge, mv.from)) {
      throw Error(ErrorCode::PivotNotInEdge, "vertex " + std::to_string(mv.from) + " not in edge " +
                                                 std::to_string(mv.edge));
    }
    if (h.edge_contains(mv.edge, target)) {
      throw Error(ErrorCode::TargetInsideEdge, "target already lies in edge " + std::to_string(mv.edge));
    }
    Edge& e = edges[mv.edge];
    *std::find(e.begin(), e.end(), mv.from) = target;
  }
  try {
    return Hypergraph::from_edges(h.order(), std::move(edges), h.rank());
  } catch (const Error& err) {
    if (err.code() == ErrorCode::NonLinear) throw Error(ErrorCode::NonLinearResult, err.what());
    throw;
  }
}

bool is_pendent_edge(const Hypergraph& h, std::size_t edge_index) {
  check_edge_index(h, edge_index);
  int cores = 0;
  for (Vertex v : h.edge(edge_index)) cores += h.degree(v) == 1 ? 1 : 0;
  return cores == h.rank() - 1;
}

Hypergraph edge_release(const Hypergraph& h, std::size_t edge_index, Vertex at) {
  check_edge_index(h, edge_index);
  if (!h.edge_contains(edge_index, at)) {
    throw Error(ErrorCode::NoSuchVertex, "release vertex " + std::to_string(at) + " not in edge");
  }
  if (is_pendent_edge(h, edge_index)) {
    throw Error(ErrorCode::PendentEdge, "cannot release pendent edge " + std::to_string(edge_index));
  }
  std::vector<EdgeMove> moves;
  for (Vertex w : h.edge(edge_index)) {
    if (w == at) continue;
    for (int f : h.incident_edges(w)) {
      if (static_cast<std::size_t>(f) != edge_index) moves.push_back({static_cast<std::size_t>(f), w});
    }
  }
  return move_edges(h, moves, at);
}

CanonicalCode canonical_code(const Hypergraph& h) {
  if (!is_acyclic(h)) throw Error(ErrorCode::NotAcyclic, "canonical code needs a superforest");
  const auto adj = incidence_graph(h);
  const int n = h.order();
  std::vector<std::string> parts;
  for (const auto& comp : components(h)) {
    std::vector<int> nodes(comp.begin(), comp.end());
    std::set<int> comp_edges;
    for (Vertex v : comp) comp_edges.insert(h.incident_edges(v).begin(), h.incident_edges(v).end());
    for (int e : comp_edges) nodes.push_back(n + e);
    parts.push_back(encode_component(adj, n, nodes));
  }
  std::sort(parts.begin(), parts.end());
  CanonicalCode code;
  code.bytes = "r" + std::to_string(h.rank()) + ":";
  for (const auto& p : parts) code.bytes += p;
  return code;
}

Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> new_label) {
  if (static_cast<int>(new_label.size()) != h.order()) {
    throw Error(ErrorCode::BadParams, "relabelling must cover every vertex");
  }
  std::vector<char> hit(h.order(), 0);
  for (Vertex v : new_label) {
    if (v < 0 || v >= h.order() || hit[v]) throw Error(ErrorCode::BadParams, "relabelling is not a permutation");
    hit[v] = 1;
  }
  std::vector<Edge> edges;
  edges.reserve(h.size());
  for (const Edge& e : h.edges()) {
    Edge mapped;
    for (Vertex v : e) mapped.push_back(new_label[v]);
    edges.push_back(std::move(mapped));
  }
  return Hypergraph::from_edges(h.order(), std::move(edges), h.rank());
}

}  // namespace supertree
