#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "supertree/error.hpp"

namespace supertree {

using Vertex = int;
using Edge = std::vector<Vertex>;  // sorted, exactly rank() entries

struct VertexRole {
  int degree = 0;
  bool is_core = false;  // degree == 1
};

// Isomorphism-invariant encoding of a superforest.
struct CanonicalCode {
  std::string bytes;

  auto operator<=>(const CanonicalCode&) const = default;
};

/// An immutable r-uniform linear hypergraph on the dense vertex set 0..n-1.
///
/// Isolated vertices are explicit: they contribute to the order n and hence
/// to the degree of the matching polynomial. Every constructor path goes
/// through validation, so a Hypergraph value always satisfies uniformity and
/// linearity.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validates raw input. Vertex ids may be arbitrary integers; they are
  /// compacted to 0..n-1 in the order they appear in `raw_vertices`.
  static Hypergraph validate(std::span<const long long> raw_vertices,
                             std::span<const std::vector<long long>> raw_edges, int rank);

  /// Vertices are 0..n-1; edges may be listed in any order.
  static Hypergraph from_edges(int n, std::vector<Edge> edges, int rank);

  /// N_n: n isolated vertices.
  static Hypergraph empty(int n, int rank);

  int rank() const noexcept { return rank_; }
  int order() const noexcept { return order_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }

  /// Indices of the edges containing v (E_v).
  const std::vector<int>& incident_edges(Vertex v) const { return incidence_.at(v); }
  int degree(Vertex v) const { return static_cast<int>(incidence_.at(v).size()); }
  VertexRole role(Vertex v) const;

  bool contains(Vertex v) const noexcept { return v >= 0 && v < order_; }
  bool edge_contains(std::size_t e, Vertex v) const;

  /// Index of the edge equal to `e` (as a vertex set), if present.
  std::optional<std::size_t> find_edge(Edge e) const;

  /// Equality as labelled hypergraphs: same rank, order and edge set.
  friend bool operator==(const Hypergraph& a, const Hypergraph& b);

 private:
  Hypergraph(int n, std::vector<Edge> edges, int rank);

  int rank_ = 2;
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> incidence_;
};

struct Structure {
  bool is_connected = false;
  bool is_acyclic = false;
  bool is_supertree = false;
  std::optional<int> diameter;  // absent when disconnected
  std::vector<VertexRole> roles;
};

Structure structure(const Hypergraph& h);

bool is_connected(const Hypergraph& h);
bool is_acyclic(const Hypergraph& h);
bool is_supertree(const Hypergraph& h);

/// Throws DiameterUndefined for disconnected input.
int diameter(const Hypergraph& h);

/// Shortest-path distances (in edges) from `source`; -1 for unreachable.
std::vector<int> distances_from(const Hypergraph& h, Vertex source);

/// Vertex sets of the connected components, each sorted ascending. Components
/// are ordered by their smallest vertex.
std::vector<std::vector<Vertex>> components(const Hypergraph& h);

/// The partial hypergraph spanned by `vertices` (kept in the given order and
/// relabelled 0..k-1); an edge survives iff all its vertices are kept.
Hypergraph induced(const Hypergraph& h, std::span<const Vertex> vertices);

/// H \ e: same vertex set, edge removed.
Hypergraph delete_edge(const Hypergraph& h, std::size_t edge_index);
Hypergraph delete_edge(const Hypergraph& h, const Edge& e);

/// H - S. Surviving vertices keep their relative order.
Hypergraph delete_vertices(const Hypergraph& h, std::span<const Vertex> removed);

/// G ∪ H with H's vertices shifted by |V(G)|.
Hypergraph disjoint_union(const Hypergraph& g, const Hypergraph& h);

/// Coalescence G·H identifying u ∈ G with v ∈ H. G keeps its labels (the
/// merged vertex is u); a vertex x != v of H becomes coalesced_label(G, v, x).
Hypergraph coalesce(const Hypergraph& g, Vertex u, const Hypergraph& h, Vertex v);
Vertex coalesced_label(const Hypergraph& g, Vertex v, Vertex x);

/// r-th power of an ordinary graph: each 2-edge gains r-2 fresh core
/// vertices, appended after the original vertices in edge order.
Hypergraph power(const Hypergraph& graph, int r);

struct EdgeMove {
  std::size_t edge = 0;  // index into h.edges()
  Vertex from = 0;       // v_i, must lie in the edge
};

/// Replaces each moved edge e_i by (e_i \ {v_i}) ∪ {target}.
Hypergraph move_edges(const Hypergraph& h, std::span<const EdgeMove> moves, Vertex target);

bool is_pendent_edge(const Hypergraph& h, std::size_t edge_index);

/// Moves every edge adjacent to `edge_index` but not containing `at` onto `at`.
Hypergraph edge_release(const Hypergraph& h, std::size_t edge_index, Vertex at);

/// Requires a superforest (NotAcyclic otherwise).
CanonicalCode canonical_code(const Hypergraph& h);

/// Applies new_label[v] to every vertex; `new_label` must be a permutation.
Hypergraph relabel(const Hypergraph& h, std::span<const Vertex> new_label);

}  // namespace supertree
