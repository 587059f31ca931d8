#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "supertree/hypergraph.hpp"

namespace supertree {

/// A constructed hypergraph together with named anchor vertices, e.g.
/// "v1".."v{d+1}" along the spine path or "end" of an attached path.
struct Built {
  Hypergraph graph;
  std::map<std::string, Vertex> anchors;

  Vertex anchor(const std::string& name) const;
};

/// P_m^r. Anchors v1..v{m+1}; "c{i}" is the lowest core vertex of edge i.
Built loose_path(int m, int r);

/// S_m^r with anchor "center".
Built hyperstar(int m, int r);

/// Chains p fresh edges from v. Anchor "end" is the far end (v itself if p = 0).
Built attach_pendent_path(const Hypergraph& h, Vertex v, int p);

/// P_d^r with u ∈ T identified with path vertex v_i (1 <= i <= d+1).
Built path_vertex_attachment(int d, int r, int i, const Hypergraph& t, Vertex u);
/// P_d^r with u ∈ T identified with the lowest core vertex of edge e_j.
Built path_edge_attachment(int d, int r, int j, const Hypergraph& t, Vertex u);

/// P_d^r with m-d pendent edges at v_i; 2 <= i <= d <= m-1.
Built t_md_i(int m, int d, int r, int i);
/// P_d^r with m-d-1 pendent edges at v_i and one at v_j; 2 <= i != j <= d <= m-2.
Built t_md_ij(int m, int d, int r, int i, int j);
/// t_md_ij with i = floor(d/2)+1 (the central vertex), j = i+1; needs
/// m >= d+2 and d >= 3.
Built t_double_prime(int m, int d, int r);
/// P_d^r with a hyperstar of m-d edges centred at a core vertex of e_i;
/// 2 <= i <= d-1, m >= d, r >= 3.
Built t_mdr_edge_i(int m, int d, int r, int i);

/// P_{m-1}^r plus a pendent edge at a core vertex of e_2. For r = 2 there is
/// no core vertex; the pendent edge goes to v_2 (the Dynkin D-type tree).
Built d_family(int m, int r);
/// P_{m-1}^r plus a pendent edge at v_2.
Built p_grave(int m, int r);

/// T(v; p, q): two pendent paths of lengths p and q attached at v.
/// Anchors "end_p" and "end_q".
Built graft_one_vertex(const Hypergraph& t, Vertex v, int p, int q);
/// T^(1)(u, v; p, q): u != v lie in a common edge and T has at least two edges.
Built graft_adjacent(const Hypergraph& t, Vertex u, Vertex v, int p, int q);
/// T^(s)(u, v; p, q): u, v joined by a path of length s whose edges after the
/// first have all their off-path vertices of degree one. BadParams otherwise.
Built graft_distance(const Hypergraph& t, Vertex u, Vertex v, int s, int p, int q);

/// Edge sequence of the unique u-v path in a supertree, with the vertices
/// along it (u = path_vertices.front(), v = path_vertices.back()).
struct TreePath {
  std::vector<int> edges;
  std::vector<Vertex> vertices;
};
TreePath tree_path(const Hypergraph& t, Vertex u, Vertex v);

enum class Family {
  LoosePath,
  Hyperstar,
  PowerOfTree,
  Tmd_i,
  Tmdr_edge_i,
  TDoublePrime,
  D,
  PGrave,
  GraftOneVertex,
  GraftAdjacent,
  GraftDistanceS,
};

std::string family_name(Family f);
/// Accepts the canonical names ("Tmd_i") and kebab-case aliases ("tmd-i",
/// "loose-path"). Throws ParseError.
Family parse_family(const std::string& name);

/// Parameters of a named family. The graft families use the loose path P_m^r
/// as base tree with u = v_i and (for the two-vertex variants) v = v_{i+s}
/// (s = 1 for GraftAdjacent). PowerOfTree takes the ordinary tree from
/// `tree_edges` on vertices 0..m.
struct FamilySpec {
  Family family = Family::LoosePath;
  int m = 0;
  int d = 0;
  int r = 3;
  int i = 0;
  int j = 0;
  int p = 0;
  int q = 0;
  int s = 0;
  std::vector<Edge> tree_edges;
};

Built build(const FamilySpec& spec);

nlohmann::json to_json(const FamilySpec& spec);
FamilySpec family_spec_from_json(const nlohmann::json& j);

}  // namespace supertree
