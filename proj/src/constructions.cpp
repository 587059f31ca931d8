#include "supertree/constructions.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

namespace supertree {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParams, what);
}

std::string params(std::initializer_list<std::pair<const char*, int>> values) {
  std::string out;
  for (const auto& [name, v] : values) {
    if (!out.empty()) out += ", ";
    out += std::string(name) + "=" + std::to_string(v);
  }
  return out;
}

// Incremental builder over fresh vertex ids.
struct Builder {
  int rank;
  int next = 0;
  std::vector<Edge> edges;

  Vertex fresh() { return next++; }

  // Adds an edge through `from`, returns the r-1 new vertices (cores first,
  // the designated continuation vertex last).
  std::vector<Vertex> grow(Vertex from) {
    Edge e{from};
    std::vector<Vertex> added;
    for (int k = 0; k < rank - 1; ++k) {
      added.push_back(fresh());
      e.push_back(added.back());
    }
    edges.push_back(std::move(e));
    return added;
  }

  Hypergraph finish() const { return Hypergraph::from_edges(next, edges, rank); }
};

Built attach_star(Built base, Vertex at, int edges) {
  Builder b{base.graph.rank(), base.graph.order(), base.graph.edges()};
  for (int k = 0; k < edges; ++k) b.grow(at);
  base.graph = b.finish();
  return base;
}

}  // namespace

Vertex Built::anchor(const std::string& name) const {
  auto it = anchors.find(name);
  if (it == anchors.end()) throw Error(ErrorCode::NoSuchVertex, "no anchor named " + name);
  return it->second;
}

Built loose_path(int m, int r) {
  require(m >= 0, "loose_path needs m >= 0");
  Builder b{r, 0, {}};
  Built out;
  Vertex cur = b.fresh();
  out.anchors["v1"] = cur;
  for (int i = 1; i <= m; ++i) {
    auto added = b.grow(cur);
    if (r >= 3) out.anchors["c" + std::to_string(i)] = added.front();
    cur = added.back();
    out.anchors["v" + std::to_string(i + 1)] = cur;
  }
  out.graph = b.finish();
  return out;
}

Built hyperstar(int m, int r) {
  require(m >= 1, "hyperstar needs m >= 1");
  Builder b{r, 0, {}};
  Built out;
  const Vertex center = b.fresh();
  for (int k = 0; k < m; ++k) b.grow(center);
  out.graph = b.finish();
  out.anchors["center"] = center;
  return out;
}

Built attach_pendent_path(const Hypergraph& h, Vertex v, int p) {
  if (!h.contains(v)) throw Error(ErrorCode::NoSuchVertex, "attach point " + std::to_string(v));
  require(p >= 0, "pendent path length must be nonnegative");
  Builder b{h.rank(), h.order(), h.edges()};
  Vertex cur = v;
  for (int k = 0; k < p; ++k) cur = b.grow(cur).back();
  return Built{b.finish(), {{"end", cur}}};
}

Built path_vertex_attachment(int d, int r, int i, const Hypergraph& t, Vertex u) {
  require(d >= 1 && i >= 1 && i <= d + 1, "path vertex index out of range: " + params({{"d", d}, {"i", i}}));
  Built path = loose_path(d, r);
  const Vertex at = path.anchor("v" + std::to_string(i));
  Built out{coalesce(path.graph, at, t, u), path.anchors};
  out.anchors["u"] = at;
  return out;
}

Built path_edge_attachment(int d, int r, int j, const Hypergraph& t, Vertex u) {
  if (r < 3) throw Error(ErrorCode::RankTooSmall, "edge attachment needs a core vertex (r >= 3)");
  require(d >= 1 && j >= 1 && j <= d, "path edge index out of range: " + params({{"d", d}, {"j", j}}));
  Built path = loose_path(d, r);
  const Vertex at = path.anchor("c" + std::to_string(j));
  Built out{coalesce(path.graph, at, t, u), path.anchors};
  out.anchors["u"] = at;
  return out;
}

Built t_md_i(int m, int d, int r, int i) {
  require(2 <= i && i <= d && d <= m - 1, "t_md_i needs 2 <= i <= d <= m-1: " + params({{"m", m}, {"d", d}, {"i", i}}));
  Built path = loose_path(d, r);
  const Vertex at = path.anchor("v" + std::to_string(i));
  Built out = attach_star(std::move(path), at, m - d);
  out.anchors["attach"] = at;
  return out;
}

Built t_md_ij(int m, int d, int r, int i, int j) {
  require(2 <= i && 2 <= j && i != j && i <= d && j <= d && d <= m - 2,
          "t_md_ij needs 2 <= i != j <= d <= m-2: " + params({{"m", m}, {"d", d}, {"i", i}, {"j", j}}));
  Built path = loose_path(d, r);
  const Vertex vi = path.anchor("v" + std::to_string(i));
  const Vertex vj = path.anchor("v" + std::to_string(j));
  return attach_star(attach_star(std::move(path), vi, m - d - 1), vj, 1);
}

Built t_double_prime(int m, int d, int r) {
  require(d >= 3 && m >= d + 2, "t_double_prime needs d >= 3 and m >= d+2: " + params({{"m", m}, {"d", d}}));
  // The bulk sits on the central vertex v_{floor(d/2)+1}. For odd d this is
  // v_{ceil(d/2)}; for even d the ceiling would put it one step off centre.
  const int center = d / 2 + 1;
  return t_md_ij(m, d, r, center, center + 1);
}

Built t_mdr_edge_i(int m, int d, int r, int i) {
  if (r < 3) throw Error(ErrorCode::RankTooSmall, "t_mdr_edge_i needs r >= 3");
  require(2 <= i && i <= d - 1 && d <= m, "t_mdr_edge_i needs 2 <= i <= d-1 and d <= m: " +
                                              params({{"m", m}, {"d", d}, {"i", i}}));
  Built path = loose_path(d, r);
  const Vertex core = path.anchor("c" + std::to_string(i));
  Built out = attach_star(std::move(path), core, m - d);
  out.anchors["center"] = core;
  return out;
}

Built d_family(int m, int r) {
  require(m >= 3, "d_family needs m >= 3");
  Built path = loose_path(m - 1, r);
  const Vertex at = r >= 3 ? path.anchor("c2") : path.anchor("v2");
  Built out = attach_star(std::move(path), at, 1);
  out.anchors["attach"] = at;
  return out;
}

Built p_grave(int m, int r) {
  require(m >= 3, "p_grave needs m >= 3");
  Built path = loose_path(m - 1, r);
  const Vertex at = path.anchor("v2");
  Built out = attach_star(std::move(path), at, 1);
  out.anchors["attach"] = at;
  return out;
}

Built graft_one_vertex(const Hypergraph& t, Vertex v, int p, int q) {
  Built first = attach_pendent_path(t, v, p);
  Built second = attach_pendent_path(first.graph, v, q);
  return Built{second.graph, {{"v", v}, {"end_p", first.anchor("end")}, {"end_q", second.anchor("end")}}};
}

Built graft_adjacent(const Hypergraph& t, Vertex u, Vertex v, int p, int q) {
  if (!t.contains(u) || !t.contains(v)) throw Error(ErrorCode::NoSuchVertex, "graft anchor out of range");
  require(t.size() >= 2, "graft_adjacent needs a base supertree with at least two edges");
  require(u != v, "graft_adjacent needs two distinct vertices");
  bool share = false;
  for (int e : t.incident_edges(u)) share = share || t.edge_contains(e, v);
  require(share, "graft_adjacent needs u and v in a common edge");
  Built first = attach_pendent_path(t, u, p);
  Built second = attach_pendent_path(first.graph, v, q);
  return Built{second.graph,
               {{"u", u}, {"v", v}, {"end_p", first.anchor("end")}, {"end_q", second.anchor("end")}}};
}

TreePath tree_path(const Hypergraph& t, Vertex u, Vertex v) {
  if (!t.contains(u) || !t.contains(v)) throw Error(ErrorCode::NoSuchVertex, "path endpoint out of range");
  std::vector<int> via_edge(t.order(), -1);
  std::vector<Vertex> parent(t.order(), -1);
  std::vector<char> seen(t.order(), 0);
  std::queue<Vertex> frontier;
  seen[u] = 1;
  frontier.push(u);
  while (!frontier.empty()) {
    const Vertex x = frontier.front();
    frontier.pop();
    for (int e : t.incident_edges(x)) {
      for (Vertex y : t.edge(e)) {
        if (seen[y]) continue;
        seen[y] = 1;
        parent[y] = x;
        via_edge[y] = e;
        frontier.push(y);
      }
    }
  }
  if (!seen[v]) throw Error(ErrorCode::Disconnected, "no path between the given vertices");
  TreePath path;
  for (Vertex x = v; x != u; x = parent[x]) {
    path.vertices.push_back(x);
    path.edges.push_back(via_edge[x]);
  }
  path.vertices.push_back(u);
  std::reverse(path.vertices.begin(), path.vertices.end());
  std::reverse(path.edges.begin(), path.edges.end());
  return path;
}

Built graft_distance(const Hypergraph& t, Vertex u, Vertex v, int s, int p, int q) {
  require(s >= 1, "graft_distance needs s >= 1");
  if (!is_supertree(t)) throw Error(ErrorCode::BadParams, "graft_distance needs a supertree");
  const TreePath path = tree_path(t, u, v);
  require(static_cast<int>(path.edges.size()) == s,
          "u and v are at distance " + std::to_string(path.edges.size()) + ", not " + std::to_string(s));
  for (int k = 1; k < s; ++k) {
    const Vertex a = path.vertices[k];
    const Vertex b = path.vertices[k + 1];
    for (Vertex w : t.edge(path.edges[k])) {
      if (w != a && w != b && t.degree(w) != 1) {
        throw Error(ErrorCode::BadParams, "edge " + std::to_string(k + 1) +
                                              " of the u-v path has an off-path vertex of degree > 1");
      }
    }
  }
  if (s == 1) return graft_adjacent(t, u, v, p, q);
  Built first = attach_pendent_path(t, u, p);
  Built second = attach_pendent_path(first.graph, v, q);
  return Built{second.graph,
               {{"u", u}, {"v", v}, {"end_p", first.anchor("end")}, {"end_q", second.anchor("end")}}};
}

namespace {

struct FamilyName {
  Family family;
  const char* name;
  const char* alias;
};

constexpr FamilyName kFamilyNames[] = {
    {Family::LoosePath, "LoosePath", "loose-path"},
    {Family::Hyperstar, "Hyperstar", "hyperstar"},
    {Family::PowerOfTree, "PowerOfTree", "power-of-tree"},
    {Family::Tmd_i, "Tmd_i", "tmd-i"},
    {Family::Tmdr_edge_i, "Tmdr_edge_i", "tmdr-edge-i"},
    {Family::TDoublePrime, "TDoublePrime", "t-double-prime"},
    {Family::D, "D", "d"},
    {Family::PGrave, "PGrave", "p-grave"},
    {Family::GraftOneVertex, "GraftOneVertex", "graft-one-vertex"},
    {Family::GraftAdjacent, "GraftAdjacent", "graft-adjacent"},
    {Family::GraftDistanceS, "GraftDistanceS", "graft-distance"},
};

}  // namespace

std::string family_name(Family f) {
  for (const auto& entry : kFamilyNames) {
    if (entry.family == f) return entry.name;
  }
  return "Unknown";
}

Family parse_family(const std::string& name) {
  std::string lowered;
  for (char c : name) lowered += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const auto& entry : kFamilyNames) {
    std::string canonical;
    for (const char* c = entry.name; *c; ++c) canonical += static_cast<char>(std::tolower(static_cast<unsigned char>(*c)));
    if (lowered == canonical || lowered == entry.alias) return entry.family;
  }
  throw Error(ErrorCode::ParseError, "unknown family '" + name + "'");
}

Built build(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::LoosePath: return loose_path(spec.m, spec.r);
    case Family::Hyperstar: return hyperstar(spec.m, spec.r);
    case Family::PowerOfTree: {
      const Hypergraph tree = Hypergraph::from_edges(spec.m + 1, spec.tree_edges, 2);
      require(is_supertree(tree), "PowerOfTree needs an ordinary tree on vertices 0..m");
      return Built{spec.r == 2 ? tree : power(tree, spec.r), {}};
    }
    case Family::Tmd_i: return t_md_i(spec.m, spec.d, spec.r, spec.i);
    case Family::Tmdr_edge_i: return t_mdr_edge_i(spec.m, spec.d, spec.r, spec.i);
    case Family::TDoublePrime: return t_double_prime(spec.m, spec.d, spec.r);
    case Family::D: return d_family(spec.m, spec.r);
    case Family::PGrave: return p_grave(spec.m, spec.r);
    case Family::GraftOneVertex: {
      Built base = loose_path(spec.m, spec.r);
      return graft_one_vertex(base.graph, base.anchor("v" + std::to_string(spec.i)), spec.p, spec.q);
    }
    case Family::GraftAdjacent: {
      Built base = loose_path(spec.m, spec.r);
      return graft_adjacent(base.graph, base.anchor("v" + std::to_string(spec.i)),
                            base.anchor("v" + std::to_string(spec.i + 1)), spec.p, spec.q);
    }
    case Family::GraftDistanceS: {
      Built base = loose_path(spec.m, spec.r);
      return graft_distance(base.graph, base.anchor("v" + std::to_string(spec.i)),
                            base.anchor("v" + std::to_string(spec.i + spec.s)), spec.s, spec.p, spec.q);
    }
  }
  throw Error(ErrorCode::BadParams, "unhandled family");
}

nlohmann::json to_json(const FamilySpec& spec) {
  nlohmann::json j{{"family", family_name(spec.family)}, {"m", spec.m}, {"r", spec.r}};
  switch (spec.family) {
    case Family::Tmd_i:
    case Family::Tmdr_edge_i:
      j["d"] = spec.d;
      j["i"] = spec.i;
      break;
    case Family::TDoublePrime: j["d"] = spec.d; break;
    case Family::GraftOneVertex:
    case Family::GraftAdjacent:
      j["i"] = spec.i;
      j["p"] = spec.p;
      j["q"] = spec.q;
      break;
    case Family::GraftDistanceS:
      j["i"] = spec.i;
      j["p"] = spec.p;
      j["q"] = spec.q;
      j["s"] = spec.s;
      break;
    case Family::PowerOfTree: j["tree_edges"] = spec.tree_edges; break;
    default: break;
  }
  return j;
}

FamilySpec family_spec_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw Error(ErrorCode::ParseError, "family spec needs a string field 'family'");
  }
  FamilySpec spec;
  spec.family = parse_family(j["family"].get<std::string>());
  auto read = [&](const char* key, int& field) {
    if (!j.contains(key)) return;
    if (!j[key].is_number_integer()) throw Error(ErrorCode::ParseError, std::string("field '") + key + "' must be an integer");
    field = j[key].get<int>();
  };
  read("m", spec.m);
  read("d", spec.d);
  read("r", spec.r);
  read("i", spec.i);
  read("j", spec.j);
  read("p", spec.p);
  read("q", spec.q);
  read("s", spec.s);
  if (j.contains("tree_edges")) {
    try {
      spec.tree_edges = j["tree_edges"].get<std::vector<Edge>>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, std::string("tree_edges: ") + e.what());
    }
  }
  return spec;
}

}  // namespace supertree
