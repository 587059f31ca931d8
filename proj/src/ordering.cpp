#include "supertree/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <set>
#include <utility>

namespace supertree {

namespace {

// Q(y) with phi1(x) - phi2(x) = x^e Q(x^r); both polynomials share n and r.
struct ReducedDifference {
  Polynomial q;
  int e = 0;
};

ReducedDifference reduced_difference(const MatchingPolynomial& a, const MatchingPolynomial& b) {
  const int nu = std::max(a.matching_number(), b.matching_number());
  std::vector<BigInt> coeffs(nu + 1);
  for (int k = 0; k <= nu; ++k) {
    BigInt diff = 0;
    if (k <= a.matching_number()) diff += a.counts[k];
    if (k <= b.matching_number()) diff -= b.counts[k];
    coeffs[nu - k] = (k % 2 == 0) ? diff : BigInt(-diff);
  }
  return {Polynomial(std::move(coeffs)), a.order - nu * a.rank};
}

struct Dominance {
  bool nonnegative = false;
  bool vanishes = false;
};

// Whether Q >= 0 on [y*, inf), y* the largest root of phi's reduced
// polynomial (0 when phi has no edges), and whether x^e Q(x^r) vanishes there.
Dominance dominance(const ReducedDifference& d, const MatchingPolynomial& phi) {
  Dominance out;
  const Polynomial& q = d.q;
  if (q.leading() < 0) return out;
  const Polynomial s = sign_change_part(q);
  const SturmSequence s_sturm(s);

  if (phi.matching_number() == 0) {
    out.nonnegative = s_sturm.count_roots_above(Rational(0)) == 0;
    out.vanishes = d.e > 0 || q.sign_at(Rational(0)) == 0;
    return out;
  }

  const Polynomial p = phi.reduced();
  const SturmSequence p_sturm(p);
  RootBracket br = reduced_root_bracket(phi, Rational(1, 1024));
  if (br.exact) {
    out.nonnegative = s_sturm.count_roots_above(br.hi) == 0;
    out.vanishes = q.sign_at(br.hi) == 0;
    return out;
  }

  // The bracket isolates y* among the roots of p, so a common factor of p
  // has a root in (lo, hi] exactly when it vanishes at y*.
  auto vanishes_at_root = [&](const Polynomial& f) {
    const Polynomial g = gcd(f, p);
    return g.degree() > 0 && SturmSequence(g).count_roots(br.lo, br.hi) > 0;
  };
  const int at_root = vanishes_at_root(s) ? 1 : 0;
  while (s_sturm.count_roots(br.lo, br.hi) > at_root) {
    br = refine(p, p_sturm, br);
    if (br.exact) {
      out.nonnegative = s_sturm.count_roots_above(br.hi) == 0;
      out.vanishes = q.sign_at(br.hi) == 0;
      return out;
    }
  }
  out.nonnegative = s_sturm.count_roots_above(br.hi) == 0;
  out.vanishes = vanishes_at_root(q);
  return out;
}

void require_comparable(const Hypergraph& a, const Hypergraph& b) {
  if (a.rank() != b.rank()) {
    throw Error(ErrorCode::RankMismatch,
                "ranks " + std::to_string(a.rank()) + " and " + std::to_string(b.rank()));
  }
  if (a.order() != b.order()) {
    throw Error(ErrorCode::OrderMismatch,
                "orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
  }
}

double rho_of(const MatchingPolynomial& phi) {
  return phi.matching_number() == 0 ? 0.0 : rho_from_matching_poly(phi).rho;
}

void precondition(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::PreconditionViolated, what);
}

struct Candidate {
  std::string label;
  Hypergraph graph;
  CanonicalCode code;
};

Candidate candidate(std::string label, const Built& b) {
  return {std::move(label), b.graph, canonical_code(b.graph)};
}

std::string tmd_label(int d, int i) {
  return "Tmd_i(d=" + std::to_string(d) + ",i=" + std::to_string(i) + ")";
}

std::string tmdr_label(int d, int i) {
  return "Tmdr_edge_i(d=" + std::to_string(d) + ",i=" + std::to_string(i) + ")";
}

// Known family members with m edges, in label priority order.
std::vector<Candidate> known_families(int m, int r) {
  std::vector<Candidate> out;
  out.push_back(candidate("LoosePath", loose_path(m, r)));
  if (m >= 1) out.push_back(candidate("Hyperstar", hyperstar(m, r)));
  if (m >= 3) {
    out.push_back(candidate("D", d_family(m, r)));
    out.push_back(candidate("PGrave", p_grave(m, r)));
  }
  for (int d = 3; d + 2 <= m; ++d) {
    out.push_back(candidate("TDoublePrime(d=" + std::to_string(d) + ")", t_double_prime(m, d, r)));
  }
  for (int d = 2; d <= m - 1; ++d) {
    for (int i = 2; i <= d; ++i) out.push_back(candidate(tmd_label(d, i), t_md_i(m, d, r, i)));
  }
  if (r >= 3) {
    for (int d = 3; d <= m; ++d) {
      for (int i = 2; i <= d - 1; ++i) out.push_back(candidate(tmdr_label(d, i), t_mdr_edge_i(m, d, r, i)));
    }
  }
  return out;
}

std::string lookup_label(const std::vector<Candidate>& known, const CanonicalCode& code) {
  for (const auto& c : known) {
    if (c.code == code) return c.label;
  }
  return {};
}

struct Measured {
  Hypergraph graph;
  CanonicalCode code;
  MatchingPolynomial phi;
  SpectralResult root;
  double method_gap = 0.0;
};

std::vector<Measured> measure(const std::vector<Hypergraph>& members) {
  std::vector<Measured> out;
  out.reserve(members.size());
  for (const auto& h : members) {
    Measured m{h, canonical_code(h), matching_polynomial(h), {}, 0.0};
    m.root = rho_from_matching_poly(m.phi);
    m.method_gap = std::abs(m.root.rho - rho_power_iteration(h).rho);
    out.push_back(std::move(m));
  }
  return out;
}

// Power iteration stops at a Collatz-Wielandt gap of 1e-10.
constexpr double kMethodAgreement = 1e-8;

void fill_entries(RankingReport& report, const std::vector<Measured>& ranked, const std::vector<Candidate>& known) {
  for (std::size_t k = 0; k < ranked.size(); ++k) {
    RankingEntry e;
    e.rank = static_cast<int>(k) + 1;
    e.code = ranked[k].code;
    e.family_match = lookup_label(known, ranked[k].code);
    e.rho = ranked[k].root.rho;
    e.method_gap = ranked[k].method_gap;
    report.entries.push_back(std::move(e));
    if (ranked[k].method_gap > kMethodAgreement) {
      report.failures.push_back("methods disagree at rank " + std::to_string(k + 1) + " (gap " +
                                std::to_string(ranked[k].method_gap) + ")");
    }
  }
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

// Checks that the prefix of `ranked` is `expected`, in order, with each
// consecutive radius gap (including the one after the prefix) >= sep.
void check_prefix(RankingReport& report, const std::vector<Measured>& ranked, const std::vector<Candidate>& expected,
                  double sep) {
  for (const auto& c : expected) report.expected.push_back(c.label);
  if (ranked.size() < expected.size()) {
    report.failures.push_back("only " + std::to_string(ranked.size()) + " members, expected at least " +
                              std::to_string(expected.size()));
    return;
  }
  for (std::size_t k = 0; k < expected.size(); ++k) {
    if (ranked[k].code != expected[k].code) {
      const std::string got = report.entries[k].family_match.empty() ? ranked[k].code.bytes
                                                                      : report.entries[k].family_match;
      report.failures.push_back("rank " + std::to_string(k + 1) + ": expected " + expected[k].label + ", got " + got);
    }
    if (k + 1 < ranked.size()) {
      const double gap = std::abs(ranked[k].root.rho - ranked[k + 1].root.rho);
      if (gap < sep) {
        report.failures.push_back("gap between ranks " + std::to_string(k + 1) + " and " + std::to_string(k + 2) +
                                  " is " + fmt(gap));
      }
    }
  }
}

bool strictly_greater(const SpectralResult& a, const SpectralResult& b) {
  return a.rho - b.rho > a.error_bound + b.error_bound;
}

void sort_by_rho(std::vector<Measured>& v, bool descending) {
  std::sort(v.begin(), v.end(), [descending](const Measured& a, const Measured& b) {
    if (a.root.rho != b.root.rho) return descending ? a.root.rho > b.root.rho : a.root.rho < b.root.rho;
    return a.code < b.code;
  });
}

void finish(RankingReport& report) { report.pass = report.failures.empty(); }

// The hyperstar of m - d edges hung on P_d^r at vertex v_i or a core of e_i.
SpectralResult vertex_hung(int m, int d, int r, int i) {
  const Built star = hyperstar(m - d, r);
  return rho_from_matching_poly(
      matching_polynomial(path_vertex_attachment(d, r, i, star.graph, star.anchor("center")).graph));
}

Hypergraph edge_hung_graph(int m, int d, int r, int j) {
  const Built star = hyperstar(m - d, r);
  return path_edge_attachment(d, r, j, star.graph, star.anchor("center")).graph;
}

// Pairwise path-attachment inequalities and the centre-edge relation.
void check_attachment_orders(RankingReport& report, int m, int d, int r) {
  auto fail = [&](const std::string& what) { report.failures.push_back(what); };
  std::vector<SpectralResult> at_vertex(d + 2);
  for (int i = 2; i <= d; ++i) at_vertex[i] = vertex_hung(m, d, r, i);
  for (int i = 3; i <= d / 2 + 1; ++i) {
    for (int j = 2; j < i; ++j) {
      if (!strictly_greater(at_vertex[i], at_vertex[j])) {
        fail("vertex attachment v" + std::to_string(i) + " not above v" + std::to_string(j));
      }
    }
  }
  if (r < 3) return;
  std::vector<Hypergraph> edge_graph(d + 1);
  std::vector<SpectralResult> at_edge(d + 1);
  for (int i = 2; i <= d; ++i) {
    edge_graph[i] = edge_hung_graph(m, d, r, i);
    at_edge[i] = rho_from_matching_poly(matching_polynomial(edge_graph[i]));
  }
  for (int i = 3; i <= (d + 1) / 2; ++i) {
    for (int j = 2; j < i; ++j) {
      if (!strictly_greater(at_edge[i], at_edge[j])) {
        fail("edge attachment e" + std::to_string(i) + " not above e" + std::to_string(j));
      }
    }
  }
  for (int i = 2; i <= d; ++i) {
    if (!strictly_greater(at_vertex[i], at_edge[i])) {
      fail("edge attachment e" + std::to_string(i) + " not below v" + std::to_string(i));
    }
  }
  for (int i = 2; i <= d - 1; ++i) {
    if (!strictly_greater(at_vertex[i + 1], at_edge[i])) {
      fail("edge attachment e" + std::to_string(i) + " not below v" + std::to_string(i + 1));
    }
  }
  const int mid = (d + 1) / 2;
  const Built star = hyperstar(m - d, r);
  for (int i = 2; i <= d; ++i) {
    const Hypergraph v = path_vertex_attachment(d, r, i, star.graph, star.anchor("center")).graph;
    const Relation rel = compare(edge_graph[mid], v).relation;
    if (rel != Relation::StrictlyLess) {
      fail("centre edge attachment vs v" + std::to_string(i) + ": " + relation_name(rel));
    }
  }
}

}  // namespace

std::string relation_name(Relation r) {
  switch (r) {
    case Relation::StrictlyLess: return "StrictlyLess";
    case Relation::LessOrEqual: return "LessOrEqual";
    case Relation::StrictlyGreater: return "StrictlyGreater";
    case Relation::GreaterOrEqual: return "GreaterOrEqual";
    case Relation::Equal: return "Equal";
    case Relation::Incomparable: return "Incomparable";
  }
  return "Incomparable";
}

Relation compare_polynomials(const MatchingPolynomial& phi1, const MatchingPolynomial& phi2) {
  if (phi1.rank != phi2.rank) throw Error(ErrorCode::RankMismatch, "matching polynomials of different rank");
  if (phi1.order != phi2.order) throw Error(ErrorCode::OrderMismatch, "matching polynomials of different order");
  const ReducedDifference forward = reduced_difference(phi1, phi2);
  if (forward.q.is_zero()) return Relation::Equal;
  const Dominance below = dominance(forward, phi1);
  if (below.nonnegative) return below.vanishes ? Relation::LessOrEqual : Relation::StrictlyLess;
  const ReducedDifference backward{-forward.q, forward.e};
  const Dominance above = dominance(backward, phi2);
  if (above.nonnegative) return above.vanishes ? Relation::GreaterOrEqual : Relation::StrictlyGreater;
  return Relation::Incomparable;
}

OrderingVerdict compare(const Hypergraph& t1, const Hypergraph& t2) {
  require_comparable(t1, t2);
  OrderingVerdict v;
  v.first = canonical_code(t1);
  v.second = canonical_code(t2);
  const MatchingPolynomial phi1 = matching_polynomial(t1);
  const MatchingPolynomial phi2 = matching_polynomial(t2);
  v.relation = compare_polynomials(phi1, phi2);
  v.difference = phi1.in_x() - phi2.in_x();
  v.threshold = rho_of(phi1);
  return v;
}

std::vector<Hypergraph> enumerate_supertrees(int m, int r, int budget) {
  if (m < 0 || r < 2) throw Error(ErrorCode::BadParams, "enumeration needs m >= 0 and r >= 2");
  if (m > budget) {
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(m) + " edges exceeds the enumeration budget of " + std::to_string(budget));
  }
  std::vector<Hypergraph> level{Hypergraph::empty(1, r)};
  for (int k = 0; k < m; ++k) {
    std::set<CanonicalCode> seen;
    std::vector<std::pair<CanonicalCode, Hypergraph>> next;
    for (const auto& t : level) {
      const int n = t.order();
      for (Vertex v = 0; v < n; ++v) {
        std::vector<Edge> edges = t.edges();
        Edge fresh{v};
        for (int j = 0; j < r - 1; ++j) fresh.push_back(n + j);
        edges.push_back(std::move(fresh));
        Hypergraph grown = Hypergraph::from_edges(n + r - 1, std::move(edges), r);
        CanonicalCode code = canonical_code(grown);
        if (seen.insert(code).second) next.emplace_back(std::move(code), std::move(grown));
      }
    }
    std::sort(next.begin(), next.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    level.clear();
    for (auto& [code, h] : next) level.push_back(std::move(h));
  }
  return level;
}

std::vector<Hypergraph> enumerate_with_diameter(int m, int d, int r, int budget) {
  std::vector<Hypergraph> out;
  for (auto& h : enumerate_supertrees(m, r, budget)) {
    if (diameter(h) == d) out.push_back(std::move(h));
  }
  return out;
}

std::string family_label(const CanonicalCode& code, int m, int r) {
  return lookup_label(known_families(m, r), code);
}

RankingReport verify_ranking_diameter(int m, int d, int r, const VerifyOptions& opts) {
  const bool wide = d >= 3 && m >= d + 3;
  const bool tight = d >= 4 && m == d + 2;
  precondition(wide || tight, "diameter ranking needs m >= d+3, d >= 3 or m = d+2, d >= 4 (got m=" +
                                  std::to_string(m) + ", d=" + std::to_string(d) + ")");
  precondition(r >= 2, "rank must be at least 2");

  RankingReport report;
  report.check = wide ? "diameter-ranking" : "diameter-ranking-d+2";
  report.m = m;
  report.d = d;
  report.r = r;
  report.descending = true;

  std::vector<Measured> ranked = measure(enumerate_with_diameter(m, d, r, opts.budget));
  sort_by_rho(ranked, true);
  const auto known = known_families(m, r);
  fill_entries(report, ranked, known);

  std::vector<Candidate> expected;
  const int last = wide ? 2 : 3;
  for (int i = d / 2 + 1; i >= last; --i) expected.push_back(candidate(tmd_label(d, i), t_md_i(m, d, r, i)));
  const Candidate tpp = candidate("TDoublePrime(d=" + std::to_string(d) + ")", t_double_prime(m, d, r));
  if (wide) expected.push_back(tpp);
  if (opts.perturb_expected) {
    if (expected.size() >= 2) {
      std::swap(expected[0], expected[1]);
    } else {
      expected[0] = candidate(tmd_label(d, d / 2), t_md_i(m, d, r, d / 2));
    }
  }
  check_prefix(report, ranked, expected, opts.separation);

  check_attachment_orders(report, m, d, r);

  const SpectralResult rho_tpp = rho_from_matching_poly(matching_polynomial(tpp.graph));
  if (r >= 3) {
    const int mid = (d + 1) / 2;
    const SpectralResult rho_edge = rho_from_matching_poly(matching_polynomial(t_mdr_edge_i(m, d, r, mid).graph));
    if (!strictly_greater(rho_tpp, rho_edge)) report.failures.push_back("T'' not above the centre edge attachment");
  }
  if (wide) {
    std::set<CanonicalCode> exempt{tpp.code};
    for (int i = 2; i <= d; ++i) exempt.insert(canonical_code(t_md_i(m, d, r, i).graph));
    for (const auto& t : ranked) {
      if (exempt.count(t.code) == 0 && !strictly_greater(rho_tpp, t.root)) {
        report.failures.push_back("member " + t.code.bytes + " not below T''");
      }
    }
  }
  finish(report);
  return report;
}

RankingReport verify_minima(int m, int r, const VerifyOptions& opts) {
  precondition(m >= 4, "minima check needs m >= 4");
  RankingReport report;
  report.check = "minima";
  report.m = m;
  report.r = r;
  report.descending = false;

  std::vector<Measured> ranked = measure(enumerate_supertrees(m, r, opts.budget));
  sort_by_rho(ranked, false);
  const auto known = known_families(m, r);
  fill_entries(report, ranked, known);

  const Candidate path = candidate("LoosePath", loose_path(m, r));
  const Candidate dm = candidate("D", d_family(m, r));
  std::vector<Candidate> expected{path, dm};
  if (opts.perturb_expected) std::swap(expected[0], expected[1]);
  check_prefix(report, ranked, expected, opts.separation);

  for (const auto& t : ranked) {
    if (t.code == path.code || t.code == dm.code) continue;
    const Relation rel = compare(dm.graph, t.graph).relation;
    if (rel != Relation::StrictlyLess) {
      report.failures.push_back("D vs " + t.code.bytes + ": " + relation_name(rel));
    }
  }
  if (r >= 3) {
    const Relation rel = compare(p_grave(m, r).graph, dm.graph).relation;
    if (rel != Relation::StrictlyGreater) report.failures.push_back("PGrave vs D: " + relation_name(rel));
  }
  finish(report);
  return report;
}

RankingReport rank_supertrees(int m, int d, int r, int budget) {
  RankingReport report;
  report.check = "ranking";
  report.m = m;
  report.d = d;
  report.r = r;
  std::vector<Measured> ranked =
      measure(d >= 0 ? enumerate_with_diameter(m, d, r, budget) : enumerate_supertrees(m, r, budget));
  sort_by_rho(ranked, true);
  fill_entries(report, ranked, known_families(m, r));
  finish(report);
  return report;
}

RankingReport verify_extremes(int m, int r, const VerifyOptions& opts) {
  precondition(m >= 1, "extremes check needs m >= 1");
  RankingReport report;
  report.check = "extremes";
  report.m = m;
  report.r = r;
  report.descending = false;

  std::vector<Measured> ranked = measure(enumerate_supertrees(m, r, opts.budget));
  sort_by_rho(ranked, false);
  const auto known = known_families(m, r);
  fill_entries(report, ranked, known);

  Candidate low = candidate("LoosePath", loose_path(m, r));
  Candidate high = candidate("Hyperstar", hyperstar(m, r));
  if (opts.perturb_expected) std::swap(low, high);
  report.expected = {low.label, high.label};
  if (ranked.front().code != low.code) report.failures.push_back("minimum is not " + low.label);
  if (ranked.back().code != high.code) report.failures.push_back("maximum is not " + high.label);

  const double pi = std::acos(-1.0);
  const double path_closed = std::pow(2 * std::cos(pi / (m + 2)), 2.0 / r);
  const double star_closed = std::pow(static_cast<double>(m), 1.0 / r);
  auto find = [&](const CanonicalCode& c) {
    return std::find_if(ranked.begin(), ranked.end(), [&](const Measured& x) { return x.code == c; });
  };
  const auto p_it = find(low.code);
  const auto s_it = find(high.code);
  if (!opts.perturb_expected) {
    if (std::abs(p_it->root.rho - path_closed) > 1e-9) report.failures.push_back("path radius off closed form");
    if (std::abs(s_it->root.rho - star_closed) > 1e-9) report.failures.push_back("star radius off closed form");
  }
  for (const auto& t : ranked) {
    if (t.code != p_it->code) {
      const Relation rel = compare(p_it->graph, t.graph).relation;
      if (rel != Relation::StrictlyLess) report.failures.push_back("path vs " + t.code.bytes + ": " + relation_name(rel));
    }
    if (t.code != s_it->code) {
      const Relation rel = compare(t.graph, s_it->graph).relation;
      if (rel != Relation::StrictlyLess) report.failures.push_back(t.code.bytes + " vs star: " + relation_name(rel));
    }
  }
  finish(report);
  return report;
}

namespace {

GraftingCheck judge(const Hypergraph& before, const Hypergraph& after, Relation want, std::string what) {
  GraftingCheck out;
  out.verdict = compare(before, after);
  out.rho_before = spectral_radius(before);
  out.rho_after = spectral_radius(after);
  const bool order_ok = out.verdict.relation == want;
  const bool rho_ok = want == Relation::StrictlyGreater ? out.rho_before > out.rho_after
                                                        : out.rho_before < out.rho_after;
  out.pass = order_ok && rho_ok;
  out.detail = std::move(what) + ": " + relation_name(out.verdict.relation) + ", rho " + fmt(out.rho_before) +
               " -> " + fmt(out.rho_after);
  return out;
}

std::string pq(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

// With p = q and no edge outside u's side of the shared edge e, both grafts
// are u's side with pendent paths p and p+1 at u, so they coincide.
bool isomorphic_adjacent_grafts(const Hypergraph& t, Vertex u, Vertex v, int p, int q) {
  if (p != q) return false;
  std::optional<std::size_t> shared;
  for (int e : t.incident_edges(u)) {
    if (t.edge_contains(e, v)) shared = e;
  }
  if (!shared) return false;
  const Hypergraph rest = delete_edge(t, *shared);
  std::vector<char> u_side(t.order(), 0);
  for (const auto& comp : components(rest)) {
    if (std::binary_search(comp.begin(), comp.end(), u)) {
      for (Vertex x : comp) u_side[x] = 1;
    }
  }
  return std::all_of(rest.edges().begin(), rest.edges().end(), [&](const Edge& e) { return u_side[e.front()]; });
}

}  // namespace

GraftingCheck verify_grafting(GraftKind kind, const Hypergraph& t, Vertex u, Vertex v, int p, int q, int s) {
  precondition(is_supertree(t), "grafting base must be a supertree");
  precondition(t.contains(u), "graft vertex out of range");
  try {
    switch (kind) {
      case GraftKind::OneVertex: {
        precondition(p >= q && q >= 1, "one-vertex grafting needs p >= q >= 1");
        precondition(t.size() >= 1, "one-vertex grafting needs a base with an edge");
        return judge(graft_one_vertex(t, u, p, q).graph, graft_one_vertex(t, u, p + 1, q - 1).graph,
                     Relation::StrictlyGreater, "T(v;p,q) vs T(v;p+1,q-1) at " + pq(p, q));
      }
      case GraftKind::Adjacent: {
        precondition(p >= q && q >= 1, "adjacent grafting needs p >= q >= 1");
        precondition(t.size() >= 2, "adjacent grafting needs a base with at least two edges");
        precondition(!isomorphic_adjacent_grafts(t, u, v, p, q),
                     "with p = q and every other edge on u's side the two grafts are isomorphic");
        return judge(graft_adjacent(t, u, v, p, q).graph, graft_adjacent(t, u, v, p + 1, q - 1).graph,
                     Relation::StrictlyGreater, "T1(u,v;p,q) vs T1(u,v;p+1,q-1) at " + pq(p, q));
      }
      case GraftKind::DistanceS: {
        precondition(s >= 1 && q >= 1 && p - q >= s, "distance grafting needs p-q >= s >= 1 and q >= 1");
        precondition(t.size() >= s + 1, "distance grafting needs more edges than the u-v path");
        return judge(graft_distance(t, u, v, s, p, q).graph, graft_distance(t, u, v, s, p + 1, q - 1).graph,
                     Relation::StrictlyGreater,
                     "Ts(u,v;p,q) vs Ts(u,v;p+1,q-1) at " + pq(p, q) + ", s=" + std::to_string(s));
      }
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BadParams || e.code() == ErrorCode::NoSuchVertex) {
      throw Error(ErrorCode::PreconditionViolated, e.detail());
    }
    throw;
  }
  throw Error(ErrorCode::BadParams, "unknown grafting kind");
}

GraftingCheck verify_edge_release(const Hypergraph& t, std::size_t edge_index, Vertex at) {
  precondition(is_supertree(t), "edge release needs a supertree");
  precondition(edge_index < static_cast<std::size_t>(t.size()), "no such edge");
  precondition(!is_pendent_edge(t, edge_index), "edge release needs a non-pendent edge");
  precondition(t.edge_contains(edge_index, at), "release vertex must lie in the edge");
  return judge(t, edge_release(t, edge_index, at), Relation::StrictlyLess,
               "edge release of edge " + std::to_string(edge_index) + " at " + std::to_string(at));
}

GraftingCheck verify_edge_moving(const Hypergraph& h, const std::vector<EdgeMove>& moves, Vertex target) {
  precondition(!moves.empty(), "edge moving needs at least one edge");
  precondition(h.contains(target), "target out of range");
  const SpectralResult before = rho_power_iteration(h);
  // Entries are compared with the iteration tolerance as slack.
  for (const auto& mv : moves) {
    precondition(mv.edge < static_cast<std::size_t>(h.size()) && h.edge_contains(mv.edge, mv.from),
                 "moved edge must contain its pivot");
    precondition(before.eigenvector[target] >= before.eigenvector[mv.from] - 1e-9,
                 "eigenvector entry at the target is below that of vertex " + std::to_string(mv.from));
  }
  const Hypergraph after = move_edges(h, moves, target);
  GraftingCheck out;
  out.rho_before = before.rho;
  out.rho_after = spectral_radius(after);
  out.verdict.relation = Relation::Incomparable;
  if (is_acyclic(h) && is_acyclic(after)) out.verdict = compare(h, after);
  out.pass = out.rho_after - out.rho_before > before.error_bound;
  out.detail = "moved " + std::to_string(moves.size()) + " edge(s) to " + std::to_string(target) + ": rho " +
               fmt(out.rho_before) + " -> " + fmt(out.rho_after);
  return out;
}

}  // namespace supertree
