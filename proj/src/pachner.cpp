#include "ss4/pachner.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ss4 {

const char* move_kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::k15: return "1-5";
    case MoveKind::k51: return "5-1";
    case MoveKind::k24: return "2-4";
    case MoveKind::k42: return "4-2";
    case MoveKind::k33: return "3-3";
  }
  return "?";
}

MoveKind move_kind_from_name(const std::string& name) {
  if (name == "1-5") return MoveKind::k15;
  if (name == "5-1") return MoveKind::k51;
  if (name == "2-4") return MoveKind::k24;
  if (name == "4-2") return MoveKind::k42;
  if (name == "3-3") return MoveKind::k33;
  throw std::invalid_argument("unknown move kind '" + name + "'");
}

namespace {

Facet sorted_facet(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  Facet f;
  std::copy(v.begin(), v.end(), f.begin());
  return f;
}

std::optional<MoveSite> make_site_15(const Triangulation4& t, const std::vector<int>& support) {
  if (support.size() != 5) return std::nullopt;
  const Facet f = sorted_facet(support);
  if (!t.has_facet(f)) return std::nullopt;
  MoveSite s{MoveKind::k15, {f.begin(), f.end()}, {f}, {}};
  const int apex = t.vertex_count();
  for (int omit = 0; omit < 5; ++omit) {
    std::vector<int> verts{apex};
    for (int k = 0; k < 5; ++k)
      if (k != omit) verts.push_back(f[k]);
    s.insert_facets.push_back(sorted_facet(verts));
  }
  std::sort(s.insert_facets.begin(), s.insert_facets.end());
  return s;
}

std::optional<MoveSite> make_site_51(const Triangulation4& t, const std::vector<int>& support) {
  if (support.size() != 1) return std::nullopt;
  const int u = support[0];
  std::vector<Facet> star;
  std::set<int> others;
  for (const auto& f : t.facets()) {
    if (std::find(f.begin(), f.end(), u) == f.end()) continue;
    star.push_back(f);
    for (int v : f)
      if (v != u) others.insert(v);
  }
  if (star.size() != 5 || others.size() != 5) return std::nullopt;
  const Facet replacement = sorted_facet({others.begin(), others.end()});
  if (t.has_facet(replacement)) return std::nullopt;
  return MoveSite{MoveKind::k51, {u}, std::move(star), {replacement}};
}

std::optional<MoveSite> make_site_24(const Triangulation4& t, const std::vector<int>& support) {
  if (support.size() != 4) return std::nullopt;
  std::vector<int> tetv = support;
  std::sort(tetv.begin(), tetv.end());
  const int tid = t.tetra_id(Tetra{tetv[0], tetv[1], tetv[2], tetv[3]});
  if (tid < 0) return std::nullopt;
  const auto& inc = t.tetra_incidence(tid);
  if (inc.size() != 2) return std::nullopt;
  std::vector<Facet> remove;
  std::vector<int> apexes;
  for (const auto& [fi, pos] : inc) {
    remove.push_back(t.facets()[fi]);
    apexes.push_back(t.facets()[fi][pos]);
  }
  const int x = std::min(apexes[0], apexes[1]);
  const int y = std::max(apexes[0], apexes[1]);
  if (t.edge_id(Edge{x, y}) >= 0) return std::nullopt;  // new edge must be absent
  std::vector<Facet> insert;
  for (int omit = 0; omit < 4; ++omit) {
    std::vector<int> verts{x, y};
    for (int k = 0; k < 4; ++k)
      if (k != omit) verts.push_back(tetv[k]);
    const Facet f = sorted_facet(verts);
    if (t.has_facet(f)) return std::nullopt;
    insert.push_back(f);
  }
  std::sort(remove.begin(), remove.end());
  std::sort(insert.begin(), insert.end());
  return MoveSite{MoveKind::k24, tetv, std::move(remove), std::move(insert)};
}

std::optional<MoveSite> make_site_42(const Triangulation4& t, const std::vector<int>& support) {
  if (support.size() != 2) return std::nullopt;
  const int x = std::min(support[0], support[1]);
  const int y = std::max(support[0], support[1]);
  if (t.edge_id(Edge{x, y}) < 0) return std::nullopt;
  std::vector<Facet> around;
  std::set<int> others;
  for (const auto& f : t.facets()) {
    if (!std::binary_search(f.begin(), f.end(), x) || !std::binary_search(f.begin(), f.end(), y))
      continue;
    around.push_back(f);
    for (int v : f)
      if (v != x && v != y) others.insert(v);
  }
  if (around.size() != 4 || others.size() != 4) return std::nullopt;
  std::vector<int> c(others.begin(), others.end());
  if (t.tetra_id(Tetra{c[0], c[1], c[2], c[3]}) >= 0) return std::nullopt;  // new tetra
  std::vector<Facet> insert;
  for (int apex : {x, y}) {
    std::vector<int> verts = c;
    verts.push_back(apex);
    const Facet f = sorted_facet(verts);
    if (t.has_facet(f)) return std::nullopt;
    insert.push_back(f);
  }
  std::sort(around.begin(), around.end());
  std::sort(insert.begin(), insert.end());
  return MoveSite{MoveKind::k42, {x, y}, std::move(around), std::move(insert)};
}

std::optional<MoveSite> make_site_33(const Triangulation4& t, const std::vector<int>& support) {
  if (support.size() != 3) return std::nullopt;
  std::vector<int> tau = support;
  std::sort(tau.begin(), tau.end());
  if (t.triangle_id(Triangle{tau[0], tau[1], tau[2]}) < 0) return std::nullopt;
  std::vector<Facet> around;
  std::set<int> others;
  for (const auto& f : t.facets()) {
    if (!std::includes(f.begin(), f.end(), tau.begin(), tau.end())) continue;
    around.push_back(f);
    for (int v : f)
      if (!std::binary_search(tau.begin(), tau.end(), v)) others.insert(v);
  }
  if (around.size() != 3 || others.size() != 3) return std::nullopt;
  std::vector<int> rho(others.begin(), others.end());
  if (t.triangle_id(Triangle{rho[0], rho[1], rho[2]}) >= 0) return std::nullopt;  // new triangle
  std::vector<Facet> insert;
  for (int omit = 0; omit < 3; ++omit) {
    std::vector<int> verts = rho;
    for (int k = 0; k < 3; ++k)
      if (k != omit) verts.push_back(tau[k]);
    const Facet f = sorted_facet(verts);
    if (t.has_facet(f)) return std::nullopt;
    insert.push_back(f);
  }
  std::sort(around.begin(), around.end());
  std::sort(insert.begin(), insert.end());
  return MoveSite{MoveKind::k33, tau, std::move(around), std::move(insert)};
}

std::optional<MoveSite> make_site(const Triangulation4& t, MoveKind kind,
                                  const std::vector<int>& support) {
  switch (kind) {
    case MoveKind::k15: return make_site_15(t, support);
    case MoveKind::k51: return make_site_51(t, support);
    case MoveKind::k24: return make_site_24(t, support);
    case MoveKind::k42: return make_site_42(t, support);
    case MoveKind::k33: return make_site_33(t, support);
  }
  return std::nullopt;
}

}  // namespace

std::vector<MoveSite> enumerate_moves(const Triangulation4& t) {
  std::vector<MoveSite> sites;
  for (const auto& f : t.facets())
    if (auto s = make_site_15(t, {f.begin(), f.end()})) sites.push_back(std::move(*s));
  for (int u = 0; u < t.vertex_count(); ++u)
    if (auto s = make_site_51(t, {u})) sites.push_back(std::move(*s));
  for (const auto& tet : t.tetrahedra())
    if (auto s = make_site_24(t, {tet.begin(), tet.end()})) sites.push_back(std::move(*s));
  for (const auto& e : t.edges())
    if (auto s = make_site_42(t, {e.begin(), e.end()})) sites.push_back(std::move(*s));
  for (const auto& tri : t.triangles())
    if (auto s = make_site_33(t, {tri.begin(), tri.end()})) sites.push_back(std::move(*s));
  return sites;
}

Triangulation4 apply_move(const Triangulation4& t, const MoveSite& site) {
  auto fresh = make_site(t, site.kind, site.support);
  if (!fresh || fresh->remove_facets != site.remove_facets ||
      fresh->insert_facets != site.insert_facets)
    throw std::runtime_error(std::string("apply_move: stale or invalid ") +
                             move_kind_name(site.kind) + " site");
  std::vector<Facet> facets;
  for (const auto& f : t.facets())
    if (!std::binary_search(site.remove_facets.begin(), site.remove_facets.end(), f))
      facets.push_back(f);
  for (const auto& f : site.insert_facets) facets.push_back(f);

  int vertex_count = t.vertex_count();
  if (site.kind == MoveKind::k15) {
    vertex_count += 1;
  } else if (site.kind == MoveKind::k51) {
    const int u = site.support[0];
    for (auto& f : facets)
      for (int& v : f)
        if (v > u) --v;
    vertex_count -= 1;
  }
  Triangulation4 result(vertex_count, std::move(facets));
  if (!validate(result).is_closed_pseudomanifold)
    throw std::logic_error("apply_move: result is not closed");
  return result;
}

WalkResult random_walk(const Triangulation4& t, int steps, std::uint64_t seed,
                       int max_vertices) {
  std::mt19937_64 rng(seed);
  WalkResult out{t, 0, false, {}};
  for (int step = 0; step < steps; ++step) {
    std::vector<MoveSite> sites = enumerate_moves(out.complex);
    if (out.complex.vertex_count() >= max_vertices) {
      sites.erase(std::remove_if(sites.begin(), sites.end(),
                                 [](const MoveSite& s) { return s.kind == MoveKind::k15; }),
                  sites.end());
    }
    if (sites.empty()) {
      out.stalled = true;
      break;
    }
    const MoveSite& pick = sites[static_cast<size_t>(rng() % sites.size())];
    std::ostringstream entry;
    entry << move_kind_name(pick.kind) << " at";
    for (int v : pick.support) entry << " " << v;
    out.log.push_back(entry.str());
    out.complex = apply_move(out.complex, pick);
    ++out.steps_applied;
  }
  return out;
}

}  // namespace ss4
