#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ss4/complex.hpp"

namespace ss4 {

enum class MoveKind { k15, k51, k24, k42, k33 };

const char* move_kind_name(MoveKind k);          // "1-5", "5-1", ...
MoveKind move_kind_from_name(const std::string& name);

/// A validated bistellar rewrite site. `support` identifies the site (facet,
/// vertex, tetrahedron, edge or triangle depending on kind); the previews
/// list the exact facets removed and inserted, always totalling six.
struct MoveSite {
  MoveKind kind;
  std::vector<int> support;
  std::vector<Facet> remove_facets;
  std::vector<Facet> insert_facets;
};

/// All sites whose application yields a valid simplicial complex: degenerate
/// candidates (a replacement facet or a required new face already present)
/// are rejected rather than performed on a multicomplex.
std::vector<MoveSite> enumerate_moves(const Triangulation4& t);

/// Applies a site produced by enumerate_moves on this complex. 1-5 appends
/// the new vertex with id v; 5-1 removes its vertex and renumbers the ids
/// above it downward. Throws on stale or invalid sites; the result always
/// validates as closed.
Triangulation4 apply_move(const Triangulation4& t, const MoveSite& site);

struct WalkResult {
  Triangulation4 complex;
  int steps_applied = 0;
  bool stalled = false;  // no applicable move before `steps` ran out
  std::vector<std::string> log;
};

/// Seeded uniform walk over valid sites; 1-5 moves are filtered out once
/// vertex_count reaches max_vertices. Deterministic for a fixed seed.
WalkResult random_walk(const Triangulation4& t, int steps, std::uint64_t seed,
                       int max_vertices);

}  // namespace ss4
