#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ss4 {

using Edge = std::array<int, 2>;
using Triangle = std::array<int, 3>;
using Tetra = std::array<int, 4>;
using Facet = std::array<int, 5>;

/// A closed-candidate triangulated 4-pseudomanifold with totally ordered
/// vertices (the integer order). Facets are stored as strictly increasing
/// 5-tuples; the facet list itself is kept sorted lexicographically so two
/// complexes with equal facet sets compare equal. All face caches (edges,
/// triangles, tetrahedra, incidences) are built at construction and the
/// value is immutable afterwards.
class Triangulation4 {
 public:
  Triangulation4() = default;
  /// Tuples may arrive in any per-tuple order; they are sorted and rejected
  /// on repeats. Throws on duplicate facets, out-of-range or unused vertex
  /// ids.
  Triangulation4(int vertex_count, std::vector<Facet> facets);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<Tetra>& tetrahedra() const { return tetrahedra_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<Edge>& edges() const { return edges_; }

  int edge_id(const Edge& e) const;
  int triangle_id(const Triangle& t) const;
  int tetra_id(const Tetra& t) const;
  bool has_facet(const Facet& f) const;
  int facet_index(const Facet& f) const;  // -1 if absent

  /// Facet incidences of a tetrahedron as (facet index, omitted position);
  /// the omitted position k gives the induced boundary sign (-1)^k.
  const std::vector<std::pair<int, int>>& tetra_incidence(int tetra) const {
    return tetra_incidence_[tetra];
  }

  /// Edge ids of a triangle in the order (ij), (jk), (ik).
  const std::array<int, 3>& triangle_edges(int tri) const { return triangle_edges_[tri]; }

  /// Optional `orient` pin from the file: (facet index, sign).
  const std::optional<std::pair<int, int>>& orient_pin() const { return orient_pin_; }
  void set_orient_pin(int facet, int sign);

  bool operator==(const Triangulation4& rhs) const {
    return vertex_count_ == rhs.vertex_count_ && facets_ == rhs.facets_;
  }

 private:
  void build_caches();

  int vertex_count_ = 0;
  std::vector<Facet> facets_;
  std::vector<Tetra> tetrahedra_;
  std::vector<Triangle> triangles_;
  std::vector<Edge> edges_;
  std::map<Edge, int> edge_ids_;
  std::map<Triangle, int> triangle_ids_;
  std::map<Tetra, int> tetra_ids_;
  std::vector<std::vector<std::pair<int, int>>> tetra_incidence_;
  std::vector<std::array<int, 3>> triangle_edges_;
  std::optional<std::pair<int, int>> orient_pin_;
};

struct ValidationReport {
  bool is_closed_pseudomanifold = false;
  bool is_connected = false;
  std::vector<std::pair<Tetra, int>> offending_tetrahedra;  // (tetra, incidence)
  std::string notes;
};

struct OrientedTriangulation {
  Triangulation4 base;
  std::vector<int> epsilon;  // per-facet sign, +1 or -1
};

ValidationReport validate(const Triangulation4& t);

/// Assigns facet signs by breadth-first propagation so that the two facets
/// incident to each tetrahedron induce it with opposite signs. Requires a
/// closed, connected complex; throws if the propagation contradicts itself
/// (non-orientable). The reference facet receives `reference_sign`.
OrientedTriangulation orient(const Triangulation4& t, int reference_facet,
                             int reference_sign = +1);
/// Reference from the file pin when present, else facet 0 with +1.
OrientedTriangulation orient(const Triangulation4& t);

/// The 6-vertex boundary of the 5-simplex, oriented so the facet omitting
/// vertex i carries sign (-1)^i.
OrientedTriangulation boundary_5simplex();

/// Applies a vertex bijection and re-sorts; throws if perm is not a
/// permutation of 0..v-1.
Triangulation4 relabel(const Triangulation4& t, const std::vector<int>& perm);

/// Line-oriented text format: `vertices <v>`, one `simplex a b c d e` per
/// facet, optional `orient <facet-index> <sign>`, `#` comments. The pin
/// index refers to the file's facet order and is translated to the sorted
/// order on load.
Triangulation4 load_triangulation(const std::string& text);
Triangulation4 load_triangulation_file(const std::string& path);
std::string save_triangulation(const Triangulation4& t);

}  // namespace ss4
