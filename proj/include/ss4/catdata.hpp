#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ss4/cocycle.hpp"
#include "ss4/cyclotomic.hpp"
#include "ss4/group.hpp"

namespace ss4 {

// Canonical face orders inside a 4-simplex with vertices indexed 0..4
// (ascending): edges and triangles lexicographic, tetrahedra by omitted
// position (the boundary order).
inline constexpr std::array<std::array<int, 2>, 10> kSimplexEdges = {
    {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
inline constexpr std::array<std::array<int, 3>, 10> kSimplexTriangles = {
    {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {0, 2, 4},
     {0, 3, 4}, {1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}};
// Within a tetrahedron (vertices indexed 0..3): same conventions.
inline constexpr std::array<std::array<int, 2>, 6> kTetraEdges = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
inline constexpr std::array<std::array<int, 3>, 4> kTetraTriangles = {
    {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};

/// Edge object ids and triangle label ids of a fully labelled 4-simplex, in
/// the canonical orders above.
struct SimplexLabels {
  std::array<int, 10> edges;
  std::array<int, 10> tris;
  auto operator<=>(const SimplexLabels&) const = default;
};

/// The (6 edges, 4 triangle labels) key of a labelled tetrahedron.
using TetraLabels = std::array<int, 10>;

/// Restriction of simplex labels to the boundary tetrahedron omitting
/// position `omit` (0..4), in the tetrahedron's canonical order.
TetraLabels tetra_labels_of_simplex(const SimplexLabels& labels, int omit);

struct TriLabel {
  int id;
  Cyclotomic dim_q;
  Cyclotomic dim_q_inv;
};

/// Tabulated spherical-2-category data: simple objects with quantum
/// dimensions and duals, admissible triangle labels, 2Hom dimensions and the
/// per-simplex partition tensors Z(+/-). The 2Hilb[G] instance answers
/// twohom/Z queries from the group and cocycle directly; loaded data answers
/// from tables. K is the number of simple objects.
class SphericalData {
 public:
  /// Simple objects are the group elements with dim_q = 1 and dual the group
  /// inverse; (a,b,c) admits exactly one label iff a*b = c; all admissible
  /// 2Hom dimensions are 1; Z(+/-) is the 1x..x1 array holding
  /// zeta_N^(+/- pi(l(ij),l(jk),l(kl),l(lm))). Requires pi to be a cocycle.
  static SphericalData from_group_cocycle(GroupPtr group, FourCochain pi);

  static SphericalData load(const std::string& text);
  static SphericalData load_file(const std::string& path);
  std::string save_text() const;

  int scalar_order() const { return scalar_order_; }
  int object_count() const { return static_cast<int>(objects_.size()); }
  const Cyclotomic& object_dim(int a) const { return objects_[a].dim_q; }
  const Cyclotomic& object_dim_inv(int a) const { return objects_[a].dim_q_inv; }
  int dual(int a) const { return objects_[a].dual; }
  const Cyclotomic& dimension_K() const { return dimension_; }

  /// Basis labels of Hom(c, b (x) a) for the triangle key (a, b, c) =
  /// (e_ij, e_jk, e_ik); empty when the triangle is inadmissible.
  const std::vector<TriLabel>& labels(int a, int b, int c) const;
  const std::map<std::array<int, 3>, std::vector<TriLabel>>& label_table() const {
    return triangle_labels_;
  }

  /// dim 2H of a labelled tetrahedron; 0 when not tabulated/admissible.
  int twohom_dim(const TetraLabels& key) const;

  /// Slot extents of Z for the given simplex labels: the twohom dimensions
  /// of the five boundary tetrahedra in boundary order.
  std::array<int, 5> z_extents(const SimplexLabels& labels) const;

  /// Entries of Z(sign) in row-major order over the canonical slot order
  /// (positive-sign boundary tetrahedra first for Z(+), see engine).
  /// Throws if the labelling is inadmissible or not tabulated.
  std::vector<Cyclotomic> z_entries(int sign, const SimplexLabels& labels) const;

  bool group_backed() const { return group_ != nullptr; }
  const FiniteGroup* group() const { return group_.get(); }
  const FourCochain* cocycle() const { return cocycle_ ? &*cocycle_ : nullptr; }

 private:
  struct ObjectData {
    Cyclotomic dim_q;
    Cyclotomic dim_q_inv;
    int dual;
  };
  struct ZTableEntry {
    std::vector<Cyclotomic> plus;
    std::vector<Cyclotomic> minus;
  };

  SphericalData() = default;
  void finalize_structure();  // inverse/involution/shape checks

  int scalar_order_ = 1;
  std::vector<ObjectData> objects_;
  std::map<std::array<int, 3>, std::vector<TriLabel>> triangle_labels_;
  std::map<TetraLabels, int> twohom_;
  std::map<SimplexLabels, ZTableEntry> ztable_;
  Cyclotomic dimension_;

  // 2Hilb[G] backing; null for table-backed data.
  GroupPtr group_;
  std::optional<FourCochain> cocycle_;
};

struct DataCheckFailure {
  std::string check;     // "lemma5.6", "lemma5.5", "orthogonality", "hexagon"
  std::string location;  // offending labels
};

struct DataReport {
  bool lemma56_ok = true;
  bool lemma55_ok = true;
  bool orthogonality_ok = true;
  bool hexagon_ok = true;
  long lemma55_checked = 0;
  long orthogonality_checked = 0;
  long hexagon_checked = 0;
  std::vector<DataCheckFailure> failures;
  bool all_ok() const { return lemma56_ok && lemma55_ok && orthogonality_ok && hexagon_ok; }
};

/// Exact verification of the consistency identities the invariance proof
/// consumes: (a) the K expression per base object, (b) the quantum-dimension
/// sum rule, (c) the orthogonality of Z(+) and Z(-) with the crossing
/// weights, (d) the 3<->3 hexagon on the two halves of the boundary of a
/// 5-simplex. Exhaustive when the tuple space fits the budget, else seeded
/// uniform sampling.
DataReport verify_data(const SphericalData& data, long sample_budget = 100000,
                       std::uint64_t seed = 0);

}  // namespace ss4
