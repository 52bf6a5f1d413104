#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ss4/catdata.hpp"
#include "ss4/cocycle.hpp"
#include "ss4/complex.hpp"
#include "ss4/cyclotomic.hpp"

namespace ss4 {

/// An admissible assignment of simple objects to edges and basis labels to
/// triangles, indexed by the complex's edge/triangle ids. face_choice holds
/// positions into the triangle's label list.
struct Labelling {
  std::vector<int> edge_label;
  std::vector<int> face_choice;
};

/// Multi-index array of exact scalars with slots identified by (tetrahedron,
/// direction). Entries are row-major over the slot order.
struct ExactTensor {
  struct Slot {
    Tetra tetra;
    bool out;
    int dim;
  };
  std::vector<Slot> slots;
  std::vector<Cyclotomic> entries;

  long size() const;
  /// Entries permuted into canonical slot order (by tetra, in before out).
  ExactTensor sorted() const;
};

/// Contraction of all slots shared by a and b whose tetra lies in `join`
/// (paired out-to-in; throws on same-direction collisions).
ExactTensor contract_pair(const ExactTensor& a, const ExactTensor& b,
                          const std::vector<Tetra>& join);

/// The partition tensor a labelled oriented 4-simplex contributes.
struct PartitionTensor {
  Facet simplex;
  int sign;
  ExactTensor tensor;
};

using EdgeLabelFn = std::function<int(const Edge&)>;
using TriLabelFn = std::function<int(const Triangle&)>;  // basis label id

/// Z(sign) of one facet as a tensor: slots are the five boundary tetrahedra;
/// a tetrahedron with induced boundary sign s is an out-slot iff sign*s = +1.
PartitionTensor facet_tensor(const SphericalData& data, const Facet& facet, int sign,
                             const EdgeLabelFn& edge_label, const TriLabelFn& tri_label);

PartitionTensor simplex_tensor(const SphericalData& data, const OrientedTriangulation& t,
                               const Labelling& l, int facet_index);

/// Fully greedy contraction of the facet tensors of a patch, joining every
/// tetrahedron shared by two patch facets; slots of unshared tetrahedra stay
/// open. For a closed complex the result is a scalar.
ExactTensor contract_patch(const SphericalData& data, const std::vector<Facet>& facets,
                           const std::vector<int>& eps, const EdgeLabelFn& edge_label,
                           const TriLabelFn& tri_label);

/// Streams every admissible labelling; edge labels are assigned in a
/// spanning-tree-guided order with empty-triangle pruning, then face labels
/// range over each triangle's basis list. Return false from the callback to
/// stop early.
void for_each_labelling(const Triangulation4& t, const SphericalData& data,
                        const std::function<bool(const Labelling&)>& fn);

/// Number of admissible labellings (edge and face choices both counted).
long count_labellings(const Triangulation4& t, const SphericalData& data);

/// The scalar Z(M,T,l): one partition tensor per facet, wired through the
/// tetrahedra and fully contracted.
Cyclotomic contract_network(const OrientedTriangulation& t, const SphericalData& data,
                            const Labelling& l);

/// Edge/face quantum-dimension weight of one labelling:
/// prod_e dim_q(l(e))^-1 * prod_f dim_q(l(f)).
Cyclotomic labelling_dim_weight(const Triangulation4& t, const SphericalData& data,
                                const Labelling& l);

struct EngineOptions {
  int workers = 1;
};

/// The state sum K^-v sum_l Z(M,T,l) prod_e dim_q^-1 prod_f dim_q, exact.
Cyclotomic invariant(const OrientedTriangulation& t, const SphericalData& data,
                     const EngineOptions& opts = {});

/// 2Hilb[G] fast path: flat colorings enumerated by forced propagation, the
/// per-labelling weight reduced to an exponent sum. Equals invariant() on
/// from_group_cocycle(G, pi) exactly.
Cyclotomic invariant_group_fast(const OrientedTriangulation& t, const FiniteGroup& group,
                                const FourCochain& pi, const EngineOptions& opts = {});

/// Shared-enumeration variant: one pass over the flat colorings evaluates
/// every cocycle in the batch (all over the same group).
std::vector<Cyclotomic> invariant_group_fast_batch(const OrientedTriangulation& t,
                                                   const FiniteGroup& group,
                                                   const std::vector<const FourCochain*>& pis,
                                                   const EngineOptions& opts = {});

inline constexpr std::uint64_t kDefaultOracleBudget = std::uint64_t{1} << 25;

/// Brute force over all |G|^edges edge colorings, filtered by flatness on
/// every triangle; no backtracking or pruning. Throws if |G|^edges exceeds
/// the budget.
Cyclotomic oracle_invariant(const OrientedTriangulation& t, const FiniteGroup& group,
                            const FourCochain& pi,
                            std::uint64_t budget = kDefaultOracleBudget);

/// Flat colorings seen by the oracle (diagnostic for tests).
long oracle_flat_count(const OrientedTriangulation& t, const FiniteGroup& group,
                       std::uint64_t budget = kDefaultOracleBudget);

}  // namespace ss4
