#pragma once

#include <vector>

#include "mlaw/coset.hpp"
#include "mlaw/group.hpp"

namespace mlaw {

enum class SquareKind { tensor, exterior };

/// The nonabelian tensor or exterior square W of a group G, together with
/// the pair map (a, b) -> a^b (or a~b) into W and the conjugation action of
/// G on W. Built from the defining presentation with one generator per
/// ordered pair of elements of G; all defining relations and the
/// automorphism property of the action are verified after construction.
struct WedgeSquare {
  GroupPtr base;    // G
  GroupPtr square;  // W
  SquareKind kind;
  std::vector<Element> pair_map;  // |G|^2: pair_map[a*|G|+b] = a wedge b
  std::vector<Element> action;    // |G|*|W|: action[z*|W|+w] = ^z w

  Element wedge(Element a, Element b) const {
    return pair_map[a * base->order() + b];
  }
  Element act(Element z, Element w) const {
    return action[z * square->order() + w];
  }
};

/// Defining presentation of the square: generators t[a,b] for all ordered
/// pairs, relators t[ab,c] (t[^a b, ^a c] t[a,c])^-1 and
/// t[a,bc] (t[a,b] t[^b a, ^b c])^-1 for all a, b, c; the exterior kind adds
/// t[a,a] and t[a,b] t[b,a].
Presentation wedge_presentation(const FiniteGroup& g, SquareKind kind);

/// For each generator of W, the first pair (a, b) mapping onto it. Maps that
/// are defined on pairs (chi, the action, the hom induced by a structure)
/// extend along canonical words of W through these representatives.
std::vector<std::pair<Element, Element>> generator_pairs(const WedgeSquare& ws);

WedgeSquare tensor_square(GroupPtr g, const EnumerationLimits& limits = {});
WedgeSquare exterior_square(GroupPtr g, const EnumerationLimits& limits = {});

/// Recompute the conjugation action table of ws from its pair map and store
/// it in ws.action: ^z (a wedge b) = (^z a) wedge (^z b), extended along
/// canonical words of W and verified to be a compositional automorphism
/// action. Square builders call this; exposed for direct use.
const std::vector<Element>& conjugation_action(WedgeSquare& ws);

struct SchurData {
  GroupHom chi;           // W -> G, a wedge b -> [a, b]
  Subgroup multiplier;    // ker chi, the Schur multiplier M(G), subgroup of W
  AbelianInvariants invariants;  // invariants of M(G)
};

/// The commutator homomorphism chi of the exterior square and its kernel.
/// chi is verified to be a homomorphism onto [G, G]; exactness
/// |W| = |M(G)| * |[G,G]| and centrality of the kernel are asserted.
SchurData commutator_hom(const WedgeSquare& ws);

}  // namespace mlaw
