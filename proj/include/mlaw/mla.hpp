#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "mlaw/group.hpp"
#include "mlaw/wedge.hpp"

namespace mlaw {

/// A candidate multiplicative Lie algebra structure on a group: the full
/// |G| x |G| table of the second binary operation *.
struct MlaStructure {
  GroupPtr base;
  std::vector<Element> star;  // star[x * |G| + y] = x * y

  Element star_of(Element x, Element y) const {
    return star[x * base->order() + y];
  }

  bool same_table(const MlaStructure& other) const { return star == other.star; }
};

/// Result of checking the five structure axioms:
///   (1) a*a = 1
///   (2) a*(bc) = (a*b) ^b(a*c)
///   (3) (ab)*c = ^a(b*c) (a*c)
///   (4) ((a*b)*^b c)((b*c)*^c a)((c*a)*^a b) = 1
///   (5) ^c(a*b) = ^c a * ^c b
struct AxiomReport {
  std::array<bool, 5> axiom_ok{};
  // (axiom id 1..5, witness triple) for the lowest failing axiom
  std::optional<std::pair<int, std::array<Element, 3>>> first_violation;

  bool valid() const {
    for (bool ok : axiom_ok)
      if (!ok) return false;
    return true;
  }
};

/// Check all five axioms over every element pair/triple. Throws InputError
/// on a shape mismatch or out-of-range entry.
AxiomReport verify_axioms(const FiniteGroup& g, const std::vector<Element>& star);

/// The table x*y = phi(x wedge y) of a homomorphism phi: W -> G. Makes no
/// validity claim; callers filter by check_wedge_conditions or verify_axioms.
MlaStructure structure_from_hom(const WedgeSquare& ws, const GroupHom& phi);

/// Both conditions under which phi: W -> G induces a structure: the normal
/// subgroup J generated by the Jacobi-defect elements
///   (phi(x^y) ^ ^y z)(phi(y^z) ^ ^z x)(phi(z^x) ^ ^x y)
/// lies in ker phi (checked on the normal generators), and phi is
/// equivariant: ^z phi(x^y) = phi(^z x ^ ^z y).
bool check_wedge_conditions(const WedgeSquare& ws, const GroupHom& phi);

struct EnumerationStats {
  long hom_candidates = 0;
  long j_rejected = 0;
  long equivariance_rejected = 0;
  long duplicate_tables = 0;
};

/// All valid structures on ws.base found by filtering Hom(W, G) through
/// check_wedge_conditions. Every returned table passes verify_axioms
/// (asserted); tables are deduplicated and sorted lexicographically.
std::vector<MlaStructure> enumerate_structures_from_square(
    const WedgeSquare& ws, int threads = 1, EnumerationStats* stats = nullptr);

/// Convenience wrapper: exterior_square followed by
/// enumerate_structures_from_square.
std::vector<MlaStructure> enumerate_structures_via_wedge(
    GroupPtr g, const EnumerationLimits& limits = {}, int threads = 1,
    EnumerationStats* stats = nullptr);

/// Independent enumeration that never touches the wedge construction: seed
/// star values on unordered generator pairs (s*s = 1 and t*s = (s*t)^-1 are
/// forced), extend each seed to a full table along canonical words with
/// axioms (2) and (3), and keep the tables that pass verify_axioms. Throws
/// LimitError if the group needs more than max_generators generators.
std::vector<MlaStructure> enumerate_structures_direct(GroupPtr g,
                                                      int max_generators = 3,
                                                      int threads = 1);

/// All homomorphisms f: [G,G] -> G (domain as its own FiniteGroup via
/// subgroup_group) with f(^g h) = ^g f(h) for all g in G.
std::vector<GroupHom> enumerate_equivariant_homs(GroupPtr g);

/// The ideal G*G: subgroup generated by all star values. Normality and the
/// ideal property are asserted (both follow from the axioms). Throws
/// InputError if the structure fails the axioms.
Subgroup star_ideal(const MlaStructure& s);

/// The homomorphism W -> G with a^b -> a*b induced by a valid structure.
/// Asserts the round trip structure_from_hom(ws, result) == s.
GroupHom induced_hom_from_structure(const WedgeSquare& ws, const MlaStructure& s);

/// Isomorphism-class descriptor of an ideal G*G.
struct IdealDescriptor {
  int order = 1;
  bool abelian = true;
  AbelianInvariants invariants;  // meaningful when abelian
  std::string name;              // identify_group output
};

/// An isomorphism class of ideals G*G with its representative structures,
/// the unit of distinctness for counting structures.
struct StructureClass {
  IdealDescriptor ideal;
  std::vector<MlaStructure> representatives;
  bool trivial_class = false;     // ideal is the trivial subgroup
  bool commutator_class = false;  // some representative's ideal equals [G,G]
};

/// Partition valid tables by isomorphism class of their ideal. Classes are
/// sorted by (ideal order, invariants, name).
std::vector<StructureClass> classify_structures(
    GroupPtr g, const std::vector<MlaStructure>& tables);

/// A group is Lie simple when only the two canonical structures exist up to
/// the ideal-isomorphism distinctness: every class is the trivial class or
/// the commutator class.
bool is_lie_simple(GroupPtr g, const EnumerationLimits& limits = {},
                   int threads = 1);

}  // namespace mlaw
