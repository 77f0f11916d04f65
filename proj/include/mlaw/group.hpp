#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mlaw {

using Element = int;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Finite group as a dense multiplication table. Element 0 is the identity.
/// Construction validates the group axioms (identity, associativity,
/// inverses) and that the declared generators generate, so a FiniteGroup
/// value is always a group. Values are immutable and safe to share.
class FiniteGroup {
public:
  FiniteGroup(int order, std::vector<Element> table,
              std::vector<std::string> names, std::vector<Element> generators);

  int order() const { return order_; }
  Element mul(Element a, Element b) const { return table_[a * order_ + b]; }
  Element inv(Element a) const { return inverse_[a]; }

  /// ^y x = y x y^-1
  Element conj(Element y, Element x) const { return mul(mul(y, x), inv(y)); }
  /// [x, y] = x y x^-1 y^-1
  Element comm(Element x, Element y) const {
    return mul(mul(x, y), mul(inv(x), inv(y)));
  }

  Element power(Element a, long e) const;
  int element_order(Element a) const;
  bool is_abelian() const;

  const std::vector<Element>& generators() const { return generators_; }
  const std::string& name(Element a) const { return names_[a]; }

private:
  int order_;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<std::string> names_;
  std::vector<Element> generators_;
};

GroupPtr make_group(int order, std::vector<Element> table,
                    std::vector<std::string> names,
                    std::vector<Element> generators);

struct Subgroup {
  GroupPtr parent;
  std::vector<Element> members;  // sorted, contains 0
  bool normal = false;

  int order() const { return static_cast<int>(members.size()); }
  bool contains(Element x) const;
};

struct GroupHom {
  GroupPtr domain;
  GroupPtr codomain;
  std::vector<Element> images;  // per domain element

  Element operator()(Element x) const { return images[x]; }
};

/// Invariant-factor decomposition d1 | d2 | ... | dk of a finite abelian
/// group, each di > 1. The empty list denotes the trivial group.
struct AbelianInvariants {
  std::vector<int> divisors;

  bool operator==(const AbelianInvariants&) const = default;
};

std::string to_string(const AbelianInvariants& inv);

// --- permutations (input plumbing for group_from_permutations) ---

using Permutation = std::vector<int>;  // images of 0..m-1

/// Parse cycle notation such as "(1 2)(3 4)"; points are 1-based. The
/// empty string and "()" denote the identity. Throws ParseError.
Permutation parse_cycles(std::string_view text);
std::string cycle_string(const Permutation& p);
Permutation compose_permutations(const Permutation& a, const Permutation& b);

// --- construction ---

inline constexpr int kDefaultMaxOrder = 64;
inline constexpr int kDefaultIsoBound = 64;

/// Closure of the given permutations under composition. Element 0 is the
/// identity, names are cycle notation. Throws LimitError if the closure
/// exceeds max_order.
GroupPtr group_from_permutations(const std::vector<Permutation>& gens,
                                 int max_order = kDefaultMaxOrder);

enum class Family {
  dihedral,        // D_n, order 2n, <a,b | a^2 = b^n = 1, aba = b^-1>
  quaternion,      // Q_n, order 4n, <x,y | x^2 = y^n, x y x^-1 = y^-1>
  symmetric,       // Sym(n)
  alternating,     // A_n
  cyclic_product,  // Z_m x Z_n
  sl23,            // SL(2,3), order 24
  klein,           // V_4
};

GroupPtr builtin_family(Family family, int p1 = 0, int p2 = 0);

GroupPtr dihedral_group(int n);
GroupPtr quaternion_group(int n);
GroupPtr symmetric_group(int n);
GroupPtr alternating_group(int n);
GroupPtr cyclic_product_group(int m, int n);
GroupPtr cyclic_group(int n);
GroupPtr sl23_group();
GroupPtr klein_group();

// --- subgroups and quotients ---

/// Smallest subgroup of g containing seed. Computes normality.
Subgroup subgroup_generated(GroupPtr g, std::span<const Element> seed);

/// [G, G], the subgroup generated by all commutators. Always normal.
Subgroup derived_subgroup(GroupPtr g);

Subgroup center(GroupPtr g);

/// A subgroup reindexed as a FiniteGroup of its own, with maps between the
/// two index spaces.
struct SubgroupGroup {
  GroupPtr group;
  std::vector<Element> to_parent;  // subgroup element -> parent element
  std::vector<int> from_parent;    // parent element -> subgroup element or -1
};

SubgroupGroup subgroup_group(const Subgroup& s);

struct Quotient {
  GroupPtr group;
  GroupHom projection;  // g -> g/n, surjective, kernel exactly n
};

/// G/N for a normal subgroup N. Throws InputError if N is not normal.
Quotient quotient_group(GroupPtr g, const Subgroup& n);

/// Invariant factors of g when abelian, of G/[G,G] otherwise. Computed by
/// repeatedly splitting off a cyclic factor of maximal order.
AbelianInvariants abelian_invariants(GroupPtr g);

// --- words and homomorphisms ---

/// Breadth-first canonical words over a fixed generator list: every element
/// x != 0 satisfies x == mul(parent[x], gens[via[x]]) with parent[x] visited
/// earlier. Deterministic for a fixed generator order. Throws InputError if
/// the generators do not generate.
struct CanonicalWords {
  std::vector<Element> order;   // BFS visit order, order[0] == 0
  std::vector<Element> parent;  // parent[x], -1 for the identity
  std::vector<int> via;         // index into the generator list
};

CanonicalWords canonical_words(const FiniteGroup& g,
                               std::span<const Element> gens);

/// Extend generator images along canonical words. The result maps the
/// identity to the identity by construction; it need not be a homomorphism.
std::vector<Element> extend_images(const FiniteGroup& cod,
                                   const CanonicalWords& words,
                                   std::span<const Element> gen_images);

/// Full pairwise homomorphism check images[x*y] == images[x]*images[y].
bool is_homomorphism(const FiniteGroup& dom, const FiniteGroup& cod,
                     const std::vector<Element>& images);

/// Extends generator images to a homomorphism if one exists; empty result
/// if the extension fails the pairwise check. Throws InputError if dom_gens
/// does not generate dom.
std::optional<GroupHom> hom_from_generator_images(
    GroupPtr dom, std::span<const Element> dom_gens,
    std::span<const Element> images, GroupPtr cod);

/// Greedy small generating set: repeatedly adjoin the element of maximal
/// order outside the current closure (smallest index on ties).
std::vector<Element> small_generating_set(const FiniteGroup& g);

/// All homomorphisms dom -> cod, by backtracking over generator images with
/// order-divisibility pruning. Sorted lexicographically by image vector.
std::vector<GroupHom> enumerate_homs(GroupPtr dom, GroupPtr cod);

/// Size of the conjugacy class of each element.
std::vector<int> conjugacy_class_sizes(const FiniteGroup& g);

/// Isomorphism test by backtracking over generator images with order and
/// class-size pruning. Throws LimitError above max_order.
bool are_isomorphic(const FiniteGroup& a, const FiniteGroup& b,
                    int max_order = kDefaultIsoBound);

/// tau(n), the number of positive divisors.
int divisor_count(int n);

/// Human-readable identification: abelian groups by invariant factors
/// ("Z2 x Z4"), nonabelian ones by matching the builtin family catalog
/// ("Q:2", "S:4", "SL23"); unmatched groups get an order and element-order
/// profile certificate.
std::string identify_group(const FiniteGroup& g, int iso_bound = kDefaultIsoBound);

}  // namespace mlaw
