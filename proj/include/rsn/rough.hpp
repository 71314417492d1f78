#pragma once

#include "rsn/relations.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace rsn {

/* Approximation pairs and the rough-set family of a relation.
 *
 * For X ⊆ U:  lower(X) = {x | R(x) ⊆ X},  upper(X) = {x | R(x) ∩ X ≠ ∅}.
 * The rough-set family RS collects the distinct pairs (lower(X), upper(X))
 * over all X, ordered coordinatewise by inclusion. For quasiorders RS is a
 * complete sublattice of the pair powerset: joins and meets are coordinatewise
 * unions and intersections.
 */

struct RoughPair {
  Bitset lower;
  Bitset upper;
  bool operator==(const RoughPair&) const = default;
};

inline bool rough_leq(const RoughPair& p, const RoughPair& q) {
  return p.lower.is_subset_of(q.lower) && p.upper.is_subset_of(q.upper);
}

// Canonical listing order: lexicographic on (lower, upper) read as integers.
inline bool rough_canonical_less(const RoughPair& p, const RoughPair& q) {
  if (p.lower != q.lower) return p.lower < q.lower;
  return p.upper < q.upper;
}

Bitset lower_approx(const BinaryRelation& r, const Bitset& x);
Bitset upper_approx(const BinaryRelation& r, const Bitset& x);
RoughPair approximate(const BinaryRelation& r, const Bitset& x);

// Name-keyed variants; InputError on foreign elements.
Bitset lower_approx(const BinaryRelation& r, const std::vector<std::string>& x);
Bitset upper_approx(const BinaryRelation& r, const std::vector<std::string>& x);
RoughPair approximate(const BinaryRelation& r, const std::vector<std::string>& x);

// Join-irreducible elements of RS for a quasiorder, with their class:
//   j_minus  (∅, {x}^▲)            for |R(x)| ≥ 2
//   j_star   (R(x), R(x)^▲)        for R(x) = {x}
//   j_plus   (R(x), R(x)^▲)        for |R(x)| ≥ 2
// j_minus and j_plus elements come in star pairs: (∅,{x}^▲)* = (R(x),R(x)^▲).
enum class JClass { j_minus, j_star, j_plus };

std::string to_string(JClass c);

struct TaggedPair {
  RoughPair pair;
  JClass cls;
  std::size_t witness;  // least x generating the pair
};

// The rough-set family of one fixed relation, as a canonical sorted pair
// list. For quasiorders the family is lattice-closed and join/meet always
// succeed; for merely left-total relations (reachable through decompose) the
// pair family still has (∅,∅) and (U,U) but join/meet may fail, which is
// reported as a LatticeError.
class RoughSetLattice {
public:
  RoughSetLattice(BinaryRelation relation, std::vector<RoughPair> pairs);

  const BinaryRelation& relation() const noexcept { return relation_; }
  const Universe& universe() const noexcept { return relation_.universe(); }
  std::size_t size() const noexcept { return pairs_.size(); }
  const RoughPair& pair(std::size_t i) const { return pairs_.at(i); }
  const std::vector<RoughPair>& pairs() const noexcept { return pairs_; }

  std::optional<std::size_t> find(const RoughPair& p) const noexcept;
  std::size_t index_of(const RoughPair& p) const;  // InputError if absent

  bool leq(std::size_t i, std::size_t j) const { return rough_leq(pairs_.at(i), pairs_.at(j)); }
  std::size_t join(std::size_t i, std::size_t j) const;  // coordinatewise union
  std::size_t meet(std::size_t i, std::size_t j) const;  // coordinatewise intersection
  std::size_t bottom() const;  // (∅,∅)
  std::size_t top() const;     // (U,U)

  std::string pair_name(std::size_t i) const;  // "({a},{a,b})"

private:
  BinaryRelation relation_;
  std::vector<RoughPair> pairs_;
};

// Enumerates RS by scanning all 2^|U| subsets. Exact but bounded: universes
// larger than max_universe raise CapacityError (use the generated enumeration
// instead). Requires a quasiorder and a non-empty universe.
RoughSetLattice enumerate_rs_bruteforce(const BinaryRelation& r, std::size_t max_universe = 20);

// Join-irreducibles of RS straight from the relation, tagged by class.
std::vector<TaggedPair> rs_join_irreducibles(const BinaryRelation& r);

// Enumerates RS as joins of down-closed sets of join-irreducibles; no
// universe bound. Agrees with the brute-force scan on every quasiorder.
RoughSetLattice enumerate_rs_generated(const BinaryRelation& r);

// De Morgan negation of RS: (A,B) ↦ (B', A'). The result is again in RS.
RoughPair rs_negation(const RoughSetLattice& rs, const RoughPair& p);

// Stone pseudocomplement (greatest q with p∧q = 0) and its dual (least q with
// p∨q = 1); both have equal coordinates. Requires an equivalence relation.
struct StonePair {
  RoughPair pseudocomplement;
  RoughPair dual_pseudocomplement;
};
StonePair stone_pseudocomplements(const RoughSetLattice& rs, const RoughPair& p);

// Splits a left-total relation into connected components and the rough-set
// family of each; checks |RS(R)| = ∏ |RS(component)|.
struct Component {
  Bitset block;
  RoughSetLattice rs;
};
std::vector<Component> decompose(const BinaryRelation& r, std::size_t max_universe = 20);

}  // namespace rsn
