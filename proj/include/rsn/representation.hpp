#pragma once

#include "rsn/algebra.hpp"
#include "rsn/rough.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace rsn {

/* From a finite Nelson algebra A back to a rough-set algebra.
 *
 * Take the join-irreducibles J of A as a fresh universe, fold the star pairs
 * with ρ(j) = j for j ∈ J⁻ ∪ J* and ρ(j) = j* for j ∈ J⁺, and set
 * x R y iff ρ(x) ≤ ρ(y). R is a quasiorder, the map
 *   φ(x) = (∅, {x}^▲)          for x ∈ J⁻
 *   φ(x) = (R(x), R(x)^▲)      otherwise
 * is a star-compatible order-isomorphism J(A) → J(RS(R)), and its Birkhoff
 * extension Φ is an isomorphism of the whole algebras. Every step here is
 * verified on the instance, not trusted.
 */

// The materialized RS of a quasiorder as a plain lattice / De Morgan algebra,
// with elements named by their pairs ("({a},{a,b})").
FiniteLattice to_finite_lattice(const RoughSetLattice& rs);
DeMorganAlgebra rs_algebra(const RoughSetLattice& rs);

// The same algebra with opaque element names prefix0..prefixN-1 (canonical
// pair order), for treating a rough-set algebra as an abstract input.
DeMorganAlgebra as_abstract(const RoughSetLattice& rs, const std::string& prefix = "e");

// R_J alone (universe = join-irreducibles of A, x R y iff ρ(x) ≤ ρ(y)).
// Pre: De Morgan + Kleene + distributive (enough for the star partition);
// PreconditionError otherwise.
BinaryRelation build_rj(const DeMorganAlgebra& a);

struct Representation {
  AlgebraReport report;               // of the input algebra
  std::vector<std::size_t> j_list;    // algebra indices of J, canonical order
  std::vector<std::size_t> rho;       // per J position: algebra index of ρ(j)
  Universe universe;                  // J element names
  BinaryRelation relation;            // R_J
  std::vector<RoughPair> phi;         // per J position
  RoughSetLattice rs;                 // RS(R_J)
  std::vector<std::size_t> iso;       // Φ: algebra index → RS index
  struct Verdicts {
    bool quasiorder = false;        // R_J is a quasiorder
    bool order_iso = false;         // φ: J(A) → J(RS) order-isomorphism
    bool star_compatible = false;   // φ(j*) = φ(j)* (RS star computed independently)
    bool classes_match = false;     // φ maps J⁻/J*/J⁺ onto the RS-side classes
    bool algebra_iso = false;       // Φ bijective, preserves ∨ ∧ c → 0 1
    bool minimality = false;        // kernel classes of R_J are exactly {j, j*}
    bool all() const {
      return quasiorder && order_iso && star_compatible && classes_match && algebra_iso &&
             minimality;
    }
  } verdicts;
};

// Full pipeline. Pre: the algebra must verify as a Nelson algebra
// (PreconditionError naming the first failed law otherwise) and must have at
// least two elements, since rough-set universes are non-empty
// (PreconditionError "nontrivial"). The verdict flags are computed honestly
// and a theorem-guaranteed step that fails to verify is reported false, not
// patched; the one exception is R_J itself, whose failure to be a quasiorder
// would leave nothing to enumerate and raises InternalError.
Representation represent(const DeMorganAlgebra& a);

// Four equivalent ways for the construction to degenerate, each evaluated
// independently; InternalError if they disagree. Pre: as represent().
//   (a) R_J is a partial order          (b) R_J is the identity
//   (c) RS(R_J) is the powerset algebra of J
//   (d) A is a Boolean algebra (c complements)
struct BooleanCharacterization {
  bool r_partial_order = false;
  bool r_identity = false;
  bool rs_powerset = false;
  bool algebra_boolean = false;
  bool all() const { return r_partial_order && r_identity && rs_powerset && algebra_boolean; }
};
BooleanCharacterization boolean_characterization(const DeMorganAlgebra& a);

// Kernel classes of R_J (mutual reachability) must be {j, j*}.
LawCheck minimality_check(const Representation& r);

// A finite Nelson algebra admits Δ iff R_J is an equivalence. Pre: Δ exists
// (PreconditionError "semisimple" otherwise); the check then asserts that
// R_J is an equivalence.
LawCheck semisimple_check(const DeMorganAlgebra& a);

}  // namespace rsn
