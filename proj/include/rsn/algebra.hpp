#pragma once

#include "rsn/lattice.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace rsn {

enum class CheckStatus { pass, fail, skipped };

std::string to_string(CheckStatus s);

// Outcome of one law check. Witnesses are element names, first failure in
// canonical element order, so identical inputs yield identical reports.
struct LawCheck {
  std::string law;
  CheckStatus status = CheckStatus::pass;
  std::vector<std::string> witness;
  std::string note;

  bool ok() const noexcept { return status == CheckStatus::pass; }
};

// A bounded lattice with a unary operation intended as a De Morgan negation.
// Construction checks only that the map is total; the laws are verified by
// the functions below and reported, never assumed.
class DeMorganAlgebra {
public:
  DeMorganAlgebra(FiniteLattice lattice, std::vector<std::size_t> negation);

  const FiniteLattice& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return lattice_.size(); }
  std::size_t neg(std::size_t x) const { return negation_.at(x); }
  const std::vector<std::size_t>& negation() const noexcept { return negation_; }
  const std::string& name(std::size_t x) const { return lattice_.name(x); }

private:
  FiniteLattice lattice_;
  std::vector<std::size_t> negation_;
};

LawCheck verify_involution(const DeMorganAlgebra& a);  // c(c(x)) = x
LawCheck verify_antitone(const DeMorganAlgebra& a);    // x ≤ y iff c(y) ≤ c(x)
std::vector<LawCheck> verify_demorgan(const DeMorganAlgebra& a);

// x ∧ c(x) ≤ y ∨ c(y) for all x, y.
LawCheck verify_kleene(const DeMorganAlgebra& a);

// The cones A⁻ = {x ∧ c(x)} and A⁺ = {x ∨ c(x)} with α = ⋁A⁻ and β = ⋀A⁺.
// Pre: Kleene verified. The closed forms A⁻ = (α], A⁺ = [β) and c(α) = β are
// theorems at that point and are asserted (InternalError if violated).
struct KleeneCones {
  Bitset lower_cone;  // A⁻ as an index set
  Bitset upper_cone;  // A⁺
  std::size_t alpha;
  std::size_t beta;
};
KleeneCones cones(const DeMorganAlgebra& a);

// j* = ⋀{x | x ≰ c(j)} for join-irreducible j; InputError otherwise.
std::size_t star(const DeMorganAlgebra& a, std::size_t j);

// The star map on all of J with the induced three-way split:
//   j_minus = {j < j*}, j_star = {j = j*}, j_plus = {j > j*}.
// Pre: De Morgan + Kleene + distributive verified. Under those the star map
// is an order-reversing involution of J, every j is comparable to j*, and
// j_minus = J ∩ A⁻; all of this is asserted and a violation (only reachable
// by skipping the preconditions) raises PreconditionError naming the law.
struct JPartition {
  JoinIrreducibles j;
  std::vector<std::size_t> star_map;  // indexed by lattice element, no_index off J
  Bitset j_minus, j_star, j_plus;     // over lattice indices
};
JPartition partition_j(const DeMorganAlgebra& a);

// c(x) = ⋁{j ∈ J | j* ≰ x} for every x. Pre: De Morgan + distributive.
LawCheck verify_star_closed_form(const DeMorganAlgebra& a);

// For every p, q ∈ J with p*, q* ≤ p, q there is k ∈ J with
// p*, q* ≤ k ≤ p, q. Witness = first failing (p, q); interpolants records a
// chosen k for each admissible pair (p ≤ q in index order).
struct ConditionM {
  bool ok = true;
  std::array<std::size_t, 2> witness{};
  std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> interpolants;
};
ConditionM condition_m(const DeMorganAlgebra& a);

// Prime-filter interpolation test. In a finite distributive lattice the prime
// filters are exactly the [j) for join-irreducible j, and g([j)) = [j*).
// Interpolation holds iff for all [p), [q) with p* ≤ p, q* ≤ q and q* ≤ p:
// a ∧ b ≰ c(a) ∨ c(b) for every a ≥ p, b ≥ q. Witness = (p, q, a, b).
// Independent of condition_m; the two verdicts must agree on finite
// distributive Kleene algebras.
struct InterpolationCheck {
  bool ok = true;
  std::array<std::size_t, 4> witness{};
};
InterpolationCheck interpolation_prime_filters(const DeMorganAlgebra& a);

// a → b = a ⇒ (c(a) ∨ b) with ⇒ the relative pseudocomplement.
std::size_t weak_impl(const DeMorganAlgebra& a, std::size_t x, std::size_t y);
std::vector<std::size_t> weak_impl_table(const DeMorganAlgebra& a);  // n*n row-major

// The weak-implication equations, checked exhaustively:
//   n1  a → a = 1
//   n2  (c(a) ∨ b) ∧ (a → b) = c(a) ∨ b
//   n3  a ∧ (a → b) = a ∧ (c(a) ∨ b)
//   n4  a → (b ∧ c) = (a → b) ∧ (a → c)
//   n5  (a ∧ b) → c = a → (b → c)
std::vector<LawCheck> verify_nelson(const DeMorganAlgebra& a);

// Search for unary Δ satisfying
//   c(x) ∨ Δ(x) = 1,  x ∧ c(x) = c(x) ∧ Δ(x),  Δ(x ∧ y) = Δ(x) ∧ Δ(y).
// Backtracking over per-element candidate sets in a linear-extension order,
// so the pair law can be checked incrementally. All solutions are reported up
// to `cap`; `exhausted` is false iff the search stopped at the cap.
struct DeltaSearch {
  std::vector<std::vector<std::size_t>> deltas;
  bool exhausted = true;
  std::size_t cap = 0;
};
DeltaSearch find_deltas(const DeMorganAlgebra& a, std::size_t cap = 8);

// First solution; tries the closed-form candidate Δ(x) = c(x) ⇒ x before
// falling back to the backtracking search.
std::optional<std::vector<std::size_t>> find_delta(const DeMorganAlgebra& a);

// Ł1 c(c(x)) = x, Ł2 c(x∧y) = c(x)∨c(y), Ł3 c(x)∨Δ(x) = 1,
// Ł4 x∧c(x) = c(x)∧Δ(x), Ł5 Δ(x∧y) = Δ(x)∧Δ(y), for a supplied Δ.
std::vector<LawCheck> verify_lukasiewicz(const DeMorganAlgebra& a,
                                         const std::vector<std::size_t>& delta);

// Full report; later checks that only make sense once earlier ones hold are
// marked skipped instead of being forced. The two independent Nelson routes
// (equations vs. condition (M) vs. prime-filter interpolation) are each run
// and their agreement is itself reported as a check.
struct AlgebraReport {
  std::vector<LawCheck> checks;
  bool demorgan = false;
  bool kleene = false;
  bool distributive = false;
  bool nelson = false;
  bool lukasiewicz = false;
  std::optional<std::vector<std::size_t>> delta;

  const LawCheck* find(const std::string& law) const;
};
AlgebraReport verify_algebra(const DeMorganAlgebra& a);

}  // namespace rsn
