#pragma once

#include "rsn/errors.hpp"
#include "rsn/types.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rsn {

// A finite lattice given by its full order relation. Construct through
// validate_lattice, which proves the order axioms and the existence of all
// binary joins/meets before the type is handed out; FiniteLattice values can
// therefore assume both.
//
// Joins are computed by scanning the common upper bounds for the member with
// the smallest down-set: a least upper bound, when it exists, is the unique
// such minimum, so one subset test decides the scan. Join/meet tables are
// materialized for lattices up to a size threshold.
class FiniteLattice {
public:
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  std::size_t index(const std::string& name) const;  // InputError if unknown

  bool leq(std::size_t a, std::size_t b) const { return up_.at(a).test(b); }
  const Bitset& up_set(std::size_t a) const { return up_.at(a); }
  const Bitset& down_set(std::size_t a) const { return down_.at(a); }

  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t big_join(const Bitset& s) const;  // bottom for the empty set
  std::size_t big_meet(const Bitset& s) const;  // top for the empty set

  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }

  // Hasse edges (a, b) with b covering a, in canonical order.
  std::vector<std::array<std::size_t, 2>> cover_pairs() const;

  // Cached exhaustive distributivity scan; witness is the first failing
  // triple (a,b,c) with a∧(b∨c) ≠ (a∧b)∨(a∧c).
  struct Distributivity {
    bool ok;
    std::array<std::size_t, 3> witness;
  };
  const Distributivity& distributivity() const;

  friend FiniteLattice validate_lattice(std::vector<std::string> names,
                                        std::vector<Bitset> leq_rows);

private:
  FiniteLattice() = default;
  std::size_t join_scan(std::size_t a, std::size_t b, bool want_join) const;

  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
  std::vector<Bitset> up_;    // up_[a] = {b | a ≤ b}
  std::vector<Bitset> down_;  // down_[a] = {b | b ≤ a}
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  std::vector<std::uint32_t> join_tab_, meet_tab_;  // n*n when n <= table limit
  mutable std::optional<Distributivity> distributive_;
};

// Checks reflexivity, antisymmetry, transitivity and the existence of all
// binary lubs/glbs; LatticeError with the first witness (canonical order) on
// failure. leq_rows[a] is the bitset {b | a ≤ b}.
FiniteLattice validate_lattice(std::vector<std::string> names, std::vector<Bitset> leq_rows);

// Reflexive-transitive closure of cover edges (a, b) meaning a < b, as leq
// rows suitable for validate_lattice.
std::vector<Bitset> close_hasse(std::size_t n,
                                const std::vector<std::array<std::size_t, 2>>& covers);

struct JoinIrreducibles {
  Bitset members;                  // over lattice indices
  std::vector<std::size_t> list;   // members in canonical order
  std::vector<Bitset> below;       // below[x] = {j ∈ members | j ≤ x}
};

// x is join-irreducible iff x ≠ bottom and x is not the join of the elements
// strictly below it.
JoinIrreducibles join_irreducibles(const FiniteLattice& l);

// Greatest z with z∧a ≤ b. Exists for every pair exactly when the lattice is
// distributive; LatticeError("unsupported structure...") otherwise.
std::size_t relative_pseudocomplement(const FiniteLattice& l, std::size_t a, std::size_t b);

// Extends an order-isomorphism phi between the join-irreducible posets of L
// and K to the full lattice isomorphism Phi(x) = ⋁ phi(J(x)), and verifies it
// (bijective, preserves joins, meets and bounds). phi[j] gives the K-index
// for join-irreducible j of L and must be SIZE_MAX elsewhere. InputError if
// phi is not an order-isomorphism; LatticeError if the extension fails to be
// an isomorphism (possible only for non-distributive inputs).
std::vector<std::size_t> birkhoff_extend(const FiniteLattice& l, const FiniteLattice& k,
                                         const std::vector<std::size_t>& phi);

inline constexpr std::size_t no_index = static_cast<std::size_t>(-1);

}  // namespace rsn
