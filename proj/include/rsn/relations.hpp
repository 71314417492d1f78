#pragma once

#include "rsn/errors.hpp"
#include "rsn/types.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace rsn {

// A finite carrier set with named elements. Element order is the declaration
// order and fixes the bit layout of every Bitset tied to this universe, the
// canonical iteration order, and the order in which witnesses are reported.
class Universe {
public:
  explicit Universe(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  std::size_t index(const std::string& name) const;  // InputError if unknown
  std::optional<std::size_t> find(const std::string& name) const noexcept;

  Bitset empty_set() const { return Bitset(size()); }
  Bitset full_set() const {
    Bitset b(size());
    b.set();
    return b;
  }
  Bitset set_of(const std::vector<std::string>& elements) const;
  std::vector<std::string> render(const Bitset& s) const;
  std::string format(const Bitset& s) const;  // "{a,b}", "{}" for the empty set

  bool operator==(const Universe& other) const { return names_ == other.names_; }

private:
  std::vector<std::string> names_;
  std::map<std::string, std::size_t> index_;
};

enum class ClosureMode { none, reflexive, transitive, reflexive_transitive };

ClosureMode closure_mode_from_string(const std::string& s);  // InputError if unknown
std::string to_string(ClosureMode mode);

using NamedPair = std::pair<std::string, std::string>;

// A binary relation on a universe, stored as successor bitsets R(x) plus the
// derived predecessor bitsets R^{-1}(x).
class BinaryRelation {
public:
  BinaryRelation(Universe universe, std::vector<Bitset> successors);

  const Universe& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return universe_.size(); }

  bool contains(std::size_t x, std::size_t y) const { return succ_.at(x).test(y); }
  const Bitset& successors(std::size_t x) const { return succ_.at(x); }    // R(x)
  const Bitset& predecessors(std::size_t x) const { return pred_.at(x); }  // R^{-1}(x)

  std::vector<NamedPair> pairs() const;  // canonical (row, column) order

  bool is_reflexive() const;
  bool is_transitive() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;
  bool is_left_total() const;
  bool is_quasiorder() const { return is_reflexive() && is_transitive(); }
  bool is_equivalence() const { return is_quasiorder() && is_symmetric(); }
  bool is_partial_order() const { return is_quasiorder() && is_antisymmetric(); }

  // Blocks of the least equivalence containing the relation, ordered by least
  // member. Isolated elements form singleton blocks.
  std::vector<Bitset> connected_components() const;

  // Relation induced on a block: sub-universe keeps the original name order.
  BinaryRelation restrict_to(const Bitset& block) const;

  bool operator==(const BinaryRelation& other) const {
    return universe_ == other.universe_ && succ_ == other.succ_;
  }

private:
  Universe universe_;
  std::vector<Bitset> succ_;
  std::vector<Bitset> pred_;
};

// Builds a relation from named pairs and applies the requested closure (the
// least superset with the property). Unknown element names are rejected.
BinaryRelation build_relation(Universe universe, const std::vector<NamedPair>& pairs,
                              ClosureMode mode);

// Name-keyed lookups; InputError on unknown element names.
Bitset neighborhood(const BinaryRelation& r, const std::string& x);
Bitset inverse_neighborhood(const BinaryRelation& r, const std::string& x);

}  // namespace rsn
