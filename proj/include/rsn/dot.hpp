#pragma once

#include "rsn/lattice.hpp"
#include "rsn/relations.hpp"
#include "rsn/rough.hpp"

#include <string>

namespace rsn {

// Graphviz views. Reflexive loops are always omitted and transitive edges
// are reduced, so closing the drawn edges reflexively-transitively restores
// the exported order exactly (the round-trip property the tests rely on).

// Quasiorder drawing: each mutual-reachability class of size k ≥ 2 appears
// as a directed k-cycle, classes are connected by the covering edges of the
// quotient order between class representatives. InputError if the relation
// is not a quasiorder.
std::string relation_dot(const BinaryRelation& r, const std::string& graph_name = "relation");

// Hasse diagram, bottom-up.
std::string lattice_dot(const FiniteLattice& l, const std::string& graph_name = "lattice");
std::string rs_dot(const RoughSetLattice& rs, const std::string& graph_name = "rs");

}  // namespace rsn
