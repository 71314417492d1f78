#pragma once

#include "rsn/relations.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace rsn {

// All quasiorders on the universe, enumerated by backtracking over the
// off-diagonal pair slots with incremental transitivity propagation (a slot
// choice that already contradicts a forced 2-step path is pruned). Canonical
// deterministic order. Sizes: 1, 4, 29, 355 for |U| = 1..4.
std::vector<BinaryRelation> enumerate_preorders(const Universe& u);

// Seeded random quasiorder: reflexive-transitive closure of a random edge
// set (edge count drawn uniformly from 0..~1.2|U|). Deterministic per seed.
BinaryRelation random_preorder(const Universe& u, std::mt19937_64& rng);

}  // namespace rsn
