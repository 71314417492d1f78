#pragma once

#include "rsn/algebra.hpp"
#include "rsn/relations.hpp"
#include "rsn/representation.hpp"
#include "rsn/rough.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace rsn {

// Insertion-ordered JSON keeps every report field in a stable order.
using Json = nlohmann::ordered_json;

/* Document formats (strict: unknown keys are rejected).
 *
 * relation  {"universe": ["1","2"], "pairs": [["1","2"]],
 *            "closure": "none|reflexive|transitive|reflexive_transitive"}
 *           pairs defaults to [], closure to "none".
 *
 * lattice   {"elements": [...], "hasse": [["a","b"], ...]}   (a covered by b)
 *        or {"elements": [...], "leq_matrix": [[...], ...]}  (bool or 0/1)
 *
 * algebra   lattice document plus {"negation": {"0": "1", ...}} (total map)
 */

Json parse_json_text(const std::string& text);  // InputError on malformed JSON
Json load_json_file(const std::string& path);   // InputError on missing/bad file

BinaryRelation parse_relation_doc(const Json& doc);
Json relation_to_json(const BinaryRelation& r);

FiniteLattice parse_lattice_doc(const Json& doc);
Json lattice_to_json(const FiniteLattice& l);  // elements + hasse

DeMorganAlgebra parse_algebra_doc(const Json& doc);
Json algebra_to_json(const DeMorganAlgebra& a);

Json rough_pair_to_json(const Universe& u, const RoughPair& p);
Json rs_to_json(const RoughSetLattice& rs);  // canonical list of {lower, upper}

Json law_check_to_json(const LawCheck& c);
Json algebra_report_to_json(const AlgebraReport& r);
Json representation_to_json(const Representation& r);

// FNV-1a 64-bit content digest used to echo inputs in reports.
std::uint64_t fnv1a64(std::string_view bytes);
std::string digest_string(std::string_view bytes);  // "fnv1a64:..." hex

}  // namespace rsn
