#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include <string>
#include <vector>

using namespace rsn;

namespace {

std::string data_file(const std::string& name) {
  return std::string(RSN_DATA_DIR) + "/" + name;
}

bool same_lattice(const FiniteLattice& a, const FiniteLattice& b) {
  if (a.names() != b.names()) return false;
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(x, y)) return false;
  return true;
}

const char* diamond_doc =
    R"({"elements": ["0", "a", "b", "1"],
        "hasse": [["0", "a"], ["0", "b"], ["a", "1"], ["b", "1"]]})";

}  // namespace

TEST_CASE("malformed json is rejected up front") {
  CHECK_THROWS_WITH_AS(parse_json_text("{ \"universe\": ["), doctest::Contains("malformed JSON"),
                       InputError);
  CHECK_THROWS_AS(parse_json_text(""), InputError);
  CHECK_THROWS_AS(parse_json_text("{\"a\": 1,}"), InputError);
  CHECK(parse_json_text("[1, 2]").is_array());
}

TEST_CASE("relation documents round-trip") {
  std::vector<BinaryRelation> samples = {
      support::quasi5_relation(),
      support::equivalence_from_blocks(3, {{0}, {1, 2}}),
      support::chain_relation(3),
      support::identity_relation(2),
      support::full_relation(2),
  };
  for (const BinaryRelation& r : samples) CHECK(parse_relation_doc(relation_to_json(r)) == r);

  Json doc = relation_to_json(support::chain_relation(2));
  CHECK(doc["universe"] == Json::array({"1", "2"}));
  CHECK(doc["closure"] == "none");
  CHECK(doc["pairs"].size() == 3);  // (1,1), (1,2), (2,2)
}

TEST_CASE("relation documents apply defaults and closure modes") {
  SUBCASE("pairs default to empty, closure to none") {
    BinaryRelation r = parse_relation_doc(parse_json_text(R"({"universe": ["a", "b"]})"));
    CHECK(r.size() == 2);
    CHECK_FALSE(r.contains(0, 0));
    CHECK_FALSE(r.contains(0, 1));
  }
  SUBCASE("reflexive closure") {
    BinaryRelation r = parse_relation_doc(
        parse_json_text(R"({"universe": ["a", "b"], "pairs": [], "closure": "reflexive"})"));
    CHECK(r == support::identity_relation(2));
  }
  SUBCASE("reflexive-transitive closure") {
    BinaryRelation r = parse_relation_doc(parse_json_text(
        R"({"universe": ["a", "b", "c"],
            "pairs": [["a", "b"], ["b", "c"]],
            "closure": "reflexive_transitive"})"));
    CHECK(r.contains(0, 2));
    CHECK(r.contains(1, 1));
    CHECK_FALSE(r.contains(2, 0));
    CHECK(r.is_quasiorder());
  }
  SUBCASE("unknown closure mode") {
    CHECK_THROWS_WITH_AS(
        parse_relation_doc(parse_json_text(R"({"universe": ["a"], "closure": "sideways"})")),
        doctest::Contains("unknown closure mode"), InputError);
  }
}

TEST_CASE("relation documents reject bad shapes") {
  auto reject = [](const char* text, const char* needle) {
    CHECK_THROWS_WITH_AS(parse_relation_doc(parse_json_text(text)), doctest::Contains(needle),
                         InputError);
  };
  reject(R"({"universe": ["a"], "extra": 1})", "unknown key \"extra\"");
  reject(R"({"pairs": []})", "missing \"universe\"");
  reject(R"([1, 2])", "must be a JSON object");
  reject(R"({"universe": "ab"})", "array of strings");
  reject(R"({"universe": ["a", 1]})", "array of strings");
  reject(R"({"universe": ["a", "a"]})", "duplicate universe element");
  reject(R"({"universe": [""]})", "must not be empty");
  reject(R"({"universe": ["a"], "pairs": {}})", "\"pairs\" must be an array");
  reject(R"({"universe": ["a"], "pairs": [["a"]]})", "two-element arrays of strings");
  reject(R"({"universe": ["a"], "pairs": [["a", "a", "a"]]})", "two-element arrays of strings");
  reject(R"({"universe": ["a"], "pairs": [["a", 1]]})", "two-element arrays of strings");
  reject(R"({"universe": ["a"], "closure": 3})", "\"closure\" must be a string");
  CHECK_THROWS_AS(
      parse_relation_doc(parse_json_text(R"({"universe": ["a"], "pairs": [["a", "z"]]})")),
      InputError);
}

TEST_CASE("lattice documents round-trip through hasse form") {
  FiniteLattice l = parse_lattice_doc(parse_json_text(diamond_doc));
  CHECK(l.size() == 4);
  CHECK(l.names() == std::vector<std::string>{"0", "a", "b", "1"});
  CHECK(l.join(1, 2) == 3);
  CHECK(l.meet(1, 2) == 0);

  Json out = lattice_to_json(l);
  CHECK(out["elements"] == Json::array({"0", "a", "b", "1"}));
  CHECK(out["hasse"].size() == 4);
  CHECK_FALSE(out.contains("leq_matrix"));
  CHECK(same_lattice(parse_lattice_doc(out), l));
}

TEST_CASE("lattice documents accept leq matrices") {
  FiniteLattice l = parse_lattice_doc(parse_json_text(
      R"({"elements": ["x", "y"], "leq_matrix": [[true, 1], [0, true]]})"));
  CHECK(l.size() == 2);
  CHECK(l.leq(0, 1));
  CHECK_FALSE(l.leq(1, 0));
  CHECK(l.bottom() == 0);
  CHECK(l.top() == 1);
  CHECK(same_lattice(parse_lattice_doc(lattice_to_json(l)), l));
}

TEST_CASE("lattice documents reject bad shapes") {
  auto reject = [](const char* text, const char* needle) {
    CHECK_THROWS_WITH_AS(parse_lattice_doc(parse_json_text(text)), doctest::Contains(needle),
                         InputError);
  };
  reject(R"({"elements": ["a"]})", "exactly one");
  reject(R"({"elements": ["a"], "hasse": [], "leq_matrix": [[1]]})", "exactly one");
  reject(R"({"elements": ["a"], "hasse": 1})", "\"hasse\" must be an array");
  reject(R"({"elements": ["a"], "hasse": [["a"]]})", "two-element arrays of strings");
  reject(R"({"elements": ["a"], "hasse": [["a", "z"]]})", "missing from \"elements\"");
  reject(R"({"elements": ["a", "b"], "leq_matrix": [[1, 1]]})", "n-by-n");
  reject(R"({"elements": ["a", "b"], "leq_matrix": [[1, 1], [0]]})", "n-by-n");
  reject(R"({"elements": ["a"], "leq_matrix": [[2]]})", "booleans or 0/1");
  reject(R"({"elements": ["a"], "leq_matrix": [["x"]]})", "booleans or 0/1");
  reject(R"({"elements": ["a"], "title": "no"})", "unknown key \"title\"");

  // Well-formed document, but the described order is no lattice.
  CHECK_THROWS_AS(parse_lattice_doc(parse_json_text(
                      R"({"elements": ["x", "y"], "leq_matrix": [[1, 0], [0, 1]]})")),
                  LatticeError);
}

TEST_CASE("algebra documents round-trip") {
  DeMorganAlgebra a = parse_algebra_doc(load_json_file(data_file("nelson8.json")));
  DeMorganAlgebra ref = support::nelson8_algebra();
  CHECK(a.size() == 8);
  CHECK(same_lattice(a.lattice(), ref.lattice()));
  for (std::size_t x = 0; x < a.size(); ++x) CHECK(a.neg(x) == ref.neg(x));

  Json out = algebra_to_json(a);
  CHECK(out["negation"]["a"] == "f");
  CHECK(out["negation"].size() == 8);
  DeMorganAlgebra back = parse_algebra_doc(out);
  CHECK(same_lattice(back.lattice(), a.lattice()));
  for (std::size_t x = 0; x < a.size(); ++x) CHECK(back.neg(x) == a.neg(x));
}

TEST_CASE("algebra documents reject bad negations") {
  auto reject = [](const char* text, const char* needle) {
    CHECK_THROWS_WITH_AS(parse_algebra_doc(parse_json_text(text)), doctest::Contains(needle),
                         InputError);
  };
  reject(R"({"elements": ["a"], "hasse": []})", "missing \"negation\"");
  reject(R"({"elements": ["a"], "hasse": [], "negation": ["a"]})", "object mapping names");
  reject(R"({"elements": ["a"], "hasse": [], "negation": {"a": 1}})", "object mapping names");
  reject(R"({"elements": ["a", "b"], "hasse": [["a", "b"]], "negation": {"a": "b"}})",
         "missing element \"b\"");
  CHECK_THROWS_AS(parse_algebra_doc(parse_json_text(
                      R"({"elements": ["a"], "hasse": [], "negation": {"z": "a"}})")),
                  InputError);
  CHECK_THROWS_AS(parse_algebra_doc(parse_json_text(
                      R"({"elements": ["a"], "hasse": [], "negation": {"a": "z"}})")),
                  InputError);
}

TEST_CASE("data files load and missing files raise input errors") {
  CHECK_THROWS_WITH_AS(load_json_file(data_file("no_such.json")), doctest::Contains("cannot open"),
                       InputError);
  CHECK_THROWS_WITH_AS(load_json_file(data_file("malformed.json")),
                       doctest::Contains("malformed JSON"), InputError);
  CHECK(parse_relation_doc(load_json_file(data_file("chain2.json"))) ==
        support::chain_relation(2));
  CHECK(parse_relation_doc(load_json_file(data_file("quasi5.json"))) ==
        support::quasi5_relation());
  CHECK_THROWS_AS(parse_algebra_doc(load_json_file(data_file("notlattice.json"))), LatticeError);
}

TEST_CASE("rough pairs and rs families serialize by name") {
  Universe u = support::letters(3);
  RoughPair p{u.set_of({"a"}), u.set_of({"a", "b"})};
  Json out = rough_pair_to_json(u, p);
  CHECK(out["lower"] == Json::array({"a"}));
  CHECK(out["upper"] == Json::array({"a", "b"}));

  Json rs = rs_to_json(enumerate_rs_generated(support::chain_relation(2)));
  REQUIRE(rs.size() == 4);
  CHECK(rs[0]["lower"].empty());
  CHECK(rs[0]["upper"].empty());
  CHECK(rs[1] == rough_pair_to_json(support::numbers(2),
                                    RoughPair{support::numbers(2).empty_set(),
                                              support::numbers(2).set_of({"1"})}));
  CHECK(rs[3]["lower"] == Json::array({"1", "2"}));
}

TEST_CASE("law checks and reports serialize status, witness and note") {
  LawCheck fail{"kleene", CheckStatus::fail, {"x", "y"}, ""};
  Json jf = law_check_to_json(fail);
  CHECK(jf["law"] == "kleene");
  CHECK(jf["status"] == "fail");
  CHECK(jf["witness"] == Json::array({"x", "y"}));
  CHECK_FALSE(jf.contains("note"));

  LawCheck skip{"n1", CheckStatus::skipped, {}, "skipped: needs a distributive lattice"};
  Json js = law_check_to_json(skip);
  CHECK(js["status"] == "skipped");
  CHECK_FALSE(js.contains("witness"));
  CHECK(js["note"] == "skipped: needs a distributive lattice");

  Json report = algebra_report_to_json(verify_algebra(support::nelson8_algebra()));
  CHECK(report["demorgan"] == true);
  CHECK(report["kleene"] == true);
  CHECK(report["distributive"] == true);
  CHECK(report["nelson"] == true);
  CHECK(report["lukasiewicz"] == false);
  REQUIRE(report["checks"].size() == 15);
  CHECK(report["checks"][0]["law"] == "demorgan.involution");
  CHECK(report["checks"][14]["law"] == "lukasiewicz");
  CHECK(report["checks"][14]["status"] == "fail");
}

TEST_CASE("representations serialize the whole pipeline") {
  Json out = representation_to_json(represent(support::nelson8_algebra()));
  CHECK(out["universe"] == Json::array({"a", "b", "d", "e", "f"}));
  CHECK(out["relation"].size() == 13);
  CHECK(out["rho"] == Json({{"a", "a"}, {"b", "b"}, {"d", "d"}, {"e", "a"}, {"f", "b"}}));
  CHECK(out["phi"]["d"]["lower"] == Json::array({"d"}));
  CHECK(out["phi"]["d"]["upper"] == Json::array({"a", "b", "d", "e", "f"}));
  CHECK(out["phi"]["a"]["lower"].empty());
  CHECK(out["phi"]["a"]["upper"] == Json::array({"a", "e"}));
  CHECK(out["rs"].size() == 8);
  CHECK(out["iso"]["0"] == "({},{})");
  CHECK(out["iso"]["7"] == "({a,b,d,e,f},{a,b,d,e,f})");
  CHECK(out["verdicts"]["all"] == true);
}

TEST_CASE("digests are stable") {
  CHECK(fnv1a64("") == 14695981039346656037ull);
  CHECK(digest_string("") == "fnv1a64:cbf29ce484222325");
  CHECK(digest_string("a") == "fnv1a64:af63dc4c8601ec8c");
  CHECK(digest_string("b") != digest_string("a"));
}

TEST_CASE("relation drawings freeze chains and cycles") {
  CHECK(relation_dot(support::chain_relation(3)) ==
        "digraph \"relation\" {\n"
        "  rankdir=BT;\n"
        "  \"1\";\n"
        "  \"2\";\n"
        "  \"3\";\n"
        "  \"1\" -> \"2\";\n"
        "  \"2\" -> \"3\";\n"
        "}\n");
  CHECK(relation_dot(support::full_relation(2)) ==
        "digraph \"relation\" {\n"
        "  rankdir=BT;\n"
        "  \"a\";\n"
        "  \"b\";\n"
        "  \"a\" -> \"b\";\n"
        "  \"b\" -> \"a\";\n"
        "}\n");
  CHECK(relation_dot(support::identity_relation(1), "g") ==
        "digraph \"g\" {\n  rankdir=BT;\n  \"a\";\n}\n");
  CHECK_THROWS_WITH_AS(relation_dot(parse_relation_doc(load_json_file(data_file("nonquasi.json")))),
                       doctest::Contains("needs a quasiorder"), InputError);
}

TEST_CASE("relation drawings round-trip through their edges") {
  std::vector<BinaryRelation> samples = {
      support::quasi5_relation(),
      support::equivalence_from_blocks(3, {{0}, {1, 2}}),
      support::full_relation(2),
      support::chain_relation(4),
      support::identity_relation(3),
  };
  for (const BinaryRelation& r : samples) {
    std::string text = relation_dot(r);
    CHECK(support::dot_nodes(text) == r.universe().names());
    CHECK(build_relation(r.universe(), support::dot_edges(text),
                         ClosureMode::reflexive_transitive) == r);
  }
}

TEST_CASE("drawings quote and unquote awkward names") {
  Universe u({"x\"y", "z w"});
  BinaryRelation r =
      build_relation(u, {{"x\"y", "z w"}}, ClosureMode::reflexive_transitive);
  std::string text = relation_dot(r);
  CHECK(text.find("\"x\\\"y\"") != std::string::npos);
  CHECK(support::dot_nodes(text) == u.names());
  CHECK(build_relation(u, support::dot_edges(text), ClosureMode::reflexive_transitive) == r);
}

TEST_CASE("lattice and rs drawings list hasse edges bottom-up") {
  FiniteLattice l = parse_lattice_doc(parse_json_text(diamond_doc));
  std::string text = lattice_dot(l);
  CHECK(support::dot_nodes(text) == l.names());
  CHECK(support::dot_edges(text) ==
        std::vector<NamedPair>{{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});

  RoughSetLattice rs = enumerate_rs_generated(support::chain_relation(2));
  CHECK(support::dot_edges(rs_dot(rs)) ==
        std::vector<NamedPair>{{"({},{})", "({},{1})"},
                               {"({},{1})", "({2},{1,2})"},
                               {"({2},{1,2})", "({1,2},{1,2})"}});
}
