#include "rsn/dot.hpp"
#include "rsn/json_io.hpp"
#include "rsn/preorders.hpp"
#include "rsn/representation.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace {

using rsn::Json;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw rsn::InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rsn::InputError("cannot write " + path);
  out << text;
}

void print(const Json& doc, bool pretty) {
  if (pretty) std::cout << doc.dump(2) << "\n";
  else std::cout << doc.dump() << "\n";
}

std::size_t brute_cap() {
  const char* env = std::getenv("ROUGHNELSON_BRUTE_MAX");
  if (env == nullptr || *env == '\0') return 20;
  char* end = nullptr;
  unsigned long v = std::strtoul(env, &end, 10);
  if (end == nullptr || *end != '\0')
    throw rsn::InputError("ROUGHNELSON_BRUTE_MAX must be a non-negative integer");
  return static_cast<std::size_t>(v);
}

Json relation_class_json(const rsn::BinaryRelation& r) {
  Json c;
  c["reflexive"] = r.is_reflexive();
  c["transitive"] = r.is_transitive();
  c["symmetric"] = r.is_symmetric();
  c["antisymmetric"] = r.is_antisymmetric();
  c["quasiorder"] = r.is_quasiorder();
  c["equivalence"] = r.is_equivalence();
  c["partial_order"] = r.is_partial_order();
  return c;
}

Json tagged_pairs_json(const rsn::BinaryRelation& r) {
  Json out = Json::array();
  for (const rsn::TaggedPair& t : rsn::rs_join_irreducibles(r)) {
    Json e = rsn::rough_pair_to_json(r.universe(), t.pair);
    e["class"] = rsn::to_string(t.cls);
    e["witness"] = r.universe().name(t.witness);
    out.push_back(std::move(e));
  }
  return out;
}

int cmd_approx(const std::string& file, const std::vector<std::string>& elements, bool pretty) {
  Timer timer;
  std::string text = slurp(file);
  rsn::BinaryRelation r = rsn::parse_relation_doc(rsn::parse_json_text(text));
  rsn::RoughPair p = rsn::approximate(r, elements);
  Json out;
  out["input"] = rsn::digest_string(text);
  out["universe"] = r.universe().names();
  out["set"] = r.universe().render(r.universe().set_of(elements));
  out["lower"] = r.universe().render(p.lower);
  out["upper"] = r.universe().render(p.upper);
  out["timing_ms"] = timer.ms();
  print(out, pretty);
  return 0;
}

int cmd_rs(const std::string& file, const std::string& method, const std::string& dot_path,
           bool pretty) {
  Timer timer;
  std::string text = slurp(file);
  rsn::BinaryRelation r = rsn::parse_relation_doc(rsn::parse_json_text(text));
  std::optional<rsn::RoughSetLattice> generated, brute;
  if (method == "generated" || method == "both") generated = rsn::enumerate_rs_generated(r);
  if (method == "brute" || method == "both") brute = rsn::enumerate_rs_bruteforce(r, brute_cap());
  const rsn::RoughSetLattice& rs = generated ? *generated : *brute;

  Json out;
  out["input"] = rsn::digest_string(text);
  out["universe"] = r.universe().names();
  out["relation_class"] = relation_class_json(r);
  out["method"] = method;
  out["size"] = rs.size();
  out["pairs"] = rsn::rs_to_json(rs);
  out["join_irreducibles"] = tagged_pairs_json(r);
  if (generated && brute) {
    if (generated->pairs() != brute->pairs())
      throw rsn::InternalError("generated and brute-force enumerations disagree; this is a bug");
    out["agreement"] = true;
  }
  if (!dot_path.empty()) write_file(dot_path, rsn::rs_dot(rs));
  out["timing_ms"] = timer.ms();
  print(out, pretty);
  return 0;
}

int cmd_verify(const std::string& file, bool pretty) {
  Timer timer;
  std::string text = slurp(file);
  rsn::DeMorganAlgebra a = rsn::parse_algebra_doc(rsn::parse_json_text(text));
  rsn::AlgebraReport report = rsn::verify_algebra(a);
  Json out;
  out["input"] = rsn::digest_string(text);
  out["elements"] = a.size();
  out["report"] = rsn::algebra_report_to_json(report);
  if (report.delta) {
    Json d = Json::object();
    for (std::size_t x = 0; x < a.size(); ++x) d[a.name(x)] = a.name((*report.delta)[x]);
    out["delta"] = std::move(d);
  }
  out["timing_ms"] = timer.ms();
  print(out, pretty);
  return 0;
}

int cmd_represent(const std::string& file, const std::string& out_dir, bool pretty) {
  Timer timer;
  std::string text = slurp(file);
  rsn::DeMorganAlgebra a = rsn::parse_algebra_doc(rsn::parse_json_text(text));
  rsn::Representation rep = rsn::represent(a);
  rsn::BooleanCharacterization boolean = rsn::boolean_characterization(a);
  Json out;
  out["input"] = rsn::digest_string(text);
  out["report"] = rsn::algebra_report_to_json(rep.report);
  out["representation"] = rsn::representation_to_json(rep);
  Json b;
  b["r_partial_order"] = boolean.r_partial_order;
  b["r_identity"] = boolean.r_identity;
  b["rs_powerset"] = boolean.rs_powerset;
  b["algebra_boolean"] = boolean.algebra_boolean;
  b["all"] = boolean.all();
  out["boolean"] = std::move(b);
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    write_file(out_dir + "/representation.json", out.dump(2) + "\n");
    write_file(out_dir + "/relation.dot", rsn::relation_dot(rep.relation));
  }
  out["timing_ms"] = timer.ms();
  print(out, pretty);
  return 0;
}

int cmd_sweep(std::size_t max_size, std::uint64_t seed, std::size_t samples, bool pretty) {
  Timer timer;
  if (max_size == 0) throw rsn::InputError("--max-size must be at least 1");
  if (max_size > 4 && samples == 0)
    throw rsn::CapacityError("exhaustive sweeps stop at size 4; give --samples for larger sizes");

  std::mt19937_64 rng(seed);
  Json sizes = Json::array();
  std::size_t checked = 0;
  bool all_nelson = true, luk_matches = true;

  for (std::size_t n = 1; n <= max_size; ++n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
    rsn::Universe u(names);

    std::vector<rsn::BinaryRelation> batch;
    bool exhaustive = n <= 4;
    if (exhaustive) {
      batch = rsn::enumerate_preorders(u);
    } else {
      batch.reserve(samples);
      for (std::size_t i = 0; i < samples; ++i) batch.push_back(rsn::random_preorder(u, rng));
    }

    std::size_t nelson = 0, lukasiewicz = 0, equivalences = 0;
    for (const rsn::BinaryRelation& r : batch) {
      rsn::RoughSetLattice rs = rsn::enumerate_rs_generated(r);
      rsn::DeMorganAlgebra a = rsn::as_abstract(rs);
      rsn::AlgebraReport report = rsn::verify_algebra(a);
      for (const rsn::LawCheck& c : report.checks)
        if (c.status == rsn::CheckStatus::fail && c.law != "lukasiewicz")
          throw rsn::InternalError("law " + c.law + " failed on a rough-set algebra of a "
                                   "quasiorder; this is a bug");
      if (report.nelson) ++nelson;
      else all_nelson = false;
      if (report.lukasiewicz) ++lukasiewicz;
      if (r.is_equivalence()) ++equivalences;
      ++checked;
    }
    if (lukasiewicz != equivalences) luk_matches = false;

    Json row;
    row["size"] = n;
    row["exhaustive"] = exhaustive;
    row["relations"] = batch.size();
    row["nelson"] = nelson;
    row["lukasiewicz"] = lukasiewicz;
    row["equivalences"] = equivalences;
    sizes.push_back(std::move(row));
  }

  Json out;
  out["seed"] = seed;
  out["checked"] = checked;
  out["sizes"] = std::move(sizes);
  out["all_nelson"] = all_nelson;
  out["lukasiewicz_matches_equivalence"] = luk_matches;
  out["timing_ms"] = timer.ms();
  print(out, pretty);
  if (!all_nelson || !luk_matches)
    throw rsn::InternalError("a sweep invariant failed; this is a bug");
  return 0;
}

int fail_json(const std::string& kind, const std::string& message, int code,
              const std::string& law = "") {
  Json err;
  err["error"] = kind;
  if (!law.empty()) err["law"] = law;
  err["message"] = message;
  std::cerr << err.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rough-set algebras of quasiorders: approximations, RS lattices, law "
               "verification, representation"};
  app.require_subcommand(1);
  app.fallthrough();
  bool pretty = false;
  app.add_flag("--pretty", pretty, "indent JSON output");
  app.set_version_flag("--version", "roughnelson 0.1.0");

  std::string file;
  std::vector<std::string> elements;
  auto* approx = app.add_subcommand("approx", "lower/upper approximation of a set");
  approx->add_option("file", file, "relation document (JSON), - for stdin")->required();
  approx->add_option("elements", elements, "members of the set to approximate");

  std::string rs_file, rs_method = "generated", rs_dot;
  auto* rs = app.add_subcommand("rs", "rough-set lattice of a quasiorder");
  rs->add_option("file", rs_file, "relation document (JSON), - for stdin")->required();
  rs->add_option("--method", rs_method, "generated, brute, or both")
      ->check(CLI::IsMember({"generated", "brute", "both"}));
  rs->add_option("--dot", rs_dot, "write a Hasse diagram of RS to this path");

  std::string verify_file;
  auto* verify = app.add_subcommand("verify", "check algebra laws on a finite algebra");
  verify->add_option("file", verify_file, "algebra document (JSON), - for stdin")->required();

  std::string rep_file, rep_out;
  auto* represent = app.add_subcommand("represent",
                                       "rebuild a Nelson algebra as a rough-set algebra");
  represent->add_option("file", rep_file, "algebra document (JSON), - for stdin")->required();
  represent->add_option("--out", rep_out, "directory for representation.json and relation.dot");

  std::size_t max_size = 3, samples = 0;
  std::uint64_t seed = 0;
  auto* sweep = app.add_subcommand("sweep", "verify the laws across many quasiorders");
  sweep->add_option("--max-size", max_size, "largest universe size (exhaustive through 4)");
  sweep->add_option("--seed", seed, "random seed for sampled sizes");
  sweep->add_option("--samples", samples, "random relations per size above 4");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*approx) return cmd_approx(file, elements, pretty);
    if (*rs) return cmd_rs(rs_file, rs_method, rs_dot, pretty);
    if (*verify) return cmd_verify(verify_file, pretty);
    if (*represent) return cmd_represent(rep_file, rep_out, pretty);
    if (*sweep) return cmd_sweep(max_size, seed, samples, pretty);
    return fail_json("input", "no subcommand selected", 2);
  } catch (const rsn::InputError& e) {
    return fail_json("input", e.what(), 2);
  } catch (const rsn::RelationClassError& e) {
    return fail_json("relation_class", e.what(), 3);
  } catch (const rsn::CapacityError& e) {
    return fail_json("capacity", e.what(), 4);
  } catch (const rsn::LatticeError& e) {
    return fail_json("lattice", e.what(), 5);
  } catch (const rsn::PreconditionError& e) {
    return fail_json("precondition", e.what(), 6, e.law());
  } catch (const rsn::InternalError& e) {
    return fail_json("internal", e.what(), 1);
  } catch (const std::exception& e) {
    return fail_json("internal", e.what(), 1);
  }
}
