#include "rsn/json_io.hpp"

#include <fstream>
#include <sstream>

namespace rsn {

namespace {

void require_keys(const Json& doc, const char* what, std::initializer_list<const char*> allowed,
                  std::initializer_list<const char*> required) {
  if (!doc.is_object()) throw InputError(std::string(what) + " document must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    bool known = false;
    for (const char* k : allowed) known = known || key == k;
    if (!known) throw InputError(std::string("unknown key \"") + key + "\" in " + what +
                                 " document");
  }
  for (const char* k : required)
    if (!doc.contains(k))
      throw InputError(std::string(what) + " document is missing \"" + k + "\"");
}

std::vector<std::string> string_list(const Json& v, const char* what) {
  if (!v.is_array()) throw InputError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const Json& s : v) {
    if (!s.is_string()) throw InputError(std::string(what) + " must be an array of strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

}  // namespace

Json parse_json_text(const std::string& text) {
  Json doc = Json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw InputError("malformed JSON");
  return doc;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  Json doc = Json::parse(buf.str(), nullptr, false);
  if (doc.is_discarded()) throw InputError("malformed JSON in " + path);
  return doc;
}

BinaryRelation parse_relation_doc(const Json& doc) {
  require_keys(doc, "relation", {"universe", "pairs", "closure"}, {"universe"});
  Universe u(string_list(doc.at("universe"), "\"universe\""));
  std::vector<NamedPair> pairs;
  if (doc.contains("pairs")) {
    const Json& arr = doc.at("pairs");
    if (!arr.is_array()) throw InputError("\"pairs\" must be an array of two-element arrays");
    for (const Json& p : arr) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
        throw InputError("\"pairs\" must be an array of two-element arrays of strings");
      pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  }
  ClosureMode mode = ClosureMode::none;
  if (doc.contains("closure")) {
    if (!doc.at("closure").is_string()) throw InputError("\"closure\" must be a string");
    mode = closure_mode_from_string(doc.at("closure").get<std::string>());
  }
  return build_relation(u, pairs, mode);
}

Json relation_to_json(const BinaryRelation& r) {
  Json doc;
  doc["universe"] = r.universe().names();
  Json pairs = Json::array();
  for (const NamedPair& p : r.pairs()) pairs.push_back({p.first, p.second});
  doc["pairs"] = std::move(pairs);
  doc["closure"] = "none";
  return doc;
}

FiniteLattice parse_lattice_doc(const Json& doc) {
  require_keys(doc, "lattice", {"elements", "hasse", "leq_matrix"}, {"elements"});
  std::vector<std::string> names = string_list(doc.at("elements"), "\"elements\"");
  const std::size_t n = names.size();
  bool has_hasse = doc.contains("hasse"), has_matrix = doc.contains("leq_matrix");
  if (has_hasse == has_matrix)
    throw InputError("lattice document needs exactly one of \"hasse\" and \"leq_matrix\"");

  std::vector<Bitset> rows;
  if (has_hasse) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index.emplace(names[i], i);
    std::vector<std::array<std::size_t, 2>> covers;
    const Json& arr = doc.at("hasse");
    if (!arr.is_array()) throw InputError("\"hasse\" must be an array of two-element arrays");
    for (const Json& e : arr) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw InputError("\"hasse\" must be an array of two-element arrays of strings");
      auto a = index.find(e[0].get<std::string>());
      auto b = index.find(e[1].get<std::string>());
      if (a == index.end() || b == index.end())
        throw InputError("\"hasse\" mentions an element missing from \"elements\"");
      covers.push_back({a->second, b->second});
    }
    rows = close_hasse(n, covers);
  } else {
    const Json& m = doc.at("leq_matrix");
    if (!m.is_array() || m.size() != n)
      throw InputError("\"leq_matrix\" must be an n-by-n array of booleans or 0/1");
    rows.assign(n, Bitset(n));
    for (std::size_t a = 0; a < n; ++a) {
      if (!m[a].is_array() || m[a].size() != n)
        throw InputError("\"leq_matrix\" must be an n-by-n array of booleans or 0/1");
      for (std::size_t b = 0; b < n; ++b) {
        const Json& cell = m[a][b];
        bool bit;
        if (cell.is_boolean()) bit = cell.get<bool>();
        else if (cell.is_number_integer() &&
                 (cell.get<std::int64_t>() == 0 || cell.get<std::int64_t>() == 1))
          bit = cell.get<std::int64_t>() == 1;
        else throw InputError("\"leq_matrix\" entries must be booleans or 0/1");
        rows[a].set(b, bit);
      }
    }
  }
  return validate_lattice(std::move(names), std::move(rows));
}

Json lattice_to_json(const FiniteLattice& l) {
  Json doc;
  doc["elements"] = l.names();
  Json hasse = Json::array();
  for (const auto& [a, b] : l.cover_pairs()) hasse.push_back({l.name(a), l.name(b)});
  doc["hasse"] = std::move(hasse);
  return doc;
}

DeMorganAlgebra parse_algebra_doc(const Json& doc) {
  require_keys(doc, "algebra", {"elements", "hasse", "leq_matrix", "negation"},
               {"elements", "negation"});
  FiniteLattice l = parse_lattice_doc([&] {
    Json copy = doc;
    copy.erase("negation");
    return copy;
  }());
  const Json& neg = doc.at("negation");
  if (!neg.is_object()) throw InputError("\"negation\" must be an object mapping names to names");
  std::vector<std::size_t> map(l.size(), no_index);
  for (const auto& [from, to] : neg.items()) {
    if (!to.is_string()) throw InputError("\"negation\" must be an object mapping names to names");
    map[l.index(from)] = l.index(to.get<std::string>());
  }
  for (std::size_t x = 0; x < l.size(); ++x)
    if (map[x] == no_index)
      throw InputError("\"negation\" is missing element \"" + l.name(x) + "\"");
  return DeMorganAlgebra(std::move(l), std::move(map));
}

Json algebra_to_json(const DeMorganAlgebra& a) {
  Json doc = lattice_to_json(a.lattice());
  Json neg = Json::object();
  for (std::size_t x = 0; x < a.size(); ++x) neg[a.name(x)] = a.name(a.neg(x));
  doc["negation"] = std::move(neg);
  return doc;
}

Json rough_pair_to_json(const Universe& u, const RoughPair& p) {
  Json out;
  out["lower"] = u.render(p.lower);
  out["upper"] = u.render(p.upper);
  return out;
}

Json rs_to_json(const RoughSetLattice& rs) {
  Json out = Json::array();
  for (const RoughPair& p : rs.pairs()) out.push_back(rough_pair_to_json(rs.universe(), p));
  return out;
}

Json law_check_to_json(const LawCheck& c) {
  Json out;
  out["law"] = c.law;
  out["status"] = to_string(c.status);
  if (!c.witness.empty()) out["witness"] = c.witness;
  if (!c.note.empty()) out["note"] = c.note;
  return out;
}

Json algebra_report_to_json(const AlgebraReport& r) {
  Json out;
  out["demorgan"] = r.demorgan;
  out["kleene"] = r.kleene;
  out["distributive"] = r.distributive;
  out["nelson"] = r.nelson;
  out["lukasiewicz"] = r.lukasiewicz;
  Json checks = Json::array();
  for (const LawCheck& c : r.checks) checks.push_back(law_check_to_json(c));
  out["checks"] = std::move(checks);
  return out;
}

Json representation_to_json(const Representation& r) {
  Json out;
  out["universe"] = r.universe.names();
  Json rel = Json::array();
  for (const NamedPair& p : r.relation.pairs()) rel.push_back({p.first, p.second});
  out["relation"] = std::move(rel);
  Json rho = Json::object();
  for (std::size_t pos = 0; pos < r.j_list.size(); ++pos)
    rho[r.universe.name(pos)] = r.universe.name(
        [&] {
          for (std::size_t k = 0; k < r.j_list.size(); ++k)
            if (r.j_list[k] == r.rho[pos]) return k;
          return pos;  // unreachable: ρ lands in J
        }());
  out["rho"] = std::move(rho);
  Json phi = Json::object();
  for (std::size_t pos = 0; pos < r.j_list.size(); ++pos)
    phi[r.universe.name(pos)] = rough_pair_to_json(r.universe, r.phi[pos]);
  out["phi"] = std::move(phi);
  out["rs"] = rs_to_json(r.rs);
  Json iso = Json::object();
  for (std::size_t x = 0; x < r.iso.size(); ++x)
    iso[std::to_string(x)] =
        r.iso[x] == no_index ? Json(nullptr) : Json(r.rs.pair_name(r.iso[x]));
  out["iso"] = std::move(iso);
  Json v;
  v["quasiorder"] = r.verdicts.quasiorder;
  v["order_iso"] = r.verdicts.order_iso;
  v["star_compatible"] = r.verdicts.star_compatible;
  v["classes_match"] = r.verdicts.classes_match;
  v["algebra_iso"] = r.verdicts.algebra_iso;
  v["minimality"] = r.verdicts.minimality;
  v["all"] = r.verdicts.all();
  out["verdicts"] = std::move(v);
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string digest_string(std::string_view bytes) {
  static const char* hex = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out = "fnv1a64:";
  for (int shift = 60; shift >= 0; shift -= 4) out.push_back(hex[(h >> shift) & 0xf]);
  return out;
}

}  // namespace rsn
