#include "rsn/dot.hpp"

#include <sstream>

namespace rsn {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string relation_dot(const BinaryRelation& r, const std::string& graph_name) {
  if (!r.is_quasiorder()) throw InputError("relation drawing needs a quasiorder");
  const Universe& u = r.universe();
  const std::size_t n = r.size();

  // Mutual-reachability classes, ordered by least member; rep = least member.
  std::vector<std::size_t> cls(n, no_index);
  std::vector<Bitset> blocks;
  std::vector<std::size_t> rep;
  for (std::size_t x = 0; x < n; ++x) {
    if (cls[x] != no_index) continue;
    Bitset b = r.successors(x) & r.predecessors(x);
    for (std::size_t y = b.find_first(); y != Bitset::npos; y = b.find_next(y))
      cls[y] = blocks.size();
    blocks.push_back(b);
    rep.push_back(x);
  }

  // Quotient order on classes: C ≤ D iff rep(C) R rep(D). Covers of it.
  const std::size_t m = blocks.size();
  auto qleq = [&](std::size_t c, std::size_t d) { return r.contains(rep[c], rep[d]); };

  std::ostringstream out;
  out << "digraph " << quoted(graph_name) << " {\n";
  out << "  rankdir=BT;\n";
  for (std::size_t x = 0; x < n; ++x) out << "  " << quoted(u.name(x)) << ";\n";
  for (std::size_t c = 0; c < m; ++c) {
    // k-cycle through the class in element order (single nodes draw nothing).
    std::vector<std::size_t> members;
    for (std::size_t y = blocks[c].find_first(); y != Bitset::npos;
         y = blocks[c].find_next(y))
      members.push_back(y);
    if (members.size() >= 2)
      for (std::size_t i = 0; i < members.size(); ++i)
        out << "  " << quoted(u.name(members[i])) << " -> "
            << quoted(u.name(members[(i + 1) % members.size()])) << ";\n";
  }
  for (std::size_t c = 0; c < m; ++c)
    for (std::size_t d = 0; d < m; ++d) {
      if (c == d || !qleq(c, d)) continue;
      bool covered = true;
      for (std::size_t e = 0; e < m && covered; ++e)
        if (e != c && e != d && qleq(c, e) && qleq(e, d)) covered = false;
      if (covered)
        out << "  " << quoted(u.name(rep[c])) << " -> " << quoted(u.name(rep[d])) << ";\n";
    }
  out << "}\n";
  return out.str();
}

namespace {

std::string hasse_dot(const std::string& graph_name, const std::vector<std::string>& names,
                      const std::vector<std::array<std::size_t, 2>>& covers) {
  std::ostringstream out;
  out << "digraph " << quoted(graph_name) << " {\n";
  out << "  rankdir=BT;\n";
  for (const std::string& n : names) out << "  " << quoted(n) << ";\n";
  for (const auto& [a, b] : covers)
    out << "  " << quoted(names[a]) << " -> " << quoted(names[b]) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

std::string lattice_dot(const FiniteLattice& l, const std::string& graph_name) {
  return hasse_dot(graph_name, l.names(), l.cover_pairs());
}

std::string rs_dot(const RoughSetLattice& rs, const std::string& graph_name) {
  std::vector<std::string> names;
  names.reserve(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) names.push_back(rs.pair_name(i));
  std::vector<std::array<std::size_t, 2>> covers;
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < rs.size(); ++b) {
      if (a == b || !rs.leq(a, b)) continue;
      bool covered = true;
      for (std::size_t e = 0; e < rs.size() && covered; ++e)
        if (e != a && e != b && rs.leq(a, e) && rs.leq(e, b)) covered = false;
      if (covered) covers.push_back({a, b});
    }
  return hasse_dot(graph_name, names, covers);
}

}  // namespace rsn
