#pragma once

#include "rsn/algebra.hpp"
#include "rsn/dot.hpp"
#include "rsn/json_io.hpp"
#include "rsn/lattice.hpp"
#include "rsn/preorders.hpp"
#include "rsn/relations.hpp"
#include "rsn/representation.hpp"
#include "rsn/rough.hpp"

#include <string>
#include <vector>

namespace support {

using namespace rsn;

// Universe a, b, c, ... (n <= 26).
inline Universe letters(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::string(1, char('a' + i)));
  return Universe(names);
}

// Universe 1, 2, ..., n.
inline Universe numbers(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return Universe(names);
}

inline BinaryRelation chain_relation(std::size_t n) {
  Universe u = numbers(n);
  std::vector<NamedPair> pairs;
  for (std::size_t i = 1; i < n; ++i)
    pairs.emplace_back(std::to_string(i), std::to_string(i + 1));
  return build_relation(u, pairs, ClosureMode::reflexive_transitive);
}

inline BinaryRelation identity_relation(std::size_t n) {
  return build_relation(letters(n), {}, ClosureMode::reflexive);
}

inline BinaryRelation full_relation(std::size_t n) {
  Universe u = letters(n);
  std::vector<NamedPair> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pairs.emplace_back(u.name(i), u.name(j));
  return build_relation(u, pairs, ClosureMode::none);
}

// Equivalence with the given blocks (indices into a letters(n) universe).
inline BinaryRelation equivalence_from_blocks(std::size_t n,
                                              const std::vector<std::vector<std::size_t>>& blocks) {
  Universe u = letters(n);
  std::vector<NamedPair> pairs;
  for (const auto& block : blocks)
    for (std::size_t x : block)
      for (std::size_t y : block) pairs.emplace_back(u.name(x), u.name(y));
  return build_relation(u, pairs, ClosureMode::reflexive);
}

// All set partitions of {0..n-1} via restricted growth strings.
inline std::vector<std::vector<std::vector<std::size_t>>> set_partitions(std::size_t n) {
  std::vector<std::vector<std::vector<std::size_t>>> out;
  std::vector<std::size_t> rgs(n, 0);
  auto emit = [&] {
    std::size_t blocks = 0;
    for (std::size_t v : rgs) blocks = std::max(blocks, v + 1);
    std::vector<std::vector<std::size_t>> part(blocks);
    for (std::size_t i = 0; i < n; ++i) part[rgs[i]].push_back(i);
    out.push_back(std::move(part));
  };
  auto rec = [&](auto&& self, std::size_t i, std::size_t maxv) -> void {
    if (i == n) {
      emit();
      return;
    }
    for (std::size_t v = 0; v <= maxv + 1; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(maxv, v));
    }
  };
  if (n == 0) return out;
  rec(rec, 1, 0);  // rgs[0] = 0 always
  return out;
}

// The powerset algebra on k atoms, built directly from masks: an independent
// reference Boolean algebra (order = mask inclusion, negation = complement).
inline DeMorganAlgebra boolean_algebra(std::size_t k) {
  const std::size_t n = std::size_t{1} << k;
  std::vector<std::string> names;
  for (std::size_t m = 0; m < n; ++m) names.push_back("m" + std::to_string(m));
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if ((a & b) == a) rows[a].set(b);
  std::vector<std::size_t> neg(n);
  for (std::size_t a = 0; a < n; ++a) neg[a] = (n - 1) & ~a;
  return DeMorganAlgebra(validate_lattice(std::move(names), std::move(rows)), std::move(neg));
}

inline DeMorganAlgebra algebra_from_hasse(const std::vector<std::string>& names,
                                          const std::vector<std::array<std::size_t, 2>>& covers,
                                          const std::vector<std::size_t>& neg) {
  return DeMorganAlgebra(validate_lattice(names, close_hasse(names.size(), covers)), neg);
}

// 0 < a,b < c < d < e,f < 1 with c0=1, ca=f, cb=e, cc=d: an 8-element Nelson
// algebra whose induced relation has kernel classes {a,e}, {b,f}, {d}.
inline DeMorganAlgebra nelson8_algebra() {
  return algebra_from_hasse(
      {"0", "a", "b", "c", "d", "e", "f", "1"},
      {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 7}, {6, 7}},
      {7, 6, 5, 4, 3, 2, 1, 0});
}

// 0 < a,b < m < p,q < 1 with ca=q, cb=p, cm=m: the smallest distributive
// Kleene algebra that is not Nelson (interpolation fails at the coatoms).
inline DeMorganAlgebra kleene7_algebra() {
  return algebra_from_hasse(
      {"0", "a", "b", "m", "p", "q", "1"},
      {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 6}, {5, 6}},
      {6, 5, 4, 3, 2, 1, 0});
}

// Diamond M3: five elements, non-distributive, with the order-flip negation.
inline DeMorganAlgebra m3_algebra() {
  return algebra_from_hasse({"0", "x", "y", "z", "1"},
                            {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}},
                            {4, 1, 2, 3, 0});
}

// Three-element chain 0 < m < 1 with cm = m (the rough-set algebra of the
// full relation on two points).
inline DeMorganAlgebra chain3_algebra() {
  return algebra_from_hasse({"0", "m", "1"}, {{0, 1}, {1, 2}}, {2, 1, 0});
}

// The quasiorder with R(a)={a,d,e}, R(b)={b,d,f}, R(d)={d}, R(e)=R(a),
// R(f)=R(b): two 2-cycles over a shared fixpoint; its RS has 8 elements.
inline BinaryRelation quasi5_relation() {
  Universe u({"a", "b", "d", "e", "f"});
  std::vector<NamedPair> pairs = {{"a", "a"}, {"a", "d"}, {"a", "e"}, {"b", "b"}, {"b", "d"},
                                  {"b", "f"}, {"d", "d"}, {"e", "a"}, {"e", "d"}, {"e", "e"},
                                  {"f", "b"}, {"f", "d"}, {"f", "f"}};
  return build_relation(u, pairs, ClosureMode::none);
}

// Join-irreducibility by counting lower covers: in a finite lattice x is
// join-irreducible iff x is not the bottom and has exactly one lower cover.
// Uses only the order, never join(), so it cross-checks the join-based route.
inline bool join_irreducible_by_covers(const FiniteLattice& l, std::size_t x) {
  if (x == l.bottom()) return false;
  std::size_t covers = 0;
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (!l.leq(a, x) || a == x) continue;
    bool covered = true;
    for (std::size_t m = 0; m < l.size(); ++m)
      if (m != a && m != x && l.leq(a, m) && l.leq(m, x)) covered = false;
    if (covered) ++covers;
  }
  return covers == 1;
}

// Edges of a DOT digraph produced by the dot module (quoted names only).
inline std::vector<NamedPair> dot_edges(const std::string& text) {
  std::vector<NamedPair> out;
  std::size_t pos = 0;
  auto read_quoted = [&](std::size_t from, std::string& into) -> std::size_t {
    std::size_t open = text.find('"', from);
    if (open == std::string::npos) return std::string::npos;
    std::string value;
    for (std::size_t i = open + 1; i < text.size(); ++i) {
      if (text[i] == '\\' && i + 1 < text.size()) {
        value.push_back(text[i + 1]);
        ++i;
      } else if (text[i] == '"') {
        into = value;
        return i + 1;
      } else {
        value.push_back(text[i]);
      }
    }
    return std::string::npos;
  };
  while ((pos = text.find("->", pos)) != std::string::npos) {
    // scan backwards for the source name, forwards for the target
    std::size_t line_start = text.rfind('\n', pos);
    line_start = line_start == std::string::npos ? 0 : line_start + 1;
    std::string from, to;
    std::size_t after = read_quoted(line_start, from);
    if (after == std::string::npos || after > pos) break;
    if (read_quoted(pos, to) == std::string::npos) break;
    out.emplace_back(from, to);
    pos += 2;
  }
  return out;
}

// All node names declared in a DOT digraph (lines of the form "name";).
inline std::vector<std::string> dot_nodes(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = text.find('{');
  while (pos != std::string::npos) {
    std::size_t eol = text.find('\n', pos + 1);
    if (eol == std::string::npos) break;
    std::string line = text.substr(pos + 1, eol - pos - 1);
    pos = eol;
    if (line.find("->") != std::string::npos) continue;
    std::size_t open = line.find('"');
    std::size_t close = line.rfind('"');
    if (open == std::string::npos || close <= open) continue;
    if (line.find(';') == std::string::npos) continue;
    std::string name;
    for (std::size_t i = open + 1; i < close; ++i) {
      if (line[i] == '\\' && i + 1 < close) ++i;
      name.push_back(line[i]);
    }
    out.push_back(name);
  }
  return out;
}

}  // namespace support
