#include "rsn/lattice.hpp"

#include <algorithm>
#include <string>

namespace rsn {

namespace {

// Join/meet tables are worth the memory up to this many elements; beyond it
// every join falls back to an O(n) scan.
constexpr std::size_t table_limit = 1024;

std::string witness_msg(const char* what, const std::vector<std::string>& names,
                        std::initializer_list<std::size_t> idx) {
  std::string msg(what);
  msg += " (witness:";
  for (std::size_t i : idx) msg += " " + names.at(i);
  msg += ")";
  return msg;
}

}  // namespace

std::size_t FiniteLattice::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InputError("unknown lattice element: " + name);
  return it->second;
}

// One scan decides lub(a, b): among the common upper bounds, the least one
// (when it exists) is the unique member with the smallest down-set, so we
// pick the candidate with minimal |down| and verify it bounds the whole set.
std::size_t FiniteLattice::join_scan(std::size_t a, std::size_t b, bool want_join) const {
  const Bitset& bounds = want_join ? (up_[a] & up_[b]) : (down_[a] & down_[b]);
  std::size_t best = no_index, best_count = 0;
  for (std::size_t u = bounds.find_first(); u != Bitset::npos; u = bounds.find_next(u)) {
    std::size_t c = want_join ? down_[u].count() : up_[u].count();
    if (best == no_index || c < best_count) {
      best = u;
      best_count = c;
    }
  }
  if (best == no_index) return no_index;
  const Bitset& cone = want_join ? up_[best] : down_[best];
  if (!bounds.is_subset_of(cone)) return no_index;
  return best;
}

std::size_t FiniteLattice::join(std::size_t a, std::size_t b) const {
  if (!join_tab_.empty()) return join_tab_[a * size() + b];
  std::size_t r = join_scan(a, b, true);
  if (r == no_index) throw InternalError("join vanished after validation");
  return r;
}

std::size_t FiniteLattice::meet(std::size_t a, std::size_t b) const {
  if (!meet_tab_.empty()) return meet_tab_[a * size() + b];
  std::size_t r = join_scan(a, b, false);
  if (r == no_index) throw InternalError("meet vanished after validation");
  return r;
}

std::size_t FiniteLattice::big_join(const Bitset& s) const {
  std::size_t acc = bottom_;
  for (std::size_t i = s.find_first(); i != Bitset::npos; i = s.find_next(i)) acc = join(acc, i);
  return acc;
}

std::size_t FiniteLattice::big_meet(const Bitset& s) const {
  std::size_t acc = top_;
  for (std::size_t i = s.find_first(); i != Bitset::npos; i = s.find_next(i)) acc = meet(acc, i);
  return acc;
}

std::vector<std::array<std::size_t, 2>> FiniteLattice::cover_pairs() const {
  std::vector<std::array<std::size_t, 2>> out;
  for (std::size_t a = 0; a < size(); ++a) {
    Bitset above = up_[a];
    above.reset(a);
    for (std::size_t b = above.find_first(); b != Bitset::npos; b = above.find_next(b)) {
      Bitset between = above & down_[b];
      between.reset(b);
      if (between.none()) out.push_back({a, b});
    }
  }
  return out;
}

const FiniteLattice::Distributivity& FiniteLattice::distributivity() const {
  if (!distributive_) {
    distributive_ = Distributivity{true, {0, 0, 0}};
    const std::size_t n = size();
    for (std::size_t a = 0; a < n && distributive_->ok; ++a)
      for (std::size_t b = 0; b < n && distributive_->ok; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) {
            distributive_ = Distributivity{false, {a, b, c}};
            break;
          }
  }
  return *distributive_;
}

FiniteLattice validate_lattice(std::vector<std::string> names, std::vector<Bitset> leq_rows) {
  const std::size_t n = names.size();
  if (n == 0) throw LatticeError("a lattice must have at least one element");
  if (leq_rows.size() != n) throw LatticeError("order matrix height does not match element count");
  for (const auto& row : leq_rows)
    if (row.size() != n) throw LatticeError("order matrix width does not match element count");

  {
    // Name uniqueness is checked before the order axioms so witnesses print
    // unambiguous names.
    std::map<std::string, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i) {
      if (names[i].empty()) throw LatticeError("lattice element name must not be empty");
      if (!seen.emplace(names[i], i).second)
        throw LatticeError("duplicate lattice element: " + names[i]);
    }
  }

  for (std::size_t a = 0; a < n; ++a)
    if (!leq_rows[a].test(a))
      throw LatticeError(witness_msg("order is not reflexive", names, {a}));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (leq_rows[a].test(b) && leq_rows[b].test(a))
        throw LatticeError(witness_msg("order is not antisymmetric", names, {a, b}));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = leq_rows[a].find_first(); b != Bitset::npos;
         b = leq_rows[a].find_next(b))
      if (!leq_rows[b].is_subset_of(leq_rows[a])) {
        Bitset missing = leq_rows[b] - leq_rows[a];
        throw LatticeError(
            witness_msg("order is not transitive", names, {a, b, missing.find_first()}));
      }

  FiniteLattice l;
  l.names_ = std::move(names);
  for (std::size_t i = 0; i < n; ++i) l.index_.emplace(l.names_[i], i);
  l.up_ = std::move(leq_rows);
  l.down_.assign(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = l.up_[a].find_first(); b != Bitset::npos; b = l.up_[a].find_next(b))
      l.down_[b].set(a);

  const bool tables = n <= table_limit;
  if (tables) {
    l.join_tab_.assign(n * n, 0);
    l.meet_tab_.assign(n * n, 0);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) {
      std::size_t j = l.join_scan(a, b, true);
      if (j == no_index)
        throw LatticeError(witness_msg("pair has no least upper bound", l.names_, {a, b}));
      std::size_t m = l.join_scan(a, b, false);
      if (m == no_index)
        throw LatticeError(witness_msg("pair has no greatest lower bound", l.names_, {a, b}));
      if (tables) {
        l.join_tab_[a * n + b] = l.join_tab_[b * n + a] = static_cast<std::uint32_t>(j);
        l.meet_tab_[a * n + b] = l.meet_tab_[b * n + a] = static_cast<std::uint32_t>(m);
      }
    }

  // A finite lattice is bounded; fold to locate the bounds.
  std::size_t bot = 0, top = 0;
  for (std::size_t a = 1; a < n; ++a) {
    bot = tables ? l.meet_tab_[bot * n + a] : l.join_scan(bot, a, false);
    top = tables ? l.join_tab_[top * n + a] : l.join_scan(top, a, true);
  }
  l.bottom_ = bot;
  l.top_ = top;
  return l;
}

std::vector<Bitset> close_hasse(std::size_t n,
                                const std::vector<std::array<std::size_t, 2>>& covers) {
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t a = 0; a < n; ++a) rows[a].set(a);
  for (const auto& [a, b] : covers) {
    if (a >= n || b >= n) throw InputError("cover edge index out of range");
    rows[a].set(b);
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t a = 0; a < n; ++a)
      if (rows[a].test(k)) rows[a] |= rows[k];
  return rows;
}

JoinIrreducibles join_irreducibles(const FiniteLattice& l) {
  const std::size_t n = l.size();
  JoinIrreducibles out{Bitset(n), {}, std::vector<Bitset>(n, Bitset(n))};
  for (std::size_t x = 0; x < n; ++x) {
    if (x == l.bottom()) continue;
    Bitset strictly_below = l.down_set(x);
    strictly_below.reset(x);
    if (l.big_join(strictly_below) != x) {
      out.members.set(x);
      out.list.push_back(x);
    }
  }
  for (std::size_t x = 0; x < n; ++x) out.below[x] = l.down_set(x) & out.members;
  return out;
}

std::size_t relative_pseudocomplement(const FiniteLattice& l, std::size_t a, std::size_t b) {
  const auto& d = l.distributivity();
  if (!d.ok)
    throw LatticeError(witness_msg(
        "unsupported structure: relative pseudocomplement needs a distributive lattice",
        l.names(), {d.witness[0], d.witness[1], d.witness[2]}));
  std::size_t r = l.bottom();
  for (std::size_t z = 0; z < l.size(); ++z)
    if (l.leq(l.meet(z, a), b)) r = l.join(r, z);
  if (!l.leq(l.meet(r, a), b))
    throw InternalError("relative pseudocomplement failed its defining property at " + l.name(r));
  return r;
}

std::vector<std::size_t> birkhoff_extend(const FiniteLattice& l, const FiniteLattice& k,
                                         const std::vector<std::size_t>& phi) {
  if (phi.size() != l.size()) throw InputError("phi size does not match the source lattice");
  JoinIrreducibles jl = join_irreducibles(l);
  JoinIrreducibles jk = join_irreducibles(k);

  Bitset image(k.size());
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (jl.members.test(x) != (phi[x] != no_index))
      throw InputError("phi must be defined exactly on the join-irreducibles (at " + l.name(x) +
                       ")");
    if (phi[x] == no_index) continue;
    if (phi[x] >= k.size() || !jk.members.test(phi[x]))
      throw InputError("phi does not map " + l.name(x) + " to a join-irreducible of the target");
    if (image.test(phi[x]))
      throw InputError("phi is not injective at " + l.name(x));
    image.set(phi[x]);
  }
  if (image != jk.members)
    throw InputError("phi is not onto the join-irreducibles of the target");
  for (std::size_t i : jl.list)
    for (std::size_t j : jl.list)
      if (l.leq(i, j) != k.leq(phi[i], phi[j]))
        throw InputError("phi is not an order-isomorphism (witness: " + l.name(i) + ", " +
                         l.name(j) + ")");

  std::vector<std::size_t> ext(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) {
    Bitset img(k.size());
    for (std::size_t j = jl.below[x].find_first(); j != Bitset::npos;
         j = jl.below[x].find_next(j))
      img.set(phi[j]);
    ext[x] = k.big_join(img);
  }

  // The extension is only an isomorphism on distributive inputs, so verify
  // everything it claims.
  auto fail = [&](const char* what, std::initializer_list<std::size_t> idx) {
    throw LatticeError(
        witness_msg((std::string("extension is not a lattice isomorphism: ") + what).c_str(),
                    l.names(), idx));
  };
  if (l.size() != k.size()) fail("sizes differ", {});
  Bitset hit(k.size());
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (hit.test(ext[x])) fail("not injective", {x});
    hit.set(ext[x]);
  }
  for (std::size_t x = 0; x < l.size(); ++x)
    for (std::size_t y = x; y < l.size(); ++y) {
      if (ext[l.join(x, y)] != k.join(ext[x], ext[y])) fail("join not preserved", {x, y});
      if (ext[l.meet(x, y)] != k.meet(ext[x], ext[y])) fail("meet not preserved", {x, y});
    }
  if (ext[l.bottom()] != k.bottom()) fail("bottom not preserved", {l.bottom()});
  if (ext[l.top()] != k.top()) fail("top not preserved", {l.top()});
  return ext;
}

}  // namespace rsn
