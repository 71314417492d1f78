#include "rsn/rough.hpp"

#include <algorithm>
#include <string>

namespace rsn {

namespace {

void require_nonempty(const BinaryRelation& r) {
  if (r.size() == 0)
    throw InputError("rough approximations need a non-empty universe");
}

void require_quasiorder(const BinaryRelation& r, const char* what) {
  if (!r.is_quasiorder())
    throw RelationClassError(std::string(what) + " requires a quasiorder (reflexive and transitive)");
}

}  // namespace

Bitset lower_approx(const BinaryRelation& r, const Bitset& x) {
  require_nonempty(r);
  if (x.size() != r.size()) throw InputError("subset width does not match universe size");
  Bitset out(r.size());
  for (std::size_t e = 0; e < r.size(); ++e)
    if (r.successors(e).is_subset_of(x)) out.set(e);
  return out;
}

Bitset upper_approx(const BinaryRelation& r, const Bitset& x) {
  require_nonempty(r);
  if (x.size() != r.size()) throw InputError("subset width does not match universe size");
  Bitset out(r.size());
  for (std::size_t e = 0; e < r.size(); ++e)
    if (r.successors(e).intersects(x)) out.set(e);
  return out;
}

RoughPair approximate(const BinaryRelation& r, const Bitset& x) {
  return RoughPair{lower_approx(r, x), upper_approx(r, x)};
}

Bitset lower_approx(const BinaryRelation& r, const std::vector<std::string>& x) {
  return lower_approx(r, r.universe().set_of(x));
}

Bitset upper_approx(const BinaryRelation& r, const std::vector<std::string>& x) {
  return upper_approx(r, r.universe().set_of(x));
}

RoughPair approximate(const BinaryRelation& r, const std::vector<std::string>& x) {
  return approximate(r, r.universe().set_of(x));
}

std::string to_string(JClass c) {
  switch (c) {
    case JClass::j_minus: return "j_minus";
    case JClass::j_star: return "j_star";
    case JClass::j_plus: return "j_plus";
  }
  throw InternalError("unreachable JClass");
}

RoughSetLattice::RoughSetLattice(BinaryRelation relation, std::vector<RoughPair> pairs)
    : relation_(std::move(relation)), pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end(), rough_canonical_less);
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
  if (pairs_.empty()) throw InternalError("rough-set family must not be empty");
}

std::optional<std::size_t> RoughSetLattice::find(const RoughPair& p) const noexcept {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p, rough_canonical_less);
  if (it == pairs_.end() || !(*it == p)) return std::nullopt;
  return static_cast<std::size_t>(it - pairs_.begin());
}

std::size_t RoughSetLattice::index_of(const RoughPair& p) const {
  auto i = find(p);
  if (!i) throw InputError("pair is not in the rough-set family");
  return *i;
}

std::size_t RoughSetLattice::join(std::size_t i, std::size_t j) const {
  RoughPair p{pairs_.at(i).lower | pairs_.at(j).lower, pairs_.at(i).upper | pairs_.at(j).upper};
  auto k = find(p);
  if (!k)
    throw LatticeError("rough-set family is not closed under join (relation is not a quasiorder)");
  return *k;
}

std::size_t RoughSetLattice::meet(std::size_t i, std::size_t j) const {
  RoughPair p{pairs_.at(i).lower & pairs_.at(j).lower, pairs_.at(i).upper & pairs_.at(j).upper};
  auto k = find(p);
  if (!k)
    throw LatticeError("rough-set family is not closed under meet (relation is not a quasiorder)");
  return *k;
}

std::size_t RoughSetLattice::bottom() const {
  auto i = find(RoughPair{universe().empty_set(), universe().empty_set()});
  if (!i) throw InternalError("rough-set family lacks its bottom pair");
  return *i;
}

std::size_t RoughSetLattice::top() const {
  auto i = find(RoughPair{universe().full_set(), universe().full_set()});
  if (!i) throw InternalError("rough-set family lacks its top pair");
  return *i;
}

std::string RoughSetLattice::pair_name(std::size_t i) const {
  const RoughPair& p = pairs_.at(i);
  return "(" + universe().format(p.lower) + "," + universe().format(p.upper) + ")";
}

namespace {

// All distinct approximation pairs by scanning the full powerset.
std::vector<RoughPair> pair_family_bruteforce(const BinaryRelation& r, std::size_t max_universe) {
  const std::size_t n = r.size();
  if (n > max_universe)
    throw CapacityError("universe of size " + std::to_string(n) +
                        " exceeds the brute-force bound " + std::to_string(max_universe) +
                        "; use the generated enumeration");
  std::vector<RoughPair> pairs;
  pairs.reserve(std::size_t{1} << n);
  Bitset x(n);
  for (std::uint64_t mask = 0;; ++mask) {
    for (std::size_t b = 0; b < n; ++b) x[b] = (mask >> b) & 1;
    pairs.push_back(approximate(r, x));
    if (mask + 1 == (std::uint64_t{1} << n)) break;
  }
  return pairs;
}

}  // namespace

RoughSetLattice enumerate_rs_bruteforce(const BinaryRelation& r, std::size_t max_universe) {
  require_nonempty(r);
  require_quasiorder(r, "rough-set lattice enumeration");
  return RoughSetLattice(r, pair_family_bruteforce(r, max_universe));
}

std::vector<TaggedPair> rs_join_irreducibles(const BinaryRelation& r) {
  require_nonempty(r);
  require_quasiorder(r, "join-irreducible enumeration");
  std::vector<TaggedPair> out;
  const std::size_t n = r.size();
  auto add = [&](RoughPair p, JClass cls, std::size_t witness) {
    for (const auto& t : out)
      if (t.pair == p) return;  // same pair can arise from several witnesses
    out.push_back(TaggedPair{std::move(p), cls, witness});
  };
  for (std::size_t x = 0; x < n; ++x) {
    const Bitset& rx = r.successors(x);
    if (rx.count() >= 2) {
      Bitset singleton(n);
      singleton.set(x);
      add(RoughPair{Bitset(n), upper_approx(r, singleton)}, JClass::j_minus, x);
      add(RoughPair{rx, upper_approx(r, rx)}, JClass::j_plus, x);
    } else {
      add(RoughPair{rx, upper_approx(r, rx)}, JClass::j_star, x);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const TaggedPair& a, const TaggedPair& b) {
              return rough_canonical_less(a.pair, b.pair);
            });
  return out;
}

RoughSetLattice enumerate_rs_generated(const BinaryRelation& r) {
  std::vector<TaggedPair> gens = rs_join_irreducibles(r);
  const std::size_t m = gens.size();
  const std::size_t n = r.size();

  // Enumerate the down-closed subsets of the generator poset. The canonical
  // pair order is a linear extension, so a generator may enter a downset
  // exactly when everything below it is already in. Every element of RS is
  // the coordinatewise union of such a downset (joins of arbitrary subsets
  // coincide with joins of their down-closures).
  std::vector<Bitset> below(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < i; ++k)
      if (rough_leq(gens[k].pair, gens[i].pair)) below[i].set(k);

  std::vector<RoughPair> family;
  Bitset chosen(m);
  std::vector<RoughPair> stack;
  stack.push_back(RoughPair{Bitset(n), Bitset(n)});

  auto recurse = [&](auto&& self, std::size_t i) -> void {
    if (i == m) {
      family.push_back(stack.back());
      return;
    }
    self(self, i + 1);  // exclude gens[i]
    if (below[i].is_subset_of(chosen)) {
      chosen.set(i);
      stack.push_back(RoughPair{stack.back().lower | gens[i].pair.lower,
                                stack.back().upper | gens[i].pair.upper});
      self(self, i + 1);
      stack.pop_back();
      chosen.reset(i);
    }
  };
  recurse(recurse, 0);
  return RoughSetLattice(r, std::move(family));
}

RoughPair rs_negation(const RoughSetLattice& rs, const RoughPair& p) {
  rs.index_of(p);  // membership check
  RoughPair neg{~p.upper, ~p.lower};
  if (!rs.find(neg))
    throw InternalError("negation left the rough-set family at " +
                        rs.universe().format(p.lower) + "," + rs.universe().format(p.upper));
  return neg;
}

StonePair stone_pseudocomplements(const RoughSetLattice& rs, const RoughPair& p) {
  if (!rs.relation().is_equivalence())
    throw RelationClassError("Stone pseudocomplements require an equivalence relation");
  std::size_t i = rs.index_of(p);
  StonePair out{RoughPair{~p.upper, ~p.upper}, RoughPair{~p.lower, ~p.lower}};

  // Both closed forms are verified against their defining property.
  std::size_t pc = rs.index_of(out.pseudocomplement);
  std::size_t dual = rs.index_of(out.dual_pseudocomplement);
  std::size_t bottom = rs.bottom(), top = rs.top();
  for (std::size_t q = 0; q < rs.size(); ++q) {
    bool disjoint = rs.meet(i, q) == bottom;
    if (disjoint != rs.leq(q, pc))
      throw InternalError("pseudocomplement defining property failed at " + rs.pair_name(q));
    bool covering = rs.join(i, q) == top;
    if (covering != rs.leq(dual, q))
      throw InternalError("dual pseudocomplement defining property failed at " + rs.pair_name(q));
  }
  return out;
}

std::vector<Component> decompose(const BinaryRelation& r, std::size_t max_universe) {
  require_nonempty(r);
  if (!r.is_left_total())
    throw RelationClassError("decomposition requires a left-total relation");

  const bool quasi = r.is_quasiorder();
  auto family = [&](const BinaryRelation& rel) {
    return quasi ? enumerate_rs_generated(rel)
                 : RoughSetLattice(rel, pair_family_bruteforce(rel, max_universe));
  };

  std::vector<Component> out;
  std::uint64_t product = 1;
  for (const Bitset& block : r.connected_components()) {
    BinaryRelation sub = r.restrict_to(block);
    out.push_back(Component{block, family(sub)});
    product *= out.back().rs.size();
  }
  std::size_t whole = family(r).size();
  if (product != whole)
    throw InternalError("component product " + std::to_string(product) +
                        " does not match |RS| = " + std::to_string(whole));
  return out;
}

}  // namespace rsn
