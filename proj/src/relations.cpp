#include "rsn/relations.hpp"

#include <algorithm>
#include <numeric>

namespace rsn {

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InputError("universe element name must not be empty");
    auto [it, fresh] = index_.emplace(names_[i], i);
    if (!fresh) throw InputError("duplicate universe element: " + names_[i]);
  }
}

std::size_t Universe::index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw InputError("unknown element: " + name);
  return it->second;
}

std::optional<std::size_t> Universe::find(const std::string& name) const noexcept {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Bitset Universe::set_of(const std::vector<std::string>& elements) const {
  Bitset b(size());
  for (const auto& e : elements) b.set(index(e));
  return b;
}

std::vector<std::string> Universe::render(const Bitset& s) const {
  std::vector<std::string> out;
  out.reserve(s.count());
  for (std::size_t i = s.find_first(); i != Bitset::npos; i = s.find_next(i))
    out.push_back(names_.at(i));
  return out;
}

std::string Universe::format(const Bitset& s) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = s.find_first(); i != Bitset::npos; i = s.find_next(i)) {
    if (!first) out += ",";
    out += names_.at(i);
    first = false;
  }
  out += "}";
  return out;
}

ClosureMode closure_mode_from_string(const std::string& s) {
  if (s == "none") return ClosureMode::none;
  if (s == "reflexive") return ClosureMode::reflexive;
  if (s == "transitive") return ClosureMode::transitive;
  if (s == "reflexive_transitive") return ClosureMode::reflexive_transitive;
  throw InputError("unknown closure mode: " + s);
}

std::string to_string(ClosureMode mode) {
  switch (mode) {
    case ClosureMode::none: return "none";
    case ClosureMode::reflexive: return "reflexive";
    case ClosureMode::transitive: return "transitive";
    case ClosureMode::reflexive_transitive: return "reflexive_transitive";
  }
  throw InternalError("unreachable closure mode");
}

BinaryRelation::BinaryRelation(Universe universe, std::vector<Bitset> successors)
    : universe_(std::move(universe)), succ_(std::move(successors)) {
  const std::size_t n = universe_.size();
  if (succ_.size() != n) throw InputError("relation rows do not match universe size");
  for (const auto& row : succ_)
    if (row.size() != n) throw InputError("relation row width does not match universe size");
  pred_.assign(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = succ_[x].find_first(); y != Bitset::npos; y = succ_[x].find_next(y))
      pred_[y].set(x);
}

std::vector<NamedPair> BinaryRelation::pairs() const {
  std::vector<NamedPair> out;
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = succ_[x].find_first(); y != Bitset::npos; y = succ_[x].find_next(y))
      out.emplace_back(universe_.name(x), universe_.name(y));
  return out;
}

bool BinaryRelation::is_reflexive() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (!succ_[x].test(x)) return false;
  return true;
}

bool BinaryRelation::is_transitive() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = succ_[x].find_first(); y != Bitset::npos; y = succ_[x].find_next(y))
      if (!succ_[y].is_subset_of(succ_[x])) return false;
  return true;
}

bool BinaryRelation::is_symmetric() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (succ_[x] != pred_[x]) return false;
  return true;
}

bool BinaryRelation::is_antisymmetric() const {
  for (std::size_t x = 0; x < size(); ++x) {
    Bitset mutual = succ_[x] & pred_[x];
    mutual.reset(x);
    if (mutual.any()) return false;
  }
  return true;
}

bool BinaryRelation::is_left_total() const {
  for (std::size_t x = 0; x < size(); ++x)
    if (succ_[x].none()) return false;
  return true;
}

namespace {

constexpr std::size_t no_root = static_cast<std::size_t>(-1);

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

std::vector<Bitset> BinaryRelation::connected_components() const {
  const std::size_t n = size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = succ_[x].find_first(); y != Bitset::npos; y = succ_[x].find_next(y)) {
      std::size_t a = find_root(parent, x), b = find_root(parent, y);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<Bitset> blocks;
  std::vector<std::size_t> block_of(n, no_root);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t r = find_root(parent, x);
    if (block_of[r] == no_root) {
      block_of[r] = blocks.size();
      blocks.emplace_back(n);
    }
    blocks[block_of[r]].set(x);
  }
  return blocks;  // ordered by least member since x ascends
}

BinaryRelation BinaryRelation::restrict_to(const Bitset& block) const {
  if (block.size() != size()) throw InputError("block width does not match universe size");
  std::vector<std::string> names;
  std::vector<std::size_t> old_index;
  for (std::size_t x = block.find_first(); x != Bitset::npos; x = block.find_next(x)) {
    names.push_back(universe_.name(x));
    old_index.push_back(x);
  }
  const std::size_t m = names.size();
  std::vector<Bitset> rows(m, Bitset(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (succ_[old_index[i]].test(old_index[j])) rows[i].set(j);
  return BinaryRelation(Universe(std::move(names)), std::move(rows));
}

BinaryRelation build_relation(Universe universe, const std::vector<NamedPair>& pairs,
                              ClosureMode mode) {
  const std::size_t n = universe.size();
  std::vector<Bitset> rows(n, Bitset(n));
  for (const auto& [a, b] : pairs) rows[universe.index(a)].set(universe.index(b));

  const bool reflexive =
      mode == ClosureMode::reflexive || mode == ClosureMode::reflexive_transitive;
  const bool transitive =
      mode == ClosureMode::transitive || mode == ClosureMode::reflexive_transitive;
  if (reflexive)
    for (std::size_t x = 0; x < n; ++x) rows[x].set(x);
  if (transitive) {
    // Warshall, row-bitset form: least transitive superset.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t x = 0; x < n; ++x)
        if (rows[x].test(k)) rows[x] |= rows[k];
  }
  return BinaryRelation(std::move(universe), std::move(rows));
}

Bitset neighborhood(const BinaryRelation& r, const std::string& x) {
  return r.successors(r.universe().index(x));
}

Bitset inverse_neighborhood(const BinaryRelation& r, const std::string& x) {
  return r.predecessors(r.universe().index(x));
}

}  // namespace rsn
