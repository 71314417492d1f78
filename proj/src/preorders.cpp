#include "rsn/preorders.hpp"

#include <array>
#include <utility>

namespace rsn {

namespace {

enum class Slot : unsigned char { open, yes, no };

struct Search {
  std::size_t n;
  std::vector<std::array<std::size_t, 2>> slots;  // off-diagonal pairs, row-major
  std::vector<Slot> state;                        // n*n
  std::vector<Bitset> reach;                      // closure of yes-edges, diagonal set
  std::vector<BinaryRelation>* out;
  const Universe* u;

  Slot& at(std::size_t x, std::size_t y) { return state[x * n + y]; }

  void emit() {
    std::vector<Bitset> rows(reach.begin(), reach.end());
    out->emplace_back(*u, std::move(rows));
  }

  // Set (x, y) and everything transitivity forces from it. Returns false and
  // rolls back through `trail` if a forced pair was already decided no.
  bool close_edge(std::size_t x, std::size_t y,
                  std::vector<std::array<std::size_t, 2>>& trail) {
    std::vector<std::array<std::size_t, 2>> fresh;
    for (std::size_t p = 0; p < n; ++p) {
      if (!reach[p].test(x)) continue;
      for (std::size_t q = 0; q < n; ++q)
        if (reach[y].test(q) && !reach[p].test(q)) fresh.push_back({p, q});
    }
    for (auto [p, q] : fresh) {
      if (at(p, q) == Slot::no) return false;
      if (reach[p].test(q)) continue;
      reach[p].set(q);
      at(p, q) = Slot::yes;
      trail.push_back({p, q});
    }
    return true;
  }

  void undo(const std::vector<std::array<std::size_t, 2>>& trail) {
    for (auto [p, q] : trail) {
      reach[p].reset(q);
      at(p, q) = Slot::open;
    }
  }

  void run(std::size_t k) {
    if (k == slots.size()) {
      emit();
      return;
    }
    auto [x, y] = slots[k];
    Slot s = at(x, y);
    if (s == Slot::yes || s == Slot::open) {
      if (s == Slot::open) {  // the no-branch first: ascending adjacency order
        at(x, y) = Slot::no;
        run(k + 1);
        at(x, y) = Slot::open;
      }
      std::vector<std::array<std::size_t, 2>> trail;
      if (s == Slot::open) {
        at(x, y) = Slot::yes;
        reach[x].set(y);
        trail.push_back({x, y});
      }
      if (close_edge(x, y, trail)) run(k + 1);
      undo(trail);
    } else {
      run(k + 1);
    }
  }
};

}  // namespace

std::vector<BinaryRelation> enumerate_preorders(const Universe& u) {
  const std::size_t n = u.size();
  Search s;
  s.n = n;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (x != y) s.slots.push_back({x, y});
  s.state.assign(n * n, Slot::open);
  s.reach.assign(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) s.reach[x].set(x);
  std::vector<BinaryRelation> result;
  s.out = &result;
  s.u = &u;
  s.run(0);
  return result;
}

BinaryRelation random_preorder(const Universe& u, std::mt19937_64& rng) {
  const std::size_t n = u.size();
  // Plain modulo keeps the draw identical across standard libraries.
  std::size_t max_edges = (12 * n) / 10 + 1;
  std::size_t m = static_cast<std::size_t>(rng() % (max_edges + 1));
  std::vector<NamedPair> pairs;
  pairs.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t x = static_cast<std::size_t>(rng() % n);
    std::size_t y = static_cast<std::size_t>(rng() % n);
    pairs.emplace_back(u.name(x), u.name(y));
  }
  return build_relation(u, pairs, ClosureMode::reflexive_transitive);
}

}  // namespace rsn
