#include "rsn/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace rsn {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  throw InternalError("unreachable CheckStatus");
}

DeMorganAlgebra::DeMorganAlgebra(FiniteLattice lattice, std::vector<std::size_t> negation)
    : lattice_(std::move(lattice)), negation_(std::move(negation)) {
  if (negation_.size() != lattice_.size())
    throw InputError("negation map size does not match the lattice");
  for (std::size_t x : negation_)
    if (x >= lattice_.size()) throw InputError("negation map target out of range");
}

namespace {

LawCheck pass(std::string law) { return LawCheck{std::move(law), CheckStatus::pass, {}, ""}; }

LawCheck fail(const DeMorganAlgebra& a, std::string law, std::initializer_list<std::size_t> w,
              std::string note = "") {
  LawCheck c{std::move(law), CheckStatus::fail, {}, std::move(note)};
  for (std::size_t i : w) c.witness.push_back(a.name(i));
  return c;
}

LawCheck skipped(std::string law, std::string note) {
  return LawCheck{std::move(law), CheckStatus::skipped, {}, std::move(note)};
}

}  // namespace

LawCheck verify_involution(const DeMorganAlgebra& a) {
  for (std::size_t x = 0; x < a.size(); ++x)
    if (a.neg(a.neg(x)) != x) return fail(a, "demorgan.involution", {x});
  return pass("demorgan.involution");
}

LawCheck verify_antitone(const DeMorganAlgebra& a) {
  const FiniteLattice& l = a.lattice();
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (l.leq(x, y) != l.leq(a.neg(y), a.neg(x)))
        return fail(a, "demorgan.antitonicity", {x, y});
  return pass("demorgan.antitonicity");
}

std::vector<LawCheck> verify_demorgan(const DeMorganAlgebra& a) {
  return {verify_involution(a), verify_antitone(a)};
}

LawCheck verify_kleene(const DeMorganAlgebra& a) {
  const FiniteLattice& l = a.lattice();
  for (std::size_t x = 0; x < a.size(); ++x) {
    std::size_t lo = l.meet(x, a.neg(x));
    for (std::size_t y = 0; y < a.size(); ++y)
      if (!l.leq(lo, l.join(y, a.neg(y)))) return fail(a, "kleene", {x, y});
  }
  return pass("kleene");
}

KleeneCones cones(const DeMorganAlgebra& a) {
  const FiniteLattice& l = a.lattice();
  KleeneCones k{Bitset(a.size()), Bitset(a.size()), l.bottom(), l.top()};
  for (std::size_t x = 0; x < a.size(); ++x) {
    k.lower_cone.set(l.meet(x, a.neg(x)));
    k.upper_cone.set(l.join(x, a.neg(x)));
  }
  k.alpha = l.big_join(k.lower_cone);
  k.beta = l.big_meet(k.upper_cone);
  if (k.lower_cone != l.down_set(k.alpha))
    throw InternalError("lower cone is not the down-set of its join (is the algebra Kleene?)");
  if (k.upper_cone != l.up_set(k.beta))
    throw InternalError("upper cone is not the up-set of its meet (is the algebra Kleene?)");
  if (a.neg(k.alpha) != k.beta) throw InternalError("cone bounds are not negation partners");
  return k;
}

std::size_t star(const DeMorganAlgebra& a, std::size_t j) {
  const FiniteLattice& l = a.lattice();
  JoinIrreducibles ji = join_irreducibles(l);
  if (j >= a.size() || !ji.members.test(j))
    throw InputError("star is defined on join-irreducible elements only");
  std::size_t acc = l.top();
  for (std::size_t x = 0; x < a.size(); ++x)
    if (!l.leq(x, a.neg(j))) acc = l.meet(acc, x);
  return acc;
}

namespace {

std::vector<std::size_t> star_table(const DeMorganAlgebra& a, const JoinIrreducibles& ji) {
  const FiniteLattice& l = a.lattice();
  std::vector<std::size_t> st(a.size(), no_index);
  for (std::size_t j : ji.list) {
    std::size_t acc = l.top();
    for (std::size_t x = 0; x < a.size(); ++x)
      if (!l.leq(x, a.neg(j))) acc = l.meet(acc, x);
    st[j] = acc;
  }
  return st;
}

}  // namespace

JPartition partition_j(const DeMorganAlgebra& a) {
  const FiniteLattice& l = a.lattice();
  JPartition p{join_irreducibles(l), {}, Bitset(a.size()), Bitset(a.size()), Bitset(a.size())};
  p.star_map = star_table(a, p.j);

  auto law = [&](bool ok, const char* name, std::initializer_list<std::size_t> w) {
    if (ok) return;
    std::string msg = std::string("star-map law failed: ") + name + " (witness:";
    for (std::size_t i : w) msg += " " + a.name(i);
    msg += "); the algebra is not a distributive Kleene algebra";
    throw PreconditionError(name, msg);
  };

  // A⁻ as an image set, for the j_minus characterization below.
  Bitset lower_cone(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) lower_cone.set(l.meet(x, a.neg(x)));

  for (std::size_t j : p.j.list) {
    std::size_t s = p.star_map[j];
    law(p.j.members.test(s), "star.join_irreducible", {j});
    law(!l.leq(s, a.neg(j)), "star.not_below_negation", {j});
    law(p.star_map[s] == j, "star.involution", {j});
    law(l.leq(j, s) || l.leq(s, j), "star.comparability", {j});
    if (l.leq(j, s) && j != s) p.j_minus.set(j);
    else if (j == s) p.j_star.set(j);
    else p.j_plus.set(j);
  }
  for (std::size_t i : p.j.list)
    for (std::size_t j : p.j.list)
      if (l.leq(i, j)) law(l.leq(p.star_map[j], p.star_map[i]), "star.antitone", {i, j});
  for (std::size_t j : p.j.list) {
    law(p.j_minus.test(j) == lower_cone.test(j), "star.j_minus_is_lower_cone", {j});
    if (p.j_minus.test(j)) law(p.j_plus.test(p.star_map[j]), "star.class_pairing", {j});
  }
  return p;
}

LawCheck verify_star_closed_form(const DeMorganAlgebra& a) {
  const FiniteLattice& l = a.lattice();
  JoinIrreducibles ji = join_irreducibles(l);
  std::vector<std::size_t> st = star_table(a, ji);
  for (std::size_t x = 0; x < a.size(); ++x) {
    Bitset gens(a.size());
    for (std::size_t j : ji.list)
      if (!l.leq(st[j], x)) gens.set(j);
    if (l.big_join(gens) != a.neg(x)) return fail(a, "star.negation_closed_form", {x});
  }
  return pass("star.negation_closed_form");
}

ConditionM condition_m(const DeMorganAlgebra& a) {
  const FiniteLattice& l = a.lattice();
  JPartition part = partition_j(a);
  ConditionM out;
  for (std::size_t pi = 0; pi < part.j.list.size(); ++pi) {
    for (std::size_t qi = pi; qi < part.j.list.size(); ++qi) {
      std::size_t p = part.j.list[pi], q = part.j.list[qi];
      std::size_t ps = part.star_map[p], qs = part.star_map[q];
      bool admissible = l.leq(ps, p) && l.leq(ps, q) && l.leq(qs, p) && l.leq(qs, q);
      if (!admissible) continue;
      std::size_t found = no_index;
      for (std::size_t k : part.j.list)
        if (l.leq(ps, k) && l.leq(qs, k) && l.leq(k, p) && l.leq(k, q)) {
          found = k;
          break;
        }
      if (found == no_index) {
        out.ok = false;
        out.witness = {p, q};
        return out;
      }
      out.interpolants.emplace_back(p, q, found);
    }
  }
  return out;
}

InterpolationCheck interpolation_prime_filters(const DeMorganAlgebra& a) {
  const FiniteLattice& l = a.lattice();
  JoinIrreducibles ji = join_irreducibles(l);
  std::vector<std::size_t> st = star_table(a, ji);

  // Positive prime filters: [p) with [p) ⊆ g([p)) = [p*), i.e. p* ≤ p.
  std::vector<std::size_t> positive;
  for (std::size_t p : ji.list)
    if (l.leq(st[p], p)) positive.push_back(p);

  InterpolationCheck out;
  for (std::size_t p : positive)
    for (std::size_t q : positive) {
      if (!l.leq(st[q], p)) continue;  // need [p) ⊆ g([q)) = [q*)
      for (std::size_t x = 0; x < a.size(); ++x) {
        if (!l.leq(p, x)) continue;
        for (std::size_t y = 0; y < a.size(); ++y) {
          if (!l.leq(q, y)) continue;
          if (l.leq(l.meet(x, y), l.join(a.neg(x), a.neg(y)))) {
            out.ok = false;
            out.witness = {p, q, x, y};
            return out;
          }
        }
      }
    }
  return out;
}

std::size_t weak_impl(const DeMorganAlgebra& a, std::size_t x, std::size_t y) {
  const FiniteLattice& l = a.lattice();
  return relative_pseudocomplement(l, x, l.join(a.neg(x), y));
}

std::vector<std::size_t> weak_impl_table(const DeMorganAlgebra& a) {
  const FiniteLattice& l = a.lattice();
  const std::size_t n = a.size();
  const auto& d = l.distributivity();
  if (!d.ok)
    throw LatticeError("unsupported structure: weak implication needs a distributive lattice");

  // One pass per left argument: r(x, y) = ⋁{z | z∧x ≤ c(x)∨y}, accumulated
  // over z so the table costs O(n²) joins instead of n² pseudocomplements.
  std::vector<std::size_t> t(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) t[x * n + y] = l.bottom();
    for (std::size_t z = 0; z < n; ++z) {
      std::size_t zx = l.meet(z, x);
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t rhs = l.join(a.neg(x), y);
        if (l.leq(zx, rhs)) t[x * n + y] = l.join(t[x * n + y], z);
      }
    }
  }
  return t;
}

std::vector<LawCheck> verify_nelson(const DeMorganAlgebra& a) {
  const FiniteLattice& l = a.lattice();
  if (!l.distributivity().ok) {
    std::string note = "skipped: weak implication needs a distributive lattice";
    return {skipped("n1", note), skipped("n2", note), skipped("n3", note), skipped("n4", note),
            skipped("n5", note)};
  }
  const std::size_t n = a.size();
  std::vector<std::size_t> t = weak_impl_table(a);
  auto imp = [&](std::size_t x, std::size_t y) { return t[x * n + y]; };

  std::vector<LawCheck> out;
  {
    LawCheck c = pass("n1");
    for (std::size_t x = 0; x < n; ++x)
      if (imp(x, x) != l.top()) {
        c = fail(a, "n1", {x});
        break;
      }
    out.push_back(std::move(c));
  }
  {
    LawCheck c2 = pass("n2"), c3 = pass("n3");
    for (std::size_t x = 0; x < n && (c2.ok() || c3.ok()); ++x)
      for (std::size_t y = 0; y < n; ++y) {
        std::size_t base = l.join(a.neg(x), y);
        if (c2.ok() && l.meet(base, imp(x, y)) != base) c2 = fail(a, "n2", {x, y});
        if (c3.ok() && l.meet(x, imp(x, y)) != l.meet(x, base)) c3 = fail(a, "n3", {x, y});
        if (!c2.ok() && !c3.ok()) break;
      }
    out.push_back(std::move(c2));
    out.push_back(std::move(c3));
  }
  {
    LawCheck c = pass("n4");
    for (std::size_t x = 0; x < n && c.ok(); ++x)
      for (std::size_t y = 0; y < n && c.ok(); ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (imp(x, l.meet(y, z)) != l.meet(imp(x, y), imp(x, z))) {
            c = fail(a, "n4", {x, y, z});
            break;
          }
    out.push_back(std::move(c));
  }
  {
    LawCheck c = pass("n5");
    for (std::size_t x = 0; x < n && c.ok(); ++x)
      for (std::size_t y = 0; y < n && c.ok(); ++y)
        for (std::size_t z = 0; z < n; ++z)
          if (imp(l.meet(x, y), z) != imp(x, imp(y, z))) {
            c = fail(a, "n5", {x, y, z});
            break;
          }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

// Per-element Δ candidates from the two pointwise laws.
std::vector<Bitset> delta_candidates(const DeMorganAlgebra& a) {
  const FiniteLattice& l = a.lattice();
  std::vector<Bitset> cand(a.size(), Bitset(a.size()));
  for (std::size_t x = 0; x < a.size(); ++x) {
    std::size_t cx = a.neg(x);
    std::size_t lo = l.meet(x, cx);
    for (std::size_t d = 0; d < a.size(); ++d)
      if (l.join(cx, d) == l.top() && l.meet(cx, d) == lo) cand[x].set(d);
  }
  return cand;
}

bool delta_satisfies(const DeMorganAlgebra& a, const std::vector<std::size_t>& delta) {
  const FiniteLattice& l = a.lattice();
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (l.join(a.neg(x), delta[x]) != l.top()) return false;
    if (l.meet(x, a.neg(x)) != l.meet(a.neg(x), delta[x])) return false;
    for (std::size_t y = 0; y <= x; ++y)
      if (delta[l.meet(x, y)] != l.meet(delta[x], delta[y])) return false;
  }
  return true;
}

}  // namespace

DeltaSearch find_deltas(const DeMorganAlgebra& a, std::size_t cap) {
  const FiniteLattice& l = a.lattice();
  const std::size_t n = a.size();
  DeltaSearch out;
  out.cap = cap;

  std::vector<Bitset> cand = delta_candidates(a);
  for (const Bitset& c : cand)
    if (c.none()) return out;  // exhausted, no solutions

  // Assign along a linear extension (sorted by down-set size): when x gets a
  // value, x∧y is already assigned for every earlier y, so Δ(x∧y) = Δ(x)∧Δ(y)
  // can be enforced incrementally and a full assignment needs no recheck.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
    std::size_t cp = l.down_set(p).count(), cq = l.down_set(q).count();
    return cp != cq ? cp < cq : p < q;
  });

  std::vector<std::size_t> assigned(n, no_index);
  auto search = [&](auto&& self, std::size_t pos) -> bool {  // false = cap reached
    if (pos == n) {
      out.deltas.push_back(assigned);
      return out.deltas.size() < cap;
    }
    std::size_t x = order[pos];
    for (std::size_t d = cand[x].find_first(); d != Bitset::npos; d = cand[x].find_next(d)) {
      bool consistent = true;
      for (std::size_t prev = 0; prev < pos && consistent; ++prev) {
        std::size_t y = order[prev];
        std::size_t m = l.meet(x, y);
        std::size_t dm = (m == x) ? d : assigned[m];
        if (dm != l.meet(d, assigned[y])) consistent = false;
      }
      if (!consistent) continue;
      assigned[x] = d;
      if (!self(self, pos + 1)) {
        assigned[x] = no_index;
        return false;
      }
      assigned[x] = no_index;
    }
    return true;
  };
  out.exhausted = search(search, 0);
  return out;
}

std::optional<std::vector<std::size_t>> find_delta(const DeMorganAlgebra& a) {
  const FiniteLattice& l = a.lattice();
  if (l.distributivity().ok) {
    std::vector<std::size_t> closed(a.size());
    for (std::size_t x = 0; x < a.size(); ++x)
      closed[x] = relative_pseudocomplement(l, a.neg(x), x);
    if (delta_satisfies(a, closed)) return closed;
  }
  DeltaSearch s = find_deltas(a, 1);
  if (s.deltas.empty()) return std::nullopt;
  return s.deltas.front();
}

std::vector<LawCheck> verify_lukasiewicz(const DeMorganAlgebra& a,
                                         const std::vector<std::size_t>& delta) {
  if (delta.size() != a.size()) throw InputError("delta map size does not match the algebra");
  for (std::size_t d : delta)
    if (d >= a.size()) throw InputError("delta map target out of range");
  const FiniteLattice& l = a.lattice();
  const std::size_t n = a.size();
  std::vector<LawCheck> out;

  out.push_back(verify_involution(a));
  out.back().law = "l1";
  {
    LawCheck c = pass("l2");
    for (std::size_t x = 0; x < n && c.ok(); ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (a.neg(l.meet(x, y)) != l.join(a.neg(x), a.neg(y))) {
          c = fail(a, "l2", {x, y});
          break;
        }
    out.push_back(std::move(c));
  }
  {
    LawCheck c = pass("l3");
    for (std::size_t x = 0; x < n; ++x)
      if (l.join(a.neg(x), delta[x]) != l.top()) {
        c = fail(a, "l3", {x});
        break;
      }
    out.push_back(std::move(c));
  }
  {
    LawCheck c = pass("l4");
    for (std::size_t x = 0; x < n; ++x)
      if (l.meet(x, a.neg(x)) != l.meet(a.neg(x), delta[x])) {
        c = fail(a, "l4", {x});
        break;
      }
    out.push_back(std::move(c));
  }
  {
    LawCheck c = pass("l5");
    for (std::size_t x = 0; x < n && c.ok(); ++x)
      for (std::size_t y = 0; y < n; ++y)
        if (delta[l.meet(x, y)] != l.meet(delta[x], delta[y])) {
          c = fail(a, "l5", {x, y});
          break;
        }
    out.push_back(std::move(c));
  }
  return out;
}

const LawCheck* AlgebraReport::find(const std::string& law) const {
  for (const auto& c : checks)
    if (c.law == law) return &c;
  return nullptr;
}

AlgebraReport verify_algebra(const DeMorganAlgebra& a) {
  const FiniteLattice& l = a.lattice();
  AlgebraReport r;

  LawCheck inv = verify_involution(a);
  LawCheck ant = verify_antitone(a);
  r.demorgan = inv.ok() && ant.ok();
  r.checks.push_back(std::move(inv));
  r.checks.push_back(std::move(ant));

  LawCheck kle = verify_kleene(a);
  r.kleene = kle.ok();
  r.checks.push_back(std::move(kle));

  const auto& dist = l.distributivity();
  r.distributive = dist.ok;
  if (dist.ok) {
    r.checks.push_back(pass("distributive"));
  } else {
    r.checks.push_back(
        fail(a, "distributive", {dist.witness[0], dist.witness[1], dist.witness[2]}));
  }

  const bool star_ready = r.demorgan && r.distributive;
  const bool partition_ready = star_ready && r.kleene;

  if (star_ready) {
    r.checks.push_back(verify_star_closed_form(a));
  } else {
    r.checks.push_back(
        skipped("star.negation_closed_form", "needs De Morgan and a distributive lattice"));
  }

  ConditionM m;
  InterpolationCheck ip;
  if (partition_ready) {
    m = condition_m(a);
    if (m.ok) {
      r.checks.push_back(pass("condition_m"));
    } else {
      r.checks.push_back(fail(a, "condition_m", {m.witness[0], m.witness[1]}));
    }
    ip = interpolation_prime_filters(a);
    if (ip.ok) {
      r.checks.push_back(pass("interpolation"));
    } else {
      r.checks.push_back(
          fail(a, "interpolation", {ip.witness[0], ip.witness[1], ip.witness[2], ip.witness[3]}));
    }
    if (m.ok == ip.ok) {
      r.checks.push_back(pass("agreement.condition_m_interpolation"));
    } else {
      LawCheck c{"agreement.condition_m_interpolation", CheckStatus::fail, {},
                 "independent Nelson criteria disagree; this is a bug"};
      r.checks.push_back(std::move(c));
    }
  } else {
    std::string note = "needs a distributive Kleene algebra";
    r.checks.push_back(skipped("condition_m", note));
    r.checks.push_back(skipped("interpolation", note));
    r.checks.push_back(skipped("agreement.condition_m_interpolation", note));
  }

  std::vector<LawCheck> nelson = verify_nelson(a);
  bool n_all = true;
  for (auto& c : nelson) {
    n_all = n_all && c.ok();
    r.checks.push_back(std::move(c));
  }
  r.nelson = r.demorgan && r.kleene && r.distributive && n_all;
  if (partition_ready) {
    if ((n_all && m.ok && ip.ok) || (!n_all && !m.ok && !ip.ok)) {
      r.checks.push_back(pass("agreement.nelson_condition_m"));
    } else {
      LawCheck c{"agreement.nelson_condition_m", CheckStatus::fail, {},
                 "equational and condition (M) verdicts disagree; this is a bug"};
      r.checks.push_back(std::move(c));
    }
  } else {
    r.checks.push_back(skipped("agreement.nelson_condition_m", "needs a distributive Kleene algebra"));
  }

  if (r.demorgan) {
    r.delta = find_delta(a);
    if (r.delta) {
      std::vector<LawCheck> luk = verify_lukasiewicz(a, *r.delta);
      bool all = true;
      for (auto& c : luk) {
        all = all && c.ok();
        r.checks.push_back(std::move(c));
      }
      r.lukasiewicz = all;
    } else {
      r.lukasiewicz = false;
      LawCheck c{"lukasiewicz", CheckStatus::fail, {},
                 "no Δ satisfies the axioms (search exhausted)"};
      r.checks.push_back(std::move(c));
    }
  } else {
    r.checks.push_back(skipped("lukasiewicz", "needs a De Morgan negation"));
  }
  return r;
}

}  // namespace rsn
