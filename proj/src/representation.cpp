#include "rsn/representation.hpp"

#include <algorithm>

namespace rsn {

FiniteLattice to_finite_lattice(const RoughSetLattice& rs) {
  std::vector<std::string> names;
  names.reserve(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) names.push_back(rs.pair_name(i));
  std::vector<Bitset> rows(rs.size(), Bitset(rs.size()));
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < rs.size(); ++b)
      if (rs.leq(a, b)) rows[a].set(b);
  return validate_lattice(std::move(names), std::move(rows));
}

namespace {

std::vector<std::size_t> rs_negation_map(const RoughSetLattice& rs) {
  std::vector<std::size_t> neg(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) neg[i] = rs.index_of(rs_negation(rs, rs.pair(i)));
  return neg;
}

}  // namespace

DeMorganAlgebra rs_algebra(const RoughSetLattice& rs) {
  return DeMorganAlgebra(to_finite_lattice(rs), rs_negation_map(rs));
}

DeMorganAlgebra as_abstract(const RoughSetLattice& rs, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) names.push_back(prefix + std::to_string(i));
  std::vector<Bitset> rows(rs.size(), Bitset(rs.size()));
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < rs.size(); ++b)
      if (rs.leq(a, b)) rows[a].set(b);
  return DeMorganAlgebra(validate_lattice(std::move(names), std::move(rows)),
                         rs_negation_map(rs));
}

namespace {

void require_star_ready(const DeMorganAlgebra& a) {
  for (const LawCheck& c : verify_demorgan(a))
    if (!c.ok())
      throw PreconditionError(c.law, "law " + c.law + " fails; the construction needs a "
                                     "distributive Kleene algebra");
  if (LawCheck k = verify_kleene(a); !k.ok())
    throw PreconditionError(k.law, "law " + k.law + " fails; the construction needs a "
                                   "distributive Kleene algebra");
  if (!a.lattice().distributivity().ok)
    throw PreconditionError("distributive", "the lattice is not distributive; the construction "
                                            "needs a distributive Kleene algebra");
}

std::vector<std::size_t> rho_map(const JPartition& part) {
  std::vector<std::size_t> rho(part.j.list.size());
  for (std::size_t pos = 0; pos < part.j.list.size(); ++pos) {
    std::size_t j = part.j.list[pos];
    rho[pos] = part.j_plus.test(j) ? part.star_map[j] : j;
  }
  return rho;
}

BinaryRelation rj_from_partition(const DeMorganAlgebra& a, const JPartition& part,
                                 const std::vector<std::size_t>& rho) {
  const auto& jl = part.j.list;
  if (jl.empty())
    throw PreconditionError("nontrivial",
                            "the one-element algebra has no join-irreducibles and rough-set "
                            "universes are non-empty; the construction needs 0 != 1");
  std::vector<std::string> names;
  names.reserve(jl.size());
  for (std::size_t j : jl) names.push_back(a.name(j));
  Universe u(names);
  const FiniteLattice& l = a.lattice();
  std::vector<Bitset> succ(jl.size(), Bitset(jl.size()));
  for (std::size_t x = 0; x < jl.size(); ++x)
    for (std::size_t y = 0; y < jl.size(); ++y)
      if (l.leq(rho[x], rho[y])) succ[x].set(y);
  return BinaryRelation(std::move(u), std::move(succ));
}

}  // namespace

BinaryRelation build_rj(const DeMorganAlgebra& a) {
  require_star_ready(a);
  JPartition part = partition_j(a);
  return rj_from_partition(a, part, rho_map(part));
}

Representation represent(const DeMorganAlgebra& a) {
  AlgebraReport report = verify_algebra(a);
  if (!report.nelson) {
    for (const LawCheck& c : report.checks)
      if (c.status == CheckStatus::fail)
        throw PreconditionError(c.law, "the algebra is not a Nelson algebra: law " + c.law +
                                           " fails");
    throw PreconditionError("nelson", "the algebra is not a Nelson algebra");
  }

  const FiniteLattice& l = a.lattice();
  JPartition part = partition_j(a);
  const std::vector<std::size_t>& jl = part.j.list;
  std::vector<std::size_t> rho = rho_map(part);
  BinaryRelation relation = rj_from_partition(a, part, rho);

  bool quasiorder = relation.is_quasiorder();
  if (!quasiorder)
    throw InternalError("the constructed relation is not a quasiorder; this contradicts the "
                        "representation theorem and is a bug");
  RoughSetLattice rs = enumerate_rs_generated(relation);

  std::vector<RoughPair> phi;
  phi.reserve(jl.size());
  for (std::size_t pos = 0; pos < jl.size(); ++pos) {
    if (part.j_minus.test(jl[pos])) {
      phi.push_back(RoughPair{relation.universe().empty_set(), relation.predecessors(pos)});
    } else {
      const Bitset& rx = relation.successors(pos);
      phi.push_back(RoughPair{rx, upper_approx(relation, rx)});
    }
  }

  Representation rep{std::move(report), jl,  std::move(rho), relation.universe(),
                     relation,          phi, std::move(rs),  {},
                     {}};
  rep.verdicts.quasiorder = quasiorder;

  // φ lands on the join-irreducibles of RS, bijectively, in both orders.
  std::vector<TaggedPair> tagged = rs_join_irreducibles(rep.relation);
  std::vector<std::size_t> phi_rs(jl.size(), no_index);
  bool order_iso = tagged.size() == jl.size();
  std::vector<std::size_t> phi_tag(jl.size(), no_index);
  for (std::size_t pos = 0; pos < jl.size(); ++pos) {
    std::optional<std::size_t> at = rep.rs.find(rep.phi[pos]);
    if (!at) {
      order_iso = false;
      continue;
    }
    phi_rs[pos] = *at;
    for (std::size_t t = 0; t < tagged.size(); ++t)
      if (tagged[t].pair == rep.phi[pos]) phi_tag[pos] = t;
    if (phi_tag[pos] == no_index) order_iso = false;
  }
  if (order_iso) {
    std::vector<bool> hit(tagged.size(), false);
    for (std::size_t t : phi_tag) {
      if (hit[t]) order_iso = false;
      hit[t] = true;
    }
  }
  if (order_iso)
    for (std::size_t i = 0; i < jl.size() && order_iso; ++i)
      for (std::size_t k = 0; k < jl.size(); ++k)
        if (l.leq(jl[i], jl[k]) != rough_leq(rep.phi[i], rep.phi[k])) {
          order_iso = false;
          break;
        }
  rep.verdicts.order_iso = order_iso;

  // Star compatibility and class match, with the RS side computed on its own.
  bool star_compatible = order_iso;
  bool classes_match = order_iso;
  if (order_iso) {
    try {
      DeMorganAlgebra mirror = rs_algebra(rep.rs);
      JPartition mpart = partition_j(mirror);
      for (std::size_t pos = 0; pos < jl.size(); ++pos) {
        std::size_t spos = no_index;  // position of j* in jl
        std::size_t sj = part.star_map[jl[pos]];
        for (std::size_t k = 0; k < jl.size(); ++k)
          if (jl[k] == sj) spos = k;
        if (spos == no_index || mpart.star_map[phi_rs[pos]] != phi_rs[spos])
          star_compatible = false;

        JClass expect = part.j_minus.test(jl[pos])  ? JClass::j_minus
                        : part.j_star.test(jl[pos]) ? JClass::j_star
                                                    : JClass::j_plus;
        if (tagged[phi_tag[pos]].cls != expect) classes_match = false;
        bool mirror_minus = mpart.j_minus.test(phi_rs[pos]);
        bool mirror_star = mpart.j_star.test(phi_rs[pos]);
        JClass mirror_cls = mirror_minus ? JClass::j_minus
                            : mirror_star ? JClass::j_star
                                          : JClass::j_plus;
        if (mirror_cls != expect) classes_match = false;
      }
    } catch (const Error&) {
      star_compatible = false;
      classes_match = false;
    }
  }
  rep.verdicts.star_compatible = star_compatible;
  rep.verdicts.classes_match = classes_match;

  // Birkhoff extension and the operations it must carry over.
  bool algebra_iso = order_iso;
  rep.iso.assign(a.size(), no_index);
  if (order_iso) {
    try {
      FiniteLattice target = to_finite_lattice(rep.rs);
      std::vector<std::size_t> seed(a.size(), no_index);
      for (std::size_t pos = 0; pos < jl.size(); ++pos) seed[jl[pos]] = phi_rs[pos];
      rep.iso = birkhoff_extend(l, target, seed);
      std::vector<std::size_t> impl = weak_impl_table(a);
      for (std::size_t x = 0; x < a.size() && algebra_iso; ++x) {
        std::size_t ax = rep.iso[x];
        std::size_t neg_ax = rep.rs.index_of(rs_negation(rep.rs, rep.rs.pair(ax)));
        if (rep.iso[a.neg(x)] != neg_ax) algebra_iso = false;
        for (std::size_t y = 0; y < a.size() && algebra_iso; ++y) {
          std::size_t lhs = rep.iso[impl[x * a.size() + y]];
          std::size_t rhs =
              relative_pseudocomplement(target, ax, target.join(neg_ax, rep.iso[y]));
          if (lhs != rhs) algebra_iso = false;
        }
      }
    } catch (const Error&) {
      algebra_iso = false;
      rep.iso.assign(a.size(), no_index);
    }
  }
  rep.verdicts.algebra_iso = algebra_iso;

  rep.verdicts.minimality = minimality_check(rep).ok();
  return rep;
}

BooleanCharacterization boolean_characterization(const DeMorganAlgebra& a) {
  Representation rep = represent(a);
  const FiniteLattice& l = a.lattice();
  BooleanCharacterization out;

  out.r_partial_order = rep.relation.is_partial_order();

  out.r_identity = true;
  for (std::size_t x = 0; x < rep.relation.size(); ++x) {
    const Bitset& s = rep.relation.successors(x);
    if (s.count() != 1 || !s.test(x)) out.r_identity = false;
  }

  out.rs_powerset = rep.j_list.size() < 64 &&
                    rep.rs.size() == (std::size_t{1} << rep.j_list.size());
  for (const RoughPair& p : rep.rs.pairs())
    if (p.lower != p.upper) out.rs_powerset = false;

  out.algebra_boolean = true;
  for (std::size_t x = 0; x < a.size(); ++x)
    if (l.meet(x, a.neg(x)) != l.bottom() || l.join(x, a.neg(x)) != l.top())
      out.algebra_boolean = false;

  if (out.r_partial_order != out.r_identity || out.r_identity != out.rs_powerset ||
      out.rs_powerset != out.algebra_boolean)
    throw InternalError("the four Boolean-degeneracy criteria disagree; this contradicts their "
                        "equivalence and is a bug");
  return out;
}

LawCheck minimality_check(const Representation& r) {
  const BinaryRelation& rel = r.relation;
  const Universe& u = rel.universe();
  for (std::size_t x = 0; x < rel.size(); ++x) {
    // Kernel class of x: mutual reachability.
    Bitset kernel = rel.successors(x) & rel.predecessors(x);
    // Expected class: the ρ fiber of x.
    Bitset fiber(rel.size());
    for (std::size_t y = 0; y < rel.size(); ++y)
      if (r.rho[y] == r.rho[x]) fiber.set(y);
    if (kernel != fiber)
      return LawCheck{"minimality",
                      CheckStatus::fail,
                      {u.name(x)},
                      "a kernel class of the relation is not a star fiber"};
    if (kernel.count() > 2)
      return LawCheck{"minimality",
                      CheckStatus::fail,
                      {u.name(x)},
                      "a kernel class has more than two elements"};
  }
  return LawCheck{"minimality", CheckStatus::pass, {}, ""};
}

LawCheck semisimple_check(const DeMorganAlgebra& a) {
  std::optional<std::vector<std::size_t>> delta = find_delta(a);
  if (!delta)
    throw PreconditionError("semisimple",
                            "no Δ operation exists, so the algebra is not semisimple");
  BinaryRelation rj = build_rj(a);
  if (rj.is_equivalence()) return LawCheck{"semisimple", CheckStatus::pass, {}, ""};
  const Universe& u = rj.universe();
  for (std::size_t x = 0; x < rj.size(); ++x)
    for (std::size_t y = 0; y < rj.size(); ++y)
      if (rj.contains(x, y) && !rj.contains(y, x))
        return LawCheck{"semisimple",
                        CheckStatus::fail,
                        {u.name(x), u.name(y)},
                        "Δ exists but the constructed relation is not symmetric"};
  return LawCheck{
      "semisimple", CheckStatus::fail, {}, "Δ exists but the constructed relation misbehaves"};
}

}  // namespace rsn
