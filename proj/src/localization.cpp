#include "biamalg/localization.hpp"

#include <algorithm>
#include <map>

namespace biamalg {

MultSet MultSet::make(const FiniteRing& ring, ElemSet members) {
  if (members.universe() != ring.size())
    throw Error(ErrorKind::invalid_argument, "multiplicative set does not match the ring");
  if (!members.contains(ring.one())) throw Error(ErrorKind::invalid_argument, "multiplicative set must contain 1");
  const auto list = members.to_vector();
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i; j < list.size(); ++j) {
      Elem st = ring.mul(list[i], list[j]);
      if (!members.contains(st))
        throw Error(ErrorKind::invalid_argument, "set is not multiplicatively closed: " + ring.label(list[i]) +
                                                     "*" + ring.label(list[j]) + " = " + ring.label(st));
    }
  return MultSet(ring, std::move(members));
}

MultSet mult_set_Sp(const RingHom& f, const Ideal& j, const Ideal& p) {
  const auto& a = f.domain();
  const auto& b = f.codomain();
  if (!(p.ring() == a)) throw Error(ErrorKind::invalid_argument, "prime ideal is not in the domain");
  if (!(j.ring() == b)) throw Error(ErrorKind::invalid_argument, "ideal is not in the codomain");
  if (!is_maximal_ideal(p)) throw Error(ErrorKind::invalid_argument, p.to_string() + " is not a prime ideal");
  ElemSet members(b.size());
  const auto js = j.elements();
  for (auto x : a.elements()) {
    if (p.contains(x)) continue;
    for (Elem y : js) members.insert(b.add(f(x), y));
  }
  try {
    return MultSet::make(b, std::move(members));
  } catch (const Error& e) {
    throw Error(ErrorKind::internal, std::string("f(A-p)+J: ") + e.what());
  }
}

MultSet prime_complement(const Ideal& p) {
  return mult_set_Sp(identity_hom(p.ring()), Ideal::zero(p.ring()), p);
}

Localization localize(const FiniteRing& ring, const MultSet& s) {
  if (!(s.ring() == ring)) throw Error(ErrorKind::invalid_argument, "multiplicative set belongs to another ring");
  ElemSet killed(ring.size());
  const auto list = s.members().to_vector();
  for (auto r : ring.elements())
    for (Elem x : list)
      if (ring.mul(x, r) == ring.zero()) {
        killed.insert(r);
        break;
      }
  auto kernel = Ideal::from_set(ring, std::move(killed));
  auto q = quotient_ring(ring, kernel);
  for (Elem x : list)
    if (!q.ring.is_unit(q.surjection(x)))
      throw Error(ErrorKind::internal, ring.label(x) + " does not become a unit in the localization");
  return Localization{q.ring, q.surjection, kernel};
}

Localization localize_at_prime(const Ideal& p) { return localize(p.ring(), prime_complement(p)); }

RingHom induced_hom(const RingHom& f, const Localization& source, const Localization& target) {
  if (!(source.canonical.domain() == f.domain()) || !(target.canonical.domain() == f.codomain()))
    throw Error(ErrorKind::invalid_argument, "localizations do not match the homomorphism");
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<Elem> table(source.ring.size(), Elem{unset});
  for (auto a : f.domain().elements()) {
    Elem x = source.canonical(a);
    Elem y = target.canonical(f(a));
    if (table[x.index].index == unset)
      table[x.index] = y;
    else if (table[x.index] != y)
      throw Error(ErrorKind::internal, "homomorphism does not descend to the localizations at " +
                                           f.domain().label(a));
  }
  return hom_from_table(source.ring, target.ring, std::move(table));
}

InducedLeg induced_hom_fp(const RingHom& f, const Ideal& j, const Ideal& p, const Localization& a_p) {
  auto target = localize(f.codomain(), mult_set_Sp(f, j, p));
  auto hom = induced_hom(f, a_p, target);
  auto j_s = extend_ideal(target.canonical, j);
  auto conductor_p = extend_ideal(a_p.canonical, preimage_ideal(f, j));
  if (!(preimage_ideal(hom, j_s) == conductor_p))
    throw Error(ErrorKind::internal, "localized conductor differs from the localization of the conductor");
  return InducedLeg{std::move(target), std::move(hom), std::move(j_s)};
}

// ---------------------------------------------------------------------------
// Isomorphism testing

namespace {

struct Invariant {
  std::size_t additive_order = 0;
  bool unit = false;
  std::size_t order_or_nilpotency = 0;  // 0: neither a unit nor nilpotent
  bool idempotent = false;
  std::size_t principal = 0;
  std::size_t annihilator = 0;
  std::size_t square_roots = 0;

  auto operator<=>(const Invariant&) const = default;
};

std::vector<Invariant> invariants(const FiniteRing& r) {
  std::vector<Invariant> out(r.size());
  for (auto a : r.elements()) {
    auto& inv = out[a.index];
    inv.additive_order = r.additive_order(a);
    inv.unit = r.is_unit(a);
    const Elem target = inv.unit ? r.one() : r.zero();
    Elem power = a;
    for (std::size_t k = 1; k <= r.size(); ++k) {
      if (power == target) {
        inv.order_or_nilpotency = k;
        break;
      }
      power = r.mul(power, a);
    }
    inv.idempotent = r.mul(a, a) == a;
    inv.principal = principal_set(r, a).count();
    for (auto b : r.elements()) {
      if (r.mul(a, b) == r.zero()) ++inv.annihilator;
      if (r.mul(b, b) == a) ++inv.square_roots;
    }
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteRing& r1, const FiniteRing& r2, std::vector<Invariant> inv1, std::vector<Invariant> inv2)
      : r1_(r1), r2_(r2), inv1_(std::move(inv1)), inv2_(std::move(inv2)) {
    std::map<Invariant, std::vector<Elem>> classes;
    for (auto y : r2_.elements()) classes[inv2_[y.index]].push_back(y);
    candidates_.resize(r1_.size());
    for (auto x : r1_.elements()) candidates_[x.index] = classes[inv1_[x.index]];
    choose_generators();
  }

  std::optional<std::vector<Elem>> run() {
    State s(r1_.size());
    if (!assign(s, r1_.zero(), r2_.zero()) || !assign(s, r1_.one(), r2_.one())) return std::nullopt;
    if (!search(s, 0)) return std::nullopt;
    std::vector<Elem> table(r1_.size());
    for (std::size_t i = 0; i < table.size(); ++i) table[i] = Elem{static_cast<std::uint32_t>(s.fwd[i])};
    return table;
  }

  const std::vector<Elem>& generators() const { return gens_; }

 private:
  struct State {
    explicit State(std::size_t n) : fwd(n, -1), bwd(n, -1) {}
    std::vector<std::int64_t> fwd, bwd;
    std::vector<Elem> mapped;
  };

  // Greedy generating set, picking at each step an element outside the
  // current subring whose invariant class in r2 is smallest.
  void choose_generators() {
    ElemSet sub = closure({});
    while (sub.count() < r1_.size()) {
      std::optional<Elem> best;
      for (auto x : r1_.elements()) {
        if (sub.contains(x)) continue;
        if (!best || candidates_[x.index].size() < candidates_[best->index].size()) best = x;
      }
      gens_.push_back(*best);
      sub = closure(gens_);
    }
  }

  ElemSet closure(const std::vector<Elem>& gens) const {
    ElemSet set(r1_.size());
    std::vector<Elem> list;
    auto push = [&](Elem x) {
      if (!set.contains(x)) {
        set.insert(x);
        list.push_back(x);
      }
    };
    push(r1_.zero());
    push(r1_.one());
    for (Elem g : gens) push(g);
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        push(r1_.add(list[i], list[j]));
        push(r1_.mul(list[i], list[j]));
      }
    return set;
  }

  // Adds x ↦ y and everything it forces through sums and products.
  bool assign(State& s, Elem x0, Elem y0) const {
    std::vector<std::pair<Elem, Elem>> work{{x0, y0}};
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      if (s.fwd[x.index] == y.index) continue;
      if (s.fwd[x.index] != -1 || s.bwd[y.index] != -1) return false;
      if (inv1_[x.index] != inv2_[y.index]) return false;
      s.fwd[x.index] = y.index;
      s.bwd[y.index] = x.index;
      s.mapped.push_back(x);
      for (Elem u : s.mapped) {
        Elem v{static_cast<std::uint32_t>(s.fwd[u.index])};
        work.emplace_back(r1_.add(x, u), r2_.add(y, v));
        work.emplace_back(r1_.mul(x, u), r2_.mul(y, v));
      }
    }
    return true;
  }

  bool search(State& s, std::size_t level) const {
    if (level == gens_.size()) return s.mapped.size() == r1_.size();
    Elem x = gens_[level];
    if (s.fwd[x.index] != -1) return search(s, level + 1);
    for (Elem y : candidates_[x.index]) {
      if (s.bwd[y.index] != -1) continue;
      State next = s;
      if (assign(next, x, y) && search(next, level + 1)) {
        s = std::move(next);
        return true;
      }
    }
    return false;
  }

  const FiniteRing& r1_;
  const FiniteRing& r2_;
  std::vector<Invariant> inv1_, inv2_;
  std::vector<std::vector<Elem>> candidates_;
  std::vector<Elem> gens_;
};

}  // namespace

IsomorphismResult ring_isomorphic(const FiniteRing& r1, const FiniteRing& r2, std::size_t cap) {
  IsomorphismResult out;
  out.verdict.method = "invariant-pruned backtracking over generator images";
  if (r1.size() != r2.size()) {
    out.verdict.holds = false;
    out.verdict.witness = Witness{r1, "elements", {}, {}, {},
                                  "sizes differ: " + std::to_string(r1.size()) + " vs " + std::to_string(r2.size())};
    return out;
  }
  if (r1.size() > cap)
    throw Error(ErrorKind::size_limit, "isomorphism test on " + std::to_string(r1.size()) +
                                           " elements exceeds the cap of " + std::to_string(cap));
  auto inv1 = invariants(r1);
  auto inv2 = invariants(r2);
  auto s1 = inv1, s2 = inv2;
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) {
    // Report an element of r1 whose invariant class has a different size in r2.
    auto count = [](const std::vector<Invariant>& v, const Invariant& x) { return std::count(v.begin(), v.end(), x); };
    std::optional<Elem> odd;
    for (auto x : r1.elements())
      if (count(inv1, inv1[x.index]) != count(inv2, inv1[x.index])) {
        odd = x;
        break;
      }
    out.verdict.holds = false;
    out.verdict.witness = Witness{r1, "elements", {}, {}, {}, "element invariant multisets differ"};
    if (odd) {
      out.verdict.witness->elements.push_back(*odd);
      out.verdict.witness->detail += "; the class of " + r1.label(*odd) + " has " +
                                     std::to_string(count(inv1, inv1[odd->index])) + " members in the first ring and " +
                                     std::to_string(count(inv2, inv1[odd->index])) + " in the second";
    }
    return out;
  }
  IsoSearch search(r1, r2, std::move(inv1), std::move(inv2));
  auto table = search.run();
  if (!table) {
    out.verdict.holds = false;
    out.verdict.witness = Witness{r1, "elements", search.generators(), {}, {},
                                  "no assignment of these generators extends to an isomorphism"};
    return out;
  }
  auto hom = hom_from_table(r1, r2, std::move(*table));
  if (!hom.is_injective()) throw Error(ErrorKind::internal, "isomorphism search produced a non-bijection");
  out.verdict.holds = true;
  out.verdict.note = std::to_string(search.generators().size()) + " generators";
  out.isomorphism = std::move(hom);
  return out;
}

LocalizationCheck verify_localization_isomorphism(const BiAmalgConfig& cfg, const Ideal& p) {
  if (!is_maximal_ideal(p)) throw Error(ErrorKind::invalid_argument, "p must be a maximal ideal of A");
  auto d = biamalg(cfg);
  // S_D = {(f(a)+j, g(a)+j') : a not in p}, which is D - P when I0 is inside p.
  ElemSet s_d(d.ring().size());
  const auto js = cfg.j().elements();
  const auto jps = cfg.j_prime().elements();
  for (Elem a : cfg.a().elements()) {
    if (p.contains(a)) continue;
    for (Elem x : js)
      for (Elem y : jps) s_d.insert(*d.find(cfg.b().add(cfg.f()(a), x), cfg.c().add(cfg.g()(a), y)));
  }
  const bool proper = cfg.conductor().is_subset_of(p);
  if (proper) {
    auto big_p = extend_prime(d, p);
    ElemSet complement(d.ring().size());
    for (auto x : d.ring().elements())
      if (!big_p.contains(x)) complement.insert(x);
    if (!(complement == s_d)) throw Error(ErrorKind::internal, "S_D differs from the complement of P");
  }
  auto lhs = localize(d.ring(), MultSet::make(d.ring(), std::move(s_d)));

  auto a_p = localize_at_prime(p);
  auto leg_f = induced_hom_fp(cfg.f(), cfg.j(), p, a_p);
  auto leg_g = induced_hom_fp(cfg.g(), cfg.j_prime(), p, a_p);
  auto local_cfg = [&] {
    try {
      return BiAmalgConfig::make(leg_f.hom, leg_g.hom, leg_f.ideal, leg_g.ideal);
    } catch (const Error& e) {
      throw Error(ErrorKind::internal, std::string("localized data: ") + e.what());
    }
  }();
  auto rhs = biamalg(local_cfg);

  LocalizationCheck out;
  out.localized_size = lhs.ring.size();
  out.rebuilt_size = rhs.ring().size();
  auto iso = ring_isomorphic(lhs.ring, rhs.ring());
  out.verdict = iso.verdict;
  if (!proper) out.verdict.note += "; I0 is not inside p, so S_D and S_p contain 0 and both sides are zero rings";
  out.isomorphism = std::move(iso.isomorphism);
  return out;
}

}  // namespace biamalg
