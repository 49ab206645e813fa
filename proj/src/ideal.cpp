#include "biamalg/ideal.hpp"

#include <algorithm>
#include <unordered_set>

#include "ring_impl.hpp"

namespace biamalg {

namespace {

void require_same_ring(const Ideal& i, const Ideal& k, const char* what) {
  if (!(i.ring() == k.ring()))
    throw Error(ErrorKind::invalid_argument, std::string(what) + " of ideals from different rings");
}

// Grows the additive subgroup (set, vec) by the subgroup generated by `extra`.
// When both are ideals the result is their sum.
void absorb(const FiniteRing& ring, ElemSet& set, std::vector<Elem>& vec, const std::vector<Elem>& extra) {
  for (Elem k : extra) {
    if (set.contains(k)) continue;
    const std::size_t base_size = vec.size();
    Elem m = k;
    while (!set.contains(m)) {
      for (std::size_t i = 0; i < base_size; ++i) {
        Elem z = ring.add(vec[i], m);
        set.insert(z);
        vec.push_back(z);
      }
      m = ring.add(m, k);
    }
  }
}

std::vector<Elem> principal_vector(const FiniteRing& ring, Elem a) {
  ElemSet set = principal_set(ring, a);
  return set.to_vector();
}

struct Closure {
  ElemSet set;
  std::vector<Elem> vec;
  explicit Closure(const FiniteRing& ring) : set(ring.size()), vec{ring.zero()} { set.insert(ring.zero()); }
};

}  // namespace

ElemSet principal_set(const FiniteRing& ring, Elem a) {
  ElemSet out(ring.size());
  for (auto r : ring.elements()) out.insert(ring.mul(r, a));
  return out;
}

Ideal::Ideal(FiniteRing ring, std::vector<Elem> generators, ElemSet members)
    : ring_(std::move(ring)), generators_(std::move(generators)), members_(std::move(members)) {
  size_ = members_.count();
}

Ideal Ideal::span(const FiniteRing& ring, std::span<const Elem> gens) {
  Closure c(ring);
  std::vector<Elem> kept;
  for (Elem g : gens) {
    if (!ring.contains(g)) throw Error(ErrorKind::invalid_argument, "generator outside the ring");
    kept.push_back(g);
    if (!c.set.contains(g)) absorb(ring, c.set, c.vec, principal_vector(ring, g));
  }
  return Ideal(ring, std::move(kept), std::move(c.set));
}

Ideal Ideal::from_set(const FiniteRing& ring, ElemSet members) {
  if (members.universe() != ring.size())
    throw Error(ErrorKind::invalid_argument, "member set does not match the ring");
  if (!members.contains(ring.zero())) throw Error(ErrorKind::invalid_argument, "set does not contain 0");
  Closure c(ring);
  std::vector<Elem> gens;
  bool closed = true;
  members.for_each([&](Elem x) {
    if (!closed || c.set.contains(x)) return;
    gens.push_back(x);
    absorb(ring, c.set, c.vec, principal_vector(ring, x));
    if (!c.set.is_subset_of(members)) closed = false;
  });
  if (!closed || !(c.set == members))
    throw Error(ErrorKind::invalid_argument, "set is not an ideal of " + ring.provenance());
  return Ideal(ring, std::move(gens), std::move(members));
}

bool Ideal::is_subset_of(const Ideal& other) const {
  return ring_ == other.ring_ && members_.is_subset_of(other.members_);
}

std::string Ideal::to_string() const {
  std::string out = "(";
  if (generators_.empty()) out += ring_.label(ring_.zero());
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ",";
    out += ring_.label(generators_[i]);
  }
  return out + ")";
}

bool canonical_less(const Ideal& a, const Ideal& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.elements() < b.elements();
}

Ideal ideal_sum(const Ideal& i, const Ideal& k) {
  require_same_ring(i, k, "sum");
  ElemSet set = i.members();
  std::vector<Elem> vec = i.elements();
  absorb(i.ring(), set, vec, k.elements());
  return Ideal::from_set(i.ring(), std::move(set));
}

Ideal ideal_product(const Ideal& i, const Ideal& k) {
  require_same_ring(i, k, "product");
  const auto& ring = i.ring();
  std::vector<Elem> gens;
  for (Elem a : i.generators())
    for (Elem b : k.generators()) gens.push_back(ring.mul(a, b));
  // Re-derive generators from the member set to drop redundant products.
  return Ideal::from_set(ring, Ideal::span(ring, gens).members());
}

Ideal ideal_intersect(const Ideal& i, const Ideal& k) {
  require_same_ring(i, k, "intersection");
  return Ideal::from_set(i.ring(), i.members() & k.members());
}

Ideal ideal_colon(const Ideal& i, const Ideal& k) {
  require_same_ring(i, k, "colon");
  const auto& ring = i.ring();
  ElemSet out(ring.size());
  for (auto x : ring.elements()) {
    bool inside = std::all_of(k.generators().begin(), k.generators().end(),
                              [&](Elem g) { return i.contains(ring.mul(x, g)); });
    if (inside) out.insert(x);
  }
  return Ideal::from_set(ring, std::move(out));
}

Ideal ideal_combine(IdealOp op, const Ideal& i, const Ideal& k) {
  switch (op) {
    case IdealOp::sum: return ideal_sum(i, k);
    case IdealOp::product: return ideal_product(i, k);
    case IdealOp::intersect: return ideal_intersect(i, k);
    case IdealOp::colon: return ideal_colon(i, k);
  }
  throw Error(ErrorKind::invalid_argument, "unknown ideal operation");
}

Ideal ideal_square(const Ideal& i) { return ideal_product(i, i); }

std::vector<Ideal> all_ideals(const FiniteRing& ring, std::size_t cap) {
  if (ring.size() > cap)
    throw Error(ErrorKind::size_limit, "ideal enumeration of " + ring.provenance() + " (" +
                                           std::to_string(ring.size()) + " elements) exceeds the oracle cap of " +
                                           std::to_string(cap));
  std::unordered_set<ElemSet, ElemSetHash> seen;
  std::vector<ElemSet> found;
  for (auto a : ring.elements()) {
    auto p = principal_set(ring, a);
    if (seen.insert(p).second) found.push_back(std::move(p));
  }
  // Close under pairwise sums until nothing new appears.
  std::size_t done = 0;
  while (done < found.size()) {
    std::size_t end = found.size();
    for (std::size_t i = done; i < end; ++i) {
      for (std::size_t j = 0; j < end; ++j) {
        if (j >= done && j < i) continue;  // pair already handled as (j, i)
        ElemSet set = found[i];
        std::vector<Elem> vec = set.to_vector();
        absorb(ring, set, vec, found[j].to_vector());
        if (seen.insert(set).second) found.push_back(std::move(set));
      }
    }
    done = end;
  }
  std::vector<Ideal> out;
  out.reserve(found.size());
  for (auto& s : found) out.push_back(Ideal::from_set(ring, std::move(s)));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

// ---------------------------------------------------------------------------
// Quotient rings

namespace {

class QuotientStructure final : public detail::RingStructure {
 public:
  QuotientStructure(FiniteRing base, std::vector<std::uint32_t> coset_of, std::vector<Elem> reps)
      : base_(std::move(base)), coset_of_(std::move(coset_of)), reps_(std::move(reps)) {}

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
    return coset_of_[base_.add(reps_[a], reps_[b]).index];
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
    return coset_of_[base_.mul(reps_[a], reps_[b]).index];
  }
  std::uint32_t neg(std::uint32_t a) const override { return coset_of_[base_.neg(reps_[a]).index]; }

 private:
  FiniteRing base_;
  std::vector<std::uint32_t> coset_of_;
  std::vector<Elem> reps_;
};

}  // namespace

Quotient quotient_ring(const FiniteRing& ring, const Ideal& ideal) {
  if (!(ideal.ring() == ring)) throw Error(ErrorKind::invalid_argument, "ideal belongs to a different ring");
  constexpr auto unset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> coset_of(ring.size(), unset);
  std::vector<Elem> reps;
  const auto members = ideal.elements();
  for (auto x : ring.elements()) {
    if (coset_of[x.index] != unset) continue;
    auto c = static_cast<std::uint32_t>(reps.size());
    reps.push_back(x);
    for (Elem i : members) coset_of[ring.add(x, i).index] = c;
  }
  std::vector<std::string> labels;
  labels.reserve(reps.size());
  for (Elem r : reps) labels.push_back("[" + ring.label(r) + "]");
  std::uint32_t one = coset_of[ring.one().index];
  std::string prov = "quotient(" + ring.provenance() + "," + ideal.to_string() + ")";
  std::vector<Elem> table(ring.size());
  for (auto x : ring.elements()) table[x.index] = Elem{coset_of[x.index]};
  auto size = reps.size();
  auto q = detail::make_ring(std::make_unique<QuotientStructure>(ring, std::move(coset_of), std::move(reps)), size,
                             one, std::move(labels), std::move(prov));
  auto surjection = hom_from_table(ring, q, std::move(table));
  return Quotient{std::move(q), std::move(surjection)};
}

// ---------------------------------------------------------------------------
// Radical, maximal ideals, regularity

Ideal jacobson_radical(const FiniteRing& ring) {
  ElemSet out(ring.size());
  for (auto r : ring.elements()) {
    bool inside = true;
    for (auto x : ring.elements()) {
      if (!ring.is_unit(ring.sub(ring.one(), ring.mul(r, x)))) {
        inside = false;
        break;
      }
    }
    if (inside) out.insert(r);
  }
  return Ideal::from_set(ring, std::move(out));
}

std::vector<Elem> primitive_idempotents(const FiniteRing& ring) {
  auto all = idempotents(ring);
  std::vector<Elem> out;
  for (Elem e : all) {
    if (e == ring.zero()) continue;
    bool primitive = std::all_of(all.begin(), all.end(), [&](Elem f) {
      Elem ef = ring.mul(e, f);
      return ef == ring.zero() || ef == e;
    });
    if (primitive) out.push_back(e);
  }
  return out;
}

std::vector<Ideal> maximal_ideals(const FiniteRing& ring) {
  std::vector<Ideal> out;
  for (Elem e : primitive_idempotents(ring)) {
    // R/(1-e) is the local factor eR; its non-units pull back to a maximal ideal.
    auto complement = Ideal::span(ring, {ring.sub(ring.one(), e)});
    auto factor = quotient_ring(ring, complement);
    ElemSet members(ring.size());
    for (auto x : ring.elements())
      if (!factor.ring.is_unit(factor.surjection(x))) members.insert(x);
    out.push_back(Ideal::from_set(ring, std::move(members)));
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_maximal_ideal(const Ideal& ideal) {
  const auto& ring = ideal.ring();
  if (!ideal.is_proper()) return false;
  for (auto x : ring.elements()) {
    if (ideal.contains(x)) continue;
    bool invertible = false;
    for (auto y : ring.elements()) {
      if (ideal.contains(ring.sub(ring.mul(x, y), ring.one()))) {
        invertible = true;
        break;
      }
    }
    if (!invertible) return false;
  }
  return true;
}

std::optional<Elem> is_regular_ideal(const Ideal& ideal) {
  const auto& ring = ideal.ring();
  for (Elem a : ideal.elements()) {
    bool regular = true;
    for (auto b : ring.elements()) {
      if (b != ring.zero() && ring.mul(a, b) == ring.zero()) {
        regular = false;
        break;
      }
    }
    if (regular) return a;
  }
  return std::nullopt;
}

Ideal preimage_ideal(const RingHom& h, const Ideal& k) {
  if (!(k.ring() == h.codomain())) throw Error(ErrorKind::invalid_argument, "ideal is not in the codomain");
  ElemSet out(h.domain().size());
  for (auto a : h.domain().elements())
    if (k.contains(h(a))) out.insert(a);
  return Ideal::from_set(h.domain(), std::move(out));
}

Ideal kernel(const RingHom& h) { return preimage_ideal(h, Ideal::zero(h.codomain())); }

Ideal extend_ideal(const RingHom& h, const Ideal& i) {
  if (!(i.ring() == h.domain())) throw Error(ErrorKind::invalid_argument, "ideal is not in the domain");
  std::vector<Elem> images;
  for (Elem g : i.generators()) images.push_back(h(g));
  return Ideal::span(h.codomain(), images);
}

}  // namespace biamalg
