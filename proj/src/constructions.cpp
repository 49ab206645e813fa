#include "biamalg/constructions.hpp"

#include <algorithm>
#include <unordered_map>

#include "ring_impl.hpp"

namespace biamalg {

// ---------------------------------------------------------------------------
// Trivial extensions

namespace {

class TrivExtStructure final : public detail::RingStructure {
 public:
  TrivExtStructure(FiniteRing base, FiniteModule module)
      : base_(std::move(base)), module_(std::move(module)), m_(static_cast<std::uint32_t>(module_.size())) {}

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const override {
    return encode(base_.add(ring_part(x), ring_part(y)), module_.add(module_part(x), module_part(y)));
  }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const override {
    Elem a = ring_part(x), b = ring_part(y);
    ModuleElem e = module_part(x), f = module_part(y);
    return encode(base_.mul(a, b), module_.add(module_.act(a, f), module_.act(b, e)));
  }
  std::uint32_t neg(std::uint32_t x) const override {
    return encode(base_.neg(ring_part(x)), module_.neg(module_part(x)));
  }

  Elem ring_part(std::uint32_t x) const { return Elem{x / m_}; }
  ModuleElem module_part(std::uint32_t x) const { return ModuleElem{x % m_}; }
  std::uint32_t encode(Elem a, ModuleElem e) const { return a.index * m_ + e.index; }

 private:
  FiniteRing base_;
  FiniteModule module_;
  std::uint32_t m_;
};

}  // namespace

TrivialExtension trivext(const FiniteRing& base, const FiniteModule& module) {
  if (!(module.base() == base)) throw Error(ErrorKind::invalid_argument, "module is not over the given ring");
  std::string prov = "trivext(" + base.provenance() + "," + module.provenance() + ")";
  std::size_t size = detail::saturating_mul(base.size(), module.size());
  detail::check_cap(size, prov);

  std::vector<std::string> labels;
  labels.reserve(size);
  for (auto a : base.elements())
    for (auto e : module.elements()) labels.push_back("(" + base.label(a) + "," + module.label(e) + ")");
  auto structure = std::make_unique<TrivExtStructure>(base, module);
  const auto& s = *structure;
  std::uint32_t one = s.encode(base.one(), module.zero());

  std::vector<Elem> incl(base.size()), proj(size);
  for (auto a : base.elements()) incl[a.index] = Elem{s.encode(a, module.zero())};
  for (std::uint32_t x = 0; x < size; ++x) proj[x] = s.ring_part(x);

  auto ring = detail::make_ring(std::move(structure), size, one, std::move(labels), std::move(prov));
  auto inclusion = hom_from_table(base, ring, std::move(incl));
  auto projection = hom_from_table(ring, base, std::move(proj));
  return TrivialExtension{ring, module, std::move(inclusion), std::move(projection)};
}

Elem TrivialExtension::element(Elem a, ModuleElem e) const {
  return Elem{static_cast<std::uint32_t>(a.index * module.size() + e.index)};
}

std::pair<Elem, ModuleElem> TrivialExtension::components(Elem x) const {
  auto m = static_cast<std::uint32_t>(module.size());
  return {Elem{x.index / m}, ModuleElem{x.index % m}};
}

Ideal TrivialExtension::module_ideal() const {
  ElemSet members(ring.size());
  for (auto e : module.elements()) members.insert(element(module.base().zero(), e));
  return Ideal::from_set(ring, std::move(members));
}

// ---------------------------------------------------------------------------
// Configurations

BiAmalgConfig BiAmalgConfig::make(RingHom f, RingHom g, Ideal j, Ideal j_prime) {
  if (!(f.domain() == g.domain())) throw Error(ErrorKind::invalid_argument, "f and g must share their domain");
  if (!(j.ring() == f.codomain())) throw Error(ErrorKind::invalid_argument, "J must be an ideal of the codomain of f");
  if (!(j_prime.ring() == g.codomain()))
    throw Error(ErrorKind::invalid_argument, "J' must be an ideal of the codomain of g");
  const auto& a = f.domain();
  for (auto x : a.elements()) {
    bool in_j = j.contains(f(x));
    bool in_jp = j_prime.contains(g(x));
    if (in_j != in_jp) {
      throw Error(ErrorKind::conductor_mismatch,
                  "f^-1(J) != g^-1(J'): witness a=" + a.label(x) + " has f(a)" + (in_j ? " in " : " not in ") +
                      "J but g(a)" + (in_jp ? " in " : " not in ") + "J'");
    }
  }
  auto conductor = preimage_ideal(f, j);
  return BiAmalgConfig(std::move(f), std::move(g), std::move(j), std::move(j_prime), std::move(conductor));
}

std::size_t BiAmalgConfig::expected_size() const noexcept {
  return detail::saturating_mul(detail::saturating_mul(a().size() / conductor_.size(), j_.size()), j_prime_.size());
}

// ---------------------------------------------------------------------------
// Bi-amalgamations

namespace {

std::uint64_t pair_key(Elem b, Elem c) { return (std::uint64_t{b.index} << 32) | c.index; }

class PairSubringStructure final : public detail::RingStructure {
 public:
  PairSubringStructure(FiniteRing b, FiniteRing c, std::vector<std::pair<Elem, Elem>> pairs)
      : b_(std::move(b)), c_(std::move(c)), pairs_(std::move(pairs)) {
    lookup_.reserve(pairs_.size());
    for (std::uint32_t i = 0; i < pairs_.size(); ++i) lookup_.emplace(pair_key(pairs_[i].first, pairs_[i].second), i);
  }

  std::uint32_t add(std::uint32_t x, std::uint32_t y) const override {
    return index_of(b_.add(pairs_[x].first, pairs_[y].first), c_.add(pairs_[x].second, pairs_[y].second));
  }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const override {
    return index_of(b_.mul(pairs_[x].first, pairs_[y].first), c_.mul(pairs_[x].second, pairs_[y].second));
  }
  std::uint32_t neg(std::uint32_t x) const override { return index_of(b_.neg(pairs_[x].first), c_.neg(pairs_[x].second)); }

  std::optional<std::uint32_t> find(Elem b, Elem c) const {
    auto it = lookup_.find(pair_key(b, c));
    if (it == lookup_.end()) return std::nullopt;
    return it->second;
  }
  std::uint32_t index_of(Elem b, Elem c) const {
    if (auto i = find(b, c)) return *i;
    throw Error(ErrorKind::internal, "bi-amalgamation element set is not closed at (" + b_.label(b) + "," +
                                         c_.label(c) + ")");
  }
  const std::pair<Elem, Elem>& pair(std::uint32_t x) const { return pairs_[x]; }

 private:
  FiniteRing b_, c_;
  std::vector<std::pair<Elem, Elem>> pairs_;
  std::unordered_map<std::uint64_t, std::uint32_t> lookup_;
};

const PairSubringStructure& pair_structure(const FiniteRing& ring) {
  return dynamic_cast<const PairSubringStructure&>(detail::structure_of(ring));
}

}  // namespace

BiAmalgRing biamalg(const BiAmalgConfig& cfg) {
  const auto& a = cfg.a();
  const auto& b = cfg.b();
  const auto& c = cfg.c();
  std::string prov = "biamalg(" + a.provenance() + "->" + b.provenance() + "," + a.provenance() + "->" +
                     c.provenance() + "," + cfg.j().to_string() + "," + cfg.j_prime().to_string() + ")";
  detail::check_cap(cfg.expected_size(), prov);

  // Least-index representatives of A / I0.
  std::vector<Elem> reps;
  ElemSet covered(a.size());
  const auto conductor = cfg.conductor().elements();
  for (auto x : a.elements()) {
    if (covered.contains(x)) continue;
    reps.push_back(x);
    for (Elem i : conductor) covered.insert(a.add(x, i));
  }

  struct Entry {
    Elem b, c;
    Provenance prov;
  };
  std::vector<Entry> entries;
  entries.reserve(cfg.expected_size());
  const auto j_elems = cfg.j().elements();
  const auto jp_elems = cfg.j_prime().elements();
  for (Elem x : reps) {
    Elem fx = cfg.f()(x), gx = cfg.g()(x);
    for (Elem j : j_elems)
      for (Elem jp : jp_elems) entries.push_back({b.add(fx, j), c.add(gx, jp), {x, j, jp}});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
    return std::pair(l.b, l.c) < std::pair(r.b, r.c);
  });
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (entries[i].b == entries[i - 1].b && entries[i].c == entries[i - 1].c)
      throw Error(ErrorKind::internal, "bi-amalgamation produced a repeated element; conductor is inconsistent");
  if (entries.size() != cfg.expected_size())
    throw Error(ErrorKind::internal, "bi-amalgamation size does not match (|A|/|I0|)|J||J'|");

  std::vector<std::pair<Elem, Elem>> pairs;
  std::vector<Provenance> provenance;
  std::vector<std::string> labels;
  pairs.reserve(entries.size());
  provenance.reserve(entries.size());
  labels.reserve(entries.size());
  for (const auto& e : entries) {
    pairs.emplace_back(e.b, e.c);
    provenance.push_back(e.prov);
    labels.push_back("(" + b.label(e.b) + "," + c.label(e.c) + ")");
  }
  auto structure = std::make_unique<PairSubringStructure>(b, c, std::move(pairs));
  auto one = structure->find(b.one(), c.one());
  if (!one) throw Error(ErrorKind::internal, "bi-amalgamation does not contain (1,1)");
  auto ring = detail::make_ring(std::move(structure), entries.size(), *one, std::move(labels), std::move(prov));
  return BiAmalgRing(std::make_shared<const BiAmalgConfig>(cfg), std::move(ring), std::move(provenance));
}

std::pair<Elem, Elem> BiAmalgRing::components(Elem x) const { return pair_structure(ring_).pair(x.index); }

std::optional<Elem> BiAmalgRing::find(Elem b, Elem c) const {
  if (auto i = pair_structure(ring_).find(b, c)) return Elem{*i};
  return std::nullopt;
}

RingHom BiAmalgRing::projection_b() const {
  std::vector<Elem> table(ring_.size());
  for (auto x : ring_.elements()) table[x.index] = components(x).first;
  return hom_from_table(ring_, config_->b(), std::move(table));
}

RingHom BiAmalgRing::projection_c() const {
  std::vector<Elem> table(ring_.size());
  for (auto x : ring_.elements()) table[x.index] = components(x).second;
  return hom_from_table(ring_, config_->c(), std::move(table));
}

BiAmalgRing amalg(const RingHom& f, const Ideal& j) {
  auto id = identity_hom(f.domain());
  auto conductor = preimage_ideal(f, j);
  return biamalg(BiAmalgConfig::make(std::move(id), f, std::move(conductor), j));
}

BiAmalgRing duplicate(const FiniteRing& a, const Ideal& i) {
  if (!(i.ring() == a)) throw Error(ErrorKind::invalid_argument, "ideal is not an ideal of the ring");
  return amalg(identity_hom(a), i);
}

CanonicalIdeals canonical_ideals(const BiAmalgRing& d) {
  const auto& cfg = d.config();
  ElemSet left(d.ring().size()), right(d.ring().size());
  for (Elem jp : cfg.j_prime().elements()) {
    auto x = d.find(cfg.b().zero(), jp);
    if (!x) throw Error(ErrorKind::internal, "0 x J' is not contained in the bi-amalgamation");
    left.insert(*x);
  }
  for (Elem j : cfg.j().elements()) {
    auto x = d.find(j, cfg.c().zero());
    if (!x) throw Error(ErrorKind::internal, "J x 0 is not contained in the bi-amalgamation");
    right.insert(*x);
  }
  return CanonicalIdeals{Ideal::from_set(d.ring(), std::move(left)), Ideal::from_set(d.ring(), std::move(right))};
}

Ideal extend_prime(const BiAmalgRing& d, const Ideal& p) {
  const auto& cfg = d.config();
  if (!(p.ring() == cfg.a())) throw Error(ErrorKind::invalid_argument, "p must be an ideal of A");
  if (!cfg.conductor().is_subset_of(p))
    throw Error(ErrorKind::invalid_argument, "p = " + p.to_string() + " does not contain I0");
  if (!is_maximal_ideal(p))
    throw Error(ErrorKind::invalid_argument, "p = " + p.to_string() + " is not a proper prime ideal of A");
  // (f(a)+j, g(a)+j') lies in P iff its conductor-class representative lies in p.
  ElemSet members(d.ring().size());
  for (auto x : d.ring().elements())
    if (p.contains(d.provenance(x).a)) members.insert(x);
  auto ideal = Ideal::from_set(d.ring(), std::move(members));
  if (!is_maximal_ideal(ideal)) throw Error(ErrorKind::internal, "extension of a maximal ideal is not maximal");
  return ideal;
}

// ---------------------------------------------------------------------------
// Subrings of a host ring

namespace {

class SubsetStructure final : public detail::RingStructure {
 public:
  SubsetStructure(FiniteRing host, std::vector<Elem> members)
      : host_(std::move(host)), members_(std::move(members)), to_sub_(host_.size(), kMissing) {
    for (std::uint32_t i = 0; i < members_.size(); ++i) to_sub_[members_[i].index] = i;
  }
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const override {
    return lift(host_.add(members_[x], members_[y]));
  }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const override {
    return lift(host_.mul(members_[x], members_[y]));
  }
  std::uint32_t neg(std::uint32_t x) const override { return lift(host_.neg(members_[x])); }

  std::uint32_t lift(Elem h) const {
    auto i = to_sub_[h.index];
    if (i == kMissing) throw Error(ErrorKind::invalid_argument, "subset is not closed: " + host_.label(h));
    return i;
  }

 private:
  static constexpr std::uint32_t kMissing = static_cast<std::uint32_t>(-1);
  FiniteRing host_;
  std::vector<Elem> members_;
  std::vector<std::uint32_t> to_sub_;
};

}  // namespace

Subring make_subring(const FiniteRing& host, const ElemSet& members, std::string provenance) {
  if (!members.contains(host.zero()) || !members.contains(host.one()))
    throw Error(ErrorKind::invalid_argument, "a subring must contain 0 and 1");
  auto elems = members.to_vector();
  std::vector<std::string> labels;
  labels.reserve(elems.size());
  for (Elem e : elems) labels.push_back(host.label(e));
  std::uint32_t one = static_cast<std::uint32_t>(
      std::lower_bound(elems.begin(), elems.end(), host.one()) - elems.begin());
  auto structure = std::make_unique<SubsetStructure>(host, elems);
  auto ring = detail::make_ring(std::move(structure), elems.size(), one, std::move(labels), std::move(provenance));
  // Exhaustive closure check; tabled rings already failed inside make_ring if open.
  for (auto x : ring.elements())
    for (auto y : ring.elements())
      if (y >= x) {
        ring.add(x, y);
        ring.mul(x, y);
      }
  return Subring{ring, hom_from_table(ring, host, std::move(elems))};
}

Subring subring_of_fA_plus_J(const RingHom& f, const Ideal& j) {
  if (!(j.ring() == f.codomain())) throw Error(ErrorKind::invalid_argument, "J must be an ideal of the codomain");
  const auto& b = f.codomain();
  ElemSet members(b.size());
  auto image = f.image().to_vector();
  auto j_elems = j.elements();
  for (Elem fa : image)
    for (Elem x : j_elems) members.insert(b.add(fa, x));
  return make_subring(b, members, "f(A)+J in " + b.provenance() + " with J=" + j.to_string());
}

}  // namespace biamalg
