#include "biamalg/hom.hpp"

#include <random>
#include <unordered_map>

namespace biamalg {

namespace detail {
RingHom make_hom_unchecked(FiniteRing domain, FiniteRing codomain, std::vector<Elem> table) {
  return RingHom(std::move(domain), std::move(codomain), std::move(table));
}
}  // namespace detail

bool RingHom::is_injective() const {
  ElemSet seen(codomain_.size());
  for (auto b : table_) {
    if (seen.contains(b)) return false;
    seen.insert(b);
  }
  return true;
}

bool RingHom::is_surjective() const { return image().count() == codomain_.size(); }

ElemSet RingHom::image() const {
  ElemSet out(codomain_.size());
  for (auto b : table_) out.insert(b);
  return out;
}

std::optional<std::string> check_hom_axioms(const FiniteRing& domain, const FiniteRing& codomain,
                                            const std::vector<Elem>& table, std::size_t samples) {
  if (table.size() != domain.size()) return "map is not total on the domain";
  for (auto b : table)
    if (!codomain.contains(b)) return "map sends an element outside the codomain";
  if (table[domain.zero().index] != codomain.zero()) return "map(0) != 0";
  if (table[domain.one().index] != codomain.one()) return "map(1) != 1";
  auto check = [&](Elem a, Elem b) -> std::optional<std::string> {
    auto pair = "a=" + domain.label(a) + ", b=" + domain.label(b);
    if (table[domain.add(a, b).index] != codomain.add(table[a.index], table[b.index]))
      return "map(a+b) != map(a)+map(b) at " + pair;
    if (table[domain.mul(a, b).index] != codomain.mul(table[a.index], table[b.index]))
      return "map(ab) != map(a)map(b) at " + pair;
    return std::nullopt;
  };
  if (domain.size() <= 1024) {
    for (auto a : domain.elements())
      for (auto b : domain.elements())
        if (b >= a)
          if (auto f = check(a, b)) return f;
    return std::nullopt;
  }
  std::mt19937_64 rng(domain.size() * 7919 + codomain.size());
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(domain.size() - 1));
  for (std::size_t i = 0; i < samples; ++i)
    if (auto f = check(Elem{pick(rng)}, Elem{pick(rng)})) return f;
  return std::nullopt;
}

RingHom hom_from_table(const FiniteRing& domain, const FiniteRing& codomain, std::vector<Elem> table) {
  if (auto failure = check_hom_axioms(domain, codomain, table))
    throw Error(ErrorKind::not_a_homomorphism,
                domain.provenance() + " -> " + codomain.provenance() + ": " + *failure);
  return detail::make_hom_unchecked(domain, codomain, std::move(table));
}

RingHom hom_from_labels(const FiniteRing& domain, const FiniteRing& codomain,
                        const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Elem> table(domain.size());
  std::vector<bool> assigned(domain.size(), false);
  for (const auto& [from, to] : pairs) {
    auto a = domain.elem(from);
    auto b = codomain.elem(to);
    if (assigned[a.index] && table[a.index] != b)
      throw Error(ErrorKind::invalid_argument, "element " + from + " is mapped twice");
    table[a.index] = b;
    assigned[a.index] = true;
  }
  for (auto a : domain.elements())
    if (!assigned[a.index])
      throw Error(ErrorKind::invalid_argument, "map is not total: " + domain.label(a) + " has no image");
  return hom_from_table(domain, codomain, std::move(table));
}

RingHom identity_hom(const FiniteRing& ring) {
  std::vector<Elem> table(ring.elements().begin(), ring.elements().end());
  return detail::make_hom_unchecked(ring, ring, std::move(table));
}

RingHom hom_compose(const RingHom& h2, const RingHom& h1) {
  if (!(h1.codomain() == h2.domain()))
    throw Error(ErrorKind::invalid_argument, "cannot compose: codomain " + h1.codomain().provenance() +
                                                 " is not the domain " + h2.domain().provenance());
  std::vector<Elem> table(h1.domain().size());
  for (auto a : h1.domain().elements()) table[a.index] = h2(h1(a));
  return hom_from_table(h1.domain(), h2.codomain(), std::move(table));
}

std::pair<RingHom, RingHom> product_projections(const FiniteRing& product) {
  auto [r1, r2] = product_factors(product);
  std::vector<Elem> t1(product.size()), t2(product.size());
  for (auto a : product.elements()) {
    auto [x, y] = product_components(product, a);
    t1[a.index] = x;
    t2[a.index] = y;
  }
  return {hom_from_table(product, r1, std::move(t1)), hom_from_table(product, r2, std::move(t2))};
}

}  // namespace biamalg
