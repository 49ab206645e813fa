#include "biamalg/properties.hpp"

#include <algorithm>
#include <random>
#include <unordered_map>

#include "biamalg/localization.hpp"

namespace biamalg {

std::vector<std::string> Witness::element_labels() const {
  std::vector<std::string> out;
  out.reserve(elements.size());
  for (Elem e : elements) out.push_back(ring.label(e));
  return out;
}

// ---------------------------------------------------------------------------
// Polynomials and content

Poly::Poly(FiniteRing ring, std::vector<Elem> coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_)
    if (!ring_.contains(c)) throw Error(ErrorKind::invalid_argument, "coefficient outside the ring");
  while (!coeffs_.empty() && coeffs_.back() == ring_.zero()) coeffs_.pop_back();
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return ring_.label(ring_.zero());
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == ring_.zero()) continue;
    if (!out.empty()) out += "+";
    const auto& c = ring_.label(coeffs_[k]);
    if (k == 0) {
      out += c;
      continue;
    }
    if (coeffs_[k] != ring_.one()) {
      bool compound = c.find_first_of("+*") != std::string::npos;
      out += compound ? "(" + c + ")" : c;
      out += "*";
    }
    out += "X";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

Poly operator*(const Poly& p, const Poly& q) {
  if (!(p.ring_ == q.ring_)) throw Error(ErrorKind::invalid_argument, "polynomials over different rings");
  const auto& r = p.ring_;
  if (p.is_zero() || q.is_zero()) return Poly(r, {});
  std::vector<Elem> out(p.coeffs_.size() + q.coeffs_.size() - 1, r.zero());
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
      out[i + j] = r.add(out[i + j], r.mul(p.coeffs_[i], q.coeffs_[j]));
  return Poly(r, std::move(out));
}

Ideal content(const Poly& p) { return Ideal::span(p.ring(), p.coeffs()); }

// ---------------------------------------------------------------------------
// Locality and decomposition

LocalVerdict is_local(const FiniteRing& ring) {
  LocalVerdict out;
  out.verdict.method = "non-units closed under addition";
  if (ring.is_zero_ring()) {
    out.verdict.holds = false;
    out.verdict.witness = Witness{ring, "elements", {}, {}, {}, "the zero ring has no maximal ideal"};
    return out;
  }
  std::vector<Elem> nonunits;
  ElemSet members(ring.size());
  for (auto a : ring.elements())
    if (!ring.is_unit(a)) {
      nonunits.push_back(a);
      members.insert(a);
    }
  for (std::size_t i = 0; i < nonunits.size(); ++i) {
    for (std::size_t j = i; j < nonunits.size(); ++j) {
      Elem s = ring.add(nonunits[i], nonunits[j]);
      if (ring.is_unit(s)) {
        out.verdict.holds = false;
        out.verdict.witness = Witness{ring, "elements", {nonunits[i], nonunits[j]}, {}, {},
                                      "non-units " + ring.label(nonunits[i]) + " and " + ring.label(nonunits[j]) +
                                          " sum to the unit " + ring.label(s)};
        return out;
      }
    }
  }
  // Sums of non-units stay non-units, and r·x is a non-unit whenever x is.
  out.verdict.holds = true;
  out.maximal_ideal = Ideal::from_set(ring, std::move(members));
  return out;
}

std::vector<LocalFactor> local_decomposition(const FiniteRing& ring) {
  std::vector<LocalFactor> out;
  if (ring.is_zero_ring()) return out;
  auto prims = primitive_idempotents(ring);
  if (prims.size() == 1) {
    out.push_back(LocalFactor{ring.one(), ring, identity_hom(ring)});
    return out;
  }
  for (Elem e : prims) {
    auto q = quotient_ring(ring, Ideal::span(ring, {ring.sub(ring.one(), e)}));
    if (!is_local(q.ring).verdict.holds)
      throw Error(ErrorKind::internal, "factor at a primitive idempotent is not local");
    out.push_back(LocalFactor{e, q.ring, q.surjection});
  }
  return out;
}

namespace {

// Maps each factor element back to e·R inside the ambient ring.
std::vector<Elem> lift_table(const FiniteRing& ring, const LocalFactor& factor) {
  std::vector<Elem> lift(factor.ring.size(), ring.zero());
  for (auto x : ring.elements()) lift[factor.projection(x).index] = ring.mul(factor.idempotent, x);
  return lift;
}

std::vector<ElemSet> all_principal_sets(const FiniteRing& ring) {
  std::vector<ElemSet> out;
  out.reserve(ring.size());
  for (auto a : ring.elements()) out.push_back(principal_set(ring, a));
  return out;
}

Witness gaussian_witness(const FiniteRing& ring, Elem a, Elem b, std::string detail) {
  Elem a2 = ring.mul(a, a), b2 = ring.mul(b, b), ab = ring.mul(a, b);
  return Witness{ring,
                 "elements",
                 {a, b},
                 {Ideal::span(ring, {a2, ab, b2}), Ideal::span(ring, {a2}), Ideal::span(ring, {b2})},
                 {},
                 std::move(detail)};
}

std::string pair_text(const FiniteRing& ring, Elem a, Elem b) {
  return "(" + ring.label(a) + "," + ring.label(b) + ")";
}

}  // namespace

Verdict is_gaussian_local(const FiniteRing& ring) {
  auto local = is_local(ring);
  if (!local.verdict.holds) throw Error(ErrorKind::invalid_argument, ring.provenance() + " is not local");
  Verdict v;
  v.method = "local pair criterion";
  const auto principal = all_principal_sets(ring);
  for (auto a : ring.elements()) {
    const Elem a2 = ring.mul(a, a);
    for (auto b : ring.elements()) {
      const Elem b2 = ring.mul(b, b), ab = ring.mul(a, b);
      const auto& pa = principal[a2.index];
      const auto& pb = principal[b2.index];
      // (a,b)² = (a²,ab,b²) equals (a²) iff ab and b² lie in (a²).
      const bool eq_a = pa.contains(ab) && pa.contains(b2);
      const bool eq_b = pb.contains(ab) && pb.contains(a2);
      if (!eq_a && !eq_b) {
        v.holds = false;
        v.witness = gaussian_witness(ring, a, b, "(a,b)^2 equals neither (a^2) nor (b^2) for (a,b) = " +
                                                     pair_text(ring, a, b));
        return v;
      }
      if (ab == ring.zero() && ((eq_a && b2 != ring.zero()) || (eq_b && a2 != ring.zero()))) {
        v.holds = false;
        v.witness = gaussian_witness(ring, a, b,
                                     "ab = 0 and (a,b)^2 is principal on one generator but the other "
                                     "square is nonzero for (a,b) = " +
                                         pair_text(ring, a, b));
        return v;
      }
    }
  }
  v.holds = true;
  return v;
}

Verdict is_gaussian(const FiniteRing& ring) {
  Verdict v;
  v.method = "local pair criterion on each local factor";
  v.holds = true;
  for (const auto& factor : local_decomposition(ring)) {
    auto local = is_gaussian_local(factor.ring);
    if (local.holds) continue;
    auto lift = lift_table(ring, factor);
    Elem a = lift[local.witness->elements[0].index];
    Elem b = lift[local.witness->elements[1].index];
    v.holds = false;
    auto detail = local.witness->detail;
    detail = detail.substr(0, detail.find(" for (a,b) = ")) + " for (a,b) = " + pair_text(ring, a, b);
    v.witness = gaussian_witness(ring, a, b, std::move(detail));
    if (!(factor.ring == ring)) v.note = "witness lifted from the local factor at idempotent " + ring.label(factor.idempotent);
    return v;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Content equation

Verdict content_equation(const Poly& f, const Poly& g) {
  Verdict v;
  v.method = "content equation";
  auto lhs = content(f * g);
  auto rhs = ideal_product(content(f), content(g));
  v.holds = lhs == rhs;
  if (!v.holds)
    v.witness = Witness{f.ring(), "polynomials", {}, {lhs, rhs}, {f.coeffs(), g.coeffs()},
                        "c(fg) = " + lhs.to_string() + " but c(f)c(g) = " + rhs.to_string() + " for f = " +
                            f.to_string() + ", g = " + g.to_string()};
  return v;
}

Verdict content_equation_sample(const FiniteRing& ring, int max_degree, std::size_t trials, std::uint64_t seed) {
  if (max_degree < 0) throw Error(ErrorKind::invalid_argument, "negative polynomial degree");
  // Modulo picks keep sampled sequences identical across standard libraries.
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  std::vector<Elem> nonunits;
  for (auto a : ring.elements())
    if (!ring.is_unit(a)) nonunits.push_back(a);
  auto coefficient = [&]() {
    if (!nonunits.empty() && pick(2) == 0) return nonunits[pick(nonunits.size())];
    return Elem{static_cast<std::uint32_t>(pick(ring.size()))};
  };
  auto random_poly = [&]() {
    std::vector<Elem> c(pick(static_cast<std::size_t>(max_degree) + 1) + 1);
    for (auto& x : c) x = coefficient();
    return Poly(ring, std::move(c));
  };
  for (std::size_t t = 0; t < trials; ++t) {
    Poly f = random_poly();
    Poly g = pick(4) == 0 ? f : random_poly();
    auto v = content_equation(f, g);
    if (!v.holds) {
      v.method = "sampled content equation";
      v.note = "counterexample at trial " + std::to_string(t);
      return v;
    }
  }
  Verdict v;
  v.holds = true;
  v.conclusive = false;
  v.method = "sampled content equation";
  v.note = std::to_string(trials) + " sampled pairs, no counterexample";
  return v;
}

// ---------------------------------------------------------------------------
// Arithmetical rings

Verdict is_arithmetical(const FiniteRing& ring) {
  Verdict v;
  v.method = "principal ideals totally ordered on each local factor";
  v.holds = true;
  for (const auto& factor : local_decomposition(ring)) {
    const auto& fr = factor.ring;
    const auto principal = all_principal_sets(fr);
    for (auto a : fr.elements()) {
      for (std::uint32_t bi = a.index + 1; bi < fr.size(); ++bi) {
        Elem b{bi};
        if (principal[b.index].contains(a) || principal[a.index].contains(b)) continue;
        auto lift = lift_table(ring, factor);
        Elem la = lift[a.index], lb = lift[b.index];
        v.holds = false;
        v.witness = Witness{ring,
                            "elements",
                            {la, lb},
                            {Ideal::span(ring, {la}), Ideal::span(ring, {lb})},
                            {},
                            "principal ideals (" + ring.label(la) + ") and (" + ring.label(lb) +
                                ") are incomparable"};
        if (!(fr == ring)) v.note = "witness lifted from the local factor at idempotent " + ring.label(factor.idempotent);
        return v;
      }
    }
  }
  return v;
}

Verdict is_arithmetical_bruteforce(const FiniteRing& ring, std::size_t cap) {
  auto ideals = all_ideals(ring, cap);
  const std::size_t m = ideals.size();
  std::unordered_map<ElemSet, std::size_t, ElemSetHash> index;
  for (std::size_t i = 0; i < m; ++i) index.emplace(ideals[i].members(), i);
  auto lookup = [&](const Ideal& x) { return index.at(x.members()); };
  std::vector<std::size_t> sum(m * m), meet(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      sum[i * m + j] = sum[j * m + i] = lookup(ideal_sum(ideals[i], ideals[j]));
      meet[i * m + j] = meet[j * m + i] = lookup(ideal_intersect(ideals[i], ideals[j]));
    }
  Verdict v;
  v.method = "distributivity over all ideal triples";
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t l = k + 1; l < m; ++l) {
        std::size_t lhs = meet[i * m + sum[k * m + l]];
        std::size_t rhs = sum[meet[i * m + k] * m + meet[i * m + l]];
        if (lhs == rhs) continue;
        v.holds = false;
        v.witness = Witness{ring, "ideals", {}, {ideals[i], ideals[k], ideals[l]}, {},
                            "I∩(K+L) = " + ideals[lhs].to_string() + " but (I∩K)+(I∩L) = " +
                                ideals[rhs].to_string()};
        return v;
      }
  v.holds = true;
  v.note = std::to_string(m) + " ideals";
  return v;
}

// ---------------------------------------------------------------------------
// Prüfer rings and total quotient rings

Verdict is_prufer(const FiniteRing& ring) {
  Verdict v;
  v.method = "two-generated regular ideals invertible in the total ring of quotients";
  auto regular_vec = regular_elements(ring);
  ElemSet regular(ring.size());
  for (Elem r : regular_vec) regular.insert(r);
  auto q = localize(ring, MultSet::make(ring, regular));
  if (!q.kernel.is_zero())
    throw Error(ErrorKind::internal, "localization at regular elements has a nonzero kernel");
  const auto& Q = q.ring;
  const auto& phi = q.canonical;
  const ElemSet image = phi.image();
  std::unordered_map<ElemSet, bool, ElemSetHash> checked;
  for (auto a : ring.elements()) {
    for (std::uint32_t bi = a.index; bi < ring.size(); ++bi) {
      Elem b{bi};
      auto i = Ideal::span(ring, {a, b});
      if ((i.members() & regular).empty()) continue;
      if (!checked.emplace(i.members(), true).second) continue;
      // (R : I) = {x ∈ Q : x·phi(I) ⊆ phi(R)}, then I·(R : I) inside Q.
      std::vector<Elem> products;
      for (auto x : Q.elements()) {
        bool inside = std::all_of(i.generators().begin(), i.generators().end(),
                                  [&](Elem g) { return image.contains(Q.mul(x, phi(g))); });
        if (!inside) continue;
        for (Elem g : i.generators()) products.push_back(Q.mul(x, phi(g)));
      }
      auto product = Ideal::span(Q, products);
      if (product.is_unit_ideal()) continue;
      v.holds = false;
      v.witness = Witness{ring, "elements", {a, b}, {i}, {},
                          "regular ideal " + i.to_string() + " is not invertible: I(R:I) = " + product.to_string()};
      return v;
    }
  }
  v.holds = true;
  if (ring.units().count() == regular_vec.size()) v.note = "every regular element is a unit";
  return v;
}

Verdict is_total_quotient_ring(const FiniteRing& ring) {
  Verdict v;
  v.method = "every element is zero, a unit, or a zero-divisor";
  for (auto a : ring.elements()) {
    if (a == ring.zero() || ring.is_unit(a) || ring.is_zero_divisor(a)) continue;
    v.holds = false;
    v.witness = Witness{ring, "elements", {a}, {}, {}, ring.label(a) + " is neither a unit nor a zero-divisor"};
    return v;
  }
  v.holds = true;
  return v;
}

}  // namespace biamalg
