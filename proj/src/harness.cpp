#include "biamalg/harness.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "biamalg/localization.hpp"
#include "biamalg/module.hpp"
#include "biamalg/properties.hpp"

namespace biamalg {

std::string_view to_string(TheoremStatus s) noexcept {
  switch (s) {
    case TheoremStatus::verified: return "verified";
    case TheoremStatus::hypothesis_not_met: return "hypothesis_not_met";
    case TheoremStatus::violation: return "VIOLATION";
  }
  return "?";
}

bool TheoremReport::hypotheses_hold() const noexcept {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const auto& h) { return h.holds; });
}

bool TheoremReport::conclusions_match() const noexcept {
  return std::all_of(conclusions.begin(), conclusions.end(), [](const auto& c) { return c.matches(); });
}

std::string_view to_string(TransferMode m) noexcept { return m == TransferMode::gaussian ? "gaussian" : "prufer"; }

TransferMode parse_transfer_mode(std::string_view text) {
  if (text == "gaussian") return TransferMode::gaussian;
  if (text == "prufer") return TransferMode::prufer;
  throw Error(ErrorKind::invalid_argument, "unknown mode '" + std::string(text) + "' (expected gaussian or prufer)");
}

namespace {

std::string yes_no(bool b) { return b ? "yes" : "no"; }

void finalize(TheoremReport& r) {
  if (!r.hypotheses_hold())
    r.status = TheoremStatus::hypothesis_not_met;
  else
    r.status = r.conclusions_match() ? TheoremStatus::verified : TheoremStatus::violation;
}

HypothesisCheck from_verdict(std::string name, const Verdict& v) {
  return HypothesisCheck{std::move(name), v.holds, v.witness, v.note};
}

ConclusionCheck claim(std::string name, bool expected, const Verdict& v) {
  ConclusionCheck c{std::move(name), expected, v.holds, std::nullopt, v.note};
  if (!v.holds) c.witness = v.witness;
  return c;
}

ConclusionCheck claim(std::string name, bool expected, bool computed, std::string detail = {}) {
  return ConclusionCheck{std::move(name), expected, computed, std::nullopt, std::move(detail)};
}

Witness ideal_witness(const Ideal& i, std::string detail) {
  return Witness{i.ring(), "ideals", {}, {i}, {}, std::move(detail)};
}

Verdict property(const FiniteRing& r, TransferMode mode) {
  return mode == TransferMode::gaussian ? is_gaussian(r) : is_prufer(r);
}

/// A regular element of f(A)+J lying in J, reported in B.
std::optional<Elem> regular_in_subring(const RingHom& f, const Ideal& j) {
  auto s = subring_of_fA_plus_J(f, j);
  auto r = is_regular_ideal(preimage_ideal(s.inclusion, j));
  if (!r) return std::nullopt;
  return s.inclusion(*r);
}

HypothesisCheck regular_hypothesis(std::string name, const std::vector<std::pair<const RingHom*, const Ideal*>>& legs,
                                   const std::vector<std::string>& where) {
  HypothesisCheck h{std::move(name), true, std::nullopt, {}};
  std::vector<std::string> found;
  for (std::size_t k = 0; k < legs.size(); ++k) {
    auto r = regular_in_subring(*legs[k].first, *legs[k].second);
    if (r) {
      found.push_back(legs[k].second->ring().label(*r));
      continue;
    }
    h.holds = false;
    h.witness = ideal_witness(*legs[k].second, legs[k].second->to_string() + " contains no regular element of " +
                                                   where[k]);
    h.detail = h.witness->detail;
    return h;
  }
  std::string joined;
  for (const auto& s : found) joined += (joined.empty() ? "" : ",") + s;
  h.detail = "regular element (" + joined + ")";
  return h;
}

const char* kVacuityNote =
    "in a finite ring every regular element is a unit, so the regularity hypothesis can only hold "
    "when the ideals are the whole rings";

HypothesisCheck nonzero_proper(std::string name, const Ideal& j) {
  HypothesisCheck h{std::move(name), !j.is_zero() && j.is_proper(), std::nullopt, {}};
  if (!h.holds) {
    h.detail = j.is_zero() ? "the ideal is zero" : "the ideal is the whole ring";
    h.witness = ideal_witness(j, h.detail);
  }
  return h;
}

HypothesisCheck in_jacobson(std::string name, const Ideal& j, const Ideal& jp) {
  HypothesisCheck h{std::move(name), true, std::nullopt, {}};
  for (const Ideal* i : {&j, &jp}) {
    auto jac = jacobson_radical(i->ring());
    std::optional<Elem> outside;
    i->members().for_each([&](Elem x) {
      if (!outside && !jac.contains(x)) outside = x;
    });
    if (outside) {
      h.holds = false;
      h.detail = i->ring().label(*outside) + " lies outside the Jacobson radical";
      h.witness = Witness{i->ring(), "elements", {*outside}, {jac}, {}, h.detail};
      return h;
    }
  }
  return h;
}

HypothesisCheck square_zero(std::string name, const Ideal& j) {
  auto sq = ideal_square(j);
  HypothesisCheck h{std::move(name), sq.is_zero(), std::nullopt, {}};
  if (!h.holds) {
    h.detail = "square is " + sq.to_string();
    h.witness = ideal_witness(sq, h.detail);
  }
  return h;
}

/// f(a)J = f(a)²J for every a in m.
HypothesisCheck square_absorption(std::string name, const RingHom& f, const Ideal& j, const std::optional<Ideal>& m) {
  HypothesisCheck h{std::move(name), true, std::nullopt, {}};
  if (!m) {
    h.holds = false;
    h.detail = "not evaluated: the domain is not local";
    return h;
  }
  const auto& b = f.codomain();
  for (Elem a : m->elements()) {
    Elem fa = f(a), fa2 = b.mul(fa, fa);
    std::vector<Elem> once, twice;
    for (Elem g : j.generators()) {
      once.push_back(b.mul(fa, g));
      twice.push_back(b.mul(fa2, g));
    }
    auto lhs = Ideal::span(b, once), rhs = Ideal::span(b, twice);
    if (lhs == rhs) continue;
    h.holds = false;
    h.detail = "at a = " + f.domain().label(a) + ": f(a)J = " + lhs.to_string() + " but f(a)^2 J = " +
               rhs.to_string();
    h.witness = Witness{f.domain(), "elements", {a}, {lhs, rhs}, {}, h.detail};
    return h;
  }
  return h;
}

HypothesisCheck injective(std::string name, const RingHom& f) {
  auto k = kernel(f);
  HypothesisCheck h{std::move(name), k.is_zero(), std::nullopt, {}};
  if (!h.holds) {
    h.detail = "kernel is " + k.to_string();
    h.witness = ideal_witness(k, h.detail);
  }
  return h;
}

// Verdicts needed by several statements, computed once per report.
struct Facts {
  explicit Facts(const BiAmalgConfig& cfg) : cfg(cfg) {}

  const BiAmalgConfig& cfg;
  std::optional<BiAmalgRing> d_;
  std::optional<Verdict> d_gaussian_, s1_gaussian_, s2_gaussian_;

  const BiAmalgRing& d() {
    if (!d_) d_ = biamalg(cfg);
    return *d_;
  }
  const Verdict& d_gaussian() {
    if (!d_gaussian_) d_gaussian_ = is_gaussian(d().ring());
    return *d_gaussian_;
  }
  const Verdict& s1_gaussian() {
    if (!s1_gaussian_) s1_gaussian_ = is_gaussian(subring_of_fA_plus_J(cfg.f(), cfg.j()).ring);
    return *s1_gaussian_;
  }
  const Verdict& s2_gaussian() {
    if (!s2_gaussian_) s2_gaussian_ = is_gaussian(subring_of_fA_plus_J(cfg.g(), cfg.j_prime()).ring);
    return *s2_gaussian_;
  }
};

std::optional<Witness> first_witness(std::initializer_list<const Verdict*> vs) {
  for (const Verdict* v : vs)
    if (!v->holds && v->witness) return v->witness;
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// Regular-ideal transfer

TheoremReport verify_regular_transfer(const BiAmalgConfig& cfg, TransferMode mode) {
  TheoremReport r;
  r.theorem_id = "thm2.1";
  r.hypotheses.push_back(regular_hypothesis("J x J' is a regular ideal of (f(A)+J) x (g(A)+J')",
                                            {{&cfg.f(), &cfg.j()}, {&cfg.g(), &cfg.j_prime()}},
                                            {"f(A)+J", "g(A)+J'"}));
  if (r.hypotheses_hold()) {
    const auto m = std::string(to_string(mode));
    auto d = biamalg(cfg);
    auto lhs = property(d.ring(), mode);
    auto pb = property(cfg.b(), mode), pc = property(cfg.c(), mode);
    bool rhs = cfg.j().is_unit_ideal() && cfg.j_prime().is_unit_ideal() && pb.holds && pc.holds;
    ConclusionCheck c{"D " + m + " iff J = B, J' = C and B, C " + m, rhs, lhs.holds, std::nullopt,
                      "D: " + yes_no(lhs.holds) + "; J = B: " + yes_no(cfg.j().is_unit_ideal()) +
                          "; J' = C: " + yes_no(cfg.j_prime().is_unit_ideal()) + "; B: " + yes_no(pb.holds) +
                          "; C: " + yes_no(pc.holds)};
    c.witness = first_witness({&lhs, &pb, &pc});
    r.conclusions.push_back(std::move(c));
  } else if (cfg.j().is_proper() || cfg.j_prime().is_proper()) {
    r.notes.emplace_back(kVacuityNote);
  }
  finalize(r);
  return r;
}

TheoremReport verify_amalgamation_transfer(const RingHom& f, const Ideal& j, TransferMode mode) {
  const auto& a = f.domain();
  auto id = identity_hom(a);
  auto i0 = preimage_ideal(f, j);
  auto cfg = BiAmalgConfig::make(id, f, i0, j);
  TheoremReport r;
  r.theorem_id = "cor2.2";
  r.hypotheses.push_back(
      regular_hypothesis("f^-1(J) x J is a regular ideal of A x (f(A)+J)", {{&id, &i0}, {&f, &j}}, {"A", "f(A)+J"}));
  if (r.hypotheses_hold()) {
    const auto m = std::string(to_string(mode));
    auto d = biamalg(cfg);
    auto lhs = property(d.ring(), mode);
    auto pa = property(a, mode), pb = property(f.codomain(), mode);
    bool rhs = i0.is_unit_ideal() && j.is_unit_ideal() && pa.holds && pb.holds;
    ConclusionCheck c{"A amalg J " + m + " iff f^-1(J) = A, J = B and A, B " + m, rhs, lhs.holds, std::nullopt,
                      "amalgamation: " + yes_no(lhs.holds) + "; f^-1(J) = A: " + yes_no(i0.is_unit_ideal()) +
                          "; J = B: " + yes_no(j.is_unit_ideal()) + "; A: " + yes_no(pa.holds) +
                          "; B: " + yes_no(pb.holds)};
    c.witness = first_witness({&lhs, &pa, &pb});
    r.conclusions.push_back(std::move(c));
  } else if (j.is_proper()) {
    r.notes.emplace_back(kVacuityNote);
  }
  finalize(r);
  return r;
}

TheoremReport verify_duplication_transfer(const FiniteRing& a, const Ideal& i, TransferMode mode) {
  if (!(i.ring() == a)) throw Error(ErrorKind::invalid_argument, "ideal is not in the given ring");
  TheoremReport r;
  r.theorem_id = "cor2.3";
  HypothesisCheck h{"I is a regular ideal of A", false, std::nullopt, {}};
  if (auto reg = is_regular_ideal(i)) {
    h.holds = true;
    h.detail = "regular element " + a.label(*reg);
  } else {
    h.witness = ideal_witness(i, i.to_string() + " contains no regular element");
    h.detail = h.witness->detail;
  }
  r.hypotheses.push_back(std::move(h));
  if (r.hypotheses_hold()) {
    const auto m = std::string(to_string(mode));
    auto d = duplicate(a, i);
    auto lhs = property(d.ring(), mode);
    auto pa = property(a, mode);
    bool rhs = pa.holds && i.is_unit_ideal();
    ConclusionCheck c{"A dup I " + m + " iff A " + m + " and I = A", rhs, lhs.holds, std::nullopt,
                      "duplication: " + yes_no(lhs.holds) + "; A: " + yes_no(pa.holds) +
                          "; I = A: " + yes_no(i.is_unit_ideal())};
    c.witness = first_witness({&lhs, &pa});
    r.conclusions.push_back(std::move(c));
  } else if (i.is_proper()) {
    r.notes.emplace_back(kVacuityNote);
  }
  if (i.is_unit_ideal())
    r.notes.emplace_back("I = A although duplications are defined along proper ideals; the statement is checked as written");
  finalize(r);
  return r;
}

// ---------------------------------------------------------------------------
// Local Gaussian transfer

TheoremReport verify_local_gaussian_transfer(int part, const BiAmalgConfig& cfg) {
  if (part < 1 || part > 3) throw Error(ErrorKind::invalid_argument, "part must be 1, 2 or 3");
  TheoremReport r;
  r.theorem_id = "prop2.4." + std::to_string(part);
  auto local = is_local(cfg.a());
  r.hypotheses.push_back(from_verdict("A is local", local.verdict));
  r.hypotheses.push_back(nonzero_proper("J is a nonzero proper ideal of B", cfg.j()));
  r.hypotheses.push_back(nonzero_proper("J' is a nonzero proper ideal of C", cfg.j_prime()));
  r.hypotheses.push_back(in_jacobson("J x J' is inside Jac(B x C)", cfg.j(), cfg.j_prime()));

  Facts facts(cfg);
  auto abs_f = [&] { return square_absorption("f(a)J = f(a)^2 J for all a in m", cfg.f(), cfg.j(), local.maximal_ideal); };
  auto abs_g = [&] {
    return square_absorption("g(a)J' = g(a)^2 J' for all a in m", cfg.g(), cfg.j_prime(), local.maximal_ideal);
  };

  if (part == 2) {
    r.hypotheses.push_back(from_verdict("A is Gaussian", is_gaussian(cfg.a())));
    r.hypotheses.push_back(from_verdict("f(A)+J is Gaussian", facts.s1_gaussian()));
    r.hypotheses.push_back(from_verdict("g(A)+J' is Gaussian", facts.s2_gaussian()));
  }
  if (part >= 2) {
    if (part == 3) r.hypotheses.push_back(from_verdict("A is Gaussian", is_gaussian(cfg.a())));
    r.hypotheses.push_back(square_zero("J^2 = 0", cfg.j()));
    r.hypotheses.push_back(square_zero("J'^2 = 0", cfg.j_prime()));
  }
  if (part == 2) {
    r.hypotheses.push_back(abs_f());
    r.hypotheses.push_back(abs_g());
  }
  if (part == 3) {
    bool prime = is_maximal_ideal(cfg.conductor());
    HypothesisCheck h{"I0 is a prime ideal of A", prime, std::nullopt,
                      prime ? "A/I0 is a field" : "A/I0 is not a field"};
    if (!prime) h.witness = ideal_witness(cfg.conductor(), h.detail);
    r.hypotheses.push_back(std::move(h));
  }

  if (r.hypotheses_hold()) {
    const auto& dg = facts.d_gaussian();
    if (part == 1) {
      const auto& s1 = facts.s1_gaussian();
      const auto& s2 = facts.s2_gaussian();
      ConclusionCheck c{"D Gaussian implies f(A)+J and g(A)+J' Gaussian", true,
                        !dg.holds || (s1.holds && s2.holds), std::nullopt,
                        "D: " + yes_no(dg.holds) + "; f(A)+J: " + yes_no(s1.holds) + "; g(A)+J': " + yes_no(s2.holds)};
      c.witness = first_witness({&dg, &s1, &s2});
      r.conclusions.push_back(std::move(c));
    } else if (part == 2) {
      r.conclusions.push_back(claim("D is Gaussian", true, dg));
    } else {
      const auto& s1 = facts.s1_gaussian();
      const auto& s2 = facts.s2_gaussian();
      auto hf = abs_f(), hg = abs_g();
      bool rhs = s1.holds && s2.holds && hf.holds && hg.holds;
      std::string detail = "D: " + yes_no(dg.holds) + "; f(A)+J: " + yes_no(s1.holds) + "; g(A)+J': " +
                           yes_no(s2.holds) + "; f(a)J = f(a)^2 J on m: " + yes_no(hf.holds) +
                           "; g(a)J' = g(a)^2 J' on m: " + yes_no(hg.holds);
      ConclusionCheck fwd{"D Gaussian implies f(A)+J, g(A)+J' Gaussian and both absorption conditions", true,
                          !dg.holds || rhs, std::nullopt, detail};
      ConclusionCheck bwd{"f(A)+J, g(A)+J' Gaussian and both absorption conditions imply D Gaussian", true,
                          !rhs || dg.holds, std::nullopt, detail};
      fwd.witness = bwd.witness = first_witness({&dg, &s1, &s2});
      r.conclusions.push_back(std::move(fwd));
      r.conclusions.push_back(std::move(bwd));
    }
  }
  finalize(r);
  return r;
}

TheoremReport verify_total_quotient_transfer(const BiAmalgConfig& cfg) {
  TheoremReport r;
  r.theorem_id = "prop2.6";
  r.hypotheses.push_back(from_verdict("A is local", is_local(cfg.a()).verdict));
  r.hypotheses.push_back(from_verdict("A is a total ring of quotients", is_total_quotient_ring(cfg.a())));
  r.hypotheses.push_back(nonzero_proper("J is a nonzero proper ideal of B", cfg.j()));
  r.hypotheses.push_back(nonzero_proper("J' is a nonzero proper ideal of C", cfg.j_prime()));
  r.hypotheses.push_back(in_jacobson("J x J' is inside Jac(B x C)", cfg.j(), cfg.j_prime()));
  r.hypotheses.push_back(injective("f is injective", cfg.f()));
  r.hypotheses.push_back(square_zero("J^2 = 0", cfg.j()));
  r.hypotheses.push_back(square_zero("J'^2 = 0", cfg.j_prime()));
  if (r.hypotheses_hold()) {
    auto d = biamalg(cfg);
    r.conclusions.push_back(claim("D is local", true, is_local(d.ring()).verdict));
    r.conclusions.push_back(claim("D is a total ring of quotients", true, is_total_quotient_ring(d.ring())));
    r.conclusions.push_back(claim("D is Prufer", true, is_prufer(d.ring())));
  }
  finalize(r);
  return r;
}

TheoremReport verify_localization_report(const BiAmalgConfig& cfg, const Ideal& p) {
  if (!(p.ring() == cfg.a())) throw Error(ErrorKind::invalid_argument, "p must be an ideal of A");
  TheoremReport r;
  r.theorem_id = "prop5.7";
  bool maximal = is_maximal_ideal(p);
  HypothesisCheck hm{"p is a maximal ideal of A", maximal, std::nullopt, {}};
  if (!maximal) hm.witness = ideal_witness(p, "A/p is not a field");
  r.hypotheses.push_back(std::move(hm));
  bool contains = cfg.conductor().is_subset_of(p);
  HypothesisCheck hc{"I0 is inside p", contains, std::nullopt, {}};
  if (!contains) hc.witness = ideal_witness(cfg.conductor(), "I0 = " + cfg.conductor().to_string() + " is not inside p");
  r.hypotheses.push_back(std::move(hc));
  if (r.hypotheses_hold()) {
    auto check = verify_localization_isomorphism(cfg, p);
    ConclusionCheck c{"D_P is isomorphic to A_p bi-amalgamated with the localized data", true, check.verdict.holds,
                      check.verdict.witness,
                      "|D_P| = " + std::to_string(check.localized_size) + ", rebuilt size " +
                          std::to_string(check.rebuilt_size)};
    if (check.isomorphism) c.detail += "; isomorphism validated (" + check.verdict.note + ")";
    r.conclusions.push_back(std::move(c));
  }
  finalize(r);
  return r;
}

// ---------------------------------------------------------------------------
// Worked examples

ExampleInstance build_gaussian_example() {
  auto a1 = make_zmod(4);
  auto m1 = Ideal::span(a1, {a1.elem("2")});
  auto a_ext = trivext(a1, make_module(a1, {m1}));
  const auto& a = a_ext.ring;
  auto m = Ideal::span(a, {a.elem("(2,0)"), a.elem("(0,e1)")});
  auto b_ext = trivext(a, make_module(a, {m}));
  const auto& b = b_ext.ring;
  auto j = Ideal::span(b, {b.elem("((2,0),0)"), b.elem("((0,e1),0)"), b.elem("((0,0),e1)")});
  auto cfg = BiAmalgConfig::make(b_ext.inclusion, a_ext.projection, j, m1);
  return ExampleInstance{a1, m1, a, m, std::move(cfg)};
}

ExampleInstance build_prufer_example() {
  auto a1 = make_monomial_quotient(2, {"x", "y"}, {2, 2}, {});
  auto m1 = Ideal::span(a1, {a1.elem("x"), a1.elem("y")});
  auto a_ext = trivext(a1, make_module(a1, {m1}));
  const auto& a = a_ext.ring;
  auto m = Ideal::span(a, {a.elem("(x,0)"), a.elem("(y,0)"), a.elem("(0,e1)")});
  auto b_ext = trivext(a, make_module(a, {m}));
  const auto& b = b_ext.ring;
  auto n = Ideal::span(b, {b.elem("((x,0),0)"), b.elem("((y,0),0)"), b.elem("((0,e1),0)"), b.elem("((0,0),e1)")});
  auto c_ext = trivext(b, make_module(b, {n}));
  const auto& c = c_ext.ring;
  auto g = hom_compose(c_ext.inclusion, b_ext.inclusion);
  auto j = b_ext.module_ideal();
  auto jp = Ideal::span(c, {c.elem("(((0,0),e1),0)"), c.elem("(((0,0),0),e1)")});
  auto cfg = BiAmalgConfig::make(b_ext.inclusion, g, j, jp);
  return ExampleInstance{a1, m1, a, m, std::move(cfg)};
}

namespace {

HypothesisCheck fact(std::string name, bool holds, std::string detail = {}) {
  return HypothesisCheck{std::move(name), holds, std::nullopt, std::move(detail)};
}

}  // namespace

TheoremReport gaussian_example_report() {
  auto ex = build_gaussian_example();
  const auto& cfg = ex.config;
  TheoremReport r;
  r.theorem_id = "example2.5";
  r.hypotheses.push_back(from_verdict("A1 is local", is_local(ex.a1).verdict));
  r.hypotheses.push_back(fact("m1^2 = 0 in A1", ideal_square(ex.m1).is_zero()));
  r.hypotheses.push_back(fact("m^2 = 0 in A", ideal_square(ex.m).is_zero()));
  r.hypotheses.push_back(fact("m is the maximal ideal of A", is_local(ex.a).maximal_ideal == ex.m));
  r.hypotheses.push_back(fact("f^-1(J) = g^-1(J') = m1 x E1", cfg.conductor() == ex.m,
                              "I0 = " + cfg.conductor().to_string()));
  r.notes.emplace_back("m1^2 = 0 is read both as a condition on A1 and on A; both readings are checked");
  if (r.hypotheses_hold()) {
    auto d = biamalg(cfg);
    auto s1 = subring_of_fA_plus_J(cfg.f(), cfg.j());
    r.conclusions.push_back(claim("|D| = 32", true, d.ring().size() == 32, "|D| = " + std::to_string(d.ring().size())));
    r.conclusions.push_back(claim("A is Gaussian", true, is_gaussian(ex.a)));
    r.conclusions.push_back(claim("A is arithmetical", false, is_arithmetical(ex.a)));
    r.conclusions.push_back(claim("J^2 = 0", true, ideal_square(cfg.j()).is_zero()));
    r.conclusions.push_back(claim("J'^2 = 0", true, ideal_square(cfg.j_prime()).is_zero()));
    auto hf = square_absorption("", cfg.f(), cfg.j(), ex.m);
    auto hg = square_absorption("", cfg.g(), cfg.j_prime(), ex.m);
    r.conclusions.push_back(claim("f(a)J = f(a)^2 J for all a in m", true, hf.holds, hf.detail));
    r.conclusions.push_back(claim("g(a)J' = g(a)^2 J' for all a in m", true, hg.holds, hg.detail));
    r.conclusions.push_back(claim("f(A)+J = B", true, s1.ring.size() == cfg.b().size()));
    r.conclusions.push_back(claim("f(A)+J is arithmetical", false, is_arithmetical(s1.ring)));
    auto dl = is_local(d.ring());
    r.conclusions.push_back(claim("D is local", true, dl.verdict));
    r.conclusions.push_back(claim("D is Gaussian", true, is_gaussian(d.ring())));
    r.conclusions.push_back(claim("D is arithmetical", false, is_arithmetical(d.ring())));
  }
  finalize(r);
  return r;
}

TheoremReport prufer_example_report() {
  auto ex = build_prufer_example();
  const auto& cfg = ex.config;
  TheoremReport r;
  r.theorem_id = "example2.7";
  r.hypotheses.push_back(from_verdict("A1 is local", is_local(ex.a1).verdict));
  r.hypotheses.push_back(fact("A is local with maximal ideal m", is_local(ex.a).maximal_ideal == ex.m));
  r.hypotheses.push_back(fact("f^-1(J) = g^-1(J') = 0", cfg.conductor().is_zero(),
                              "I0 = " + cfg.conductor().to_string()));
  if (r.hypotheses_hold()) {
    auto d = biamalg(cfg);
    auto s1 = subring_of_fA_plus_J(cfg.f(), cfg.j());
    r.conclusions.push_back(claim("A1 is Gaussian", false, is_gaussian_local(ex.a1)));
    r.conclusions.push_back(claim("A is Gaussian", false, is_gaussian(ex.a)));
    r.conclusions.push_back(claim("A is a total ring of quotients", true, is_total_quotient_ring(ex.a)));
    r.conclusions.push_back(claim("|D| = 256", true, d.ring().size() == 256, "|D| = " + std::to_string(d.ring().size())));
    r.conclusions.push_back(claim("J^2 = 0", true, ideal_square(cfg.j()).is_zero()));
    r.conclusions.push_back(claim("J'^2 = 0", true, ideal_square(cfg.j_prime()).is_zero()));
    r.conclusions.push_back(claim("D is local", true, is_local(d.ring()).verdict));
    r.conclusions.push_back(claim("D is a total ring of quotients", true, is_total_quotient_ring(d.ring())));
    r.conclusions.push_back(claim("D is Prufer", true, is_prufer(d.ring())));
    r.conclusions.push_back(claim("D is Gaussian", false, is_gaussian(d.ring())));
    r.conclusions.push_back(claim("f(A)+J = B", true, s1.ring.size() == cfg.b().size()));
    r.conclusions.push_back(claim("f(A)+J is Gaussian", false, is_gaussian(s1.ring)));
  }
  finalize(r);
  return r;
}

// ---------------------------------------------------------------------------
// Random configurations

ConfigFilter parse_config_filter(std::string_view text) {
  if (text == "none") return ConfigFilter::none;
  if (text == "prop2.4.2") return ConfigFilter::local_gaussian_sufficient;
  if (text == "thm2.1") return ConfigFilter::regular_ideal;
  if (text == "prop2.6") return ConfigFilter::total_quotient;
  throw Error(ErrorKind::invalid_argument,
              "unknown filter '" + std::string(text) + "' (expected none, prop2.4.2, thm2.1 or prop2.6)");
}

std::string_view to_string(ConfigFilter f) noexcept {
  switch (f) {
    case ConfigFilter::none: return "none";
    case ConfigFilter::local_gaussian_sufficient: return "prop2.4.2";
    case ConfigFilter::regular_ideal: return "thm2.1";
    case ConfigFilter::total_quotient: return "prop2.6";
  }
  return "?";
}

namespace {

class Generator {
 public:
  Generator(std::uint64_t seed, const RandomBounds& bounds, ConfigFilter filter)
      : rng_(seed), bounds_(bounds), filter_(filter) {}

  std::optional<RandomConfig> attempt() {
    auto [a, a_text] = base_ring();
    if (a.size() > bounds_.max_ring) return std::nullopt;
    auto f = leg(a);
    if (!f) return std::nullopt;
    auto g = leg(a);
    if (!g) return std::nullopt;
    const auto& b = f->hom.codomain();
    const auto& c = g->hom.codomain();
    if (b.size() > bounds_.max_ring || c.size() > bounds_.max_ring) return std::nullopt;

    auto j = choose_ideal(b, std::nullopt);
    if (!j) return std::nullopt;
    auto i0 = preimage_ideal(f->hom, *j);
    auto jp = choose_ideal(c, std::make_pair(&g->hom, &i0));
    if (!jp) return std::nullopt;

    auto cfg = BiAmalgConfig::make(f->hom, g->hom, *j, *jp);
    if (cfg.expected_size() > bounds_.max_result) return std::nullopt;
    if (!passes_filter(cfg)) return std::nullopt;
    std::string text = "A = " + a_text + "; f: " + f->text + "; g: " + g->text + "; J = " + j->to_string() +
                       "; J' = " + jp->to_string();
    return RandomConfig{std::move(cfg), std::move(text), 0};
  }

 private:
  struct Leg {
    RingHom hom;
    std::string text;
  };

  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  bool coin(std::size_t num, std::size_t den) { return pick(den) < num; }

  bool needs_local() const { return filter_ != ConfigFilter::none && filter_ != ConfigFilter::regular_ideal; }
  bool needs_injective() const { return filter_ == ConfigFilter::total_quotient; }

  std::pair<FiniteRing, std::string> base_ring() {
    using Maker = std::function<FiniteRing()>;
    static const std::vector<std::pair<std::string, Maker>> local = {
        {"Z/2", [] { return make_zmod(2); }},
        {"Z/3", [] { return make_zmod(3); }},
        {"Z/4", [] { return make_zmod(4); }},
        {"Z/8", [] { return make_zmod(8); }},
        {"Z/9", [] { return make_zmod(9); }},
        {"F2[x]/(x^2)", [] { return make_monomial_quotient(2, {"x"}, {2}, {}); }},
        {"F2[x]/(x^3)", [] { return make_monomial_quotient(2, {"x"}, {3}, {}); }},
        {"F3[x]/(x^2)", [] { return make_monomial_quotient(3, {"x"}, {2}, {}); }},
        {"F2[x,y]/(x^2,xy,y^2)", [] { return make_monomial_quotient(2, {"x", "y"}, {2, 2}, {Monomial{1, 1}}); }},
        {"Z/4 x| Z/2", [] {
           auto z4 = make_zmod(4);
           return trivext(z4, make_module(z4, {Ideal::span(z4, {z4.elem("2")})})).ring;
         }},
    };
    static const std::vector<std::pair<std::string, Maker>> global = {
        {"Z/6", [] { return make_zmod(6); }},
        {"Z/2 x Z/2", [] { return make_product(make_zmod(2), make_zmod(2)); }},
        {"Z/2 x Z/4", [] { return make_product(make_zmod(2), make_zmod(4)); }},
    };
    std::size_t n = local.size() + (needs_local() ? 0 : global.size());
    std::size_t k = pick(n);
    const auto& entry = k < local.size() ? local[k] : global[k - local.size()];
    return {entry.second(), entry.first};
  }

  std::vector<Ideal> proper_ideals(const FiniteRing& r) {
    std::vector<Ideal> out;
    for (auto& i : all_ideals(r, kOracleCap))
      if (i.is_proper()) out.push_back(i);
    return out;
  }

  std::optional<Leg> leg(const FiniteRing& a) {
    const std::size_t kind = pick(needs_injective() ? 3 : 4);
    if (kind == 0) return Leg{identity_hom(a), "id"};
    if (kind == 3) {
      auto ideals = proper_ideals(a);
      auto i = ideals[pick(ideals.size())];
      if (i.is_zero()) return Leg{identity_hom(a), "id"};
      auto q = quotient_ring(a, i);
      return Leg{q.surjection, "quotient by " + i.to_string()};
    }
    auto ext = extension(a);
    if (!ext) return std::nullopt;
    if (kind == 1) return ext;
    auto second = extension(ext->hom.codomain());
    if (!second) return std::nullopt;
    return Leg{hom_compose(second->hom, ext->hom), ext->text + ", then " + second->text};
  }

  std::optional<Leg> extension(const FiniteRing& a) {
    auto ideals = proper_ideals(a);
    // Bias toward maximal ideals, giving (A/m)^k.
    std::vector<Ideal> maximal;
    for (auto& i : ideals)
      if (is_maximal_ideal(i)) maximal.push_back(i);
    const auto& i = coin(2, 3) ? maximal[pick(maximal.size())] : ideals[pick(ideals.size())];
    std::size_t copies = coin(1, 3) ? 2 : 1;
    std::size_t module_size = a.size() / i.size();
    std::size_t total = a.size();
    for (std::size_t k = 0; k < copies; ++k) total *= module_size;
    if (total > bounds_.max_ring) return std::nullopt;
    auto ext = trivext(a, make_module(a, {i}, copies));
    return Leg{ext.inclusion, "trivext by (A/" + i.to_string() + ")^" + std::to_string(copies)};
  }

  /// Random ideal of r; when `match` is given, only ideals whose preimage
  /// under the hom equals the given conductor.
  std::optional<Ideal> choose_ideal(const FiniteRing& r, std::optional<std::pair<const RingHom*, const Ideal*>> match) {
    if (filter_ == ConfigFilter::regular_ideal) return Ideal::unit(r);
    std::vector<Ideal> candidates;
    const bool small_square = needs_local();
    auto jac = jacobson_radical(r);
    for (auto& i : all_ideals(r, kOracleCap)) {
      if (small_square && (i.is_zero() || !i.is_subset_of(jac) || !ideal_square(i).is_zero())) continue;
      if (match && !(preimage_ideal(*match->first, i) == *match->second)) continue;
      candidates.push_back(i);
    }
    if (candidates.empty()) return std::nullopt;
    return candidates[pick(candidates.size())];
  }

  bool passes_filter(const BiAmalgConfig& cfg) {
    switch (filter_) {
      case ConfigFilter::none: return true;
      case ConfigFilter::local_gaussian_sufficient:
        return verify_local_gaussian_transfer(2, cfg).status != TheoremStatus::hypothesis_not_met;
      case ConfigFilter::regular_ideal:
        return verify_regular_transfer(cfg, TransferMode::gaussian).status != TheoremStatus::hypothesis_not_met;
      case ConfigFilter::total_quotient:
        return verify_total_quotient_transfer(cfg).status != TheoremStatus::hypothesis_not_met;
    }
    return false;
  }

  std::mt19937_64 rng_;
  RandomBounds bounds_;
  ConfigFilter filter_;
};

}  // namespace

RandomConfig random_config(std::uint64_t seed, const RandomBounds& bounds, ConfigFilter filter) {
  Generator gen(seed, bounds, filter);
  for (std::size_t k = 1; k <= bounds.max_attempts; ++k) {
    std::optional<RandomConfig> out;
    try {
      ScopedElementCap cap(std::min(element_cap(), std::max(bounds.max_ring, bounds.max_result)));
      out = gen.attempt();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::size_limit) throw;
    }
    if (out) {
      out->attempts = k;
      return std::move(*out);
    }
  }
  throw Error(ErrorKind::generation_failure, "no configuration for filter " + std::string(to_string(filter)) +
                                                 " within " + std::to_string(bounds.max_attempts) +
                                                 " attempts (seed " + std::to_string(seed) + ")");
}

std::vector<TheoremReport> verify_config(const BiAmalgConfig& cfg, ConfigFilter filter) {
  std::vector<TheoremReport> out;
  const bool all = filter == ConfigFilter::none;
  if (all || filter == ConfigFilter::regular_ideal) {
    out.push_back(verify_regular_transfer(cfg, TransferMode::gaussian));
    out.push_back(verify_regular_transfer(cfg, TransferMode::prufer));
  }
  if (all) out.push_back(verify_local_gaussian_transfer(1, cfg));
  if (all || filter == ConfigFilter::local_gaussian_sufficient) out.push_back(verify_local_gaussian_transfer(2, cfg));
  if (all) out.push_back(verify_local_gaussian_transfer(3, cfg));
  if (all || filter == ConfigFilter::total_quotient) out.push_back(verify_total_quotient_transfer(cfg));
  if (all)
    for (const auto& p : maximal_ideals(cfg.a()))
      if (cfg.conductor().is_subset_of(p)) out.push_back(verify_localization_report(cfg, p));
  return out;
}

// ---------------------------------------------------------------------------
// Regression corpus

std::vector<CorpusRing> test_corpus() {
  std::vector<CorpusRing> out;
  auto add = [&](std::string name, FiniteRing r) { out.push_back(CorpusRing{std::move(name), std::move(r)}); };
  for (std::uint32_t n : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 9u, 12u, 16u, 27u, 32u})
    add("Z/" + std::to_string(n), make_zmod(n));
  add("F2[x]/(x^2)", make_monomial_quotient(2, {"x"}, {2}, {}));
  add("F2[x]/(x^3)", make_monomial_quotient(2, {"x"}, {3}, {}));
  add("F2[x]/(x^5)", make_monomial_quotient(2, {"x"}, {5}, {}));
  add("F3[x]/(x^2)", make_monomial_quotient(3, {"x"}, {2}, {}));
  add("F2[x,y]/(x^2,y^2)", make_monomial_quotient(2, {"x", "y"}, {2, 2}, {}));
  add("F2[x,y]/(x^2,xy,y^2)", make_monomial_quotient(2, {"x", "y"}, {2, 2}, {Monomial{1, 1}}));
  add("F3[x,y]/(x^2,xy,y^2)", make_monomial_quotient(3, {"x", "y"}, {2, 2}, {Monomial{1, 1}}));
  add("F2[x,y]/(x^3,y^2)", make_monomial_quotient(2, {"x", "y"}, {3, 2}, {}));
  add("F2[x,y,z]/(x,y,z)^2", make_monomial_quotient(2, {"x", "y", "z"}, {2, 2, 2},
                                                   {Monomial{1, 1, 0}, Monomial{1, 0, 1}, Monomial{0, 1, 1}}));
  add("Z/2 x Z/3", make_product(make_zmod(2), make_zmod(3)));
  add("Z/2 x Z/4", make_product(make_zmod(2), make_zmod(4)));
  add("Z/4 x Z/4", make_product(make_zmod(4), make_zmod(4)));
  add("Z/2 x F2[x,y]/(x^2,y^2)", make_product(make_zmod(2), make_monomial_quotient(2, {"x", "y"}, {2, 2}, {})));
  {
    auto z4 = make_zmod(4);
    add("Z/4 x| Z/2", trivext(z4, make_module(z4, {Ideal::span(z4, {z4.elem("2")})})).ring);
    add("Z/4 x| (Z/2)^2", trivext(z4, make_module(z4, {Ideal::span(z4, {z4.elem("2")})}, 2)).ring);
    add("Z/4 x| Z/4", trivext(z4, make_module(z4, {Ideal::zero(z4)})).ring);
    auto z8 = make_zmod(8);
    add("Z/8 x| Z/2", trivext(z8, make_module(z8, {Ideal::span(z8, {z8.elem("2")})})).ring);
  }
  {
    auto ex = build_gaussian_example();
    add("gaussian example A", ex.a);
    add("gaussian example B", ex.config.b());
    add("gaussian example D", biamalg(ex.config).ring());
    add("F2[x,y]/(x^2,y^2) x| k", build_prufer_example().a);
  }
  {
    auto z6 = make_zmod(6);
    add("Z/6 dup (2)", duplicate(z6, Ideal::span(z6, {z6.elem("2")})).ring());
    auto z4 = make_zmod(4);
    add("Z/4 dup (2)", duplicate(z4, Ideal::span(z4, {z4.elem("2")})).ring());
    add("Z/4 amalg Z/4 along (2)", amalg(identity_hom(z4), Ideal::span(z4, {z4.elem("2")})).ring());
  }
  return out;
}

}  // namespace biamalg
