#pragma once

#include <string>
#include <vector>

#include "biamalg/harness.hpp"
#include "biamalg/properties.hpp"

namespace biamalg::testing {

inline std::vector<std::string> labels(const FiniteRing& r, const std::vector<Elem>& xs) {
  std::vector<std::string> out;
  for (Elem x : xs) out.push_back(r.label(x));
  return out;
}

inline Ideal ideal_of(const FiniteRing& r, std::initializer_list<const char*> gens) {
  std::vector<Elem> xs;
  for (const char* g : gens) xs.push_back(r.elem(g));
  return Ideal::span(r, xs);
}

inline FiniteRing a1_ring() {
  std::vector<std::string> vars = {"x", "y"};
  std::vector<Monomial> rels = {parse_monomial("x^2", vars), parse_monomial("y^2", vars)};
  return make_monomial_quotient(2, vars, rels);
}

inline std::vector<CorpusRing> corpus_up_to(std::size_t n) {
  std::vector<CorpusRing> out;
  for (auto& c : test_corpus())
    if (c.ring.size() <= n) out.push_back(c);
  return out;
}

}  // namespace biamalg::testing
