#pragma once

#include <optional>
#include <string>
#include <vector>

#include "biamalg/ideal.hpp"
#include "biamalg/ring.hpp"

namespace biamalg {

/// Counterexample attached to a failing verdict. Elements belong to `ring`;
/// polynomials are coefficient lists (index = degree).
struct Witness {
  FiniteRing ring;
  std::string kind;  // "elements", "ideals", "polynomials"
  std::vector<Elem> elements;
  std::vector<Ideal> ideals;
  std::vector<std::vector<Elem>> polynomials;
  std::string detail;

  std::vector<std::string> element_labels() const;
};

struct Verdict {
  bool holds = false;
  /// False for one-sided checks that found no counterexample.
  bool conclusive = true;
  std::string method;
  std::optional<Witness> witness;
  std::string note;
};

}  // namespace biamalg
