#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "biamalg/ideal.hpp"

namespace biamalg {

/// Element of a FiniteModule, by canonical index; 0 is the zero vector.
struct ModuleElem {
  std::uint32_t index = 0;

  friend constexpr bool operator==(ModuleElem, ModuleElem) = default;
  friend constexpr auto operator<=>(ModuleElem, ModuleElem) = default;
};

/// Direct sum of cyclic modules base/I_k; summand k has generator e_{k+1}.
/// Elements are labeled as sums such as "e1", "x*e1+e2" or "0".
class FiniteModule {
 public:
  const FiniteRing& base() const noexcept;
  /// Annihilator of each summand, in summand order (copies expanded).
  const std::vector<Ideal>& summand_ideals() const noexcept;
  std::size_t rank() const noexcept;
  std::size_t size() const noexcept;
  const std::string& provenance() const noexcept;

  ModuleElem zero() const noexcept { return ModuleElem{0}; }
  ModuleElem generator(std::size_t k) const;
  ModuleElem add(ModuleElem x, ModuleElem y) const;
  ModuleElem neg(ModuleElem x) const;
  /// Scalar action a·x.
  ModuleElem act(Elem a, ModuleElem x) const;

  const std::string& label(ModuleElem x) const;
  std::optional<ModuleElem> find(std::string_view label) const;

  auto elements() const {
    return std::views::iota(std::uint32_t{0}, static_cast<std::uint32_t>(size())) |
           std::views::transform([](std::uint32_t i) { return ModuleElem{i}; });
  }

  friend bool operator==(const FiniteModule& a, const FiniteModule& b) noexcept { return a.impl_ == b.impl_; }

  struct Impl;

 private:
  explicit FiniteModule(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;

  friend FiniteModule make_module(const FiniteRing&, const std::vector<Ideal>&, std::size_t);
};

/// ⊕_k (base/I_k), the whole list repeated `copies` times.
FiniteModule make_module(const FiniteRing& base, const std::vector<Ideal>& components, std::size_t copies = 1);

}  // namespace biamalg
