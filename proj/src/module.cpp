#include "biamalg/module.hpp"

#include <unordered_map>

#include "ring_impl.hpp"

namespace biamalg {

struct FiniteModule::Impl {
  FiniteRing base;
  std::vector<Ideal> summand_ideals;
  std::vector<Quotient> summands;
  std::vector<std::size_t> strides;
  std::size_t size = 1;
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::uint32_t> by_label;
  std::string provenance;

  std::vector<std::uint32_t> digits(std::uint32_t x) const {
    std::vector<std::uint32_t> d(summands.size());
    for (std::size_t k = 0; k < summands.size(); ++k) {
      d[k] = static_cast<std::uint32_t>(x % summands[k].ring.size());
      x /= static_cast<std::uint32_t>(summands[k].ring.size());
    }
    return d;
  }
  std::uint32_t encode(const std::vector<std::uint32_t>& d) const {
    std::size_t x = 0;
    for (std::size_t k = 0; k < d.size(); ++k) x += d[k] * strides[k];
    return static_cast<std::uint32_t>(x);
  }
};

const FiniteRing& FiniteModule::base() const noexcept { return impl_->base; }
const std::vector<Ideal>& FiniteModule::summand_ideals() const noexcept { return impl_->summand_ideals; }
std::size_t FiniteModule::rank() const noexcept { return impl_->summands.size(); }
std::size_t FiniteModule::size() const noexcept { return impl_->size; }
const std::string& FiniteModule::provenance() const noexcept { return impl_->provenance; }

ModuleElem FiniteModule::generator(std::size_t k) const {
  if (k >= rank()) throw Error(ErrorKind::invalid_argument, "module has no generator e" + std::to_string(k + 1));
  std::vector<std::uint32_t> d(rank(), 0);
  d[k] = impl_->summands[k].ring.one().index;
  return ModuleElem{impl_->encode(d)};
}

ModuleElem FiniteModule::add(ModuleElem x, ModuleElem y) const {
  auto dx = impl_->digits(x.index), dy = impl_->digits(y.index);
  for (std::size_t k = 0; k < dx.size(); ++k)
    dx[k] = impl_->summands[k].ring.add(Elem{dx[k]}, Elem{dy[k]}).index;
  return ModuleElem{impl_->encode(dx)};
}

ModuleElem FiniteModule::neg(ModuleElem x) const {
  auto dx = impl_->digits(x.index);
  for (std::size_t k = 0; k < dx.size(); ++k) dx[k] = impl_->summands[k].ring.neg(Elem{dx[k]}).index;
  return ModuleElem{impl_->encode(dx)};
}

ModuleElem FiniteModule::act(Elem a, ModuleElem x) const {
  auto dx = impl_->digits(x.index);
  for (std::size_t k = 0; k < dx.size(); ++k) {
    const auto& q = impl_->summands[k];
    dx[k] = q.ring.mul(q.surjection(a), Elem{dx[k]}).index;
  }
  return ModuleElem{impl_->encode(dx)};
}

const std::string& FiniteModule::label(ModuleElem x) const { return impl_->labels.at(x.index); }

std::optional<ModuleElem> FiniteModule::find(std::string_view label) const {
  auto it = impl_->by_label.find(std::string(label));
  if (it == impl_->by_label.end()) return std::nullopt;
  return ModuleElem{it->second};
}

FiniteModule make_module(const FiniteRing& base, const std::vector<Ideal>& components, std::size_t copies) {
  if (copies == 0) throw Error(ErrorKind::invalid_argument, "module needs at least one copy");
  auto impl = std::make_shared<FiniteModule::Impl>(FiniteModule::Impl{base, {}, {}, {}, 1, {}, {}, {}});
  std::string prov = "cyclic(" + base.provenance();
  for (const auto& i : components) {
    if (!(i.ring() == base)) throw Error(ErrorKind::invalid_argument, "module component ideal is not in the base ring");
    prov += "," + i.to_string();
  }
  prov += ")";
  if (copies > 1) prov += "^" + std::to_string(copies);
  impl->provenance = prov;

  std::vector<Quotient> distinct;
  distinct.reserve(components.size());
  for (const auto& i : components) distinct.push_back(quotient_ring(base, i));
  for (std::size_t c = 0; c < copies; ++c) {
    for (std::size_t k = 0; k < components.size(); ++k) {
      impl->summand_ideals.push_back(components[k]);
      impl->summands.push_back(distinct[k]);
      impl->strides.push_back(impl->size);
      impl->size = detail::saturating_mul(impl->size, distinct[k].ring.size());
      detail::check_cap(impl->size, prov);
    }
  }

  // Least-index representative of each coset, for labels.
  std::vector<std::vector<Elem>> reps(impl->summands.size());
  for (std::size_t k = 0; k < impl->summands.size(); ++k) {
    const auto& q = impl->summands[k];
    reps[k].assign(q.ring.size(), Elem{0});
    std::vector<bool> seen(q.ring.size(), false);
    for (auto x : base.elements()) {
      auto c = q.surjection(x).index;
      if (!seen[c]) {
        seen[c] = true;
        reps[k][c] = x;
      }
    }
  }
  impl->labels.reserve(impl->size);
  for (std::uint32_t x = 0; x < impl->size; ++x) {
    auto d = impl->digits(x);
    std::string text;
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k] == 0) continue;
      const auto& q = impl->summands[k];
      std::string gen = "e" + std::to_string(k + 1);
      std::string term = Elem{d[k]} == q.ring.one() ? gen : detail::parenthesize(base.label(reps[k][d[k]])) + "*" + gen;
      if (!text.empty()) text += "+";
      text += term;
    }
    impl->labels.push_back(text.empty() ? "0" : text);
    impl->by_label.emplace(impl->labels.back(), x);
  }
  return FiniteModule(std::move(impl));
}

}  // namespace biamalg
