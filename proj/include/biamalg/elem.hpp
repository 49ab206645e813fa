#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace biamalg {

/// Canonical element index inside its owning ring. Index 0 is always the
/// additive identity.
struct Elem {
  std::uint32_t index = 0;

  friend constexpr bool operator==(Elem, Elem) = default;
  friend constexpr auto operator<=>(Elem, Elem) = default;
};

/// Bitset over the elements of a single ring.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Elem e) const noexcept { return (words_[e.index >> 6] >> (e.index & 63)) & 1u; }
  void insert(Elem e) noexcept { words_[e.index >> 6] |= std::uint64_t{1} << (e.index & 63); }
  void erase(Elem e) noexcept { words_[e.index >> 6] &= ~(std::uint64_t{1} << (e.index & 63)); }

  std::size_t count() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  bool is_subset_of(const ElemSet& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  ElemSet& operator&=(const ElemSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  ElemSet& operator|=(const ElemSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) noexcept { return a &= b; }
  friend ElemSet operator|(ElemSet a, const ElemSet& b) noexcept { return a |= b; }
  friend bool operator==(const ElemSet&, const ElemSet&) = default;

  /// Smallest member, or universe() when empty.
  std::size_t first() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
    return universe_;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      auto w = words_[i];
      while (w) {
        auto bit = std::countr_zero(w);
        f(Elem{static_cast<std::uint32_t>(i * 64 + static_cast<std::size_t>(bit))});
        w &= w - 1;
      }
    }
  }

  std::vector<Elem> to_vector() const {
    std::vector<Elem> out;
    out.reserve(count());
    for_each([&](Elem e) { out.push_back(e); });
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull ^ universe_;
    for (auto w : words_) h = (h ^ w) * 1099511628211ull;
    return h;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElemSetHash {
  std::size_t operator()(const ElemSet& s) const noexcept { return s.hash(); }
};

}  // namespace biamalg
