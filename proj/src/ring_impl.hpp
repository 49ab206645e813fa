#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "biamalg/ring.hpp"

namespace biamalg::detail {

/// Structural arithmetic for one ring family. Implementations compute on
/// canonical indices and never see other rings' indices.
class RingStructure {
 public:
  virtual ~RingStructure() = default;
  virtual std::uint32_t add(std::uint32_t a, std::uint32_t b) const = 0;
  virtual std::uint32_t mul(std::uint32_t a, std::uint32_t b) const = 0;
  virtual std::uint32_t neg(std::uint32_t a) const = 0;
};

struct RingData {
  std::uint64_t id = 0;
  std::size_t size = 0;
  std::uint32_t one = 0;
  std::unique_ptr<const RingStructure> structure;
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;
  std::vector<std::uint32_t> neg_table;
  std::vector<std::string> labels;
  std::unordered_map<std::string, std::uint32_t> by_label;
  std::string provenance;

  mutable std::once_flag units_once;
  mutable ElemSet units;
  mutable std::vector<std::uint32_t> inverses;
};

/// Throws size-limit when `size` exceeds the element cap.
void check_cap(std::size_t size, std::string_view what);
/// Product that saturates instead of overflowing.
std::size_t saturating_mul(std::size_t a, std::size_t b) noexcept;

/// Wraps a label for use inside a larger label when it contains operators.
std::string parenthesize(const std::string& label);

}  // namespace biamalg::detail
