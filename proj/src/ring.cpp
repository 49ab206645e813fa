#include "biamalg/ring.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "ring_impl.hpp"

namespace biamalg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::size_limit: return "size-limit";
    case ErrorKind::infinite_ring: return "infinite-ring";
    case ErrorKind::not_a_homomorphism: return "not-a-homomorphism";
    case ErrorKind::conductor_mismatch: return "conductor-mismatch";
    case ErrorKind::generation_failure: return "generation-failure";
    case ErrorKind::internal: return "internal-error";
  }
  return "error";
}

namespace {

std::atomic<std::size_t> g_element_cap{kDefaultElementCap};
std::atomic<std::uint64_t> g_next_ring_id{1};

}  // namespace

std::size_t element_cap() noexcept { return g_element_cap.load(std::memory_order_relaxed); }

void set_element_cap(std::size_t cap) {
  if (cap == 0) throw Error(ErrorKind::invalid_argument, "element cap must be positive");
  g_element_cap.store(cap, std::memory_order_relaxed);
}

namespace detail {

void check_cap(std::size_t size, std::string_view what) {
  if (size > element_cap()) {
    std::ostringstream os;
    os << what << " would have " << size << " elements, above the element cap of " << element_cap();
    throw Error(ErrorKind::size_limit, os.str());
  }
}

std::size_t saturating_mul(std::size_t a, std::size_t b) noexcept {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) return std::numeric_limits<std::size_t>::max();
  return a * b;
}

std::string parenthesize(const std::string& label) {
  if (label.find_first_of("+*") == std::string::npos) return label;
  return "(" + label + ")";
}

FiniteRing make_ring(std::unique_ptr<const RingStructure> structure, std::size_t size, std::uint32_t one,
                     std::vector<std::string> labels, std::string provenance) {
  check_cap(size, provenance);
  if (size == 0 || labels.size() != size || one >= size)
    throw Error(ErrorKind::internal, "inconsistent ring data for " + provenance);

  auto data = std::make_shared<RingData>();
  data->id = g_next_ring_id.fetch_add(1);
  data->size = size;
  data->one = one;
  data->provenance = std::move(provenance);
  data->labels = std::move(labels);
  data->by_label.reserve(size);
  for (std::uint32_t i = 0; i < size; ++i) {
    if (!data->by_label.emplace(data->labels[i], i).second)
      throw Error(ErrorKind::internal, "duplicate element label '" + data->labels[i] + "' in " + data->provenance);
  }
  data->neg_table.resize(size);
  for (std::uint32_t i = 0; i < size; ++i) data->neg_table[i] = structure->neg(i);
  if (size <= kTableLimit) {
    data->add_table.resize(size * size);
    data->mul_table.resize(size * size);
    for (std::uint32_t a = 0; a < size; ++a) {
      for (std::uint32_t b = a; b < size; ++b) {
        auto s = static_cast<std::uint16_t>(structure->add(a, b));
        auto p = static_cast<std::uint16_t>(structure->mul(a, b));
        data->add_table[a * size + b] = data->add_table[b * size + a] = s;
        data->mul_table[a * size + b] = data->mul_table[b * size + a] = p;
      }
    }
  }
  data->structure = std::move(structure);
  return FiniteRing(std::move(data));
}

const RingStructure& structure_of(const FiniteRing& ring) { return *ring.data_->structure; }

}  // namespace detail

FiniteRing::FiniteRing(std::shared_ptr<const detail::RingData> data)
    : data_(std::move(data)), size_(data_->size), one_(data_->one) {
  if (!data_->add_table.empty()) {
    add_table_ = data_->add_table.data();
    mul_table_ = data_->mul_table.data();
  }
  neg_table_ = data_->neg_table.data();
}

Elem FiniteRing::slow_add(Elem a, Elem b) const { return Elem{data_->structure->add(a.index, b.index)}; }
Elem FiniteRing::slow_mul(Elem a, Elem b) const { return Elem{data_->structure->mul(a.index, b.index)}; }

Elem FiniteRing::pow(Elem a, std::uint64_t k) const {
  Elem result = one();
  while (k) {
    if (k & 1) result = mul(result, a);
    a = mul(a, a);
    k >>= 1;
  }
  return result;
}

Elem FiniteRing::times(std::uint64_t k, Elem a) const {
  Elem result = zero();
  while (k) {
    if (k & 1) result = add(result, a);
    a = add(a, a);
    k >>= 1;
  }
  return result;
}

const std::string& FiniteRing::label(Elem a) const { return data_->labels.at(a.index); }

std::optional<Elem> FiniteRing::find(std::string_view label) const {
  auto it = data_->by_label.find(std::string(label));
  if (it == data_->by_label.end()) return std::nullopt;
  return Elem{it->second};
}

Elem FiniteRing::elem(std::string_view label) const {
  if (auto e = find(label)) return *e;
  throw Error(ErrorKind::invalid_argument,
              "no element labeled '" + std::string(label) + "' in " + data_->provenance);
}

const std::string& FiniteRing::provenance() const { return data_->provenance; }
std::uint64_t FiniteRing::id() const noexcept { return data_->id; }

const ElemSet& FiniteRing::units() const {
  std::call_once(data_->units_once, [this] {
    ElemSet units(size_);
    std::vector<std::uint32_t> inv(size_, std::numeric_limits<std::uint32_t>::max());
    for (auto a : elements()) {
      if (units.contains(a)) continue;
      for (auto b : elements()) {
        if (mul(a, b) == one()) {
          units.insert(a);
          units.insert(b);
          inv[a.index] = b.index;
          inv[b.index] = a.index;
          break;
        }
      }
    }
    data_->inverses = std::move(inv);
    data_->units = std::move(units);
  });
  return data_->units;
}

std::optional<Elem> FiniteRing::inverse(Elem a) const {
  if (!units().contains(a)) return std::nullopt;
  return Elem{data_->inverses[a.index]};
}

bool FiniteRing::is_zero_divisor(Elem a) const {
  if (a == zero()) return false;
  for (auto b : elements())
    if (b != zero() && mul(a, b) == zero()) return true;
  return false;
}

std::size_t FiniteRing::additive_order(Elem a) const {
  std::size_t k = 1;
  for (Elem m = a; m != zero(); m = add(m, a)) ++k;
  return k;
}

// ---------------------------------------------------------------------------
// Z/nZ

namespace {

class ZModStructure final : public detail::RingStructure {
 public:
  explicit ZModStructure(std::uint32_t n) : n_(n) {}
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const override { return (a + b) % n_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % n_);
  }
  std::uint32_t neg(std::uint32_t a) const override { return a == 0 ? 0 : n_ - a; }

 private:
  std::uint32_t n_;
};

}  // namespace

FiniteRing make_zmod(std::uint32_t n) {
  if (n == 0) throw Error(ErrorKind::invalid_argument, "zmod requires n >= 1");
  detail::check_cap(n, "zmod(" + std::to_string(n) + ")");
  std::vector<std::string> labels(n);
  for (std::uint32_t i = 0; i < n; ++i) labels[i] = std::to_string(i);
  return detail::make_ring(std::make_unique<ZModStructure>(n), n, n == 1 ? 0 : 1, std::move(labels),
                           "zmod(" + std::to_string(n) + ")");
}

// ---------------------------------------------------------------------------
// Monomial quotients of F_p[x_1..x_k]

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool divides(const Monomial& m, const Monomial& n) {
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] > n[i]) return false;
  return true;
}

class MonomialStructure final : public detail::RingStructure {
 public:
  MonomialStructure(std::uint32_t p, std::size_t dim, std::vector<std::vector<int>> basis_mul)
      : p_(p), dim_(dim), basis_mul_(std::move(basis_mul)) {}

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
    std::uint32_t out = 0, scale = 1;
    for (std::size_t i = 0; i < dim_; ++i) {
      out += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return out;
  }

  std::uint32_t neg(std::uint32_t a) const override {
    std::uint32_t out = 0, scale = 1;
    for (std::size_t i = 0; i < dim_; ++i) {
      out += ((p_ - a % p_) % p_) * scale;
      a /= p_;
      scale *= p_;
    }
    return out;
  }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
    std::vector<std::uint32_t> da(dim_), db(dim_), dc(dim_, 0);
    for (std::size_t i = 0; i < dim_; ++i) {
      da[i] = a % p_;
      a /= p_;
      db[i] = b % p_;
      b /= p_;
    }
    for (std::size_t i = 0; i < dim_; ++i) {
      if (!da[i]) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        int k = basis_mul_[i][j];
        if (k < 0 || !db[j]) continue;
        dc[static_cast<std::size_t>(k)] = (dc[static_cast<std::size_t>(k)] + da[i] * db[j]) % p_;
      }
    }
    std::uint32_t out = 0, scale = 1;
    for (std::size_t i = 0; i < dim_; ++i) {
      out += dc[i] * scale;
      scale *= p_;
    }
    return out;
  }

 private:
  std::uint32_t p_;
  std::size_t dim_;
  std::vector<std::vector<int>> basis_mul_;  // -1 when the product is annihilated
};

std::string monomial_label(const Monomial& m, const std::vector<std::string>& vars) {
  std::string out;
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v] == 0) continue;
    if (!out.empty()) out += '*';
    out += vars[v];
    if (m[v] > 1) out += '^' + std::to_string(m[v]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

Monomial parse_monomial(std::string_view text, std::span<const std::string> vars) {
  Monomial m(vars.size(), 0);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorKind::invalid_argument, "bad monomial '" + std::string(text) + "': " + why);
  };
  if (text == "1") return m;
  while (pos < text.size()) {
    if (text[pos] == '*') {
      ++pos;
      continue;
    }
    // Longest variable name matching at pos.
    std::size_t best = vars.size(), best_len = 0;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      const auto& name = vars[v];
      if (name.size() > best_len && text.substr(pos, name.size()) == name) {
        best = v;
        best_len = name.size();
      }
    }
    if (best == vars.size()) fail("unknown variable at offset " + std::to_string(pos));
    pos += best_len;
    unsigned exponent = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) fail("missing exponent");
      exponent = static_cast<unsigned>(std::stoul(std::string(text.substr(start, pos - start))));
    }
    m[best] += exponent;
  }
  return m;
}

FiniteRing make_monomial_quotient(std::uint32_t p, std::vector<std::string> vars, std::vector<unsigned> nilpotency,
                                  std::vector<Monomial> extra_relations) {
  if (!is_prime(p)) throw Error(ErrorKind::invalid_argument, std::to_string(p) + " is not prime");
  if (nilpotency.size() != vars.size())
    throw Error(ErrorKind::invalid_argument, "one nilpotency bound is required per variable");
  for (const auto& r : extra_relations)
    if (r.size() != vars.size()) throw Error(ErrorKind::invalid_argument, "relation has wrong number of exponents");

  std::ostringstream prov;
  prov << "polyquo(" << p;
  for (std::size_t v = 0; v < vars.size(); ++v) {
    if (nilpotency[v] == 0)
      throw Error(ErrorKind::infinite_ring, "variable " + vars[v] + " is not nilpotent; the quotient is infinite");
    prov << "," << vars[v] << "^" << nilpotency[v];
  }
  for (const auto& r : extra_relations) prov << "," << monomial_label(r, vars);
  prov << ")";

  // Standard monomials: below every bound and not divisible by a relation.
  std::vector<Monomial> basis;
  Monomial cur(vars.size(), 0);
  std::size_t total = 1;
  for (auto b : nilpotency) total = detail::saturating_mul(total, b);
  if (total > (std::size_t{1} << 20))
    throw Error(ErrorKind::size_limit, prov.str() + " has too many candidate monomials");
  for (std::size_t n = 0; n < total; ++n) {
    std::size_t rest = n;
    for (std::size_t v = 0; v < vars.size(); ++v) {
      cur[v] = static_cast<unsigned>(rest % nilpotency[v]);
      rest /= nilpotency[v];
    }
    bool killed = std::any_of(extra_relations.begin(), extra_relations.end(),
                              [&](const Monomial& r) { return divides(r, cur); });
    if (!killed) basis.push_back(cur);
  }
  auto degree = [](const Monomial& m) {
    unsigned d = 0;
    for (auto e : m) d += e;
    return d;
  };
  std::sort(basis.begin(), basis.end(), [&](const Monomial& a, const Monomial& b) {
    if (degree(a) != degree(b)) return degree(a) < degree(b);
    return a > b;
  });

  std::size_t size = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    size = detail::saturating_mul(size, p);
    if (size > element_cap()) break;
  }
  detail::check_cap(size, prov.str());

  std::map<Monomial, int> position;
  for (std::size_t i = 0; i < basis.size(); ++i) position[basis[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> basis_mul(basis.size(), std::vector<int>(basis.size(), -1));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      Monomial prod(vars.size());
      for (std::size_t v = 0; v < vars.size(); ++v) prod[v] = basis[i][v] + basis[j][v];
      auto it = position.find(prod);
      if (it != position.end()) basis_mul[i][j] = it->second;
    }
  }

  std::vector<std::string> labels(size);
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::string text;
    std::size_t rest = idx;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      auto c = static_cast<unsigned>(rest % p);
      rest /= p;
      if (c == 0) continue;
      std::string term;
      std::string mono = monomial_label(basis[i], vars);
      if (i == 0)
        term = std::to_string(c);
      else
        term = c == 1 ? mono : std::to_string(c) + "*" + mono;
      if (!text.empty()) text += '+';
      text += term;
    }
    labels[idx] = text.empty() ? "0" : text;
  }
  std::uint32_t one = size == 1 ? 0 : 1;
  return detail::make_ring(std::make_unique<MonomialStructure>(p, basis.size(), std::move(basis_mul)), size, one,
                           std::move(labels), prov.str());
}

FiniteRing make_monomial_quotient(std::uint32_t p, std::vector<std::string> vars, std::span<const Monomial> relations) {
  std::vector<unsigned> nilpotency(vars.size(), 0);
  std::vector<Monomial> extra;
  for (const auto& r : relations) {
    if (r.size() != vars.size()) throw Error(ErrorKind::invalid_argument, "relation has wrong number of exponents");
    std::size_t nonzero = 0, var = 0;
    for (std::size_t v = 0; v < r.size(); ++v)
      if (r[v]) {
        ++nonzero;
        var = v;
      }
    if (nonzero == 0) {
      // The relation 1 = 0 collapses everything; model it as x^0 bounds.
      extra.push_back(r);
    } else if (nonzero == 1) {
      if (nilpotency[var] == 0 || r[var] < nilpotency[var]) nilpotency[var] = r[var];
    } else {
      extra.push_back(r);
    }
  }
  bool collapses = std::any_of(extra.begin(), extra.end(), [](const Monomial& m) {
    return std::all_of(m.begin(), m.end(), [](unsigned e) { return e == 0; });
  });
  if (collapses)
    for (auto& n : nilpotency)
      if (n == 0) n = 1;
  return make_monomial_quotient(p, std::move(vars), std::move(nilpotency), std::move(extra));
}

// ---------------------------------------------------------------------------
// Products

namespace {

class ProductStructure final : public detail::RingStructure {
 public:
  ProductStructure(FiniteRing r1, FiniteRing r2) : r1_(std::move(r1)), r2_(std::move(r2)), n2_(r2_.size()) {}

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
    return combine(r1_.add(first(a), first(b)), r2_.add(second(a), second(b)));
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
    return combine(r1_.mul(first(a), first(b)), r2_.mul(second(a), second(b)));
  }
  std::uint32_t neg(std::uint32_t a) const override { return combine(r1_.neg(first(a)), r2_.neg(second(a))); }

  Elem first(std::uint32_t a) const { return Elem{static_cast<std::uint32_t>(a / n2_)}; }
  Elem second(std::uint32_t a) const { return Elem{static_cast<std::uint32_t>(a % n2_)}; }
  std::uint32_t combine(Elem a, Elem b) const { return static_cast<std::uint32_t>(a.index * n2_ + b.index); }

  const FiniteRing& r1() const { return r1_; }
  const FiniteRing& r2() const { return r2_; }

 private:
  FiniteRing r1_, r2_;
  std::size_t n2_;
};

const ProductStructure& as_product(const FiniteRing& ring) {
  auto* p = dynamic_cast<const ProductStructure*>(&detail::structure_of(ring));
  if (!p) throw Error(ErrorKind::invalid_argument, ring.provenance() + " is not a product ring");
  return *p;
}

}  // namespace

FiniteRing make_product(const FiniteRing& r1, const FiniteRing& r2) {
  std::string prov = "product(" + r1.provenance() + "," + r2.provenance() + ")";
  std::size_t size = detail::saturating_mul(r1.size(), r2.size());
  detail::check_cap(size, prov);
  std::vector<std::string> labels;
  labels.reserve(size);
  for (auto a : r1.elements())
    for (auto b : r2.elements()) labels.push_back("(" + r1.label(a) + "," + r2.label(b) + ")");
  auto structure = std::make_unique<ProductStructure>(r1, r2);
  auto one = structure->combine(r1.one(), r2.one());
  return detail::make_ring(std::move(structure), size, one, std::move(labels), prov);
}

std::pair<Elem, Elem> product_components(const FiniteRing& product, Elem a) {
  const auto& p = as_product(product);
  return {p.first(a.index), p.second(a.index)};
}

std::pair<FiniteRing, FiniteRing> product_factors(const FiniteRing& product) {
  const auto& p = as_product(product);
  return {p.r1(), p.r2()};
}

// ---------------------------------------------------------------------------
// Element classification

std::string_view to_string(ElementClass c) noexcept {
  switch (c) {
    case ElementClass::zero: return "zero";
    case ElementClass::unit: return "unit";
    case ElementClass::zero_divisor: return "zero_divisor";
  }
  return "?";
}

ElementClass classify_element(const FiniteRing& ring, Elem a) {
  if (!ring.contains(a)) throw Error(ErrorKind::invalid_argument, "element index out of range");
  if (a == ring.zero()) return ElementClass::zero;
  if (ring.is_unit(a)) return ElementClass::unit;
  if (ring.is_zero_divisor(a)) return ElementClass::zero_divisor;
  // A finite ring has no regular non-units.
  throw Error(ErrorKind::internal, "element " + ring.label(a) + " is neither a unit nor a zero-divisor");
}

std::vector<Elem> regular_elements(const FiniteRing& ring) {
  std::vector<Elem> out;
  for (auto a : ring.elements()) {
    bool regular = true;
    for (auto b : ring.elements()) {
      if (b != ring.zero() && ring.mul(a, b) == ring.zero()) {
        regular = false;
        break;
      }
    }
    if (regular) out.push_back(a);
  }
  return out;
}

std::vector<Elem> idempotents(const FiniteRing& ring) {
  std::vector<Elem> out;
  for (auto a : ring.elements())
    if (ring.mul(a, a) == a) out.push_back(a);
  return out;
}

std::optional<std::string> check_ring_axioms(const FiniteRing& ring, std::size_t samples, std::uint64_t seed) {
  auto describe = [&](const char* law, Elem a, Elem b, Elem c) {
    return std::string(law) + " fails at (" + ring.label(a) + ", " + ring.label(b) + ", " + ring.label(c) + ")";
  };
  auto check = [&](Elem a, Elem b, Elem c) -> std::optional<std::string> {
    if (ring.add(a, b) != ring.add(b, a)) return describe("additive commutativity", a, b, c);
    if (ring.mul(a, b) != ring.mul(b, a)) return describe("multiplicative commutativity", a, b, c);
    if (ring.add(ring.add(a, b), c) != ring.add(a, ring.add(b, c))) return describe("additive associativity", a, b, c);
    if (ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)))
      return describe("multiplicative associativity", a, b, c);
    if (ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)))
      return describe("distributivity", a, b, c);
    if (ring.add(a, ring.zero()) != a) return describe("additive identity", a, b, c);
    if (ring.mul(a, ring.one()) != a) return describe("multiplicative identity", a, b, c);
    if (ring.add(a, ring.neg(a)) != ring.zero()) return describe("additive inverse", a, b, c);
    return std::nullopt;
  };
  if (ring.size() <= 64) {
    for (auto a : ring.elements())
      for (auto b : ring.elements())
        for (auto c : ring.elements())
          if (auto f = check(a, b, c)) return f;
    return std::nullopt;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(ring.size() - 1));
  for (std::size_t i = 0; i < samples; ++i)
    if (auto f = check(Elem{pick(rng)}, Elem{pick(rng)}, Elem{pick(rng)})) return f;
  return std::nullopt;
}

}  // namespace biamalg
