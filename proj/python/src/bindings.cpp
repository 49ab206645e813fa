#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "biamalg/constructions.hpp"
#include "biamalg/harness.hpp"
#include "biamalg/localization.hpp"
#include "biamalg/properties.hpp"
#include "biamalg/script.hpp"
#include "biamalg/serialize.hpp"
#include "biamalg/version.hpp"

namespace py = pybind11;
using namespace biamalg;

namespace {

std::vector<std::string> labels(const FiniteRing& r, const std::vector<Elem>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (Elem x : xs) out.push_back(r.label(x));
  return out;
}

std::string dump(const nlohmann::json& j) { return j.dump(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite commutative rings, bi-amalgamations and their ideal-theoretic properties";
  m.attr("__version__") = std::string(kVersion);

  static py::exception<Error> error(m, "Error");
  static py::exception<script::ParseError> parse_error(m, "ScriptParseError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const script::ParseError& e) {
      parse_error(e.what());
    } catch (const Error& e) {
      error(e.what());
    }
  });

  py::class_<FiniteRing>(m, "Ring")
      .def_property_readonly("size", &FiniteRing::size)
      .def("__len__", &FiniteRing::size)
      .def_property_readonly("provenance", &FiniteRing::provenance)
      .def("labels",
           [](const FiniteRing& r) {
             std::vector<std::string> out;
             for (Elem x : r.elements()) out.push_back(r.label(x));
             return out;
           })
      .def("add", [](const FiniteRing& r, const std::string& a, const std::string& b) {
        return r.label(r.add(r.elem(a), r.elem(b)));
      })
      .def("mul", [](const FiniteRing& r, const std::string& a, const std::string& b) {
        return r.label(r.mul(r.elem(a), r.elem(b)));
      })
      .def("neg", [](const FiniteRing& r, const std::string& a) { return r.label(r.neg(r.elem(a))); })
      .def("is_unit", [](const FiniteRing& r, const std::string& a) { return r.is_unit(r.elem(a)); })
      .def_property_readonly("zero", [](const FiniteRing& r) { return r.label(r.zero()); })
      .def_property_readonly("one", [](const FiniteRing& r) { return r.label(r.one()); })
      .def("__repr__", [](const FiniteRing& r) {
        return "<Ring " + r.provenance() + " with " + std::to_string(r.size()) + " elements>";
      });

  py::class_<Ideal>(m, "Ideal")
      .def_property_readonly("ring", &Ideal::ring)
      .def_property_readonly("size", &Ideal::size)
      .def_property_readonly("generators", [](const Ideal& i) { return labels(i.ring(), i.generators()); })
      .def("elements", [](const Ideal& i) { return labels(i.ring(), i.elements()); })
      .def("__contains__", [](const Ideal& i, const std::string& a) { return i.contains(i.ring().elem(a)); })
      .def("__eq__", [](const Ideal& a, const Ideal& b) { return a == b; })
      .def("__repr__", [](const Ideal& i) { return "<Ideal " + i.to_string() + ">"; });

  py::class_<FiniteModule>(m, "Module")
      .def_property_readonly("size", &FiniteModule::size)
      .def_property_readonly("rank", &FiniteModule::rank);

  py::class_<RingHom>(m, "Hom")
      .def_property_readonly("domain", &RingHom::domain)
      .def_property_readonly("codomain", &RingHom::codomain)
      .def("__call__", [](const RingHom& h, const std::string& a) { return h.codomain().label(h(h.domain().elem(a))); })
      .def_property_readonly("injective", &RingHom::is_injective)
      .def_property_readonly("surjective", &RingHom::is_surjective);

  py::class_<BiAmalgConfig>(m, "Config")
      .def_property_readonly("f", &BiAmalgConfig::f)
      .def_property_readonly("g", &BiAmalgConfig::g)
      .def_property_readonly("j", &BiAmalgConfig::j)
      .def_property_readonly("j_prime", &BiAmalgConfig::j_prime)
      .def_property_readonly("conductor", &BiAmalgConfig::conductor)
      .def_property_readonly("expected_size", &BiAmalgConfig::expected_size);

  m.def("zmod", [](std::uint32_t n) { return make_zmod(n); }, py::arg("n"));
  m.def(
      "polyquo",
      [](std::uint32_t p, std::vector<std::string> vars, const std::vector<std::string>& relations) {
        std::vector<Monomial> rels;
        for (const auto& r : relations) rels.push_back(parse_monomial(r, vars));
        return make_monomial_quotient(p, std::move(vars), rels);
      },
      py::arg("p"), py::arg("variables"), py::arg("relations"));
  m.def("product", &make_product);
  m.def("span", [](const FiniteRing& r, const std::vector<std::string>& gens) {
    std::vector<Elem> xs;
    for (const auto& g : gens) xs.push_back(r.elem(g));
    return Ideal::span(r, xs);
  });
  m.def("quotient", [](const FiniteRing& r, const Ideal& i) {
    auto q = quotient_ring(r, i);
    return py::make_tuple(q.ring, q.surjection);
  });
  m.def("cyclic_module", [](const FiniteRing& r, const Ideal& i, std::size_t copies) {
    return make_module(r, {i}, copies);
  }, py::arg("ring"), py::arg("ideal"), py::arg("copies") = 1);
  m.def("trivext", [](const FiniteRing& r, const FiniteModule& e) {
    auto t = trivext(r, e);
    return py::make_tuple(t.ring, t.inclusion, t.projection);
  });
  m.def("identity", &identity_hom);
  m.def("compose", &hom_compose, py::arg("outer"), py::arg("inner"));
  m.def("config", &BiAmalgConfig::make, py::arg("f"), py::arg("g"), py::arg("j"), py::arg("j_prime"));
  m.def("biamalg", [](const BiAmalgConfig& c) { return biamalg::biamalg(c).ring(); });
  m.def("amalg", [](const RingHom& f, const Ideal& j) { return amalg(f, j).ring(); });
  m.def("duplicate", [](const FiniteRing& a, const Ideal& i) { return duplicate(a, i).ring(); });
  m.def("maximal_ideals", &maximal_ideals);

  m.def("_is_local", [](const FiniteRing& r) { return dump(to_json(is_local(r).verdict)); });
  m.def("_is_gaussian", [](const FiniteRing& r) { return dump(to_json(is_gaussian(r))); });
  m.def("_is_arithmetical", [](const FiniteRing& r) { return dump(to_json(is_arithmetical(r))); });
  m.def("_is_arithmetical_bruteforce", [](const FiniteRing& r) { return dump(to_json(is_arithmetical_bruteforce(r))); });
  m.def("_is_prufer", [](const FiniteRing& r) { return dump(to_json(is_prufer(r))); });
  m.def("_is_total_quotient_ring", [](const FiniteRing& r) { return dump(to_json(is_total_quotient_ring(r))); });
  m.def("_content_sample", [](const FiniteRing& r, int degree, std::size_t trials, std::uint64_t seed) {
    return dump(to_json(content_equation_sample(r, degree, trials, seed)));
  });

  m.def("_verify", [](const std::string& id, const BiAmalgConfig& cfg, const std::string& mode) {
    if (id == "thm2.1") return dump(to_json(verify_regular_transfer(cfg, parse_transfer_mode(mode))));
    if (id.starts_with("prop2.4.") && id.size() == 9)
      return dump(to_json(verify_local_gaussian_transfer(id.back() - '0', cfg)));
    if (id == "prop2.6") return dump(to_json(verify_total_quotient_transfer(cfg)));
    throw Error(ErrorKind::invalid_argument, "unknown result id '" + id + "'");
  });
  m.def("_verify_localization", [](const BiAmalgConfig& cfg, const Ideal& p) {
    return dump(to_json(verify_localization_report(cfg, p)));
  });
  m.def("_example_report", [](const std::string& id) {
    if (id == "2.5") return dump(to_json(gaussian_example_report()));
    if (id == "2.7") return dump(to_json(prufer_example_report()));
    throw Error(ErrorKind::invalid_argument, "unknown example '" + id + "'");
  });
  m.def("example_config", [](const std::string& id) {
    if (id == "2.5") return build_gaussian_example().config;
    if (id == "2.7") return build_prufer_example().config;
    throw Error(ErrorKind::invalid_argument, "unknown example '" + id + "'");
  });
  m.def("random_config", [](std::uint64_t seed, const std::string& filter) {
    auto rc = random_config(seed, {}, parse_config_filter(filter));
    return py::make_tuple(rc.config, rc.description);
  }, py::arg("seed"), py::arg("filter") = "none");

  m.def("_run_script", [](const std::string& text, std::uint64_t seed, std::size_t max_elements, bool fail_fast) {
    script::RunOptions o;
    o.seed = seed;
    o.max_elements = max_elements;
    o.fail_fast = fail_fast;
    auto report = script::run_script(script::parse_script(text), o);
    return py::make_tuple(dump(script::to_json(report)), report.exit_code());
  });
  m.def("format_script", [](const std::string& text) { return script::print_script(script::parse_script(text)); });
  m.def("example_script", [](const std::string& id) {
    auto s = script::example_script(id);
    if (!s) throw Error(ErrorKind::invalid_argument, "unknown example '" + id + "'");
    return std::string(*s);
  });
}
