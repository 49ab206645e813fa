#include "biamalg/serialize.hpp"

namespace biamalg {

using nlohmann::json;

namespace {

json labels(const FiniteRing& ring, const std::vector<Elem>& elems) {
  json out = json::array();
  for (Elem e : elems) out.push_back(ring.label(e));
  return out;
}

json optional_witness(const std::optional<Witness>& w) { return w ? to_json(*w) : json(nullptr); }

}  // namespace

json to_json(const Ideal& ideal) {
  return json{{"generators", labels(ideal.ring(), ideal.generators())}, {"size", ideal.size()}};
}

json to_json(const Witness& w) {
  json ideals = json::array();
  for (const auto& i : w.ideals) ideals.push_back(to_json(i));
  json polys = json::array();
  for (const auto& p : w.polynomials) polys.push_back(labels(w.ring, p));
  return json{{"kind", w.kind},
              {"elements", labels(w.ring, w.elements)},
              {"ideals", std::move(ideals)},
              {"polynomials", std::move(polys)},
              {"detail", w.detail}};
}

json to_json(const Verdict& v) {
  return json{{"holds", v.holds},
              {"conclusive", v.conclusive},
              {"method", v.method},
              {"note", v.note},
              {"witness", optional_witness(v.witness)}};
}

json to_json(const TheoremReport& r) {
  json hyps = json::array();
  for (const auto& h : r.hypotheses)
    hyps.push_back(
        json{{"name", h.name}, {"holds", h.holds}, {"detail", h.detail}, {"witness", optional_witness(h.witness)}});
  json concl = json::array();
  for (const auto& c : r.conclusions)
    concl.push_back(json{{"name", c.name},
                         {"expected", c.expected},
                         {"computed", c.computed},
                         {"detail", c.detail},
                         {"witness", optional_witness(c.witness)}});
  return json{{"theorem", r.theorem_id},
              {"status", std::string(to_string(r.status))},
              {"hypotheses", std::move(hyps)},
              {"conclusions", std::move(concl)},
              {"notes", r.notes}};
}

}  // namespace biamalg
