#include "qcomin/json_io.hpp"

#include <stdexcept>

namespace qcomin {

Json to_json(const CominData& c, const Shape& s) {
  Json j;
  j["boxes"] = s.boxes.indices();
  if (c.has_rows()) j["rows"] = shape_rows(c, s);
  return j;
}

Shape shape_from_json(const CominData& c, const Json& j) {
  BoxSet s;
  for (int i : j.at("boxes").get<std::vector<int>>()) {
    if (i < 0 || i >= c.size()) throw std::invalid_argument("box index out of range");
    s.set(i);
  }
  return c.make_shape(s);
}

Json to_json(const DegreeProfile& p) {
  Json j;
  j["d_min"] = p.d_min;
  j["d_max"] = p.d_max;
  j["qh_degrees"] = p.qh_degrees;
  j["qk_interval"] = {p.qk_interval.first, p.qk_interval.second};
  j["exceptional"] = p.exceptional ? Json(*p.exceptional) : Json(nullptr);
  j["exceptional_status"] = to_string(p.status);
  return j;
}

DegreeProfile profile_from_json(const Json& j) {
  DegreeProfile p;
  p.d_min = j.at("d_min").get<int>();
  p.d_max = j.at("d_max").get<int>();
  p.qh_degrees = j.at("qh_degrees").get<std::vector<int>>();
  auto qk = j.at("qk_interval").get<std::vector<int>>();
  if (qk.size() != 2) throw std::invalid_argument("qk_interval must have two entries");
  p.qk_interval = {qk[0], qk[1]};
  if (!j.at("exceptional").is_null()) p.exceptional = j.at("exceptional").get<int>();
  const std::string st = j.at("exceptional_status").get<std::string>();
  if (st == "absent") p.status = ExceptionalStatus::Absent;
  else if (st == "present-conjectural") p.status = ExceptionalStatus::PresentConjectural;
  else if (st == "present-verified") p.status = ExceptionalStatus::PresentVerified;
  else throw std::invalid_argument("unknown exceptional_status '" + st + "'");
  return p;
}

Json to_json(const WeightMultiset& w) {
  Json arr = Json::array();
  for (const auto& [wt, k] : w.entries()) arr.push_back({{"weight", wt}, {"multiplicity", k}});
  return arr;
}

WeightMultiset multiset_from_json(const Json& j) {
  WeightMultiset w;
  for (const auto& e : j) w.add(e.at("weight").get<RootVector>(), e.at("multiplicity").get<std::int64_t>());
  return w;
}

Json poset_json(const CominData& c) {
  Json j;
  j["type"] = c.rs().type().name();
  j["gamma"] = c.gamma() + 1;
  Json boxes = Json::array();
  for (int i = 0; i < c.size(); ++i)
    boxes.push_back({{"coeffs", c.box(i)}, {"label", c.label(i) + 1}, {"long", c.is_long_box(i)}});
  j["boxes"] = boxes;
  Json covers = Json::array();
  for (auto [a, b] : c.covers()) covers.push_back({a, b});
  j["covers"] = covers;
  return j;
}

Json cylinder_json(const CominData& c, const CylinderWindow& w) {
  Json els = Json::array();
  for (const auto& x : w.elements) {
    if (x.kind == CylinderElement::Kind::PureQ)
      els.push_back({{"kind", "q"}, {"d", x.d}, {"shape", Json::array()}});
    else
      els.push_back({{"kind", "tau"}, {"d", x.d}, {"box", x.box}, {"shape", c.below(x.box).indices()}});
  }
  Json rel = Json::array();
  for (auto [a, b] : w.relations) rel.push_back({a, b});
  return {{"window", {w.lo, w.hi}}, {"elements", els}, {"relations", rel}};
}

}  // namespace qcomin
