#include "stabgeo/json_io.hpp"

namespace stabgeo {

namespace {

Json point_body(const StabPoint& s, bool with_shift) {
  Json j;
  j["form"] = to_string(s.form());
  if (s.is_geometric()) {
    const Complex t = s.geometric().tau;
    j["tau"] = Json::array({t.real(), t.imag()});
  } else if (s.is_boundary()) {
    j["tau"] = s.boundary().tau;
  } else {
    const AlgebraicCoords& a = s.algebraic();
    j["k"] = a.k;
    j["alpha"] = a.alpha;
    j["beta"] = a.beta;
  }
  if (with_shift) {
    j["x"] = s.x();
    j["y"] = s.y();
  }
  return j;
}

double number(const Json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) throw DomainError(std::string("field '") + key + "' must be a number");
  return j[key].get<double>();
}

double required(const Json& j, const char* key) {
  if (!j.contains(key)) throw DomainError(std::string("missing field '") + key + "'");
  return number(j, key, 0.0);
}

}  // namespace

Json to_json(const StabPoint& s) { return point_body(s, true); }

Json to_json(const QuotientPoint& q) { return point_body(q.representative(), false); }

Json to_json(const HPoint& p) { return Json::array({p.z().real(), p.z().imag()}); }

Json to_json(const SheafClass& c) {
  Json j;
  if (c.is_skyscraper()) {
    j["type"] = "skyscraper";
  } else {
    j["type"] = "line_bundle";
    j["n"] = c.degree_index();
  }
  return j;
}

Json to_json(const DistanceBreakdown& d) {
  Json j;
  j["d"] = d.d;
  j["d_mass"] = d.d_mass;
  j["d_phase"] = d.d_phase;
  j["witnesses"] = d.witnesses;
  return j;
}

Json to_json(const AnyPoint& p) {
  return std::visit([](const auto& v) { return to_json(v); }, p);
}

Json to_json(const Polyline& path) {
  Json arr = Json::array();
  for (const AnyPoint& p : path.points()) arr.push_back(to_json(p));
  return arr;
}

StabPoint stab_point_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("form") || !j["form"].is_string())
    throw DomainError("point JSON needs a string field 'form'");
  const std::string form = j["form"].get<std::string>();
  const double x = number(j, "x", 0.0);
  const double y = number(j, "y", 0.0);
  if (form == "geometric") {
    if (!j.contains("tau") || !j["tau"].is_array() || j["tau"].size() != 2)
      throw DomainError("geometric point needs \"tau\": [re, im]");
    return StabPoint::geometric(Complex{j["tau"][0].get<double>(), j["tau"][1].get<double>()}, x, y);
  }
  if (form == "boundary") return StabPoint::boundary(required(j, "tau"), x, y);
  if (form == "algebraic") {
    if (!j.contains("k") || !j["k"].is_number_integer())
      throw DomainError("algebraic point needs an integer field 'k'");
    return StabPoint::algebraic(j["k"].get<int>(), required(j, "alpha"), required(j, "beta"), x, y);
  }
  throw DomainError("unknown point form: " + form);
}

QuotientPoint quotient_point_from_json(const Json& j) {
  return QuotientPoint::of(stab_point_from_json(j));
}

HPoint hpoint_from_json(const Json& j) {
  if (j.is_number()) return HPoint(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return HPoint(j[0].get<double>(), j[1].get<double>());
  throw DomainError("half-plane point must be [re, im] or a real number");
}

SheafClass sheaf_class_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type")) throw DomainError("sheaf JSON needs 'type'");
  const std::string type = j["type"].get<std::string>();
  if (type == "skyscraper") return SheafClass::skyscraper();
  if (type == "line_bundle") {
    if (!j.contains("n") || !j["n"].is_number_integer())
      throw DomainError("line bundle needs an integer field 'n'");
    return SheafClass::line_bundle(j["n"].get<int>());
  }
  throw DomainError("unknown sheaf type: " + type);
}

}  // namespace stabgeo
