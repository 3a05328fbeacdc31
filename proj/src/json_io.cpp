#include "u21/json_io.hpp"

#include <vector>

#include "u21/error.hpp"

namespace u21 {

namespace {

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::InvalidArgument, std::string("missing JSON key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("bad JSON value for '") + key + "': " + e.what());
  }
}

Json optional_long(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<long> optional_long_from(const Json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return field<long>(j, key);
}

CriticalKind kind_from(const std::string& name) {
  if (name == kind_name(CriticalKind::Length2)) return CriticalKind::Length2;
  if (name == kind_name(CriticalKind::Length3)) return CriticalKind::Length3;
  throw Error(ErrorCode::InvalidArgument, "unknown critical kind '" + name + "'");
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_decimal(c));
  return Json{{"min_exp", p.min_exp()}, {"coeffs", std::move(coeffs)}};
}

LaurentPoly laurent_from_json(const Json& j) {
  const long min_exp = field<long>(j, "min_exp");
  if (!j.contains("coeffs") || !j.at("coeffs").is_array()) throw Error(ErrorCode::InvalidArgument, "'coeffs' must be an array");
  std::vector<Integer> coeffs;
  for (const auto& c : j.at("coeffs")) {
    if (!c.is_string()) throw Error(ErrorCode::InvalidArgument, "coefficients must be decimal strings");
    coeffs.push_back(parse_decimal(c.get<std::string>()));
  }
  return LaurentPoly(min_exp, std::move(coeffs));
}

Json to_json(const ModuliParams& p) {
  return Json{{"genus", p.g}, {"d1", p.d1}, {"d2", p.d2}, {"fixed_det", p.det == Determinant::Fixed}};
}

Json to_json(const NormalizedParams& n) {
  return Json{{"genus", n.g}, {"d", n.d}, {"d2", n.d2}, {"dualized", n.dualized}, {"tensor_shift", n.tensor_shift}};
}

Json to_json(const CriticalReport& c) {
  Json chain = Json::array();
  for (const auto& s : c.chain.steps) chain.push_back(Json{{"rank", s.rank}, {"degree", s.degree}});
  Json out{{"kind", std::string(kind_name(c.kind))},
           {"m1", optional_long(c.m1)},
           {"m2", optional_long(c.m2)},
           {"morse_index", c.morse_index},
           {"dim_critical", c.dim_critical},
           {"dim_downflow", c.dim_downflow},
           {"chain", std::move(chain)}};
  if (c.triple) {
    out["triple"] = Json{{"alpha", c.triple->alpha},     {"rank_e1", c.triple->rank_e1},
                         {"deg_e1", c.triple->deg_e1},   {"rank_e2", c.triple->rank_e2},
                         {"deg_e2", c.triple->deg_e2}};
  }
  out["poincare"] = to_json(c.poincare);
  return out;
}

Json to_json(const ComponentReport& r) {
  Json criticals = Json::array();
  for (const auto& c : r.criticals) criticals.push_back(to_json(c));
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(Json{{"name", c.name}, {"pass", c.pass}});
  return Json{{"params", to_json(r.params)},         {"normalized", to_json(r.normalized)},
              {"criticals", std::move(criticals)},   {"poincare", to_json(r.poincare)},
              {"euler", to_decimal(r.euler)},         {"checks", std::move(checks)}};
}

ComponentReport report_from_json(const Json& j) {
  ComponentReport r;
  const Json& p = j.at("params");
  r.params = ModuliParams{field<int>(p, "genus"), field<long>(p, "d1"), field<long>(p, "d2"),
                          field<bool>(p, "fixed_det") ? Determinant::Fixed : Determinant::Free};
  const Json& n = j.at("normalized");
  r.normalized = NormalizedParams{field<int>(n, "genus"), field<long>(n, "d"), field<long>(n, "d2"),
                                  field<bool>(n, "dualized"), field<long>(n, "tensor_shift")};
  for (const auto& c : j.at("criticals")) {
    CriticalReport cr;
    cr.kind = kind_from(field<std::string>(c, "kind"));
    cr.m1 = optional_long_from(c, "m1");
    cr.m2 = optional_long_from(c, "m2");
    cr.morse_index = field<long>(c, "morse_index");
    cr.dim_critical = field<long>(c, "dim_critical");
    cr.dim_downflow = field<long>(c, "dim_downflow");
    cr.chain.g = r.params.g;
    for (const auto& s : c.at("chain")) cr.chain.steps.push_back(ChainStep{field<long>(s, "rank"), field<long>(s, "degree")});
    if (c.contains("triple")) {
      const Json& t = c.at("triple");
      cr.triple = TripleData{field<long>(t, "alpha"), field<long>(t, "rank_e1"), field<long>(t, "deg_e1"),
                             field<long>(t, "rank_e2"), field<long>(t, "deg_e2")};
    }
    cr.poincare = laurent_from_json(c.at("poincare"));
    r.criticals.push_back(std::move(cr));
  }
  r.poincare = laurent_from_json(j.at("poincare"));
  r.euler = parse_decimal(field<std::string>(j, "euler"));
  for (const auto& c : j.at("checks")) r.checks.push_back(CheckResult{field<std::string>(c, "name"), field<bool>(c, "pass")});
  return r;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace u21
