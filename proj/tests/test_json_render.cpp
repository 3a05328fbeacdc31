#include <doctest.h>

#include "u21/error.hpp"
#include "u21/json_io.hpp"
#include "u21/render.hpp"

using u21::Determinant;
using u21::LaurentPoly;
using u21::OutputFormat;

TEST_CASE("polynomial renderings ascend in t") {
  const LaurentPoly p(0, {1, 8, 29});
  CHECK(u21::poly_text(p) == "1 + 8*t + 29*t^2");
  CHECK(u21::poly_latex(p) == "1 + 8\\,t + 29\\,t^{2}");
  CHECK(u21::poly_csv(p) == "1;8;29");
  CHECK(u21::poly_text(LaurentPoly(-2, {-1, 0, 1, -3})) == "-t^-2 + 1 - 3*t");
  CHECK(u21::poly_latex(LaurentPoly(-2, {-1, 0, 1, -3})) == "-t^{-2} + 1 - 3\\,t");
  CHECK(u21::poly_text(LaurentPoly()) == "0");
  CHECK(u21::poly_latex(LaurentPoly(0, {0, 0, 3, 1})) == "3\\,t^{2} + t^{3}");
}

TEST_CASE("report JSON follows the schema") {
  const auto r = u21::component_poincare({2, 0, 1});
  const u21::Json j = u21::to_json(r);
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"params", "normalized", "criticals", "poincare", "euler", "checks"});
  CHECK(j["euler"] == "0");
  CHECK(j["poincare"]["min_exp"] == 0);
  CHECK(j["poincare"]["coeffs"][2] == "29");
  const auto& n3 = j["criticals"][1];
  CHECK(n3["kind"] == "N3");
  CHECK(n3["m2"] == 0);
  CHECK(n3["morse_index"] == 6);
  CHECK(n3["dim_critical"] == 4);
  CHECK(n3["dim_downflow"] == 7);
  CHECK(j["criticals"][0]["m2"].is_null());
  CHECK(j["criticals"][0]["triple"]["deg_e1"] == 4);
}

TEST_CASE("report JSON round trips byte for byte") {
  for (auto p : {u21::ModuliParams{2, 0, 1}, u21::ModuliParams{2, 1, 0, Determinant::Fixed},
                 u21::ModuliParams{4, 3, -2}, u21::ModuliParams{5, -4, 2, Determinant::Fixed}}) {
    const auto r = u21::component_poincare(p);
    const std::string text = u21::render_report(r, OutputFormat::Json);
    const auto back = u21::report_from_json(u21::Json::parse(text));
    CHECK(back == r);
    CHECK(u21::render_report(back, OutputFormat::Json) == text);
  }
}

TEST_CASE("report_from_json rejects broken documents") {
  CHECK_THROWS_AS(u21::report_from_json(u21::Json::parse(R"({"params":{}})")), std::exception);
  auto j = u21::to_json(u21::component_poincare({2, 0, 1}));
  j["criticals"][0]["kind"] = "N7";
  CHECK_THROWS_AS(u21::report_from_json(j), u21::Error);
}

TEST_CASE("text, latex and csv reports") {
  const auto r = u21::component_poincare({2, 0, 1});
  const std::string text = u21::render_report(r, OutputFormat::Text);
  CHECK(text.find("poincare: 1 + 8*t + 29*t^2 + 64*t^3") != std::string::npos);
  CHECK(text.find("euler: 0") != std::string::npos);
  CHECK(text.find("FAIL") == std::string::npos);

  CHECK(u21::render_report(r, OutputFormat::Latex).rfind("P_{t}(\\mathcal{M}_{0,1}) = 1 + 8\\,t + 29\\,t^{2}", 0) == 0);
  const auto fixed = u21::component_poincare({2, 1, 0, Determinant::Fixed});
  CHECK(u21::render_euler(fixed, OutputFormat::Latex) == "\\chi(\\widetilde{\\mathcal{M}}_{1,0}) = -324\n");

  const std::string csv = u21::render_report(r, OutputFormat::Csv);
  CHECK(csv.rfind("kind,m1,m2,morse_index,dim_critical,dim_downflow,min_exp,coeffs\n", 0) == 0);
  CHECK(csv.find("N3,2,0,6,4,7,0,1;8;29;60;76;60;29;8;1\n") != std::string::npos);
  CHECK(csv.find("total,,,,,,0,1;8;29;64;99;120;127;128;128;124;105;68;30;8;1\n") != std::string::npos);
}

TEST_CASE("euler rendering") {
  const auto r = u21::component_poincare({2, 0, 1, Determinant::Fixed});
  CHECK(u21::render_euler(r, OutputFormat::Text) == "81\n");
  const auto j = u21::Json::parse(u21::render_euler(r, OutputFormat::Json));
  CHECK(j["euler"] == "81");
  CHECK(j["euler_closed_form"] == "81");
}

TEST_CASE("parse_format") {
  CHECK(u21::parse_format("csv") == OutputFormat::Csv);
  CHECK_THROWS_AS(u21::parse_format("xml"), u21::Error);
}
