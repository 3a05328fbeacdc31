#include <doctest.h>

#include <cstdlib>

#include "u21/error.hpp"
#include "u21/parallel.hpp"
#include "u21/render.hpp"
#include "u21/verify.hpp"

using u21::Determinant;

TEST_CASE("small sweeps pass every check") {
  for (auto det : {Determinant::Free, Determinant::Fixed}) {
    const auto s = u21::run_sweep({{2, 3}, {1, 5}, det});
    CHECK(s.ok());
    CHECK(s.skipped == std::vector<std::pair<int, long>>{{2, 3}, {3, 3}});
    // g = 2: 2 components per d, g = 3: 4 per d, four admissible d each.
    CHECK(s.reports.size() == 4 * 2 + 4 * 4);
    CHECK(s.counts.at("duality_invariance").pass == static_cast<long>(s.reports.size()));
    CHECK(s.counts.at("torsion_defect_formula").fail == 0);
    CHECK(s.counts.count(det == Determinant::Fixed ? "euler_closed_form" : "euler_zero") == 1);
  }
}

TEST_CASE("fixed genus-2 degree-1 sweep reports 81 and -324") {
  const auto s = u21::run_sweep({{2, 2}, {1, 1}, Determinant::Fixed});
  REQUIRE(s.reports.size() == 2);
  CHECK(s.reports[0].params.d2 == 0);
  CHECK(s.reports[0].euler == -324);
  CHECK(s.reports[1].euler == 81);
  const std::string text = u21::render_sweep(s, u21::OutputFormat::Text);
  CHECK(text.find("M~_{0,1} (g=2): 81") != std::string::npos);
  CHECK(text.find("result: all checks pass") != std::string::npos);
}

TEST_CASE("sweep result does not depend on thread count") {
  const u21::SweepSpec spec{{2, 4}, {1, 4}, Determinant::Free};
  setenv("U21_THREADS", "1", 1);
  const std::string one = u21::render_sweep(u21::run_sweep(spec), u21::OutputFormat::Json);
  setenv("U21_THREADS", "4", 1);
  const std::string four = u21::render_sweep(u21::run_sweep(spec), u21::OutputFormat::Json);
  unsetenv("U21_THREADS");
  CHECK(one == four);
}

TEST_CASE("bad sweep specs") {
  CHECK_THROWS_AS(u21::run_sweep({{3, 2}, {1, 1}, Determinant::Free}), u21::Error);
  CHECK_THROWS_AS(u21::run_sweep({{2, 2}, {5, 1}, Determinant::Free}), u21::Error);
  CHECK_THROWS_AS(u21::run_sweep({{1, 2}, {1, 1}, Determinant::Free}), u21::Error);
}

TEST_CASE("parallel_map keeps order and forwards exceptions") {
  std::vector<int> in(100);
  for (int k = 0; k < 100; ++k) in[static_cast<std::size_t>(k)] = k;
  const auto out = u21::parallel_map(in, [](int v) { return v * v; }, 7);
  for (int k = 0; k < 100; ++k) CHECK(out[static_cast<std::size_t>(k)] == k * k);
  CHECK_THROWS_AS(u21::parallel_map(in, [](int v) -> int { if (v == 50) throw std::runtime_error("x"); return v; }, 3),
                  std::runtime_error);
}

TEST_CASE("polynomial CSV export") {
  const auto s = u21::run_sweep({{2, 2}, {1, 1}, Determinant::Free});
  const std::string csv = u21::sweep_polynomials_csv(s);
  CHECK(csv.rfind("genus,d1,d2,fixed_det,kind,m2,morse_index,min_exp,coeffs\n", 0) == 0);
  CHECK(csv.find("2,0,1,0,total,,,0,1;8;29;64;99;120;127;128;128;124;105;68;30;8;1\n") != std::string::npos);
  CHECK(csv.find("2,1,0,0,total,,,0,1;8;30;76;161;308;511;704;795;728;528;292;115;28;3\n") != std::string::npos);
}
