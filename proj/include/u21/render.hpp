#ifndef U21_RENDER_HPP
#define U21_RENDER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "u21/laurent_poly.hpp"
#include "u21/moduli.hpp"
#include "u21/verify.hpp"

namespace u21 {

enum class OutputFormat { Text, Json, Latex, Csv };

/// Throws InvalidArgument for anything but text, json, latex or csv.
OutputFormat parse_format(std::string_view name);

// Polynomials are always written in ascending powers of t.
std::string poly_text(const LaurentPoly& p);   // 1 + 8*t + 29*t^2
std::string poly_latex(const LaurentPoly& p);  // 1 + 8\,t + 29\,t^{2}
std::string poly_csv(const LaurentPoly& p);    // 1;8;29 (from min_exp upward)

std::string render_report(const ComponentReport& r, OutputFormat fmt);
std::string render_components(int g, long d, Determinant det, const std::vector<ComponentReport>& reports,
                              OutputFormat fmt);
std::string render_euler(const ComponentReport& r, OutputFormat fmt);
std::string render_sweep(const SweepResult& s, OutputFormat fmt);

/// One row per computed critical submanifold and per component total.
std::string sweep_polynomials_csv(const SweepResult& s);

}  // namespace u21

#endif  // U21_RENDER_HPP
