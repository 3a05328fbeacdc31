#ifndef U21_JSON_IO_HPP
#define U21_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "u21/laurent_poly.hpp"
#include "u21/moduli.hpp"

namespace u21 {

// Insertion-ordered so emitted documents are byte-stable.
using Json = nlohmann::ordered_json;

/// {"min_exp": <int>, "coeffs": ["<decimal>", ...]}
Json to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const ModuliParams& p);
Json to_json(const NormalizedParams& n);
Json to_json(const CriticalReport& c);
Json to_json(const ComponentReport& r);

ComponentReport report_from_json(const Json& j);

/// Two-space indented document with a trailing newline.
std::string dump(const Json& j);

}  // namespace u21

#endif  // U21_JSON_IO_HPP
