#pragma once

#include <string>

#include "json.hpp"
#include "meropencil/invariants.hpp"

namespace mero::cli {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Json poly_json(const UPoly<Rational>& p);
Json value_json(const ValueClass& v);
Json point_json(const PointClass& p);
Json zeta_json(const std::optional<ZetaFunction>& z);
Json record_json(const ValueRecord& r);
Json gamma_json(const GammaBlock& g);
Json pencil_json(const Pencil& p);
Json report_json(const PencilReport& r, std::uint64_t seed);

std::string report_text(const PencilReport& r, std::uint64_t seed);

}  // namespace mero::cli
