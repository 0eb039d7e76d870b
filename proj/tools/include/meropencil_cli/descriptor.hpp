#pragma once

#include <optional>
#include <string>

#include "meropencil/pencil.hpp"

namespace mero::cli {

/// {"P", "Q", "V"} or {"affine"}.
struct Descriptor {
  std::optional<std::string> P, Q, affine;
  VChoice V = VChoice::Q;
};

/// JSON object, or text lines "key: value" / "key = value".
Descriptor parse_descriptor(const std::string& text);
Descriptor read_descriptor_file(const std::string& path);
/// "P;Q".
Descriptor descriptor_from_pair(const std::string& pq, VChoice V);

Pencil to_pencil(const Descriptor& d);

/// "inf", "infinity" or a rational.
ValueClass parse_value(const std::string& text);

/// "x:y:z", optionally bracketed, rational entries.
std::array<Rational, 3> parse_point(const std::string& text);

}  // namespace mero::cli
