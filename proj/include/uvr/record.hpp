#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uvr/extended_real.hpp"

namespace uvr {

enum class FunctionClass { s, star, convex, ctc };
enum class Functional { phi_plus, phi_minus, psi, psi_minus, power };

std::string to_string(FunctionClass cls);
std::string to_string(Functional fn);
FunctionClass function_class_from_string(std::string_view name);
Functional functional_from_string(std::string_view name);

/// One computed result as emitted on the machine-readable output line.
/// Parameters keep insertion order so rendering is reproducible.
struct ResultRecord {
  FunctionClass cls = FunctionClass::s;
  Functional functional = Functional::phi_minus;
  std::vector<std::pair<std::string, double>> params;
  ExtendedReal value;

  friend bool operator==(const ResultRecord&, const ResultRecord&) = default;
};

/// Finite values with enough digits to round-trip exactly; infinities as
/// "+inf" / "-inf".
std::string render_value(const ExtendedReal& v);
ExtendedReal parse_value(std::string_view text);

/// One line of space-separated key=value pairs:
/// "class=... functional=... <params...> value=...".
std::string render_record(const ResultRecord& rec);
ResultRecord parse_record(std::string_view line);

/// Shortest-round-trip style formatting helpers.
std::string format_double(double v, int significant_digits = 17);

}  // namespace uvr
