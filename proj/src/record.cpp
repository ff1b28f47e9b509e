#include "uvr/record.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace uvr {

std::string to_string(FunctionClass cls) {
  switch (cls) {
    case FunctionClass::s: return "s";
    case FunctionClass::star: return "star";
    case FunctionClass::convex: return "convex";
    case FunctionClass::ctc: return "ctc";
  }
  throw std::logic_error("unknown FunctionClass");
}

std::string to_string(Functional fn) {
  switch (fn) {
    case Functional::phi_plus: return "phi_plus";
    case Functional::phi_minus: return "phi_minus";
    case Functional::psi: return "psi";
    case Functional::psi_minus: return "psi_minus";
    case Functional::power: return "power";
  }
  throw std::logic_error("unknown Functional");
}

FunctionClass function_class_from_string(std::string_view name) {
  if (name == "s") return FunctionClass::s;
  if (name == "star") return FunctionClass::star;
  if (name == "convex") return FunctionClass::convex;
  if (name == "ctc") return FunctionClass::ctc;
  throw std::invalid_argument("unknown class name: " + std::string(name));
}

Functional functional_from_string(std::string_view name) {
  if (name == "phi_plus") return Functional::phi_plus;
  if (name == "phi_minus") return Functional::phi_minus;
  if (name == "psi") return Functional::psi;
  if (name == "psi_minus") return Functional::psi_minus;
  if (name == "power") return Functional::power;
  throw std::invalid_argument("unknown functional name: " + std::string(name));
}

std::string format_double(double v, int significant_digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, v);
  return buf;
}

std::string render_value(const ExtendedReal& v) {
  if (v.is_pos_inf()) return "+inf";
  if (v.is_neg_inf()) return "-inf";
  return format_double(v.value());
}

ExtendedReal parse_value(std::string_view text) {
  if (text == "+inf") return ExtendedReal::pos_inf();
  if (text == "-inf") return ExtendedReal::neg_inf();
  const std::string owned(text);
  char* end = nullptr;
  const double v = std::strtod(owned.c_str(), &end);
  if (end != owned.c_str() + owned.size())
    throw std::invalid_argument("parse_value: malformed number: " + owned);
  return ExtendedReal::finite(v);
}

std::string render_record(const ResultRecord& rec) {
  std::ostringstream out;
  out << "class=" << to_string(rec.cls)
      << " functional=" << to_string(rec.functional);
  for (const auto& [key, val] : rec.params)
    out << ' ' << key << '=' << format_double(val);
  out << " value=" << render_value(rec.value);
  return out.str();
}

ResultRecord parse_record(std::string_view line) {
  ResultRecord rec;
  bool saw_class = false, saw_functional = false, saw_value = false;

  std::istringstream in{std::string(line)};
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("parse_record: token without '=': " + token);
    const std::string key = token.substr(0, eq);
    const std::string val = token.substr(eq + 1);
    if (key == "class") {
      rec.cls = function_class_from_string(val);
      saw_class = true;
    } else if (key == "functional") {
      rec.functional = functional_from_string(val);
      saw_functional = true;
    } else if (key == "value") {
      rec.value = parse_value(val);
      saw_value = true;
    } else {
      rec.params.emplace_back(key, parse_value(val).value());
    }
  }
  if (!saw_class || !saw_functional || !saw_value)
    throw std::invalid_argument("parse_record: missing required keys");
  return rec;
}

}  // namespace uvr
