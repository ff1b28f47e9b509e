#include "uvr/io.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "uvr/record.hpp"

namespace uvr {

void write_curve_csv(std::ostream& out, const BoundaryCurve& curve) {
  out << "t,re,im\n";
  for (const auto& s : curve.samples)
    out << format_double(s.t) << ',' << format_double(s.w.real()) << ','
        << format_double(s.w.imag()) << '\n';
}

BoundaryCurve read_curve_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "t,re,im")
    throw std::invalid_argument("read_curve_csv: missing `t,re,im` header");

  BoundaryCurve curve;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    double vals[3];
    for (int i = 0; i < 3; ++i) {
      if (!std::getline(row, field, i < 2 ? ',' : '\n'))
        throw std::invalid_argument("read_curve_csv: short row: " + line);
      vals[i] = parse_value(field).value();
    }
    curve.samples.push_back({vals[0], Complex(vals[1], vals[2])});
  }
  return curve;
}

void write_curves_svg(std::ostream& out,
                      const std::vector<BoundaryCurve>& curves) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0;
  double y0 = x0, y1 = -x0;
  for (const auto& c : curves)
    for (const auto& s : c.samples) {
      x0 = std::min(x0, s.w.real());
      x1 = std::max(x1, s.w.real());
      y0 = std::min(y0, -s.w.imag());  // y flipped for screen coordinates
      y1 = std::max(y1, -s.w.imag());
    }
  if (!(x0 <= x1)) throw std::invalid_argument("write_curves_svg: no samples");

  const double margin = 0.05 * std::max({x1 - x0, y1 - y0, 1e-12});
  x0 -= margin;
  y0 -= margin;
  const double width = (x1 - x0) + margin;
  const double height = (y1 - y0) + margin;
  const double stroke = 0.004 * std::max(width, height);

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
      << format_double(x0, 9) << ' ' << format_double(y0, 9) << ' '
      << format_double(width, 9) << ' ' << format_double(height, 9) << "\">\n";
  for (const auto& c : curves) {
    out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\""
        << format_double(stroke, 9) << "\" points=\"";
    bool first = true;
    for (const auto& s : c.samples) {
      if (!first) out << ' ';
      out << format_double(s.w.real(), 9) << ',' << format_double(-s.w.imag(), 9);
      first = false;
    }
    if (c.closed && !c.samples.empty())
      out << ' ' << format_double(c.samples.front().w.real(), 9) << ','
          << format_double(-c.samples.front().w.imag(), 9);
    out << "\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace uvr
