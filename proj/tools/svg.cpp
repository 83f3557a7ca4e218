#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace qmink::cli {

namespace {

const char* colour(SectorKind k) {
  switch (k) {
    case SectorKind::SpaceLike:
      return "#1f77b4";
    case SectorKind::TimeLikeForward:
      return "#d62728";
    case SectorKind::TimeLikeBackward:
      return "#ff7f0e";
    case SectorKind::LightLike:
      return "#2ca02c";
  }
  return "#000000";
}

}  // namespace

std::string spectrum_svg(const std::vector<SpectrumPoint>& points, double q) {
  constexpr double kWidth = 640.0;
  constexpr double kHeight = 640.0;
  constexpr double kPad = 50.0;
  double rmax = 1.0;
  double tmax = 1.0;
  for (const auto& p : points) {
    rmax = std::max(rmax, p.r);
    tmax = std::max(tmax, std::abs(p.t));
  }
  const double extent = std::max(rmax, tmax) * 1.05;
  const double sx = (kWidth - 2 * kPad) / extent;
  const double sy = (kHeight - 2 * kPad) / (2 * extent);
  auto X = [&](double r) { return kPad + r * sx; };
  auto Y = [&](double t) { return kHeight / 2 - t * sy; };

  std::ostringstream o;
  o << std::setprecision(6);
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<title>Admissible t versus r, q = " << q << "</title>\n";
  o << "<g stroke=\"black\" stroke-width=\"1\">\n";
  o << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(extent) << "\" y2=\"" << Y(0) << "\"/>\n";
  o << "<line x1=\"" << X(0) << "\" y1=\"" << Y(-extent) << "\" x2=\"" << X(0) << "\" y2=\"" << Y(extent) << "\"/>\n";
  o << "</g>\n";
  o << "<g class=\"light-cone\" stroke=\"gray\" stroke-dasharray=\"6,4\">\n";
  o << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(extent) << "\" y2=\"" << Y(extent) << "\"/>\n";
  o << "<line x1=\"" << X(0) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(extent) << "\" y2=\"" << Y(-extent) << "\"/>\n";
  o << "</g>\n";
  o << "<text x=\"" << kWidth - kPad << "\" y=\"" << Y(0) - 8 << "\" font-size=\"16\">r</text>\n";
  o << "<text x=\"" << X(0) + 8 << "\" y=\"" << kPad - 20 << "\" font-size=\"16\">t</text>\n";
  o << "<g class=\"points\">\n";
  for (const auto& p : points) {
    o << "<circle class=\"point\" cx=\"" << X(p.r) << "\" cy=\"" << Y(p.t) << "\" r=\"2.5\" fill=\"" << colour(p.sector)
      << "\"><title>" << sector_name(p.sector) << " n=" << p.n << " M=" << p.M << "</title></circle>\n";
  }
  o << "</g>\n</svg>\n";
  return o.str();
}

}  // namespace qmink::cli
