#include "qmink/qnum.hpp"

#include <stdexcept>
#include <string>

namespace qmink {

DeformationParams::DeformationParams(double q) : q_(q) {
  if (!(q > 1.0) || !std::isfinite(q)) {
    throw std::invalid_argument("deformation parameter must satisfy q > 1, got " + std::to_string(q));
  }
  lambda_ = q - 1.0 / q;
  log_q_ = std::log(q);
}

double bracket(double a, const DeformationParams& p) {
  return (p.pow(a) - p.pow(-a)) / p.lambda();
}

double curly(double a, const DeformationParams& p) { return p.pow(a) + p.pow(-a); }

SumIdentity sum_identity(int j, const DeformationParams& p) {
  if (j < 1) throw std::invalid_argument("sum_identity requires j >= 1");
  double lhs = 0.0;
  for (int l = 1; l <= j; ++l) {
    const double cl = curly(l, p);
    const double cl1 = curly(l + 1, p);
    lhs += bracket(2 * l + 1, p) / (cl * cl * cl1 * cl1);
  }
  const double cj = curly(j, p);
  const double cj1 = curly(j + 1, p);
  const double b2 = bracket(2, p);
  const double rhs = bracket(2 * j, p) / (b2 * cj * cj * cj1 * cj1) * (1.0 + bracket(2 * j + 2, p) / b2);
  return {lhs, rhs};
}

}  // namespace qmink
