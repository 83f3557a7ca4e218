#include "qmink/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qmink {

std::string sector_name(SectorKind kind) {
  switch (kind) {
    case SectorKind::SpaceLike:
      return "space";
    case SectorKind::TimeLikeForward:
      return "time+";
    case SectorKind::TimeLikeBackward:
      return "time-";
    case SectorKind::LightLike:
      return "light";
  }
  return "?";
}

SectorKind parse_sector(const std::string& name) {
  if (name == "space") return SectorKind::SpaceLike;
  if (name == "time+" || name == "time") return SectorKind::TimeLikeForward;
  if (name == "time-") return SectorKind::TimeLikeBackward;
  if (name == "light") return SectorKind::LightLike;
  throw std::invalid_argument("unknown sector '" + name + "' (expected space, time+, time- or light)");
}

Sector::Sector(SectorKind kind, double scale) : kind_(kind), scale_(scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) throw std::invalid_argument("sector scale must be positive");
}

void Sector::validate(const DeformationParams& p) const {
  if (light_like()) return;
  if (scale_ < 1.0 || scale_ >= p.q()) {
    std::ostringstream os;
    os << "scale " << scale_ << " outside [1, q) for q = " << p.q();
    throw std::invalid_argument(os.str());
  }
}

double Sector::t(int n, int M, const DeformationParams& p) const {
  const double b2 = bracket(2, p);
  switch (kind_) {
    case SectorKind::SpaceLike:
      return scale_ * p.pow(M) * p.lambda() * bracket(n, p) / b2;
    case SectorKind::TimeLikeForward:
    case SectorKind::TimeLikeBackward:
      return sign() * scale_ * p.pow(M) * curly(n + 1, p) / b2;
    case SectorKind::LightLike:
      return scale_ * p.pow(n);
  }
  return 0.0;
}

double Sector::r2(int n, int M, const DeformationParams& p) const {
  const double b2 = bracket(2, p);
  const double s2 = scale_ * scale_ * p.pow(2 * M);
  switch (kind_) {
    case SectorKind::SpaceLike:
      return s2 * curly(n + 1, p) * curly(n - 1, p) / (b2 * b2);
    case SectorKind::TimeLikeForward:
    case SectorKind::TimeLikeBackward:
      return s2 * p.lambda() * p.lambda() * bracket(n + 2, p) * bracket(n, p) / (b2 * b2);
    case SectorKind::LightLike:
      return scale_ * scale_ * p.pow(2 * n);
  }
  return 0.0;
}

double Sector::invariant_length(int M, const DeformationParams& p) const {
  const double s2 = scale_ * scale_ * p.pow(2 * M);
  if (light_like()) return 0.0;
  return time_like() ? s2 : -s2;
}

bool Sector::admissible(int j, int n) const {
  if (j < 0) return false;
  if (time_like()) return n >= 0 && j <= n;
  return true;
}

std::string BasisLabel::str() const {
  std::ostringstream os;
  os << "(" << j << "," << m << "," << n << "," << M << ")";
  return os.str();
}

TruncationWindow TruncationWindow::defaults(SectorKind kind) {
  TruncationWindow w;
  if (kind == SectorKind::TimeLikeForward || kind == SectorKind::TimeLikeBackward) {
    w.n_lo = 0;
    w.n_hi = 12;
  }
  if (kind == SectorKind::LightLike) {
    w.M_lo = 0;
    w.M_hi = 0;
  }
  return w;
}

ShiftBudget ShiftBudget::max(const ShiftBudget& o) const {
  return {std::max(dj, o.dj), std::max(dm, o.dm), std::max(dn, o.dn), std::max(dM, o.dM)};
}

ShiftBudget ShiftBudget::operator+(const ShiftBudget& o) const {
  return {dj + o.dj, dm + o.dm, dn + o.dn, dM + o.dM};
}

BasisMap::BasisMap(Sector sector, TruncationWindow window, std::vector<BasisLabel> labels)
    : sector_(sector), window_(window), labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], i).second) throw std::invalid_argument("duplicate basis label " + labels_[i].str());
  }
}

std::optional<std::size_t> BasisMap::index_of(const BasisLabel& l) const {
  auto it = index_.find(l);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool BasisMap::physical(const BasisLabel& l) const {
  if (!sector_.admissible(l.j, l.n)) return false;
  if (std::abs(l.m) > l.j) return false;
  if (sector_.light_like() && l.M != 0) return false;
  return true;
}

bool BasisMap::in_window(const BasisLabel& l) const {
  if (l.j > window_.j_max || l.n < window_.n_lo || l.n > window_.n_hi) return false;
  if (sector_.has_M() && (l.M < window_.M_lo || l.M > window_.M_hi)) return false;
  return true;
}

BasisMap enumerate_basis(const Sector& sector, const TruncationWindow& window) {
  if (window.j_max < 0 || window.n_lo > window.n_hi || window.M_lo > window.M_hi || window.margin < 0) {
    throw std::invalid_argument("invalid truncation window");
  }
  std::vector<BasisLabel> labels;
  const int M_lo = sector.has_M() ? window.M_lo : 0;
  const int M_hi = sector.has_M() ? window.M_hi : 0;
  for (int M = M_lo; M <= M_hi; ++M)
    for (int n = window.n_lo; n <= window.n_hi; ++n)
      for (int j = 0; j <= window.j_max; ++j) {
        if (!sector.admissible(j, n)) continue;
        for (int m = -j; m <= j; ++m) labels.push_back({j, m, n, M});
      }
  if (labels.empty()) throw std::invalid_argument("truncation window contains no states for sector " + sector_name(sector.kind()));
  return BasisMap(sector, window, std::move(labels));
}

std::vector<std::size_t> interior_indices(const BasisMap& basis, const ShiftBudget& budget) {
  const int margin = basis.window().margin;
  const int dj = budget.dj + margin;
  const int dn = budget.dn + margin;
  const int dM = basis.sector().has_M() ? budget.dM + margin : 0;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const BasisLabel& l = basis.label(i);
    bool inside = true;
    for (int a = -dj; a <= dj && inside; ++a)
      for (int b = -dn; b <= dn && inside; ++b)
        for (int c = -dM; c <= dM && inside; ++c) {
          const BasisLabel t{l.j + a, 0, l.n + b, l.M + c};
          if (!basis.physical(t)) continue;
          if (!basis.in_window(t)) inside = false;
        }
    if (inside) out.push_back(i);
  }
  return out;
}

std::vector<SpectrumPoint> spectrum_points(const Sector& sector, int n_lo, int n_hi, int M_lo, int M_hi,
                                           const DeformationParams& p) {
  if (sector.time_like() && n_lo < 0) throw std::invalid_argument("time-like spectrum requires n >= 0");
  if (n_lo > n_hi || M_lo > M_hi) throw std::invalid_argument("empty spectrum range");
  if (!sector.has_M()) M_lo = M_hi = 0;
  std::vector<SpectrumPoint> out;
  for (int M = M_lo; M <= M_hi; ++M)
    for (int n = n_lo; n <= n_hi; ++n)
      out.push_back({sector.kind(), n, M, sector.t(n, M, p), std::sqrt(std::max(0.0, sector.r2(n, M, p)))});
  return out;
}

double check_spectral_condition(double t, double t_prime, double r_prime, double s2, const DeformationParams& p) {
  const double rp2 = t_prime * t_prime - s2;
  if (std::abs(r_prime * r_prime - rp2) > 1e-9 * (1.0 + t_prime * t_prime)) {
    throw std::invalid_argument("r' inconsistent with t'^2 - s^2");
  }
  const double b2 = bracket(2, p);
  const double lam = p.lambda();
  const double v = (t - 2.0 / b2 * t_prime) * (t - curly(2, p) / b2 * t_prime) - lam * lam / (b2 * b2) * rp2;
  return std::abs(v) / (1.0 + t_prime * t_prime);
}

std::pair<double, double> adjacent_times(double t_prime, double s2, const DeformationParams& p) {
  const double b2 = bracket(2, p);
  const double c2 = curly(2, p);
  const double lam = p.lambda();
  const double b = -(2.0 + c2) / b2 * t_prime;
  const double c = 2.0 * c2 / (b2 * b2) * t_prime * t_prime - lam * lam / (b2 * b2) * (t_prime * t_prime - s2);
  const double disc = std::sqrt(std::max(0.0, b * b - 4.0 * c));
  return {(-b - disc) / 2.0, (-b + disc) / 2.0};
}

double rho(int j_plus_1, double r2, double t, const DeformationParams& p) {
  const int j = j_plus_1 - 1;
  const double cj = curly(j + 1, p);
  return (-r2 + bracket(j, p) * bracket(j + 2, p) * p.lambda() * p.lambda() / (cj * cj) * t * t) /
         (p.q() * p.q() * bracket(2, p));
}

double rho_partial_sum(int j_plus_1, double r2, double t, const DeformationParams& p) {
  const int j = j_plus_1 - 1;
  double sum = 0.0;
  for (int l = 1; l <= j; ++l) {
    const double cl = curly(l, p);
    const double cl1 = curly(l + 1, p);
    sum += bracket(2 * l + 1, p) / (cl * cl * cl1 * cl1);
  }
  const double q2 = p.q() * p.q();
  return -r2 / (q2 * bracket(2, p)) + p.lambda() * p.lambda() * bracket(2, p) / q2 * t * t * sum;
}

double rho_sector(const Sector& sector, int j_plus_1, int n, int M, const DeformationParams& p) {
  const int j = j_plus_1 - 1;
  const double q2 = p.q() * p.q();
  const double b2 = bracket(2, p);
  const double cj = curly(j + 1, p);
  const double lam = p.lambda();
  const double s2 = sector.scale() * sector.scale() * p.pow(2 * M);
  switch (sector.kind()) {
    case SectorKind::SpaceLike:
      return -s2 / (b2 * q2) * curly(n - j - 1, p) * curly(n + j + 1, p) / (cj * cj);
    case SectorKind::TimeLikeForward:
    case SectorKind::TimeLikeBackward:
      return -s2 * lam * lam / (b2 * q2) * bracket(n - j, p) * bracket(n + j + 2, p) / (cj * cj);
    case SectorKind::LightLike: {
      const double tn = sector.t(n, 0, p);
      return -b2 * tn * tn / (q2 * cj * cj);
    }
  }
  return 0.0;
}

}  // namespace qmink
