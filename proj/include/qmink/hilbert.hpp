#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmink/qnum.hpp"

namespace qmink {

enum class SectorKind { SpaceLike, TimeLikeForward, TimeLikeBackward, LightLike };

std::string sector_name(SectorKind kind);
SectorKind parse_sector(const std::string& name);

// One irreducible representation: the sector kind and its scale
// (l0 space-like, |t0| time-like, tau0 light-like).
class Sector {
 public:
  Sector(SectorKind kind, double scale);

  SectorKind kind() const { return kind_; }
  double scale() const { return scale_; }
  int sign() const { return kind_ == SectorKind::TimeLikeBackward ? -1 : 1; }
  bool time_like() const { return kind_ == SectorKind::TimeLikeForward || kind_ == SectorKind::TimeLikeBackward; }
  bool light_like() const { return kind_ == SectorKind::LightLike; }
  bool has_M() const { return !light_like(); }

  // Throws if scale is outside [1, q) for the space- and time-like sectors.
  void validate(const DeformationParams& p) const;

  // Eigenvalues of X^0 and X o X on |j, m, n, M>.
  double t(int n, int M, const DeformationParams& p) const;
  double r2(int n, int M, const DeformationParams& p) const;
  // s^2 = t^2 - r^2.
  double invariant_length(int M, const DeformationParams& p) const;

  bool admissible(int j, int n) const;

 private:
  SectorKind kind_;
  double scale_;
};

struct BasisLabel {
  int j = 0;
  int m = 0;
  int n = 0;
  int M = 0;

  auto operator<=>(const BasisLabel&) const = default;
  std::string str() const;
};

struct TruncationWindow {
  int j_max = 5;
  int n_lo = -8;
  int n_hi = 8;
  int M_lo = -4;
  int M_hi = 4;
  int margin = 0;

  static TruncationWindow defaults(SectorKind kind);
};

struct ShiftBudget {
  int dj = 0;
  int dm = 0;
  int dn = 0;
  int dM = 0;

  ShiftBudget max(const ShiftBudget& o) const;
  ShiftBudget operator+(const ShiftBudget& o) const;
  bool operator==(const ShiftBudget&) const = default;
};

class BasisMap {
 public:
  BasisMap(Sector sector, TruncationWindow window, std::vector<BasisLabel> labels);

  std::size_t size() const { return labels_.size(); }
  const BasisLabel& label(std::size_t i) const { return labels_[i]; }
  const std::vector<BasisLabel>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const BasisLabel& l) const;
  bool contains(const BasisLabel& l) const { return index_.count(l) != 0; }

  const Sector& sector() const { return sector_; }
  const TruncationWindow& window() const { return window_; }

  // Label is allowed by the sector (ignores the truncation window).
  bool physical(const BasisLabel& l) const;
  // Label lies inside the truncation window.
  bool in_window(const BasisLabel& l) const;

 private:
  Sector sector_;
  TruncationWindow window_;
  std::vector<BasisLabel> labels_;
  std::map<BasisLabel, std::size_t> index_;
};

// States ordered by (M, n, j, m). Throws std::invalid_argument on an empty window.
BasisMap enumerate_basis(const Sector& sector, const TruncationWindow& window);

// States whose every label reachable within budget (plus the window margin)
// is either unphysical or inside the window.
std::vector<std::size_t> interior_indices(const BasisMap& basis, const ShiftBudget& budget);

struct SpectrumPoint {
  SectorKind sector;
  int n;
  int M;
  double t;
  double r;
};

std::vector<SpectrumPoint> spectrum_points(const Sector& sector, int n_lo, int n_hi, int M_lo, int M_hi,
                                           const DeformationParams& p);

// Residual of (t - (2/[2])t')(t - ({2}/[2])t') - (lambda^2/[2]^2) r'^2 with r'^2 = t'^2 - s2.
double check_spectral_condition(double t, double t_prime, double r_prime, double s2, const DeformationParams& p);

// The two roots t of the adjacency quadratic for given t' and s^2.
std::pair<double, double> adjacent_times(double t_prime, double s2, const DeformationParams& p);

// rho(j+1) from the closed form in r^2 and t^2.
double rho(int j_plus_1, double r2, double t, const DeformationParams& p);
// rho(j+1) from rho(1) plus the partial sum.
double rho_partial_sum(int j_plus_1, double r2, double t, const DeformationParams& p);
// rho_n(j+1) from the per-sector closed expression.
double rho_sector(const Sector& sector, int j_plus_1, int n, int M, const DeformationParams& p);

}  // namespace qmink
