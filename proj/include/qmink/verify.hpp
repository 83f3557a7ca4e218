#pragma once

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "qmink/hilbert.hpp"
#include "qmink/operators.hpp"

namespace qmink {

// Operator polynomial over named generators of an OperatorSet.
class Expr {
 public:
  enum class Kind { Generator, Identity, Scale, Sum, Product, Adjoint };

  // Zero.
  Expr();
  static Expr gen(const std::string& name);
  static Expr identity();
  static Expr zero();

  Kind kind() const;
  Expr adj() const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator*(Complex c, const Expr& a);

  SparseMatrix evaluate(const OperatorSet& ops) const;
  // Sums take the max over terms, products add the reaches of their factors.
  ShiftBudget budget(const OperatorSet& ops) const;
  // Top-level summands (a Sum is split, anything else is one term).
  std::vector<Expr> terms() const;
  void collect_generators(std::set<std::string>& out) const;
  std::string str() const;

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct RelationSpec {
  std::string name;
  int group = 0;
  std::string group_title;
  Expr lhs;
  Expr rhs;
  std::set<SectorKind> sectors;
  bool needs_momenta = false;

  bool applies_to(SectorKind k) const { return sectors.count(k) != 0; }
};

enum class Status { Pass, Fail, Inconclusive, NotRepresentable };
std::string status_name(Status s);

struct ResidualReport {
  std::string name;
  int group = 0;
  std::string group_title;
  SectorKind sector = SectorKind::SpaceLike;
  ShiftBudget budget;
  std::size_t interior_dim = 0;
  double max_residual = 0.0;   // max |entry| of lhs - rhs on the interior
  double frobenius = 0.0;
  double normalization = 0.0;  // max over terms of max |entry| on the interior
  double normalized = 0.0;     // max_residual / (1 + normalization)
  double tol = 0.0;
  Status status = Status::Inconclusive;
};

// Number of relation groups in the catalog.
inline constexpr int kRelationGroups = 18;
std::string group_title(int group);

std::vector<RelationSpec> relation_catalog(const DeformationParams& p);

ResidualReport evaluate(const RelationSpec& spec, const OperatorSet& ops, double tol);

// Evaluates every relation (concurrently when threads > 1); output sorted by (group, name).
std::vector<ResidualReport> evaluate_all(const std::vector<RelationSpec>& catalog, const OperatorSet& ops, double tol,
                                         unsigned threads = 0);

// Residual of lhs - rhs on the full basis (no interior restriction).
SparseMatrix residual_matrix(const RelationSpec& spec, const OperatorSet& ops);

// ---- cross-checks -------------------------------------------------------

// Max |closed form - rho route| over all reduced X elements.
double x_table_route_difference(const Sector& sector, const BasisMap& basis, const DeformationParams& p);
// Max relative |partial-sum rho - closed rho| for j + 1 <= j_max + 1 over the window.
double rho_forms_difference(const Sector& sector, int j_max, int n_lo, int n_hi, int M_lo, int M_hi,
                            const DeformationParams& p);
// Same against the per-sector explicit expression.
double rho_sector_difference(const Sector& sector, int j_max, int n_lo, int n_hi, int M_lo, int M_hi,
                             const DeformationParams& p);
// Max |<j,m|X o R|j',m> - reduced expansion| over interior states.
double matprod_difference(const OperatorSet& ops);
// Max | |<0,0,n|U|0,0,n+1>|^2 - 1/[2]^2 |.
double gamma_deviation(const OperatorSet& ops);
// Max | |Lambda^{1/2} entry| - q^2 |.
double lambda_magnitude_deviation(const OperatorSet& ops);
// Max | T^2 - [j][j+1] | and | tau - q^{-4m} | on interior, off-diagonal parts included.
struct AngularCheck {
  double casimir = 0.0;
  double tau = 0.0;
  std::size_t interior_dim = 0;
};
AngularCheck angular_spectrum_check(const OperatorSet& ops);
// Max over explicit Heisenberg relations of |explicit - c * covariant| on the full basis.
double heisenberg_formulation_difference(const OperatorSet& ops, const DeformationParams& p);
// Smallest |a - b| over X^0 eigenvalues of two operator sets.
double spectral_gap(const OperatorSet& a, const OperatorSet& b);

// ---- probes -------------------------------------------------------------

struct ObstructionRow {
  int n = 0;
  int j = 0;
  double t = 0.0;
  double sigma_min = 0.0;
  double sigma_max = 0.0;
  double determinant = 0.0;         // |[2]t'(t - t') + lambda s^2| at t = t'
  double compatibility = 0.0;       // |c2 - (t/[2]) c1|
  double unit_coefficient = 0.0;    // |K|: compatibility per unit U element
  double inhomogeneity = 0.0;       // compatibility / |K|, the U element the system forbids
  double u_element = 0.0;           // <n|U|n+1> of the representation
  double substitution_error = 0.0;  // |c2 from X o R - c2 through U X^0|
};

struct ObstructionReport {
  double q = 0.0;
  double tau0 = 0.0;
  std::vector<ObstructionRow> rows;
  bool rank_deficient = false;
  double min_inhomogeneity = 0.0;
  std::string verdict;
};

// Throws std::invalid_argument unless ops is light-like.
ObstructionReport lightcone_obstruction(const OperatorSet& ops);

struct MomentumSolveReport {
  std::size_t systems = 0;
  double min_relative_det = 0.0;
  double max_p0_difference = 0.0;
  double max_xp_difference = 0.0;
};

// Solves the same 2x2 systems off the light cone and compares with P^0 and X o P.
MomentumSolveReport momentum_solve(const OperatorSet& ops);

struct LimitRow {
  double q = 0.0;
  double residual = 0.0;
};
// Interior residual of the undeformed commutators [X^A, X^B] on the space-like sector.
std::vector<LimitRow> q_limit_probe(const std::vector<double>& qs, const TruncationWindow& window);

}  // namespace qmink
