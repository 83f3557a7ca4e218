#pragma once

#include <array>
#include <complex>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Sparse>

#include "qmink/hilbert.hpp"
#include "qmink/qnum.hpp"
#include "qmink/tensors.hpp"

namespace qmink {

using Complex = std::complex<double>;
using SparseMatrix = Eigen::SparseMatrix<Complex, Eigen::RowMajor>;

struct Shift {
  int dj = 0;
  int dm = 0;
  int dn = 0;
  int dM = 0;
  auto operator<=>(const Shift&) const = default;
};

class SparseOperator {
 public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Complex value;
  };

  SparseOperator() = default;
  SparseOperator(std::string name, SparseMatrix matrix, std::vector<Shift> signature);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return static_cast<std::size_t>(matrix_.rows()); }
  const SparseMatrix& matrix() const { return matrix_; }
  const std::vector<Shift>& signature() const { return signature_; }

  // Largest |shift| per quantum number over the signature.
  ShiftBudget reach() const;
  std::vector<Entry> entries() const;
  double max_abs() const;

  // Every nonzero connects labels whose difference is in the signature.
  bool respects_signature(const BasisMap& basis, double tol = 0.0) const;

  SparseOperator renamed(std::string name) const;

 private:
  std::string name_;
  SparseMatrix matrix_;
  std::vector<Shift> signature_;
};

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator*(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator*(Complex c, const SparseOperator& a);

SparseOperator adjoint(const SparseOperator& op);
SparseOperator identity_operator(const BasisMap& basis);
SparseOperator zero_operator(const BasisMap& basis);

// Components indexed by Component (+, -, 3).
using VectorOperator = std::array<SparseOperator, 3>;

// g_AB A^A B^B with A to the left.
SparseOperator op_circ(const VectorOperator& a, const VectorOperator& b, const DeformationParams& p);

struct ReducedKey {
  int jp;
  int np;
  int Mp;
  int j;
  int n;
  int M;
  auto operator<=>(const ReducedKey&) const = default;
};

// <j', n', M' || O^- || j, n, M> for a vector operator O.
class ReducedElementTable {
 public:
  explicit ReducedElementTable(std::string name = {}) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  void set(const ReducedKey& k, Complex v);
  Complex get(const ReducedKey& k) const;
  bool contains(const ReducedKey& k) const { return entries_.count(k) != 0; }
  const std::map<ReducedKey, Complex>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::string name_;
  std::map<ReducedKey, Complex> entries_;
};

// Shifts (dn, dM) a reduced table is allowed to contain.
using ReducedShifts = std::vector<std::pair<int, int>>;

std::pair<SparseOperator, SparseOperator> diag_x0_xcircx(const Sector& sector, const BasisMap& basis,
                                                         const DeformationParams& p);

ReducedElementTable reduced_x_table(const Sector& sector, const BasisMap& basis, const DeformationParams& p);
// Closed-form space-like and time-like tables; throws for light-like.
ReducedElementTable reduced_x_closed_form(const Sector& sector, const BasisMap& basis, const DeformationParams& p);

ReducedElementTable reduced_r_table(const Sector& sector, const BasisMap& basis, const DeformationParams& p);
ReducedElementTable reduced_s_table(const Sector& sector, const BasisMap& basis, const DeformationParams& p);

using RSeed = std::function<double(int n_prime, int n, int M)>;
// R^- reduced elements iterated upward in j from the (1,0) and (0,1) seeds.
ReducedElementTable reduced_r_recursion(const Sector& sector, const BasisMap& basis, const DeformationParams& p,
                                        const RSeed& seed10, const RSeed& seed01);
RSeed light_seed10(const DeformationParams& p);
RSeed light_seed01(const DeformationParams& p);
// S^- reduced elements implied by R-bar = -g S.
ReducedElementTable reduced_s_from_r(const ReducedElementTable& r, const DeformationParams& p);

ReducedElementTable reduced_p_table(const Sector& sector, const BasisMap& basis, const DeformationParams& p);

VectorOperator assemble_vector_operator(const ReducedElementTable& table, const BasisMap& basis,
                                        const DeformationParams& p, const std::string& name,
                                        const ReducedShifts& shifts);

SparseOperator build_u(const Sector& sector, const BasisMap& basis, const DeformationParams& p);
SparseOperator build_p0(const Sector& sector, const BasisMap& basis, const DeformationParams& p);

// Light-like phases alpha_n keyed by n; missing entries are 0.
using LightPhases = std::map<int, double>;

// Lambda^{1/2} (power = +1) or its inverse Lambda^{-1/2} (power = -1).
SparseOperator build_lambda(const Sector& sector, const BasisMap& basis, const DeformationParams& p, int power = 1,
                            const LightPhases& phases = {});

// V^{ab}, indices in Component order.
using TensorOperator4 = std::array<std::array<SparseOperator, 4>, 4>;
TensorOperator4 build_v(const VectorOperator& r, const VectorOperator& s, const DeformationParams& p);

struct LW {
  VectorOperator l;
  SparseOperator w;
};
LW build_l_w(const VectorOperator& r, const VectorOperator& s, const SparseOperator& u, const DeformationParams& p);

struct TOperators {
  SparseOperator t_plus;
  SparseOperator t_minus;
  SparseOperator tau;
  SparseOperator tau_half;
  SparseOperator n;
};
// Throws std::runtime_error when W + q^2(1-q^2) L^3 is not diagonal within 1e-10.
TOperators build_t(const LW& lw, const DeformationParams& p);

// Rows and columns of `op` (built on `from`) restricted to the labels of `to`.
SparseOperator restrict_operator(const SparseOperator& op, const BasisMap& from, const BasisMap& to);

struct OperatorOptions {
  LightPhases phases;
  // Build L, W, T on a basis padded by this much in j and n.
  int derived_padding = 2;
};

// All generators of one representation on one truncation window.
class OperatorSet {
 public:
  OperatorSet(const Sector& sector, const TruncationWindow& window, const DeformationParams& p,
              const OperatorOptions& options = {});

  const BasisMap& basis() const { return *basis_; }
  const Sector& sector() const { return sector_; }
  const DeformationParams& params() const { return params_; }
  bool has(const std::string& name) const { return ops_.count(name) != 0; }
  const SparseOperator& get(const std::string& name) const;
  std::vector<std::string> names() const;
  bool has_momenta() const { return has("P0"); }

  VectorOperator vec(const std::string& stem) const;

 private:
  void add(SparseOperator op);

  Sector sector_;
  DeformationParams params_;
  std::shared_ptr<const BasisMap> basis_;
  std::map<std::string, SparseOperator> ops_;
};

}  // namespace qmink
