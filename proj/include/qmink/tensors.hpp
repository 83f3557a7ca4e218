#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qmink/qnum.hpp"

namespace qmink {

// Component order used everywhere: + , - , 3 , 0.
enum Component : int { kPlus = 0, kMinus = 1, kThree = 2, kZero = 3 };

const char* component_name(int a);

struct Metric3 {
  Eigen::Matrix3d lower;  // g_AB
  Eigen::Matrix3d upper;  // g^AB
};

struct Metric4 {
  Eigen::Matrix4d lower;  // eta_ab
  Eigen::Matrix4d upper;  // eta^ab
};

Metric3 metric3(const DeformationParams& p);
Metric4 metric4(const DeformationParams& p);

// Dense 3x3x3 array, indexed t(a, b, c) in storage order.
class Rank3Tensor {
 public:
  Rank3Tensor() { v_.fill(0.0); }
  double& operator()(int a, int b, int c) { return v_[9 * a + 3 * b + c]; }
  double operator()(int a, int b, int c) const { return v_[9 * a + 3 * b + c]; }
  double max_abs_diff(const Rank3Tensor& o) const;

 private:
  std::array<double, 27> v_;
};

// Contract slot `slot` with g_lower (t'_{..a..} = g_{ad} t^{..d..}).
Rank3Tensor lower_index(const Rank3Tensor& t, int slot, const Metric3& g);
// Contract slot `slot` with g_upper (t'^{..a..} = g^{ax} t_{..x..}).
Rank3Tensor raise_index(const Rank3Tensor& t, int slot, const Metric3& g);

struct Epsilon3 {
  Rank3Tensor mixed;              // eps_{AB}^C stored (A, B, C)
  Rank3Tensor lower;              // eps_{ABC}
  Rank3Tensor upper;              // eps^{ABC}
  Rank3Tensor lower_upper_upper;  // eps_C^{AB} stored (C, A, B)
};

Epsilon3 epsilon3(const DeformationParams& p);

// T^{ab}_{cd} as a (dim^2 x dim^2) matrix with pair index a*dim + b.
class FourIndexTensor {
 public:
  FourIndexTensor() = default;
  explicit FourIndexTensor(int dim) : dim_(dim), m_(Eigen::MatrixXd::Zero(dim * dim, dim * dim)) {}
  FourIndexTensor(int dim, Eigen::MatrixXd m);

  int dim() const { return dim_; }
  double operator()(int a, int b, int c, int d) const { return m_(a * dim_ + b, c * dim_ + d); }
  double& operator()(int a, int b, int c, int d) { return m_(a * dim_ + b, c * dim_ + d); }
  const Eigen::MatrixXd& matrix() const { return m_; }

 private:
  int dim_ = 0;
  Eigen::MatrixXd m_;
};

// x o y = g_AB x^A y^B = x^3 y^3 - q x^+ y^- - (1/q) x^- y^+
double circ3(const std::array<double, 3>& x, const std::array<double, 3>& y, const DeformationParams& p);

// x^0 y^0 - x^3 y^3 + q x^+ y^- + (1/q) x^- y^+
double dot4(const std::array<double, 4>& x, const std::array<double, 4>& y, const DeformationParams& p);

FourIndexTensor build_rhat3(const DeformationParams& p);

struct Projectors4 {
  FourIndexTensor plus;
  FourIndexTensor minus;
  FourIndexTensor trace;
  FourIndexTensor symmetric;
  FourIndexTensor antisymmetric;
};

Projectors4 build_projectors4(const DeformationParams& p);

enum class RVariant { I, II };

FourIndexTensor build_rmatrix4(RVariant variant, const DeformationParams& p);
FourIndexTensor build_rmatrix4_inverse(RVariant variant, const DeformationParams& p);
FourIndexTensor epsilon4(const DeformationParams& p);

// Max entry of (R x 1)(1 x R)(R x 1) - (1 x R)(R x 1)(1 x R).
double braid_residual(const FourIndexTensor& r);

struct EigenCluster {
  std::complex<double> value;
  int multiplicity;
};

// Eigenvalues grouped within `tol`, sorted by real part.
std::vector<EigenCluster> eigenvalue_clusters(const FourIndexTensor& t, double tol = 1e-8);

}  // namespace qmink
