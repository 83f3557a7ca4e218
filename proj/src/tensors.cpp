#include "qmink/tensors.hpp"

#include <algorithm>
#include <cmath>

namespace qmink {

const char* component_name(int a) {
  static const char* names[] = {"+", "-", "3", "0"};
  return names[a];
}

Metric3 metric3(const DeformationParams& p) {
  Metric3 g;
  g.lower.setZero();
  g.lower(kPlus, kMinus) = -p.q();
  g.lower(kThree, kThree) = 1.0;
  g.lower(kMinus, kPlus) = -1.0 / p.q();
  g.upper = g.lower;
  return g;
}

Metric4 metric4(const DeformationParams& p) {
  Metric4 e;
  e.lower.setZero();
  e.lower(kPlus, kMinus) = -p.q();
  e.lower(kMinus, kPlus) = -1.0 / p.q();
  e.lower(kThree, kThree) = 1.0;
  e.lower(kZero, kZero) = -1.0;
  e.upper = e.lower;
  return e;
}

double Rank3Tensor::max_abs_diff(const Rank3Tensor& o) const {
  double m = 0.0;
  for (std::size_t i = 0; i < v_.size(); ++i) m = std::max(m, std::abs(v_[i] - o.v_[i]));
  return m;
}

namespace {

Rank3Tensor contract_slot(const Rank3Tensor& t, int slot, const Eigen::Matrix3d& m) {
  Rank3Tensor out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        double s = 0.0;
        for (int x = 0; x < 3; ++x) {
          if (slot == 0) s += m(a, x) * t(x, b, c);
          if (slot == 1) s += m(b, x) * t(a, x, c);
          if (slot == 2) s += m(c, x) * t(a, b, x);
        }
        out(a, b, c) = s;
      }
  return out;
}

}  // namespace

Rank3Tensor lower_index(const Rank3Tensor& t, int slot, const Metric3& g) {
  return contract_slot(t, slot, g.lower);
}

Rank3Tensor raise_index(const Rank3Tensor& t, int slot, const Metric3& g) {
  return contract_slot(t, slot, g.upper);
}

Epsilon3 epsilon3(const DeformationParams& p) {
  const double q = p.q();
  Epsilon3 e;
  e.mixed(kPlus, kMinus, kThree) = q;
  e.mixed(kMinus, kPlus, kThree) = -q;
  e.mixed(kThree, kThree, kThree) = 1.0 - q * q;
  e.mixed(kPlus, kThree, kPlus) = 1.0;
  e.mixed(kThree, kPlus, kPlus) = -q * q;
  e.mixed(kMinus, kThree, kMinus) = -q * q;
  e.mixed(kThree, kMinus, kMinus) = 1.0;

  const Metric3 g = metric3(p);
  e.lower = lower_index(e.mixed, 2, g);
  e.upper = raise_index(raise_index(raise_index(e.lower, 0, g), 1, g), 2, g);
  e.lower_upper_upper = raise_index(e.mixed, 1, g);
  return e;
}

FourIndexTensor::FourIndexTensor(int dim, Eigen::MatrixXd m) : dim_(dim), m_(std::move(m)) {}

double circ3(const std::array<double, 3>& x, const std::array<double, 3>& y, const DeformationParams& p) {
  return x[kThree] * y[kThree] - p.q() * x[kPlus] * y[kMinus] - x[kMinus] * y[kPlus] / p.q();
}

double dot4(const std::array<double, 4>& x, const std::array<double, 4>& y, const DeformationParams& p) {
  return x[kZero] * y[kZero] - x[kThree] * y[kThree] + p.q() * x[kPlus] * y[kMinus] + x[kMinus] * y[kPlus] / p.q();
}

FourIndexTensor build_rhat3(const DeformationParams& p) {
  const double q = p.q();
  const double q4 = 1.0 / (q * q * q * q);
  const Metric3 g = metric3(p);
  const Epsilon3 e = epsilon3(p);
  FourIndexTensor r(3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          double v = (a == c && b == d) ? 1.0 : 0.0;
          for (int f = 0; f < 3; ++f) v -= q4 * e.upper(f, a, b) * e.lower(f, d, c);
          v -= q4 * (q * q - 1.0) * g.upper(a, b) * g.lower(c, d);
          r(a, b, c, d) = v;
        }
  return r;
}

Projectors4 build_projectors4(const DeformationParams& p) {
  const double q = p.q();
  const double q2 = q * q;
  const double k = 1.0 / ((1.0 + q2) * (1.0 + q2));
  const Metric3 g = metric3(p);
  const Epsilon3 e = epsilon3(p);
  const int o = kZero;

  // ge(A,B,C) = g^{EB} g^{FA} eps_{FEC}
  Rank3Tensor ge;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        double s = 0.0;
        for (int x = 0; x < 3; ++x)
          for (int f = 0; f < 3; ++f) s += g.upper(x, b) * g.upper(f, a) * e.lower(f, x, c);
        ge(a, b, c) = s;
      }
  // cd(A,B,C,D) = eps_{DC}^E g^{SB} g^{RA} eps_{RSE}
  auto cd = [&](int a, int b, int c, int d) {
    double s = 0.0;
    for (int x = 0; x < 3; ++x)
      for (int sidx = 0; sidx < 3; ++sidx)
        for (int r = 0; r < 3; ++r) s += e.mixed(d, c, x) * g.upper(sidx, b) * g.upper(r, a) * e.lower(r, sidx, x);
    return s;
  };

  Projectors4 pr{FourIndexTensor(4), FourIndexTensor(4), FourIndexTensor(4), FourIndexTensor(4), FourIndexTensor(4)};
  FourIndexTensor& pp = pr.plus;
  FourIndexTensor& pm = pr.minus;
  FourIndexTensor& pt = pr.trace;

  for (int a = 0; a < 3; ++a) {
    for (int c = 0; c < 3; ++c) {
      const double d = (a == c) ? 1.0 : 0.0;
      pp(a, o, c, o) = q2 * k * d;
      pp(a, o, o, c) = -k * d;
      pp(o, a, c, o) = -q2 * q2 * k * d;
      pp(o, a, o, c) = q2 * k * d;
      pm(a, o, c, o) = q2 * k * d;
      pm(a, o, o, c) = -q2 * q2 * k * d;
      pm(o, a, c, o) = -k * d;
      pm(o, a, o, c) = q2 * k * d;
      for (int dd = 0; dd < 3; ++dd) {
        pp(a, o, c, dd) = k * e.mixed(dd, c, a);
        pp(o, a, c, dd) = -q2 * k * e.mixed(dd, c, a);
        pm(a, o, c, dd) = -q2 * k * e.mixed(dd, c, a);
        pm(o, a, c, dd) = k * e.mixed(dd, c, a);
      }
    }
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        pp(a, b, c, o) = q2 * k * ge(a, b, c);
        pp(a, b, o, c) = -k * ge(a, b, c);
        pm(a, b, c, o) = -k * ge(a, b, c);
        pm(a, b, o, c) = q2 * k * ge(a, b, c);
        for (int dd = 0; dd < 3; ++dd) {
          const double v = k * cd(a, b, c, dd);
          pp(a, b, c, dd) = v;
          pm(a, b, c, dd) = v;
          pt(a, b, c, dd) = q2 * k * g.upper(a, b) * g.lower(c, dd);
        }
      }
      pt(a, b, o, o) = -q2 * k * g.upper(a, b);
      pt(o, o, a, b) = -q2 * k * g.lower(a, b);
    }
  }
  pt(o, o, o, o) = q2 * k;

  pr.symmetric = FourIndexTensor(4, Eigen::MatrixXd::Identity(16, 16) - pt.matrix() - pp.matrix() - pm.matrix());
  pr.antisymmetric = FourIndexTensor(4, pp.matrix() + pm.matrix());
  return pr;
}

FourIndexTensor build_rmatrix4(RVariant variant, const DeformationParams& p) {
  const Projectors4 pr = build_projectors4(p);
  const double q2 = p.q() * p.q();
  if (variant == RVariant::I) {
    return FourIndexTensor(4, pr.symmetric.matrix() + pr.trace.matrix() - q2 * pr.plus.matrix() -
                                  pr.minus.matrix() / q2);
  }
  return FourIndexTensor(4, pr.symmetric.matrix() / q2 + q2 * pr.trace.matrix() - pr.plus.matrix() -
                                pr.minus.matrix());
}

FourIndexTensor build_rmatrix4_inverse(RVariant variant, const DeformationParams& p) {
  const Projectors4 pr = build_projectors4(p);
  const double q2 = p.q() * p.q();
  if (variant == RVariant::I) {
    return FourIndexTensor(4, pr.symmetric.matrix() + pr.trace.matrix() - pr.plus.matrix() / q2 -
                                  q2 * pr.minus.matrix());
  }
  return FourIndexTensor(4, q2 * pr.symmetric.matrix() + pr.trace.matrix() / q2 - pr.plus.matrix() -
                                pr.minus.matrix());
}

FourIndexTensor epsilon4(const DeformationParams& p) {
  const Projectors4 pr = build_projectors4(p);
  return FourIndexTensor(4, pr.plus.matrix() - pr.minus.matrix());
}

double braid_residual(const FourIndexTensor& r) {
  const int d = r.dim();
  const int n = d * d * d;
  const Eigen::MatrixXd& m = r.matrix();
  Eigen::MatrixXd r12 = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd r23 = Eigen::MatrixXd::Zero(n, n);
  for (int a = 0; a < d * d; ++a)
    for (int b = 0; b < d * d; ++b) {
      if (m(a, b) == 0.0) continue;
      for (int k = 0; k < d; ++k) {
        r12(a * d + k, b * d + k) = m(a, b);
        r23(k * d * d + a, k * d * d + b) = m(a, b);
      }
    }
  const Eigen::MatrixXd diff = r12 * r23 * r12 - r23 * r12 * r23;
  return diff.cwiseAbs().maxCoeff();
}

std::vector<EigenCluster> eigenvalue_clusters(const FourIndexTensor& t, double tol) {
  Eigen::EigenSolver<Eigen::MatrixXd> solver(t.matrix(), false);
  std::vector<EigenCluster> out;
  for (int i = 0; i < solver.eigenvalues().size(); ++i) {
    const std::complex<double> v = solver.eigenvalues()(i);
    auto it = std::find_if(out.begin(), out.end(), [&](const EigenCluster& c) { return std::abs(c.value - v) < tol; });
    if (it == out.end()) {
      out.push_back({v, 1});
    } else {
      ++it->multiplicity;
    }
  }
  std::sort(out.begin(), out.end(), [](const EigenCluster& a, const EigenCluster& b) { return a.value.real() < b.value.real(); });
  return out;
}

}  // namespace qmink
