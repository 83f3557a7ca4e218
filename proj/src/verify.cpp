#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <limits>
#include <map>

#include <Eigen/Dense>

#include "qmink/verify.hpp"

namespace qmink {

namespace {

std::vector<char> mask_of(std::size_t dim, const std::vector<std::size_t>& idx) {
  std::vector<char> m(dim, 0);
  for (auto i : idx) m[i] = 1;
  return m;
}

double masked_max(const SparseMatrix& a, const std::vector<char>& mask, double* frob = nullptr) {
  double mx = 0.0;
  double f = 0.0;
  for (Eigen::Index r = 0; r < a.outerSize(); ++r) {
    if (!mask[static_cast<std::size_t>(r)]) continue;
    for (SparseMatrix::InnerIterator it(a, r); it; ++it) {
      if (!mask[static_cast<std::size_t>(it.col())]) continue;
      const double v = std::abs(it.value());
      mx = std::max(mx, v);
      f += v * v;
    }
  }
  if (frob) *frob = std::sqrt(f);
  return mx;
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "FAIL";
    case Status::Inconclusive:
      return "inconclusive";
    case Status::NotRepresentable:
      return "not representable";
  }
  return "?";
}

SparseMatrix residual_matrix(const RelationSpec& spec, const OperatorSet& ops) {
  return SparseMatrix(spec.lhs.evaluate(ops) - spec.rhs.evaluate(ops));
}

ResidualReport evaluate(const RelationSpec& spec, const OperatorSet& ops, double tol) {
  ResidualReport r;
  r.name = spec.name;
  r.group = spec.group;
  r.group_title = spec.group_title;
  r.sector = ops.sector().kind();
  r.tol = tol;
  if (!spec.applies_to(r.sector) || (spec.needs_momenta && !ops.has_momenta())) {
    r.status = Status::NotRepresentable;
    return r;
  }
  r.budget = spec.lhs.budget(ops).max(spec.rhs.budget(ops));
  const auto interior = interior_indices(ops.basis(), r.budget);
  r.interior_dim = interior.size();
  if (interior.empty()) {
    r.status = Status::Inconclusive;
    return r;
  }
  const auto mask = mask_of(ops.basis().size(), interior);
  SparseMatrix diff(ops.basis().size(), ops.basis().size());
  for (const Expr* side : {&spec.lhs, &spec.rhs}) {
    for (const Expr& t : side->terms()) {
      const SparseMatrix m = t.evaluate(ops);
      r.normalization = std::max(r.normalization, masked_max(m, mask));
      if (side == &spec.lhs)
        diff += m;
      else
        diff -= m;
    }
  }
  r.max_residual = masked_max(diff, mask, &r.frobenius);
  r.normalized = r.max_residual / (1.0 + r.normalization);
  r.status = r.max_residual <= tol * (1.0 + r.normalization) ? Status::Pass : Status::Fail;
  return r;
}

std::vector<ResidualReport> evaluate_all(const std::vector<RelationSpec>& catalog, const OperatorSet& ops, double tol,
                                         unsigned threads) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, catalog.size())));
  std::vector<ResidualReport> out(catalog.size());
  std::atomic<std::size_t> next{0};
  std::mutex err_mutex;
  std::exception_ptr err;
  auto work = [&] {
    for (std::size_t i = next++; i < catalog.size(); i = next++) {
      try {
        out[i] = evaluate(catalog[i], ops, tol);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!err) err = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (err) std::rethrow_exception(err);
  std::stable_sort(out.begin(), out.end(), [](const ResidualReport& a, const ResidualReport& b) {
    return std::tie(a.group, a.name) < std::tie(b.group, b.name);
  });
  return out;
}

double x_table_route_difference(const Sector& sector, const BasisMap& basis, const DeformationParams& p) {
  const ReducedElementTable a = reduced_x_table(sector, basis, p);
  const ReducedElementTable b = reduced_x_closed_form(sector, basis, p);
  double d = 0.0;
  for (const auto& [k, v] : a.entries()) d = std::max(d, std::abs(v - b.get(k)));
  for (const auto& [k, v] : b.entries()) d = std::max(d, std::abs(v - a.get(k)));
  return d;
}

double rho_forms_difference(const Sector& sector, int j_max, int n_lo, int n_hi, int M_lo, int M_hi,
                            const DeformationParams& p) {
  double d = 0.0;
  if (!sector.has_M()) M_lo = M_hi = 0;
  for (int M = M_lo; M <= M_hi; ++M)
    for (int n = n_lo; n <= n_hi; ++n) {
      const double t = sector.t(n, M, p);
      const double r2 = sector.r2(n, M, p);
      for (int j1 = 1; j1 <= j_max + 1; ++j1) {
        const double a = rho(j1, r2, t, p);
        const double b = rho_partial_sum(j1, r2, t, p);
        d = std::max(d, std::abs(a - b) / (1.0 + std::abs(a)));
      }
    }
  return d;
}

double rho_sector_difference(const Sector& sector, int j_max, int n_lo, int n_hi, int M_lo, int M_hi,
                             const DeformationParams& p) {
  double d = 0.0;
  if (!sector.has_M()) M_lo = M_hi = 0;
  for (int M = M_lo; M <= M_hi; ++M)
    for (int n = n_lo; n <= n_hi; ++n) {
      const double t = sector.t(n, M, p);
      const double r2 = sector.r2(n, M, p);
      for (int j1 = 1; j1 <= j_max + 1; ++j1) {
        const double a = rho(j1, r2, t, p);
        const double b = rho_sector(sector, j1, n, M, p);
        d = std::max(d, std::abs(a - b) / (1.0 + std::abs(a)));
      }
    }
  return d;
}

double matprod_difference(const OperatorSet& ops) {
  const DeformationParams& p = ops.params();
  const double q2 = p.q() * p.q();
  const BasisMap& basis = ops.basis();
  const ReducedElementTable x = reduced_x_table(ops.sector(), basis, p);
  const ReducedElementTable r = reduced_r_table(ops.sector(), basis, p);
  const SparseMatrix xr = op_circ(ops.vec("X"), ops.vec("R"), p).matrix();
  const auto interior = interior_indices(basis, {2, 2, 1, 0});
  const auto mask = mask_of(basis.size(), interior);
  double d = 0.0;
  for (std::size_t row : interior) {
    const BasisLabel& a = basis.label(row);
    for (SparseMatrix::InnerIterator it(xr, static_cast<Eigen::Index>(row)); it; ++it) {
      if (!mask[static_cast<std::size_t>(it.col())]) continue;
      const BasisLabel& b = basis.label(static_cast<std::size_t>(it.col()));
      if (a.j != b.j || a.m != b.m) continue;
      const int j = a.j;
      auto br = [&](int k) { return bracket(k, p); };
      Complex expect = x.get({j, a.n, a.M, j, a.n, a.M}) * r.get({j, a.n, a.M, j, b.n, b.M}) / br(2) * q2 *
                       br(2 * j + 2) * br(2 * j);
      expect -= x.get({j, a.n, a.M, j + 1, a.n, a.M}) * r.get({j + 1, a.n, a.M, j, b.n, b.M}) * q2 * br(2 * j + 2) *
                br(2 * j + 3);
      if (j > 0)
        expect -= x.get({j, a.n, a.M, j - 1, a.n, a.M}) * r.get({j - 1, a.n, a.M, j, b.n, b.M}) * q2 * br(2 * j) *
                  br(2 * j - 1);
      d = std::max(d, std::abs(it.value() - expect));
    }
  }
  return d;
}

double gamma_deviation(const OperatorSet& ops) {
  const BasisMap& basis = ops.basis();
  const SparseMatrix& u = ops.get("U").matrix();
  const double target = 1.0 / (bracket(2, ops.params()) * bracket(2, ops.params()));
  double d = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const BasisLabel& a = basis.label(i);
    if (a.j != 0) continue;
    const auto k = basis.index_of({0, 0, a.n + 1, a.M});
    if (!k) continue;
    const Complex v = u.coeff(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(*k));
    d = std::max(d, std::abs(std::norm(v) - target));
  }
  return d;
}

double lambda_magnitude_deviation(const OperatorSet& ops) {
  const double q2 = ops.params().q() * ops.params().q();
  double d = 0.0;
  for (const auto& e : ops.get("Lambda").entries()) d = std::max(d, std::abs(std::abs(e.value) - q2));
  return d;
}

AngularCheck angular_spectrum_check(const OperatorSet& ops) {
  const DeformationParams& p = ops.params();
  const double q = p.q();
  const double lam = p.lambda();
  const SparseMatrix& tp = ops.get("T+").matrix();
  const SparseMatrix& tm = ops.get("T-").matrix();
  const SparseMatrix& n = ops.get("N").matrix();
  const SparseMatrix& th = ops.get("tau_half").matrix();
  const SparseMatrix& tau = ops.get("tau").matrix();
  const SparseMatrix id = identity_operator(ops.basis()).matrix();
  const SparseMatrix tmtp = (tm * tp).pruned();
  SparseMatrix t2 = Complex(q) * SparseMatrix(n * tmtp) + Complex(q / (lam * lam)) * n +
                    Complex(1.0 / (q * lam * lam)) * (th - Complex(q * q + 1.0) * id);
  const BasisMap& basis = ops.basis();
  const auto interior = interior_indices(basis, {0, 2, 0, 0});
  const auto mask = mask_of(basis.size(), interior);
  AngularCheck c;
  c.interior_dim = interior.size();
  for (std::size_t i : interior) {
    const BasisLabel& a = basis.label(i);
    const double jj = bracket(a.j, p) * bracket(a.j + 1, p);
    const double tm4 = std::pow(q, -4.0 * a.m);
    for (SparseMatrix::InnerIterator it(t2, static_cast<Eigen::Index>(i)); it; ++it) {
      if (!mask[static_cast<std::size_t>(it.col())]) continue;
      const double want = static_cast<std::size_t>(it.col()) == i ? jj : 0.0;
      c.casimir = std::max(c.casimir, std::abs(it.value() - want));
    }
    for (SparseMatrix::InnerIterator it(tau, static_cast<Eigen::Index>(i)); it; ++it) {
      if (!mask[static_cast<std::size_t>(it.col())]) continue;
      const double want = static_cast<std::size_t>(it.col()) == i ? tm4 : 0.0;
      c.tau = std::max(c.tau, std::abs(it.value() - want) / tm4);
    }
  }
  return c;
}

double heisenberg_formulation_difference(const OperatorSet& ops, const DeformationParams& p) {
  if (!ops.has_momenta()) throw std::invalid_argument("Heisenberg relations need momenta");
  const auto catalog = relation_catalog(p);
  std::vector<SparseMatrix> cov;
  std::vector<SparseMatrix> expl;
  for (const auto& r : catalog) {
    if (r.group == 8) cov.push_back(residual_matrix(r, ops));
    if (r.group == 18 && r.name.rfind("XPe1", 0) == 0 && r.name != "XPe1e") expl.push_back(residual_matrix(r, ops));
  }
  // Express each explicit residual as a least-squares combination of the covariant ones.
  std::map<std::pair<Eigen::Index, Eigen::Index>, Eigen::Index> pos;
  auto collect = [&](const SparseMatrix& m) {
    for (Eigen::Index k = 0; k < m.outerSize(); ++k)
      for (SparseMatrix::InnerIterator it(m, k); it; ++it) pos.emplace(std::make_pair(it.row(), it.col()), 0);
  };
  for (const auto& m : cov) collect(m);
  for (const auto& m : expl) collect(m);
  Eigen::Index row = 0;
  for (auto& [k, v] : pos) v = row++;
  auto flatten = [&](const SparseMatrix& m) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(row);
    for (Eigen::Index k = 0; k < m.outerSize(); ++k)
      for (SparseMatrix::InnerIterator it(m, k); it; ++it) v(pos.at({it.row(), it.col()})) = it.value();
    return v;
  };
  Eigen::MatrixXcd a(row, static_cast<Eigen::Index>(cov.size()));
  for (std::size_t i = 0; i < cov.size(); ++i) a.col(static_cast<Eigen::Index>(i)) = flatten(cov[i]);
  const Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd> cod(a);
  double d = 0.0;
  for (const auto& m : expl) {
    const Eigen::VectorXcd b = flatten(m);
    const Eigen::VectorXcd c = cod.solve(b);
    const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
    d = std::max(d, (a * c - b).cwiseAbs().maxCoeff() / scale);
  }
  return d;
}

double spectral_gap(const OperatorSet& a, const OperatorSet& b) {
  auto diag = [](const OperatorSet& o) {
    std::vector<double> v;
    const SparseMatrix& m = o.get("X0").matrix();
    for (Eigen::Index i = 0; i < m.rows(); ++i) v.push_back(m.coeff(i, i).real());
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  };
  const auto x = diag(a);
  const auto y = diag(b);
  double gap = std::numeric_limits<double>::infinity();
  for (double u : x) {
    auto it = std::lower_bound(y.begin(), y.end(), u);
    if (it != y.end()) gap = std::min(gap, std::abs(*it - u));
    if (it != y.begin()) gap = std::min(gap, std::abs(*std::prev(it) - u));
  }
  return gap;
}

}  // namespace qmink
