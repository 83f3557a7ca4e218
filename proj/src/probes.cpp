#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

#include "qmink/verify.hpp"

namespace qmink {

namespace {

struct System {
  Eigen::Matrix2d a;
  Eigen::Vector2cd c;
};

Complex element(const SparseMatrix& m, std::size_t r, std::size_t c) {
  return m.coeff(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
}

// Rows from the PX2c and XPX0 relations for <a|P^0|b> and <a|X o P|b>.
System assemble_system(const OperatorSet& ops, const SparseMatrix& lu, const SparseMatrix& xrl, std::size_t ia,
                       std::size_t ib) {
  const DeformationParams& p = ops.params();
  const double q = p.q();
  const double lam = p.lambda();
  const double b2 = bracket(2, p);
  const BasisLabel& a = ops.basis().label(ia);
  const BasisLabel& b = ops.basis().label(ib);
  const double ta = ops.sector().t(a.n, a.M, p);
  const double tb = ops.sector().t(b.n, b.M, p);
  const double ra2 = ops.sector().r2(a.n, a.M, p);
  System s;
  s.a << -lam * ta, lam, -lam / b2 * ra2, tb - 2.0 / (q * b2) * ta;
  s.c(0) = Complex(0.0, 0.5 * q * q * b2) * element(lu, ia, ib);
  s.c(1) = Complex(0.0, q * q * q * q * lam * b2) * element(xrl, ia, ib);
  return s;
}

ShiftBudget system_budget(const OperatorSet& ops) {
  const double q = ops.params().q();
  auto g = [](const char* n) { return Expr::gen(n); };
  const Expr xr = g("X3") * g("R3") - Complex(q) * (g("X+") * g("R-")) - Complex(1.0 / q) * (g("X-") * g("R+"));
  const Expr lu = (g("Lambda") - g("LambdaInv")) * g("U");
  const Expr sub = (g("X0") * g("U") - g("U") * g("X0")) * g("LambdaInv");
  return (xr * g("LambdaInv")).budget(ops).max(lu.budget(ops)).max(sub.budget(ops));
}

SparseMatrix lambda_diff_u(const OperatorSet& ops, const SparseMatrix& u) {
  return SparseMatrix((ops.get("Lambda").matrix() - ops.get("LambdaInv").matrix()) * u);
}

}  // namespace

ObstructionReport lightcone_obstruction(const OperatorSet& ops) {
  if (!ops.sector().light_like()) throw std::invalid_argument("the obstruction probe needs the light-like sector");
  const DeformationParams& p = ops.params();
  const double q = p.q();
  const double q2 = q * q;
  const double b2 = bracket(2, p);
  const double k = (q2 * q2 + 1.0) / ((q2 + 1.0) * q);
  const BasisMap& basis = ops.basis();

  const SparseMatrix& u = ops.get("U").matrix();
  SparseMatrix unit = u;
  for (Eigen::Index r = 0; r < unit.outerSize(); ++r)
    for (SparseMatrix::InnerIterator it(unit, r); it; ++it)
      if (it.value() != Complex(0.0)) it.valueRef() = 1.0;
  const SparseMatrix& x0 = ops.get("X0").matrix();
  const SparseMatrix& lmh = ops.get("LambdaInv").matrix();
  const SparseMatrix xr = op_circ(ops.vec("X"), ops.vec("R"), p).matrix();
  const double sub = q / ((q2 - 1.0) * (q2 - 1.0));
  auto xr_from = [&](const SparseMatrix& uu) {
    return SparseMatrix(Complex(sub) * (Complex(k) * SparseMatrix(x0 * uu) - SparseMatrix(uu * x0)));
  };

  const SparseMatrix lu = lambda_diff_u(ops, u);
  const SparseMatrix xrl = xr * lmh;
  const SparseMatrix xrl_sub = xr_from(u) * lmh;
  const SparseMatrix lu_unit = lambda_diff_u(ops, unit);
  const SparseMatrix xrl_unit = xr_from(unit) * lmh;

  ObstructionReport rep;
  rep.q = q;
  rep.tau0 = ops.sector().scale();
  rep.rank_deficient = true;
  rep.min_inhomogeneity = std::numeric_limits<double>::infinity();
  for (std::size_t i : interior_indices(basis, system_budget(ops))) {
    const BasisLabel& l = basis.label(i);
    if (l.m != 0) continue;
    const System s = assemble_system(ops, lu, xrl, i, i);
    const System s_sub = assemble_system(ops, lu, xrl_sub, i, i);
    const System s_unit = assemble_system(ops, lu_unit, xrl_unit, i, i);
    const double t = ops.sector().t(l.n, l.M, p);
    Eigen::JacobiSVD<Eigen::Matrix2d> svd(s.a);
    ObstructionRow row;
    row.n = l.n;
    row.j = l.j;
    row.t = t;
    row.sigma_max = svd.singularValues()(0);
    row.sigma_min = svd.singularValues()(1);
    row.determinant = std::abs(s.a.determinant());
    row.compatibility = std::abs(s.c(1) - t / b2 * s.c(0));
    row.unit_coefficient = std::abs(s_unit.c(1) - t / b2 * s_unit.c(0));
    row.inhomogeneity = row.unit_coefficient > 0.0 ? row.compatibility / row.unit_coefficient : 0.0;
    if (auto up = basis.index_of({l.j, l.m, l.n + 1, l.M})) row.u_element = std::abs(element(u, i, *up));
    row.substitution_error = std::abs(s.c(1) - s_sub.c(1));
    rep.rank_deficient = rep.rank_deficient && row.sigma_min <= 1e-12 * row.sigma_max;
    rep.min_inhomogeneity = std::min(rep.min_inhomogeneity, row.inhomogeneity);
    rep.rows.push_back(row);
  }
  if (rep.rows.empty()) {
    rep.rank_deficient = false;
    rep.min_inhomogeneity = 0.0;
    rep.verdict = "inconclusive: window too small";
  } else if (rep.rank_deficient && rep.min_inhomogeneity > 1e-6) {
    rep.verdict = "no solution: P^0 and X o P admit no representation on the light cone";
  } else {
    rep.verdict = "solvable";
  }
  return rep;
}

MomentumSolveReport momentum_solve(const OperatorSet& ops) {
  if (!ops.has_momenta()) throw std::invalid_argument("momentum solve needs a sector with momenta");
  const DeformationParams& p = ops.params();
  const BasisMap& basis = ops.basis();
  const SparseMatrix lu = lambda_diff_u(ops, ops.get("U").matrix());
  const SparseMatrix xrl = op_circ(ops.vec("X"), ops.vec("R"), p).matrix() * ops.get("LambdaInv").matrix();
  const SparseMatrix& p0 = ops.get("P0").matrix();
  const SparseMatrix xp = op_circ(ops.vec("X"), ops.vec("P"), p).matrix();
  const auto interior = interior_indices(basis, system_budget(ops));
  std::vector<char> mask(basis.size(), 0);
  for (auto i : interior) mask[i] = 1;

  MomentumSolveReport rep;
  rep.min_relative_det = std::numeric_limits<double>::infinity();
  for (std::size_t ib : interior) {
    const BasisLabel& b = basis.label(ib);
    if (b.m != 0) continue;
    for (int dn : {-1, 1})
      for (int dM : {-1, 1}) {
        const auto ia = basis.index_of({b.j, 0, b.n + dn, b.M + dM});
        if (!ia || !mask[*ia]) continue;
        const System s = assemble_system(ops, lu, xrl, *ia, ib);
        const double rel = std::abs(s.a.determinant()) / (s.a.row(0).norm() * s.a.row(1).norm());
        rep.min_relative_det = std::min(rep.min_relative_det, rel);
        const Eigen::Vector2cd sol = s.a.cast<Complex>().partialPivLu().solve(s.c);
        const Complex want_p = element(p0, *ia, ib);
        const Complex want_w = element(xp, *ia, ib);
        rep.max_p0_difference = std::max(rep.max_p0_difference, std::abs(sol(0) - want_p) / (1.0 + std::abs(want_p)));
        rep.max_xp_difference = std::max(rep.max_xp_difference, std::abs(sol(1) - want_w) / (1.0 + std::abs(want_w)));
        ++rep.systems;
      }
  }
  if (rep.systems == 0) rep.min_relative_det = 0.0;
  return rep;
}

std::vector<LimitRow> q_limit_probe(const std::vector<double>& qs, const TruncationWindow& window) {
  std::vector<LimitRow> out;
  for (double qv : qs) {
    const DeformationParams p(qv);
    const Sector sector(SectorKind::SpaceLike, 1.0);
    const BasisMap basis = enumerate_basis(sector, window);
    const VectorOperator x = assemble_vector_operator(reduced_x_table(sector, basis, p), basis, p, "X", {{0, 0}});
    const auto interior = interior_indices(basis, {2, 2, 0, 0});
    std::vector<char> mask(basis.size(), 0);
    for (auto i : interior) mask[i] = 1;
    auto masked = [&](const SparseMatrix& m) {
      double mx = 0.0;
      for (Eigen::Index r = 0; r < m.outerSize(); ++r) {
        if (!mask[static_cast<std::size_t>(r)]) continue;
        for (SparseMatrix::InnerIterator it(m, r); it; ++it)
          if (mask[static_cast<std::size_t>(it.col())]) mx = std::max(mx, std::abs(it.value()));
      }
      return mx;
    };
    double worst = 0.0;
    for (auto [a, b] : {std::pair{kPlus, kMinus}, std::pair{kPlus, kThree}, std::pair{kMinus, kThree}}) {
      const SparseMatrix ab = x[a].matrix() * x[b].matrix();
      const SparseMatrix ba = x[b].matrix() * x[a].matrix();
      const double norm = std::max(masked(ab), masked(ba));
      worst = std::max(worst, masked(SparseMatrix(ab - ba)) / (1.0 + norm));
    }
    out.push_back({qv, worst});
  }
  return out;
}

}  // namespace qmink
