#include <cmath>
#include <set>
#include <stdexcept>

#include "qmink/operators.hpp"

namespace qmink {

TensorOperator4 build_v(const VectorOperator& r, const VectorOperator& s, const DeformationParams& p) {
  if (r[0].dim() != s[0].dim()) throw std::invalid_argument("R and S live on different bases");
  const double q2 = p.q() * p.q();
  const Epsilon3 e = epsilon3(p);
  SparseOperator zero("0", SparseMatrix(static_cast<Eigen::Index>(r[0].dim()), static_cast<Eigen::Index>(r[0].dim())),
                      {{0, 0, 0, 0}});
  TensorOperator4 v;
  for (int a = 0; a < 3; ++a) {
    v[a][kZero] = r[a] + Complex(q2) * s[a];
    v[kZero][a] = Complex(-q2) * r[a] - s[a];
    for (int b = 0; b < 3; ++b) {
      SparseOperator acc = zero;
      for (int c = 0; c < 3; ++c) {
        const double coef = e.lower_upper_upper(c, a, b);
        if (coef != 0.0) acc = acc + Complex(coef) * (r[c] - s[c]);
      }
      v[a][b] = acc;
    }
  }
  v[kZero][kZero] = zero;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) v[a][b] = v[a][b].renamed(std::string("V") + component_name(a) + component_name(b));
  return v;
}

LW build_l_w(const VectorOperator& r, const VectorOperator& s, const SparseOperator& u, const DeformationParams& p) {
  const double q = p.q();
  const double q2 = q * q;
  const double q4m1 = q2 * q2 - 1.0;
  const Epsilon3 e = epsilon3(p);
  LW out;
  for (int a = 0; a < 3; ++a) {
    SparseOperator acc = u * s[a] - u * r[a];
    for (int c = 0; c < 3; ++c)
      for (int b = 0; b < 3; ++b) {
        const double coef = e.mixed(c, b, a);
        if (coef != 0.0) acc = acc + Complex(q4m1 * coef) * (r[b] * s[c]);
      }
    out.l[a] = (Complex((q2 + 1.0) / q2) * acc).renamed(std::string("L") + component_name(a));
  }
  out.w = (u * u - Complex(q2 * q4m1 * q4m1) * op_circ(r, s, p)).renamed("W");
  return out;
}

TOperators build_t(const LW& lw, const DeformationParams& p) {
  const double q = p.q();
  const double q2 = q * q;
  const SparseOperator n_op = (lw.w + Complex(q2 * (1.0 - q2)) * lw.l[kThree]).renamed("N");
  const SparseMatrix& nm = n_op.matrix();
  const Eigen::Index dim = nm.rows();
  Eigen::VectorXcd diag = Eigen::VectorXcd::Zero(dim);
  double off = 0.0;
  double scale = 0.0;
  for (Eigen::Index r = 0; r < nm.outerSize(); ++r)
    for (SparseMatrix::InnerIterator it(nm, r); it; ++it) {
      if (it.row() == it.col()) {
        diag(it.row()) = it.value();
        scale = std::max(scale, std::abs(it.value()));
      } else {
        off = std::max(off, std::abs(it.value()));
      }
    }
  if (off > 1e-10 * (1.0 + scale)) {
    throw std::runtime_error("W + q^2(1-q^2)L^3 is not diagonal (off-diagonal " + std::to_string(off) + ")");
  }
  std::vector<Eigen::Triplet<Complex>> th, tt;
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (std::abs(diag(i)) == 0.0 || diag(i).real() <= 0.0) throw std::runtime_error("W + q^2(1-q^2)L^3 is not positive");
    th.emplace_back(i, i, 1.0 / diag(i));
    tt.emplace_back(i, i, 1.0 / (diag(i) * diag(i)));
  }
  SparseMatrix mh(dim, dim), mt(dim, dim);
  mh.setFromTriplets(th.begin(), th.end());
  mt.setFromTriplets(tt.begin(), tt.end());
  TOperators out;
  out.n = n_op;
  out.tau_half = SparseOperator("tau_half", mh, {{0, 0, 0, 0}});
  out.tau = SparseOperator("tau", mt, {{0, 0, 0, 0}});
  const double s = std::sqrt(1.0 + q2);
  out.t_plus = (Complex(q2 * s) * (out.tau_half * lw.l[kPlus])).renamed("T+");
  out.t_minus = (Complex(-q2 * q * s) * (out.tau_half * lw.l[kMinus])).renamed("T-");
  return out;
}

namespace {

// Drops cancellation residue outside the declared signature; throws if anything sizeable remains.
SparseOperator onto_signature(const SparseOperator& op, const BasisMap& basis) {
  const std::set<Shift> allowed(op.signature().begin(), op.signature().end());
  const double cut = 1e-11 * (1.0 + op.max_abs());
  std::vector<Eigen::Triplet<Complex>> t;
  for (const auto& e : op.entries()) {
    const BasisLabel& a = basis.label(e.row);
    const BasisLabel& b = basis.label(e.col);
    if (allowed.count({a.j - b.j, a.m - b.m, a.n - b.n, a.M - b.M})) {
      t.emplace_back(e.row, e.col, e.value);
    } else if (std::abs(e.value) > cut) {
      throw std::runtime_error(op.name() + " has a sizeable element outside its signature");
    }
  }
  SparseMatrix m(static_cast<Eigen::Index>(op.dim()), static_cast<Eigen::Index>(op.dim()));
  m.setFromTriplets(t.begin(), t.end());
  return SparseOperator(op.name(), m, op.signature());
}

}  // namespace

SparseOperator restrict_operator(const SparseOperator& op, const BasisMap& from, const BasisMap& to) {
  if (op.dim() != from.size()) throw std::invalid_argument("operator does not live on the source basis");
  std::vector<Eigen::Index> map(from.size(), -1);
  for (std::size_t i = 0; i < to.size(); ++i) {
    const auto k = from.index_of(to.label(i));
    if (!k) throw std::invalid_argument("target basis is not contained in the source basis");
    map[*k] = static_cast<Eigen::Index>(i);
  }
  std::vector<Eigen::Triplet<Complex>> t;
  for (const auto& e : op.entries()) {
    const Eigen::Index r = map[e.row];
    const Eigen::Index c = map[e.col];
    if (r >= 0 && c >= 0 && e.value != Complex(0.0)) t.emplace_back(r, c, e.value);
  }
  SparseMatrix m(static_cast<Eigen::Index>(to.size()), static_cast<Eigen::Index>(to.size()));
  m.setFromTriplets(t.begin(), t.end());
  return SparseOperator(op.name(), m, op.signature());
}

OperatorSet::OperatorSet(const Sector& sector, const TruncationWindow& window, const DeformationParams& p,
                         const OperatorOptions& options)
    : sector_(sector), params_(p) {
  sector.validate(p);
  basis_ = std::make_shared<const BasisMap>(enumerate_basis(sector, window));
  const BasisMap& b = *basis_;
  const ReducedShifts rs_shifts{{1, 0}, {-1, 0}};

  for (auto& op : assemble_vector_operator(reduced_x_table(sector, b, p), b, p, "X", {{0, 0}})) add(op);
  auto [x0, xx] = diag_x0_xcircx(sector, b, p);
  add(x0);
  add(xx);
  for (auto& op : assemble_vector_operator(reduced_r_table(sector, b, p), b, p, "R", rs_shifts)) add(op);
  for (auto& op : assemble_vector_operator(reduced_s_table(sector, b, p), b, p, "S", rs_shifts)) add(op);
  add(build_u(sector, b, p));
  add(build_lambda(sector, b, p, 1, options.phases));
  add(build_lambda(sector, b, p, -1, options.phases));
  add(identity_operator(b).renamed("Id"));
  if (!sector.light_like()) {
    for (auto& op : assemble_vector_operator(reduced_p_table(sector, b, p), b, p, "P", {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}))
      add(op);
    add(build_p0(sector, b, p));
  }

  TruncationWindow padded = window;
  padded.j_max += options.derived_padding;
  padded.n_lo -= options.derived_padding;
  padded.n_hi += options.derived_padding;
  padded.margin = 0;
  const BasisMap pb = enumerate_basis(sector, padded);
  const VectorOperator pr = assemble_vector_operator(reduced_r_table(sector, pb, p), pb, p, "R", rs_shifts);
  const VectorOperator ps = assemble_vector_operator(reduced_s_table(sector, pb, p), pb, p, "S", rs_shifts);
  const LW plw = build_l_w(pr, ps, build_u(sector, pb, p), p);

  LW lw;
  for (int a = 0; a < 3; ++a) {
    const Shift s{0, a == kPlus ? 1 : (a == kMinus ? -1 : 0), 0, 0};
    lw.l[a] = onto_signature(SparseOperator(plw.l[a].name(), restrict_operator(plw.l[a], pb, b).matrix(), {s}), b);
    add(lw.l[a]);
  }
  lw.w = onto_signature(SparseOperator("W", restrict_operator(plw.w, pb, b).matrix(), {{0, 0, 0, 0}}), b);
  add(lw.w);
  const TOperators t = build_t(lw, p);
  add(t.n);
  add(t.tau);
  add(t.tau_half);
  add(t.t_plus);
  add(t.t_minus);

  std::vector<Eigen::Triplet<Complex>> jj;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const int j = b.label(i).j;
    jj.emplace_back(static_cast<int>(i), static_cast<int>(i), bracket(j, p) * bracket(j + 1, p));
  }
  SparseMatrix m(static_cast<Eigen::Index>(b.size()), static_cast<Eigen::Index>(b.size()));
  m.setFromTriplets(jj.begin(), jj.end());
  add(SparseOperator("JJ", m, {{0, 0, 0, 0}}));
}

void OperatorSet::add(SparseOperator op) {
  const std::string name = op.name();
  ops_[name] = std::move(op);
}

const SparseOperator& OperatorSet::get(const std::string& name) const {
  auto it = ops_.find(name);
  if (it == ops_.end()) throw std::out_of_range("operator '" + name + "' not built for sector " + sector_name(sector_.kind()));
  return it->second;
}

std::vector<std::string> OperatorSet::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : ops_) out.push_back(k);
  return out;
}

VectorOperator OperatorSet::vec(const std::string& stem) const {
  return {get(stem + "+"), get(stem + "-"), get(stem + "3")};
}

}  // namespace qmink
