#include "qmink/operators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qmink {

namespace {

using Triplets = std::vector<Eigen::Triplet<Complex>>;

SparseMatrix from_triplets(std::size_t dim, const Triplets& t) {
  SparseMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  m.setFromTriplets(t.begin(), t.end());
  m.makeCompressed();
  return m;
}

std::vector<Shift> dedupe(std::vector<Shift> s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

double sqrt_nonneg(double x) {
  if (x < -1e-9) throw std::logic_error("negative argument under square root in matrix element");
  return std::sqrt(std::max(x, 0.0));
}

void require_same_dim(const SparseOperator& a, const SparseOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("operators " + a.name() + " and " + b.name() + " differ in dimension");
}

}  // namespace

SparseOperator::SparseOperator(std::string name, SparseMatrix matrix, std::vector<Shift> signature)
    : name_(std::move(name)), matrix_(std::move(matrix)), signature_(dedupe(std::move(signature))) {
  if (matrix_.rows() != matrix_.cols()) throw std::invalid_argument("operator matrix must be square");
  matrix_.makeCompressed();
}

ShiftBudget SparseOperator::reach() const {
  ShiftBudget b;
  for (const Shift& s : signature_) b = b.max({std::abs(s.dj), std::abs(s.dm), std::abs(s.dn), std::abs(s.dM)});
  return b;
}

std::vector<SparseOperator::Entry> SparseOperator::entries() const {
  std::vector<Entry> out;
  out.reserve(static_cast<std::size_t>(matrix_.nonZeros()));
  for (Eigen::Index r = 0; r < matrix_.outerSize(); ++r)
    for (SparseMatrix::InnerIterator it(matrix_, r); it; ++it)
      out.push_back({static_cast<std::size_t>(it.row()), static_cast<std::size_t>(it.col()), it.value()});
  return out;
}

double SparseOperator::max_abs() const {
  double m = 0.0;
  for (Eigen::Index k = 0; k < matrix_.nonZeros(); ++k) m = std::max(m, std::abs(matrix_.valuePtr()[k]));
  return m;
}

bool SparseOperator::respects_signature(const BasisMap& basis, double tol) const {
  if (dim() != basis.size()) return false;
  const std::set<Shift> allowed(signature_.begin(), signature_.end());
  for (const Entry& e : entries()) {
    if (std::abs(e.value) <= tol) continue;
    const BasisLabel& a = basis.label(e.row);
    const BasisLabel& b = basis.label(e.col);
    if (!allowed.count({a.j - b.j, a.m - b.m, a.n - b.n, a.M - b.M})) return false;
  }
  return true;
}

SparseOperator SparseOperator::renamed(std::string name) const {
  SparseOperator out = *this;
  out.name_ = std::move(name);
  return out;
}

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b) {
  require_same_dim(a, b);
  std::vector<Shift> sig = a.signature();
  sig.insert(sig.end(), b.signature().begin(), b.signature().end());
  return SparseOperator("(" + a.name() + "+" + b.name() + ")", SparseMatrix(a.matrix() + b.matrix()), sig);
}

SparseOperator operator-(const SparseOperator& a, const SparseOperator& b) {
  require_same_dim(a, b);
  std::vector<Shift> sig = a.signature();
  sig.insert(sig.end(), b.signature().begin(), b.signature().end());
  return SparseOperator("(" + a.name() + "-" + b.name() + ")", SparseMatrix(a.matrix() - b.matrix()), sig);
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) {
  require_same_dim(a, b);
  std::vector<Shift> sig;
  for (const Shift& x : a.signature())
    for (const Shift& y : b.signature()) sig.push_back({x.dj + y.dj, x.dm + y.dm, x.dn + y.dn, x.dM + y.dM});
  return SparseOperator(a.name() + "*" + b.name(), SparseMatrix(a.matrix() * b.matrix()), sig);
}

SparseOperator operator*(Complex c, const SparseOperator& a) {
  return SparseOperator(a.name(), SparseMatrix(c * a.matrix()), a.signature());
}

SparseOperator adjoint(const SparseOperator& op) {
  std::vector<Shift> sig;
  for (const Shift& s : op.signature()) sig.push_back({-s.dj, -s.dm, -s.dn, -s.dM});
  return SparseOperator(op.name() + "^dag", SparseMatrix(op.matrix().adjoint()), sig);
}

SparseOperator identity_operator(const BasisMap& basis) {
  SparseMatrix m(static_cast<Eigen::Index>(basis.size()), static_cast<Eigen::Index>(basis.size()));
  m.setIdentity();
  return SparseOperator("1", m, {{0, 0, 0, 0}});
}

SparseOperator zero_operator(const BasisMap& basis) {
  SparseMatrix m(static_cast<Eigen::Index>(basis.size()), static_cast<Eigen::Index>(basis.size()));
  return SparseOperator("0", m, {{0, 0, 0, 0}});
}

SparseOperator op_circ(const VectorOperator& a, const VectorOperator& b, const DeformationParams& p) {
  const double q = p.q();
  SparseOperator out = a[kThree] * b[kThree] - Complex(q) * (a[kPlus] * b[kMinus]) -
                       Complex(1.0 / q) * (a[kMinus] * b[kPlus]);
  return out.renamed(a[kPlus].name().substr(0, 1) + "o" + b[kPlus].name().substr(0, 1));
}

std::pair<SparseOperator, SparseOperator> diag_x0_xcircx(const Sector& sector, const BasisMap& basis,
                                                         const DeformationParams& p) {
  Triplets t0, t2;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const BasisLabel& l = basis.label(i);
    const auto k = static_cast<Eigen::Index>(i);
    t0.emplace_back(k, k, sector.t(l.n, l.M, p));
    t2.emplace_back(k, k, sector.r2(l.n, l.M, p));
  }
  return {SparseOperator("X0", from_triplets(basis.size(), t0), {{0, 0, 0, 0}}),
          SparseOperator("XoX", from_triplets(basis.size(), t2), {{0, 0, 0, 0}})};
}

VectorOperator assemble_vector_operator(const ReducedElementTable& table, const BasisMap& basis,
                                        const DeformationParams& p, const std::string& name,
                                        const ReducedShifts& shifts) {
  const double q = p.q();
  auto br = [&](int a) { return bracket(a, p); };
  const double s1 = std::sqrt(1.0 + q * q);

  std::multimap<std::tuple<int, int, int>, std::pair<ReducedKey, Complex>> by_ket;
  for (const auto& [k, v] : table.entries()) {
    const std::pair<int, int> d{k.np - k.n, k.Mp - k.M};
    if (std::find(shifts.begin(), shifts.end(), d) == shifts.end()) {
      throw std::invalid_argument("reduced table " + table.name() + " contains an element outside the declared shifts");
    }
    by_ket.emplace(std::make_tuple(k.j, k.n, k.M), std::make_pair(k, v));
  }

  Triplets tp, tm, t3;
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto [j, m, n, M] = basis.label(c);
    auto range = by_ket.equal_range({j, n, M});
    for (auto it = range.first; it != range.second; ++it) {
      const ReducedKey& k = it->second.first;
      const Complex red = it->second.second;
      const int jp = k.jp;
      const auto col = static_cast<Eigen::Index>(c);
      double f;
      if (jp == j)
        f = -p.pow(m + 2) * sqrt_nonneg(br(j + m + 1) * br(j - m));
      else if (jp == j + 1)
        f = p.pow(m - 2 * j) * sqrt_nonneg(br(j + m + 1) * br(j + m + 2));
      else
        f = p.pow(m + 2 * j + 2) * sqrt_nonneg(br(j - m) * br(j - m - 1));
      if (auto r = basis.index_of({jp, m + 1, k.np, k.Mp}); r && f != 0.0)
        tp.emplace_back(static_cast<Eigen::Index>(*r), col, f * red);

      if (jp == j)
        f = p.pow(m) * sqrt_nonneg(br(j + m) * br(j - m + 1));
      else if (jp == j + 1)
        f = p.pow(m) * sqrt_nonneg(br(j - m + 1) * br(j - m + 2));
      else
        f = p.pow(m) * sqrt_nonneg(br(j + m) * br(j + m - 1));
      if (auto r = basis.index_of({jp, m - 1, k.np, k.Mp}); r && f != 0.0)
        tm.emplace_back(static_cast<Eigen::Index>(*r), col, f * red);

      if (jp == j)
        f = std::pow(q, 1.5) * s1 / (q * q - 1.0) * (p.pow(2 * m) - curly(2 * j + 1, p) / curly(1, p));
      else if (jp == j + 1)
        f = p.pow(m - j - 0.5) * s1 * sqrt_nonneg(br(j - m + 1) * br(j + m + 1));
      else
        f = -p.pow(m + j + 0.5) * s1 * sqrt_nonneg(br(j - m) * br(j + m));
      if (auto r = basis.index_of({jp, m, k.np, k.Mp}); r && f != 0.0)
        t3.emplace_back(static_cast<Eigen::Index>(*r), col, f * red);
    }
  }

  std::vector<Shift> sp, sm, s3;
  for (const auto& [dn, dM] : shifts)
    for (int dj : {-1, 0, 1}) {
      sp.push_back({dj, 1, dn, dM});
      sm.push_back({dj, -1, dn, dM});
      s3.push_back({dj, 0, dn, dM});
    }
  return {SparseOperator(name + "+", from_triplets(basis.size(), tp), sp),
          SparseOperator(name + "-", from_triplets(basis.size(), tm), sm),
          SparseOperator(name + "3", from_triplets(basis.size(), t3), s3)};
}

SparseOperator build_u(const Sector& sector, const BasisMap& basis, const DeformationParams& p) {
  Triplets t;
  const double b2 = bracket(2, p);
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto [j, m, n, M] = basis.label(c);
    for (int s : {1, -1}) {
      const auto r = basis.index_of({j, m, n + s, M});
      if (!r) continue;
      const int a = std::min(n, n + s);
      double v;
      if (sector.kind() == SectorKind::SpaceLike)
        v = sqrt_nonneg(curly(a - j, p) * curly(a + j + 1, p) / (curly(a, p) * curly(a + 1, p))) / b2;
      else if (sector.light_like())
        v = 1.0 / b2;
      else
        v = sqrt_nonneg(bracket(a - j + 1, p) * bracket(a + j + 2, p) / (bracket(a + 1, p) * bracket(a + 2, p))) / b2;
      t.emplace_back(static_cast<Eigen::Index>(*r), static_cast<Eigen::Index>(c), v);
    }
  }
  return SparseOperator("U", from_triplets(basis.size(), t), {{0, 0, 1, 0}, {0, 0, -1, 0}});
}

SparseOperator build_p0(const Sector& sector, const BasisMap& basis, const DeformationParams& p) {
  if (sector.light_like()) {
    throw std::invalid_argument("the momenta have no representation on the light-like sector alone");
  }
  const bool space = sector.kind() == SectorKind::SpaceLike;
  const double lam = p.lambda();
  const Complex I(0.0, 1.0);
  auto qp = [&](int a) { return p.pow(a); };
  auto cu = [&](int a) { return curly(a, p); };
  auto br = [&](int a) { return bracket(a, p); };
  Triplets t;
  std::vector<Shift> sig;
  for (int dn : {1, -1})
    for (int dM : {1, -1}) sig.push_back({0, 0, dn, dM});
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const auto [j, m, n, M] = basis.label(c);
    const double sc = sector.scale() * sector.sign() * qp(M);
    for (int dn : {1, -1})
      for (int dM : {1, -1}) {
        const auto r = basis.index_of({j, m, n + dn, M + dM});
        if (!r) continue;
        const bool up = dM == 1;
        Complex v;
        if (space) {
          if (dn == 1)
            v = -I / (2 * lam * sc) * (up ? qp(1 - n) : qp(3 + n)) *
                sqrt_nonneg(cu(n - j) * cu(n + j + 1) / (cu(n) * cu(n + 1)));
          else
            v = I / (2 * lam * sc) * (up ? qp(1 + n) : qp(3 - n)) *
                sqrt_nonneg(cu(n - j - 1) * cu(n + j) / (cu(n) * cu(n - 1)));
        } else {
          if (dn == 1)
            v = -I / (2 * lam * sc) * (up ? qp(-n) : -qp(4 + n)) *
                sqrt_nonneg(br(n - j + 1) * br(n + j + 2) / (br(n + 1) * br(n + 2)));
          else
            v = -I / (2 * lam * sc) * (up ? qp(2 + n) : -qp(2 - n)) *
                sqrt_nonneg(br(n - j) * br(n + j + 1) / (br(n) * br(n + 1)));
        }
        t.emplace_back(static_cast<Eigen::Index>(*r), static_cast<Eigen::Index>(c), v);
      }
  }
  return SparseOperator("P0", from_triplets(basis.size(), t), sig);
}

SparseOperator build_lambda(const Sector& sector, const BasisMap& basis, const DeformationParams& p, int power,
                            const LightPhases& phases) {
  if (power != 1 && power != -1) throw std::invalid_argument("Lambda power must be +1 or -1");
  const double q2 = p.q() * p.q();
  Triplets t;
  auto alpha = [&](int n) {
    auto it = phases.find(n);
    return it == phases.end() ? 0.0 : it->second;
  };
  for (std::size_t c = 0; c < basis.size(); ++c) {
    const BasisLabel l = basis.label(c);
    BasisLabel target = l;
    Complex v;
    if (sector.light_like()) {
      target.n += power;
      // Lambda^{1/2} |n> = e^{i alpha_n} q^2 |n+1>; its inverse undoes the phase of the link below.
      v = power == 1 ? std::polar(q2, alpha(l.n)) : std::polar(1.0 / q2, -alpha(l.n - 1));
    } else {
      target.M += power;
      v = power == 1 ? q2 : 1.0 / q2;
    }
    if (auto r = basis.index_of(target)) t.emplace_back(static_cast<Eigen::Index>(*r), static_cast<Eigen::Index>(c), v);
  }
  const Shift s = sector.light_like() ? Shift{0, 0, power, 0} : Shift{0, 0, 0, power};
  return SparseOperator(power == 1 ? "Lambda" : "LambdaInv", from_triplets(basis.size(), t), {s});
}

}  // namespace qmink
