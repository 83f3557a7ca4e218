#include <cmath>
#include <stdexcept>

#include "qmink/operators.hpp"

namespace qmink {

namespace {

double sqrt_nonneg(double x) {
  if (x < -1e-9) throw std::logic_error("negative argument under square root in matrix element");
  return std::sqrt(std::max(x, 0.0));
}

// Invokes f(j, n, M) once per reduced ket (the m = 0 member of each multiplet).
template <class F>
void for_each_ket(const BasisMap& basis, F f) {
  for (const BasisLabel& l : basis.labels())
    if (l.m == 0) f(l.j, l.n, l.M);
}

bool present(const BasisMap& basis, int j, int n, int M) { return j >= 0 && basis.contains({j, 0, n, M}); }

}  // namespace

void ReducedElementTable::set(const ReducedKey& k, Complex v) {
  if (std::abs(k.jp - k.j) > 1) throw std::invalid_argument("reduced element with |j' - j| > 1");
  entries_[k] = v;
}

Complex ReducedElementTable::get(const ReducedKey& k) const {
  auto it = entries_.find(k);
  return it == entries_.end() ? Complex(0.0) : it->second;
}

ReducedElementTable reduced_x_table(const Sector& sector, const BasisMap& basis, const DeformationParams& p) {
  ReducedElementTable table("X");
  const double q = p.q();
  const double sgn = sector.sign();
  for_each_ket(basis, [&](int j, int n, int M) {
    const double t = sector.t(n, M, p);
    const double r2 = sector.r2(n, M, p);
    if (j >= 1) {
      const double v = -p.lambda() / q * std::sqrt(bracket(2, p)) * bracket(j, p) * bracket(j + 1, p) /
                       (bracket(2 * j, p) * bracket(2 * j + 2, p)) * t;
      table.set({j, n, M, j, n, M}, v);
    }
    if (present(basis, j + 1, n, M)) {
      const double v = sgn * p.pow(j + 1) *
                       sqrt_nonneg(-rho(j + 1, r2, t, p) / (bracket(2 * j + 1, p) * bracket(2 * j + 3, p)));
      table.set({j + 1, n, M, j, n, M}, v);
    }
    if (present(basis, j - 1, n, M)) {
      const int jj = j - 1;
      const double v = -sgn * p.pow(-jj - 1) *
                       sqrt_nonneg(-rho(jj + 1, r2, t, p) / (bracket(2 * jj + 1, p) * bracket(2 * jj + 3, p)));
      table.set({jj, n, M, j, n, M}, v);
    }
  });
  return table;
}

ReducedElementTable reduced_x_closed_form(const Sector& sector, const BasisMap& basis, const DeformationParams& p) {
  if (sector.light_like()) throw std::invalid_argument("no closed-form X table for the light-like sector");
  ReducedElementTable table("X");
  const double q = p.q();
  const double lam = p.lambda();
  const double b2 = bracket(2, p);
  const bool space = sector.kind() == SectorKind::SpaceLike;
  const double s0 = sector.sign() * sector.scale();
  // Off-diagonal common factor for the pair (J+1, J).
  auto off = [&](int J, int n) {
    const double den = curly(J + 1, p) * std::sqrt(b2 * bracket(2 * J + 1, p) * bracket(2 * J + 3, p));
    if (space) return sqrt_nonneg(curly(n + J + 1, p) * curly(n - J - 1, p)) / den;
    return lam * sqrt_nonneg(bracket(n - J, p) * bracket(n + J + 2, p)) / den;
  };
  for_each_ket(basis, [&](int j, int n, int M) {
    if (j >= 1) {
      const double cc = std::sqrt(b2) * curly(j, p) * curly(j + 1, p);
      const double v = space ? -s0 * p.pow(M) * bracket(n, p) * lam * lam / (q * cc)
                             : -lam * s0 * p.pow(M) * curly(n + 1, p) / (q * cc);
      table.set({j, n, M, j, n, M}, v);
    }
    if (present(basis, j + 1, n, M)) table.set({j + 1, n, M, j, n, M}, s0 * p.pow(M + j) * off(j, n));
    if (present(basis, j - 1, n, M)) {
      const int J = j - 1;
      table.set({J, n, M, j, n, M}, -s0 * p.pow(M - J - 2) * off(J, n));
    }
  });
  return table;
}

namespace {

ReducedElementTable rs_table(const Sector& sector, const BasisMap& basis, const DeformationParams& p, bool is_r) {
  if (sector.light_like()) throw std::invalid_argument("no closed-form R/S table for the light-like sector");
  ReducedElementTable table(is_r ? "R" : "S");
  const double q = p.q();
  const double lam = p.lambda();
  const double k = std::pow(bracket(2, p), 1.5);
  const bool space = sector.kind() == SectorKind::SpaceLike;
  auto F = [&](int a) { return space ? curly(a, p) : bracket(a + 1, p); };
  for_each_ket(basis, [&](int j, int n, int M) {
    for (int d : {1, -1}) {
      const int n2 = n + d;
      const double den = space ? curly(n, p) * curly(n2, p) : bracket(n + 1, p) * bracket(n2 + 1, p);
      if (present(basis, j + 1, n2, M)) {
        const double pre = (is_r ? p.pow(2 * j - 1) : std::pow(q, -3)) * d /
                           (curly(j + 1, p) * k * lam * std::sqrt(bracket(2 * j + 1, p) * bracket(2 * j + 3, p)));
        table.set({j + 1, n2, M, j, n, M}, pre * sqrt_nonneg(F(d * (j + 1) + n2) * F(d * j + n2) / den));
      }
      if (j >= 1 && present(basis, j, n2, M)) {
        const double pre = (is_r ? 1.0 : -1.0) * std::pow(q, -3) / (curly(j + 1, p) * curly(j, p) * k);
        table.set({j, n2, M, j, n, M}, pre * sqrt_nonneg(F(d * j + n2) * F(n - d * j) / den));
      }
      if (present(basis, j - 1, n2, M)) {
        const int J = j - 1;
        const double pre = -(is_r ? p.pow(-2 * J - 5) : std::pow(q, -3)) * d /
                           (curly(J + 1, p) * k * lam * std::sqrt(bracket(2 * J + 1, p) * bracket(2 * J + 3, p)));
        table.set({J, n2, M, j, n, M}, pre * sqrt_nonneg(F(n2 - d * (J + 1)) * F(n - d * (J + 1)) / den));
      }
    }
  });
  return table;
}

double rho_product(const Sector& sector, const DeformationParams& p, int n, int M, int k0, int k1) {
  double out = 1.0;
  const double t = sector.t(n, M, p);
  const double r2 = sector.r2(n, M, p);
  for (int k = k0; k <= k1; ++k) out *= rho(k, r2, t, p);
  return out;
}

double ratio(double num, double den) {
  if (den == 0.0) return 0.0;
  return sqrt_nonneg(num / den);
}

}  // namespace

ReducedElementTable reduced_r_table(const Sector& sector, const BasisMap& basis, const DeformationParams& p) {
  if (sector.light_like()) return reduced_r_recursion(sector, basis, p, light_seed10(p), light_seed01(p));
  return rs_table(sector, basis, p, true);
}

ReducedElementTable reduced_s_table(const Sector& sector, const BasisMap& basis, const DeformationParams& p) {
  if (sector.light_like()) return reduced_s_from_r(reduced_r_table(sector, basis, p), p);
  return rs_table(sector, basis, p, false);
}

ReducedElementTable reduced_r_recursion(const Sector& sector, const BasisMap& basis, const DeformationParams& p,
                                        const RSeed& seed10, const RSeed& seed01) {
  ReducedElementTable table("R");
  const double q = p.q();
  const double b3 = bracket(3, p);
  for_each_ket(basis, [&](int j, int n, int M) {
    for (int d : {1, -1}) {
      const int n2 = n + d;
      if (present(basis, j + 1, n2, M)) {
        const int J = j;
        const double num = rho_product(sector, p, n2, M, 2, J + 1);
        const double den = rho_product(sector, p, n, M, 1, J);
        const double v = seed10(n2, n, M) * p.pow(2 * J) *
                         std::sqrt(b3 / (bracket(2 * J + 1, p) * bracket(2 * J + 3, p))) * ratio(num, den);
        table.set({j + 1, n2, M, j, n, M}, v);
      }
      if (present(basis, j - 1, n2, M)) {
        const int J = j - 1;
        const double num = rho_product(sector, p, n, M, 2, J + 1);
        const double den = rho_product(sector, p, n2, M, 1, J);
        const double v = seed01(n2, n, M) * p.pow(-2 * J) *
                         std::sqrt(b3 / (bracket(2 * J + 1, p) * bracket(2 * J + 3, p))) * ratio(num, den);
        table.set({J, n2, M, j, n, M}, v);
      }
      if (j >= 1 && present(basis, j, n2, M)) {
        const double t2 = sector.t(n2, M, p);
        const double t = sector.t(n, M, p);
        const double r = std::sqrt(sector.r2(n, M, p));
        if (r == 0.0) continue;
        const double num = rho_product(sector, p, n2, M, 2, j);
        const double den = rho_product(sector, p, n, M, 2, j);
        const double v = seed10(n2, n, M) / r * (t2 * curly(j, p) - t * curly(j + 1, p)) /
                         (curly(j, p) * curly(j + 1, p)) * bracket(2, p) * std::sqrt(b3) / (q * q) * ratio(num, den);
        table.set({j, n2, M, j, n, M}, v);
      }
    }
  });
  return table;
}

RSeed light_seed10(const DeformationParams& p) {
  const double k = std::pow(bracket(2, p), 2.5) * std::sqrt(bracket(3, p)) * p.lambda();
  const double q = p.q();
  return [k, q](int n2, int n, int) { return n2 == n + 1 ? 1.0 / k : -1.0 / (q * q * k); };
}

RSeed light_seed01(const DeformationParams& p) {
  const double k = std::pow(bracket(2, p), 2.5) * std::sqrt(bracket(3, p)) * p.lambda();
  const double q = p.q();
  return [k, q](int n2, int n, int) { return n2 == n + 1 ? -1.0 / (k * std::pow(q, 6)) : 1.0 / (k * std::pow(q, 4)); };
}

ReducedElementTable reduced_s_from_r(const ReducedElementTable& r, const DeformationParams& p) {
  ReducedElementTable s("S");
  for (const auto& [k, v] : r.entries()) {
    // k = <jp, np || R || j, n>; it fixes the S element with bra and ket swapped.
    const ReducedKey sk{k.j, k.n, k.M, k.jp, k.np, k.Mp};
    Complex val;
    if (k.jp == k.j) {
      val = -std::conj(v);
    } else if (k.jp == k.j + 1) {
      val = p.pow(-2 * (k.j + 1)) * std::conj(v);
    } else {
      val = p.pow(2 * (k.jp + 1)) * std::conj(v);
    }
    s.set(sk, val);
  }
  return s;
}

ReducedElementTable reduced_p_table(const Sector& sector, const BasisMap& basis, const DeformationParams& p) {
  if (sector.light_like()) {
    throw std::invalid_argument("the momenta have no representation on the light-like sector alone");
  }
  ReducedElementTable table("P");
  const double lam = p.lambda();
  const double b2 = bracket(2, p);
  const bool space = sector.kind() == SectorKind::SpaceLike;
  const Complex I(0.0, 1.0);
  auto br = [&](int a) { return bracket(a, p); };
  auto cu = [&](int a) { return curly(a, p); };
  auto qp = [&](int a) { return p.pow(a); };

  auto element = [&](int jp, int j, int n, int M, int dn, bool up) -> Complex {
    const double sc = sector.scale() * sector.sign() * qp(M);
    if (jp == j + 1) {
      const int J = j;
      const double pre = 1.0 / (cu(J + 1) * lam * sc) * std::sqrt(b2 / (br(2 * J + 1) * br(2 * J + 3)));
      if (space) {
        if (dn == 1)
          return 0.5 * I * (up ? qp(2 + 2 * J - n) : -qp(2 + n)) * pre *
                 sqrt_nonneg(cu(n + J + 2) * cu(n + J + 1) / (cu(n) * cu(n + 1)));
        return 0.5 * I * (up ? qp(2 + 2 * J + n) : -qp(2 - n)) * pre *
               sqrt_nonneg(cu(n - J - 2) * cu(n - J - 1) / (cu(n) * cu(n - 1)));
      }
      if (dn == 1)
        return 0.5 * I * (up ? qp(1 + 2 * J - n) : qp(3 + n)) * pre *
               sqrt_nonneg(br(n + J + 3) * br(n + J + 2) / (br(n + 2) * br(n + 1)));
      return -0.5 * I * (up ? qp(3 + 2 * J + n) : qp(1 - n)) * pre *
             sqrt_nonneg(br(n - J - 1) * br(n - J) / (br(n) * br(n + 1)));
    }
    if (jp == j) {
      if (j == 0) return 0.0;
      const double pre = b2 / (2.0 * cu(j) * cu(j + 1) * std::sqrt(b2) * sc);
      if (space) {
        if (dn == 1)
          return I * pre * (up ? qp(-n) : qp(2 + n)) * sqrt_nonneg(cu(n + j + 1) * cu(n - j) / (cu(n) * cu(n + 1)));
        return -I * pre * (up ? qp(n) : qp(2 - n)) * sqrt_nonneg(cu(n - j - 1) * cu(n + j) / (cu(n) * cu(n - 1)));
      }
      if (dn == 1)
        return I * pre * (up ? qp(-1 - n) : -qp(3 + n)) *
               sqrt_nonneg(br(n + j + 2) * br(n - j + 1) / (br(n + 2) * br(n + 1)));
      return I * pre * (up ? qp(1 + n) : -qp(1 - n)) * sqrt_nonneg(br(n + j + 1) * br(n - j) / (br(n) * br(n + 1)));
    }
    const int J = jp;
    const double pre = 1.0 / (cu(J + 1) * lam * sc) * std::sqrt(b2 / (br(2 * J + 1) * br(2 * J + 3)));
    if (space) {
      if (dn == 1)
        return -0.5 * I * (up ? qp(-2 - 2 * J - n) : -qp(2 + n)) * pre *
               sqrt_nonneg(cu(n - J) * cu(n - J - 1) / (cu(n) * cu(n + 1)));
      return -0.5 * I * (up ? qp(-2 - 2 * J + n) : -qp(2 - n)) * pre *
             sqrt_nonneg(cu(n + J + 1) * cu(n + J) / (cu(n) * cu(n - 1)));
    }
    if (dn == 1)
      return -0.5 * I * (up ? qp(-3 - 2 * J - n) : qp(3 + n)) * pre *
             sqrt_nonneg(br(n - J + 1) * br(n - J) / (br(n + 2) * br(n + 1)));
    return 0.5 * I * (up ? qp(-1 - 2 * J + n) : qp(1 - n)) * pre *
           sqrt_nonneg(br(n + J + 2) * br(n + J + 1) / (br(n) * br(n + 1)));
  };

  for_each_ket(basis, [&](int j, int n, int M) {
    for (int dn : {1, -1})
      for (int dM : {1, -1})
        for (int jp : {j - 1, j, j + 1}) {
          if (!present(basis, jp, n + dn, M + dM)) continue;
          const Complex v = element(jp, j, n, M, dn, dM == 1);
          if (v != Complex(0.0)) table.set({jp, n + dn, M + dM, j, n, M}, v);
        }
  });
  return table;
}


}  // namespace qmink
