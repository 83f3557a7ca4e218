#include <cmath>

#include "qmink/verify.hpp"

namespace qmink {

namespace {

const std::set<SectorKind> kAll{SectorKind::SpaceLike, SectorKind::TimeLikeForward, SectorKind::TimeLikeBackward,
                                SectorKind::LightLike};
const std::set<SectorKind> kMassive{SectorKind::SpaceLike, SectorKind::TimeLikeForward,
                                    SectorKind::TimeLikeBackward};

Expr G(const std::string& s) { return Expr::gen(s); }

std::string C(const std::string& stem, int a) { return stem + component_name(a); }

std::string idx(int a) { return std::string("[") + component_name(a) + "]"; }
std::string idx(int a, int b) { return std::string("[") + component_name(a) + component_name(b) + "]"; }

class Builder {
 public:
  explicit Builder(const DeformationParams& p)
      : p_(p), q_(p.q()), g_(metric3(p)), e_(epsilon3(p)), eta_(metric4(p)) {}

  std::vector<RelationSpec> build() {
    const double q = q_;
    const double q2 = q * q;
    const double q4 = q2 * q2;
    const double lam = p_.lambda();
    const double b2 = bracket(2, p_);
    const double b3 = bracket(3, p_);
    const double c2 = curly(2, p_);
    const Complex I(0.0, 1.0);

    // 1, 2: noncommutativity of coordinates and momenta
    for (const std::string stem : {"X", "P"}) {
      const int grp = stem == "X" ? 1 : 2;
      const bool mom = stem == "P";
      for (int a = 0; a < 3; ++a) {
        Expr lhs = Expr::zero();
        for (int c = 0; c < 3; ++c)
          for (int b = 0; b < 3; ++b)
            if (e_.mixed(c, b, a) != 0.0) lhs = lhs + Complex(e_.mixed(c, b, a)) * (G(C(stem, b)) * G(C(stem, c)));
        add(grp, stem + stem + idx(a), lhs, Complex(1.0 - q2) * (G(stem + "0") * G(C(stem, a))), mom);
        add(grp, stem + "0" + stem + idx(a), G(stem + "0") * G(C(stem, a)), G(C(stem, a)) * G(stem + "0"), mom);
      }
    }

    // 3: q-Lorentz algebra
    const FourIndexTensor rhat = build_rhat3(p_);
    for (int a = 0; a < 3; ++a) {
      add(3, "RR" + idx(a), eps_contract(a, "R", "R"), Complex(1.0 / (1.0 + q2)) * (G("U") * G(C("R", a))));
      add(3, "SS" + idx(a), eps_contract(a, "S", "S"), Complex(-1.0 / (1.0 + q2)) * (G("U") * G(C("S", a))));
      add(3, "UR" + idx(a), G("U") * G(C("R", a)), G(C("R", a)) * G("U"));
      add(3, "US" + idx(a), G("U") * G(C("S", a)), G(C("S", a)) * G("U"));
      for (int b = 0; b < 3; ++b) {
        Expr rhs = Expr::zero();
        for (int c = 0; c < 3; ++c)
          for (int d = 0; d < 3; ++d)
            if (rhat(a, b, c, d) != 0.0) rhs = rhs + Complex(q2 * rhat(a, b, c, d)) * (G(C("S", c)) * G(C("R", d)));
        add(3, "RS" + idx(a, b), G(C("R", a)) * G(C("S", b)), rhs);
      }
    }

    // 4: U and the Casimir operators
    const double k4 = (q4 - 1.0) * (q4 - 1.0);
    add(4, "U2", G("U") * G("U"), Expr::identity() + Complex(0.5 * k4) * (circ("R", "R") + circ("S", "S")));
    add(4, "U2-RoR", G("U") * G("U") - Expr::identity(), Complex(k4) * circ("R", "R"));

    // 5, 6: R, S, U reorder coordinates and momenta
    for (const std::string y : {"X", "P"}) transform_laws(y == "X" ? 5 : 6, y);

    // 7: scaling operator
    for (int a = 0; a < 4; ++a) {
      add(7, "LambdaX" + idx(a), G("Lambda") * G(C("X", a)), Complex(1.0 / q) * (G(C("X", a)) * G("Lambda")));
      add(7, "LambdaP" + idx(a), G("Lambda") * G(C("P", a)), Complex(q) * (G(C("P", a)) * G("Lambda")), true);
    }
    add(7, "LambdaU", G("Lambda") * G("U"), G("U") * G("Lambda"));
    for (int a = 0; a < 3; ++a) {
      add(7, "LambdaR" + idx(a), G("Lambda") * G(C("R", a)), G(C("R", a)) * G("Lambda"));
      add(7, "LambdaS" + idx(a), G("Lambda") * G(C("S", a)), G(C("S", a)) * G("Lambda"));
    }

    // 8: covariant Heisenberg relation
    const FourIndexTensor rinv = build_rmatrix4_inverse(RVariant::II, p_);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) {
        Expr lhs = G(C("P", a)) * G(C("X", b));
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d)
            if (std::abs(rinv(a, b, c, d)) > 1e-15)
              lhs = lhs - Complex(rinv(a, b, c, d) / q2) * (G(C("X", c)) * G(C("P", d)));
        Expr inner = Complex(q2 * (1.0 - q4)) * v(a, b);
        if (eta_.upper(a, b) != 0.0) inner = inner + Complex((1.0 + q4) * eta_.upper(a, b)) * G("U");
        add(8, "PX" + idx(a, b), lhs, Complex(0.0, -0.5) * (G("LambdaInv") * inner), true);
      }

    // 9: R - q^2 S and R + S are orthogonal to coordinates and momenta
    for (const std::string y : {"X", "P"}) {
      const bool mom = y == "P";
      Expr lhs = Expr::zero();
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          if (g_.lower(a, b) != 0.0) lhs = lhs + Complex(g_.lower(a, b)) * (G(C(y, a)) * (G(C("R", b)) - Complex(q2) * G(C("S", b))));
      add(9, y + "o(R-q2S)", lhs, Expr::zero(), mom);
      for (int a = 0; a < 3; ++a) {
        Expr rhs = Expr::zero();
        for (int c = 0; c < 3; ++c)
          for (int b = 0; b < 3; ++b)
            if (e_.mixed(c, b, a) != 0.0) rhs = rhs + Complex(e_.mixed(c, b, a)) * (G(C(y, b)) * (G(C("R", c)) + G(C("S", c))));
        add(9, y + "0(S-q2R)" + idx(a), G(y + "0") * (G(C("S", a)) - Complex(q2) * G(C("R", a))), rhs, mom);
      }
    }

    // 10
    add(10, "RoR=SoS", circ("R", "R"), circ("S", "S"));

    // 11: conjugation
    for (const std::string y : {"X", "P"}) {
      const bool mom = y == "P";
      for (int a = 0; a < 3; ++a) {
        Expr rhs = Expr::zero();
        for (int b = 0; b < 3; ++b)
          if (g_.lower(a, b) != 0.0) rhs = rhs + Complex(g_.lower(a, b)) * G(C(y, b));
        add(11, "conj" + y + idx(a), G(C(y, a)).adj(), rhs, mom);
      }
      add(11, "conj" + y + "[0]", G(y + "0").adj(), G(y + "0"), mom);
    }
    for (int a = 0; a < 3; ++a) {
      Expr rhs = Expr::zero();
      for (int b = 0; b < 3; ++b)
        if (g_.lower(a, b) != 0.0) rhs = rhs + Complex(-g_.lower(a, b)) * G(C("S", b));
      add(11, "conjR" + idx(a), G(C("R", a)).adj(), rhs);
    }
    add(11, "conjU", G("U").adj(), G("U"));
    add(11, "conjLambda", G("Lambda").adj(), Complex(q4) * G("LambdaInv"));

    // 12: rotations commute with time components and lengths
    for (int a = 0; a < 3; ++a) {
      add(12, "LX0" + idx(a), G(C("L", a)) * G("X0"), G("X0") * G(C("L", a)));
      add(12, "LP0" + idx(a), G(C("L", a)) * G("P0"), G("P0") * G(C("L", a)), true);
      add(12, "LXoX" + idx(a), G(C("L", a)) * circ("X", "X"), circ("X", "X") * G(C("L", a)));
      add(12, "LPoP" + idx(a), G(C("L", a)) * circ("P", "P"), circ("P", "P") * G(C("L", a)), true);
    }

    // 13
    for (int a = 0; a < 3; ++a) {
      Expr lhs = Expr::zero();
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          if (e_.mixed(b, c, a) != 0.0) lhs = lhs + Complex(e_.mixed(b, c, a)) * (G(C("L", c)) * G(C("L", b)));
      add(13, "epsLL" + idx(a), lhs, Complex(-1.0 / q2) * (G("W") * G(C("L", a))));
    }
    add(13, "LoL", Complex(q4 * (q2 - 1.0) * (q2 - 1.0)) * circ("L", "L"), G("W") * G("W") - Expr::identity());

    // 14: SU_q(2)
    add(14, "TT[+-]", Complex(1.0 / q) * (G("T+") * G("T-")) - Complex(q) * (G("T-") * G("T+")),
        Complex(1.0 / lam) * (Expr::identity() - G("tau")));
    add(14, "TT[tau+]", G("tau") * G("T+"), Complex(1.0 / q4) * (G("T+") * G("tau")));
    add(14, "TT[tau-]", G("tau") * G("T-"), Complex(q4) * (G("T-") * G("tau")));
    add(14, "casimir", casimir(), G("JJ"));
    add(14, "conjT[+]", G("T+").adj(), Complex(1.0 / q2) * G("T-"));
    add(14, "conjT[-]", G("T-").adj(), Complex(q2) * G("T+"));
    add(14, "conjtau", G("tau").adj(), G("tau"));

    // 15: L and W act on vectors
    for (const std::string y : {"X", "P"}) {
      const bool mom = y == "P";
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < 3; ++b) {
          Expr rhs = Expr::zero();
          if (g_.upper(a, b) != 0.0) rhs = rhs + Complex(g_.upper(a, b)) * circ(y, "L");
          for (int c = 0; c < 3; ++c)
            for (int d = 0; d < 3; ++d) {
              double co = 0.0;
              for (int k = 0; k < 3; ++k) co += e_.mixed(k, c, a) * e_.lower_upper_upper(d, k, b);
              if (std::abs(co) > 1e-15) rhs = rhs - Complex(co / q2) * (G(C(y, c)) * G(C("L", d)));
            }
          for (int c = 0; c < 3; ++c)
            if (e_.lower_upper_upper(c, a, b) != 0.0)
              rhs = rhs - Complex(e_.lower_upper_upper(c, a, b) / q4) * (G(C(y, c)) * G("W"));
          add(15, "L" + y + idx(a, b), G(C("L", a)) * G(C(y, b)), rhs, mom);
        }
        Expr rhs = Complex(q2 + 1.0 / q2 - 1.0) * (G(C(y, a)) * G("W"));
        for (int d = 0; d < 3; ++d)
          for (int c = 0; c < 3; ++c)
            if (e_.mixed(d, c, a) != 0.0)
              rhs = rhs + Complex((q2 - 1.0) * (q2 - 1.0) * e_.mixed(d, c, a)) * (G(C(y, c)) * G(C("L", d)));
        add(15, "W" + y + idx(a), G("W") * G(C(y, a)), rhs, mom);
      }
      add(15, "W" + y + "[0]", G("W") * G(y + "0"), G(y + "0") * G("W"), mom);
    }

    // 16: SU_q(2) acting on coordinates
    const double s = std::sqrt(1.0 + q2);
    add(16, "tauX[3]", G("tau") * G("X3"), G("X3") * G("tau"));
    add(16, "tauX[+]", G("tau") * G("X+"), Complex(1.0 / q4) * (G("X+") * G("tau")));
    add(16, "tauX[-]", G("tau") * G("X-"), Complex(q4) * (G("X-") * G("tau")));
    add(16, "T-X[3]", G("T-") * G("X3"), G("X3") * G("T-") + Complex(q * s) * G("X-"));
    add(16, "T+X[-]", G("T+") * G("X-"), Complex(q2) * (G("X-") * G("T+")) + Complex(s / q) * G("X3"));
    add(16, "T-X[-]", G("T-") * G("X-"), Complex(q2) * (G("X-") * G("T-")));
    add(16, "T+X[3]", G("T+") * G("X3"), G("X3") * G("T+") + Complex(s / q2) * G("X+"));
    add(16, "T+X[+]", G("T+") * G("X+"), Complex(1.0 / q2) * (G("X+") * G("T+")));
    add(16, "T-X[+]", G("T-") * G("X+"), Complex(1.0 / q2) * (G("X+") * G("T-")) + Complex(s) * G("X3"));

    // 17: complete set of commuting operators
    const std::vector<std::pair<std::string, Expr>> cset{
        {"X0", G("X0")}, {"XoX", circ("X", "X")}, {"T2", casimir()}, {"tau", G("tau")}};
    for (std::size_t i = 0; i < cset.size(); ++i)
      for (std::size_t k = i + 1; k < cset.size(); ++k)
        add(17, "[" + cset[i].first + "," + cset[k].first + "]", cset[i].second * cset[k].second,
            cset[k].second * cset[i].second);

    // 18: explicit Heisenberg relations
    const Expr XP = circ("X", "P");
    const Expr PX = circ("P", "X");
    const Expr X0P0 = G("X0") * G("P0");
    add(18, "XPe1a", Complex(q2 * b2) * (G("P0") * G("X0")) - Complex(q * c2) * X0P0 - Complex(lam) * XP,
        Complex(0.0, 0.5 * b2 * c2 * q4) * (G("LambdaInv") * G("U")), true);
    for (int a = 0; a < 3; ++a) {
      const Expr exp = eps_contract_ordered(a, "X", "P");
      add(18, "XPe1b" + idx(a),
          Complex(q2 * b2) * (G("P0") * G(C("X", a))) - Complex(q * c2) * (G(C("X", a)) * G("P0")) -
              Complex(lam * q2) * (G("X0") * G(C("P", a))) - Complex(lam) * exp,
          Complex(0.0, -0.5 * b2 * b2 * q4 * q2 * lam) * (G("LambdaInv") * (Complex(q2) * G(C("R", a)) + G(C("S", a)))),
          true);
      add(18, "XPe1c" + idx(a),
          Complex(q2 * b2) * (G(C("P", a)) * G("X0")) - Complex(q * c2) * (G("X0") * G(C("P", a))) -
              Complex(lam * q2) * (G(C("X", a)) * G("P0")) - Complex(lam) * exp,
          Complex(0.0, 0.5 * b2 * b2 * q4 * q2 * lam) * (G("LambdaInv") * (G(C("R", a)) + Complex(q2) * G(C("S", a)))),
          true);
      for (int b = 0; b < 3; ++b) {
        Expr lhs = Complex(b2) * (G(C("P", a)) * G(C("X", b)) - G(C("X", a)) * G(C("P", b)));
        for (int d = 0; d < 3; ++d)
          for (int c = 0; c < 3; ++c) {
            double co = 0.0;
            for (int x = 0; x < 3; ++x) co += e_.mixed(d, c, x) * e_.lower_upper_upper(x, a, b);
            if (std::abs(co) > 1e-15) lhs = lhs + Complex(2.0 / (q2 * q) * co) * (G(C("X", c)) * G(C("P", d)));
          }
        Expr inner = Expr::zero();
        for (int c = 0; c < 3; ++c)
          if (e_.lower_upper_upper(c, a, b) != 0.0)
            inner = inner + Complex(e_.lower_upper_upper(c, a, b)) * (G(C("X", c)) * G("P0") + G("X0") * G(C("P", c)));
        if (g_.upper(a, b) != 0.0) inner = inner + Complex(g_.upper(a, b)) * (XP - X0P0);
        lhs = lhs + Complex(lam / q2) * inner;
        Expr r = Expr::zero();
        for (int c = 0; c < 3; ++c)
          if (e_.lower_upper_upper(c, a, b) != 0.0)
            r = r + Complex(-q2 * lam * b2 * e_.lower_upper_upper(c, a, b)) * (G(C("R", c)) - G(C("S", c)));
        if (g_.upper(a, b) != 0.0) r = r + Complex(c2 * g_.upper(a, b)) * G("U");
        add(18, "XPe1d" + idx(a, b), lhs, Complex(0.0, -0.5 * b2 * q2) * (G("LambdaInv") * r), true);
      }
    }
    add(18, "XPe1e", PX - Complex(c2 / (q2 * q * b2)) * XP - Complex(lam * b3 / (q2 * b2)) * X0P0,
        Complex(0.0, -0.5 * q2 * c2 * b3) * (G("LambdaInv") * G("U")), true);
    const Expr lamsum = Complex(q4) * G("LambdaInv") + G("Lambda");
    add(18, "PX2a", G("P0") * G("X0") - X0P0, Complex(0.0, 0.5) * (lamsum * G("U")), true);
    add(18, "PX2b", PX - XP, Complex(0.0, -0.5 * b3) * (lamsum * G("U")), true);
    add(18, "PX2c", Complex(lam) * (XP - X0P0), Complex(0.0, 0.5 * q2 * b2) * ((G("Lambda") - G("LambdaInv")) * G("U")),
        true);
    add(18, "XPX0",
        XP * G("X0") - Complex(2.0 / (q * b2)) * (G("X0") * XP) - Complex(lam / b2) * (circ("X", "X") * G("P0")),
        Complex(0.0, q4 * lam * b2) * (circ("X", "R") * G("LambdaInv")), true);

    return std::move(out_);
  }

 private:
  void add(int group, const std::string& name, const Expr& lhs, const Expr& rhs, bool momenta = false) {
    RelationSpec r;
    r.name = name;
    r.group = group;
    r.group_title = group_title(group);
    r.lhs = lhs;
    r.rhs = rhs;
    r.needs_momenta = momenta;
    r.sectors = kAll;
    out_.push_back(std::move(r));
  }

  Expr circ(const std::string& a, const std::string& b) const {
    return G(C(a, kThree)) * G(C(b, kThree)) - Complex(q_) * (G(C(a, kPlus)) * G(C(b, kMinus))) -
           Complex(1.0 / q_) * (G(C(a, kMinus)) * G(C(b, kPlus)));
  }

  // sum_{C,B} eps_{CB}^A Y^B Z^C
  Expr eps_contract(int a, const std::string& y, const std::string& z) const {
    Expr out = Expr::zero();
    for (int c = 0; c < 3; ++c)
      for (int b = 0; b < 3; ++b)
        if (e_.mixed(c, b, a) != 0.0) out = out + Complex(e_.mixed(c, b, a)) * (G(C(y, b)) * G(C(z, c)));
    return out;
  }

  // sum_{D,C} eps_{DC}^A Y^C Z^D
  Expr eps_contract_ordered(int a, const std::string& y, const std::string& z) const {
    Expr out = Expr::zero();
    for (int d = 0; d < 3; ++d)
      for (int c = 0; c < 3; ++c)
        if (e_.mixed(d, c, a) != 0.0) out = out + Complex(e_.mixed(d, c, a)) * (G(C(y, c)) * G(C(z, d)));
    return out;
  }

  Expr v(int a, int b) const {
    const double q2 = q_ * q_;
    if (a == kZero && b == kZero) return Expr::zero();
    if (b == kZero) return G(C("R", a)) + Complex(q2) * G(C("S", a));
    if (a == kZero) return Complex(-q2) * G(C("R", b)) - G(C("S", b));
    Expr out = Expr::zero();
    for (int c = 0; c < 3; ++c)
      if (e_.lower_upper_upper(c, a, b) != 0.0)
        out = out + Complex(e_.lower_upper_upper(c, a, b)) * (G(C("R", c)) - G(C("S", c)));
    return out;
  }

  Expr casimir() const {
    const double q = q_;
    const double lam = p_.lambda();
    return Complex(q) * (G("N") * G("T-") * G("T+")) + Complex(q / (lam * lam)) * G("N") +
           Complex(1.0 / (q * lam * lam)) * (G("tau_half") - Complex(q * q + 1.0) * Expr::identity());
  }

  void transform_laws(int grp, const std::string& y) {
    const double q = q_;
    const double q2 = q * q;
    const bool mom = y == "P";
    const double k = (q2 * q2 + 1.0) / ((q2 + 1.0) * q);
    const std::string y0 = y + "0";
    for (int a = 0; a < 3; ++a) {
      Expr t = Expr::zero();
      for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m)
          if (e_.mixed(l, m, a) != 0.0) t = t + Complex(e_.mixed(l, m, a)) * (G(C(y, m)) * G(C("R", l)));
      add(grp, "R" + y + "0" + idx(a), G(C("R", a)) * G(y0),
          Complex(k) * (G(y0) * G(C("R", a))) + Complex((q2 - 1.0) / ((q2 + 1.0) * q)) * t -
              Complex(q / ((1.0 + q2) * (1.0 + q2))) * (G(C(y, a)) * G("U")),
          mom);
      Expr ts = Expr::zero();
      for (int l = 0; l < 3; ++l)
        for (int m = 0; m < 3; ++m)
          if (e_.mixed(l, m, a) != 0.0) ts = ts + Complex(e_.mixed(l, m, a)) * (G(C(y, m)) * G(C("S", l)));
      add(grp, "S" + y + "0" + idx(a), G(C("S", a)) * G(y0),
          Complex(k) * (G(y0) * G(C("S", a))) + Complex((q2 - 1.0) / ((q2 + 1.0) * q)) * ts -
              Complex(1.0 / (q * (1.0 + q2) * (1.0 + q2))) * (G(C(y, a)) * G("U")),
          mom);
      Expr tu = Expr::zero();
      for (int c = 0; c < 3; ++c)
        for (int b = 0; b < 3; ++b)
          if (e_.mixed(c, b, a) != 0.0) tu = tu + Complex(e_.mixed(c, b, a)) * (G(C(y, b)) * G(C("R", c)));
      add(grp, "U" + y + idx(a), G("U") * G(C(y, a)),
          Complex(k) * (G(C(y, a)) * G("U")) - Complex(q * (q2 - 1.0) * (q2 - 1.0)) * (G(y0) * G(C("R", a))) -
              Complex((q2 - 1.0) * (q2 - 1.0) / q) * tu,
          mom);
      for (int b = 0; b < 3; ++b) {
        for (const std::string o : {"R", "S"}) {
          const bool isr = o == "R";
          const double c1 = isr ? q * (1.0 + q2) : (1.0 + q2) / q;
          const double c3 = isr ? -(q2 - 1.0) / q : q * (q2 - 1.0);
          const double c5 = isr ? -1.0 / (q * (1.0 + q2)) : -q / (1.0 + q2);
          const double c6 = isr ? 1.0 / (q * (1.0 + q2)) : -1.0 / (q * (1.0 + q2));
          Expr rhs = Complex(c1) * (G(C(y, a)) * G(C(o, b)));
          for (int c = 0; c < 3; ++c)
            if (e_.lower_upper_upper(c, a, b) != 0.0)
              rhs = rhs + Complex(-(q2 - 1.0) / q * e_.lower_upper_upper(c, a, b)) * (G(y0) * G(C(o, c)));
          if (g_.upper(a, b) != 0.0) {
            for (int m = 0; m < 3; ++m)
              for (int c = 0; c < 3; ++c)
                if (g_.lower(m, c) != 0.0)
                  rhs = rhs + Complex(c3 * g_.upper(a, b) * g_.lower(m, c)) * (G(C(y, m)) * G(C(o, c)));
            rhs = rhs + Complex(c5 * g_.upper(a, b)) * (G(y0) * G("U"));
          }
          for (int s = 0; s < 3; ++s)
            for (int t2 = 0; t2 < 3; ++t2) {
              double ee = 0.0;
              for (int x = 0; x < 3; ++x) ee += e_.upper(a, b, x) * e_.lower(s, t2, x);
              if (std::abs(ee) > 1e-15) rhs = rhs + Complex(-2.0 / q * ee) * (G(C(y, t2)) * G(C(o, s)));
            }
          for (int m = 0; m < 3; ++m)
            if (e_.lower_upper_upper(m, a, b) != 0.0)
              rhs = rhs + Complex(c6 * e_.lower_upper_upper(m, a, b)) * (G(C(y, m)) * G("U"));
          add(grp, o + y + idx(a, b), G(C(o, a)) * G(C(y, b)), Complex(1.0 / (1.0 + q2)) * rhs, mom);
        }
      }
    }
    add(grp, "U" + y + "0", G("U") * G(y0),
        Complex(k) * (G(y0) * G("U")) - Complex((q2 - 1.0) * (q2 - 1.0) / q) * circ(y, "R"), mom);
  }

  DeformationParams p_;
  double q_;
  Metric3 g_;
  Epsilon3 e_;
  Metric4 eta_;
  std::vector<RelationSpec> out_;
};

}  // namespace

std::string group_title(int group) {
  static const char* titles[] = {"",
                                 "coordinate noncommutativity",
                                 "momentum noncommutativity",
                                 "q-Lorentz algebra R, S, U",
                                 "U and the Lorentz Casimirs",
                                 "R, S, U acting on coordinates",
                                 "R, S, U acting on momenta",
                                 "scaling operator",
                                 "covariant Heisenberg relation",
                                 "orthogonality of R, S to X and P",
                                 "R o R = S o S",
                                 "conjugation",
                                 "rotations commute with X0, P0, lengths",
                                 "L algebra",
                                 "SU_q(2) algebra, Casimir, conjugation",
                                 "L, W acting on vectors",
                                 "SU_q(2) acting on coordinates",
                                 "complete set of commuting operators",
                                 "explicit Heisenberg relations"};
  if (group < 1 || group > kRelationGroups) return "?";
  return titles[group];
}

std::vector<RelationSpec> relation_catalog(const DeformationParams& p) { return Builder(p).build(); }

}  // namespace qmink
