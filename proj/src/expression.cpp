#include <sstream>

#include "qmink/verify.hpp"

namespace qmink {

struct Expr::Node {
  Kind kind;
  std::string name;
  Complex coef{1.0, 0.0};
  std::vector<Expr> children;
};

Expr Expr::gen(const std::string& name) { return Expr(std::make_shared<Node>(Node{Kind::Generator, name, 1.0, {}})); }

Expr Expr::identity() { return Expr(std::make_shared<Node>(Node{Kind::Identity, "1", 1.0, {}})); }

Expr Expr::zero() { return Expr(std::make_shared<Node>(Node{Kind::Sum, "", 1.0, {}})); }

Expr::Expr() : Expr(zero()) {}

Expr::Kind Expr::kind() const { return node_->kind; }

Expr Expr::adj() const { return Expr(std::make_shared<Node>(Node{Kind::Adjoint, "", 1.0, {*this}})); }

Expr operator+(const Expr& a, const Expr& b) {
  Expr::Node n{Expr::Kind::Sum, "", 1.0, {}};
  for (const Expr& e : {a, b}) {
    if (e.kind() == Expr::Kind::Sum) {
      n.children.insert(n.children.end(), e.node_->children.begin(), e.node_->children.end());
    } else {
      n.children.push_back(e);
    }
  }
  return Expr(std::make_shared<Expr::Node>(std::move(n)));
}

Expr operator-(const Expr& a, const Expr& b) { return a + Complex(-1.0) * b; }

Expr operator*(const Expr& a, const Expr& b) {
  Expr::Node n{Expr::Kind::Product, "", 1.0, {}};
  for (const Expr& e : {a, b}) {
    if (e.kind() == Expr::Kind::Product) {
      n.children.insert(n.children.end(), e.node_->children.begin(), e.node_->children.end());
    } else {
      n.children.push_back(e);
    }
  }
  return Expr(std::make_shared<Expr::Node>(std::move(n)));
}

Expr operator*(Complex c, const Expr& a) {
  if (a.kind() == Expr::Kind::Sum) {
    Expr::Node n{Expr::Kind::Sum, "", 1.0, {}};
    for (const Expr& e : a.node_->children) n.children.push_back(c * e);
    return Expr(std::make_shared<Expr::Node>(std::move(n)));
  }
  if (a.kind() == Expr::Kind::Scale) return (c * a.node_->coef) * a.node_->children[0];
  return Expr(std::make_shared<Expr::Node>(Expr::Node{Expr::Kind::Scale, "", c, {a}}));
}

SparseMatrix Expr::evaluate(const OperatorSet& ops) const {
  const auto dim = static_cast<Eigen::Index>(ops.basis().size());
  switch (node_->kind) {
    case Kind::Generator:
      return ops.get(node_->name).matrix();
    case Kind::Identity: {
      SparseMatrix m(dim, dim);
      m.setIdentity();
      return m;
    }
    case Kind::Scale:
      return node_->coef * node_->children[0].evaluate(ops);
    case Kind::Sum: {
      SparseMatrix m(dim, dim);
      for (const Expr& e : node_->children) m += e.evaluate(ops);
      return m;
    }
    case Kind::Product: {
      SparseMatrix m = node_->children[0].evaluate(ops);
      for (std::size_t i = 1; i < node_->children.size(); ++i) m = (m * node_->children[i].evaluate(ops)).pruned();
      return m;
    }
    case Kind::Adjoint:
      return node_->children[0].evaluate(ops).adjoint();
  }
  return SparseMatrix(dim, dim);
}

ShiftBudget Expr::budget(const OperatorSet& ops) const {
  ShiftBudget b;
  switch (node_->kind) {
    case Kind::Generator:
      return ops.get(node_->name).reach();
    case Kind::Identity:
      return b;
    case Kind::Scale:
    case Kind::Adjoint:
      return node_->children[0].budget(ops);
    case Kind::Sum:
      for (const Expr& e : node_->children) b = b.max(e.budget(ops));
      return b;
    case Kind::Product:
      for (const Expr& e : node_->children) b = b + e.budget(ops);
      return b;
  }
  return b;
}

std::vector<Expr> Expr::terms() const {
  if (node_->kind == Kind::Sum) return node_->children;
  return {*this};
}

void Expr::collect_generators(std::set<std::string>& out) const {
  if (node_->kind == Kind::Generator) out.insert(node_->name);
  for (const Expr& e : node_->children) e.collect_generators(out);
}

std::string Expr::str() const {
  std::ostringstream os;
  switch (node_->kind) {
    case Kind::Generator:
      os << node_->name;
      break;
    case Kind::Identity:
      os << "1";
      break;
    case Kind::Scale:
      os << "(" << node_->coef.real();
      if (node_->coef.imag() != 0.0) os << (node_->coef.imag() < 0 ? "" : "+") << node_->coef.imag() << "i";
      os << ")*" << node_->children[0].str();
      break;
    case Kind::Sum:
      if (node_->children.empty()) os << "0";
      for (std::size_t i = 0; i < node_->children.size(); ++i) os << (i ? " + " : "") << node_->children[i].str();
      break;
    case Kind::Product:
      for (std::size_t i = 0; i < node_->children.size(); ++i) {
        const bool paren = node_->children[i].kind() == Kind::Sum;
        os << (i ? " " : "") << (paren ? "(" : "") << node_->children[i].str() << (paren ? ")" : "");
      }
      break;
    case Kind::Adjoint:
      os << "(" << node_->children[0].str() << ")^dag";
      break;
  }
  return os.str();
}

}  // namespace qmink
