#include "pellrep/precision.hpp"
#include "real_expr_node.hpp"

#include <sstream>

namespace pellrep {

namespace {

using Node = RealExpr::Node;

std::shared_ptr<const Node> make_rational(const mpq_class& value) {
  auto node = std::make_shared<Node>();
  node->kind = RealExpr::Kind::Rational;
  node->value = value;
  node->value.canonicalize();
  return node;
}

mpq_class rational_pow(const mpq_class& base, long exponent) {
  mpz_class num, den;
  const auto e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  mpq_class out = exponent < 0 ? mpq_class(den, num) : mpq_class(num, den);
  out.canonicalize();
  return out;
}

}  // namespace

RealExpr::RealExpr(long value) : node_(make_rational(mpq_class(value))) {}
RealExpr::RealExpr(const mpz_class& value) : node_(make_rational(mpq_class(value))) {}
RealExpr::RealExpr(const mpq_class& value) : node_(make_rational(value)) {}

RealExpr RealExpr::sqrt_of(const mpz_class& radicand) {
  if (sgn(radicand) < 0) throw InvalidArgument("sqrt of a negative integer");
  if (mpz_perfect_square_p(radicand.get_mpz_t())) {
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), radicand.get_mpz_t());
    return RealExpr(root);
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Sqrt;
  node->radicand = radicand;
  node->exact = false;
  return RealExpr(std::shared_ptr<const Node>(std::move(node)));
}

RealExpr RealExpr::log_of(const RealExpr& argument) {
  if (argument.is_exact() && argument.node_->value == 1) return RealExpr(0L);
  auto node = std::make_shared<Node>();
  node->kind = Kind::Log;
  node->children = {argument};
  node->exact = false;
  return RealExpr(std::shared_ptr<const Node>(std::move(node)));
}

RealExpr RealExpr::pow(const RealExpr& base, long exponent) {
  if (exponent == 0) return RealExpr(1L);
  if (exponent == 1) return base;
  if (base.is_exact() && !(sgn(base.node_->value) == 0 && exponent < 0)) {
    return RealExpr(rational_pow(base.node_->value, exponent));
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Pow;
  node->exponent = exponent;
  node->children = {base};
  node->exact = false;
  return RealExpr(std::shared_ptr<const Node>(std::move(node)));
}

RealExpr RealExpr::alpha() { return RealExpr(1L) + sqrt_of(2); }
RealExpr RealExpr::beta() { return RealExpr(1L) - sqrt_of(2); }

namespace {

RealExpr::Kind kind_of(char op) {
  switch (op) {
    case '+': return RealExpr::Kind::Add;
    case '-': return RealExpr::Kind::Sub;
    case '*': return RealExpr::Kind::Mul;
    default: return RealExpr::Kind::Div;
  }
}

}  // namespace

// Exact operands are folded eagerly; division by an exact zero is left in
// the tree so that eval() reports it.
#define PELLREP_BINARY_OP(OP, CH)                                                     \
  RealExpr operator OP(const RealExpr& a, const RealExpr& b) {                        \
    if (a.is_exact() && b.is_exact() && !(CH == '/' && sgn(b.node_->value) == 0)) {   \
      return RealExpr(mpq_class(a.node_->value OP b.node_->value));                   \
    }                                                                                 \
    auto node = std::make_shared<RealExpr::Node>();                                   \
    node->kind = kind_of(CH);                                                         \
    node->children = {a, b};                                                          \
    node->exact = false;                                                              \
    return RealExpr(std::shared_ptr<const RealExpr::Node>(std::move(node)));          \
  }

PELLREP_BINARY_OP(+, '+')
PELLREP_BINARY_OP(-, '-')
PELLREP_BINARY_OP(*, '*')
PELLREP_BINARY_OP(/, '/')

#undef PELLREP_BINARY_OP

RealExpr operator-(const RealExpr& a) {
  if (a.is_exact()) return RealExpr(mpq_class(-a.node_->value));
  auto node = std::make_shared<RealExpr::Node>();
  node->kind = RealExpr::Kind::Neg;
  node->children = {a};
  node->exact = false;
  return RealExpr(std::shared_ptr<const RealExpr::Node>(std::move(node)));
}

RealExpr::Kind RealExpr::kind() const { return node_->kind; }

bool RealExpr::is_exact() const { return node_->exact; }

std::optional<mpq_class> RealExpr::exact_value() const {
  if (node_->kind == Kind::Rational) return node_->value;
  return std::nullopt;
}

namespace {

void render(const RealExpr& e, std::ostream& os) {
  const Node& n = e.node();
  switch (n.kind) {
    case RealExpr::Kind::Rational:
      if (sgn(n.value) < 0 || n.value.get_den() != 1) {
        os << '(' << n.value.get_str() << ')';
      } else {
        os << n.value.get_str();
      }
      return;
    case RealExpr::Kind::Sqrt:
      os << "sqrt(" << n.radicand.get_str() << ')';
      return;
    case RealExpr::Kind::Log:
      os << "log(";
      render(n.children[0], os);
      os << ')';
      return;
    case RealExpr::Kind::Neg:
      os << "-(";
      render(n.children[0], os);
      os << ')';
      return;
    case RealExpr::Kind::Pow:
      os << '(';
      render(n.children[0], os);
      os << ")^" << n.exponent;
      return;
    default: {
      const char* op = n.kind == RealExpr::Kind::Add   ? " + "
                       : n.kind == RealExpr::Kind::Sub ? " - "
                       : n.kind == RealExpr::Kind::Mul ? "*"
                                                       : "/";
      os << '(';
      render(n.children[0], os);
      os << op;
      render(n.children[1], os);
      os << ')';
      return;
    }
  }
}

}  // namespace

std::string RealExpr::to_string() const {
  std::ostringstream os;
  render(*this, os);
  return os.str();
}

RealExpr log(const RealExpr& x) { return RealExpr::log_of(x); }
RealExpr sqrt(const mpz_class& radicand) { return RealExpr::sqrt_of(radicand); }

}  // namespace pellrep
