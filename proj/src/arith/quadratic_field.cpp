#include "qf/arith/quadratic_field.hpp"

namespace qf {

QuadraticField::QuadraticField(std::int64_t m) : m_(m) {
  if (m == 0 || m == 1) throw DomainError("Q(sqrt m) needs m != 0, 1");
  if (squarefree_part(Rational(static_cast<long>(m))) != Integer(static_cast<long>(m)))
    throw DomainError("Q(sqrt m) needs squarefree m, got " + std::to_string(m));
}

std::string to_string(const QuadElem& x, std::int64_t m) {
  const std::string root = m == -1 ? "i" : "sqrt(" + std::to_string(m) + ")";
  if (sgn(x.b) == 0) return to_string(x.a);
  std::string b = x.b == 1 ? root : (x.b == -1 ? "-" + root : to_string(x.b) + "*" + root);
  if (sgn(x.a) == 0) return b;
  if (b[0] == '-') return to_string(x.a) + b;
  return to_string(x.a) + "+" + b;
}

}  // namespace qf
