#include "qf/arith/quaternion.hpp"

namespace qf {

QuaternionAlgebra::QuaternionAlgebra(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(a_) == 0 || sgn(b_) == 0) throw DomainError("quaternion algebra constants must be nonzero");
}

std::string QuaternionAlgebra::name() const { return "(" + to_string(a_) + "," + to_string(b_) + ")_Q"; }

QuaternionAlgebra::Elem QuaternionAlgebra::i() const { return make(0, 1, 0, 0); }
QuaternionAlgebra::Elem QuaternionAlgebra::j() const { return make(0, 0, 1, 0); }
QuaternionAlgebra::Elem QuaternionAlgebra::ij() const { return make(0, 0, 0, 1); }

bool QuaternionAlgebra::is_zero(const Elem& x) const {
  for (const auto& v : x.c) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

QuaternionAlgebra::Elem QuaternionAlgebra::add(const Elem& x, const Elem& y) const {
  Quat z;
  for (int k = 0; k < 4; ++k) z.c[k] = x.c[k] + y.c[k];
  return z;
}

QuaternionAlgebra::Elem QuaternionAlgebra::sub(const Elem& x, const Elem& y) const {
  Quat z;
  for (int k = 0; k < 4; ++k) z.c[k] = x.c[k] - y.c[k];
  return z;
}

QuaternionAlgebra::Elem QuaternionAlgebra::neg(const Elem& x) const {
  Quat z;
  for (int k = 0; k < 4; ++k) z.c[k] = -x.c[k];
  return z;
}

QuaternionAlgebra::Elem QuaternionAlgebra::mul(const Elem& x, const Elem& y) const {
  const auto& [x0, x1, x2, x3] = x.c;
  const auto& [y0, y1, y2, y3] = y.c;
  Quat z;
  z.c[0] = x0 * y0 + a_ * x1 * y1 + b_ * x2 * y2 - a_ * b_ * x3 * y3;
  z.c[1] = x0 * y1 + x1 * y0 - b_ * x2 * y3 + b_ * x3 * y2;
  z.c[2] = x0 * y2 + x2 * y0 + a_ * x1 * y3 - a_ * x3 * y1;
  z.c[3] = x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1;
  return z;
}

QuaternionAlgebra::Elem QuaternionAlgebra::conj(const Elem& x) const {
  return make(x.c[0], -x.c[1], -x.c[2], -x.c[3]);
}

Rational QuaternionAlgebra::nrd(const Elem& x) const {
  const auto& [x0, x1, x2, x3] = x.c;
  return x0 * x0 - a_ * x1 * x1 - b_ * x2 * x2 + a_ * b_ * x3 * x3;
}

QuaternionAlgebra::Elem QuaternionAlgebra::inv(const Elem& x) const {
  Rational n = nrd(x);
  if (sgn(n) == 0) throw NotInvertible("quaternion of reduced norm zero in " + name());
  Quat z = conj(x);
  for (auto& v : z.c) v /= n;
  return z;
}

std::string to_string(const Quat& x) {
  static const char* units[4] = {"", "i", "j", "ij"};
  std::string out;
  for (int k = 0; k < 4; ++k) {
    if (sgn(x.c[k]) == 0) continue;
    std::string coeff = to_string(x.c[k]);
    if (k > 0 && (coeff == "1" || coeff == "-1")) coeff.pop_back();
    if (!out.empty() && coeff[0] != '-') out += "+";
    out += coeff + units[k];
  }
  return out.empty() ? "0" : out;
}

}  // namespace qf
