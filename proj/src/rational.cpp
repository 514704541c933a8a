#include "dpqs/rational.hpp"

#include <ostream>

namespace dpqs {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  const std::string num(text.substr(0, slash));
  mpz_class n, d(1);
  if (num.empty() || n.set_str(num, 10) != 0)
    throw std::invalid_argument("Rational: bad numerator in '" + std::string(text) + "'");
  if (slash != std::string_view::npos) {
    const std::string den(text.substr(slash + 1));
    if (den.empty() || d.set_str(den, 10) != 0)
      throw std::invalid_argument("Rational: bad denominator in '" + std::string(text) + "'");
    if (sgn(d) == 0) throw std::domain_error("Rational: zero denominator");
  }
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace dpqs
