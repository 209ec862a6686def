#include "ospo/rational.hpp"

#include <stdexcept>

namespace ospo {

Rat::Rat(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rat(mpq_class(1 / v_));
}

Rat Rat::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  mpq_class out(1), base(v_);
  while (e) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return Rat(out);
}

static mpz_class parse_int(std::string_view s) {
  std::string t(s);
  size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (t.size() == start) throw std::invalid_argument("bad integer: '" + t + "'");
  for (size_t i = start; i < t.size(); ++i)
    if (t[i] < '0' || t[i] > '9') throw std::invalid_argument("bad integer: '" + t + "'");
  if (t[0] == '+') t.erase(0, 1);
  return mpz_class(t, 10);
}

Rat Rat::from_parts(std::string_view num, std::string_view den) {
  mpz_class n = parse_int(num), d = parse_int(den);
  if (d == 0) throw std::domain_error("zero denominator");
  return Rat(mpq_class(n, d));
}

Rat Rat::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_parts(text, "1");
  return from_parts(text.substr(0, slash), text.substr(slash + 1));
}

bool Rat::fits_int64() const {
  return v_.get_num().fits_slong_p() && v_.get_den().fits_slong_p();
}
std::int64_t Rat::num_i64() const { return v_.get_num().get_si(); }
std::int64_t Rat::den_i64() const { return v_.get_den().get_si(); }

std::string Rat::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace ospo
