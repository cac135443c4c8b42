#include "formcert/rational.hpp"

#include <ostream>

#include "formcert/error.hpp"

namespace formcert {

Rational::Rational(long n, long d) {
  if (d == 0) throw ValidationError("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  if (s.empty()) throw ValidationError("empty rational literal");
  mpq_class v;
  if (v.set_str(s, 10) != 0) throw ValidationError("malformed rational literal: '" + s + "'");
  if (sgn(v.get_den()) == 0) throw ValidationError("rational literal with zero denominator: '" + s + "'");
  v.canonicalize();
  return Rational(std::move(v));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ValidationError("rational division by zero");
  v_ /= o.v_;
  return *this;
}

std::string Rational::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::uint64_t Rational::mod(std::uint64_t prime) const {
  mpz_class p(static_cast<unsigned long>(prime));
  mpz_class den_res = v_.get_den() % p;
  if (sgn(den_res) == 0) throw ValidationError("denominator vanishes modulo prime");
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den_res.get_mpz_t(), p.get_mpz_t()) == 0)
    throw ValidationError("denominator not invertible modulo prime");
  mpz_class num_res = v_.get_num() % p;
  if (sgn(num_res) < 0) num_res += p;
  mpz_class r = (num_res * inv) % p;
  return static_cast<std::uint64_t>(r.get_ui());
}

Rational Rational::factorial(int n) {
  if (n < 0) throw ValidationError("factorial of negative integer");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace formcert
