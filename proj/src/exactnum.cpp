#include "chernops/exactnum.hpp"

namespace chernops {

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

void require_prime(unsigned long p) {
  if (!is_prime(p)) throw MathError("NotPrime", std::to_string(p) + " is not prime");
}

Rat::Rat(long num, long den) {
  if (den == 0) throw MathError("ZeroDenominator", "rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw MathError("DivisionByZero", "rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rat Rat::parse(std::string_view s) {
  std::string str(s);
  if (str.empty()) throw MathError("ParseError", "empty rational literal");
  mpq_class q;
  if (q.set_str(str, 10) != 0)
    throw MathError("ParseError", "bad rational literal '" + str + "'");
  if (q.get_den() == 0) throw MathError("ZeroDenominator", "rational with zero denominator");
  q.canonicalize();
  return Rat(std::move(q));
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat rat_pow(const Rat& x, unsigned long e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.den().get_mpz_t(), e);
  return Rat(mpq_class(num) / mpq_class(den));
}

unsigned long ulong_pow(unsigned long base, unsigned exp) {
  unsigned long r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > (~0ul) / base)
      throw MathError("Overflow", "power does not fit a machine word");
    r *= base;
  }
  return r;
}

std::optional<long> nu_p(const Rat& x, unsigned long p) {
  require_prime(p);
  if (x.is_zero()) return std::nullopt;
  mpz_class pz(static_cast<unsigned long>(p)), tmp;
  long vnum = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), x.num().get_mpz_t(), pz.get_mpz_t()));
  long vden = static_cast<long>(
      mpz_remove(tmp.get_mpz_t(), x.den().get_mpz_t(), pz.get_mpz_t()));
  return vnum - vden;
}

bool is_p_integral(const Rat& x, unsigned long p) {
  auto v = nu_p(x, p);
  return !v.has_value() || *v >= 0;
}

bool is_p_unit(const Rat& x, unsigned long p) {
  auto v = nu_p(x, p);
  return v.has_value() && *v == 0;
}

namespace {

unsigned long mod_reduce(long v, unsigned long p) {
  long m = v % static_cast<long>(p);
  if (m < 0) m += static_cast<long>(p);
  return static_cast<unsigned long>(m);
}

}  // namespace

Fp::Fp(unsigned long p, long value) : p_(p) {
  require_prime(p);
  v_ = mod_reduce(value, p);
}

Fp::Fp(unsigned long p, const mpz_class& value) : p_(p) {
  require_prime(p);
  mpz_class m = value % mpz_class(p);
  if (m < 0) m += mpz_class(p);
  v_ = m.get_ui();
}

Fp Fp::inv() const {
  if (v_ == 0) throw MathError("DivisionByZero", "inverse of zero in F_p");
  // Fermat: v^(p-2) mod p; p is small.
  unsigned long r = 1, b = v_;
  unsigned long e = p_ - 2;
  while (e) {
    if (e & 1) r = (r * b) % p_;
    b = (b * b) % p_;
    e >>= 1;
  }
  return Fp(p_, static_cast<long>(r));
}

namespace {
void require_same_p(const Fp& a, const Fp& b) {
  if (a.p() != b.p())
    throw MathError("FieldMismatch", "F_p arithmetic over different primes");
}
}  // namespace

Fp operator+(const Fp& a, const Fp& b) {
  require_same_p(a, b);
  return Fp(a.p(), static_cast<long>((a.value() + b.value()) % a.p()));
}

Fp operator-(const Fp& a, const Fp& b) {
  require_same_p(a, b);
  return Fp(a.p(), static_cast<long>(a.value()) - static_cast<long>(b.value()));
}

Fp operator*(const Fp& a, const Fp& b) {
  require_same_p(a, b);
  return Fp(a.p(), static_cast<long>((a.value() * b.value()) % a.p()));
}

bool operator==(const Fp& a, const Fp& b) {
  require_same_p(a, b);
  return a.value() == b.value();
}

Fp reduce_mod_p(const Rat& x, unsigned long p) {
  require_prime(p);
  if (!is_p_integral(x, p))
    throw MathError("NotPIntegral", x.str() + " is not p-integral at p=" + std::to_string(p));
  Fp num(p, x.num());
  Fp den(p, x.den());
  return num * den.inv();
}

}  // namespace chernops
