#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chernops {

// Error with a stable machine-readable code ("NotPIntegral", "NotReversible", ...).
class MathError : public std::runtime_error {
 public:
  MathError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

bool is_prime(unsigned long n);
void require_prime(unsigned long p);

// Exact rational in lowest terms, denominator > 0. Zero is 0/1.
class Rat {
 public:
  Rat() : v_(0) {}
  Rat(long n) : v_(n) {}  // NOLINT: implicit by design
  Rat(long num, long den);
  explicit Rat(const mpz_class& z) : v_(z) {}
  explicit Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

  // Parses "num/den" or "num" with an optional leading sign.
  static Rat parse(std::string_view s);

  const mpq_class& raw() const { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  // Canonical text form: "num/den", den omitted when 1, sign on the numerator.
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }

 private:
  mpq_class v_;
};

Rat rat_pow(const Rat& x, unsigned long e);

// p^e for machine-size results; overflow-checked.
unsigned long ulong_pow(unsigned long base, unsigned exp);

/// p-adic valuation of x; nullopt encodes +infinity (x == 0).
std::optional<long> nu_p(const Rat& x, unsigned long p);

bool is_p_integral(const Rat& x, unsigned long p);
bool is_p_unit(const Rat& x, unsigned long p);

// Prime field element: value reduced to [0, p), p checked prime at construction.
class Fp {
 public:
  Fp(unsigned long p, long value);
  Fp(unsigned long p, const mpz_class& value);

  unsigned long p() const { return p_; }
  unsigned long value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator-() const { return Fp(p_, -static_cast<long>(v_)); }
  Fp inv() const;

  friend Fp operator+(const Fp& a, const Fp& b);
  friend Fp operator-(const Fp& a, const Fp& b);
  friend Fp operator*(const Fp& a, const Fp& b);
  friend bool operator==(const Fp& a, const Fp& b);
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  std::string str() const { return std::to_string(v_); }

 private:
  unsigned long p_;
  unsigned long v_;
};

/// Image of x under Z_(p) -> F_p; throws "NotPIntegral" if the denominator is divisible by p.
Fp reduce_mod_p(const Rat& x, unsigned long p);

}  // namespace chernops
