#pragma once

#include <span>
#include <vector>

#include "chernops/polyring.hpp"

namespace chernops {

// Truncated formal group law F(x,y) = exp(log x + log y) over Q, built from its
// logarithm.  Coefficients a_ij and exp are materialized at construction.
class FormalGroupLaw {
 public:
  // log must be univariate over Q in a weight-1 variable, log = x + higher.
  static FormalGroupLaw from_log(const WeightedPoly& log, unsigned long p, unsigned trunc);

  unsigned long p() const { return p_; }
  unsigned trunc() const { return trunc_; }

  const WeightedPoly& log() const { return log_; }
  const WeightedPoly& exp() const { return exp_; }
  /// F(x,y) over the table {x, y}.
  const WeightedPoly& series() const { return series_; }

  Rat coeff(unsigned i, unsigned j) const;

  /// Fold of F over the terms (all in one table, zero constant terms).
  WeightedPoly formal_sum(std::span<const WeightedPoly> terms) const;
  /// F applied to two series.
  WeightedPoly apply(const WeightedPoly& s, const WeightedPoly& t) const;
  /// The series i(s) with F(s, i(s)) = 0 up to the truncation bound.
  WeightedPoly formal_inverse(const WeightedPoly& s) const;
  /// [k]x in the table of log(); negative k goes through the formal inverse.
  WeightedPoly k_series(long k) const;

 private:
  FormalGroupLaw(unsigned long p, unsigned trunc, WeightedPoly log, WeightedPoly exp,
                 WeightedPoly series)
      : p_(p), trunc_(trunc), log_(std::move(log)), exp_(std::move(exp)),
        series_(std::move(series)) {}

  unsigned long p_;
  unsigned trunc_;
  WeightedPoly log_;
  WeightedPoly exp_;
  WeightedPoly series_;
};

/// x + sum a_i/p^i * x^(p^(n*i)) truncated; a entries must be p-units ("NotAUnit").
/// Entries of a beyond the supplied prefix default to 1 (Lubin-Tate).
WeightedPoly morava_log(unsigned long p, unsigned n, std::span<const Rat> a_seq,
                        unsigned trunc);

// Formal group law of an n-th Morava K-theory, with its unit sequence retained.
class MoravaLaw {
 public:
  MoravaLaw(unsigned long p, unsigned n, std::vector<Rat> a_seq, unsigned trunc);

  const FormalGroupLaw& fgl() const { return law_; }
  unsigned long p() const { return law_.p(); }
  unsigned n() const { return n_; }
  unsigned trunc() const { return law_.trunc(); }

  /// a_i, defaulting to 1 past the configured prefix.
  Rat a(unsigned i) const;
  /// b_i = a_i / p^i, the x^(p^(n*i)) coefficient of the logarithm.
  Rat b(unsigned i) const;
  const std::vector<Rat>& a_seq() const { return a_; }

 private:
  unsigned n_;
  std::vector<Rat> a_;
  FormalGroupLaw law_;
};

struct HeightCheck {
  bool ok;
  Fp unit;  // leading unit of [p]x mod p at degree p^n (0 when !ok)
};

/// Height-n test: [p]x mod p vanishes below degree p^n and has a unit there.
/// Requires trunc >= p^n ("TruncationTooSmall").
HeightCheck check_height(const FormalGroupLaw& F, unsigned n);

/// True iff every nonzero a_ij has i+j = 1 mod (p^n - 1), up to the truncation bound.
bool check_morava_grading(const FormalGroupLaw& F, unsigned long p, unsigned n);

/// Araki generator images pi(v_1), ..., pi(v_m_max), computed exactly in Q from the
/// recursion  v_m = p(1 - p^(p^m - 1)) l_m - sum_{i=1}^{m-1} l_i v_{m-i}^{p^i}.
/// Every value must be p-integral ("ArakiInconsistent").
std::vector<Rat> araki_v(const MoravaLaw& M, unsigned m_max);

/// True iff gamma(F_src(x,y)) = F_tgt(gamma(x), gamma(y)) up to the common bound.
bool fgl_morphism_check(const WeightedPoly& gamma, const FormalGroupLaw& src,
                        const FormalGroupLaw& tgt);

/// The additive law F = x + y.
FormalGroupLaw fgl_additive(unsigned long p, unsigned trunc);
/// The multiplicative law F = x + y + xy, log = x - x^2/2 + x^3/3 - ...
FormalGroupLaw fgl_multiplicative(unsigned long p, unsigned trunc);

/// exp_{F_m}(log_{K(1)}(x)) for the Lubin-Tate K(1) at p: the Artin-Hasse composite.
WeightedPoly artin_hasse_series(unsigned long p, unsigned trunc);

}  // namespace chernops
