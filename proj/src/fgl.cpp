#include "chernops/fgl.hpp"

#include <algorithm>

namespace chernops {

namespace {

const Ring kQ = Ring::rationals();

VarTablePtr xy_table() {
  return make_vars({{"x", 1}, {"y", 1}});
}

}  // namespace

FormalGroupLaw FormalGroupLaw::from_log(const WeightedPoly& log, unsigned long p,
                                        unsigned trunc) {
  require_prime(p);
  if (log.vars()->size() != 1 || (*log.vars())[0].weight != 1)
    throw MathError("BadLogarithm", "logarithm must be univariate of weight 1");
  if (!log.ring().is_q())
    throw MathError("BadLogarithm", "logarithm must have rational coefficients");
  if (log.coefficient(Expo{1}) != Rat(1) || !log.constant_term().is_zero())
    throw MathError("BadLogarithm", "logarithm must start with x");

  WeightedPoly lg = log.with_trunc(trunc);
  WeightedPoly ex = revert(lg);

  auto xy = xy_table();
  std::vector<size_t> to_x = {0}, to_y = {1};
  WeightedPoly sum = lg.renamed(xy, to_x) + lg.renamed(xy, to_y);
  WeightedPoly F = ex.compose(std::span<const WeightedPoly>(&sum, 1));

  // unit law F(x,0) = x; cheap guard against malformed input
  {
    WeightedPoly x = WeightedPoly::variable(kQ, xy, trunc, 0);
    WeightedPoly zero(kQ, xy, trunc);
    std::vector<WeightedPoly> img = {x, zero};
    if (F.compose(img) != x)
      throw MathError("BadLogarithm", "constructed law violates F(x,0) = x");
  }
  return FormalGroupLaw(p, trunc, std::move(lg), std::move(ex), std::move(F));
}

Rat FormalGroupLaw::coeff(unsigned i, unsigned j) const {
  if (i + j > trunc_)
    throw MathError("TruncationTooSmall", "a_ij requested beyond the truncation bound");
  return series_.coefficient(Expo{i, j});
}

WeightedPoly FormalGroupLaw::apply(const WeightedPoly& s, const WeightedPoly& t) const {
  require_compatible(s, t);
  std::vector<WeightedPoly> img = {s, t};
  return series_.compose(img);
}

WeightedPoly FormalGroupLaw::formal_sum(std::span<const WeightedPoly> terms) const {
  if (terms.empty()) throw MathError("EmptySum", "formal sum of no terms");
  WeightedPoly acc = terms[0];
  for (size_t i = 1; i < terms.size(); ++i) acc = apply(acc, terms[i]);
  return acc;
}

WeightedPoly FormalGroupLaw::formal_inverse(const WeightedPoly& s) const {
  if (!s.constant_term().is_zero())
    throw MathError("NonNilpotentSubstitution", "formal inverse of a unit series");
  WeightedPoly inv = -s;
  for (unsigned i = 0; i <= s.trunc(); ++i) {
    WeightedPoly err = apply(s, inv);
    if (err.is_zero()) break;
    inv -= err;
  }
  return inv;
}

WeightedPoly FormalGroupLaw::k_series(long k) const {
  const VarTablePtr& xt = log_.vars();
  WeightedPoly x = WeightedPoly::variable(kQ, xt, trunc_, 0);
  if (k == 0) return WeightedPoly(kQ, xt, trunc_);
  if (k < 0) return formal_inverse(k_series(-k));
  WeightedPoly acc = x;
  for (long i = 1; i < k; ++i) acc = apply(acc, x);
  return acc;
}

WeightedPoly morava_log(unsigned long p, unsigned n, std::span<const Rat> a_seq,
                        unsigned trunc) {
  require_prime(p);
  if (n < 1) throw MathError("BadParameter", "Morava height n must be >= 1");
  for (const Rat& a : a_seq)
    if (!is_p_unit(a, p))
      throw MathError("NotAUnit", "a-sequence entry " + a.str() + " is not a p-unit");
  auto xt = make_vars("x", 1);
  WeightedPoly log(kQ, xt, trunc);
  log.add_term(Expo{1}, Rat(1));
  Rat p_pow(1);
  const Rat pr(static_cast<long>(p));
  for (unsigned i = 1;; ++i) {
    unsigned long deg = 1;
    bool beyond = false;
    for (unsigned s = 0; s < n * i; ++s) {
      deg *= p;
      if (deg > trunc) {
        beyond = true;
        break;
      }
    }
    if (beyond) break;
    p_pow *= pr;
    Rat a = i <= a_seq.size() ? a_seq[i - 1] : Rat(1);
    log.add_term(Expo{static_cast<uint32_t>(deg)}, a / p_pow);
  }
  return log;
}

MoravaLaw::MoravaLaw(unsigned long p, unsigned n, std::vector<Rat> a_seq, unsigned trunc)
    : n_(n), a_(std::move(a_seq)),
      law_(FormalGroupLaw::from_log(morava_log(p, n, a_, trunc), p, trunc)) {}

Rat MoravaLaw::a(unsigned i) const {
  if (i == 0) return Rat(1);
  return i <= a_.size() ? a_[i - 1] : Rat(1);
}

Rat MoravaLaw::b(unsigned i) const {
  return a(i) / rat_pow(Rat(static_cast<long>(p())), i);
}

HeightCheck check_height(const FormalGroupLaw& F, unsigned n) {
  const unsigned long p = F.p();
  unsigned long pn = ulong_pow(p, n);
  if (F.trunc() < pn)
    throw MathError("TruncationTooSmall", "height check needs trunc >= p^n");
  WeightedPoly ps = F.k_series(static_cast<long>(p));
  Fp unit(p, 0);
  for (const auto& [e, c] : ps.terms()) {
    unsigned long deg = e[0];
    if (deg > pn) break;
    Fp r = reduce_mod_p(c, p);
    if (deg < pn) {
      if (!r.is_zero()) return {false, Fp(p, 0)};
    } else {
      unit = r;
    }
  }
  return {!unit.is_zero(), unit};
}

bool check_morava_grading(const FormalGroupLaw& F, unsigned long p, unsigned n) {
  unsigned long mod = ulong_pow(p, n) - 1;
  if (mod <= 1) return true;
  for (const auto& [e, c] : F.series().terms()) {
    (void)c;
    if ((e[0] + e[1]) % mod != 1 % mod) return false;
  }
  return true;
}

std::vector<Rat> araki_v(const MoravaLaw& M, unsigned m_max) {
  const unsigned long p = M.p();
  const unsigned n = M.n();
  const Rat pr(static_cast<long>(p));
  auto l = [&](unsigned m) -> Rat {
    if (m == 0) return Rat(1);
    return m % n == 0 ? M.b(m / n) : Rat(0);
  };
  std::vector<Rat> v;  // v[m-1] = pi(v_m)
  for (unsigned m = 1; m <= m_max; ++m) {
    unsigned long pm = ulong_pow(p, m);
    Rat vm = pr * (Rat(1) - rat_pow(pr, pm - 1)) * l(m);
    for (unsigned i = 1; i < m; ++i)
      vm -= l(i) * rat_pow(v[m - i - 1], ulong_pow(p, i));
    if (!is_p_integral(vm, p))
      throw MathError("ArakiInconsistent", "pi(v_" + std::to_string(m) + ") = " +
                                               vm.str() + " is not p-integral");
    v.push_back(vm);
  }
  return v;
}

bool fgl_morphism_check(const WeightedPoly& gamma, const FormalGroupLaw& src,
                        const FormalGroupLaw& tgt) {
  if (!gamma.constant_term().is_zero())
    throw MathError("NonNilpotentSubstitution", "morphism series with constant term");
  auto xy = xy_table();
  unsigned t = std::min({gamma.trunc(), src.trunc(), tgt.trunc()});
  WeightedPoly F = src.series().with_trunc(t);
  WeightedPoly x = WeightedPoly::variable(kQ, xy, t, 0);
  WeightedPoly y = WeightedPoly::variable(kQ, xy, t, 1);

  WeightedPoly g = gamma.with_trunc(t);
  WeightedPoly lhs = g.compose(std::span<const WeightedPoly>(&F, 1));
  WeightedPoly gamma_x = g.compose(std::span<const WeightedPoly>(&x, 1));
  WeightedPoly gamma_y = g.compose(std::span<const WeightedPoly>(&y, 1));
  WeightedPoly rhs = tgt.series().with_trunc(t).compose(
      std::vector<WeightedPoly>{gamma_x, gamma_y});
  return lhs == rhs;
}

FormalGroupLaw fgl_additive(unsigned long p, unsigned trunc) {
  auto xt = make_vars("x", 1);
  WeightedPoly log(kQ, xt, trunc);
  log.add_term(Expo{1}, Rat(1));
  return FormalGroupLaw::from_log(log, p, trunc);
}

FormalGroupLaw fgl_multiplicative(unsigned long p, unsigned trunc) {
  auto xt = make_vars("x", 1);
  WeightedPoly log(kQ, xt, trunc);
  for (unsigned k = 1; k <= trunc; ++k)
    log.add_term(Expo{k}, Rat(k % 2 ? 1 : -1, static_cast<long>(k)));
  return FormalGroupLaw::from_log(log, p, trunc);
}

WeightedPoly artin_hasse_series(unsigned long p, unsigned trunc) {
  MoravaLaw k1(p, 1, {}, trunc);
  FormalGroupLaw fm = fgl_multiplicative(p, trunc);
  const WeightedPoly& lg = k1.fgl().log();
  return fm.exp().compose(std::span<const WeightedPoly>(&lg, 1));
}

}  // namespace chernops
