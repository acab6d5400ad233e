#pragma once

#include <cassert>
#include <span>
#include <vector>

#include "chernops/fgl.hpp"
#include "chernops/polyring.hpp"

namespace chernops {

// Variable table for the abstract Chern algebra: c_1..c_D per slot, weight(c_i) = i.
// Slot 1 variables are named "c<i>", later slots "c<i>(<slot>)".
VarTablePtr chern_table(unsigned max_weight, unsigned arity = 1);

// Polynomial in abstract Chern classes, possibly multi-slot (external products).
class ChernPoly {
 public:
  ChernPoly(unsigned arity, unsigned trunc, Ring ring = Ring::rationals());
  ChernPoly(unsigned arity, WeightedPoly poly);

  static ChernPoly variable(unsigned arity, unsigned trunc, unsigned i,
                            unsigned slot = 1, Ring ring = Ring::rationals());
  /// c_1 + c_2 + ... + c_trunc in the given slot.
  static ChernPoly total(unsigned arity, unsigned trunc, unsigned slot = 1,
                         Ring ring = Ring::rationals());

  unsigned arity() const { return arity_; }
  unsigned trunc() const { return poly_.trunc(); }
  const WeightedPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.is_zero(); }

  size_t index_of(unsigned i, unsigned slot) const;

  ChernPoly operator-() const { return {arity_, -poly_}; }
  friend ChernPoly operator+(const ChernPoly& a, const ChernPoly& b);
  friend ChernPoly operator-(const ChernPoly& a, const ChernPoly& b);
  friend ChernPoly operator*(const ChernPoly& a, const ChernPoly& b);
  ChernPoly scaled(const Rat& c) const { return {arity_, poly_.scaled(c)}; }
  friend bool operator==(const ChernPoly& a, const ChernPoly& b) {
    return a.arity_ == b.arity_ && a.poly_ == b.poly_;
  }

  /// Same polynomial viewed in a wider slot algebra; slot s maps to slot_map[s-1].
  ChernPoly mapped_slots(unsigned new_arity, std::span<const unsigned> slot_map) const;
  ChernPoly weight_component(unsigned w) const {
    return {arity_, poly_.weight_component(w)};
  }
  ChernPoly to_mod_p(unsigned long p) const { return {arity_, poly_.to_mod_p(p)}; }

 private:
  unsigned arity_;
  WeightedPoly poly_;
};

struct LogComponent {
  unsigned i;
  ChernPoly P;              // P_i, contains only c_1..c_{i-1}
  std::optional<long> nu;   // nu_p(P_i); nullopt is +infinity
  unsigned mu;              // max(0, -nu)
};

/// Components of log_F(c_tot): entry i holds P_i with (log c_tot)_i = c_i - P_i.
std::vector<LogComponent> log_components(const WeightedPoly& log_series, unsigned long p,
                                         unsigned i_max);

/// K_0 polynomials: P_n = n * [weight-n component of (c_tot + c_tot^2/2 + ...)].
/// Integral with unit content; violations raise "K0Integrality".
std::vector<ChernPoly> k0_log_components(unsigned i_max);

/// Kills c_s for every s != j mod (p^n - 1).
ChernPoly specialize_component(const ChernPoly& P, unsigned j, unsigned long p,
                               unsigned n);

struct LemmaReport {
  unsigned i = 0;
  unsigned k = 0;       // i = p^(n k) v with p^n not dividing v
  unsigned v = 0;
  std::optional<long> nu;
  unsigned mu = 0;
  bool off_component_vanish = false;  // part 1
  bool valuation_ok = false;          // part 2 (and exactness when k > 0)
  std::optional<Fp> scalar;           // part 2p proportionality scalar
};

/// Factors i = p^(n k) v with p^n not dividing v.
void split_pn(unsigned i, unsigned long p, unsigned n, unsigned& k, unsigned& v);

/// Valuation and specialization checks for one weight; inconsistencies throw
/// with a witness monomial in the message.
LemmaReport lemma_valuation_checks(const MoravaLaw& M, unsigned i,
                                   std::span<const LogComponent> comps);

// Memoized discrete derivatives of Chern classes for one law and degree bound:
// dc_i = weight-i component of F(c_tot x 1, 1 x c_tot) - c_tot x 1 - 1 x c_tot.
class CartanContext {
 public:
  CartanContext(const FormalGroupLaw& F, unsigned trunc);

  unsigned trunc() const { return trunc_; }
  const FormalGroupLaw& fgl() const { return fgl_; }

  /// The two-slot derivative table entry for c_i.
  const ChernPoly& dc(unsigned i) const;

  /// Discrete derivative in the given slot; result has arity + 1 slots.
  ChernPoly derivative(const ChernPoly& P, unsigned slot = 1) const;
  /// s-fold iterated derivative (in the first slot each time).
  ChernPoly iterated_derivative(const ChernPoly& P, unsigned s) const;

 private:
  const FormalGroupLaw& fgl_;
  unsigned trunc_;
  std::vector<ChernPoly> dc_;  // dc_[i-1], arity 2
};

/// f(sum args) = sum over nonempty subsets J of args of d^(|J|-1) f(J).
/// eval(t) must return the value of the (|t|-1)-th derivative at the tuple t.
template <class Value, class Arg, class Eval>
Value discrete_taylor(Eval&& eval, std::span<const Arg> args) {
  assert(!args.empty());
  assert(args.size() < 8 * sizeof(unsigned long));
  std::vector<Arg> tuple;
  bool have = false;
  Value acc{};
  for (unsigned long mask = 1; mask < (1ul << args.size()); ++mask) {
    tuple.clear();
    for (size_t j = 0; j < args.size(); ++j)
      if (mask & (1ul << j)) tuple.push_back(args[j]);
    Value v = eval(std::span<const Arg>(tuple));
    if (!have) {
      acc = std::move(v);
      have = true;
    } else {
      acc = acc + v;
    }
  }
  return acc;
}

}  // namespace chernops
