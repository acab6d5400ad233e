#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "chernops/exactnum.hpp"

namespace chernops {

struct Var {
  std::string name;
  unsigned weight = 1;

  friend bool operator==(const Var& a, const Var& b) {
    return a.name == b.name && a.weight == b.weight;
  }
};

// Immutable, shared between polynomials. Equality is structural.
class VarTable {
 public:
  explicit VarTable(std::vector<Var> vars) : vars_(std::move(vars)) {}

  size_t size() const { return vars_.size(); }
  const Var& operator[](size_t i) const { return vars_[i]; }
  long find(std::string_view name) const;

  friend bool operator==(const VarTable& a, const VarTable& b) {
    return a.vars_ == b.vars_;
  }

 private:
  std::vector<Var> vars_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

VarTablePtr make_vars(std::vector<Var> vars);
// "t1", ..., "t<count>", all of the given weight.
VarTablePtr make_vars(std::string_view prefix, unsigned count, unsigned weight = 1);

using Expo = std::vector<uint32_t>;

// Coefficient domain tag: exact rationals or F_p with reduced representatives.
// Z_(p) values live in the rational domain and are certified p-integral on demand.
class Ring {
 public:
  static Ring rationals() { return Ring(Kind::Q, 0); }
  static Ring mod_p(unsigned long p) {
    require_prime(p);
    return Ring(Kind::Fp, p);
  }

  bool is_q() const { return kind_ == Kind::Q; }
  bool is_fp() const { return kind_ == Kind::Fp; }
  unsigned long p() const { return p_; }

  friend bool operator==(const Ring& a, const Ring& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Ring& a, const Ring& b) { return !(a == b); }

  // Reduces into the canonical representative (no-op over Q).
  Rat normalize(const Rat& x) const;
  Rat inv(const Rat& x) const;

  std::string tag() const { return is_q() ? "q" : "f" + std::to_string(p_); }

 private:
  enum class Kind { Q, Fp };
  Ring(Kind k, unsigned long p) : kind_(k), p_(p) {}

  Kind kind_;
  unsigned long p_;
};

// Monomial order: graded by weighted degree, ties by exponent-vector lex.
struct MonoCmp {
  const VarTable* vt = nullptr;

  unsigned weight(const Expo& e) const;
  bool operator()(const Expo& a, const Expo& b) const;
};

// Sparse multivariate polynomial with weighted variables and eager truncation:
// terms of weight > trunc are dropped at every operation.
class WeightedPoly {
 public:
  using TermMap = std::map<Expo, Rat, MonoCmp>;

  WeightedPoly(Ring ring, VarTablePtr vars, unsigned trunc);

  static WeightedPoly monomial(Ring ring, VarTablePtr vars, unsigned trunc,
                               const Expo& e, const Rat& c);
  static WeightedPoly constant(Ring ring, VarTablePtr vars, unsigned trunc, const Rat& c);
  static WeightedPoly variable(Ring ring, VarTablePtr vars, unsigned trunc, size_t index);

  const Ring& ring() const { return ring_; }
  const VarTablePtr& vars() const { return vars_; }
  unsigned trunc() const { return trunc_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  unsigned weight(const Expo& e) const { return cmp_().weight(e); }
  // Weight of the lowest term; trunc()+1 for the zero polynomial.
  unsigned min_weight() const;
  unsigned max_weight() const;

  Rat coefficient(const Expo& e) const;
  Rat constant_term() const;

  WeightedPoly operator-() const;
  WeightedPoly& operator+=(const WeightedPoly& o);
  WeightedPoly& operator-=(const WeightedPoly& o);
  friend WeightedPoly operator+(WeightedPoly a, const WeightedPoly& b) { return a += b; }
  friend WeightedPoly operator-(WeightedPoly a, const WeightedPoly& b) { return a -= b; }
  friend WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b);
  WeightedPoly scaled(const Rat& c) const;
  WeightedPoly pow(unsigned long e) const;

  friend bool operator==(const WeightedPoly& a, const WeightedPoly& b);
  friend bool operator!=(const WeightedPoly& a, const WeightedPoly& b) { return !(a == b); }

  // Tightening drops terms; raising asserts the polynomial is exact data, not a
  // truncated series (caller's responsibility).
  WeightedPoly with_trunc(unsigned t) const;
  WeightedPoly weight_component(unsigned w) const;

  // Variable i of this table becomes variable index_map[i] of target (weights must match).
  WeightedPoly renamed(const VarTablePtr& target, std::span<const size_t> index_map) const;

  // Substitutes images[i] for variable i.  All images share one ring/table/trunc.
  // Every nonzero image must have zero constant term ("NonNilpotentSubstitution")
  // and min_weight >= the weight of the variable it replaces.
  WeightedPoly compose(std::span<const WeightedPoly> images) const;

  WeightedPoly map_coefficients(Ring new_ring,
                                const std::function<Rat(const Rat&)>& f) const;
  // Q -> F_p coefficient reduction; requires p-integrality.
  WeightedPoly to_mod_p(unsigned long p) const;

  // Smallest nu_p over coefficients; nullopt (+infinity) iff zero.
  std::optional<long> min_valuation(unsigned long p) const;

  std::string str() const;

  void add_term(const Expo& e, const Rat& c);

 private:
  MonoCmp cmp_() const { return MonoCmp{vars_.get()}; }

  Ring ring_;
  VarTablePtr vars_;
  unsigned trunc_;
  TermMap terms_;
};

void require_compatible(const WeightedPoly& a, const WeightedPoly& b);

/// Orbit sum of the monomial with exponents e under permutations of all variables.
WeightedPoly symmetrize(Ring ring, const VarTablePtr& vars, unsigned trunc, const Expo& e);

/// True iff f is invariant under all transpositions of the listed variables.
bool is_symmetric(const WeightedPoly& f, std::span<const size_t> on_vars);
bool is_symmetric(const WeightedPoly& f);

// Multiset of positive integers stored in non-increasing order.
struct Partition {
  std::vector<unsigned> parts;

  Partition() = default;
  explicit Partition(std::vector<unsigned> p);

  unsigned sum() const;
  size_t size() const { return parts.size(); }

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts == b.parts;
  }

  std::string str() const;
};

// All partitions of m in reverse-lexicographic order: (m), (m-1,1), ..., (1,...,1).
std::vector<Partition> partitions_of(unsigned m);
// Partitions of m into exactly len parts, same order.
std::vector<Partition> partitions_of_length(unsigned m, unsigned len);

/// Compositional inverse of a univariate f = u*x + ..., u invertible ("NotReversible").
WeightedPoly revert(const WeightedPoly& f);

/// lambda with a == lambda * b, when one exists (lambda = 1 for a = b = 0).
std::optional<Rat> proportionality_scalar(const WeightedPoly& a, const WeightedPoly& b);

}  // namespace chernops
