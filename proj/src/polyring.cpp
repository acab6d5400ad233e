#include "chernops/polyring.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace chernops {

long VarTable::find(std::string_view name) const {
  for (size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return static_cast<long>(i);
  return -1;
}

VarTablePtr make_vars(std::vector<Var> vars) {
  return std::make_shared<VarTable>(std::move(vars));
}

VarTablePtr make_vars(std::string_view prefix, unsigned count, unsigned weight) {
  std::vector<Var> vs;
  vs.reserve(count);
  for (unsigned i = 1; i <= count; ++i)
    vs.push_back({std::string(prefix) + std::to_string(i), weight});
  return make_vars(std::move(vs));
}

Rat Ring::normalize(const Rat& x) const {
  if (is_q()) return x;
  return Rat(mpz_class(reduce_mod_p(x, p_).value()));
}

Rat Ring::inv(const Rat& x) const {
  if (is_q()) {
    if (x.is_zero()) throw MathError("DivisionByZero", "inverse of zero");
    return Rat(1) / x;
  }
  return Rat(mpz_class(reduce_mod_p(x, p_).inv().value()));
}

unsigned MonoCmp::weight(const Expo& e) const {
  unsigned w = 0;
  for (size_t i = 0; i < e.size(); ++i) w += e[i] * (*vt)[i].weight;
  return w;
}

bool MonoCmp::operator()(const Expo& a, const Expo& b) const {
  unsigned wa = weight(a), wb = weight(b);
  if (wa != wb) return wa < wb;
  return a < b;
}

WeightedPoly::WeightedPoly(Ring ring, VarTablePtr vars, unsigned trunc)
    : ring_(ring), vars_(std::move(vars)), trunc_(trunc), terms_(MonoCmp{vars_.get()}) {}

void WeightedPoly::add_term(const Expo& e, const Rat& c) {
  if (e.size() != vars_->size())
    throw MathError("ArityMismatch", "exponent vector arity does not match variable table");
  if (weight(e) > trunc_) return;
  Rat cn = ring_.normalize(c);
  if (cn.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, cn);
  if (!inserted) {
    it->second = ring_.normalize(it->second + cn);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeightedPoly WeightedPoly::monomial(Ring ring, VarTablePtr vars, unsigned trunc,
                                    const Expo& e, const Rat& c) {
  WeightedPoly r(ring, std::move(vars), trunc);
  r.add_term(e, c);
  return r;
}

WeightedPoly WeightedPoly::constant(Ring ring, VarTablePtr vars, unsigned trunc,
                                    const Rat& c) {
  Expo e(vars->size(), 0);
  return monomial(ring, std::move(vars), trunc, e, c);
}

WeightedPoly WeightedPoly::variable(Ring ring, VarTablePtr vars, unsigned trunc,
                                    size_t index) {
  Expo e(vars->size(), 0);
  e.at(index) = 1;
  return monomial(ring, std::move(vars), trunc, e, Rat(1));
}

unsigned WeightedPoly::min_weight() const {
  if (terms_.empty()) return trunc_ + 1;
  return weight(terms_.begin()->first);
}

unsigned WeightedPoly::max_weight() const {
  if (terms_.empty()) return 0;
  return weight(terms_.rbegin()->first);
}

Rat WeightedPoly::coefficient(const Expo& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat WeightedPoly::constant_term() const {
  return coefficient(Expo(vars_->size(), 0));
}

void require_compatible(const WeightedPoly& a, const WeightedPoly& b) {
  if (a.ring() != b.ring())
    throw MathError("RingMismatch", "operands over different coefficient rings");
  if (!(*a.vars() == *b.vars()))
    throw MathError("TableMismatch", "operands over different variable tables");
}

WeightedPoly WeightedPoly::operator-() const {
  WeightedPoly r(ring_, vars_, trunc_);
  for (const auto& [e, c] : terms_) r.add_term(e, -c);
  return r;
}

WeightedPoly& WeightedPoly::operator+=(const WeightedPoly& o) {
  require_compatible(*this, o);
  if (o.trunc_ < trunc_) *this = with_trunc(o.trunc_);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

WeightedPoly& WeightedPoly::operator-=(const WeightedPoly& o) {
  require_compatible(*this, o);
  if (o.trunc_ < trunc_) *this = with_trunc(o.trunc_);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

WeightedPoly operator*(const WeightedPoly& a, const WeightedPoly& b) {
  require_compatible(a, b);
  WeightedPoly r(a.ring(), a.vars(), std::min(a.trunc(), b.trunc()));
  const size_t n = a.vars()->size();
  Expo e(n, 0);
  for (const auto& [ea, ca] : a.terms()) {
    unsigned wa = a.weight(ea);
    if (wa > r.trunc()) continue;
    for (const auto& [eb, cb] : b.terms()) {
      if (wa + b.weight(eb) > r.trunc()) continue;
      for (size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

WeightedPoly WeightedPoly::scaled(const Rat& c) const {
  WeightedPoly r(ring_, vars_, trunc_);
  for (const auto& [e, t] : terms_) r.add_term(e, t * c);
  return r;
}

WeightedPoly WeightedPoly::pow(unsigned long e) const {
  WeightedPoly acc = constant(ring_, vars_, trunc_, Rat(1));
  WeightedPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return acc;
}

bool operator==(const WeightedPoly& a, const WeightedPoly& b) {
  require_compatible(a, b);
  unsigned t = std::min(a.trunc(), b.trunc());
  auto within = [&](const WeightedPoly& x, const WeightedPoly& y) {
    for (const auto& [e, c] : x.terms()) {
      if (x.weight(e) > t) continue;
      if (y.coefficient(e) != c) return false;
    }
    return true;
  };
  return within(a, b) && within(b, a);
}

WeightedPoly WeightedPoly::with_trunc(unsigned t) const {
  WeightedPoly r(ring_, vars_, t);
  for (const auto& [e, c] : terms_) r.add_term(e, c);
  return r;
}

WeightedPoly WeightedPoly::weight_component(unsigned w) const {
  WeightedPoly r(ring_, vars_, trunc_);
  for (const auto& [e, c] : terms_)
    if (weight(e) == w) r.add_term(e, c);
  return r;
}

WeightedPoly WeightedPoly::renamed(const VarTablePtr& target,
                                   std::span<const size_t> index_map) const {
  if (index_map.size() != vars_->size())
    throw MathError("ArityMismatch", "rename map arity mismatch");
  for (size_t i = 0; i < index_map.size(); ++i)
    if ((*vars_)[i].weight != (*target)[index_map[i]].weight)
      throw MathError("WeightMismatch", "rename changes a variable weight");
  WeightedPoly r(ring_, target, trunc_);
  Expo e(target->size(), 0);
  for (const auto& [src, c] : terms_) {
    std::fill(e.begin(), e.end(), 0);
    for (size_t i = 0; i < src.size(); ++i) e[index_map[i]] += src[i];
    r.add_term(e, c);
  }
  return r;
}

WeightedPoly WeightedPoly::compose(std::span<const WeightedPoly> images) const {
  if (images.size() != vars_->size())
    throw MathError("ArityMismatch", "compose needs one image per variable");
  if (images.empty())
    throw MathError("ArityMismatch", "compose over an empty variable table");
  const Ring ring = images[0].ring();
  const VarTablePtr tgt = images[0].vars();
  unsigned t = trunc_;
  for (size_t i = 0; i < images.size(); ++i) {
    const WeightedPoly& g = images[i];
    if (g.ring() != ring || !(*g.vars() == *tgt))
      throw MathError("TableMismatch", "compose images over different rings or tables");
    t = std::min(t, g.trunc());
    if (!g.constant_term().is_zero())
      throw MathError("NonNilpotentSubstitution",
                      "substituted series has a nonzero constant term");
    if (!g.is_zero() && g.min_weight() < (*vars_)[i].weight)
      throw MathError("WeightMismatch",
                      "image of '" + (*vars_)[i].name + "' has weight below the variable");
  }

  // Per-variable power cache: powers_[i][k] = images[i]^k.
  std::vector<std::vector<WeightedPoly>> powers(images.size());
  auto power = [&](size_t i, uint32_t k) -> const WeightedPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(WeightedPoly::constant(ring, tgt, t, Rat(1)));
    while (cache.size() <= k) cache.push_back(cache.back() * images[i]);
    return cache[k];
  };

  WeightedPoly r(ring, tgt, t);
  for (const auto& [e, c] : terms_) {
    WeightedPoly term = WeightedPoly::constant(ring, tgt, t, c);
    for (size_t i = 0; i < e.size() && !term.is_zero(); ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    r += term;
  }
  return r;
}

WeightedPoly WeightedPoly::map_coefficients(Ring new_ring,
                                            const std::function<Rat(const Rat&)>& f) const {
  WeightedPoly r(new_ring, vars_, trunc_);
  for (const auto& [e, c] : terms_) r.add_term(e, f(c));
  return r;
}

WeightedPoly WeightedPoly::to_mod_p(unsigned long p) const {
  if (ring_.is_fp()) {
    if (ring_.p() != p) throw MathError("RingMismatch", "reduction at a different prime");
    return *this;
  }
  return map_coefficients(Ring::mod_p(p), [](const Rat& c) { return c; });
}

std::optional<long> WeightedPoly::min_valuation(unsigned long p) const {
  std::optional<long> best;
  for (const auto& [e, c] : terms_) {
    auto v = nu_p(c, p);
    if (v && (!best || *v < *best)) best = v;
  }
  return best;
}

std::string WeightedPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    first = false;
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*vars_)[i].name;
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      os << a.str();
    } else if (a.is_one()) {
      os << mono;
    } else {
      os << a.str() << "*" << mono;
    }
  }
  return os.str();
}

WeightedPoly symmetrize(Ring ring, const VarTablePtr& vars, unsigned trunc,
                        const Expo& e) {
  if (e.size() != vars->size())
    throw MathError("ArityMismatch", "symmetrize arity mismatch");
  Expo s = e;
  std::sort(s.begin(), s.end(), std::greater<uint32_t>());
  WeightedPoly r(ring, vars, trunc);
  do {
    r.add_term(s, Rat(1));
  } while (std::prev_permutation(s.begin(), s.end()));
  return r;
}

bool is_symmetric(const WeightedPoly& f, std::span<const size_t> on_vars) {
  for (size_t k = 0; k + 1 < on_vars.size(); ++k) {
    size_t i = on_vars[k], j = on_vars[k + 1];
    std::vector<size_t> map(f.vars()->size());
    for (size_t s = 0; s < map.size(); ++s) map[s] = s;
    std::swap(map[i], map[j]);
    if (f.renamed(f.vars(), map) != f) return false;
  }
  return true;
}

bool is_symmetric(const WeightedPoly& f) {
  std::vector<size_t> all(f.vars()->size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = i;
  return is_symmetric(f, all);
}

Partition::Partition(std::vector<unsigned> p) : parts(std::move(p)) {
  for (unsigned x : parts)
    if (x == 0) throw MathError("BadPartition", "partition parts must be positive");
  if (!std::is_sorted(parts.begin(), parts.end(), std::greater<unsigned>()))
    std::sort(parts.begin(), parts.end(), std::greater<unsigned>());
}

unsigned Partition::sum() const {
  unsigned s = 0;
  for (unsigned x : parts) s += x;
  return s;
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

namespace {

void emit_partitions(unsigned m, unsigned max_part, std::vector<unsigned>& cur,
                     std::vector<Partition>& out) {
  if (m == 0) {
    Partition p;
    p.parts = cur;
    out.push_back(std::move(p));
    return;
  }
  for (unsigned first = std::min(m, max_part); first >= 1; --first) {
    cur.push_back(first);
    emit_partitions(m - first, first, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(unsigned m) {
  std::vector<Partition> out;
  std::vector<unsigned> cur;
  emit_partitions(m, m == 0 ? 1 : m, cur, out);
  return out;
}

std::vector<Partition> partitions_of_length(unsigned m, unsigned len) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(m))
    if (p.size() == len) out.push_back(std::move(p));
  return out;
}

std::optional<Rat> proportionality_scalar(const WeightedPoly& a, const WeightedPoly& b) {
  require_compatible(a, b);
  if (b.is_zero()) {
    if (a.is_zero()) return Rat(1);
    return std::nullopt;
  }
  if (a.is_zero()) return Rat(0);
  const auto& [e0, c0] = *b.terms().begin();
  Rat lambda = a.ring().normalize(a.coefficient(e0) * a.ring().inv(c0));
  if (a == b.scaled(lambda)) return lambda;
  return std::nullopt;
}

WeightedPoly revert(const WeightedPoly& f) {
  if (f.vars()->size() != 1 || (*f.vars())[0].weight != 1)
    throw MathError("NotUnivariate", "revert needs one variable of weight 1");
  if (!f.constant_term().is_zero())
    throw MathError("NotReversible", "series has a nonzero constant term");
  const Ring ring = f.ring();
  const unsigned D = f.trunc();
  Rat f1 = f.coefficient(Expo{1});
  if (f1.is_zero() || (ring.is_fp() && reduce_mod_p(f1, ring.p()).is_zero()))
    throw MathError("NotReversible", "linear coefficient is not invertible");
  Rat f1_inv = ring.inv(f1);

  // g_k from [x^k] f(g(x)) = 0, k >= 2.
  WeightedPoly g = WeightedPoly::variable(ring, f.vars(), D, 0).scaled(f1_inv);
  for (unsigned k = 2; k <= D; ++k) {
    WeightedPoly comp = f.compose(std::span<const WeightedPoly>(&g, 1));
    Rat ek = comp.coefficient(Expo{k});
    if (ek.is_zero()) continue;
    g.add_term(Expo{k}, ring.normalize(-(f1_inv * ek)));
  }
  return g;
}

}  // namespace chernops
