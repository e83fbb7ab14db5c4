#ifndef CHARKUMMER_SERIES_HPP
#define CHARKUMMER_SERIES_HPP

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "charkummer/field.hpp"

namespace ck {

/// Monomials are packed into a uint64: the top byte holds the total degree,
/// the next bytes hold the exponents of variables 0..5 (at most 6 variables,
/// exponents below 256).  Plain integer comparison of packed monomials is
/// then the graded order: total degree first, ties broken lexicographically
/// with earlier variables compared first (smaller exponent sorts first).
using Mono = std::uint64_t;

constexpr unsigned kMaxVars = 6;
constexpr int kMaxPrecision = 64;

inline unsigned mono_deg(Mono m) { return static_cast<unsigned>(m >> 56); }

inline unsigned mono_exp(Mono m, unsigned i) {
  return static_cast<unsigned>((m >> (48 - 8 * i)) & 0xff);
}

inline Mono mono_make(const std::vector<unsigned>& exps) {
  if (exps.size() > kMaxVars) throw domain_error("series: too many variables");
  Mono m = 0;
  unsigned deg = 0;
  for (unsigned i = 0; i < exps.size(); ++i) {
    if (exps[i] > 0xff) throw domain_error("series: exponent too large");
    deg += exps[i];
    m |= static_cast<Mono>(exps[i]) << (48 - 8 * i);
  }
  if (deg > 0xff) throw domain_error("series: degree too large");
  return m | (static_cast<Mono>(deg) << 56);
}

inline Mono mono_one() { return 0; }
inline Mono mono_var(unsigned i, unsigned e = 1) {
  return (static_cast<Mono>(e) << 56) | (static_cast<Mono>(e) << (48 - 8 * i));
}
inline Mono mono_mul(Mono a, Mono b) { return a + b; }
inline bool mono_divides(Mono a, Mono b) {
  // does a divide b?
  for (unsigned i = 0; i < kMaxVars; ++i)
    if (mono_exp(a, i) > mono_exp(b, i)) return false;
  return true;
}
inline Mono mono_div(Mono b, Mono a) { return b - a; }

/// Shared, immutable description of a series ring: coefficient field plus
/// an ordered list of variable names.  The variable order is also the
/// elimination order used by the local-ring routines.
struct SeriesRing {
  FieldPtr field;
  std::vector<std::string> vars;

  unsigned nvars() const { return static_cast<unsigned>(vars.size()); }
  int var_index(const std::string& name) const {
    for (unsigned i = 0; i < vars.size(); ++i)
      if (vars[i] == name) return static_cast<int>(i);
    return -1;
  }
};
using RingPtr = std::shared_ptr<const SeriesRing>;

inline RingPtr make_ring(FieldPtr field, std::vector<std::string> vars) {
  if (vars.size() > kMaxVars) throw domain_error("series: too many variables");
  for (unsigned i = 0; i < vars.size(); ++i)
    for (unsigned j = i + 1; j < vars.size(); ++j)
      if (vars[i] == vars[j]) throw domain_error("series: duplicate variable name");
  auto r = std::make_shared<SeriesRing>();
  r->field = std::move(field);
  r->vars = std::move(vars);
  return r;
}

inline bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a->field->same(*b->field) && a->vars == b->vars);
}

/// Truncated multivariate power series: an element of k[[x_1..x_n]]/m^N
/// where m is the maximal ideal and N the precision.  Values are immutable;
/// every operation returns a fresh series with the propagated precision.
/// Terms of degree >= precision are dropped on construction.
class Series {
public:
  Series(RingPtr ring, int prec) : ring_(std::move(ring)), prec_(clamp_prec(prec)) {}

  static Series zero(RingPtr ring, int prec) { return Series(std::move(ring), prec); }
  static Series constant(RingPtr ring, FF c, int prec) {
    Series s(std::move(ring), prec);
    s.add_term(mono_one(), c);
    return s;
  }
  static Series variable(const RingPtr& ring, unsigned i, int prec) {
    if (i >= ring->nvars()) throw domain_error("series: variable index out of range");
    Series s(ring, prec);
    s.add_term(mono_var(i), ring->field->one());
    return s;
  }
  static Series monomial(const RingPtr& ring, const std::vector<unsigned>& exps,
                         FF c, int prec) {
    Series s(ring, prec);
    s.add_term(mono_make(exps), c);
    return s;
  }

  const RingPtr& ring() const { return ring_; }
  int precision() const { return prec_; }
  const std::map<Mono, FF>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// smallest total degree of a term; equals precision for the zero series
  int order() const {
    if (terms_.empty()) return prec_;
    return static_cast<int>(mono_deg(terms_.begin()->first));
  }
  int degree_bound() const {  // largest stored degree, -1 if zero
    if (terms_.empty()) return -1;
    return static_cast<int>(mono_deg(terms_.rbegin()->first));
  }

  FF coeff(Mono m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
  }
  FF constant_term() const { return coeff(mono_one()); }

  void add_term(Mono m, FF c) {  // construction helper; keeps invariants
    if (c == 0 || static_cast<int>(mono_deg(m)) >= prec_) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second = ring_->field->add(it->second, c);
      if (it->second == 0) terms_.erase(it);
    }
  }

  Series truncate(int prec) const {
    Series r(ring_, std::min(prec_, prec));
    for (auto& [m, c] : terms_) r.add_term(m, c);
    return r;
  }

  Series operator+(const Series& o) const {
    check_ring(o);
    Series r(ring_, std::min(prec_, o.prec_));
    for (auto& [m, c] : terms_) r.add_term(m, c);
    for (auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
  }
  Series operator-(const Series& o) const {
    check_ring(o);
    Series r(ring_, std::min(prec_, o.prec_));
    for (auto& [m, c] : terms_) r.add_term(m, c);
    const Field& F = *ring_->field;
    for (auto& [m, c] : o.terms_) r.add_term(m, F.neg(c));
    return r;
  }
  Series operator*(const Series& o) const {
    check_ring(o);
    int prec = std::min(prec_ + o.order(), o.prec_ + order());
    Series r(ring_, prec);
    const Field& F = *ring_->field;
    for (auto& [m1, c1] : terms_)
      for (auto& [m2, c2] : o.terms_) {
        if (static_cast<int>(mono_deg(m1) + mono_deg(m2)) >= prec) continue;
        r.add_term(mono_mul(m1, m2), F.mul(c1, c2));
      }
    return r;
  }
  Series scale(FF c) const {
    Series r(ring_, prec_);
    const Field& F = *ring_->field;
    for (auto& [m, cc] : terms_) r.add_term(m, F.mul(cc, c));
    return r;
  }
  Series pow(unsigned e) const {
    Series r = constant(ring_, ring_->field->one(), kMaxPrecision);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    if (e == 0) r = r.truncate(prec_);
    return r;
  }

  bool operator==(const Series& o) const {
    return same_ring(ring_, o.ring_) && terms_ == o.terms_;
  }
  bool operator!=(const Series& o) const { return !(*this == o); }

  Series derivative(unsigned var) const {
    if (var >= ring_->nvars()) throw domain_error("series: variable index out of range");
    Series r(ring_, prec_ > 0 ? prec_ - 1 : 0);
    const Field& F = *ring_->field;
    for (auto& [m, c] : terms_) {
      unsigned e = mono_exp(m, var);
      if (e == 0) continue;
      FF cc = F.scale_int(c, e);
      if (cc == 0) continue;
      r.add_term(mono_div(m, mono_var(var)), cc);
    }
    return r;
  }

  /// Substitute images[i] for variable i.  All images must live in one
  /// common ring and have zero constant term, so that the composite is a
  /// well-defined local homomorphism.  The result precision is the minimum
  /// of this precision and the image precisions.
  Series substitute(const std::vector<Series>& images) const {
    if (images.size() != ring_->nvars())
      throw domain_error("series: substitution needs one image per variable");
    if (images.empty()) throw domain_error("series: empty substitution");
    RingPtr target = images[0].ring();
    int prec = prec_;
    for (auto& im : images) {
      if (!same_ring(im.ring(), target))
        throw domain_error("series: substitution images in different rings");
      if (im.constant_term() != 0)
        throw domain_error("series: substitution image has nonzero constant term");
      prec = std::min(prec, im.precision());
    }
    // cache powers of each image up to the largest exponent used
    std::vector<std::vector<Series>> powers(images.size());
    for (unsigned i = 0; i < images.size(); ++i)
      powers[i].push_back(Series::constant(target, target->field->one(), kMaxPrecision));
    Series r(target, prec);
    for (auto& [m, c] : terms_) {
      Series t = Series::constant(target, c, kMaxPrecision);
      for (unsigned i = 0; i < images.size(); ++i) {
        unsigned e = mono_exp(m, i);
        while (powers[i].size() <= e)
          powers[i].push_back(powers[i].back() * images[i]);
        if (e > 0) t = t * powers[i][e];
      }
      for (auto& [mm, cc] : t.terms()) r.add_term(mm, cc);
    }
    return r;
  }

  /// Exact division by a single monomial; errors if any term is not
  /// divisible.  Precision drops by the monomial degree (the unknown tail
  /// of degree >= precision divides down accordingly).
  Series divide_by_monomial(Mono m) const {
    Series r(ring_, std::max(0, prec_ - static_cast<int>(mono_deg(m))));
    for (auto& [mm, c] : terms_) {
      if (!mono_divides(m, mm))
        throw domain_error("series: term not divisible by monomial");
      r.add_term(mono_div(mm, m), c);
    }
    return r;
  }

  /// Substitute var -> var + c (a translation, exact for the stored terms).
  /// Truncation honesty: unknown tail terms of degree >= precision may have
  /// var-degree up to var_deg_bound; the shifted precision drops by it.
  Series shift_var(unsigned var, FF c, int var_deg_bound = -1) const {
    if (var >= ring_->nvars()) throw domain_error("series: variable index out of range");
    const Field& F = *ring_->field;
    int bound = var_deg_bound;
    if (bound < 0)
      for (auto& [m, cc] : terms_)
        bound = std::max(bound, static_cast<int>(mono_exp(m, var)));
    if (bound < 0) bound = 0;
    Series r(ring_, std::max(0, prec_ - bound));
    for (auto& [m, cc] : terms_) {
      unsigned e = mono_exp(m, var);
      Mono base = mono_div(m, mono_var(var, e));
      // (t + c)^e expanded binomially, binomials reduced mod p
      FF cpow = F.one();
      std::vector<FF> cpows(e + 1);
      for (unsigned j = 0; j <= e; ++j) { cpows[j] = cpow; cpow = F.mul(cpow, c); }
      std::vector<unsigned long> binom(e + 1, 0);
      binom[0] = 1;
      for (unsigned i = 1; i <= e; ++i)
        for (unsigned j = i; j > 0; --j)
          binom[j] = (binom[j] + binom[j - 1]) % F.p();
      for (unsigned j = 0; j <= e; ++j) {
        FF coef = F.mul(cc, cpows[e - j]);
        coef = F.mul(coef, F.from_int(static_cast<long>(binom[j])));
        if (coef == 0) continue;
        r.add_term(mono_mul(base, mono_var(var, j)), coef);
      }
    }
    return r;
  }

private:
  static int clamp_prec(int p) {
    if (p < 0) throw domain_error("series: negative precision");
    return std::min(p, kMaxPrecision);
  }
  void check_ring(const Series& o) const {
    if (!same_ring(ring_, o.ring_))
      throw domain_error("series: operands live in different rings");
  }

  RingPtr ring_;
  int prec_;
  std::map<Mono, FF> terms_;
};

/// Map a series into a ring with the same variable names over an extension
/// field, embedding every coefficient.
inline Series embed_series(const Series& s, const RingPtr& target) {
  if (s.ring()->vars != target->vars)
    throw domain_error("series: embedding requires identical variable lists");
  Series r(target, s.precision());
  for (auto& [m, c] : s.terms())
    r.add_term(m, s.ring()->field->embed_into(c, *target->field));
  return r;
}

/// Move a series into a ring whose variable list contains the source
/// variables (possibly at other positions); extra variables are unused.
inline Series extend_series(const Series& s, const RingPtr& target) {
  for (auto& name : s.ring()->vars)
    if (target->var_index(name) < 0)
      throw domain_error("series: variable missing in target ring");
  Series r(target, s.precision());
  for (auto& [m, c] : s.terms()) {
    std::vector<unsigned> exps(target->nvars(), 0);
    for (unsigned i = 0; i < s.ring()->nvars(); ++i)
      exps[static_cast<unsigned>(target->var_index(s.ring()->vars[i]))] = mono_exp(m, i);
    r.add_term(mono_make(exps), c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// text grammar: terms joined by '+'; a term is a '*'-joined list of factors;
// a factor is an integer, 'g' or 'g^j' (field generator power), or 'name'
// or 'name^e'.  Example:  z^2 + x^2*y^2*z + x*y^4 + y*x^4
// ---------------------------------------------------------------------------

inline Series parse_series(const RingPtr& ring, const std::string& text, int prec) {
  auto trim = [](std::string s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    size_t b = s.find_last_not_of(" \t\r\n");
    if (a == std::string::npos) return std::string();
    return s.substr(a, b - a + 1);
  };
  Series result(ring, prec);
  std::string body = trim(text);
  if (body.empty()) throw parse_error("series: empty polynomial text");
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t plus = body.find('+', pos);
    std::string term = trim(body.substr(pos, plus == std::string::npos
                                                 ? std::string::npos
                                                 : plus - pos));
    pos = (plus == std::string::npos) ? body.size() + 1 : plus + 1;
    if (term.empty()) throw parse_error("series: empty term");
    FF coef = ring->field->one();
    std::vector<unsigned> exps(ring->nvars(), 0);
    size_t fpos = 0;
    while (fpos <= term.size()) {
      size_t star = term.find('*', fpos);
      std::string factor = trim(term.substr(fpos, star == std::string::npos
                                                      ? std::string::npos
                                                      : star - fpos));
      fpos = (star == std::string::npos) ? term.size() + 1 : star + 1;
      if (factor.empty()) throw parse_error("series: empty factor in term '" + term + "'");
      // split base^exp
      std::string base = factor;
      long expo = 1;
      size_t caret = factor.find('^');
      if (caret != std::string::npos) {
        base = trim(factor.substr(0, caret));
        std::string etxt = trim(factor.substr(caret + 1));
        if (etxt.empty() || !std::all_of(etxt.begin(), etxt.end(),
                                         [](unsigned char c) { return std::isdigit(c); }))
          throw parse_error("series: bad exponent in '" + factor + "'");
        expo = std::stol(etxt);
      }
      if (base.empty()) throw parse_error("series: empty base in '" + factor + "'");
      if (std::isdigit(static_cast<unsigned char>(base[0]))) {
        if (!std::all_of(base.begin(), base.end(),
                         [](unsigned char c) { return std::isdigit(c); }))
          throw parse_error("series: bad factor '" + factor + "'");
        FF v = ring->field->from_int(std::stol(base));
        coef = ring->field->mul(coef, ring->field->pow(v, expo));
      } else if (base == "g") {
        coef = ring->field->mul(coef, ring->field->pow(ring->field->generator(), expo));
      } else {
        int vi = ring->var_index(base);
        if (vi < 0) throw parse_error("series: unknown variable '" + base + "'");
        if (expo < 0) throw parse_error("series: negative exponent");
        exps[static_cast<unsigned>(vi)] += static_cast<unsigned>(expo);
      }
    }
    result.add_term(mono_make(exps), coef);
  }
  return result;
}

inline std::string mono_to_string(const RingPtr& ring, Mono m, FF coef) {
  const Field& F = *ring->field;
  std::vector<std::string> parts;
  std::string ctxt = F.to_string(coef);
  if (m == mono_one() || ctxt != "1") parts.push_back(ctxt);
  for (unsigned i = 0; i < ring->nvars(); ++i) {
    unsigned e = mono_exp(m, i);
    if (e == 0) continue;
    parts.push_back(e == 1 ? ring->vars[i]
                           : ring->vars[i] + "^" + std::to_string(e));
  }
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "*";
    out += parts[i];
  }
  return out;
}

/// Canonical printing: terms in ascending graded order (degree, then the
/// packed lexicographic tie-break), which is also the internal term order.
inline std::string to_string(const Series& s) {
  if (s.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& [m, c] : s.terms()) {
    if (!first) out += " + ";
    out += mono_to_string(s.ring(), m, c);
    first = false;
  }
  return out;
}

}  // namespace ck

#endif
