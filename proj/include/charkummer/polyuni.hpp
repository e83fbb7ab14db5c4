#ifndef CHARKUMMER_POLYUNI_HPP
#define CHARKUMMER_POLYUNI_HPP

#include <vector>

#include "charkummer/field.hpp"

namespace ck {

/// Dense univariate polynomials over a finite field, coefficients listed
/// low degree first.  Small helper layer for regularity-polynomial root
/// analysis; all arithmetic is exact.
struct UniPoly {
  FieldPtr field;
  std::vector<FF> c;

  explicit UniPoly(FieldPtr f, std::vector<FF> coeffs = {})
      : field(std::move(f)), c(std::move(coeffs)) {
    trim();
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int deg() const { return static_cast<int>(c.size()) - 1; }
  FF lead() const { return c.back(); }
  FF coeff(unsigned i) const { return i < c.size() ? c[i] : 0; }

  FF eval(FF x) const {
    const Field& F = *field;
    FF r = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = F.add(F.mul(r, x), *it);
    return r;
  }

  UniPoly derivative() const {
    const Field& F = *field;
    std::vector<FF> d;
    for (unsigned i = 1; i < c.size(); ++i) d.push_back(F.scale_int(c[i], i));
    return UniPoly(field, std::move(d));
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    const Field& F = *field;
    FF inv = F.inv(lead());
    std::vector<FF> d(c);
    for (auto& x : d) x = F.mul(x, inv);
    return UniPoly(field, std::move(d));
  }

  /// reversal: x^deg * P(1/x)
  UniPoly reversal() const {
    std::vector<FF> d(c.rbegin(), c.rend());
    return UniPoly(field, std::move(d));
  }
};

inline UniPoly uni_mod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw domain_error("polyuni: division by zero polynomial");
  const Field& F = *a.field;
  std::vector<FF> r(a.c);
  FF lcinv = F.inv(b.lead());
  int db = b.deg();
  for (int dr = static_cast<int>(r.size()) - 1; dr >= db; --dr) {
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
    if (dr < db) break;
    FF f = F.mul(r[dr], lcinv);
    for (int i = 0; i <= db; ++i)
      r[dr - db + i] = F.sub(r[dr - db + i], F.mul(f, b.c[i]));
  }
  return UniPoly(a.field, std::move(r));
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = uni_mod(a, b);
    a = b;
    b = r;
  }
  return a.monic();
}

/// exact p-th root of a polynomial in x^p (used when the derivative vanishes)
inline UniPoly uni_pth_root(const UniPoly& a) {
  const Field& F = *a.field;
  unsigned p = F.p();
  std::vector<FF> d;
  for (unsigned i = 0; i < a.c.size(); i += p) {
    // p-th root of the coefficient: c ↦ c^(q/p)
    d.push_back(F.pow(a.c[i], static_cast<long>(F.q() / p)));
  }
  return UniPoly(a.field, std::move(d));
}

/// product of the distinct irreducible factors (degree = number of distinct
/// roots over the algebraic closure)
inline UniPoly uni_squarefree_part(const UniPoly& a) {
  if (a.is_zero()) return a;
  if (a.deg() == 0) return a.monic();
  UniPoly d = a.derivative();
  if (d.is_zero()) return uni_squarefree_part(uni_pth_root(a));
  UniPoly g = uni_gcd(a, d);
  // a / g is squarefree but may miss factors whose multiplicity is divisible
  // by p; recurse on g to recover them.
  // compute quotient a / g
  const Field& F = *a.field;
  std::vector<FF> r(a.c), q(a.c.size(), 0);
  int dg = g.deg();
  FF lcinv = F.inv(g.lead());
  for (int dr = static_cast<int>(r.size()) - 1; dr >= dg; --dr) {
    while (!r.empty() && r.back() == 0) r.pop_back();
    dr = static_cast<int>(r.size()) - 1;
    if (dr < dg) break;
    FF f = F.mul(r[dr], lcinv);
    q[dr - dg] = f;
    for (int i = 0; i <= dg; ++i)
      r[dr - dg + i] = F.sub(r[dr - dg + i], F.mul(f, g.c[i]));
  }
  UniPoly part1(a.field, std::move(q));
  UniPoly part2 = uni_squarefree_part(g);
  // lcm of the two squarefree parts = product / gcd
  UniPoly h = uni_gcd(part1, part2);
  // multiply part1 * part2
  std::vector<FF> prod(part1.c.size() + part2.c.size(), 0);
  for (unsigned i = 0; i < part1.c.size(); ++i)
    for (unsigned j = 0; j < part2.c.size(); ++j)
      prod[i + j] = F.add(prod[i + j], F.mul(part1.c[i], part2.c[j]));
  UniPoly pr(a.field, std::move(prod));
  // divide by h
  std::vector<FF> rr(pr.c), qq(pr.c.size(), 0);
  int dh = h.deg();
  FF hinv = F.inv(h.lead());
  for (int dr = static_cast<int>(rr.size()) - 1; dr >= dh; --dr) {
    while (!rr.empty() && rr.back() == 0) rr.pop_back();
    dr = static_cast<int>(rr.size()) - 1;
    if (dr < dh) break;
    FF f = F.mul(rr[dr], hinv);
    qq[dr - dh] = f;
    for (int i = 0; i <= dh; ++i)
      rr[dr - dh + i] = F.sub(rr[dr - dh + i], F.mul(f, h.c[i]));
  }
  return UniPoly(a.field, std::move(qq)).monic();
}

/// number of distinct roots over the algebraic closure
inline int uni_distinct_root_count(const UniPoly& a) {
  if (a.is_zero()) throw domain_error("polyuni: root count of the zero polynomial");
  if (a.deg() == 0) return 0;
  return uni_squarefree_part(a).deg();
}

/// all roots lying in the coefficient field itself (brute force; q <= 2^16)
inline std::vector<FF> uni_roots_in_field(const UniPoly& a) {
  std::vector<FF> roots;
  if (a.is_zero() || a.deg() == 0) return roots;
  const Field& F = *a.field;
  for (unsigned v = 0; v < F.q(); ++v)
    if (a.eval(static_cast<FF>(v)) == 0) roots.push_back(static_cast<FF>(v));
  return roots;
}

inline UniPoly uni_embed(const UniPoly& a, const FieldPtr& bigger) {
  std::vector<FF> d;
  for (FF x : a.c) d.push_back(a.field->embed_into(x, *bigger));
  return UniPoly(bigger, std::move(d));
}

}  // namespace ck

#endif
