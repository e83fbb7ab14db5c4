#ifndef CHARKUMMER_INVOLUTION_HPP
#define CHARKUMMER_INVOLUTION_HPP

#include <array>
#include <optional>

#include "charkummer/localring.hpp"
#include "charkummer/polyuni.hpp"

namespace ck {

/// A wild parameter system (a, b) in k[[x,y]], char 2, with (a,b) m-primary.
/// It encodes the involution u -> u+a, v -> v+b on k[[u,v]] whose invariant
/// ring is k[[x,y,z]]/(z^2 + a b z + x b^2 + y a^2) with
/// x = u^2 + a u, y = v^2 + b v, z = u b + v a.
struct InvolutionData {
  RingPtr rxy;
  Series a, b;
  FF ax, ay, bx, by;  // cached linear parts
  int center_length;  // length of k[[x,y]]/(a,b)

  static InvolutionData make(const Series& a, const Series& b) {
    RingPtr r = a.ring();
    if (!same_ring(r, b.ring()))
      throw domain_error("involution: a and b must live in one ring");
    if (r->nvars() != 2)
      throw domain_error("involution: parameter ring must have two variables");
    if (r->field->p() != 2)
      throw domain_error("involution: characteristic must be 2");
    if (a.constant_term() != 0 || b.constant_term() != 0)
      throw domain_error("involution: parameters must vanish at the origin");
    int l = artinian_length(LocalIdeal(r, {a, b}));
    if (l == kInfiniteLength)
      throw domain_error("involution: (a,b) is not m-primary");
    InvolutionData d{r, a, b, 0, 0, 0, 0, l};
    d.ax = a.coeff(mono_var(0));
    d.ay = a.coeff(mono_var(1));
    d.bx = b.coeff(mono_var(0));
    d.by = b.coeff(mono_var(1));
    return d;
  }

  /// the mirrored data: roles of (a,b) and (x,y) swapped, so that the
  /// b-chart of *this is the a-chart of the swap
  InvolutionData swapped() const {
    Series xs = Series::variable(rxy, 0, kMaxPrecision);
    Series ys = Series::variable(rxy, 1, kMaxPrecision);
    return make(b.substitute({ys, xs}), a.substitute({ys, xs}));
  }
};

/// the ring k[[x,y,z]] carrying the invariant equation; variable names are
/// taken from the parameter ring plus "z"
inline RingPtr invariant_ring(const InvolutionData& d) {
  std::vector<std::string> vars = d.rxy->vars;
  vars.push_back("z");
  return make_ring(d.rxy->field, vars);
}

/// f = z^2 + a b z + x b^2 + y a^2
inline Series invariant_equation(const InvolutionData& d, int prec,
                                 RingPtr r3 = nullptr) {
  if (!r3) r3 = invariant_ring(d);
  Series a3 = extend_series(d.a.truncate(prec), r3);
  Series b3 = extend_series(d.b.truncate(prec), r3);
  Series x = Series::variable(r3, 0, prec);
  Series y = Series::variable(r3, 1, prec);
  Series z = Series::variable(r3, 2, prec);
  return z * z + a3 * b3 * z + x * b3 * b3 + y * a3 * a3;
}

struct IdentityReport {
  Series residual_f;                 // f(x(u,v), y(u,v), z(u,v))
  Series residual_x, residual_y, residual_z;  // invariance defects
  bool ok;
};

/// Checks that the solved coordinates satisfy the invariant equation and
/// are fixed by the involution, to the stated precision.
inline IdentityReport verify_invariant_identity(const InvolutionData& d, int N) {
  ImplicitPair ip = solve_implicit_pair(d.a, d.b, N);
  Series f = invariant_equation(d, N);
  Series rf = f.substitute({ip.x, ip.y, ip.z});

  RingPtr ruv = ip.uv_ring;
  Series u = Series::variable(ruv, 0, N);
  Series v = Series::variable(ruv, 1, N);
  Series A = d.a.substitute({ip.x, ip.y});
  Series B = d.b.substitute({ip.x, ip.y});
  std::vector<Series> sigma = {u + A, v + B};
  Series rx = ip.x.substitute(sigma) - ip.x;
  Series ry = ip.y.substitute(sigma) - ip.y;
  Series rz = ip.z.substitute(sigma) - ip.z;
  bool ok = rf.is_zero() && rx.is_zero() && ry.is_zero() && rz.is_zero();
  return IdentityReport{rf, rx, ry, rz, ok};
}

struct FiberFixedReport {
  bool fiber_is_frobenius;  // (x,y,z)O_S == (u^2, v^2)
  LocalIdeal fixed_image;   // (a, b, z) in the invariant ring
};

inline FiberFixedReport fiber_and_fixed_ideals(const InvolutionData& d, int N = 12) {
  ImplicitPair ip = solve_implicit_pair(d.a, d.b, N);
  LocalIdeal fiber(ip.uv_ring, {ip.x, ip.y, ip.z});
  LocalIdeal frob = frobenius_power(ip.uv_ring, 2, N);
  bool eq = ideals_equal(fiber, frob);
  RingPtr r3 = invariant_ring(d);
  Series a3 = extend_series(d.a, r3);
  Series b3 = extend_series(d.b, r3);
  Series z = Series::variable(r3, 2, d.a.precision());
  return FiberFixedReport{eq, LocalIdeal(r3, {a3, b3, z})};
}

enum class Chart { A, B, Z };

/// a-chart: b_x + a_x λ + b_y λ^2 + a_y λ^3; the b-chart polynomial is the
/// mirrored form a_y + b_y μ + a_x μ^2 + b_x μ^3, which is exactly the
/// coefficient reversal of the a-chart one (consistent with the overlap
/// gluing λμ = 1 on the exceptional line).
inline UniPoly chart_regularity_polynomial(const InvolutionData& d, Chart chart) {
  if (chart == Chart::Z)
    throw domain_error("involution: regularity polynomial lives on the a/b charts");
  std::vector<FF> c = (chart == Chart::A)
                          ? std::vector<FF>{d.bx, d.ax, d.by, d.ay}
                          : std::vector<FF>{d.ay, d.by, d.ax, d.bx};
  return UniPoly(d.rxy->field, std::move(c));
}

struct SingularPointCount {
  bool nonnormal;  // both regularity polynomials vanish identically
  int count;       // distinct singular points on the exceptional line
};

/// Count of exceptional points of embedding dimension three, over the
/// algebraic closure.  Since the b-chart polynomial is the reversal of the
/// a-chart one, the overlap identification λμ=1 reduces the count to:
/// distinct roots of the a-chart polynomial plus the b-chart origin when
/// that is a root.
inline SingularPointCount count_singular_chart_points(const InvolutionData& d,
                                                      int closure_bound = 6) {
  (void)closure_bound;  // regularity polynomials have degree <= 3 < any bound
  UniPoly pa = chart_regularity_polynomial(d, Chart::A);
  UniPoly pb = chart_regularity_polynomial(d, Chart::B);
  if (pa.is_zero() && pb.is_zero()) return SingularPointCount{true, -1};
  int count = pa.is_zero() ? -1 : uni_distinct_root_count(pa);
  if (count < 0) throw domain_error("involution: inconsistent regularity polynomials");
  if (pb.coeff(0) == 0) ++count;  // the b-chart origin (mu = 0)
  return SingularPointCount{false, count};
}

struct EmbeddedComponentReport {
  bool embedded;    // linear parts of a and b all vanish
  bool witness_ok;  // containment chain verified (meaningful when embedded)
};

/// The quotient is non-normal iff a and b have no linear parts; in that
/// case the generic exceptional point carries an embedded component.  The
/// witness chain (x,y) <= (u^2,v^2) <= (u,v)^2 <= I = (u^2, v) together
/// with (a,b) <= I^2 certifies the trivial deformation direction.
inline EmbeddedComponentReport has_embedded_component(const InvolutionData& d,
                                                      int N = 12) {
  bool flag = d.ax == 0 && d.ay == 0 && d.bx == 0 && d.by == 0;
  if (!flag) return EmbeddedComponentReport{false, true};
  ImplicitPair ip = solve_implicit_pair(d.a, d.b, N);
  RingPtr ruv = ip.uv_ring;
  Series u = Series::variable(ruv, 0, N);
  Series v = Series::variable(ruv, 1, N);
  LocalIdeal frob = frobenius_power(ruv, 2, N);
  LocalIdeal m2(ruv, {u * u, u * v, v * v});
  LocalIdeal I(ruv, {u * u, v});
  LocalIdeal I2(ruv, {u.pow(4), u * u * v, v * v});
  auto in = [](const LocalIdeal& J, const Series& s) {
    return contains(J, s) != Containment::No;
  };
  bool ok = in(frob, ip.x) && in(frob, ip.y);
  ok = ok && in(m2, u * u) && in(m2, v * v);
  ok = ok && in(I, u * u) && in(I, u * v) && in(I, v * v);
  Series A = d.a.substitute({ip.x, ip.y});
  Series B = d.b.substitute({ip.x, ip.y});
  ok = ok && in(I2, A) && in(I2, B);
  return EmbeddedComponentReport{true, ok};
}

/// A point of the exceptional line, given by its chart and slope; carries
/// the induced length-2 ideal I = (u^2, λu+v) (a-chart; b-chart mirrored).
struct TangentVectorPoint {
  Chart chart;
  FF lambda;
};

namespace detail {

inline Series eps_part(const Series& s, unsigned evar) {
  Series r(s.ring(), s.precision());
  for (auto& [m, c] : s.terms()) {
    unsigned e = mono_exp(m, evar);
    if (e == 1) r.add_term(mono_div(m, mono_var(evar)), c);
    else if (e > 1)
      throw domain_error("involution: unexpected higher epsilon power");
  }
  return r;
}

inline Series classical_part(const Series& s, unsigned evar) {
  Series r(s.ring(), s.precision());
  for (auto& [m, c] : s.terms())
    if (mono_exp(m, evar) == 0) r.add_term(m, c);
  return r;
}

/// normal form modulo I = (u^2, λu+v): substitute v = λu, keep {1, u}
inline std::array<FF, 2> reduce_mod_length2(const Series& s, FF lambda) {
  RingPtr r = s.ring();
  const Field& F = *r->field;
  std::array<FF, 2> out = {0, 0};
  for (auto& [m, c] : s.terms()) {
    unsigned eu = mono_exp(m, 0), ev = mono_exp(m, 1);
    // v^ev -> λ^ev u^ev; then u^(eu+ev) dies unless <= 1
    if (eu + ev > 1) continue;
    FF contrib = F.mul(c, F.pow(lambda, ev));
    out[eu + ev] = F.add(out[eu + ev], contrib);
  }
  return out;
}

}  // namespace detail

/// First-order deformation of the fiber ideal I = (u^2, λu+v) induced by a
/// cotangent functional ψ on the chart generators (x, y, B−λ, W).  Returns
/// φ ∈ Hom(I/I^2, O/I) as the pair (φ(u^2), φ(λu+v)), each written in the
/// basis {1, u} of O/I = k[u]/(u^2).
inline std::array<std::array<FF, 2>, 2> tangent_image(const InvolutionData& data,
                                                      const TangentVectorPoint& pt,
                                                      const std::array<FF, 4>& psi,
                                                      int N = 10) {
  if (pt.chart == Chart::Z)
    throw domain_error("involution: tangent points live on the a/b charts");
  if (pt.chart == Chart::B)
    return tangent_image(data.swapped(), TangentVectorPoint{Chart::A, pt.lambda},
                         psi, N);
  const InvolutionData& d = data;
  const Field& F = *d.rxy->field;
  FF lam = pt.lambda;
  // cotangent relations on the chart generators:
  //   λ^2 x + y = 0 (linearized principal relation) and the linear part of
  //   λ a + b (the auxiliary relation B a = b at slope λ)
  FF rel1 = F.add(F.mul(F.mul(lam, lam), psi[0]), psi[1]);
  FF rel2 = F.add(F.mul(F.add(d.bx, F.mul(lam, d.ax)), psi[0]),
                  F.mul(F.add(d.by, F.mul(lam, d.ay)), psi[1]));
  if (rel1 != 0 || rel2 != 0)
    throw domain_error("involution: psi violates the chart cotangent relations");

  ImplicitPair ip = solve_implicit_pair(d.a, d.b, N);
  RingPtr ruve = make_ring(d.rxy->field, {"u", "v", "eps"});
  Series u = Series::variable(ruve, 0, N);
  Series e = Series::variable(ruve, 2, N);
  Series X = extend_series(ip.x, ruve);
  Series Y = extend_series(ip.y, ruve);
  Series A = extend_series(d.a.substitute({ip.x, ip.y}), ruve);

  // lift of u^2 into the deformed fiber ideal: (X + ε ψ1) − u (A + ε dA)
  // where dA is the first-order value of a at the deformed point
  FF dA = F.add(F.mul(d.ax, psi[0]), F.mul(d.ay, psi[1]));
  Series g1 = X + e.scale(psi[0]);
  Series h = A + e.scale(dA);
  Series f1 = g1 - u * h;
  if (detail::classical_part(f1, 2) != u * u)
    throw domain_error("involution: tangent lift failed to reproduce u^2");
  // lift of λu+v: the pullback of W minus its first-order value,
  // u(λ + ε ψ3) + v + ε ψ4 shifted to vanish: λu + v + ε(ψ3 u + ψ4)
  Series v = Series::variable(ruve, 1, N);
  Series f2 = u.scale(lam) + v + (u.scale(psi[2]) + Series::constant(ruve, psi[3], N)) * e;

  auto to_uv = [&](const Series& s) {
    RingPtr ruv = ip.uv_ring;
    Series r(ruv, s.precision());
    for (auto& [m, c] : s.terms()) {
      std::vector<unsigned> exps = {mono_exp(m, 0), mono_exp(m, 1)};
      r.add_term(mono_make(exps), c);
    }
    return r;
  };
  std::array<FF, 2> phi1 = detail::reduce_mod_length2(to_uv(detail::eps_part(f1, 2)), lam);
  std::array<FF, 2> phi2 = detail::reduce_mod_length2(to_uv(detail::eps_part(f2, 2)), lam);
  return {phi1, phi2};
}

/// Tangent dimension of the G-Hilbert scheme at the exceptional point:
/// 3, plus 1 exactly when the quotient carries the embedded component.
/// Cross-checked against the rank of the span of the table rows of
/// tangent_image over the admissible ψ.
inline int gh_tangent_dimension(const InvolutionData& d, const TangentVectorPoint& pt) {
  const Field& F = *d.rxy->field;
  bool emb = has_embedded_component(d).embedded;
  FF lam = pt.lambda;
  std::vector<std::array<FF, 4>> rows_psi = {
      {0, 0, 0, 1}, {0, 0, 1, 0}, {1, F.mul(lam, lam), 0, 0}};
  std::vector<std::array<FF, 4>> images;
  for (auto& psi : rows_psi) {
    try {
      auto im = tangent_image(d, pt, psi);
      images.push_back({im[0][0], im[0][1], im[1][0], im[1][1]});
    } catch (const domain_error&) {
      // psi not admissible at this point (embedding dimension two)
    }
  }
  // rank by Gaussian elimination over the field
  unsigned rank = 0;
  std::vector<std::array<FF, 4>> rows = images;
  for (unsigned col = 0; col < 4 && rank < rows.size(); ++col) {
    unsigned piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    FF inv = F.inv(rows[rank][col]);
    for (unsigned j = 0; j < 4; ++j) rows[rank][j] = F.mul(rows[rank][j], inv);
    for (unsigned i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      FF f = rows[i][col];
      for (unsigned j = 0; j < 4; ++j)
        rows[i][j] = F.sub(rows[i][j], F.mul(f, rows[rank][j]));
    }
    ++rank;
  }
  if (rank != images.size())
    throw domain_error("involution: tangent table rows are not independent");
  if (emb && images.size() != 3)
    throw domain_error("involution: embedded case must admit all three rows");
  return 3 + (emb ? 1 : 0);
}

}  // namespace ck

#endif
