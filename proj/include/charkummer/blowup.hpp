#ifndef CHARKUMMER_BLOWUP_HPP
#define CHARKUMMER_BLOWUP_HPP

#include <string>
#include <utility>
#include <vector>

#include "charkummer/involution.hpp"

namespace ck {

/// One affine chart of the blow-up of the ideal (a, b, z) in the invariant
/// ring k[[x,y,z]]/(f).  The a- and b-charts are complete intersections on
/// two relations; the z-chart is carried by its single principal relation.
struct ChartPresentation {
  Chart chart;
  RingPtr ring;
  std::vector<Series> relations;
  std::string note;
};

struct BlowupResult {
  ChartPresentation a_chart, b_chart, z_chart;
  int center_length;            // l = length of k[[x,y]]/(a,b)
  bool point_blowup_equivalent;  // l == 1: same as blowing up the point
  bool z_chart_exceptional_empty;
};

namespace detail {

inline ChartPresentation make_ab_chart(const InvolutionData& d, Chart chart, int prec) {
  bool achart = (chart == Chart::A);
  const Series& p = achart ? d.a : d.b;  // principal parameter
  const Series& s = achart ? d.b : d.a;  // secondary parameter
  std::vector<std::string> vars = d.rxy->vars;
  vars.push_back(achart ? "B" : "A");  // B = b/a resp. A = a/b
  vars.push_back("W");                 // W = z/a resp. z/b
  RingPtr ring = make_ring(d.rxy->field, vars);
  Series P = extend_series(p.truncate(prec), ring);
  Series x = Series::variable(ring, achart ? 0u : 1u, prec);  // x resp. y
  Series other = Series::variable(ring, achart ? 1u : 0u, prec);
  Series B = Series::variable(ring, 2, prec);
  Series W = Series::variable(ring, 3, prec);
  Series S = extend_series(s.truncate(prec), ring);
  Series r1 = W * W + P * B * W + x * B * B + other;
  Series r2 = B * P - S;
  std::string note = achart ? "a-chart: B=b/a, W=z/a" : "b-chart: A=a/b, W=z/b";
  return ChartPresentation{chart, ring, {r1, r2}, note};
}

inline ChartPresentation make_z_chart(const InvolutionData& d, int prec) {
  std::vector<std::string> vars = d.rxy->vars;
  vars.push_back("z");
  vars.push_back("A");  // A = a/z
  vars.push_back("B");  // B = b/z
  RingPtr ring = make_ring(d.rxy->field, vars);
  Series x = Series::variable(ring, 0, prec);
  Series y = Series::variable(ring, 1, prec);
  Series z = Series::variable(ring, 2, prec);
  Series A = Series::variable(ring, 3, prec);
  Series B = Series::variable(ring, 4, prec);
  Series one = Series::constant(ring, ring->field->one(), prec);
  Series rel = one + A * B * z + x * B * B + y * A * A;
  return ChartPresentation{Chart::Z, ring, {rel}, "z-chart: A=a/z, B=b/z"};
}

}  // namespace detail

/// The exceptional locus misses the z-chart: adding z = 0 to the chart
/// ideal (principal relation plus Az-a, Bz-b) produces the unit ideal.
inline bool z_chart_exceptional_empty(const InvolutionData& d, int degree = 12) {
  ChartPresentation zc = detail::make_z_chart(d, degree);
  RingPtr ring = zc.ring;
  Series z = Series::variable(ring, 2, degree);
  Series A = Series::variable(ring, 3, degree);
  Series B = Series::variable(ring, 4, degree);
  Series a5 = extend_series(d.a.truncate(degree), ring);
  Series b5 = extend_series(d.b.truncate(degree), ring);
  LocalIdeal ideal(ring, {zc.relations[0], A * z - a5, B * z - b5, z});
  Series one = Series::constant(ring, ring->field->one(), degree);
  return contains(ideal, one) != Containment::No;
}

inline BlowupResult blowup_invariant(const InvolutionData& d, int prec = 12,
                                     int z_check_degree = 10) {
  BlowupResult r{detail::make_ab_chart(d, Chart::A, prec),
                 detail::make_ab_chart(d, Chart::B, prec),
                 detail::make_z_chart(d, prec),
                 d.center_length,
                 d.center_length == 1,
                 false};
  r.z_chart_exceptional_empty = z_chart_exceptional_empty(d, z_check_degree);
  return r;
}

struct ConsistencyReport {
  Series residual;
  Series cofactor;  // multiplier of the auxiliary relation used in reduction
  bool ok;
};

/// Substitute z = a W (resp. b W) into the invariant equation, subtract
/// a^2 (resp. b^2) times the principal chart relation, and reduce the
/// difference modulo the auxiliary relation r2 = B a - b: the exact
/// cofactor is (a^2 W + x r2) (resp. (b^2 W + y r2)), so the residual
///   f(z = aW) - a^2 r1 - (a^2 W + x r2) r2
/// must vanish identically to precision.
inline ConsistencyReport chart_consistency_check(const InvolutionData& d, Chart chart,
                                                 int prec = 12) {
  if (chart == Chart::Z)
    throw domain_error("blowup: consistency check applies to the a/b charts");
  ChartPresentation cp = detail::make_ab_chart(d, chart, prec);
  RingPtr ring = cp.ring;
  bool achart = (chart == Chart::A);
  Series P = extend_series((achart ? d.a : d.b).truncate(prec), ring);
  Series x = Series::variable(ring, achart ? 0u : 1u, prec);
  Series W = Series::variable(ring, 3, prec);
  Series f = invariant_equation(d, prec);
  // move f into the chart ring with z -> P * W
  Series xf = Series::variable(ring, 0, prec);
  Series yf = Series::variable(ring, 1, prec);
  Series fz = f.substitute({xf, yf, P * W});
  Series cof = P * P * W + x * cp.relations[1];
  Series residual = fz - P * P * cp.relations[0] - cof * cp.relations[1];
  return ConsistencyReport{residual, cof, residual.is_zero()};
}

struct ChartSingularities {
  int origin_length;  // nonsmoothness length at the chart origin
  FieldPtr point_field;  // field containing all the singular slopes
  std::vector<std::pair<FF, int>> points;  // (slope, local length) per root
  int chart_total;  // sum of the local lengths over the chart
};

/// Local nonsmoothness lengths of the chart relations at every singular
/// point of the chart; the singular slopes are exactly the roots of the
/// chart regularity polynomial (within a bounded splitting extension).
inline ChartSingularities chart_singularities(const InvolutionData& d, Chart chart,
                                              int prec = 14, int closure_bound = 6) {
  if (chart == Chart::Z)
    throw domain_error("blowup: singularity analysis applies to the a/b charts");
  UniPoly P = chart_regularity_polynomial(d, chart);
  if (P.is_zero())
    throw domain_error("blowup: nonnormal quotient has no isolated chart singularities");
  int want = uni_distinct_root_count(P);
  // smallest tabulated extension where all roots live
  FieldPtr base = d.rxy->field;
  FieldPtr L = base;
  std::vector<FF> roots;
  for (unsigned j = 1; base->k() * j <= 8 && static_cast<int>(j) <= closure_bound; ++j) {
    FieldPtr cand;
    try {
      cand = Field::make(base->p(), base->k() * j);
    } catch (const domain_error&) {
      continue;
    }
    std::vector<FF> rs = uni_roots_in_field(uni_embed(P, cand));
    if (static_cast<int>(rs.size()) == want) {
      L = cand;
      roots = rs;
      break;
    }
  }
  if (static_cast<int>(roots.size()) != want)
    throw domain_error("blowup: regularity roots exceed the splitting bound");

  // chart relations over the splitting field
  RingPtr rxyL = make_ring(L, d.rxy->vars);
  InvolutionData dL = InvolutionData::make(embed_series(d.a, rxyL),
                                           embed_series(d.b, rxyL));
  ChartPresentation cp = detail::make_ab_chart(dL, chart, prec);
  auto local_length = [&](FF slope) {
    Series s1 = cp.relations[0].shift_var(2, slope, 2);
    Series s2 = cp.relations[1].shift_var(2, slope, 1);
    return nonsmoothness_length({s1, s2});
  };
  ChartSingularities out{nonsmoothness_length({cp.relations[0], cp.relations[1]}),
                         L, {}, 0};
  for (FF r : roots) {
    int len = local_length(r);
    out.points.emplace_back(r, len);
    out.chart_total += len;
  }
  return out;
}

struct FiberReport {
  bool fiber_ok;        // both chart fibers reduce to the single relation W^2
  Series fiber_relation_a, fiber_relation_b;
  int multiplicity;     // F = 2 F_red
  bool transition_ok;   // W_a = B W_b verified on the overlap
  int transition_degree;  // the twist degree of the underlying line bundle
};

/// The exceptional fiber is the infinitesimal thickening of a projective
/// line cut out by W^2 = 0 in each chart, glued by W_a = B W_b.
inline FiberReport exceptional_fiber_data(const InvolutionData& d, int prec = 12) {
  ChartPresentation ca = detail::make_ab_chart(d, Chart::A, prec);
  ChartPresentation cb = detail::make_ab_chart(d, Chart::B, prec);
  auto kill_xy = [&](const ChartPresentation& cp, const Series& rel) {
    RingPtr ring = cp.ring;
    Series z0 = Series::zero(ring, prec);
    Series B = Series::variable(ring, 2, prec);
    Series W = Series::variable(ring, 3, prec);
    return rel.substitute({z0, z0, B, W});
  };
  Series fa = kill_xy(ca, ca.relations[0]);
  Series fb = kill_xy(cb, cb.relations[0]);
  Series aux_a = kill_xy(ca, ca.relations[1]);
  Series aux_b = kill_xy(cb, cb.relations[1]);
  RingPtr ra = ca.ring;
  Series W = Series::variable(ra, 3, prec);
  Series Wb = Series::variable(cb.ring, 3, prec);
  bool fiber_ok = (fa == W * W) && (fb == Wb * Wb)
                  && aux_a.is_zero() && aux_b.is_zero();

  // transition: substituting W = B W' into the a-chart principal relation
  // reproduces B^2 times the b-chart relation written with b = B a, up to
  // the auxiliary relation:  r1a(W -> B W') = B^2 W'^2 + b B W' + y + x B^2
  //                                           + B W' (B a - b)
  Series x = Series::variable(ra, 0, prec);
  Series y = Series::variable(ra, 1, prec);
  Series B = Series::variable(ra, 2, prec);
  Series a4 = extend_series(d.a.truncate(prec), ra);
  Series b4 = extend_series(d.b.truncate(prec), ra);
  Series lhs = ca.relations[0].substitute({x, y, B, B * W});
  Series rhs = B * B * W * W + b4 * B * W + y + x * B * B + B * W * (B * a4 - b4);
  bool trans_ok = (lhs == rhs);
  return FiberReport{fiber_ok, fa, fb, 2, trans_ok, 1};
}

struct StrictTransform {
  Series transform;
  int multiplicity;
};

/// One chart of the blow-up of the origin: substitute w -> v w' for every
/// variable w other than the chart variable v, then factor out the maximal
/// power v^m.
inline StrictTransform point_blowup_chart(const Series& f, unsigned chart_var) {
  if (f.is_zero()) throw domain_error("blowup: cannot blow up the zero series");
  if (f.constant_term() != 0)
    throw domain_error("blowup: series must vanish at the origin");
  RingPtr ring = f.ring();
  if (chart_var >= ring->nvars())
    throw domain_error("blowup: chart variable out of range");
  Series v = Series::variable(ring, chart_var, kMaxPrecision);
  std::vector<Series> images;
  for (unsigned i = 0; i < ring->nvars(); ++i) {
    Series w = Series::variable(ring, i, kMaxPrecision);
    images.push_back(i == chart_var ? w : v * w);
  }
  Series g = f.substitute(images);
  unsigned m = 0xff;
  for (auto& [mono, c] : g.terms()) m = std::min(m, mono_exp(mono, chart_var));
  Series t = g.divide_by_monomial(mono_var(chart_var, m));
  return StrictTransform{t, static_cast<int>(m)};
}

/// Cartier divisors supported on the exceptional fiber have multiplicity
/// divisible by 2l, l the center length.
inline int cartier_multiple_check(const InvolutionData& d) { return 2 * d.center_length; }

}  // namespace ck

#endif
