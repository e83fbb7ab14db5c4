#ifndef CHARKUMMER_LOCALRING_HPP
#define CHARKUMMER_LOCALRING_HPP

#include <limits>
#include <map>
#include <optional>
#include <vector>

#include "charkummer/series.hpp"

namespace ck {

/// sentinel returned by artinian_length for non-Artinian quotients
constexpr int kInfiniteLength = std::numeric_limits<int>::max();

/// Ideal in the local ring k[[x_1..x_n]], given by truncated generators.
/// The working precision is the minimum generator precision.
struct LocalIdeal {
  RingPtr ring;
  std::vector<Series> gens;

  LocalIdeal(RingPtr r, std::vector<Series> g) : ring(std::move(r)), gens(std::move(g)) {
    for (auto& gen : gens)
      if (!same_ring(gen.ring(), ring))
        throw domain_error("localring: generator in wrong ring");
  }

  int precision() const {
    int p = kMaxPrecision;
    for (auto& g : gens) p = std::min(p, g.precision());
    return p;
  }
  bool has_unit() const {
    for (auto& g : gens)
      if (g.constant_term() != 0) return true;
    return false;
  }
};

/// Echelonized model of (I + m^d) inside A/m^d, built by exact linear
/// elimination over the coefficient field.  Rows are spans of products
/// (generator * monomial); pivots sit on the graded-lexicographically
/// smallest monomial of each row (degree first, then earlier variables).
/// Standard monomials (non-pivots of degree < d) descend to a basis of
/// A/(I + m^d).
class QuotientBasis {
public:
  QuotientBasis(const LocalIdeal& ideal, int d)
      : ring_(ideal.ring), d_(std::min(d, ideal.precision())) {
    if (d_ < 1) throw domain_error("localring: quotient degree must be >= 1");
    const Field& F = *ring_->field;
    // enumerate all monomials of degree < d (graded order)
    monos_ = all_monomials_below(ring_, d_);
    for (auto& g : ideal.gens) {
      if (g.is_zero()) continue;
      int o = g.order();
      for (Mono m : monos_) {
        if (static_cast<int>(mono_deg(m)) + o >= d_) continue;
        std::map<Mono, FF> row;
        for (auto& [gm, gc] : g.terms()) {
          Mono pm = mono_mul(gm, m);
          if (static_cast<int>(mono_deg(pm)) >= d_) continue;
          FF& slot = row[pm];
          slot = F.add(slot, gc);
          if (slot == 0) row.erase(pm);
        }
        insert_row(std::move(row));
      }
    }
    for (Mono m : monos_)
      if (!pivots_.count(m)) standard_.push_back(m);
  }

  const RingPtr& ring() const { return ring_; }
  int degree() const { return d_; }
  const std::vector<Mono>& standard_monomials() const { return standard_; }

  /// normal form of f modulo I + m^d: a combination of standard monomials
  Series reduce(const Series& f) const {
    const Field& F = *ring_->field;
    std::map<Mono, FF> work;
    for (auto& [m, c] : f.terms())
      if (static_cast<int>(mono_deg(m)) < d_) work[m] = c;
    Series out(ring_, d_);
    while (!work.empty()) {
      auto it = work.begin();
      Mono m = it->first;
      FF c = it->second;
      work.erase(it);
      auto piv = pivots_.find(m);
      if (piv == pivots_.end()) {
        out.add_term(m, c);
        continue;
      }
      // m is the pivot of a monic row: subtract c * row (cancels m, moves
      // weight to strictly larger monomials)
      for (auto& [rm, rc] : piv->second) {
        if (rm == m) continue;
        FF& slot = work[rm];
        slot = F.sub(slot, F.mul(c, rc));
        if (slot == 0) work.erase(rm);
      }
    }
    return out;
  }

  bool reduces_to_zero(const Series& f) const { return reduce(f).is_zero(); }

  /// Nakayama certificate: every monomial of degree d-1 lies in I + m^d,
  /// hence m^(d-1) is contained in I and the quotient is cut out exactly.
  bool nakayama_certificate() const {
    for (Mono m : monos_) {
      if (static_cast<int>(mono_deg(m)) != d_ - 1) continue;
      Series t(ring_, d_);
      t.add_term(m, ring_->field->one());
      if (!reduces_to_zero(t)) return false;
    }
    return true;
  }

  static std::vector<Mono> all_monomials_below(const RingPtr& ring, int d) {
    std::vector<Mono> out;
    std::vector<unsigned> exps(ring->nvars(), 0);
    enumerate(ring->nvars(), 0, d - 1, exps, out);
    std::sort(out.begin(), out.end());
    return out;
  }

private:
  static void enumerate(unsigned nvars, unsigned i, int budget,
                        std::vector<unsigned>& exps, std::vector<Mono>& out) {
    if (i == nvars) {
      out.push_back(mono_make(exps));
      return;
    }
    for (int e = 0; e <= budget; ++e) {
      exps[i] = static_cast<unsigned>(e);
      enumerate(nvars, i + 1, budget - e, exps, out);
    }
    exps[i] = 0;
  }

  void insert_row(std::map<Mono, FF> row) {
    const Field& F = *ring_->field;
    while (!row.empty()) {
      Mono lead = row.begin()->first;
      FF lc = row.begin()->second;
      auto piv = pivots_.find(lead);
      if (piv == pivots_.end()) {
        // normalize to a monic row and store
        if (lc != F.one()) {
          FF inv = F.inv(lc);
          for (auto& [m, c] : row) c = F.mul(c, inv);
        }
        pivots_.emplace(lead, std::move(row));
        return;
      }
      for (auto& [rm, rc] : piv->second) {
        FF delta = F.mul(lc, rc);
        auto it = row.find(rm);
        if (it == row.end()) {
          if (delta != 0) row.emplace(rm, F.neg(delta));
        } else {
          it->second = F.sub(it->second, delta);
          if (it->second == 0) row.erase(it);
        }
      }
    }
  }

  RingPtr ring_;
  int d_;
  std::vector<Mono> monos_;
  std::map<Mono, std::map<Mono, FF>> pivots_;
  std::vector<Mono> standard_;
};

inline QuotientBasis quotient_basis(const LocalIdeal& ideal, int d) {
  return QuotientBasis(ideal, d);
}

/// dim_k of A/I for an m-primary ideal I, found by raising the truncation
/// degree until the Nakayama certificate fires; kInfiniteLength when no
/// certificate exists within the working precision.
inline int artinian_length(const LocalIdeal& ideal) {
  bool any = false;
  for (auto& g : ideal.gens) any = any || !g.is_zero();
  if (!any) return ideal.ring->nvars() == 0 ? 1 : kInfiniteLength;
  int prec = ideal.precision();
  for (int d = 1; d <= prec; ++d) {
    QuotientBasis qb(ideal, d);
    if (qb.nakayama_certificate())
      return static_cast<int>(qb.standard_monomials().size());
  }
  return kInfiniteLength;
}

enum class Containment { No, YesModPrecision, Yes };

/// Is f in I?  "Yes" requires the Nakayama certificate at the working
/// degree (so m^(d-1) is inside I and the answer is exact); otherwise a
/// zero normal form only certifies membership modulo m^d.
inline Containment contains(const LocalIdeal& ideal, const Series& f) {
  int d = std::min(ideal.precision(), f.precision());
  QuotientBasis qb(ideal, d);
  if (!qb.reduces_to_zero(f)) return Containment::No;
  return qb.nakayama_certificate() ? Containment::Yes : Containment::YesModPrecision;
}

/// mutual containment of all generators, modulo the shared precision
inline bool ideals_equal(const LocalIdeal& a, const LocalIdeal& b) {
  for (auto& g : b.gens)
    if (contains(a, g) == Containment::No) return false;
  for (auto& g : a.gens)
    if (contains(b, g) == Containment::No) return false;
  return true;
}

/// the ideal (x_1^e, ..., x_n^e); e must be a power of the characteristic
inline LocalIdeal frobenius_power(const RingPtr& ring, unsigned e, int prec) {
  unsigned p = ring->field->p();
  unsigned t = e;
  while (t > 1) {
    if (t % p != 0) throw domain_error("localring: exponent is not a power of p");
    t /= p;
  }
  if (e == 0) throw domain_error("localring: exponent must be positive");
  std::vector<Series> gens;
  for (unsigned i = 0; i < ring->nvars(); ++i) {
    Series v = Series::variable(ring, i, prec);
    gens.push_back(v.pow(e).truncate(prec));
  }
  return LocalIdeal(ring, std::move(gens));
}

/// Tjurina number: length of A/(f, all partial derivatives of f)
inline int tjurina_number(const Series& f) {
  std::vector<Series> gens = {f};
  for (unsigned i = 0; i < f.ring()->nvars(); ++i)
    gens.push_back(f.derivative(i));
  return artinian_length(LocalIdeal(f.ring(), std::move(gens)));
}

/// matrix of partials of a list of relations (rows: relations, cols: vars)
inline std::vector<std::vector<Series>> jacobian_matrix(const std::vector<Series>& rels) {
  std::vector<std::vector<Series>> rows;
  for (auto& r : rels) {
    std::vector<Series> row;
    for (unsigned i = 0; i < r.ring()->nvars(); ++i) row.push_back(r.derivative(i));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// all 2x2 minors of the Jacobian of exactly two relations
inline std::vector<Series> jacobian_minors(const std::vector<Series>& rels) {
  if (rels.size() != 2)
    throw domain_error("localring: jacobian minors expect exactly two relations");
  auto jac = jacobian_matrix(rels);
  unsigned n = rels[0].ring()->nvars();
  std::vector<Series> minors;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      minors.push_back(jac[0][i] * jac[1][j] - jac[0][j] * jac[1][i]);
  return minors;
}

/// Length of the nonsmoothness scheme at the origin of a codimension-two
/// complete intersection given by two relations: the two relations plus
/// all 2x2 minors of their Jacobian.  Length 0 means the ideal contains a
/// unit (the origin is a smooth point); kInfiniteLength means the singular
/// locus is positive-dimensional through the origin.
inline int nonsmoothness_length(const std::vector<Series>& rels) {
  std::vector<Series> gens = rels;
  for (auto& m : jacobian_minors(rels)) gens.push_back(m);
  return artinian_length(LocalIdeal(rels[0].ring(), std::move(gens)));
}

/// Solution of the coupled system  x = u^2 + a(x,y) u,  y = v^2 + b(x,y) v,
/// z = u b(x,y) + v a(x,y)  as series in u, v (characteristic 2).  The pair
/// (a, b) must generate an m-primary ideal of k[[x,y]].
struct ImplicitPair {
  Series x, y, z;  // series in the (u, v) ring
  RingPtr uv_ring;
};

inline ImplicitPair solve_implicit_pair(const Series& a, const Series& b, int N) {
  RingPtr rxy = a.ring();
  if (!same_ring(rxy, b.ring()))
    throw domain_error("localring: a and b must live in one ring");
  if (rxy->nvars() != 2)
    throw domain_error("localring: implicit pair needs a two-variable ring");
  if (rxy->field->p() != 2)
    throw domain_error("localring: implicit pair requires characteristic 2");
  if (a.constant_term() != 0 || b.constant_term() != 0)
    throw domain_error("localring: a and b must vanish at the origin");
  if (artinian_length(LocalIdeal(rxy, {a, b})) == kInfiniteLength)
    throw domain_error("localring: (a, b) is not m-primary");

  RingPtr ruv = make_ring(rxy->field, {"u", "v"});
  Series u = Series::variable(ruv, 0, N);
  Series v = Series::variable(ruv, 1, N);
  Series xs = u * u, ys = v * v;
  for (int it = 0; it <= N + 1; ++it) {
    Series xn = u * u + a.substitute({xs, ys}) * u;
    Series yn = v * v + b.substitute({xs, ys}) * v;
    if (xn == xs && yn == ys) break;
    xs = xn;
    ys = yn;
    if (it == N + 1) throw domain_error("localring: implicit iteration did not converge");
  }
  Series zs = u * b.substitute({xs, ys}) + v * a.substitute({xs, ys});
  return ImplicitPair{xs, ys, zs, ruv};
}

}  // namespace ck

#endif
