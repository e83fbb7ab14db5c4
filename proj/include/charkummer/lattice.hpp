#ifndef CHARKUMMER_LATTICE_HPP
#define CHARKUMMER_LATTICE_HPP

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "charkummer/field.hpp"  // for the error types

namespace ck {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// Configuration of exceptional curves on a smooth surface: self
/// intersections, arithmetic characteristics chi(O_E) and pairwise
/// intersection multiplicities.  All intersection theory is exact.
struct CurveConfig {
  struct Curve {
    std::string label;
    long self = -2;
    long chi = 1;
  };
  std::vector<Curve> curves;
  std::vector<std::vector<long>> mult;  // symmetric, zero diagonal

  static CurveConfig make(std::vector<Curve> cs) {
    CurveConfig c;
    c.curves = std::move(cs);
    c.mult.assign(c.curves.size(), std::vector<long>(c.curves.size(), 0));
    return c;
  }

  unsigned n() const { return static_cast<unsigned>(curves.size()); }

  void set_edge(unsigned i, unsigned j, long m) {
    if (i >= n() || j >= n() || i == j)
      throw domain_error("lattice: bad edge endpoints");
    if (m < 0) throw domain_error("lattice: negative intersection multiplicity");
    mult[i][j] = mult[j][i] = m;
  }

  long pairing(unsigned i, unsigned j) const {
    return i == j ? curves[i].self : mult[i][j];
  }

  int label_index(const std::string& label) const {
    for (unsigned i = 0; i < n(); ++i)
      if (curves[i].label == label) return static_cast<int>(i);
    return -1;
  }

  bool connected() const {
    if (curves.empty()) return false;
    std::vector<bool> seen(n(), false);
    std::vector<unsigned> stack = {0};
    seen[0] = true;
    while (!stack.empty()) {
      unsigned v = stack.back();
      stack.pop_back();
      for (unsigned w = 0; w < n(); ++w)
        if (!seen[w] && mult[v][w] > 0) {
          seen[w] = true;
          stack.push_back(w);
        }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }
};

using Cycle = std::vector<long>;
using QCycle = std::vector<Rat>;

inline std::vector<std::vector<Int>> intersection_matrix(const CurveConfig& c) {
  unsigned n = c.n();
  std::vector<std::vector<Int>> M(n, std::vector<Int>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) M[i][j] = c.pairing(i, j);
  return M;
}

/// fraction-free (Bareiss) determinant
inline Int bareiss_det(std::vector<std::vector<Int>> M) {
  unsigned n = static_cast<unsigned>(M.size());
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (unsigned k = 0; k + 1 < n; ++k) {
    if (M[k][k] == 0) {
      unsigned swap = k + 1;
      while (swap < n && M[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(M[k], M[swap]);
      sign = -sign;
    }
    for (unsigned i = k + 1; i < n; ++i)
      for (unsigned j = k + 1; j < n; ++j)
        M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) / prev;
    prev = M[k][k];
  }
  return sign > 0 ? M[n - 1][n - 1] : -M[n - 1][n - 1];
}

/// Sylvester criterion with exact minors: (-1)^k det(M_k) > 0 for all k.
inline bool is_negative_definite(const CurveConfig& c) {
  auto M = intersection_matrix(c);
  for (unsigned k = 1; k <= c.n(); ++k) {
    std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
    for (unsigned i = 0; i < k; ++i)
      for (unsigned j = 0; j < k; ++j) sub[i][j] = M[i][j];
    Int d = bareiss_det(std::move(sub));
    if (k % 2 == 0 ? d <= 0 : d >= 0) return false;
  }
  return true;
}

inline Int cycle_pairing(const CurveConfig& c, const Cycle& z1, const Cycle& z2) {
  if (z1.size() != c.n() || z2.size() != c.n())
    throw domain_error("lattice: cycle size mismatch");
  Int s = 0;
  for (unsigned i = 0; i < c.n(); ++i)
    for (unsigned j = 0; j < c.n(); ++j)
      s += Int(z1[i]) * c.pairing(i, j) * z2[j];
  return s;
}

inline Int cycle_dot_curve(const CurveConfig& c, const Cycle& z, unsigned i) {
  Int s = 0;
  for (unsigned j = 0; j < c.n(); ++j) s += Int(z[j]) * c.pairing(j, i);
  return s;
}

/// Laufer's algorithm with an explicit curve trial order (for the
/// order-independence property); starts at the reduced exceptional cycle.
inline Cycle fundamental_cycle_with_order(const CurveConfig& c,
                                          const std::vector<unsigned>& order) {
  if (!c.connected()) throw domain_error("lattice: configuration is not connected");
  if (!is_negative_definite(c))
    throw domain_error("lattice: configuration is not negative definite");
  Cycle z(c.n(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (unsigned i : order) {
      if (cycle_dot_curve(c, z, i) > 0) {
        ++z[i];
        changed = true;
        break;
      }
    }
  }
  return z;
}

inline Cycle fundamental_cycle(const CurveConfig& c) {
  std::vector<unsigned> order(c.n());
  std::iota(order.begin(), order.end(), 0u);
  return fundamental_cycle_with_order(c, order);
}

/// exact rational solve of M x = rhs; throws on singular M
inline QCycle solve_rational(const std::vector<std::vector<Int>>& M0,
                             const std::vector<Rat>& rhs0) {
  unsigned n = static_cast<unsigned>(M0.size());
  std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n + 1));
  for (unsigned i = 0; i < n; ++i) {
    for (unsigned j = 0; j < n; ++j) A[i][j] = Rat(M0[i][j]);
    A[i][n] = rhs0[i];
  }
  for (unsigned col = 0; col < n; ++col) {
    unsigned piv = col;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) throw domain_error("lattice: singular intersection matrix");
    std::swap(A[col], A[piv]);
    Rat inv = A[col][col];
    for (unsigned j = col; j <= n; ++j) A[col][j] /= inv;
    for (unsigned i = 0; i < n; ++i) {
      if (i == col || A[i][col] == 0) continue;
      Rat f = A[i][col];
      for (unsigned j = col; j <= n; ++j) A[i][j] -= f * A[col][j];
    }
  }
  QCycle x(n);
  for (unsigned i = 0; i < n; ++i) x[i] = A[i][n];
  return x;
}

/// Discrepancy cycle K: exact solution of K.E_i + E_i^2 = -2 chi(O_{E_i}).
inline QCycle canonical_cycle(const CurveConfig& c) {
  std::vector<Rat> rhs(c.n());
  for (unsigned i = 0; i < c.n(); ++i)
    rhs[i] = Rat(-c.curves[i].self - 2 * c.curves[i].chi);
  return solve_rational(intersection_matrix(c), rhs);
}

/// verify M K = rhs exactly (back-substitution residual)
inline bool canonical_cycle_residual_zero(const CurveConfig& c, const QCycle& K) {
  for (unsigned i = 0; i < c.n(); ++i) {
    Rat s = 0;
    for (unsigned j = 0; j < c.n(); ++j) s += Rat(c.pairing(i, j)) * K[j];
    if (s != Rat(-c.curves[i].self - 2 * c.curves[i].chi)) return false;
  }
  return true;
}

/// minimally elliptic: K = -Z exactly, as integral cycles
inline bool is_minimally_elliptic(const CurveConfig& c) {
  Cycle z = fundamental_cycle(c);
  QCycle k = canonical_cycle(c);
  for (unsigned i = 0; i < c.n(); ++i)
    if (k[i] != Rat(-z[i])) return false;
  return true;
}

inline int elliptic_multiplicity(const CurveConfig& c) {
  if (!is_minimally_elliptic(c))
    throw domain_error("lattice: multiplicity formula needs a minimally elliptic config");
  Cycle z = fundamental_cycle(c);
  Int zz = cycle_pairing(c, z, z);
  Int m = -zz;
  long mv = m.convert_to<long>();
  return std::max(2L, mv) > 2 ? static_cast<int>(mv) : 2;
}

struct CartierSolution {
  bool integral;
  QCycle solution;
};

/// Solve M x = pairing vector; the divisor is numerically Cartier along
/// the configuration iff the solution is integral.
inline CartierSolution numerically_cartier(const CurveConfig& c,
                                           const Cycle& pairings) {
  if (!is_negative_definite(c))
    throw domain_error("lattice: configuration is not negative definite");
  std::vector<Rat> rhs(c.n());
  for (unsigned i = 0; i < c.n(); ++i) rhs[i] = Rat(pairings[i]);
  QCycle x = solve_rational(intersection_matrix(c), rhs);
  bool integral = std::all_of(x.begin(), x.end(), [](const Rat& r) {
    return boost::multiprecision::denominator(r) == 1;
  });
  return CartierSolution{integral, x};
}

/// Blow up a closed point: a free point (empty center) or a point on a
/// single curve with multiplicity 1.  Appends a fresh (-1)-curve.
inline CurveConfig point_blowup(const CurveConfig& c,
                                const std::vector<std::pair<unsigned, long>>& through,
                                const std::string& label = "") {
  if (through.size() > 1)
    throw domain_error("lattice: blow-up centers on several curves are unsupported");
  for (auto& [i, m] : through) {
    if (i >= c.n()) throw domain_error("lattice: blow-up center index out of range");
    if (m != 1)
      throw domain_error("lattice: only transverse centers (multiplicity 1) are supported");
  }
  CurveConfig out = c;
  CurveConfig::Curve fresh;
  fresh.label = label.empty() ? "E" + std::to_string(c.n() + 1) : label;
  fresh.self = -1;
  fresh.chi = 1;
  out.curves.push_back(fresh);
  for (auto& row : out.mult) row.push_back(0);
  out.mult.emplace_back(out.n(), 0);
  for (auto& [i, m] : through) {
    out.curves[i].self -= m * m;
    out.set_edge(i, out.n() - 1, m);
  }
  return out;
}

/// induced subconfiguration on the complement of `removed`, split into
/// connected components (curve order preserved within each component)
inline std::vector<CurveConfig> remove_curves(const CurveConfig& c,
                                              const std::vector<unsigned>& removed) {
  std::vector<bool> gone(c.n(), false);
  for (unsigned i : removed) {
    if (i >= c.n()) throw domain_error("lattice: removal index out of range");
    gone[i] = true;
  }
  std::vector<int> comp(c.n(), -1);
  int ncomp = 0;
  for (unsigned s = 0; s < c.n(); ++s) {
    if (gone[s] || comp[s] >= 0) continue;
    std::vector<unsigned> stack = {s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      unsigned v = stack.back();
      stack.pop_back();
      for (unsigned w = 0; w < c.n(); ++w)
        if (!gone[w] && comp[w] < 0 && c.mult[v][w] > 0) {
          comp[w] = ncomp;
          stack.push_back(w);
        }
    }
    ++ncomp;
  }
  std::vector<CurveConfig> out(ncomp);
  std::vector<std::vector<unsigned>> members(ncomp);
  for (unsigned i = 0; i < c.n(); ++i)
    if (comp[i] >= 0) members[comp[i]].push_back(i);
  for (int k = 0; k < ncomp; ++k) {
    std::vector<CurveConfig::Curve> cs;
    for (unsigned i : members[k]) cs.push_back(c.curves[i]);
    out[k] = CurveConfig::make(std::move(cs));
    for (unsigned a = 0; a < members[k].size(); ++a)
      for (unsigned b = a + 1; b < members[k].size(); ++b)
        if (c.mult[members[k][a]][members[k][b]] > 0)
          out[k].set_edge(a, b, c.mult[members[k][a]][members[k][b]]);
  }
  return out;
}

struct DynkinType {
  char family = 0;  // 'A', 'D', 'E', or 0 for none
  int n = 0;
  bool ok() const { return family != 0; }
  std::string name() const {
    return ok() ? std::string(1, family) + std::to_string(n) : "none";
  }
  bool operator==(const DynkinType& o) const {
    return family == o.family && n == o.n;
  }
};

/// ADE recognition for (-2)-curve trees via degree sequences and arm
/// lengths; returns family=0 when the configuration is not an ADE graph.
inline DynkinType dynkin_recognize(const CurveConfig& c) {
  unsigned n = c.n();
  if (n == 0 || !c.connected()) return {};
  unsigned edges = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (c.curves[i].self != -2 || c.curves[i].chi != 1) return {};
    for (unsigned j = i + 1; j < n; ++j) {
      if (c.mult[i][j] > 1) return {};
      edges += c.mult[i][j];
    }
  }
  if (edges != n - 1) return {};  // connected + n-1 edges = tree
  std::vector<unsigned> deg(n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) deg[i] += (i != j && c.mult[i][j] > 0);
  unsigned deg3 = 0, branch = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (deg[i] > 3) return {};
    if (deg[i] == 3) {
      ++deg3;
      branch = i;
    }
  }
  if (deg3 == 0) return {'A', static_cast<int>(n)};
  if (deg3 > 1) return {};
  // measure the three arm lengths from the branch vertex
  std::vector<unsigned> arms;
  for (unsigned s = 0; s < n; ++s) {
    if (c.mult[branch][s] == 0) continue;
    unsigned len = 1, prev = branch, cur = s;
    for (;;) {
      unsigned next = n;
      for (unsigned w = 0; w < n; ++w)
        if (w != prev && c.mult[cur][w] > 0) next = w;
      if (next == n) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms.size() != 3) return {};
  if (arms[0] == 1 && arms[1] == 1) return {'D', static_cast<int>(n)};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
    return {'E', static_cast<int>(n)};
  return {};
}

/// ADE graphs with Bourbaki vertex numbering (labels "1".."n"):
/// A_n a chain; D_n a chain 1..n-2 with both n-1 and n attached to n-2;
/// E_n the chain 1-3-4-...-n with vertex 2 attached to vertex 4.
inline CurveConfig dynkin_graph(char family, int n) {
  auto bad = [&] { throw domain_error("lattice: no such Dynkin graph"); };
  std::vector<CurveConfig::Curve> cs(static_cast<unsigned>(n));
  if (n < 1) bad();
  for (int i = 0; i < n; ++i) cs[i].label = std::to_string(i + 1);
  CurveConfig c = CurveConfig::make(std::move(cs));
  if (family == 'A') {
    for (int i = 0; i + 1 < n; ++i) c.set_edge(i, i + 1, 1);
  } else if (family == 'D') {
    if (n < 4) bad();
    for (int i = 0; i + 1 < n - 2; ++i) c.set_edge(i, i + 1, 1);
    c.set_edge(n - 3, n - 2, 1);
    c.set_edge(n - 3, n - 1, 1);
  } else if (family == 'E') {
    if (n < 6 || n > 8) bad();
    c.set_edge(0, 2, 1);
    for (int i = 2; i + 1 < n; ++i) c.set_edge(i, i + 1, 1);
    c.set_edge(1, 3, 1);
  } else {
    bad();
  }
  return c;
}

struct SearchSpec {
  std::vector<long> self;            // fixed self-intersections, size n
  std::vector<long> chi_options;     // allowed chi values per curve
  std::optional<Cycle> target_z;     // required fundamental cycle
  std::optional<long> target_z2;     // required Z^2
  bool require_minimally_elliptic = false;
  long max_mult = 2;
};

/// Exhaustive enumeration of symmetric adjacency assignments consistent
/// with the constraints; results in lexicographic adjacency order.
inline std::vector<CurveConfig> constraint_search(const SearchSpec& spec) {
  unsigned n = static_cast<unsigned>(spec.self.size());
  if (n == 0 || n > 7) throw domain_error("lattice: search size out of bounds");
  if (spec.max_mult < 0 || spec.max_mult > 2)
    throw domain_error("lattice: multiplicity bound out of range");
  for (long chi : spec.chi_options)
    if (chi != 0 && chi != 1)
      throw domain_error("lattice: chi options limited to {0,1}");
  // pair order grouped by the larger index, so that the leading principal
  // submatrix is complete as soon as all pairs below a threshold are set
  std::vector<std::pair<unsigned, unsigned>> pairs;
  for (unsigned j = 1; j < n; ++j)
    for (unsigned i = 0; i < j; ++i) pairs.emplace_back(i, j);

  std::vector<CurveConfig::Curve> cs(n);
  for (unsigned i = 0; i < n; ++i) {
    cs[i].label = "C" + std::to_string(i + 1);
    cs[i].self = spec.self[i];
  }
  CurveConfig base = CurveConfig::make(cs);
  std::vector<CurveConfig> results;

  std::function<void(unsigned, CurveConfig&)> walk = [&](unsigned idx, CurveConfig& c) {
    if (idx == pairs.size()) {
      if (!c.connected() || !is_negative_definite(c)) return;
      // chi assignments (adjacency-independent constraints already hold)
      std::vector<unsigned> pick(n, 0);
      for (;;) {
        for (unsigned i = 0; i < n; ++i) c.curves[i].chi = spec.chi_options[pick[i]];
        bool ok = true;
        Cycle z = fundamental_cycle(c);
        if (spec.target_z && z != *spec.target_z) ok = false;
        if (ok && spec.target_z2 &&
            cycle_pairing(c, z, z) != Int(*spec.target_z2))
          ok = false;
        if (ok && spec.require_minimally_elliptic && !is_minimally_elliptic(c))
          ok = false;
        if (ok) results.push_back(c);
        unsigned i = 0;
        while (i < n && ++pick[i] == spec.chi_options.size()) pick[i++] = 0;
        if (i == n) break;
      }
      for (unsigned i = 0; i < n; ++i) c.curves[i].chi = 1;
      return;
    }
    auto [i, j] = pairs[idx];
    bool closes_block = (idx + 1 == pairs.size()) || (pairs[idx + 1].second != j);
    for (long m = 0; m <= spec.max_mult; ++m) {
      c.set_edge(i, j, m);
      if (closes_block) {
        // leading (j+1)x(j+1) principal submatrix is complete: prune
        std::vector<std::vector<Int>> sub(j + 1, std::vector<Int>(j + 1));
        bool neg = true;
        for (unsigned k = 1; k <= j + 1 && neg; ++k) {
          for (unsigned a = 0; a < k; ++a)
            for (unsigned b = 0; b < k; ++b) sub[a][b] = c.pairing(a, b);
          std::vector<std::vector<Int>> lead(k, std::vector<Int>(k));
          for (unsigned a = 0; a < k; ++a)
            for (unsigned b = 0; b < k; ++b) lead[a][b] = sub[a][b];
          Int d = bareiss_det(std::move(lead));
          if (k % 2 == 0 ? d <= 0 : d >= 0) neg = false;
        }
        if (!neg) continue;
      }
      walk(idx + 1, c);
    }
    c.set_edge(i, j, 0);
  };
  if (spec.chi_options.empty())
    throw domain_error("lattice: no chi options supplied");
  walk(0, base);
  return results;
}

// ---------------------------------------------------------------------------
// graph file format (line oriented):
//   curve <label> self=<int> [chi=<int>]
//   edge <label> <label> [mult=<int>]
//   cycle <label>=<int> <label>=<int> ...
// ---------------------------------------------------------------------------

struct GraphFile {
  CurveConfig config;
  std::vector<Cycle> cycles;
};

inline GraphFile parse_graph_file(const std::string& text) {
  GraphFile out;
  std::vector<std::pair<unsigned, unsigned>> seen_edges;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) {
    throw parse_error("graph file line " + std::to_string(lineno) + ": " + msg);
  };
  auto keyval = [&](const std::string& tok, const std::string& key) -> std::optional<long> {
    if (tok.rfind(key + "=", 0) != 0) return std::nullopt;
    try {
      return std::stol(tok.substr(key.size() + 1));
    } catch (...) {
      fail("bad integer in '" + tok + "'");
      return std::nullopt;
    }
  };
  struct PendingEdge {
    std::string a, b;
    long m;
  };
  std::vector<PendingEdge> edges;
  std::vector<std::vector<std::pair<std::string, long>>> cycle_specs;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    if (word == "curve") {
      CurveConfig::Curve cur;
      if (!(ls >> cur.label)) fail("curve needs a label");
      if (out.config.label_index(cur.label) >= 0) fail("duplicate curve label");
      bool have_self = false;
      std::string tok;
      while (ls >> tok) {
        if (auto v = keyval(tok, "self")) {
          cur.self = *v;
          have_self = true;
        } else if (auto v2 = keyval(tok, "chi")) {
          cur.chi = *v2;
        } else {
          fail("unknown attribute '" + tok + "'");
        }
      }
      if (!have_self) fail("curve needs self=<int>");
      out.config.curves.push_back(cur);
    } else if (word == "edge") {
      PendingEdge e{"", "", 1};
      if (!(ls >> e.a >> e.b)) fail("edge needs two labels");
      std::string tok;
      while (ls >> tok) {
        if (auto v = keyval(tok, "mult"))
          e.m = *v;
        else
          fail("unknown attribute '" + tok + "'");
      }
      edges.push_back(e);
    } else if (word == "cycle") {
      std::vector<std::pair<std::string, long>> spec;
      std::string tok;
      while (ls >> tok) {
        size_t eq = tok.find('=');
        if (eq == std::string::npos) fail("cycle entries look like label=<int>");
        try {
          spec.emplace_back(tok.substr(0, eq), std::stol(tok.substr(eq + 1)));
        } catch (...) {
          fail("bad integer in '" + tok + "'");
        }
      }
      cycle_specs.push_back(std::move(spec));
    } else {
      fail("unknown directive '" + word + "'");
    }
  }
  unsigned n = out.config.n();
  out.config.mult.assign(n, std::vector<long>(n, 0));
  for (auto& e : edges) {
    int ia = out.config.label_index(e.a), ib = out.config.label_index(e.b);
    if (ia < 0 || ib < 0) throw parse_error("graph file: unknown label in edge");
    if (ia == ib) throw parse_error("graph file: self-edge rejected");
    unsigned a = static_cast<unsigned>(std::min(ia, ib));
    unsigned b = static_cast<unsigned>(std::max(ia, ib));
    for (auto& s : seen_edges)
      if (s.first == a && s.second == b)
        throw parse_error("graph file: duplicate edge " + e.a + " " + e.b);
    seen_edges.emplace_back(a, b);
    out.config.set_edge(a, b, e.m);
  }
  for (auto& spec : cycle_specs) {
    Cycle z(n, 0);
    for (auto& [label, v] : spec) {
      int i = out.config.label_index(label);
      if (i < 0) throw parse_error("graph file: unknown label in cycle");
      z[static_cast<unsigned>(i)] = v;
    }
    out.cycles.push_back(std::move(z));
  }
  return out;
}

inline std::string rational_to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace ck

#endif
