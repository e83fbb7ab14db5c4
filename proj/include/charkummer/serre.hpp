#ifndef CHARKUMMER_SERRE_HPP
#define CHARKUMMER_SERRE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "charkummer/field.hpp"  // error types

namespace ck {

/// Query: the symmetric product Sym^n(X) of a smooth g-fold over a field of
/// characteristic p (0 or prime).
struct SymDepthQuery {
  int g = 1;
  int n = 0;
  int p = 0;
};

enum class Verdict { Yes, No, Undetermined };

inline std::string verdict_to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "undetermined";
  }
}

struct SymDepthReport {
  SymDepthQuery query;
  int dimension = 0;            // n*g
  Verdict cohen_macaulay = Verdict::Undetermined;
  int serre_level = 0;          // (S_k) guaranteed for k = serre_level
  bool fails_next_level = false;  // (S_{serre_level+1}) known to fail
  std::optional<int> depth;     // exact depth when known
  std::vector<std::string> notes;
};

/// depth bound of Ellingsrud–Skjelbred type: two plus the number of
/// irreducible representations occurring
inline int ellingsrud_skjelbred_depth(int num_irreducible_reps) {
  if (num_irreducible_reps < 0)
    throw domain_error("serre: negative representation count");
  return 2 + num_irreducible_reps;
}

/// depth of the relevant invariant ring in the range max(3,p) <= n < 2p
inline int kemper_depth(int g, int n, int p) {
  if (g < 1 || p < 2 || n < std::max(3, p) || n >= 2 * p)
    throw domain_error("serre: kemper_depth needs max(3,p) <= n < 2p");
  return std::min(g + 2, n * g);
}

inline bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline SymDepthReport sym_depth_report(const SymDepthQuery& q) {
  if (q.g < 1 || q.n < 0) throw domain_error("serre: need g >= 1 and n >= 0");
  if (q.p != 0 && !is_prime(q.p))
    throw domain_error("serre: characteristic must be 0 or prime");
  SymDepthReport r;
  r.query = q;
  r.dimension = q.n * q.g;
  int g = q.g, n = q.n, p = q.p;

  if (n <= 1 || g <= 1) {
    // Sym^n of a curve, a point, or at most one point: smooth
    r.cohen_macaulay = Verdict::Yes;
    r.depth = r.dimension;
    r.serre_level = r.dimension;
    r.notes.push_back("smooth");
    return r;
  }

  r.serre_level = std::min(g + 2, r.dimension);  // (S_{g+2}) always holds

  bool es_case = (p == 2 && n == 2 && g >= 3);
  bool kemper_case = (p >= 2 && n >= std::max(3, p) && n < 2 * p);

  if (p == 0 || p > n) {
    r.cohen_macaulay = Verdict::Yes;
    r.depth = r.dimension;
  } else if (r.dimension <= g + 2) {
    // guaranteed Serre level reaches the dimension
    r.cohen_macaulay = Verdict::Yes;
    r.depth = r.dimension;
  } else if (g >= 3 && n >= p) {
    r.cohen_macaulay = Verdict::No;
  }

  if (es_case) {
    r.depth = ellingsrud_skjelbred_depth(g);
    r.fails_next_level = true;
  }
  if (kemper_case) {
    r.depth = kemper_depth(g, n, p);
    if (r.serre_level < r.dimension) r.fails_next_level = true;
    if (g >= 3 && r.cohen_macaulay == Verdict::No)
      r.notes.push_back("canonical, but not rational");
  }
  if (r.depth) {
    // an exact depth settles the Cohen-Macaulay question
    r.cohen_macaulay = (*r.depth == r.dimension) ? Verdict::Yes : Verdict::No;
  } else if (r.cohen_macaulay == Verdict::Undetermined) {
    r.notes.push_back("depth not determined");
  }
  return r;
}

}  // namespace ck

#endif
