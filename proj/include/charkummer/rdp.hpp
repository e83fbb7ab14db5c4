#ifndef CHARKUMMER_RDP_HPP
#define CHARKUMMER_RDP_HPP

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "charkummer/involution.hpp"
#include "charkummer/lattice.hpp"
#include "charkummer/localring.hpp"

namespace ck {

/// One rational double point class in characteristic 2, carrying the Artin
/// coindex r that refines the Dynkin type in small characteristic.
struct RDPClass {
  std::string name;               // e.g. "D7^0", "A3"
  char family = 'A';              // A, D, E
  int n = 0;                      // Dynkin index
  std::optional<int> coindex;     // Artin coindex r (absent for A)
  std::optional<std::string> equation;  // defining polynomial, if stored
  std::optional<int> tau;         // stored Tjurina number
  bool pi1_order2 = false;        // local fundamental group of order two
  std::string note;               // e.g. the D2 = pair-of-A1 remark
};

/// versioned ASCII database shipped in the repo (identical copy in
/// data/rdp_classes.txt); columns: name family n r tau pi1 equation,
/// '-' marking absent values, '#' starting comments
inline const char* rdp_default_database() {
  return R"(# rdp_classes v1
# name  family n r  tau pi1  equation
A1      A 1 -  2  -    x*y + z^2
A3      A 3 -  4  -    x*y + z^4
A5      A 5 -  6  -    x*y + z^6
D2^0    D 2 0  4  -    -            # splits as a pair of A1 points
D4^0    D 4 0  8  -    -
D6^0    D 6 0  12 -    -
D7^0    D 7 0  12 -    -
D7^1    D 7 1  10 -    -
D7^2    D 7 2  8  -    -
D4^1    D 4 1  6  -    z^2 + x*y*z + x*y^2 + x^2*y
D8^2    D 8 2  12 -    z^2 + x*y^2*z + x*y^4 + x^2*y
D12^3   D 12 3 18 -    z^2 + x*y^3*z + x*y^6 + x^2*y
E8^2    E 8 2  12 yes  z^2 + x^2*y*z + x^5 + y^3
)";
}

namespace detail {

inline int rdp_tau_compute(const std::string& equation) {
  FieldPtr F = Field::make(2, 1);
  RingPtr r3 = make_ring(F, {"x", "y", "z"});
  return tjurina_number(parse_series(r3, equation, 20));
}

}  // namespace detail

class RDPDatabase {
 public:
  /// Parse and self-check: every stored equation must reproduce the stored
  /// Tjurina number under the exact local-ring computation.
  static RDPDatabase load(const std::string& text = rdp_default_database()) {
    RDPDatabase db;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      RDPClass c;
      std::string fam, rtok, tautok, pitok;
      if (!(ls >> c.name)) continue;
      if (!(ls >> fam >> c.n >> rtok >> tautok >> pitok))
        throw parse_error("rdp database line " + std::to_string(lineno) +
                          ": expected name family n r tau pi1 [equation]");
      if (fam.size() != 1 || (fam[0] != 'A' && fam[0] != 'D' && fam[0] != 'E'))
        throw parse_error("rdp database line " + std::to_string(lineno) +
                          ": bad family '" + fam + "'");
      c.family = fam[0];
      if (rtok != "-") c.coindex = std::stoi(rtok);
      if (tautok != "-") c.tau = std::stoi(tautok);
      c.pi1_order2 = (pitok == "yes");
      std::string eq, tok;
      while (ls >> tok) eq += (eq.empty() ? "" : " ") + tok;
      if (!eq.empty() && eq != "-") c.equation = eq;
      if (c.name == "D2^0") c.note = "splits as a pair of A1 points";
      if (c.equation) {
        int computed = detail::rdp_tau_compute(*c.equation);
        if (!c.tau)
          c.tau = computed;
        else if (*c.tau != computed)
          throw domain_error("rdp database self-check failed for " + c.name +
                             ": stored tau " + std::to_string(*c.tau) +
                             " but computed " + std::to_string(computed));
      }
      db.classes_.push_back(std::move(c));
    }
    if (db.classes_.empty()) throw parse_error("rdp database: no classes found");
    return db;
  }

  const std::vector<RDPClass>& classes() const { return classes_; }

  const RDPClass* find(const std::string& name) const {
    for (auto& c : classes_)
      if (c.name == name) return &c;
    return nullptr;
  }

  /// the unique class with this Dynkin type and Tjurina number, or the full
  /// candidate list when the pair is ambiguous or unknown
  struct Classification {
    const RDPClass* unique = nullptr;
    std::vector<const RDPClass*> candidates;
  };
  Classification classify_by_tjurina(DynkinType type, int tau) const {
    if (tau == kInfiniteLength)
      throw domain_error("rdp: classification needs a finite Tjurina number");
    Classification out;
    for (auto& c : classes_)
      if (c.family == type.family && c.n == type.n && c.tau && *c.tau == tau)
        out.candidates.push_back(&c);
    if (out.candidates.size() == 1) out.unique = out.candidates.front();
    return out;
  }

 private:
  std::vector<RDPClass> classes_;
};

inline int tjurina_of_class(const RDPClass& c) {
  if (c.tau) return *c.tau;
  if (c.equation) return detail::rdp_tau_compute(*c.equation);
  throw domain_error("rdp: class " + c.name +
                     " has neither a stored Tjurina number nor an equation");
}

/// A quotient by a wild involution acquires singularities of type D_{4r}^r
/// (parameter system (x, y^r)) or E_8^2 (parameter system (y, x^2)); each
/// returned class is validated by an invariant-equation round trip.
struct InvolutionQuotientClass {
  RDPClass rdp;
  InvolutionData data;
};

inline std::vector<InvolutionQuotientClass> involution_quotient_classes(int rmax = 3) {
  if (rmax < 1) throw domain_error("rdp: need rmax >= 1");
  FieldPtr F = Field::make(2, 1);
  RingPtr rxy = make_ring(F, {"x", "y"});
  const int prec = 20;
  std::vector<InvolutionQuotientClass> out;
  auto check_round_trip = [&](const InvolutionData& d, const std::string& eq) {
    Series f = invariant_equation(d, prec);
    RingPtr rz = invariant_ring(d);
    if (!(f == parse_series(rz, eq, prec)))
      throw domain_error("rdp: invariant equation round-trip failed for " + eq);
  };
  for (int r = 1; r <= rmax; ++r) {
    Series a = Series::variable(rxy, 0, prec);
    Series b = Series::variable(rxy, 1, prec).pow(static_cast<unsigned>(r));
    InvolutionData d = InvolutionData::make(a, b);
    RDPClass c;
    c.family = 'D';
    c.n = 4 * r;
    c.coindex = r;
    c.name = "D" + std::to_string(4 * r) + "^" + std::to_string(r);
    std::ostringstream eq;
    eq << "z^2 + x*y^" << r << "*z + x*y^" << 2 * r << " + x^2*y";
    c.equation = eq.str();
    c.tau = detail::rdp_tau_compute(*c.equation);
    check_round_trip(d, *c.equation);
    out.push_back({std::move(c), std::move(d)});
  }
  {
    Series a = Series::variable(rxy, 1, prec);
    Series b = Series::variable(rxy, 0, prec).pow(2);
    InvolutionData d = InvolutionData::make(a, b);
    RDPClass c;
    c.family = 'E';
    c.n = 8;
    c.coindex = 2;
    c.name = "E8^2";
    c.equation = "z^2 + x^2*y*z + x^5 + y^3";
    c.tau = detail::rdp_tau_compute(*c.equation);
    c.pi1_order2 = true;
    check_round_trip(d, *c.equation);
    out.push_back({std::move(c), std::move(d)});
  }
  return out;
}

/// closed-form Tjurina values for the lazily generated families
inline int tjurina_A(int n) { return n % 2 ? n + 1 : n; }          // A_{2r-1}: 2r; A_{2r}: 2r
inline int tjurina_D_even0(int m) {                                 // D_{2r}^0: 4r
  if (m < 2 || m % 2) throw domain_error("rdp: D_m^0 formula needs even m");
  return 2 * m;
}
inline int tjurina_D7(int r) {                                      // D_7^r: 12-2r
  if (r < 0 || r > 2) throw domain_error("rdp: D7 coindex out of range");
  return 12 - 2 * r;
}

}  // namespace ck

#endif
