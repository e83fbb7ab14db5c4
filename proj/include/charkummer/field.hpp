#ifndef CHARKUMMER_FIELD_HPP
#define CHARKUMMER_FIELD_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace ck {

struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Element of a finite field, stored as a base-p digit packing of the
/// residue polynomial.  For p=2 this is simply a bitmask.  Elements carry
/// no field pointer; all arithmetic goes through the owning Field.
using FF = std::uint16_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^k) with a fixed modulus.  For p=2 the modulus comes from a
/// built-in Conway polynomial table (k <= 8), so that subfield embeddings
/// GF(2^k) -> GF(2^K) for k | K are compatible.  Prime fields GF(p) are
/// supported for any small prime p.
///
/// Multiplication runs over discrete exp/log tables built at construction;
/// the residue class of the modulus variable is a generator of the
/// multiplicative group (guaranteed by the Conway property, verified at
/// construction).
class Field {
public:
  static FieldPtr make(unsigned p, unsigned k = 1);

  unsigned p() const { return p_; }
  unsigned k() const { return k_; }
  unsigned q() const { return q_; }
  const std::vector<unsigned>& modulus() const { return modulus_; }

  FF zero() const { return 0; }
  FF one() const { return 1; }
  /// residue class of the modulus variable (k>1), or a primitive root (k=1)
  FF generator() const { return gen_; }

  FF from_int(long n) const {
    long r = n % static_cast<long>(p_);
    if (r < 0) r += p_;
    return static_cast<FF>(r);
  }

  FF add(FF a, FF b) const {
    if (p_ == 2) return a ^ b;
    FF r = 0;
    unsigned mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
      unsigned da = (a / mult) % p_, db = (b / mult) % p_;
      r = static_cast<FF>(r + ((da + db) % p_) * mult);
      mult *= p_;
    }
    return r;
  }
  FF neg(FF a) const {
    if (p_ == 2) return a;
    FF r = 0;
    unsigned mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
      unsigned da = (a / mult) % p_;
      r = static_cast<FF>(r + ((p_ - da) % p_) * mult);
      mult *= p_;
    }
    return r;
  }
  FF sub(FF a, FF b) const { return add(a, neg(b)); }

  FF mul(FF a, FF b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }
  FF inv(FF a) const {
    if (a == 0) throw domain_error("field: inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
  }
  FF div(FF a, FF b) const { return mul(a, inv(b)); }

  FF pow(FF a, long e) const {
    if (a == 0) {
      if (e < 0) throw domain_error("field: inverse of zero");
      return e == 0 ? one() : zero();
    }
    long m = static_cast<long>(q_) - 1;
    long le = ((e % m) + m) % m;
    return exp_[(log_[a] * le) % m];
  }
  FF frobenius(FF a) const { return pow(a, p_); }

  /// scalar by nonnegative integer (characteristic reduction)
  FF scale_int(FF a, unsigned long n) const {
    return mul(a, from_int(static_cast<long>(n % p_)));
  }

  /// Embed an element into a compatible extension (same p, k | K).
  FF embed_into(FF a, const Field& bigger) const;

  std::string to_string(FF a) const;
  FF parse_element(const std::string& tok) const;

  bool same(const Field& other) const {
    return p_ == other.p_ && k_ == other.k_ && modulus_ == other.modulus_;
  }

private:
  Field(unsigned p, unsigned k, std::vector<unsigned> modulus);

  unsigned p_, k_, q_;
  FF gen_;
  std::vector<unsigned> modulus_;  // coeff list, low degree first, monic
  std::vector<FF> exp_, log_;
};

namespace detail {

// Conway polynomials over GF(2), coefficient lists low degree first.
inline const std::array<std::vector<unsigned>, 9>& conway2_table() {
  static const std::array<std::vector<unsigned>, 9> t = {{
      {},
      {1, 1},                    // x + 1
      {1, 1, 1},                 // x^2 + x + 1
      {1, 1, 0, 1},              // x^3 + x + 1
      {1, 1, 0, 0, 1},           // x^4 + x + 1
      {1, 0, 1, 0, 0, 1},        // x^5 + x^2 + 1
      {1, 1, 0, 1, 1, 0, 1},     // x^6 + x^4 + x^3 + x + 1
      {1, 1, 0, 0, 0, 0, 0, 1},  // x^7 + x + 1
      {1, 0, 1, 1, 1, 0, 0, 0, 1},  // x^8 + x^4 + x^3 + x^2 + 1
  }};
  return t;
}

// polynomial remainder over GF(p), dense coeff vectors, low degree first
inline std::vector<unsigned> poly_mod_p(std::vector<unsigned> r,
                                        const std::vector<unsigned>& d,
                                        unsigned p) {
  auto deg = [](const std::vector<unsigned>& v) {
    int i = static_cast<int>(v.size()) - 1;
    while (i >= 0 && v[i] == 0) --i;
    return i;
  };
  int dd = deg(d);
  // inverse of leading coeff by search (p is tiny)
  unsigned lc = d[dd], lcinv = 1;
  for (unsigned t = 1; t < p; ++t)
    if ((lc * t) % p == 1) { lcinv = t; break; }
  for (int dr = deg(r); dr >= dd; dr = deg(r)) {
    unsigned f = (r[dr] * lcinv) % p;
    for (int i = 0; i <= dd; ++i) {
      unsigned sub = (f * d[i]) % p;
      r[dr - dd + i] = (r[dr - dd + i] + p - sub) % p;
    }
  }
  return r;
}

inline bool poly_is_zero(const std::vector<unsigned>& v) {
  for (unsigned c : v)
    if (c) return false;
  return true;
}

}  // namespace detail

inline Field::Field(unsigned p, unsigned k, std::vector<unsigned> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  unsigned long q = 1;
  for (unsigned i = 0; i < k_; ++i) q *= p_;
  if (q > 65536) throw domain_error("field: p^k too large");
  q_ = static_cast<unsigned>(q);

  // irreducibility by trial division against all monic polys of degree <= k/2
  if (k_ > 1) {
    for (unsigned d = 1; 2 * d <= k_; ++d) {
      unsigned long count = 1;
      for (unsigned i = 0; i < d; ++i) count *= p_;
      for (unsigned long code = 0; code < count; ++code) {
        std::vector<unsigned> div(d + 1, 0);
        unsigned long c = code;
        for (unsigned i = 0; i < d; ++i) { div[i] = c % p_; c /= p_; }
        div[d] = 1;
        if (detail::poly_is_zero(detail::poly_mod_p(modulus_, div, p_)))
          throw domain_error("field: modulus is reducible");
      }
    }
  }

  // generator: residue of x for extensions, primitive root search for primes
  auto pack = [&](const std::vector<unsigned>& v) {
    FF r = 0;
    unsigned mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
      if (i < v.size()) r = static_cast<FF>(r + v[i] * mult);
      mult *= p_;
    }
    return r;
  };
  auto raw_mul = [&](FF a, FF b) {
    // schoolbook product of residue polynomials, reduced by the modulus
    std::vector<unsigned> pa(k_), pb(k_), pr(2 * k_, 0);
    unsigned mult = 1;
    for (unsigned i = 0; i < k_; ++i) {
      pa[i] = (a / mult) % p_;
      pb[i] = (b / mult) % p_;
      mult *= p_;
    }
    for (unsigned i = 0; i < k_; ++i)
      for (unsigned j = 0; j < k_; ++j)
        pr[i + j] = (pr[i + j] + pa[i] * pb[j]) % p_;
    pr = detail::poly_mod_p(std::move(pr), modulus_, p_);
    return pack(pr);
  };

  FF cand;
  if (k_ > 1) {
    cand = pack({0, 1});
  } else {
    cand = 0;
    for (FF g = 2; g < p_; ++g) {
      // order check by brute force
      unsigned ord = 1;
      unsigned long v = g;
      while (v != 1) { v = (v * g) % p_; ++ord; }
      if (ord == p_ - 1) { cand = g; break; }
    }
    if (p_ == 2) cand = 1;
    if (cand == 0) throw domain_error("field: no primitive root found");
  }
  gen_ = cand;

  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  FF cur = 1;
  for (unsigned i = 0; i + 1 < q_; ++i) {
    exp_[i] = cur;
    if (cur == gen_ && i != 1 && q_ > 2 && i != 0)
      throw domain_error("field: modulus generator is not primitive");
    log_[cur] = static_cast<FF>(i);
    cur = (k_ > 1) ? raw_mul(cur, gen_)
                   : static_cast<FF>((static_cast<unsigned long>(cur) * gen_) % p_);
  }
  if (cur != 1) throw domain_error("field: generator order mismatch");
}

inline FieldPtr Field::make(unsigned p, unsigned k) {
  if (k == 0) throw domain_error("field: k must be >= 1");
  // primality of p by trial division
  if (p < 2) throw domain_error("field: p must be prime");
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) throw domain_error("field: p must be prime");
  if (k == 1) {
    std::vector<unsigned> mod = {p >= 2 ? p - 1 : 0, 1};  // x + (p-1): x == 1
    if (p == 2) mod = detail::conway2_table()[1];
    return FieldPtr(new Field(p, 1, mod));
  }
  if (p != 2 || k > 8)
    throw domain_error("field: extension moduli are tabulated for p=2, k<=8 only");
  return FieldPtr(new Field(p, k, detail::conway2_table()[k]));
}

inline FF Field::embed_into(FF a, const Field& bigger) const {
  if (p_ != bigger.p_ || bigger.k_ % k_ != 0)
    throw domain_error("field: no subfield embedding");
  if (same(bigger)) return a;
  if (a == 0) return 0;
  unsigned long stretch = (bigger.q_ - 1ul) / (q_ - 1ul);
  return bigger.exp_[(log_[a] * stretch) % (bigger.q_ - 1)];
}

inline std::string Field::to_string(FF a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  unsigned e = log_[a];
  if (e == 0) return "1";
  if (e == 1) return "g";
  return "g^" + std::to_string(e);
}

inline FF Field::parse_element(const std::string& tok) const {
  if (tok.empty()) throw parse_error("field: empty element token");
  if (tok[0] == 'g') {
    if (k_ == 1) throw parse_error("field: generator token in a prime field");
    if (tok == "g") return generator();
    if (tok.size() > 2 && tok[1] == '^')
      return pow(generator(), std::stol(tok.substr(2)));
    throw parse_error("field: bad element token '" + tok + "'");
  }
  for (char c : tok)
    if (c < '0' || c > '9')
      throw parse_error("field: bad element token '" + tok + "'");
  return from_int(std::stol(tok));
}

}  // namespace ck

#endif
