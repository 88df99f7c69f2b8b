#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace extremal {

/// Element of F_{q^2} (with F_q and F_p sitting inside it), encoded as the
/// base-p packing of its polynomial representation modulo the field modulus.
using FE = std::uint16_t;

/// Arithmetic in the tower F_p <= F_q <= F_{q^2} for q = p^e.
///
/// The modulus is the lexicographically least monic irreducible polynomial of
/// degree 2e over F_p (coefficient tuples (c_0,...,c_{2e-1}) compared as
/// base-p integers), so element encodings are reproducible bit-for-bit.
/// All tables are built once in the constructor; a Field is immutable
/// afterwards and safe to share across threads.
class Field {
 public:
  Field(int p, int e, std::uint32_t size_cap = 1u << 16);

  int p() const { return p_; }
  int e() const { return e_; }
  std::uint32_t q() const { return q_; }
  /// Ambient field size q^2.
  std::uint32_t size() const { return s_; }
  /// Surface degree d = q+1.
  std::uint32_t d() const { return q_ + 1; }

  /// Modulus coefficients c_0..c_{2e-1} of x^{2e} + sum c_i x^i.
  const std::vector<int>& modulus() const { return mod_; }
  std::string modulus_string() const;

  FE zero() const { return 0; }
  FE one() const { return 1; }
  /// Smallest generator of the multiplicative group (by encoding order).
  FE generator() const { return gen_; }

  FE add(FE a, FE b) const {
    return add_tab_.empty() ? add_slow(a, b) : add_tab_[a * s_ + b];
  }
  FE sub(FE a, FE b) const { return add(a, neg(b)); }
  FE neg(FE a) const { return neg_tab_[a]; }
  FE mul(FE a, FE b) const {
    if (!mul_tab_.empty()) return mul_tab_[a * s_ + b];
    if (a == 0 || b == 0) return 0;
    return exp_tab_[(log_tab_[a] + log_tab_[b]) % (s_ - 1)];
  }
  FE inv(FE a) const;
  FE div(FE a, FE b) const { return mul(a, inv(b)); }
  FE pow(FE a, long long n) const;

  /// x -> x^q, the involution of F_{q^2} fixing F_q.
  FE frobq(FE a) const { return frob_tab_[a]; }
  /// Norm to F_q: x -> x^{q+1}.
  FE norm(FE a) const { return mul(frobq(a), a); }
  /// Trace to F_q: x -> x^q + x.
  FE trace(FE a) const { return add(frobq(a), a); }

  bool in_subfield_q(FE a) const { return frobq(a) == a; }
  bool in_prime_field(FE a) const { return a < static_cast<FE>(p_); }

  /// All t in F_{q^2} with t^q + t = c. Exactly q solutions when c is in F_q,
  /// empty otherwise.
  std::vector<FE> solve_trace(FE c) const;
  /// All x with x^m = 1; requires m | q^2-1.
  std::vector<FE> roots_of_unity(std::uint32_t m) const;
  /// All x with x^{q+1} = c.
  std::vector<FE> solve_norm(FE c) const;

  /// Element from a small integer 0..p-1 (the prime subfield embedding).
  FE from_int(int v) const;
  /// Element from its packed encoding; validates range.
  FE from_encoding(std::uint32_t enc) const;

 private:
  FE add_slow(FE a, FE b) const;
  void build_tables();

  int p_ = 0;
  int e_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t s_ = 0;
  std::vector<int> mod_;
  FE gen_ = 0;
  std::vector<FE> exp_tab_;   // g^k, k in [0, s-1)
  std::vector<std::uint32_t> log_tab_;
  std::vector<FE> frob_tab_;
  std::vector<FE> neg_tab_;
  std::vector<FE> add_tab_;   // full tables only for small fields
  std::vector<FE> mul_tab_;
};

}  // namespace extremal
