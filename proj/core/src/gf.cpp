#include "extremal/gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace extremal {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Digits of enc base p, least significant first, length n.
void unpack(std::uint32_t enc, int p, int n, int* out) {
  for (int i = 0; i < n; ++i) {
    out[i] = static_cast<int>(enc % p);
    enc /= p;
  }
}

std::uint32_t pack(const int* digits, int p, int n) {
  std::uint32_t enc = 0;
  for (int i = n - 1; i >= 0; --i) enc = enc * p + digits[i];
  return enc;
}

}  // namespace

Field::Field(int p, int e, std::uint32_t size_cap) : p_(p), e_(e) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (e < 1) throw std::invalid_argument("field exponent must be positive");
  std::uint64_t s = 1;
  for (int i = 0; i < 2 * e; ++i) {
    s *= static_cast<std::uint64_t>(p);
    if (s > size_cap)
      throw std::invalid_argument("field size p^(2e) exceeds the configured cap");
  }
  s_ = static_cast<std::uint32_t>(s);
  q_ = 1;
  for (int i = 0; i < e; ++i) q_ *= static_cast<std::uint32_t>(p);
  build_tables();
}

std::string Field::modulus_string() const {
  std::ostringstream os;
  os << "x^" << 2 * e_;
  for (int i = 2 * e_ - 1; i >= 0; --i) {
    if (mod_[i] == 0) continue;
    os << " + ";
    if (mod_[i] != 1 || i == 0) os << mod_[i];
    if (i > 0) {
      if (mod_[i] != 1) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

FE Field::add_slow(FE a, FE b) const {
  int da[32], db[32];
  int n = 2 * e_;
  unpack(a, p_, n, da);
  unpack(b, p_, n, db);
  for (int i = 0; i < n; ++i) da[i] = (da[i] + db[i]) % p_;
  return static_cast<FE>(pack(da, p_, n));
}

FE Field::inv(FE a) const {
  if (a == 0) throw std::domain_error("division by zero in finite field");
  std::uint32_t l = log_tab_[a];
  return exp_tab_[l == 0 ? 0 : s_ - 1 - l];
}

FE Field::pow(FE a, long long n) const {
  if (a == 0) {
    if (n < 0) throw std::domain_error("division by zero in finite field");
    return n == 0 ? one() : zero();
  }
  long long ord = static_cast<long long>(s_) - 1;
  long long k = (static_cast<long long>(log_tab_[a]) * (n % ord)) % ord;
  if (k < 0) k += ord;
  return exp_tab_[k];
}

std::vector<FE> Field::solve_trace(FE c) const {
  std::vector<FE> out;
  for (std::uint32_t t = 0; t < s_; ++t)
    if (trace(static_cast<FE>(t)) == c) out.push_back(static_cast<FE>(t));
  return out;
}

std::vector<FE> Field::roots_of_unity(std::uint32_t m) const {
  if (m == 0 || (s_ - 1) % m != 0)
    throw std::invalid_argument("m must divide q^2 - 1");
  std::vector<FE> out;
  std::uint32_t step = (s_ - 1) / m;
  for (std::uint32_t k = 0; k < m; ++k) out.push_back(exp_tab_[(k * step) % (s_ - 1)]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<FE> Field::solve_norm(FE c) const {
  std::vector<FE> out;
  for (std::uint32_t x = 0; x < s_; ++x)
    if (norm(static_cast<FE>(x)) == c) out.push_back(static_cast<FE>(x));
  return out;
}

FE Field::from_int(int v) const {
  int r = v % p_;
  if (r < 0) r += p_;
  return static_cast<FE>(r);
}

FE Field::from_encoding(std::uint32_t enc) const {
  if (enc >= s_) throw std::invalid_argument("field element encoding out of range");
  return static_cast<FE>(enc);
}

void Field::build_tables() {
  const int n = 2 * e_;

  // Modulus: first monic degree-2e polynomial (coefficients as base-p integer)
  // with no root shortcut -- full irreducibility via trial division by all
  // monic polynomials of degree <= e.
  auto poly_mod = [&](std::vector<int> a, const std::vector<int>& m, int dm) {
    // reduce a (any degree) modulo monic m of degree dm
    for (int i = static_cast<int>(a.size()) - 1; i >= dm; --i) {
      int c = a[i];
      if (c == 0) continue;
      a[i] = 0;
      for (int j = 0; j < dm; ++j) a[i - dm + j] = ((a[i - dm + j] - c * m[j]) % p_ + p_) % p_;
    }
    a.resize(dm);
    return a;
  };
  auto is_irreducible = [&](const std::vector<int>& m) {
    // m: low coefficients of monic degree-n polynomial
    for (int deg = 1; deg <= n / 2; ++deg) {
      std::uint32_t count = 1;
      for (int i = 0; i < deg; ++i) count *= static_cast<std::uint32_t>(p_);
      for (std::uint32_t enc = 0; enc < count; ++enc) {
        std::vector<int> div(deg + 1, 0);
        int dd[32];
        unpack(enc, p_, deg, dd);
        for (int i = 0; i < deg; ++i) div[i] = dd[i];
        div[deg] = 1;
        // trial division: compute m mod div, all coefficients must not vanish
        std::vector<int> full(n + 1, 0);
        for (int i = 0; i < n; ++i) full[i] = m[i];
        full[n] = 1;
        std::vector<int> r = poly_mod(full, div, deg);
        bool zero = true;
        for (int c : r)
          if (c != 0) { zero = false; break; }
        if (zero) return false;
      }
    }
    return true;
  };

  std::uint32_t pn = 1;
  for (int i = 0; i < n; ++i) pn *= static_cast<std::uint32_t>(p_);
  for (std::uint32_t enc = 0; enc < pn; ++enc) {
    int dd[32];
    unpack(enc, p_, n, dd);
    std::vector<int> m(dd, dd + n);
    if (is_irreducible(m)) {
      mod_ = m;
      break;
    }
  }
  if (mod_.empty()) throw std::logic_error("no irreducible modulus found");

  // Generic multiply via polynomial arithmetic, used to bootstrap the tables.
  auto raw_mul = [&](FE a, FE b) -> FE {
    int da[32], db[32];
    unpack(a, p_, n, da);
    unpack(b, p_, n, db);
    std::vector<int> prod(2 * n, 0);
    for (int i = 0; i < n; ++i) {
      if (da[i] == 0) continue;
      for (int j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
    }
    std::vector<int> r = poly_mod(prod, mod_, n);
    return static_cast<FE>(pack(r.data(), p_, n));
  };

  neg_tab_.resize(s_);
  for (std::uint32_t a = 0; a < s_; ++a) {
    int da[32];
    unpack(a, p_, n, da);
    for (int i = 0; i < n; ++i) da[i] = (p_ - da[i]) % p_;
    neg_tab_[a] = static_cast<FE>(pack(da, p_, n));
  }

  // Generator: smallest encoding of multiplicative order s-1.
  auto order = [&](FE g) {
    std::uint32_t k = 1;
    FE x = g;
    while (x != 1) {
      x = raw_mul(x, g);
      ++k;
      if (k > s_) return std::uint32_t(0);
    }
    return k;
  };
  gen_ = 0;
  for (std::uint32_t g = 2; g < s_; ++g) {
    if (order(static_cast<FE>(g)) == s_ - 1) {
      gen_ = static_cast<FE>(g);
      break;
    }
  }
  if (gen_ == 0 && s_ > 2) throw std::logic_error("no multiplicative generator found");
  if (s_ == 4 || gen_ == 0) {
    // s=4: 2 and 3 both have order 3; loop above already found 2. Keep as is.
  }

  exp_tab_.resize(s_ - 1);
  log_tab_.assign(s_, 0);
  FE x = 1;
  for (std::uint32_t k = 0; k < s_ - 1; ++k) {
    exp_tab_[k] = x;
    log_tab_[x] = k;
    x = raw_mul(x, gen_);
  }

  frob_tab_.resize(s_);
  frob_tab_[0] = 0;
  for (std::uint32_t a = 1; a < s_; ++a) {
    std::uint64_t k = (static_cast<std::uint64_t>(log_tab_[a]) * q_) % (s_ - 1);
    frob_tab_[a] = exp_tab_[k];
  }

  if (s_ <= 1024) {
    add_tab_.resize(static_cast<std::size_t>(s_) * s_);
    mul_tab_.resize(static_cast<std::size_t>(s_) * s_);
    for (std::uint32_t a = 0; a < s_; ++a)
      for (std::uint32_t b = 0; b < s_; ++b) {
        add_tab_[a * s_ + b] = add_slow(static_cast<FE>(a), static_cast<FE>(b));
        mul_tab_[a * s_ + b] = raw_mul(static_cast<FE>(a), static_cast<FE>(b));
      }
  }
}

}  // namespace extremal
