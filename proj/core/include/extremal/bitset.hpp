#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace extremal {

/// Fixed-size bitset sized at runtime; used for line-incidence rows and
/// skew-clique search frontiers.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(int bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

  int size() const { return bits_; }
  void set(int i) { w_[i >> 6] |= (1ull << (i & 63)); }
  void reset(int i) { w_[i >> 6] &= ~(1ull << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  int count() const {
    int c = 0;
    for (std::uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  DynBitset& operator&=(const DynBitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  DynBitset& operator|=(const DynBitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  int count_and(const DynBitset& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  /// Visit set bits in increasing order.
  template <typename Fn>
  void for_each(Fn fn) const {
    for (std::size_t wi = 0; wi < w_.size(); ++wi) {
      std::uint64_t w = w_[wi];
      while (w) {
        int b = std::countr_zero(w);
        fn(static_cast<int>(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

 private:
  int bits_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace extremal
