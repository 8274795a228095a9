#pragma once

#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace odplab {

/// Fixed-universe bitset packed into 64-bit words. Element indices are
/// 0-based; all binary operations require equal universe sizes.
class Bitset {
public:
  Bitset() : n_(0) {}
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t universe() const { return n_; }

  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  void set_all() {
    for (auto& w : w_) w = ~std::uint64_t{0};
    trim();
  }
  void clear() {
    for (auto& w : w_) w = 0;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += (std::size_t)__builtin_popcountll(w);
    return c;
  }

  /// Index of the lowest set bit, or universe() when empty.
  std::size_t first() const { return next(0); }

  /// Lowest set bit with index >= from, or universe() when none.
  std::size_t next(std::size_t from) const {
    if (from >= n_) return n_;
    std::size_t wi = from >> 6;
    std::uint64_t w = w_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w) return (wi << 6) + (std::size_t)__builtin_ctzll(w);
      if (++wi == w_.size()) return n_;
      w = w_[wi];
    }
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator^=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
  }
  /// Remove every element of o from this set.
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  void flip_all() {
    for (auto& w : w_) w = ~w;
    trim();
  }

  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

  bool operator==(const Bitset& o) const { return w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return w_ != o.w_; }

  bool subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  /// Member-list order: the set whose smallest differing element is present
  /// comes first, so {0,1,2} sorts before {0,2}.
  bool lex_before(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t d = w_[i] ^ o.w_[i];
      if (d) {
        std::uint64_t low = d & ~(d - 1);
        return w_[i] & low;
      }
    }
    return false;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
      if (test(i)) s[i] = '1';
    return s;
  }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> v;
    for (std::size_t i = first(); i < n_; i = next(i + 1)) v.push_back(i);
    return v;
  }

  static Bitset single(std::size_t n, std::size_t i) {
    Bitset b(n);
    b.set(i);
    return b;
  }
  static Bitset full(std::size_t n) {
    Bitset b(n);
    b.set_all();
    return b;
  }

private:
  void trim() {
    if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }

  std::size_t n_;
  std::vector<std::uint64_t> w_;
};

}  // namespace odplab
