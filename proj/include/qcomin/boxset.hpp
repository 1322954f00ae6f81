#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace qcomin {

// Fixed-capacity set of box indices in [0, 128).
class BoxSet {
 public:
  static constexpr int kCapacity = 128;

  constexpr BoxSet() = default;
  constexpr BoxSet(std::uint64_t lo, std::uint64_t hi) : lo_(lo), hi_(hi) {}

  // The set {0, ..., n-1}.
  static constexpr BoxSet prefix(int n) {
    if (n <= 0) return {};
    if (n < 64) return {(std::uint64_t{1} << n) - 1, 0};
    if (n == 64) return {~std::uint64_t{0}, 0};
    if (n < 128) return {~std::uint64_t{0}, (std::uint64_t{1} << (n - 64)) - 1};
    return {~std::uint64_t{0}, ~std::uint64_t{0}};
  }
  static constexpr BoxSet single(int i) {
    BoxSet s;
    s.set(i);
    return s;
  }

  constexpr bool test(int i) const {
    return i < 64 ? (lo_ >> i) & 1 : (hi_ >> (i - 64)) & 1;
  }
  constexpr void set(int i) {
    if (i < 64) lo_ |= std::uint64_t{1} << i;
    else hi_ |= std::uint64_t{1} << (i - 64);
  }
  constexpr void reset(int i) {
    if (i < 64) lo_ &= ~(std::uint64_t{1} << i);
    else hi_ &= ~(std::uint64_t{1} << (i - 64));
  }

  constexpr int count() const { return std::popcount(lo_) + std::popcount(hi_); }
  constexpr bool empty() const { return (lo_ | hi_) == 0; }
  constexpr bool subset_of(BoxSet o) const {
    return (lo_ & ~o.lo_) == 0 && (hi_ & ~o.hi_) == 0;
  }
  constexpr bool intersects(BoxSet o) const {
    return ((lo_ & o.lo_) | (hi_ & o.hi_)) != 0;
  }

  // Smallest element, or -1 when empty.
  constexpr int first() const {
    if (lo_) return std::countr_zero(lo_);
    if (hi_) return 64 + std::countr_zero(hi_);
    return -1;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t w = lo_; w; w &= w - 1) f(std::countr_zero(w));
    for (std::uint64_t w = hi_; w; w &= w - 1) f(64 + std::countr_zero(w));
  }

  std::vector<int> indices() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  constexpr BoxSet operator|(BoxSet o) const { return {lo_ | o.lo_, hi_ | o.hi_}; }
  constexpr BoxSet operator&(BoxSet o) const { return {lo_ & o.lo_, hi_ & o.hi_}; }
  constexpr BoxSet operator-(BoxSet o) const { return {lo_ & ~o.lo_, hi_ & ~o.hi_}; }
  constexpr BoxSet operator^(BoxSet o) const { return {lo_ ^ o.lo_, hi_ ^ o.hi_}; }
  constexpr BoxSet& operator|=(BoxSet o) { return *this = *this | o; }
  constexpr BoxSet& operator&=(BoxSet o) { return *this = *this & o; }
  constexpr BoxSet& operator-=(BoxSet o) { return *this = *this - o; }

  constexpr bool operator==(const BoxSet&) const = default;
  constexpr auto operator<=>(const BoxSet& o) const {
    if (auto c = hi_ <=> o.hi_; c != 0) return c;
    return lo_ <=> o.lo_;
  }

  constexpr std::uint64_t lo() const { return lo_; }
  constexpr std::uint64_t hi() const { return hi_; }

 private:
  std::uint64_t lo_ = 0;
  std::uint64_t hi_ = 0;
};

struct BoxSetHash {
  std::size_t operator()(BoxSet s) const {
    return static_cast<std::size_t>(s.lo() * 0x9E3779B97F4A7C15ULL ^ (s.hi() + 0x632BE59BD9B4E019ULL));
  }
};

}  // namespace qcomin
