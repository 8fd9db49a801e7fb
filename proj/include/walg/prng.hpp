#pragma once

// Deterministic 64-bit generator (splitmix64) so law suites reproduce
// byte-identically for a given seed on every platform.

#include <cstdint>
#include <vector>

namespace walg {

class Prng {
public:
  explicit Prng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>(next() % n);
  }

  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(
                    next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  template <typename T>
  const T& pick(const std::vector<T>& items) {
    return items[below(items.size())];
  }

private:
  std::uint64_t state_;
};

}  // namespace walg
