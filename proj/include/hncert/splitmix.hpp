#ifndef HNCERT_SPLITMIX_HPP
#define HNCERT_SPLITMIX_HPP

#include <cstdint>

namespace hncert {

// SplitMix64. The constants below are the reference ones, so seeded runs
// are comparable across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound) by rejection; deterministic for a fixed
  // seed and call sequence.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (~0ULL / bound);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

}  // namespace hncert

#endif
