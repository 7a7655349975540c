#ifndef HTCP_RNG_HPP
#define HTCP_RNG_HPP

#include <cmath>
#include <cstdint>

namespace htcp {

// splitmix64; used both as a generator and to derive decorrelated stream seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag, std::uint64_t index) {
  std::uint64_t s = base;
  splitmix64(s);
  s ^= 0x6a09e667f3bcc909ULL * (tag + 1);
  splitmix64(s);
  s ^= 0xb2a81f151b35c0e5ULL * (index + 1);
  std::uint64_t t = s;
  return splitmix64(t);
}

// Small deterministic RNG with platform-independent double output.
// std::uniform_real_distribution is not pinned by the standard, so uniform
// doubles are built directly from the top 53 bits.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed ^ 0x853c49e6748fea9bULL) {
    // warm up so that low-entropy seeds decorrelate
    next_u64();
    next_u64();
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // uniform in [0, 1)
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // uniform in [lo, hi)
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  // standard normal via Box-Muller
  double normal() {
    double u1 = next_double();
    double u2 = next_double();
    while (u1 <= 1e-300) u1 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace htcp

#endif  // HTCP_RNG_HPP
