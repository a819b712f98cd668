#pragma once

#include <cstdint>
#include <string>

namespace lpcoh {

// SplitMix64: tiny, fully specified, platform-independent generator. The
// stdlib engines are deterministic too, but the distributions on top of
// them are not pinned by the standard, and reports here must be
// byte-identical across runs and thread schedules.
class SplitMix64 {
public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t operator()() { return next(); }
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~0ull; }

  // Uniform in [lo, hi]. The modulo bias is far below anything these
  // sweeps could detect and keeps the mapping trivially reproducible.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(next() %
                                       static_cast<std::uint64_t>(hi - lo + 1));
  }

  bool coin() { return (next() & 1) != 0; }

private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

// Seed for one trial of one named check: a function of (suite seed, check
// name, trial index) only, so a trial's stream does not depend on which
// thread runs it or in what order.
inline std::uint64_t trial_seed(std::uint64_t suite_seed, const std::string& check,
                                std::uint64_t trial) {
  SplitMix64 a(suite_seed);
  SplitMix64 b(a.next() ^ fnv1a(check));
  SplitMix64 c(b.next() ^ trial);
  return c.next();
}

} // namespace lpcoh
