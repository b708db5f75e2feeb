#ifndef QRTD_RNG_HPP_
#define QRTD_RNG_HPP_

#include <cstdint>
#include <random>

namespace qrtd {

// splitmix64 step; used to derive independent substream seeds so that
// parallel loops stay reproducible regardless of scheduling.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag,
                                 std::uint64_t index = 0) {
  std::uint64_t s = seed ^ (0x6a09e667f3bcc908ull + tag);
  std::uint64_t a = splitmix64(s);
  s ^= index * 0x9e3779b97f4a7c15ull + (index >> 7);
  std::uint64_t b = splitmix64(s);
  return a ^ (b + 0x2545f4914f6cdd1dull);
}

inline std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t tag,
                                   std::uint64_t index = 0) {
  return std::mt19937_64(derive_seed(seed, tag, index));
}

// Stream tags, one per independent consumer of randomness.
namespace rng_tag {
inline constexpr std::uint64_t kSimSubject = 1;
inline constexpr std::uint64_t kCalibration = 2;
inline constexpr std::uint64_t kBootstrapReplicate = 3;
inline constexpr std::uint64_t kSolverStart = 4;
inline constexpr std::uint64_t kStudyTrial = 5;
inline constexpr std::uint64_t kStudyBootstrap = 6;
inline constexpr std::uint64_t kPositedDraws = 7;
}  // namespace rng_tag

}  // namespace qrtd

#endif  // QRTD_RNG_HPP_
