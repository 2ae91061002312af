#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace gibbslab {

// Philox4x32-10 counter-based generator (Salmon et al. convention).
// Every draw is a pure function of (key, counter); there is no stream state,
// which is what makes ensembles independent of worker scheduling.
struct Philox4x32 {
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;

  static std::array<std::uint32_t, 4> block(std::array<std::uint32_t, 4> ctr,
                                            std::array<std::uint32_t, 2> key) {
    auto mulhilo = [](std::uint32_t a, std::uint32_t b, std::uint32_t& hi) {
      const std::uint64_t p = static_cast<std::uint64_t>(a) * b;
      hi = static_cast<std::uint32_t>(p >> 32);
      return static_cast<std::uint32_t>(p);
    };
    for (int round = 0; round < 10; ++round) {
      std::uint32_t hi0, hi1;
      const std::uint32_t lo0 = mulhilo(kMul0, ctr[0], hi0);
      const std::uint32_t lo1 = mulhilo(kMul1, ctr[2], hi1);
      ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
      key[0] += kWeyl0;
      key[1] += kWeyl1;
    }
    return ctr;
  }
};

// Keyed Gaussian/uniform noise field over (sample, subject, step) tuples.
// `subject` is a 64-bit site key, so the same lattice site receives the same
// stream in every box -- the common-noise coupling relies on this.
class NoiseField {
 public:
  enum class Domain : std::uint32_t { path = 0, init = 1, scratch = 2 };

  explicit NoiseField(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // One standard normal per (sample, subject, step).
  double normal(std::uint64_t sample, std::uint64_t subject, std::uint64_t step,
                Domain domain = Domain::path) const {
    const auto w = words(sample, subject, step, domain);
    const double u1 = to_open_unit(join(w[0], w[1]));
    const double u2 = to_open_unit(join(w[2], w[3]));
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  double uniform(std::uint64_t sample, std::uint64_t subject, std::uint64_t step,
                 Domain domain = Domain::scratch) const {
    const auto w = words(sample, subject, step, domain);
    return to_open_unit(join(w[0], w[1]));
  }

 private:
  std::array<std::uint32_t, 4> words(std::uint64_t sample, std::uint64_t subject,
                                     std::uint64_t step, Domain domain) const {
    // subject folds into the key (bijectively), so distinct sites can never
    // collide; sample/step/domain live in the counter.
    const std::array<std::uint32_t, 2> key = {
        static_cast<std::uint32_t>(seed_ ^ subject),
        static_cast<std::uint32_t>((seed_ >> 32) ^ (subject >> 32))};
    const std::array<std::uint32_t, 4> ctr = {
        static_cast<std::uint32_t>(sample), static_cast<std::uint32_t>(sample >> 32),
        static_cast<std::uint32_t>(step),
        static_cast<std::uint32_t>(step >> 32) ^ (static_cast<std::uint32_t>(domain) << 28)};
    return Philox4x32::block(ctr, key);
  }

  static std::uint64_t join(std::uint32_t lo, std::uint32_t hi) {
    return (static_cast<std::uint64_t>(hi) << 32) | lo;
  }

  // (0,1): top 53 bits, never exactly 0.
  static double to_open_unit(std::uint64_t x) {
    const double u = static_cast<double>((x >> 11) | 1ull) * 0x1.0p-53;
    return u;
  }

  std::uint64_t seed_;
};

// SplitMix64, used for deriving auxiliary seeds from a master seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace gibbslab
