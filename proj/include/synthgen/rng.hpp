#pragma once

#include <Eigen/Geometry>
#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace synthgen {

namespace detail {

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace detail

// Seed for one named random stream. Streams are keyed by (master seed,
// image index, concern tag) so that images can be generated in parallel,
// in any order, and reproduce bit-exactly.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t image_index,
                                 std::string_view tag) {
  std::uint64_t h = detail::splitmix64(master);
  h = detail::splitmix64(h ^ detail::splitmix64(image_index));
  return detail::splitmix64(h ^ detail::fnv1a(tag));
}

// Deterministic random stream. All draws go through explicit methods built
// directly on the 64-bit generator output; no standard-library distributions
// are used, so the byte stream of a dataset does not depend on the standard
// library implementation.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : gen_(seed) {}
  RngStream(std::uint64_t master, std::uint64_t image_index, std::string_view tag)
      : gen_(stream_seed(master, image_index, tag)) {}

  std::uint64_t bits() { return gen_(); }

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Uniform in [a, b).
  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // Uniform integer in [0, n). n must be positive.
  int uniform_int(int n) {
    const auto x = static_cast<unsigned __int128>(gen_());
    return static_cast<int>((x * static_cast<std::uint64_t>(n)) >> 64);
  }

  // Standard normal via Box-Muller; the second value of each pair is cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * M_PI * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  // Uniform rotation (Shoemake's subgroup method).
  Eigen::Quaterniond random_rotation() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double u3 = uniform();
    const double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
    return Eigen::Quaterniond(a * std::sin(2.0 * M_PI * u2), a * std::cos(2.0 * M_PI * u2),
                              b * std::sin(2.0 * M_PI * u3), b * std::cos(2.0 * M_PI * u3))
        .normalized();
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace synthgen
