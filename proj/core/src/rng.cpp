#include "nohair/rng.hpp"

#include <cmath>
#include <numbers>

namespace nohair {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_(stream_id) {
  // Expand (seed, stream) into engine state via splitmix; mt19937_64 with a
  // single-word seed would alias streams that differ only in high bits.
  std::uint64_t s0 = splitmix64(seed ^ 0x8000000000000000ULL);
  std::uint64_t s1 = splitmix64(s0 ^ stream_id);
  std::uint64_t s2 = splitmix64(s1);
  std::seed_seq seq{static_cast<std::uint32_t>(s1), static_cast<std::uint32_t>(s1 >> 32),
                    static_cast<std::uint32_t>(s2), static_cast<std::uint32_t>(s2 >> 32)};
  engine_ = std::mt19937_64(seq);
}

double SeededRng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededRng::uniform_pos() {
  return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53;
}

double SeededRng::normal() {
  const double u1 = uniform_pos();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

Complex SeededRng::complex_normal() {
  const double u1 = uniform_pos();
  const double u2 = uniform();
  const double r = std::sqrt(-std::log(u1));  // variance 1/2 per quadrature
  const double phi = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(phi), r * std::sin(phi)};
}

std::uint64_t SeededRng::uniform_index(std::uint64_t n) {
  // Rejection-free modulo is biased for huge n; n here is small (dims, counts).
  return engine_() % n;
}

std::uint64_t SeededRng::derive_stream(std::uint64_t stream_id, std::uint64_t key) {
  return splitmix64(stream_id ^ splitmix64(key ^ 0xa5a5a5a5a5a5a5a5ULL));
}

SeededRng SeededRng::substream(std::uint64_t key) const {
  return SeededRng(seed_, derive_stream(stream_, key));
}

}  // namespace nohair
