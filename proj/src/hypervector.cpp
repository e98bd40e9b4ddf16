#include "semvec/hypervector.hpp"

#include <bit>
#include <cmath>

#include "semvec/errors.hpp"

namespace semvec {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

}  // namespace

BinaryHypervector::BinaryHypervector(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {
  if (n == 0) throw DataError("hypervector dimension must be positive");
}

BinaryHypervector::BinaryHypervector(std::size_t n, std::vector<std::uint64_t> words)
    : n_(n), words_(std::move(words)) {
  if (n == 0) throw DataError("hypervector dimension must be positive");
  if (words_.size() != (n + 63) / 64) throw DataError("hypervector word count does not match n");
  clear_padding();
}

void BinaryHypervector::set_bit(std::size_t i, bool value) {
  const std::uint64_t mask = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

std::size_t BinaryHypervector::popcount() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

void BinaryHypervector::clear_padding() {
  if (const std::size_t tail = n_ % 64; tail != 0) {
    words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
}

BinaryHypervector random_hypervector(std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw DataError("hypervector dimension must be positive");
  std::vector<std::uint64_t> words((n + 63) / 64);
  for (auto& w : words) w = rng();
  return BinaryHypervector(n, std::move(words));
}

BinaryHypervector complement(const BinaryHypervector& v) {
  std::vector<std::uint64_t> words(v.words().begin(), v.words().end());
  for (auto& w : words) w = ~w;
  return BinaryHypervector(v.size(), std::move(words));
}

std::size_t hamming(const BinaryHypervector& a, const BinaryHypervector& b) {
  if (a.size() != b.size()) throw DataError("hamming: dimension mismatch");
  std::size_t total = 0;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size(); ++i) total += static_cast<std::size_t>(std::popcount(wa[i] ^ wb[i]));
  return total;
}

BinaryHypervector bundle(std::span<const BinaryHypervector> vectors, std::uint64_t tie_seed) {
  if (vectors.empty()) throw DataError("bundle: empty input");
  const std::size_t n = vectors.front().size();
  for (const auto& v : vectors)
    if (v.size() != n) throw DataError("bundle: dimension mismatch");

  const std::size_t m = vectors.size();
  std::vector<std::uint32_t> ones(64);
  std::vector<std::uint64_t> words((n + 63) / 64);
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::fill(ones.begin(), ones.end(), 0u);
    for (const auto& v : vectors) {
      std::uint64_t word = v.words()[w];
      while (word != 0) {
        ones[static_cast<std::size_t>(std::countr_zero(word))] += 1;
        word &= word - 1;
      }
    }
    const std::uint64_t coins = splitmix64(tie_seed ^ splitmix64(w));
    std::uint64_t result = 0;
    for (std::size_t b = 0; b < 64; ++b) {
      const std::size_t twice = 2 * static_cast<std::size_t>(ones[b]);
      const bool bit = twice > m || (twice == m && ((coins >> b) & 1u));
      if (bit) result |= std::uint64_t{1} << b;
    }
    words[w] = result;
  }
  return BinaryHypervector(n, std::move(words));
}

DistanceStats distance_distribution_stats(std::size_t n, std::size_t samples, std::mt19937_64& rng) {
  if (samples < 2) throw DataError("distance_distribution_stats: need at least 2 samples");
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto a = random_hypervector(n, rng);
    const auto b = random_hypervector(n, rng);
    const auto d = static_cast<double>(hamming(a, b));
    sum += d;
    sum_sq += d * d;
  }
  const double count = static_cast<double>(samples);
  const double mean = sum / count;
  const double var = std::max(0.0, (sum_sq - count * mean * mean) / (count - 1.0));
  return {mean, std::sqrt(var)};
}

}  // namespace semvec
