#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace semvec {

/// Bit-packed element of {0,1}^n. Bits past n in the last word are always zero.
class BinaryHypervector {
 public:
  explicit BinaryHypervector(std::size_t n);
  /// Takes ceil(n/64) little-endian words; bits past n are cleared.
  BinaryHypervector(std::size_t n, std::vector<std::uint64_t> words);

  std::size_t size() const noexcept { return n_; }
  bool bit(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set_bit(std::size_t i, bool value);
  std::size_t popcount() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend bool operator==(const BinaryHypervector&, const BinaryHypervector&) = default;

 private:
  void clear_padding();

  std::size_t n_;
  std::vector<std::uint64_t> words_;
};

/// Each bit an independent fair coin from `rng`. Throws DataError for n = 0.
BinaryHypervector random_hypervector(std::size_t n, std::mt19937_64& rng);

BinaryHypervector complement(const BinaryHypervector& v);

/// Number of differing positions. Throws DataError on dimension mismatch.
std::size_t hamming(const BinaryHypervector& a, const BinaryHypervector& b);

/// Bitwise majority. Even splits take a coin keyed by (tie_seed, bit position),
/// so the result does not depend on the order of `vectors`.
BinaryHypervector bundle(std::span<const BinaryHypervector> vectors, std::uint64_t tie_seed);

struct DistanceStats {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
};

/// Hamming distance statistics over `samples` independent random pairs.
DistanceStats distance_distribution_stats(std::size_t n, std::size_t samples, std::mt19937_64& rng);

}  // namespace semvec
