#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <Eigen/Dense>

#include "semvec/embedding_store.hpp"

namespace semvec {

struct Neighbor {
  std::string token;
  double score = 0.0;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

using TokenSet = std::unordered_set<std::string>;

/// Cosine similarity clamped to [-1, 1]. Throws DataError on a zero vector or a
/// dimension mismatch.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar cosine(const Eigen::MatrixBase<DerivedA>& a,
                                 const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  if (a.size() != b.size()) throw DataError("cosine: dimension mismatch");
  const Scalar na = a.norm();
  const Scalar nb = b.norm();
  if (na == Scalar(0) || nb == Scalar(0)) throw DataError("cosine: zero vector");
  const Scalar c = a.cwiseProduct(b.derived()).sum() / (na * nb);
  return std::clamp(c, Scalar(-1), Scalar(1));
}

inline double cosine(const ConceptVector& a, const ConceptVector& b) {
  return cosine(a.components, b.components);
}

/// Exact cosine nearest-neighbor search over a unit-normalized copy of a space.
///
/// Rows are stored as columns of a d x v matrix so a query is a single
/// matrix-vector product. Results are ordered by score descending, ties by
/// row order.
class Index {
 public:
  explicit Index(const VectorSpace& space);

  std::size_t size() const noexcept { return vocab_.size(); }
  std::size_t dim() const noexcept { return static_cast<std::size_t>(unit_.rows()); }
  const std::vector<std::string>& vocab() const noexcept { return vocab_; }

  std::optional<std::size_t> find(std::string_view token, bool case_fold = false) const;
  /// Throws UnknownTokenError.
  std::size_t require(std::string_view token, bool case_fold = false) const;

  /// Unit row of a token, as a column vector.
  auto unit_row(std::size_t i) const { return unit_.col(static_cast<Eigen::Index>(i)); }
  Vector unit_vector(std::string_view token) const { return unit_row(require(token)); }

  /// Top-k tokens by cosine to `query`, skipping tokens in `exclude`.
  std::vector<Neighbor> nearest(const Vector& query, std::size_t k,
                                const TokenSet& exclude = {}) const;
  std::vector<Neighbor> nearest(const ConceptVector& query, std::size_t k,
                                const TokenSet& exclude = {}) const {
    return nearest(query.components, k, exclude);
  }

 private:
  std::vector<std::string> vocab_;
  Matrix unit_;  // d x v
  std::unordered_map<std::string, std::size_t> rows_;
  std::unordered_map<std::string, std::size_t> folded_rows_;
};

Index build_index(const VectorSpace& space);

}  // namespace semvec
