#include "semvec/similarity_index.hpp"

#include <numeric>

namespace semvec {

Index::Index(const VectorSpace& space) : vocab_(space.vocab()) {
  const VectorSpace unit = normalize(space);
  unit_ = unit.matrix().transpose();
  rows_.reserve(vocab_.size());
  for (std::size_t i = 0; i < vocab_.size(); ++i) {
    rows_.emplace(vocab_[i], i);
    folded_rows_.emplace(ascii_lower(vocab_[i]), i);
  }
}

std::optional<std::size_t> Index::find(std::string_view token, bool case_fold) const {
  if (auto it = rows_.find(std::string(token)); it != rows_.end()) return it->second;
  if (case_fold) {
    if (auto it = folded_rows_.find(ascii_lower(token)); it != folded_rows_.end()) return it->second;
  }
  return std::nullopt;
}

std::size_t Index::require(std::string_view token, bool case_fold) const {
  if (auto row = find(token, case_fold)) return *row;
  throw UnknownTokenError(std::string(token));
}

std::vector<Neighbor> Index::nearest(const Vector& query, std::size_t k,
                                     const TokenSet& exclude) const {
  if (k < 1) throw DataError("k must be at least 1");
  if (static_cast<std::size_t>(query.size()) != dim()) throw DataError("query dimension mismatch");
  const double qn = query.norm();
  if (qn == 0.0) throw DataError("zero query vector");

  const Vector scores = unit_.transpose() * (query / qn);

  std::vector<char> skip(size(), 0);
  for (const auto& token : exclude) {
    if (auto it = rows_.find(token); it != rows_.end()) skip[it->second] = 1;
  }
  std::vector<std::size_t> candidates;
  candidates.reserve(size());
  for (std::size_t i = 0; i < size(); ++i)
    if (!skip[i]) candidates.push_back(i);

  const auto better = [&](std::size_t a, std::size_t b) {
    const double sa = scores[static_cast<Eigen::Index>(a)];
    const double sb = scores[static_cast<Eigen::Index>(b)];
    return sa != sb ? sa > sb : a < b;
  };
  const std::size_t take = std::min(k, candidates.size());
  std::partial_sort(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(take),
                    candidates.end(), better);

  std::vector<Neighbor> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) {
    const std::size_t row = candidates[i];
    out.push_back({vocab_[row], std::clamp(scores[static_cast<Eigen::Index>(row)], -1.0, 1.0)});
  }
  return out;
}

Index build_index(const VectorSpace& space) { return Index(space); }

}  // namespace semvec
