#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

#include "semvec/errors.hpp"

namespace semvec {

using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic>;
using Vector = Eigen::Matrix<double, Eigen::Dynamic, 1>;

enum class NormState { raw, unit };

/// Vocabulary plus a dense embedding matrix, one row per token.
///
/// Immutable once constructed; the constructor enforces unique tokens,
/// finite components and (for NormState::unit) unit row norms.
class VectorSpace {
 public:
  VectorSpace() = default;
  VectorSpace(std::vector<std::string> vocab, Matrix matrix, NormState state = NormState::raw);
  /// Empty vocabulary of a fixed dimension.
  static VectorSpace empty(std::size_t dim);

  const std::vector<std::string>& vocab() const noexcept { return vocab_; }
  const Matrix& matrix() const noexcept { return matrix_; }
  std::size_t size() const noexcept { return vocab_.size(); }
  std::size_t dim() const noexcept { return dim_; }
  NormState norm_state() const noexcept { return state_; }

  std::optional<std::size_t> index_of(std::string_view token) const;
  auto row(std::size_t i) const { return matrix_.row(static_cast<Eigen::Index>(i)); }

  friend bool operator==(const VectorSpace& a, const VectorSpace& b) {
    return a.dim_ == b.dim_ && a.state_ == b.state_ && a.vocab_ == b.vocab_ &&
           a.matrix_.rows() == b.matrix_.rows() && a.matrix_ == b.matrix_;
  }

 private:
  std::vector<std::string> vocab_;
  Matrix matrix_;
  std::size_t dim_ = 0;
  NormState state_ = NormState::raw;
  std::unordered_map<std::string, std::size_t> rows_;
};

struct Provenance {
  enum class Kind { token, weighted_sum, analogy, relation_application };
  Kind kind = Kind::token;
  std::string label;
};

/// A dense vector tagged with how it was produced.
struct ConceptVector {
  Vector components;
  Provenance provenance;
};

enum class HeaderPolicy { expect_header, headerless };
enum class Format { text_header, text_headerless, binary };

/// word2vec text ("v d" header line) or GloVe text (no header).
VectorSpace parse_text_embeddings(std::string_view bytes, HeaderPolicy policy);

/// word2vec binary: "v d\n" then v records of token, ' ', d little-endian float32.
VectorSpace parse_binary_embeddings(std::string_view bytes, std::size_t max_token_bytes = 512);

/// Text output writes each component in its shortest round-trip decimal form:
/// binary32 precision when the value is exactly a float, binary64 otherwise.
std::string write_embeddings(const VectorSpace& space, Format format);

/// Scales each row to unit Euclidean norm. Throws DataError naming the first zero row.
VectorSpace normalize(const VectorSpace& space);

struct LookupOptions {
  bool case_fold = false;
};

std::optional<ConceptVector> lookup(const VectorSpace& space, std::string_view token,
                                    LookupOptions options = {});

/// Guesses the format from content: binary if the header is followed by non-text bytes,
/// text_header if the first line is two integers, text_headerless otherwise.
Format detect_format(std::string_view bytes);

VectorSpace parse_embeddings(std::string_view bytes, Format format);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view bytes);

std::string ascii_lower(std::string_view s);

}  // namespace semvec
