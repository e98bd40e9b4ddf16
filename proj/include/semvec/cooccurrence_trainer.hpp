#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <Eigen/SparseCore>

#include "semvec/embedding_store.hpp"

namespace semvec {

using Document = std::vector<std::string>;
using Corpus = std::vector<Document>;

/// Lowercases ASCII, splits on whitespace and strips leading/trailing ASCII
/// punctuation from each token. Tokens that strip to nothing are dropped.
Document tokenize(std::string_view text);
Corpus tokenize_corpus(const std::vector<std::string>& documents);

/// A directory yields one document per *.txt file (sorted by name); a regular
/// file is split into documents at blank lines.
std::vector<std::string> load_corpus(const std::string& path);

enum class Weighting { raw, log1p, ppmi };

struct TrainConfig {
  int window = 2;
  int min_count = 1;
  int dim = 300;
  Weighting weighting = Weighting::ppmi;
  double svd_tol = 1e-8;
  std::uint64_t seed = 7;
};

/// Reads `key = value` lines whose keys are TrainConfig field names, layering
/// them over `base`. '#' starts a comment; string values may be quoted.
TrainConfig parse_train_config(std::string_view text, TrainConfig base = {});
Weighting parse_weighting(std::string_view name);
std::string to_string(Weighting weighting);

using SparseMatrix = Eigen::SparseMatrix<double>;

/// Sparse word-by-context counts. Only strictly positive entries are stored.
struct CooccurrenceMatrix {
  std::vector<std::string> vocab;
  SparseMatrix counts;

  double count(std::size_t row, std::size_t col) const {
    return counts.coeff(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }
};

/// Symmetric uniform window counting. Windows never cross documents; tokens
/// seen fewer than `min_count` times are removed from the stream first.
/// Vocabulary order is order of first occurrence.
CooccurrenceMatrix count_cooccurrences(const Corpus& corpus, const TrainConfig& config);

CooccurrenceMatrix weight_matrix(const CooccurrenceMatrix& matrix, Weighting weighting);

class ConvergenceError : public DataError {
 public:
  ConvergenceError(const std::string& what, double residual)
      : DataError(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

template <typename Scalar>
struct SvdResult {
  using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  MatrixX left;    // rows x d, orthonormal columns
  VectorX singular_values;  // d, nonincreasing
  MatrixX right;   // cols x d
  int iterations = 0;
  Scalar residual = 0;  // last relative change of the singular value estimates
};

struct SvdOptions {
  int max_iterations = 300;
  int oversample = 10;
};

namespace detail {

template <typename MatrixX>
MatrixX orthonormal_basis(const MatrixX& m) {
  Eigen::HouseholderQR<MatrixX> qr(m);
  return qr.householderQ() * MatrixX::Identity(m.rows(), m.cols());
}

}  // namespace detail

/// Top-d singular triplets by randomized subspace iteration.
///
/// Starts from a Gaussian test block of width min(d + oversample, rows, cols)
/// drawn from `seed`, then alternates orthonormalized products with A^T and A
/// until the top-d singular value estimates change by less than `tol`
/// relative to the largest one. Works for any Eigen dense or sparse matrix.
template <typename MatrixType>
SvdResult<typename MatrixType::Scalar> truncated_svd(const MatrixType& a, Eigen::Index d,
                                                     double tol, std::uint64_t seed,
                                                     SvdOptions options = {}) {
  using Scalar = typename MatrixType::Scalar;
  using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  if (d < 1 || d > std::min(rows, cols)) {
    throw DataError("truncated_svd: d=" + std::to_string(d) + " outside [1, " +
                    std::to_string(std::min(rows, cols)) + "]");
  }
  if (!(tol > 0)) throw DataError("truncated_svd: tolerance must be positive");
  const Eigen::Index width = std::min<Eigen::Index>(d + options.oversample, std::min(rows, cols));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  MatrixX omega(cols, width);
  for (Eigen::Index j = 0; j < width; ++j)
    for (Eigen::Index i = 0; i < cols; ++i) omega(i, j) = static_cast<Scalar>(gauss(rng));

  MatrixX q = detail::orthonormal_basis<MatrixX>(a * omega);
  VectorX previous;
  Scalar change = std::numeric_limits<Scalar>::infinity();
  for (int it = 1; it <= options.max_iterations; ++it) {
    const MatrixX z = detail::orthonormal_basis<MatrixX>(a.transpose() * q);
    q = detail::orthonormal_basis<MatrixX>(a * z);
    const MatrixX bt = a.transpose() * q;  // (Q^T A)^T, cols x width
    Eigen::BDCSVD<MatrixX> svd(bt, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const VectorX sigma = svd.singularValues().head(d);
    if (previous.size() == d) {
      const Scalar scale = sigma(0) > Scalar(0) ? sigma(0) : Scalar(1);
      change = (sigma - previous).cwiseAbs().maxCoeff() / scale;
      if (change < static_cast<Scalar>(tol) || sigma(0) == Scalar(0)) {
        // B^T = V_b S U_b^T, so A ~ (Q U_b) S V_b^T.
        SvdResult<Scalar> out;
        out.left = q * svd.matrixV().leftCols(d);
        out.singular_values = sigma;
        out.right = svd.matrixU().leftCols(d);
        out.iterations = it;
        out.residual = change;
        return out;
      }
    }
    previous = sigma;
  }
  throw ConvergenceError("truncated_svd did not converge in " +
                             std::to_string(options.max_iterations) +
                             " iterations; last relative change " + std::to_string(change),
                         static_cast<double>(change));
}

/// Counting, weighting and truncated SVD; rows are left factors scaled by
/// sqrt of the singular values.
VectorSpace train(const Corpus& corpus, const TrainConfig& config);

}  // namespace semvec
