#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semvec/embedding_store.hpp"
#include "semvec/similarity_index.hpp"

namespace semvec {

struct WeightedTerm {
  std::string token;
  double weight = 1.0;
};

/// Signed weights over vocabulary tokens.
using WeightedTermSet = std::vector<WeightedTerm>;

using TokenPair = std::pair<std::string, std::string>;

/// A one-to-one relation as a displacement between unit concept vectors.
struct RelationVector {
  Vector displacement;
  std::vector<TokenPair> support;
  std::string name;
};

enum class ExclusionPolicy { exclude_inputs, none };

/// Solves a:b::c:? with the 3CosAdd rule on unit rows: nearest to b + c - a.
std::vector<Neighbor> analogy(const Index& index, std::string_view a, std::string_view b,
                              std::string_view c, std::size_t k,
                              ExclusionPolicy policy = ExclusionPolicy::exclude_inputs);

/// Nearest tokens to the weighted sum of unit rows, excluding the cue tokens.
std::vector<Neighbor> associate(const Index& index, const WeightedTermSet& terms, std::size_t k);

/// Unit-normalized sum of weighted positive unit rows minus weighted negative ones.
ConceptVector build_concept(const VectorSpace& space, const WeightedTermSet& positives,
                            const WeightedTermSet& negatives);

/// Every entry weighted 1/|tokens|.
WeightedTermSet uniform_weights(const std::vector<std::string>& tokens);

/// Mean of unit(target) - unit(source) over the pairs.
RelationVector learn_relation(const VectorSpace& space, const std::vector<TokenPair>& pairs,
                              std::string name = {});

/// Nearest tokens to unit(source) + displacement, excluding the source and the
/// relation's support tokens.
std::vector<Neighbor> apply_relation(const Index& index, const RelationVector& relation,
                                     std::string_view source, std::size_t k);

/// Sum of displacements; supports concatenated.
RelationVector compose_relations(const RelationVector& first, const RelationVector& second);
RelationVector negate(const RelationVector& relation);

/// "#relation <name> <pair count> <src> <tgt> ..." followed by the word2vec
/// text form of a single row named after the relation.
std::string write_relation(const RelationVector& relation);
RelationVector parse_relation(std::string_view bytes);

}  // namespace semvec
