#include "semvec/concept_algebra.hpp"

#include <charconv>

namespace semvec {

namespace {

Vector unit_of(const VectorSpace& space, std::string_view token) {
  const auto row = space.index_of(token);
  if (!row) throw UnknownTokenError(std::string(token));
  Vector v = space.row(*row).transpose();
  const double n = v.norm();
  if (n == 0.0) throw DataError("zero vector for token '" + std::string(token) + "'");
  return v / n;
}

Vector weighted_sum(const VectorSpace& space, const WeightedTermSet& terms) {
  Vector sum = Vector::Zero(static_cast<Eigen::Index>(space.dim()));
  for (const auto& t : terms) sum += t.weight * unit_of(space, t.token);
  return sum;
}

std::string describe(const WeightedTermSet& terms, char sign) {
  std::string out;
  for (const auto& t : terms) {
    if (!out.empty()) out += ' ';
    out += sign;
    out += t.token;
  }
  return out;
}

void check_name(const std::string& name) {
  if (name.find_first_of(" \n\t\r") != std::string::npos) {
    throw DataError("relation name must not contain whitespace: '" + name + "'");
  }
}

}  // namespace

std::vector<Neighbor> analogy(const Index& index, std::string_view a, std::string_view b,
                              std::string_view c, std::size_t k, ExclusionPolicy policy) {
  if (k < 1) throw DataError("k must be at least 1");
  const auto ra = index.require(a);
  const auto rb = index.require(b);
  const auto rc = index.require(c);
  const Vector query = index.unit_row(rb) + index.unit_row(rc) - index.unit_row(ra);
  TokenSet exclude;
  if (policy == ExclusionPolicy::exclude_inputs) {
    exclude = {std::string(a), std::string(b), std::string(c)};
  }
  return index.nearest(query, k, exclude);
}

std::vector<Neighbor> associate(const Index& index, const WeightedTermSet& terms, std::size_t k) {
  if (terms.empty()) throw DataError("associate: empty term set");
  Vector query = Vector::Zero(static_cast<Eigen::Index>(index.dim()));
  TokenSet exclude;
  for (const auto& t : terms) {
    query += t.weight * index.unit_row(index.require(t.token));
    exclude.insert(t.token);
  }
  if (query.norm() == 0.0) throw DataError("associate: weighted sum is the zero vector");
  return index.nearest(query, k, exclude);
}

WeightedTermSet uniform_weights(const std::vector<std::string>& tokens) {
  WeightedTermSet out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back({t, 1.0 / static_cast<double>(tokens.size())});
  return out;
}

ConceptVector build_concept(const VectorSpace& space, const WeightedTermSet& positives,
                            const WeightedTermSet& negatives) {
  if (positives.empty()) throw DataError("build_concept: no positive terms");
  const Vector v = weighted_sum(space, positives) - weighted_sum(space, negatives);
  const double n = v.norm();
  if (n == 0.0) throw DataError("build_concept: result is the zero vector");
  std::string label = describe(positives, '+');
  if (!negatives.empty()) label += ' ' + describe(negatives, '-');
  return {v / n, {Provenance::Kind::weighted_sum, std::move(label)}};
}

RelationVector learn_relation(const VectorSpace& space, const std::vector<TokenPair>& pairs,
                              std::string name) {
  if (pairs.empty()) throw DataError("learn_relation: no example pairs");
  check_name(name);
  Vector sum = Vector::Zero(static_cast<Eigen::Index>(space.dim()));
  for (const auto& [source, target] : pairs) sum += unit_of(space, target) - unit_of(space, source);
  return {sum / static_cast<double>(pairs.size()), pairs, std::move(name)};
}

std::vector<Neighbor> apply_relation(const Index& index, const RelationVector& relation,
                                     std::string_view source, std::size_t k) {
  if (static_cast<std::size_t>(relation.displacement.size()) != index.dim()) {
    throw DataError("apply_relation: relation dimension does not match the space");
  }
  const Vector query = index.unit_row(index.require(source)) + relation.displacement;
  TokenSet exclude{std::string(source)};
  for (const auto& [s, t] : relation.support) {
    exclude.insert(s);
    exclude.insert(t);
  }
  return index.nearest(query, k, exclude);
}

RelationVector compose_relations(const RelationVector& first, const RelationVector& second) {
  if (first.displacement.size() != second.displacement.size()) {
    throw DataError("compose_relations: dimension mismatch");
  }
  RelationVector out{first.displacement + second.displacement, first.support, {}};
  out.support.insert(out.support.end(), second.support.begin(), second.support.end());
  if (!first.name.empty() || !second.name.empty()) out.name = first.name + "." + second.name;
  return out;
}

RelationVector negate(const RelationVector& relation) {
  RelationVector out{-relation.displacement, {}, relation.name.empty() ? "" : "neg." + relation.name};
  for (const auto& [s, t] : relation.support) out.support.emplace_back(t, s);
  return out;
}

std::string write_relation(const RelationVector& relation) {
  const std::string name = relation.name.empty() ? "relation" : relation.name;
  check_name(name);
  std::string out = "#relation " + name + " " + std::to_string(relation.support.size());
  for (const auto& [s, t] : relation.support) out += " " + s + " " + t;
  out += '\n';
  const VectorSpace row({name}, relation.displacement.transpose());
  return out + write_embeddings(row, Format::text_header);
}

RelationVector parse_relation(std::string_view bytes) {
  const std::size_t nl = bytes.find('\n');
  const std::string_view header = bytes.substr(0, nl);
  std::vector<std::string> fields;
  for (std::size_t pos = 0; pos < header.size();) {
    const std::size_t end = std::min(header.find(' ', pos), header.size());
    if (end > pos) fields.emplace_back(header.substr(pos, end - pos));
    pos = end + 1;
  }
  std::size_t count = 0;
  if (fields.size() < 3 || fields[0] != "#relation" ||
      std::from_chars(fields[2].data(), fields[2].data() + fields[2].size(), count).ec != std::errc() ||
      fields.size() != 3 + 2 * count) {
    throw DataError("line 1: expected '#relation <name> <pair count> <source> <target> ...'", 1);
  }
  if (nl == std::string_view::npos) throw DataError("relation file has no vector", 2);
  VectorSpace body;
  try {
    body = parse_text_embeddings(bytes.substr(nl + 1), HeaderPolicy::expect_header);
  } catch (const DataError& e) {
    throw DataError(std::string("relation vector: ") + e.what(), e.position() + 1);
  }
  if (body.size() != 1 || body.vocab()[0] != fields[1]) {
    throw DataError("relation file must hold exactly one row named '" + fields[1] + "'", 2);
  }
  RelationVector out{body.row(0).transpose(), {}, fields[1]};
  for (std::size_t i = 0; i < count; ++i) out.support.emplace_back(fields[3 + 2 * i], fields[4 + 2 * i]);
  return out;
}

}  // namespace semvec
