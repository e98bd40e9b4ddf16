#include "semvec/cooccurrence_trainer.hpp"

#include <cctype>
#include <charconv>
#include <filesystem>
#include <unordered_map>

namespace semvec {

namespace {

bool is_space(char ch) {
  return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\f' || ch == '\v';
}

bool is_punct(char ch) {
  const auto u = static_cast<unsigned char>(ch);
  return u < 0x80 && std::ispunct(u);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_value(std::string_view value, std::size_t line_no, std::string_view key) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw DataError("config line " + std::to_string(line_no) + ": invalid value for " +
                        std::string(key),
                    line_no);
  }
  return out;
}

}  // namespace

Document tokenize(std::string_view text) {
  Document out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    std::size_t end = pos;
    while (end < text.size() && !is_space(text[end])) ++end;
    std::string_view word = text.substr(pos, end - pos);
    while (!word.empty() && is_punct(word.front())) word.remove_prefix(1);
    while (!word.empty() && is_punct(word.back())) word.remove_suffix(1);
    if (!word.empty()) out.push_back(ascii_lower(word));
    pos = end;
  }
  return out;
}

Corpus tokenize_corpus(const std::vector<std::string>& documents) {
  Corpus corpus;
  corpus.reserve(documents.size());
  for (const auto& doc : documents) corpus.push_back(tokenize(doc));
  return corpus;
}

std::vector<std::string> load_corpus(const std::string& path) {
  namespace fs = std::filesystem;
  std::vector<std::string> documents;
  if (fs::is_directory(path)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) documents.push_back(read_file(f.string()));
    return documents;
  }
  const std::string text = read_file(path);
  std::string current;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string_view line(text.data() + pos, end - pos);
    if (trim(line).empty()) {
      if (!current.empty()) documents.push_back(std::move(current));
      current.clear();
    } else {
      current.append(line);
      current += '\n';
    }
    pos = end + 1;
  }
  if (!current.empty()) documents.push_back(std::move(current));
  return documents;
}

Weighting parse_weighting(std::string_view name) {
  if (name == "raw") return Weighting::raw;
  if (name == "log1p") return Weighting::log1p;
  if (name == "ppmi") return Weighting::ppmi;
  throw DataError("unknown weighting '" + std::string(name) + "' (expected raw, log1p or ppmi)");
}

std::string to_string(Weighting weighting) {
  switch (weighting) {
    case Weighting::raw:
      return "raw";
    case Weighting::log1p:
      return "log1p";
    case Weighting::ppmi:
      return "ppmi";
  }
  return "?";
}

TrainConfig parse_train_config(std::string_view text, TrainConfig base) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty() || line.front() == '[') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw DataError("config line " + std::to_string(line_no) + ": expected key = value", line_no);
    }
    const std::string_view key = trim(line.substr(0, eq));
    std::string_view value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
        value.back() == value.front()) {
      value = value.substr(1, value.size() - 2);
    }
    if (key == "window") {
      base.window = parse_value<int>(value, line_no, key);
    } else if (key == "min_count") {
      base.min_count = parse_value<int>(value, line_no, key);
    } else if (key == "dim") {
      base.dim = parse_value<int>(value, line_no, key);
    } else if (key == "weighting") {
      base.weighting = parse_weighting(value);
    } else if (key == "svd_tol") {
      base.svd_tol = parse_value<double>(value, line_no, key);
    } else if (key == "seed") {
      base.seed = parse_value<std::uint64_t>(value, line_no, key);
    } else {
      throw DataError("config line " + std::to_string(line_no) + ": unknown key '" +
                          std::string(key) + "'",
                      line_no);
    }
  }
  return base;
}

CooccurrenceMatrix count_cooccurrences(const Corpus& corpus, const TrainConfig& config) {
  if (config.window < 1) throw DataError("window must be at least 1");

  std::unordered_map<std::string, std::size_t> frequency;
  std::vector<std::string> first_seen;
  for (const auto& doc : corpus) {
    for (const auto& token : doc) {
      if (frequency[token]++ == 0) first_seen.push_back(token);
    }
  }
  CooccurrenceMatrix out;
  std::unordered_map<std::string, std::size_t> ids;
  for (const auto& token : first_seen) {
    if (frequency[token] >= static_cast<std::size_t>(std::max(config.min_count, 0))) {
      ids.emplace(token, out.vocab.size());
      out.vocab.push_back(token);
    }
  }
  if (out.vocab.empty()) throw DataError("empty vocabulary after min_count filtering");

  const auto v = static_cast<Eigen::Index>(out.vocab.size());
  std::unordered_map<std::uint64_t, double> cells;
  std::vector<std::size_t> stream;
  const auto window = static_cast<std::size_t>(config.window);
  for (const auto& doc : corpus) {
    stream.clear();
    for (const auto& token : doc) {
      if (auto it = ids.find(token); it != ids.end()) stream.push_back(it->second);
    }
    for (std::size_t t = 0; t < stream.size(); ++t) {
      const std::size_t hi = std::min(stream.size() - 1, t + window);
      const std::size_t lo = t >= window ? t - window : 0;
      for (std::size_t u = lo; u <= hi; ++u) {
        if (u == t) continue;
        cells[(static_cast<std::uint64_t>(stream[t]) << 32) | stream[u]] += 1.0;
      }
    }
  }

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(cells.size());
  for (const auto& [key, value] : cells) {
    triplets.emplace_back(static_cast<Eigen::Index>(key >> 32),
                          static_cast<Eigen::Index>(key & 0xFFFFFFFFu), value);
  }
  out.counts.resize(v, v);
  out.counts.setFromTriplets(triplets.begin(), triplets.end());
  out.counts.makeCompressed();
  return out;
}

CooccurrenceMatrix weight_matrix(const CooccurrenceMatrix& matrix, Weighting weighting) {
  CooccurrenceMatrix out = matrix;
  switch (weighting) {
    case Weighting::raw:
      break;
    case Weighting::log1p:
      out.counts = matrix.counts.unaryExpr([](double c) { return std::log1p(c); });
      break;
    case Weighting::ppmi: {
      const Eigen::VectorXd ones = Eigen::VectorXd::Ones(matrix.counts.cols());
      const Eigen::VectorXd row_sums = matrix.counts * ones;
      const Eigen::VectorXd col_sums = matrix.counts.transpose() * Eigen::VectorXd::Ones(matrix.counts.rows());
      const double total = row_sums.sum();
      for (Eigen::Index k = 0; k < out.counts.outerSize(); ++k) {
        for (SparseMatrix::InnerIterator it(out.counts, k); it; ++it) {
          const double c = it.value();
          it.valueRef() = std::max(0.0, std::log(c * total / (row_sums[it.row()] * col_sums[it.col()])));
        }
      }
      break;
    }
  }
  out.counts.prune(0.0);
  out.counts.makeCompressed();
  return out;
}

VectorSpace train(const Corpus& corpus, const TrainConfig& config) {
  if (config.dim < 1) throw DataError("dim must be at least 1");
  const CooccurrenceMatrix counts = count_cooccurrences(corpus, config);
  if (static_cast<std::size_t>(config.dim) > counts.vocab.size()) {
    throw DataError("dim " + std::to_string(config.dim) + " exceeds vocabulary size " +
                    std::to_string(counts.vocab.size()));
  }
  const CooccurrenceMatrix weighted = weight_matrix(counts, config.weighting);
  const auto svd = truncated_svd(weighted.counts, config.dim, config.svd_tol, config.seed);
  Matrix embeddings = svd.left * svd.singular_values.cwiseSqrt().asDiagonal();
  return VectorSpace(counts.vocab, std::move(embeddings));
}

}  // namespace semvec
