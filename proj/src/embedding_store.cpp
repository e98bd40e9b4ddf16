#include "semvec/embedding_store.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <limits>
#include <sstream>

namespace semvec {

namespace {

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && line[pos] == ' ') ++pos;
    if (pos == line.size()) break;
    const std::size_t end = line.find(' ', pos);
    const std::size_t stop = end == std::string_view::npos ? line.size() : end;
    fields.push_back(line.substr(pos, stop - pos));
    pos = stop;
  }
  return fields;
}

template <typename T>
bool parse_number(std::string_view field, T& out) {
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

bool parse_header(std::string_view line, std::size_t& count, std::size_t& dim) {
  const auto fields = split_fields(line);
  return fields.size() == 2 && parse_number(fields[0], count) && parse_number(fields[1], dim);
}

std::vector<std::string_view> split_lines(std::string_view bytes) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < bytes.size()) {
    std::size_t end = bytes.find('\n', pos);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = end + 1;
  }
  return lines;
}

void append_number(std::string& out, double value) {
  char buf[64];
  const auto as_float = static_cast<float>(value);
  std::to_chars_result res;
  if (static_cast<double>(as_float) == value) {
    res = std::to_chars(buf, buf + sizeof(buf), as_float);
  } else {
    res = std::to_chars(buf, buf + sizeof(buf), value);
  }
  out.append(buf, res.ptr);
}

}  // namespace

VectorSpace::VectorSpace(std::vector<std::string> vocab, Matrix matrix, NormState state)
    : vocab_(std::move(vocab)), matrix_(std::move(matrix)), state_(state) {
  if (static_cast<std::size_t>(matrix_.rows()) != vocab_.size()) {
    throw DataError("vocabulary has " + std::to_string(vocab_.size()) + " tokens but matrix has " +
                    std::to_string(matrix_.rows()) + " rows");
  }
  if (matrix_.cols() <= 0) throw DataError("embedding dimension must be positive");
  dim_ = static_cast<std::size_t>(matrix_.cols());
  rows_.reserve(vocab_.size());
  for (std::size_t i = 0; i < vocab_.size(); ++i) {
    if (!rows_.emplace(vocab_[i], i).second) {
      throw DataError("duplicate token '" + vocab_[i] + "' at row " + std::to_string(i + 1), i + 1);
    }
    if (!matrix_.row(static_cast<Eigen::Index>(i)).allFinite()) {
      throw DataError("non-finite component in row of '" + vocab_[i] + "'", i + 1);
    }
    if (state_ == NormState::unit) {
      const double n = matrix_.row(static_cast<Eigen::Index>(i)).norm();
      if (std::abs(n - 1.0) > 1e-6) {
        throw DataError("row of '" + vocab_[i] + "' is not unit length", i + 1);
      }
    }
  }
}

VectorSpace VectorSpace::empty(std::size_t dim) {
  return VectorSpace({}, Matrix(0, static_cast<Eigen::Index>(dim)));
}

std::optional<std::size_t> VectorSpace::index_of(std::string_view token) const {
  const auto it = rows_.find(std::string(token));
  if (it == rows_.end()) return std::nullopt;
  return it->second;
}

VectorSpace parse_text_embeddings(std::string_view bytes, HeaderPolicy policy) {
  auto lines = split_lines(bytes);
  std::size_t first_body = 0;
  std::size_t declared_count = 0;
  std::size_t dim = 0;
  if (policy == HeaderPolicy::expect_header) {
    if (lines.empty() || !parse_header(lines[0], declared_count, dim)) {
      throw DataError(at_line(1) + "expected header '<vocab_count> <dim>'", 1);
    }
    if (dim == 0) throw DataError(at_line(1) + "dimension must be positive", 1);
    first_body = 1;
  }

  std::vector<std::string> vocab;
  std::vector<double> values;
  for (std::size_t i = first_body; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const auto fields = split_fields(lines[i]);
    if (fields.empty()) throw DataError(at_line(line_no) + "empty line", line_no);
    if (dim == 0) {
      if (fields.size() < 2) throw DataError(at_line(line_no) + "row has no components", line_no);
      dim = fields.size() - 1;
    }
    if (fields.size() - 1 != dim) {
      throw DataError(at_line(line_no) + "expected " + std::to_string(dim) + " components, found " +
                          std::to_string(fields.size() - 1),
                      line_no);
    }
    vocab.emplace_back(fields[0]);
    for (std::size_t j = 1; j < fields.size(); ++j) {
      double v = 0;
      if (!parse_number(fields[j], v) || !std::isfinite(v)) {
        throw DataError(at_line(line_no) + "invalid component '" + std::string(fields[j]) + "'",
                        line_no);
      }
      values.push_back(v);
    }
  }
  if (policy == HeaderPolicy::expect_header && vocab.size() != declared_count) {
    throw DataError(at_line(1) + "header declares " + std::to_string(declared_count) +
                        " tokens but body has " + std::to_string(vocab.size()),
                    1);
  }
  if (dim == 0) throw DataError("no embedding rows; dimension cannot be inferred");

  Matrix m(static_cast<Eigen::Index>(vocab.size()), static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < vocab.size(); ++r)
    for (std::size_t c = 0; c < dim; ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = values[r * dim + c];

  // Re-raise duplicate errors with the file line rather than the row index.
  try {
    return VectorSpace(std::move(vocab), std::move(m));
  } catch (const DataError& e) {
    const std::size_t line_no = e.position() + first_body;
    throw DataError(at_line(line_no) + e.what(), line_no);
  }
}

VectorSpace parse_binary_embeddings(std::string_view bytes, std::size_t max_token_bytes) {
  const std::size_t header_end = bytes.find('\n');
  if (header_end == std::string_view::npos || header_end > 64) {
    throw DataError("binary header missing or overflowing its line", 1);
  }
  std::size_t count = 0;
  std::size_t dim = 0;
  if (!parse_header(bytes.substr(0, header_end), count, dim)) {
    throw DataError("binary header is not '<vocab_count> <dim>' or overflows", 1);
  }
  if (dim == 0) throw DataError("binary header: dimension must be positive", 1);
  const std::size_t max_dim = std::numeric_limits<std::size_t>::max() / 4 - 1;
  if (dim > max_dim || count > (bytes.size() - header_end) / (4 * dim + 2) + 1) {
    throw DataError("binary header overflow: declares more data than the stream holds", 1);
  }

  std::vector<std::string> vocab;
  vocab.reserve(count);
  Matrix m(static_cast<Eigen::Index>(count), static_cast<Eigen::Index>(dim));
  std::size_t pos = header_end + 1;
  for (std::size_t r = 0; r < count; ++r) {
    const std::size_t record = r + 1;
    while (pos < bytes.size() && bytes[pos] == '\n') ++pos;
    const std::size_t space = bytes.find(' ', pos);
    if (space == std::string_view::npos) {
      if (bytes.size() - pos > max_token_bytes) {
        throw DataError("record " + std::to_string(record) + ": token longer than " +
                            std::to_string(max_token_bytes) + " bytes",
                        record);
      }
      throw DataError("truncated stream in record " + std::to_string(record), record);
    }
    if (space - pos > max_token_bytes) {
      throw DataError("record " + std::to_string(record) + ": token longer than " +
                          std::to_string(max_token_bytes) + " bytes",
                      record);
    }
    if (space == pos) throw DataError("record " + std::to_string(record) + ": empty token", record);
    vocab.emplace_back(bytes.substr(pos, space - pos));
    pos = space + 1;
    if (bytes.size() - pos < 4 * dim) {
      throw DataError("truncated stream in record " + std::to_string(record), record);
    }
    for (std::size_t c = 0; c < dim; ++c, pos += 4) {
      const auto* p = reinterpret_cast<const unsigned char*>(bytes.data() + pos);
      const std::uint32_t word = std::uint32_t{p[0]} | (std::uint32_t{p[1]} << 8) |
                                 (std::uint32_t{p[2]} << 16) | (std::uint32_t{p[3]} << 24);
      const auto value = std::bit_cast<float>(word);
      if (!std::isfinite(value)) {
        throw DataError("record " + std::to_string(record) + ": non-finite component", record);
      }
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = static_cast<double>(value);
    }
  }
  for (; pos < bytes.size(); ++pos) {
    if (bytes[pos] != '\n') throw DataError("trailing bytes after final record", count + 1);
  }
  return VectorSpace(std::move(vocab), std::move(m));
}

std::string write_embeddings(const VectorSpace& space, Format format) {
  std::string out;
  if (format == Format::binary) {
    out += std::to_string(space.size()) + " " + std::to_string(space.dim()) + "\n";
    out.reserve(out.size() + space.size() * (4 * space.dim() + 16));
    for (std::size_t r = 0; r < space.size(); ++r) {
      out += space.vocab()[r];
      out += ' ';
      for (std::size_t c = 0; c < space.dim(); ++c) {
        const auto value = static_cast<float>(
            space.matrix()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
        const auto word = std::bit_cast<std::uint32_t>(value);
        for (int shift = 0; shift < 32; shift += 8) out += static_cast<char>((word >> shift) & 0xFF);
      }
    }
    return out;
  }
  if (format == Format::text_header) {
    out += std::to_string(space.size()) + " " + std::to_string(space.dim()) + "\n";
  }
  for (std::size_t r = 0; r < space.size(); ++r) {
    out += space.vocab()[r];
    for (std::size_t c = 0; c < space.dim(); ++c) {
      out += ' ';
      append_number(out, space.matrix()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
    }
    out += '\n';
  }
  return out;
}

VectorSpace normalize(const VectorSpace& space) {
  if (space.norm_state() == NormState::unit) return space;
  Matrix m = space.matrix();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    const double n = m.row(r).norm();
    if (n == 0.0) {
      throw DataError("cannot normalize zero vector for token '" +
                          space.vocab()[static_cast<std::size_t>(r)] + "'",
                      static_cast<std::size_t>(r) + 1);
    }
    m.row(r) /= n;
  }
  return VectorSpace(space.vocab(), std::move(m), NormState::unit);
}

std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& ch : out)
    if (ch >= 'A' && ch <= 'Z') ch = static_cast<char>(ch - 'A' + 'a');
  return out;
}

std::optional<ConceptVector> lookup(const VectorSpace& space, std::string_view token,
                                    LookupOptions options) {
  auto row = space.index_of(token);
  if (!row && options.case_fold) {
    const std::string folded = ascii_lower(token);
    for (std::size_t i = 0; i < space.size(); ++i) {
      if (ascii_lower(space.vocab()[i]) == folded) {
        row = i;
        break;
      }
    }
  }
  if (!row) return std::nullopt;
  return ConceptVector{space.row(*row).transpose(),
                       {Provenance::Kind::token, space.vocab()[*row]}};
}

Format detect_format(std::string_view bytes) {
  const std::size_t nl = bytes.find('\n');
  std::size_t count = 0;
  std::size_t dim = 0;
  if (nl == std::string_view::npos || !parse_header(bytes.substr(0, nl), count, dim)) {
    return Format::text_headerless;
  }
  // A text body carries only printable number characters after the first token.
  const std::size_t space = bytes.find(' ', nl + 1);
  if (space == std::string_view::npos) return Format::text_header;
  const std::size_t probe_end = std::min(bytes.size(), space + 1 + 4 * dim);
  for (std::size_t i = space + 1; i < probe_end; ++i) {
    const char ch = bytes[i];
    const bool numeric = (ch >= '0' && ch <= '9') || ch == '.' || ch == '-' || ch == '+' ||
                         ch == 'e' || ch == 'E' || ch == ' ' || ch == '\n' || ch == '\r';
    if (!numeric) return Format::binary;
  }
  return Format::text_header;
}

VectorSpace parse_embeddings(std::string_view bytes, Format format) {
  switch (format) {
    case Format::binary:
      return parse_binary_embeddings(bytes);
    case Format::text_header:
      return parse_text_embeddings(bytes, HeaderPolicy::expect_header);
    case Format::text_headerless:
      return parse_text_embeddings(bytes, HeaderPolicy::headerless);
  }
  throw DataError("unknown format");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return std::move(ss).str();
}

void write_file(const std::string& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write '" + path + "'");
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw DataError("write failed for '" + path + "'");
}

}  // namespace semvec
