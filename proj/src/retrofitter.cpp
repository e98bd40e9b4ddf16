#include "semvec/retrofitter.hpp"

#include <cstdio>
#include <set>

#include "semvec/concept_algebra.hpp"
#include "semvec/similarity_index.hpp"

namespace semvec {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = s.find(sep, pos);
    out.push_back(s.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::vector<std::string_view> lines_of(std::string_view bytes) {
  auto lines = split(bytes, '\n');
  if (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

void LexiconGraph::add_edge(const std::string& a, const std::string& b, double weight) {
  if (a == b) return;
  auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  edges.emplace(std::move(key), weight);
}

double LexiconGraph::alpha_of(const std::string& token) const {
  const auto it = alpha.find(token);
  return it == alpha.end() ? 1.0 : it->second;
}

LexiconGraph parse_lexicon(std::string_view bytes) {
  LexiconGraph graph;
  std::set<std::string> seen;
  const auto note = [&](const std::string& t) {
    if (seen.insert(t).second) graph.nodes.push_back(t);
  };
  const auto lines = lines_of(bytes);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    const std::string_view line = trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() < 2 || fields.size() > 3) {
      throw DataError("lexicon line " + std::to_string(line_no) +
                          ": expected token<TAB>synonyms[<TAB>antonyms]",
                      line_no);
    }
    const std::string head(trim(fields[0]));
    if (head.empty() || head.find(' ') != std::string::npos) {
      throw DataError("lexicon line " + std::to_string(line_no) + ": invalid head token", line_no);
    }
    note(head);
    for (auto syn : split(fields[1], ',')) {
      const std::string token(trim(syn));
      if (token.empty() || token == head) continue;
      note(token);
      graph.add_edge(head, token);
    }
    if (fields.size() == 3) {
      for (auto ant : split(fields[2], ',')) {
        const std::string token(trim(ant));
        if (token.empty() || token == head) continue;
        auto& list = graph.antonyms[head];
        if (std::find(list.begin(), list.end(), token) == list.end()) list.push_back(token);
      }
    }
  }
  return graph;
}

RetrofitResult retrofit(const VectorSpace& space, const LexiconGraph& graph, RetrofitOptions options) {
  if (options.iterations < 1) throw DataError("retrofit: iterations must be at least 1");
  if (space.norm_state() != NormState::unit) throw DataError("retrofit: space must be normalized");

  RetrofitResult result;
  for (const auto& node : graph.nodes)
    if (!space.index_of(node)) ++result.dropped_nodes;

  const std::size_t v = space.size();
  std::vector<std::vector<std::pair<std::size_t, double>>> neighbors(v);
  for (const auto& [key, weight] : graph.edges) {
    const auto i = space.index_of(key.first);
    const auto j = space.index_of(key.second);
    if (!i || !j) continue;
    neighbors[*i].emplace_back(*j, weight);
    neighbors[*j].emplace_back(*i, weight);
  }
  std::vector<std::size_t> active;
  std::vector<double> alpha(v, 1.0);
  for (std::size_t i = 0; i < v; ++i) {
    if (neighbors[i].empty()) continue;
    active.push_back(i);
    alpha[i] = graph.alpha_of(space.vocab()[i]);
    if (options.weighting == EdgeWeighting::inverse_degree) {
      const double degree = static_cast<double>(neighbors[i].size());
      for (auto& nb : neighbors[i]) nb.second /= degree;
    }
  }

  const Matrix& original = space.matrix();
  Matrix q = original;
  for (int sweep = 0; sweep < options.iterations; ++sweep) {
    double moved = 0.0;
    for (const std::size_t i : active) {
      const auto ii = static_cast<Eigen::Index>(i);
      Eigen::RowVectorXd next = alpha[i] * original.row(ii);
      double denom = alpha[i];
      for (const auto& [j, beta] : neighbors[i]) {
        next += beta * q.row(static_cast<Eigen::Index>(j));
        denom += beta;
      }
      next /= denom;
      moved = std::max(moved, (next - q.row(ii)).norm());
      q.row(ii) = next;
    }
    result.movement.push_back(moved);
    result.sweeps = sweep + 1;
    if (moved < options.tol) break;
  }

  NormState state = NormState::raw;
  if (options.renormalize) {
    for (const std::size_t i : active) {
      const auto ii = static_cast<Eigen::Index>(i);
      const double n = q.row(ii).norm();
      if (n == 0.0) throw DataError("retrofit produced a zero vector for '" + space.vocab()[i] + "'");
      q.row(ii) /= n;
    }
    state = NormState::unit;
  }
  result.space = VectorSpace(space.vocab(), std::move(q), state);
  return result;
}

PreservationReport preservation_report(const VectorSpace& before, const VectorSpace& after,
                                       const std::vector<AnalogyProbe>& probes, std::size_t k) {
  const Index index_before(before);
  const Index index_after(after);
  const auto rank_of = [](const Index& index, const AnalogyProbe& p) {
    for (const auto& t : {p.a, p.b, p.c, p.d}) index.require(t);
    const auto ranked = analogy(index, p.a, p.b, p.c, index.size());
    for (std::size_t r = 0; r < ranked.size(); ++r)
      if (ranked[r].token == p.d) return r + 1;
    throw DataError("probe answer '" + p.d + "' is one of its own inputs");
  };

  PreservationReport report;
  for (const auto& probe : probes) {
    ProbeOutcome outcome{probe, rank_of(index_before, probe), rank_of(index_after, probe)};
    report.mrr_before += 1.0 / static_cast<double>(outcome.rank_before);
    report.mrr_after += 1.0 / static_cast<double>(outcome.rank_after);
    report.hits_before += outcome.rank_before <= k ? 1 : 0;
    report.hits_after += outcome.rank_after <= k ? 1 : 0;
    if (outcome.rank_after > outcome.rank_before) {
      ++report.degraded;
    } else if (outcome.rank_after < outcome.rank_before) {
      ++report.improved;
    } else {
      ++report.unchanged;
    }
    report.probes.push_back(std::move(outcome));
  }
  if (!probes.empty()) {
    report.mrr_before /= static_cast<double>(probes.size());
    report.mrr_after /= static_cast<double>(probes.size());
  }
  return report;
}

std::string format_report(const PreservationReport& report) {
  std::string out;
  out += "probes=" + std::to_string(report.probes.size()) + "\n";
  out += "mrr_before=" + fixed6(report.mrr_before) + "\n";
  out += "mrr_after=" + fixed6(report.mrr_after) + "\n";
  out += "hits_before=" + std::to_string(report.hits_before) + "\n";
  out += "hits_after=" + std::to_string(report.hits_after) + "\n";
  out += "degraded=" + std::to_string(report.degraded) + "\n";
  out += "improved=" + std::to_string(report.improved) + "\n";
  out += "unchanged=" + std::to_string(report.unchanged) + "\n";
  out += "\na\tb\tc\td\trank_before\trank_after\n";
  for (const auto& p : report.probes) {
    out += p.probe.a + "\t" + p.probe.b + "\t" + p.probe.c + "\t" + p.probe.d + "\t" +
           std::to_string(p.rank_before) + "\t" + std::to_string(p.rank_after) + "\n";
  }
  return out;
}

std::vector<AnalogyProbe> parse_probes(std::string_view bytes) {
  std::vector<AnalogyProbe> out;
  const auto lines = lines_of(bytes);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::vector<std::string> fields;
    for (auto tab_field : split(lines[i], '\t'))
      for (auto f : split(tab_field, ' '))
        if (!trim(f).empty()) fields.emplace_back(trim(f));
    if (fields.empty() || fields[0].front() == '#') continue;
    if (fields.size() != 4) {
      throw DataError("probe line " + std::to_string(i + 1) + ": expected 'a b c d'", i + 1);
    }
    out.push_back({fields[0], fields[1], fields[2], fields[3]});
  }
  return out;
}

}  // namespace semvec
