#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semvec/embedding_store.hpp"

namespace semvec {

/// Undirected weighted synonym graph with per-node attachment weights.
/// Antonyms are recorded for concept building and never become edges.
struct LexiconGraph {
  std::vector<std::string> nodes;  // first-appearance order
  /// Keyed by (smaller token, larger token) so each undirected edge appears once.
  std::map<std::pair<std::string, std::string>, double> edges;
  std::map<std::string, double> alpha;  // absent means 1
  std::map<std::string, std::vector<std::string>> antonyms;

  void add_edge(const std::string& a, const std::string& b, double weight = 1.0);
  double alpha_of(const std::string& token) const;
};

/// Lines "token<TAB>syn1,syn2,...[<TAB>ant1,ant2,...]". '#' lines and blank lines are skipped.
LexiconGraph parse_lexicon(std::string_view bytes);

enum class EdgeWeighting {
  inverse_degree,  // beta_ij = w_ij / degree(i)
  as_given,        // beta_ij = w_ij
};

struct RetrofitOptions {
  int iterations = 10;
  double tol = 1e-4;
  EdgeWeighting weighting = EdgeWeighting::inverse_degree;
  bool renormalize = true;
};

struct RetrofitResult {
  VectorSpace space;
  std::size_t dropped_nodes = 0;  // graph tokens absent from the space
  int sweeps = 0;
  std::vector<double> movement;  // max row movement per sweep
};

/// Gauss-Seidel sweeps of q_i <- (alpha_i q0_i + sum_j beta_ij q_j) / (alpha_i + sum_j beta_ij)
/// over graph nodes in vocabulary order. Rows without edges are left bit-identical.
RetrofitResult retrofit(const VectorSpace& space, const LexiconGraph& graph,
                        RetrofitOptions options = {});

struct AnalogyProbe {
  std::string a, b, c, d;
};

struct ProbeOutcome {
  AnalogyProbe probe;
  std::size_t rank_before = 0;  // 1-based
  std::size_t rank_after = 0;
};

struct PreservationReport {
  std::vector<ProbeOutcome> probes;
  double mrr_before = 0.0;
  double mrr_after = 0.0;
  std::size_t hits_before = 0;  // answers ranked within k
  std::size_t hits_after = 0;
  std::size_t degraded = 0;
  std::size_t improved = 0;
  std::size_t unchanged = 0;
};

/// Ranks each probe's answer d among all tokens returned by analogy(a, b, c)
/// in both spaces. `k` is the hit cutoff used in the summary.
PreservationReport preservation_report(const VectorSpace& before, const VectorSpace& after,
                                       const std::vector<AnalogyProbe>& probes, std::size_t k);

/// key=value summary lines, a blank line, then a TSV probe table with a header row.
std::string format_report(const PreservationReport& report);

/// Whitespace-separated "a b c d" per line; '#' comments.
std::vector<AnalogyProbe> parse_probes(std::string_view bytes);

}  // namespace semvec
