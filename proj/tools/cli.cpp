#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>

#include "semvec/semvec.hpp"

namespace semvec::cli {

namespace {

using json = nlohmann::ordered_json;

enum class Mode { human, tsv, jsonl };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string embeddings;
  std::string format;  // empty means detect
  bool case_fold = false;
  Mode mode = Mode::human;
  std::uint64_t seed = 7;
};

struct Session {
  std::optional<VectorSpace> space;
  std::optional<Index> index;
  std::string loaded_key;
  std::map<std::string, RelationVector> relations;
  bool in_repl = false;
  Settings repl_settings;
};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

// Scores go to json as the same 6-decimal value the text modes print.
json score_json(double v) { return std::stod(fixed6(v)); }

Format format_from_name(const std::string& name) {
  if (name == "text") return Format::text_header;
  if (name == "glove") return Format::text_headerless;
  if (name == "binary") return Format::binary;
  throw UsageError("unknown format '" + name + "'");
}

VectorSpace load_space(const std::string& path, const std::string& format) {
  const std::string bytes = read_file(path);
  return parse_embeddings(bytes, format.empty() ? detect_format(bytes) : format_from_name(format));
}

class Context {
 public:
  Context(Session& session, const Settings& settings, std::ostream& out)
      : session_(session), settings_(settings), out_(out) {}

  const VectorSpace& space() {
    ensure_loaded();
    return *session_.space;
  }
  const Index& index() {
    ensure_loaded();
    return *session_.index;
  }

  std::string resolve(const std::string& token) {
    if (!settings_.case_fold) return token;
    const auto& idx = index();
    if (const auto row = idx.find(token, true)) return idx.vocab()[*row];
    return token;
  }

  Mode mode() const { return settings_.mode; }
  std::ostream& out() { return out_; }

 private:
  void ensure_loaded() {
    if (settings_.embeddings.empty()) {
      if (session_.space) return;
      throw UsageError("no embeddings loaded: pass -e PATH or set SEMVEC_EMBEDDINGS");
    }
    const std::string key = settings_.format + "\n" + settings_.embeddings;
    if (session_.space && session_.loaded_key == key) return;
    session_.index.reset();
    session_.space = load_space(settings_.embeddings, settings_.format);
    session_.index.emplace(*session_.space);
    session_.loaded_key = key;
  }

  Session& session_;
  const Settings& settings_;
  std::ostream& out_;
};

void print_neighbors(Context& ctx, const std::vector<Neighbor>& items) {
  auto& out = ctx.out();
  switch (ctx.mode()) {
    case Mode::human: {
      std::size_t width = 0;
      for (const auto& n : items) width = std::max(width, n.token.size());
      for (const auto& n : items)
        out << n.token << std::string(width - n.token.size() + 2, ' ') << fixed6(n.score) << '\n';
      break;
    }
    case Mode::tsv:
      out << "rank\ttoken\tscore\n";
      for (std::size_t i = 0; i < items.size(); ++i)
        out << i + 1 << '\t' << items[i].token << '\t' << fixed6(items[i].score) << '\n';
      break;
    case Mode::jsonl:
      for (std::size_t i = 0; i < items.size(); ++i) {
        out << json{{"rank", i + 1}, {"token", items[i].token}, {"score", score_json(items[i].score)}}.dump()
            << '\n';
      }
      break;
  }
}

void print_phrases(Context& ctx, const std::vector<PhraseCandidate>& items) {
  auto& out = ctx.out();
  switch (ctx.mode()) {
    case Mode::human: {
      std::size_t width = 0;
      for (const auto& p : items) width = std::max(width, p.first.size() + p.second.size() + 1);
      for (const auto& p : items) {
        const std::string phrase = p.first + " " + p.second;
        out << phrase << std::string(width - phrase.size() + 2, ' ') << fixed6(p.score) << '\n';
      }
      break;
    }
    case Mode::tsv:
      out << "rank\tfirst\tsecond\tscore\n";
      for (std::size_t i = 0; i < items.size(); ++i)
        out << i + 1 << '\t' << items[i].first << '\t' << items[i].second << '\t' << fixed6(items[i].score)
            << '\n';
      break;
    case Mode::jsonl:
      for (std::size_t i = 0; i < items.size(); ++i) {
        out << json{{"rank", i + 1},
                    {"first", items[i].first},
                    {"second", items[i].second},
                    {"score", score_json(items[i].score)}}
                   .dump()
            << '\n';
      }
      break;
  }
}

struct Field {
  std::string key;
  std::string text;
  json value;
};

Field field(std::string key, const std::string& v) { return {std::move(key), v, v}; }
Field field(std::string key, std::size_t v) { return {std::move(key), std::to_string(v), v}; }
Field field(std::string key, double v) { return {std::move(key), fixed6(v), score_json(v)}; }

void print_record(Context& ctx, const std::vector<Field>& fields) {
  auto& out = ctx.out();
  switch (ctx.mode()) {
    case Mode::human:
      for (std::size_t i = 0; i < fields.size(); ++i)
        out << (i ? " " : "") << fields[i].key << '=' << fields[i].text;
      out << '\n';
      break;
    case Mode::tsv:
      for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "\t" : "") << fields[i].key;
      out << '\n';
      for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "\t" : "") << fields[i].text;
      out << '\n';
      break;
    case Mode::jsonl: {
      json obj = json::object();
      for (const auto& f : fields) obj[f.key] = f.value;
      out << obj.dump() << '\n';
      break;
    }
  }
}

// "token" or "token:weight"; unweighted terms share 1/|terms|.
WeightedTermSet parse_terms(Context& ctx, const std::vector<std::string>& raw) {
  WeightedTermSet out;
  for (const auto& term : raw) {
    WeightedTerm t{term, 1.0 / static_cast<double>(raw.size())};
    if (const auto colon = term.rfind(':'); colon != std::string::npos && colon > 0) {
      const std::string w = term.substr(colon + 1);
      char* end = nullptr;
      const double value = std::strtod(w.c_str(), &end);
      if (w.empty() || *end != '\0') throw UsageError("bad weight in term '" + term + "'");
      t = {term.substr(0, colon), value};
    }
    t.token = ctx.resolve(t.token);
    out.push_back(std::move(t));
  }
  return out;
}

std::string read_input(const std::string& path, std::istream& in) {
  if (!path.empty()) return read_file(path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

RelationVector find_relation(const Session& session, const std::string& ref) {
  if (const auto it = session.relations.find(ref); it != session.relations.end()) return it->second;
  if (std::filesystem::is_regular_file(ref)) return parse_relation(read_file(ref));
  throw DataError("unknown relation '" + ref + "' (not learned in this session and no such file)");
}

int execute(Session& session, const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err, const Settings& base, bool top_level);

int repl(Session& session, const Settings& settings, std::istream& in, std::ostream& out, std::ostream& err) {
  if (session.in_repl) throw UsageError("repl cannot be started from inside a repl");
  session.in_repl = true;
  session.repl_settings = settings;
  if (!settings.embeddings.empty()) {
    Context ctx(session, session.repl_settings, out);
    ctx.index();
  }
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto args = split_command_line(line);
    if (args.empty() || args.front().starts_with('#')) continue;
    if (args.front() == "quit" || args.front() == "exit") break;
    execute(session, args, in, out, err, session.repl_settings, false);
    out.flush();
  }
  session.in_repl = false;
  return kExitOk;
}

int execute(Session& session, const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err, const Settings& base, bool top_level) {
  Settings s = base;
  std::string mode_name = s.mode == Mode::human ? "human" : s.mode == Mode::tsv ? "tsv" : "jsonl";

  CLI::App app{"Vector-space semantics toolkit: embeddings, analogies, relations, retrofitting, hypervectors",
               "semvec"};
  app.fallthrough();
  app.require_subcommand(1);
  auto* opt_emb = app.add_option("-e,--embeddings", s.embeddings, "embeddings file");
  if (top_level) opt_emb->envname("SEMVEC_EMBEDDINGS");
  bool as_text = false, as_glove = false, as_binary = false;
  auto* f_text = app.add_flag("--text", as_text, "embeddings are word2vec text");
  auto* f_glove = app.add_flag("--glove", as_glove, "embeddings are headerless (GloVe) text");
  auto* f_binary = app.add_flag("--binary", as_binary, "embeddings are word2vec binary");
  f_text->excludes(f_glove)->excludes(f_binary);
  f_glove->excludes(f_binary);
  app.add_flag("--case-fold", s.case_fold, "match query tokens case-insensitively");
  app.add_option("--output-mode", mode_name, "human, tsv or jsonl")
      ->check(CLI::IsMember({"human", "tsv", "jsonl"}));
  auto* opt_seed = app.add_option("--seed", s.seed, "random seed (default 7)");

  std::size_t k = 10;
  const auto add_k = [&k](CLI::App* sub) {
    sub->add_option("-k", k, "number of results")->check(CLI::PositiveNumber);
  };

  // train
  auto* train_cmd = app.add_subcommand("train", "Build embeddings from a corpus file or directory of .txt files");
  std::string corpus_path, train_out, train_format = "text", config_path, weighting_name;
  int window = 0, min_count = 0, dim = 0;
  double svd_tol = 0.0;
  train_cmd->add_option("corpus", corpus_path, "corpus file (blank-line separated documents) or directory")
      ->required();
  train_cmd->add_option("-o,--out", train_out, "output path (stdout when omitted)");
  train_cmd->add_option("--format", train_format, "text, glove or binary")
      ->check(CLI::IsMember({"text", "glove", "binary"}));
  train_cmd->add_option("--config", config_path, "key = value file with TrainConfig fields");
  auto* o_window = train_cmd->add_option("--window", window);
  auto* o_min_count = train_cmd->add_option("--min-count", min_count);
  auto* o_dim = train_cmd->add_option("--dim", dim);
  auto* o_weighting = train_cmd->add_option("--weighting", weighting_name, "raw, log1p or ppmi");
  auto* o_svd_tol = train_cmd->add_option("--svd-tol", svd_tol);

  // analogy
  auto* analogy_cmd = app.add_subcommand("analogy", "Solve a:b::c:? as the nearest token to b + c - a");
  std::string ta, tb, tc;
  std::vector<std::string> abc;
  bool no_exclude = false;
  analogy_cmd->add_option("--a", ta, "first term of the source pair");
  analogy_cmd->add_option("--b", tb, "second term of the source pair");
  analogy_cmd->add_option("--c", tc, "first term of the target pair");
  analogy_cmd->add_option("terms", abc, "a b c (alternative to the flags)");
  analogy_cmd->add_flag("--no-exclude", no_exclude, "allow a, b and c in the results");
  add_k(analogy_cmd);

  // assoc
  auto* assoc_cmd = app.add_subcommand("assoc", "Tokens nearest to a weighted sum of cues");
  std::vector<std::string> cues;
  assoc_cmd->add_option("terms", cues, "token or token:weight")->required();
  add_k(assoc_cmd);

  // concept
  auto* concept_cmd = app.add_subcommand("concept", "Compose a concept from positive and negative terms");
  std::vector<std::string> positives, negatives;
  concept_cmd->add_option("--pos", positives, "token[:weight], comma separated")->delimiter(',')->required();
  concept_cmd->add_option("--neg", negatives, "token[:weight], comma separated")->delimiter(',');
  add_k(concept_cmd);

  // neighbors
  auto* neighbors_cmd = app.add_subcommand("neighbors", "Nearest tokens to a token");
  std::string neighbor_token;
  neighbors_cmd->add_option("token", neighbor_token)->required();
  add_k(neighbors_cmd);

  // relation-learn
  auto* learn_cmd = app.add_subcommand("relation-learn", "Learn a displacement relation from example pairs");
  std::string relation_name, relation_out;
  std::vector<std::string> pair_tokens;
  learn_cmd->add_option("name", relation_name)->required();
  learn_cmd->add_option("pairs", pair_tokens, "source target [source target ...]")->required();
  learn_cmd->add_option("-o,--out", relation_out, "relation file to write");

  // relation-apply
  auto* apply_cmd = app.add_subcommand("relation-apply", "Apply a relation to a source token");
  std::string relation_ref, source_token;
  apply_cmd->add_option("relation", relation_ref, "relation name from this session, or relation file")
      ->required();
  apply_cmd->add_option("source", source_token)->required();
  add_k(apply_cmd);

  // relation-chain
  auto* chain_cmd = app.add_subcommand("relation-chain", "Compose relations and optionally apply the chain");
  std::vector<std::string> chain_refs;
  std::string chain_source, chain_name, chain_out;
  chain_cmd->add_option("relations", chain_refs, "relation names or files, in order")->required();
  chain_cmd->add_option("--source", chain_source, "token to apply the composed relation to");
  chain_cmd->add_option("--name", chain_name, "store the composed relation under this name");
  chain_cmd->add_option("-o,--out", chain_out, "relation file to write");
  add_k(chain_cmd);

  // retrofit
  auto* retrofit_cmd = app.add_subcommand("retrofit", "Pull embeddings toward a synonym lexicon");
  std::string lexicon_path, retrofit_out, retrofit_format = "text", edge_weighting = "inverse_degree";
  RetrofitOptions retrofit_options;
  bool no_renormalize = false;
  retrofit_cmd->add_option("--lexicon", lexicon_path, "token<TAB>synonyms[<TAB>antonyms] file")->required();
  retrofit_cmd->add_option("-o,--out", retrofit_out, "output embeddings")->required();
  retrofit_cmd->add_option("--format", retrofit_format, "text, glove or binary")
      ->check(CLI::IsMember({"text", "glove", "binary"}));
  retrofit_cmd->add_option("--iterations", retrofit_options.iterations)->check(CLI::PositiveNumber);
  retrofit_cmd->add_option("--tol", retrofit_options.tol);
  retrofit_cmd->add_option("--weighting", edge_weighting, "inverse_degree or as_given")
      ->check(CLI::IsMember({"inverse_degree", "as_given"}));
  retrofit_cmd->add_flag("--no-renormalize", no_renormalize, "leave updated rows unnormalized");

  // report
  auto* report_cmd = app.add_subcommand("report", "Compare analogy probe ranks between two spaces");
  std::string after_path, probes_path;
  std::size_t hit_k = 1;
  report_cmd->add_option("--after", after_path, "space to compare against the loaded one")->required();
  report_cmd->add_option("--probes", probes_path, "'a b c d' per line (default: fixture probes)");
  report_cmd->add_option("-k", hit_k, "hit cutoff")->check(CLI::PositiveNumber);

  // paraphrase-allit
  auto* allit_cmd = app.add_subcommand("paraphrase-allit", "Alliterative adjective-noun paraphrases");
  std::string target, adjectives_path, nouns_path, letter;
  allit_cmd->add_option("--target", target)->required();
  allit_cmd->add_option("--adjectives", adjectives_path, "word list")->required();
  allit_cmd->add_option("--nouns", nouns_path, "word list")->required();
  allit_cmd->add_option("--letter", letter)->required();
  add_k(allit_cmd);

  // paraphrase-rhyme
  auto* rhyme_cmd = app.add_subcommand("paraphrase-rhyme", "Rhyming word-pair paraphrases");
  std::string words_path, dict_path;
  rhyme_cmd->add_option("--target", target)->required();
  rhyme_cmd->add_option("--words", words_path, "word list")->required();
  rhyme_cmd->add_option("--dict", dict_path, "pronouncing dictionary")->required();
  add_k(rhyme_cmd);

  // hyperstats
  auto* hyper_cmd = app.add_subcommand("hyperstats", "Hamming distance statistics of random hypervectors");
  std::size_t hyper_n = 10000, hyper_samples = 1000;
  hyper_cmd->add_option("-n", hyper_n, "dimension")->check(CLI::PositiveNumber);
  hyper_cmd->add_option("--samples", hyper_samples, "random pairs");

  // convert
  auto* convert_cmd = app.add_subcommand("convert", "Convert between embedding formats");
  std::string in_format = "auto", out_format = "text", input_path, output_path;
  convert_cmd->add_option("--in", in_format, "auto, text, glove or binary")
      ->check(CLI::IsMember({"auto", "text", "glove", "binary"}));
  convert_cmd->add_option("--out", out_format, "text, glove or binary")
      ->check(CLI::IsMember({"text", "glove", "binary"}));
  convert_cmd->add_option("--input", input_path, "input file (stdin when omitted)");
  convert_cmd->add_option("--output", output_path, "output file (stdout when omitted)");

  auto* repl_cmd = app.add_subcommand("repl", "Read subcommands line by line; 'quit' exits");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    s.mode = mode_name == "tsv" ? Mode::tsv : mode_name == "jsonl" ? Mode::jsonl : Mode::human;
    if (as_text) s.format = "text";
    if (as_glove) s.format = "glove";
    if (as_binary) s.format = "binary";
    Context ctx(session, s, out);

    if (repl_cmd->parsed()) return repl(session, s, in, out, err);

    if (train_cmd->parsed()) {
      TrainConfig config;
      config.seed = s.seed;
      if (!config_path.empty()) config = parse_train_config(read_file(config_path), config);
      if (*opt_seed) config.seed = s.seed;
      if (*o_window) config.window = window;
      if (*o_min_count) config.min_count = min_count;
      if (*o_dim) config.dim = dim;
      if (*o_weighting) config.weighting = parse_weighting(weighting_name);
      if (*o_svd_tol) config.svd_tol = svd_tol;
      const VectorSpace trained = train(tokenize_corpus(load_corpus(corpus_path)), config);
      const std::string bytes = write_embeddings(trained, format_from_name(train_format));
      if (train_out.empty()) {
        out << bytes;
      } else {
        write_file(train_out, bytes);
        print_record(ctx, {field("vocab", trained.size()), field("dim", trained.dim()),
                           field("weighting", to_string(config.weighting)), field("out", train_out)});
      }
    } else if (analogy_cmd->parsed()) {
      if (ta.empty() && tb.empty() && tc.empty() && abc.size() == 3) {
        ta = abc[0];
        tb = abc[1];
        tc = abc[2];
      }
      if (ta.empty() || tb.empty() || tc.empty() || (!abc.empty() && abc.size() != 3)) {
        throw UsageError("analogy needs --a, --b and --c (or three positional tokens)");
      }
      print_neighbors(ctx, analogy(ctx.index(), ctx.resolve(ta), ctx.resolve(tb), ctx.resolve(tc), k,
                                   no_exclude ? ExclusionPolicy::none : ExclusionPolicy::exclude_inputs));
    } else if (assoc_cmd->parsed()) {
      print_neighbors(ctx, associate(ctx.index(), parse_terms(ctx, cues), k));
    } else if (concept_cmd->parsed()) {
      const auto pos = parse_terms(ctx, positives);
      const auto neg = parse_terms(ctx, negatives);
      const ConceptVector c = build_concept(ctx.space(), pos, neg);
      TokenSet exclude;
      for (const auto& t : pos) exclude.insert(t.token);
      for (const auto& t : neg) exclude.insert(t.token);
      print_neighbors(ctx, ctx.index().nearest(c, k, exclude));
    } else if (neighbors_cmd->parsed()) {
      const std::string token = ctx.resolve(neighbor_token);
      print_neighbors(ctx, ctx.index().nearest(ctx.index().unit_vector(token), k, {token}));
    } else if (learn_cmd->parsed()) {
      if (pair_tokens.size() % 2 != 0) throw UsageError("relation-learn needs source/target tokens in pairs");
      std::vector<TokenPair> pairs;
      for (std::size_t i = 0; i < pair_tokens.size(); i += 2)
        pairs.emplace_back(ctx.resolve(pair_tokens[i]), ctx.resolve(pair_tokens[i + 1]));
      RelationVector relation = learn_relation(ctx.space(), pairs, relation_name);
      session.relations[relation_name] = relation;
      if (!relation_out.empty()) write_file(relation_out, write_relation(relation));
      if (relation_out.empty() && !session.in_repl) {
        out << write_relation(relation);
      } else {
        print_record(ctx, {field("relation", relation_name), field("pairs", pairs.size()),
                           field("norm", relation.displacement.norm())});
      }
    } else if (apply_cmd->parsed()) {
      const RelationVector relation = find_relation(session, relation_ref);
      print_neighbors(ctx, apply_relation(ctx.index(), relation, ctx.resolve(source_token), k));
    } else if (chain_cmd->parsed()) {
      if (chain_source.empty() && chain_name.empty() && chain_out.empty()) {
        throw UsageError("relation-chain needs --source, --name or --out");
      }
      RelationVector chain = find_relation(session, chain_refs.front());
      for (std::size_t i = 1; i < chain_refs.size(); ++i)
        chain = compose_relations(chain, find_relation(session, chain_refs[i]));
      if (!chain_name.empty()) {
        chain.name = chain_name;
        session.relations[chain_name] = chain;
      }
      if (!chain_out.empty()) write_file(chain_out, write_relation(chain));
      if (!chain_source.empty()) {
        print_neighbors(ctx, apply_relation(ctx.index(), chain, ctx.resolve(chain_source), k));
      } else {
        print_record(ctx, {field("relation", chain.name), field("pairs", chain.support.size()),
                           field("norm", chain.displacement.norm())});
      }
    } else if (retrofit_cmd->parsed()) {
      retrofit_options.weighting =
          edge_weighting == "as_given" ? EdgeWeighting::as_given : EdgeWeighting::inverse_degree;
      retrofit_options.renormalize = !no_renormalize;
      const LexiconGraph graph = parse_lexicon(read_file(lexicon_path));
      const RetrofitResult result = retrofit(normalize(ctx.space()), graph, retrofit_options);
      write_file(retrofit_out, write_embeddings(result.space, format_from_name(retrofit_format)));
      print_record(ctx, {field("nodes", graph.nodes.size()), field("edges", graph.edges.size()),
                         field("dropped_nodes", result.dropped_nodes),
                         field("sweeps", static_cast<std::size_t>(result.sweeps)),
                         field("final_movement", result.movement.empty() ? 0.0 : result.movement.back()),
                         field("out", retrofit_out)});
    } else if (report_cmd->parsed()) {
      const VectorSpace after = load_space(after_path, s.format);
      const auto probes =
          probes_path.empty() ? compositional_fixture_probes() : parse_probes(read_file(probes_path));
      const PreservationReport report = preservation_report(ctx.space(), after, probes, hit_k);
      if (s.mode == Mode::jsonl) {
        out << json{{"probes", report.probes.size()},
                    {"mrr_before", score_json(report.mrr_before)},
                    {"mrr_after", score_json(report.mrr_after)},
                    {"hits_before", report.hits_before},
                    {"hits_after", report.hits_after},
                    {"degraded", report.degraded},
                    {"improved", report.improved},
                    {"unchanged", report.unchanged}}
                   .dump()
            << '\n';
        for (const auto& p : report.probes) {
          out << json{{"a", p.probe.a},
                      {"b", p.probe.b},
                      {"c", p.probe.c},
                      {"d", p.probe.d},
                      {"rank_before", p.rank_before},
                      {"rank_after", p.rank_after}}
                     .dump()
              << '\n';
        }
      } else {
        out << format_report(report);
      }
    } else if (allit_cmd->parsed()) {
      if (letter.size() != 1) throw UsageError("--letter takes a single character");
      print_phrases(ctx, generate_alliterative(ctx.index(), ctx.resolve(target),
                                               parse_word_list(read_file(adjectives_path)),
                                               parse_word_list(read_file(nouns_path)), letter[0], k));
    } else if (rhyme_cmd->parsed()) {
      print_phrases(ctx, generate_rhyming(ctx.index(), ctx.resolve(target), parse_word_list(read_file(words_path)),
                                          parse_pronunciations(read_file(dict_path)), k));
    } else if (hyper_cmd->parsed()) {
      std::mt19937_64 rng(s.seed);
      const DistanceStats stats = distance_distribution_stats(hyper_n, hyper_samples, rng);
      print_record(ctx, {field("n", hyper_n), field("samples", hyper_samples),
                         field("seed", static_cast<std::size_t>(s.seed)), field("mean", stats.mean),
                         field("stddev", stats.stddev)});
    } else if (convert_cmd->parsed()) {
      const std::string bytes = read_input(input_path, in);
      const Format from = in_format == "auto" ? detect_format(bytes) : format_from_name(in_format);
      const std::string converted = write_embeddings(parse_embeddings(bytes, from), format_from_name(out_format));
      if (output_path.empty()) {
        out.write(converted.data(), static_cast<std::streamsize>(converted.size()));
      } else {
        write_file(output_path, converted);
      }
    }
  } catch (const UsageError& e) {
    err << "semvec: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DataError& e) {
    err << "semvec: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    err << "semvec: " << e.what() << '\n';
    return kExitData;
  }
  return kExitOk;
}

}  // namespace

std::vector<std::string> split_command_line(const std::string& line) {
  std::vector<std::string> out;
  std::string current;
  bool quoted = false;
  bool have = false;
  for (const char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
      have = true;
    } else if (!quoted && (ch == ' ' || ch == '\t')) {
      if (have) out.push_back(std::move(current));
      current.clear();
      have = false;
    } else {
      current += ch;
      have = true;
    }
  }
  if (have) out.push_back(std::move(current));
  return out;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Session session;
  return execute(session, args, in, out, err, Settings{}, true);
}

}  // namespace semvec::cli
