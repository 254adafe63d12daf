#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "config.hpp"
#include "opinion/bloom_filter.hpp"
#include "opinion/cooccurrence.hpp"
#include "opinion/document.hpp"
#include "opinion/emotion_scorer.hpp"
#include "opinion/errors.hpp"
#include "opinion/eval.hpp"
#include "opinion/frontier.hpp"
#include "opinion/hmm.hpp"
#include "opinion/lexicon.hpp"
#include "opinion/naive_bayes.hpp"
#include "opinion/new_words.hpp"
#include "opinion/segmenter.hpp"
#include "opinion/so_pmi.hpp"
#include "opinion/textprep.hpp"
#include "opinion/timeutil.hpp"
#include "opinion/trends.hpp"
#include "opinion/utf8.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using opinion::cli::Config;
using opinion::cli::ConfigError;

namespace {

struct MissingArtifact : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Output of an earlier pipeline stage, expected under --out.
fs::path artifact_path(const fs::path& out, const char* name) {
  fs::path p = out / name;
  if (!fs::exists(p)) {
    throw MissingArtifact(p.string() + " not found; run the producing stage first");
  }
  return p;
}

// Input referenced by the config file; must exist for the config to be valid.
fs::path fixture_path(const Config& cfg, const std::string& key) {
  const fs::path p = cfg.resolve_path(cfg.require_string(key));
  if (!fs::exists(p)) throw ConfigError(key + " points to missing file " + p.string());
  return p;
}

std::vector<fs::path> fixture_paths(const Config& cfg, const std::string& key) {
  std::vector<fs::path> out;
  for (const auto& value : cfg.require_string_array(key)) {
    fs::path p = cfg.resolve_path(value);
    if (!fs::exists(p)) throw ConfigError(key + " points to missing file " + p.string());
    out.push_back(std::move(p));
  }
  return out;
}

struct TokenRecord {
  std::string id;
  std::string fetched_at;
  std::vector<std::string> tokens;
};

std::vector<TokenRecord> read_tokens_jsonl(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw opinion::IoError("cannot open " + path.string());
  std::vector<TokenRecord> records;
  std::string line;
  size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw opinion::ParseError(path.string(), line_no, "invalid JSON record");
    }
    TokenRecord rec;
    try {
      rec.id = j.at("id").get<std::string>();
      rec.fetched_at = j.value("fetched_at", "");
      for (const auto& t : j.at("tokens")) rec.tokens.push_back(t.get<std::string>());
    } catch (const json::exception& e) {
      throw opinion::ParseError(path.string(), line_no, e.what());
    }
    records.push_back(std::move(rec));
  }
  return records;
}

void write_tokens_jsonl(const fs::path& path, const std::vector<TokenRecord>& records) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw opinion::IoError("cannot open " + path.string() + " for writing");
  for (const auto& rec : records) {
    json j;
    j["id"] = rec.id;
    j["fetched_at"] = rec.fetched_at;
    j["tokens"] = rec.tokens;
    out << j.dump() << '\n';
  }
  if (!out) throw opinion::IoError("write failed: " + path.string());
}

// The scoring lexicon: the SO-PMI-expanded artifact when that stage has
// run, the merged base dictionaries otherwise.
opinion::Lexicon load_scoring_lexicon(const Config& cfg, const fs::path& out) {
  const fs::path expanded = out / "lexicon_expanded.tsv";
  if (fs::exists(expanded)) return opinion::Lexicon::load_merge({expanded});
  return opinion::Lexicon::load_merge(fixture_paths(cfg, "paths.lexicons"));
}

opinion::ScorerConfig scorer_config(const Config& cfg) {
  opinion::ScorerConfig sc;
  sc.fallback_enabled = cfg.get_bool_or("scorer.fallback", true);
  sc.carry_weight = cfg.get_bool_or("scorer.carry_weight", false);
  const auto parse_emotion = [&](const std::string& key, opinion::Emotion fallback) {
    const auto name = cfg.get_string(key);
    if (!name) return fallback;
    const auto e = opinion::emotion_from_name(*name);
    if (!e) throw ConfigError(key + ": unknown emotion " + *name);
    return *e;
  };
  sc.fallback_positive = parse_emotion("scorer.fallback_positive", opinion::Emotion::Hopeful);
  sc.fallback_negative = parse_emotion("scorer.fallback_negative", opinion::Emotion::Depressed);
  return sc;
}

uint64_t config_u64(const Config& cfg, const std::string& key, uint64_t fallback) {
  const double v = cfg.get_number_or(key, static_cast<double>(fallback));
  if (v < 0 || v != static_cast<double>(static_cast<uint64_t>(v))) {
    throw ConfigError(key + " must be a non-negative integer");
  }
  return static_cast<uint64_t>(v);
}

void cmd_ingest(const Config& cfg, const fs::path& out, std::optional<uint64_t> seed) {
  const fs::path input = fixture_path(cfg, "paths.comments");
  const std::vector<opinion::Document> raw_docs = opinion::read_documents_jsonl(input);

  const uint64_t bits = config_u64(cfg, "bloom.bits", 1u << 20);
  const uint64_t hashes = config_u64(cfg, "bloom.hashes", 7);
  const uint64_t bloom_seed = seed ? *seed : config_u64(cfg, "bloom.seed", 42);
  if (bits < 8 || hashes < 1 || hashes > 16) {
    throw ConfigError("bloom parameters out of range (bits >= 8, 1 <= hashes <= 16)");
  }

  const fs::path snapshot = out / "bloom.snapshot";
  opinion::BloomFilter filter =
      fs::exists(snapshot)
          ? opinion::BloomFilter::load_file(snapshot)
          : opinion::BloomFilter(bits, static_cast<uint32_t>(hashes), bloom_seed);
  opinion::Frontier frontier(std::move(filter), out / "intake.jsonl");

  std::vector<opinion::Document> accepted;
  for (const auto& doc : raw_docs) {
    opinion::FrontierItem item;
    item.key = doc.id;
    item.payload_path = doc.source;
    item.enqueued_at = doc.fetched_at;
    if (frontier.offer(item) != opinion::OfferResult::Accepted) continue;
    opinion::Document clean = doc;
    const auto type = doc.content_type == "html" ? opinion::ContentType::Html
                                                 : opinion::ContentType::Plain;
    clean.clean_text = opinion::extract_text(doc.raw, type);
    accepted.push_back(std::move(clean));
  }
  opinion::write_documents_jsonl(out / "documents.jsonl", accepted);
  frontier.filter().save_file(snapshot);

  json summary = {{"accepted", frontier.accepted()}, {"duplicates", frontier.duplicates()}};
  std::cout << summary.dump() << '\n';
}

void cmd_train_hmm(const Config& cfg, const fs::path& out) {
  const auto corpus = opinion::read_segmented_corpus(fixture_path(cfg, "paths.hmm_corpus"));
  const opinion::HmmModel model = opinion::hmm_train(corpus);
  model.save(out / "hmm_model.json");
  json summary = {{"sentences", corpus.size()}, {"vocab_chars", model.emission.size()}};
  std::cout << summary.dump() << '\n';
}

void cmd_segment(const Config& cfg, const fs::path& out) {
  const auto docs = opinion::read_documents_jsonl(artifact_path(out, "documents.jsonl"));
  const auto model = opinion::HmmModel::load(artifact_path(out, "hmm_model.json"));
  const auto stops = opinion::StopwordList::load(fixture_path(cfg, "paths.stopwords"));

  std::vector<TokenRecord> records;
  records.reserve(docs.size());
  uint64_t n_tokens = 0;
  for (const auto& doc : docs) {
    TokenRecord rec;
    rec.id = doc.id;
    rec.fetched_at = doc.fetched_at;
    rec.tokens = opinion::segment_pipeline(doc, model, stops);
    n_tokens += rec.tokens.size();
    records.push_back(std::move(rec));
  }
  write_tokens_jsonl(out / "tokens.jsonl", records);
  json summary = {{"documents", records.size()}, {"tokens", n_tokens}};
  std::cout << summary.dump() << '\n';
}

bool word_chars_only(const std::string& token) {
  const auto cps = opinion::utf8_codepoints(token);
  if (cps.empty()) return false;
  for (const char32_t cp : cps) {
    if (!opinion::is_word_char(cp)) return false;
  }
  return true;
}

void cmd_expand_lexicon(const Config& cfg, const fs::path& out) {
  const auto records = read_tokens_jsonl(artifact_path(out, "tokens.jsonl"));
  const auto lex = opinion::Lexicon::load_merge(fixture_paths(cfg, "paths.lexicons"));
  const auto fw = opinion::FunctionWordTables::load(fixture_path(cfg, "paths.function_words"));

  std::vector<std::vector<std::string>> sentences;
  sentences.reserve(records.size());
  std::set<std::string> candidates;
  for (const auto& rec : records) {
    for (const auto& token : rec.tokens) {
      // Negations and degree adverbs are scoring structure; giving one an
      // orientation would shadow its modifier role in the traversal.
      if (!word_chars_only(token) || lex.contains(token)) continue;
      if (fw.is_negation(token) || fw.degree_multiplier(token)) continue;
      candidates.insert(token);
    }
    sentences.push_back(rec.tokens);
  }

  const int window = static_cast<int>(config_u64(cfg, "so_pmi.window", 5));
  const auto stats = opinion::build_cooccurrence(sentences, window);
  std::set<std::string> pos_seeds;
  std::set<std::string> neg_seeds;
  for (auto& s : cfg.require_string_array("so_pmi.pos_seeds")) pos_seeds.insert(s);
  for (auto& s : cfg.require_string_array("so_pmi.neg_seeds")) neg_seeds.insert(s);
  if (pos_seeds.empty() || neg_seeds.empty()) {
    throw ConfigError("so_pmi seed lists must be non-empty");
  }
  const double threshold = cfg.get_number_or("so_pmi.threshold", 1.0);
  if (!(threshold > 0.0)) throw ConfigError("so_pmi.threshold must be > 0");

  const opinion::Lexicon expanded =
      opinion::expand_lexicon(lex, stats, candidates, pos_seeds, neg_seeds, threshold);
  expanded.save_tsv(out / "lexicon_expanded.tsv");
  json summary = {{"base_entries", lex.size()}, {"added", expanded.size() - lex.size()}};
  std::cout << summary.dump() << '\n';
}

void cmd_mine_words(const Config& cfg, const fs::path& out) {
  const auto records = read_tokens_jsonl(artifact_path(out, "tokens.jsonl"));

  std::map<std::string, std::vector<std::string>> by_day;
  uint64_t undated = 0;
  for (const auto& rec : records) {
    const auto day = opinion::utc_day(rec.fetched_at);
    if (!day) {
      ++undated;
      continue;
    }
    auto& slice = by_day[*day];
    if (!slice.empty()) slice.push_back("\n");  // keep documents from touching
    slice.insert(slice.end(), rec.tokens.begin(), rec.tokens.end());
  }
  std::vector<std::vector<std::string>> slices;
  slices.reserve(by_day.size());
  for (auto& [day, tokens] : by_day) slices.push_back(std::move(tokens));

  opinion::MinerParams params;
  params.min_freq = config_u64(cfg, "miner.min_freq", 5);
  params.min_cohesion = cfg.get_number_or("miner.min_cohesion", 1.0);
  params.min_boundary_entropy = cfg.get_number_or("miner.min_boundary_entropy", 1.0);
  params.min_burst_ratio = cfg.get_number_or("miner.min_burst_ratio", 3.0);

  // Novelty is judged against the curated dictionaries only. Judging it
  // against the machine-expanded lexicon would let an orientation guess
  // for a bursting word mask the very discovery this stage exists for.
  const auto lex = opinion::Lexicon::load_merge(fixture_paths(cfg, "paths.lexicons"));
  std::set<std::string> known;
  for (const auto& [word, entry] : lex.entries()) known.insert(word);

  const auto candidates = opinion::mine_new_words(slices, params, known);
  opinion::write_candidates_jsonl(out / "new_words.jsonl", candidates);
  json summary = {{"days", slices.size()},
                  {"undated_documents", undated},
                  {"candidates", candidates.size()}};
  std::cout << summary.dump() << '\n';
}

void cmd_train_nb(const Config& cfg, const fs::path& out) {
  const auto labeled = opinion::read_labeled_jsonl(fixture_path(cfg, "paths.nb_labeled"));
  opinion::NbOptions options;
  options.use_term_frequency = cfg.get_bool_or("nb.use_term_frequency", false);
  const opinion::NbModel model = opinion::nb_train(labeled, options);
  model.save(out / "nb_model.json");
  json summary = {{"documents", labeled.size()}, {"vocab", model.weights.size()}};
  std::cout << summary.dump() << '\n';
}

void cmd_classify(const Config& /*cfg*/, const fs::path& out) {
  const auto records = read_tokens_jsonl(artifact_path(out, "tokens.jsonl"));
  const auto model = opinion::NbModel::load(artifact_path(out, "nb_model.json"));

  std::ofstream outfile(out / "classifications.jsonl", std::ios::binary);
  if (!outfile) throw opinion::IoError("cannot open classifications.jsonl for writing");
  uint64_t n_positive = 0;
  for (const auto& rec : records) {
    const opinion::PolarityResult result = opinion::nb_classify(model, rec.tokens);
    if (result.label == opinion::NbClass::Positive) ++n_positive;
    json j = {{"id", rec.id},
              {"label", opinion::nb_class_name(result.label)},
              {"confidence", result.confidence}};
    outfile << j.dump() << '\n';
  }
  json summary = {{"positive", n_positive}, {"negative", records.size() - n_positive}};
  std::cout << summary.dump() << '\n';
}

void cmd_score(const Config& cfg, const fs::path& out) {
  const auto records = read_tokens_jsonl(artifact_path(out, "tokens.jsonl"));
  const auto nb = opinion::NbModel::load(artifact_path(out, "nb_model.json"));
  const opinion::Lexicon lex = load_scoring_lexicon(cfg, out);
  const auto fw = opinion::FunctionWordTables::load(fixture_path(cfg, "paths.function_words"));
  const opinion::ScorerConfig sc = scorer_config(cfg);

  std::vector<opinion::DocumentResult> results;
  results.reserve(records.size());
  uint64_t n_fallback = 0;
  for (const auto& rec : records) {
    const opinion::PolarityResult polarity = opinion::nb_classify(nb, rec.tokens);
    opinion::DocumentResult result;
    result.id = rec.id;
    result.fetched_at = rec.fetched_at;
    result.label = polarity.label;
    result.confidence = polarity.confidence;
    result.emotions = opinion::score_with_fallback(rec.tokens, lex, fw, nb, sc);
    if (result.emotions.flags & opinion::kFlagFallback) ++n_fallback;
    results.push_back(std::move(result));
  }
  opinion::write_results_jsonl(out / "results.jsonl", results);
  json summary = {{"documents", results.size()}, {"fallback", n_fallback}};
  std::cout << summary.dump() << '\n';
}

void cmd_trend(const Config& cfg, const fs::path& out) {
  const auto results = opinion::read_results_jsonl(artifact_path(out, "results.jsonl"));
  const auto agg = opinion::aggregate(results);
  opinion::write_trends_json(out / "trends.json", agg);
  opinion::write_trends_csv(out / "trends.csv", agg);

  const auto records = read_tokens_jsonl(artifact_path(out, "tokens.jsonl"));
  std::vector<std::vector<std::string>> tokens_by_doc;
  tokens_by_doc.reserve(records.size());
  for (const auto& rec : records) tokens_by_doc.push_back(rec.tokens);
  const opinion::Lexicon lex = load_scoring_lexicon(cfg, out);
  const auto stops = opinion::StopwordList::load(fixture_path(cfg, "paths.stopwords"));
  const size_t k = config_u64(cfg, "trends.hot_k", 20);
  if (k < 1) throw ConfigError("trends.hot_k must be >= 1");
  const auto hot = opinion::hot_words(tokens_by_doc, lex, stops, k);
  opinion::write_hotwords_json(out / "hotwords.json", hot);
  opinion::write_hotwords_csv(out / "hotwords.csv", hot);

  json summary = {{"buckets", agg.series.size()},
                  {"skipped", agg.skipped},
                  {"hot_words", hot.size()}};
  std::cout << summary.dump() << '\n';
}

void cmd_eval(const Config& cfg, const fs::path& out) {
  const auto records = read_tokens_jsonl(artifact_path(out, "tokens.jsonl"));
  const auto nb = opinion::NbModel::load(artifact_path(out, "nb_model.json"));
  const auto truth = opinion::read_truth_jsonl(fixture_path(cfg, "paths.truth"));
  const opinion::Lexicon lex = load_scoring_lexicon(cfg, out);
  const auto fw = opinion::FunctionWordTables::load(fixture_path(cfg, "paths.function_words"));
  const opinion::ScorerConfig sc = scorer_config(cfg);

  std::vector<opinion::EvalComment> comments;
  comments.reserve(records.size());
  for (const auto& rec : records) comments.push_back({rec.id, rec.tokens});

  const size_t n_samples = config_u64(cfg, "eval.samples", 8);
  if (n_samples < 1) throw ConfigError("eval.samples must be >= 1");
  const auto partition = opinion::SamplePartition::build(std::move(comments), truth, n_samples);

  const opinion::Scorer system = [&](const opinion::EvalComment& comment) {
    return opinion::score_with_fallback(comment.tokens, lex, fw, nb, sc);
  };
  const std::string baseline_name = cfg.get_string_or("eval.baseline", "uniform");
  opinion::Scorer baseline;
  if (baseline_name == "uniform") {
    baseline = opinion::make_uniform_baseline();
  } else if (baseline_name == "lexicon") {
    baseline = opinion::make_lexicon_baseline(lex, fw);
  } else {
    throw ConfigError("eval.baseline must be uniform or lexicon");
  }

  const opinion::ErrorReport report = opinion::run_comparison(partition, system, baseline);
  opinion::write_eval_report_json(out / "eval_report.json", report);
  opinion::write_eval_report_text(out / "eval_report.txt", report);

  json summary = {{"n_comments", report.n_comments},
                  {"n_judged", report.n_judged},
                  {"unjudgeable_rate", report.unjudgeable_rate}};
  std::cout << summary.dump() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"batch opinion-analysis pipeline over comment corpora"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_file;
  std::string out_dir = "out";
  uint64_t seed_value = 0;
  app.add_option("--config", config_file, "pipeline config file (TOML subset)")->required();
  auto* seed_opt = app.add_option("--seed", seed_value, "override the bloom filter seed");
  app.add_option("--out", out_dir, "artifact directory (default: out)");

  auto* ingest = app.add_subcommand("ingest", "dedup raw comments, extract clean text");
  auto* train_hmm = app.add_subcommand("train-hmm", "train the segmentation model");
  auto* segment = app.add_subcommand("segment", "segment documents into filtered tokens");
  auto* expand = app.add_subcommand("expand-lexicon", "grow the lexicon via co-occurrence");
  auto* mine = app.add_subcommand("mine-words", "mine bursty new-word candidates");
  auto* train_nb = app.add_subcommand("train-nb", "train the polarity classifier");
  auto* classify = app.add_subcommand("classify", "polarity per document");
  auto* score = app.add_subcommand("score", "full emotion scoring per document");
  auto* trend = app.add_subcommand("trend", "daily aggregates and hot words");
  auto* eval = app.add_subcommand("eval", "compare against truth labels");

  CLI11_PARSE(app, argc, argv);

  try {
    const Config cfg = Config::parse_file(config_file);
    const fs::path out(out_dir);
    std::error_code ec;
    fs::create_directories(out, ec);
    if (ec) throw opinion::IoError("cannot create output directory " + out.string());

    const std::optional<uint64_t> seed =
        seed_opt->count() > 0 ? std::optional<uint64_t>(seed_value) : std::nullopt;

    if (app.got_subcommand(ingest)) cmd_ingest(cfg, out, seed);
    if (app.got_subcommand(train_hmm)) cmd_train_hmm(cfg, out);
    if (app.got_subcommand(segment)) cmd_segment(cfg, out);
    if (app.got_subcommand(expand)) cmd_expand_lexicon(cfg, out);
    if (app.got_subcommand(mine)) cmd_mine_words(cfg, out);
    if (app.got_subcommand(train_nb)) cmd_train_nb(cfg, out);
    if (app.got_subcommand(classify)) cmd_classify(cfg, out);
    if (app.got_subcommand(score)) cmd_score(cfg, out);
    if (app.got_subcommand(trend)) cmd_trend(cfg, out);
    if (app.got_subcommand(eval)) cmd_eval(cfg, out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 4;
  } catch (const MissingArtifact& e) {
    std::cerr << "missing artifact: " << e.what() << '\n';
    return 3;
  } catch (const opinion::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const opinion::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
