#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gibberline/classifier.hpp"
#include "gibberline/corpus.hpp"
#include "gibberline/error.hpp"
#include "gibberline/features.hpp"
#include "gibberline/textprep.hpp"

namespace gibberline::cli {
namespace {

using classifier::Label;

struct Config {
  std::string file;
  std::string model_path;
  std::string out_path;
  std::string generated_dir;
  std::string human_dir;
  std::vector<std::size_t> k_values;
  std::size_t k = classifier::kDefaultK;
  std::size_t n_top = features::kDefaultTopN;
  std::size_t threads = 0;
  std::string format = "text";
  std::vector<std::string> axes{"s1", "s2"};
  bool scale = false;
};

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

textprep::PosTagger make_tagger() {
  if (const char* lexicon = std::getenv("GIBBERLINE_LEXICON"); lexicon && *lexicon) {
    return textprep::PosTagger::from_tables(read_text(lexicon),
                                            textprep::PosTagger::builtin_suffix_table());
  }
  return textprep::PosTagger::builtin();
}

features::FeatureVector score_file(const std::string& path, std::size_t n_top,
                                   const textprep::PosTagger& tagger) {
  const auto doc = textprep::prepare({read_text(path), path}, tagger);
  return features::extract_features(doc, n_top);
}

// Loads and scores both class directories, reporting warnings and
// exclusions on `err`.
std::vector<corpus::CorpusEntry> score_directories(const Config& cfg,
                                                   const textprep::PosTagger& tagger,
                                                   std::ostream& out, std::ostream& err) {
  std::vector<corpus::LabeledDocument> docs;
  for (const auto& [dir, label] : {std::pair{cfg.generated_dir, Label::kGenerated},
                                   std::pair{cfg.human_dir, Label::kHuman}}) {
    auto loaded = corpus::load_corpus(dir);
    for (const auto& w : loaded.warnings) {
      err << "warning: " << w.path.string() << ": " << w.message << '\n';
    }
    auto labeled = corpus::with_label(std::move(loaded.documents), label);
    docs.insert(docs.end(), std::make_move_iterator(labeled.begin()),
                std::make_move_iterator(labeled.end()));
  }
  auto scored = corpus::score_corpus(docs, cfg.n_top, tagger, cfg.threads);
  for (const auto& x : scored.exclusions) {
    err << "excluded: " << x.source_id << ": " << x.reason << '\n';
  }
  std::size_t generated = 0;
  std::size_t human = 0;
  for (const auto& e : scored.entries) (*e.label == Label::kHuman ? human : generated)++;
  out << "generated: " << generated << " scored\n"
      << "human: " << human << " scored\n"
      << "excluded: " << scored.exclusions.size() << '\n';
  if (generated == 0 || human == 0) {
    throw Error(ErrorCode::kEmptyTrainingSet,
                std::string("no scored documents for class ") + (generated == 0 ? "Generated" : "Human"));
  }
  return std::move(scored.entries);
}

int cmd_score(const Config& cfg, std::ostream& out) {
  const auto tagger = make_tagger();
  const auto f = score_file(cfg.file, cfg.n_top, tagger);
  if (cfg.format == "csv") {
    const corpus::CorpusEntry entry{cfg.file, std::nullopt, f};
    corpus::write_feature_table(out, std::span(&entry, 1));
  } else {
    out << "s1 " << corpus::format_fixed6(f.s1) << '\n'
        << "s2 " << corpus::format_fixed6(f.s2) << '\n'
        << "s3 " << corpus::format_fixed6(f.s3) << '\n';
  }
  return 0;
}

int cmd_build_model(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto tagger = make_tagger();
  const auto entries = score_directories(cfg, tagger, out, err);
  const classifier::Model model(corpus::to_labeled_points(entries), cfg.k, cfg.scale);
  corpus::save_model(cfg.out_path, model, cfg.n_top);
  out << "model: " << model.points().size() << " points, k = " << model.k() << " -> "
      << cfg.out_path << '\n';
  return 0;
}

int cmd_classify(const Config& cfg, const CLI::App& sub, std::ostream& out) {
  const auto stored = corpus::load_model(cfg.model_path);
  const std::size_t n_top = sub.count("--n-top") ? cfg.n_top : stored.n_top;
  const std::size_t k = sub.count("--k") ? cfg.k : stored.model.k();
  const auto f = score_file(cfg.file, n_top, make_tagger());
  const auto result = stored.model.classify(f, k);

  out << classifier::to_string(result.label) << '\n';
  out << "votes: Human=" << result.human_votes << " Generated=" << result.generated_votes << '\n';
  out << "neighbors:\n";
  for (const auto& n : result.neighbors) {
    const auto& p = stored.model.points()[n.index];
    out << "  " << p.source_id << ' ' << classifier::to_string(p.label) << ' '
        << corpus::format_fixed6(n.distance()) << '\n';
  }
  return result.label == Label::kHuman ? kExitHuman : kExitGenerated;
}

int cmd_crossval(const Config& cfg, std::ostream& out, std::ostream& err) {
  std::vector<classifier::LabeledPoint> points;
  bool scale = cfg.scale;
  if (!cfg.model_path.empty()) {
    const auto stored = corpus::load_model(cfg.model_path);
    points.assign(stored.model.points().begin(), stored.model.points().end());
    scale = scale || stored.model.scaled();
  } else {
    if (cfg.generated_dir.empty() || cfg.human_dir.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "crossval needs --model or both --generated and --human");
    }
    // Corpus summary goes to stderr so stdout stays a clean table.
    points = corpus::to_labeled_points(score_directories(cfg, make_tagger(), err, err));
  }
  const auto report = classifier::sweep_k(points, cfg.k_values, scale);
  if (cfg.format == "csv") {
    out << "k,error_rate,false_human_as_generated,false_generated_as_human\n";
    for (const auto& e : report.entries) {
      out << e.k << ',' << corpus::format_full(e.error_rate) << ',' << e.false_human_as_generated
          << ',' << e.false_generated_as_human << '\n';
    }
  } else {
    out << "k\terror_rate\tfp\tfn\n";
    for (const auto& e : report.entries) {
      out << e.k << '\t' << corpus::format_fixed6(e.error_rate) << '\t'
          << e.false_human_as_generated << '\t' << e.false_generated_as_human << '\n';
    }
  }
  return 0;
}

int cmd_export_scatter(const Config& cfg, std::ostream& out) {
  if (cfg.axes.size() != 2) throw Error(ErrorCode::kInvalidArgument, "--axes takes two axis names");
  const auto x = corpus::parse_axis(cfg.axes[0]);
  const auto y = corpus::parse_axis(cfg.axes[1]);
  if (!x || !y) {
    throw Error(ErrorCode::kInvalidArgument,
                "bad axis name '" + (x ? cfg.axes[1] : cfg.axes[0]) + "' (expected s1, s2 or s3)");
  }
  const auto stored = corpus::load_model(cfg.model_path);
  const auto entries = corpus::to_entries(stored.model.points());
  const auto scatter = corpus::export_scatter(entries, *x, *y);
  if (cfg.out_path.empty()) {
    scatter.write_csv(out);
  } else {
    std::ofstream file(cfg.out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw Error(ErrorCode::kIo, "cannot write " + cfg.out_path);
    scatter.write_csv(file);
    out << scatter.rows.size() << " rows -> " << cfg.out_path << '\n';
  }
  return 0;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Detect computer-generated papers from keyword self-reference scores"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gibberline 0.1.0");

  auto add_n_top = [&](CLI::App* sub) {
    sub->add_option("--n-top", cfg.n_top, "Top-N stems for the repetition score")
        ->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "csv"}));
  };
  auto add_dirs = [&](CLI::App* sub, bool required) {
    auto* g = sub->add_option("--generated", cfg.generated_dir, "Directory of generated papers");
    auto* h = sub->add_option("--human", cfg.human_dir, "Directory of human-written papers");
    if (required) {
      g->required();
      h->required();
    }
  };
  auto add_threads = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "Scoring threads (0 = all cores)");
  };

  auto* score = app.add_subcommand("score", "Print the three feature scores of a text file");
  score->add_option("file", cfg.file, "Plain-text paper")->required();
  add_n_top(score);
  add_format(score);

  auto* build = app.add_subcommand("build-model", "Score two labeled directories and write a model");
  add_dirs(build, true);
  build->add_option("--out", cfg.out_path, "Model file to write")->required();
  build->add_option("--k", cfg.k, "Neighbors per vote")->check(CLI::PositiveNumber);
  add_n_top(build);
  build->add_flag("--scale", cfg.scale, "Min-max scale features before the neighbor search");
  add_threads(build);

  auto* classify = app.add_subcommand("classify", "Classify a text file against a model");
  classify->add_option("file", cfg.file, "Plain-text paper")->required();
  classify->add_option("--model", cfg.model_path, "Model file")->required();
  classify->add_option("--k", cfg.k, "Override the model's k")->check(CLI::PositiveNumber);
  add_n_top(classify);

  auto* crossval = app.add_subcommand("crossval", "Leave-one-out error for a list of k values");
  crossval->add_option("--model", cfg.model_path, "Model file");
  add_dirs(crossval, false);
  cfg.k_values = {1, 3, 5, 7, 9};
  crossval->add_option("--k", cfg.k_values, "Comma-separated k values")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  add_n_top(crossval);
  add_format(crossval);
  crossval->add_flag("--scale", cfg.scale, "Min-max scale features before the neighbor search");
  add_threads(crossval);

  auto* scatter = app.add_subcommand("export-scatter", "Write a two-feature projection of a model as CSV");
  scatter->add_option("--model", cfg.model_path, "Model file")->required();
  scatter->add_option("--axes", cfg.axes, "Two of s1,s2,s3")->delimiter(',')->expected(2);
  scatter->add_option("--out", cfg.out_path, "Output CSV (default stdout)");

  std::vector<std::string> argv_tail(args.rbegin(), args.rend() - 1);
  try {
    app.parse(std::move(argv_tail));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*score) return cmd_score(cfg, out);
    if (*build) return cmd_build_model(cfg, out, err);
    if (*classify) return cmd_classify(cfg, *classify, out);
    if (*crossval) return cmd_crossval(cfg, out, err);
    if (*scatter) return cmd_export_scatter(cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace gibberline::cli
