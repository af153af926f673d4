//
// Project cellfeat - Copyright 2026 The cellfeat Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "cellfeat/cli/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cellfeat/core/errors.hpp"
#include "cellfeat/ecc/batch.hpp"
#include "cellfeat/ecc/feature_io.hpp"
#include "cellfeat/molio/parse.hpp"
#include "cellfeat/spectral/homology.hpp"
#include "cellfeat/spectral/laplacian.hpp"
#include "cellfeat/statlab/statlab.hpp"

namespace cellfeat::cli {
namespace {

namespace fs = std::filesystem;

struct FeaturizeOptions {
  std::vector<std::string> inputs;
  std::string kind = "smiles";
  std::string out;
  std::string json_out;
  std::string report;
  int jobs = 1;
  int verbosity = 0;
  bool quiet = false;
  ecc::ECCConfig ecc;
};

struct StatsOptions {
  std::string input;
  std::string control;
  double alpha = 0.05;
  std::string out_dir = ".";
};

struct InspectOptions {
  std::string molecule;
  std::string input;
  std::string kind = "smiles";
  bool dump_complex = false;
  ecc::ECCConfig ecc;
};

void add_ecc_flags(CLI::App *cmd, ecc::ECCConfig &cfg) {
  cmd->add_option("--top-k", cfg.top_k, "Eigenvalues kept per spectrum")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--chain-samples", cfg.chain_samples, "Random walks per chain matrix")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--chain-walk-len", cfg.chain_walk_len, "Cells per random walk")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "Seed for chain sampling")->capture_default_str();
  cmd->add_option("--pad-to", cfg.pad_to, "Output vector length")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--khop", cfg.lift.khop, "Distance of k-hop 3-cells (0 disables)")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--ring-max", cfg.lift.ring_size_max, "Largest ring turned into a 3-cell")
      ->capture_default_str()
      ->check(CLI::Range(3, 64));
  cmd->add_option("--max-degree", cfg.max_degree, "Last degree histogram bin")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--no-rings", [&cfg](std::int64_t) { cfg.lift.include_rings = false; },
                "Do not attach ring 3-cells");
}

bool read_file(const std::string &path, std::string &text) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return static_cast<bool>(in) || in.eof();
}

struct Molecule {
  std::string id;
  std::string source;  // "path:line" for diagnostics
  molio::MolecularGraph graph;
};

int cmd_featurize(const FeaturizeOptions &opt, std::ostream &out, std::ostream &err) {
  const auto start = std::chrono::steady_clock::now();
  try {
    ecc::check_config(opt.ecc);
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  std::vector<Molecule> molecules;
  nlohmann::json failures = nlohmann::json::array();
  auto fail = [&](const std::string &source, int line, const std::string &message) {
    if (!opt.quiet)
      err << "skip " << source << ": " << message << '\n';
    failures.push_back({{"source", source}, {"line", line}, {"error", message}});
  };

  for (const auto &path: opt.inputs) {
    std::string text;
    if (!read_file(path, text)) {
      err << "error: cannot read input " << path << '\n';
      return kBadInput;
    }
    if (opt.kind == "graph") {
      try {
        molecules.push_back({fs::path(path).stem().string(), path, molio::parse_graph_file(text)});
      } catch (const Error &e) {
        fail(path, 0, e.what());
      }
      continue;
    }
    std::istringstream lines(text);
    std::string line;
    int lineno = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      std::istringstream fields(line);
      std::string smiles, id;
      if (!(fields >> smiles))
        continue;
      if (!(fields >> id))
        id = std::to_string(lineno);
      const std::string source = path + ":" + std::to_string(lineno);
      try {
        molecules.push_back({id, source, molio::parse_smiles(smiles)});
      } catch (const Error &e) {
        fail(source, lineno, e.what());
      }
    }
  }
  const int parsed = static_cast<int>(molecules.size());

  std::vector<molio::MolecularGraph> graphs;
  graphs.reserve(molecules.size());
  for (const auto &m: molecules)
    graphs.push_back(m.graph);
  const ecc::BatchResult batch = opt.jobs > 1
                                     ? ecc::featurize_batch(graphs, opt.ecc, opt.jobs)
                                     : ecc::featurize_batch_serial(graphs, opt.ecc);

  std::vector<ecc::FeatureRecord> records;
  for (std::size_t i = 0; i < molecules.size(); ++i) {
    if (batch.vectors[i]) {
      records.push_back({molecules[i].id, batch.vectors[i]->values});
    } else {
      const auto &src = molecules[i].source;
      const auto colon = src.rfind(':');
      const int line = colon == std::string::npos ? 0 : std::atoi(src.c_str() + colon + 1);
      fail(src, line, batch.errors[i]);
    }
  }

  try {
    ecc::write_features(fs::path(opt.out), records);
    if (!opt.json_out.empty()) {
      std::ofstream js(opt.json_out);
      js << ecc::features_to_json(records) << '\n';
      if (!js)
        throw Error("cannot write " + opt.json_out);
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kBadOutput;
  }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  nlohmann::json report = {{"parsed", parsed},
                           {"failed", failures.size()},
                           {"written", records.size()},
                           {"wall_time_s", seconds},
                           {"failures", failures}};
  const std::string report_path = opt.report.empty() ? opt.out + ".report.json" : opt.report;
  std::ofstream rep(report_path);
  rep << report.dump(1) << '\n';
  if (!rep) {
    err << "error: cannot write report " << report_path << '\n';
    return kBadOutput;
  }

  if (!opt.quiet)
    out << "parsed " << parsed << ", failed " << failures.size() << ", written "
        << records.size() << " (" << std::fixed << std::setprecision(3) << seconds
        << " s)\n";
  return kOk;
}

int cmd_stats(const StatsOptions &opt, std::ostream &out, std::ostream &err) {
  std::string text;
  if (!read_file(opt.input, text)) {
    err << "error: cannot read " << opt.input << '\n';
    return kBadInput;
  }
  statlab::ComparisonReport report;
  try {
    const auto table = statlab::FoldLossTable::parse_csv(text);
    report = statlab::compare_to_control(table, opt.control, opt.alpha);
  } catch (const UnknownControl &e) {
    err << "error: " << e.what() << '\n';
    return kUnknownControl;
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  const fs::path dir(opt.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  for (auto [name, rows]: {std::pair {"mae.csv", &report.mae}, std::pair {"rmse.csv", &report.rmse}}) {
    std::ofstream file(dir / name);
    statlab::write_comparison_csv(file, report.control, *rows);
    if (!file) {
      err << "error: cannot write " << (dir / name).string() << '\n';
      return kBadOutput;
    }
  }
  out << "wrote " << report.mae.size() << " comparisons per family to "
      << (dir / "mae.csv").string() << " and " << (dir / "rmse.csv").string() << '\n';
  return kOk;
}

void print_list(std::ostream &out, const std::vector<double> &values) {
  out << '(';
  for (std::size_t i = 0; i < values.size(); ++i)
    out << (i ? ", " : "") << values[i];
  out << ')';
}

int cmd_inspect(const InspectOptions &opt, std::ostream &out, std::ostream &err) {
  molio::MolecularGraph graph;
  try {
    ecc::check_config(opt.ecc);
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  try {
    if (!opt.input.empty()) {
      std::string text;
      if (!read_file(opt.input, text)) {
        err << "error: cannot read " << opt.input << '\n';
        return kBadInput;
      }
      if (opt.kind == "graph") {
        graph = molio::parse_graph_file(text);
      } else {
        std::istringstream fields(text);
        std::string smiles;
        fields >> smiles;
        graph = molio::parse_smiles(smiles);
      }
    } else {
      graph = molio::parse_smiles(opt.molecule);
    }
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }

  try {
    const auto complex = lifting::lift(graph, opt.ecc.lift);
    const auto report = lifting::validate(complex);
    if (!report.ok()) {
      err << "error: invalid complex: " << report.violation->message << '\n';
      return kBadInput;
    }
    const auto counts = complex.counts();
    const auto betti = spectral::betti_numbers(complex);
    out << std::setprecision(6);
    out << "atoms " << graph.num_atoms() << ", bonds " << graph.num_bonds() << '\n';
    out << "counts (" << counts[0] << ", " << counts[1] << ", " << counts[2] << ", "
        << counts[3] << ")\n";
    out << "betti (" << betti[0] << ", " << betti[1] << ", " << betti[2] << ", " << betti[3]
        << ")\n";
    for (int k = 0; k <= 3; ++k) {
      out << "L" << k << " top-" << opt.ecc.top_k << ' ';
      print_list(out, spectral::top_k_eigs(spectral::hodge_laplacian(complex, k), opt.ecc.top_k)
                          .eigenvalues);
      out << '\n';
    }
    const auto features = ecc::ecc_features(graph, opt.ecc);
    out << "layout";
    for (const auto &s: features.layout)
      out << ' ' << s.name << '[' << s.offset << ':' << s.offset + s.length << ']';
    out << " pad_to " << opt.ecc.pad_to << '\n';
    for (const auto &s: features.layout) {
      out << "  " << s.name << ' ';
      print_list(out, features.slice(s.name));
      out << '\n';
    }
    if (opt.dump_complex)
      out << lifting::to_debug_json(complex) << '\n';
  } catch (const Error &e) {
    err << "error: " << e.what() << '\n';
    return kBadInput;
  }
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app {"Topological molecular features and model-comparison statistics", "cellfeat"};
  app.require_subcommand(1);

  FeaturizeOptions feat;
  auto *featurize = app.add_subcommand("featurize", "Write ECC feature vectors for a batch");
  featurize->add_option("--input", feat.inputs, "SMILES list file, or graph JSON files")
      ->required();
  featurize->add_option("--kind", feat.kind, "smiles | graph")
      ->capture_default_str()
      ->check(CLI::IsMember({"smiles", "graph"}));
  featurize->add_option("--out", feat.out, "Binary ECC1 feature file")->required();
  featurize->add_option("--json-out", feat.json_out, "Optional JSON mirror of the features");
  featurize->add_option("--report", feat.report, "Run report (default <out>.report.json)");
  featurize->add_option("--jobs", feat.jobs, "Worker threads")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  featurize->add_flag("-q,--quiet", feat.quiet, "Only print errors");
  add_ecc_flags(featurize, feat.ecc);

  StatsOptions stats;
  auto *stats_cmd = app.add_subcommand("stats", "Corrected resampled t-tests of every model against a control");
  stats_cmd->add_option("--input", stats.input, "CSV with header model,fold,mae,rmse")
      ->required();
  stats_cmd->add_option("--control", stats.control, "Control model name")->required();
  stats_cmd->add_option("--alpha", stats.alpha, "Family-wise level")
      ->capture_default_str()
      ->check(CLI::Range(1e-12, 1.0 - 1e-12));
  stats_cmd->add_option("--out", stats.out_dir, "Directory for mae.csv and rmse.csv")
      ->capture_default_str();

  InspectOptions insp;
  auto *inspect = app.add_subcommand("inspect", "Summarize the lifted complex of one molecule");
  inspect->add_option("molecule", insp.molecule, "SMILES string");
  inspect->add_option("--input", insp.input, "Read the molecule from a file instead");
  inspect->add_option("--kind", insp.kind, "smiles | graph")
      ->capture_default_str()
      ->check(CLI::IsMember({"smiles", "graph"}));
  inspect->add_flag("--dump-complex", insp.dump_complex, "Print every cell as JSON");
  add_ecc_flags(inspect, insp.ecc);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    std::ostringstream o, e2;
    const int code = app.exit(e, o, e2);
    out << o.str();
    err << e2.str();
    return code == 0 ? kOk : kUsage;
  }

  if (featurize->parsed())
    return cmd_featurize(feat, out, err);
  if (stats_cmd->parsed())
    return cmd_stats(stats, out, err);
  if (insp.molecule.empty() && insp.input.empty()) {
    err << "error: inspect needs a SMILES argument or --input\n";
    return kUsage;
  }
  return cmd_inspect(insp, out, err);
}

} // namespace cellfeat::cli
