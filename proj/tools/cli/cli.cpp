#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gitsolve/errors.hpp"
#include "gitsolve/repsupport.hpp"
#include "report.hpp"

namespace gitsolve::cli {
namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <class Body>
RunResult guarded(Body&& body) {
  RunResult res;
  try {
    body(res);
  } catch (const ParseError& e) {
    res = {kParseError, {}, std::string("parse error: ") + e.what()};
  } catch (const DomainError& e) {
    res = {kParseError, {}, std::string("invalid input: ") + e.what()};
  } catch (const ResourceGuardError& e) {
    res = {kResourceGuard, {}, std::string("resource guard: ") + e.what()};
  } catch (const std::exception& e) {
    res = {kFailure, {}, std::string("error: ") + e.what()};
  }
  return res;
}

Format parse_format(const std::string& s) {
  if (s == "text") return Format::Text;
  if (s == "json" || s == "json-like") return Format::Json;
  throw ParseError("unknown format '" + s + "' (expected text or json)");
}

void write_output(const std::optional<std::string>& path, RunResult& res) {
  if (!path) return;
  std::ofstream f(*path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + *path + " for writing");
  f << res.report;
  res.report.clear();
}

}  // namespace

solver::Loci parse_loci(const std::string& text) {
  solver::Loci loci{false, false, false};
  std::stringstream ss(text);
  std::string item;
  bool any = false;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item == "nonstable") {
      loci.nonstable = true;
    } else if (item == "unstable") {
      loci.unstable = true;
    } else if (item == "polystable") {
      loci.polystable = true;
    } else if (item == "all") {
      loci = {};
    } else {
      throw ParseError("unknown locus '" + item + "' (expected nonstable, unstable, polystable)");
    }
    any = true;
  }
  if (!any) throw ParseError("empty loci list");
  return loci;
}

std::vector<rootdata::Weight> read_weights_file(const std::string& path, int rank) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read weights file " + path);
  std::vector<rootdata::Weight> out;
  std::string line;
  int lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    for (char& c : line) {
      if (c == ',' || c == '(' || c == ')') c = ' ';
    }
    std::istringstream ls(line);
    rootdata::Weight w;
    std::int64_t x = 0;
    while (ls >> x) w.coeffs.push_back(x);
    if (!ls.eof() || static_cast<int>(w.coeffs.size()) != rank) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": expected " + std::to_string(rank) +
                       " integers");
    }
    out.push_back(std::move(w));
  }
  return out;
}

RunResult run(const RunConfig& config, const Limits& limits) {
  return guarded([&](RunResult& res) {
    if (!config.loci.nonstable && !config.loci.unstable && !config.loci.polystable) {
      throw ParseError("no loci requested");
    }
    const rootdata::SimpleGroup g(config.group.letter, config.group.rank);
    solver::SolverOptions opts;
    opts.weyl_optimisation = config.weyl_opt;
    opts.polystable_all_faces = config.all_faces;
    opts.threads = config.threads;
    opts.limits = limits;

    repsupport::RepresentationSupport support;
    if (config.weights_file) {
      support = repsupport::support_from_weights(g, read_weights_file(*config.weights_file, g.rnk()));
      if (support.size() > limits.max_support) {
        throw ResourceGuardError("weight list exceeds " + std::to_string(limits.max_support));
      }
    } else {
      const auto hw = repsupport::parse_highest_weight(g, config.weight_text);
      support = repsupport::weight_support(g, hw, limits.max_support);
    }

    const solver::GITProblem problem(g, std::move(support), opts);
    const auto sol = solver::solve(problem, config.loci);
    if (config.format == Format::Json) {
      res.report = json_report(g, sol).dump(2) + "\n";
    } else {
      res.report = text_report(g, sol, config.timing);
    }
    write_output(config.output_path, res);
  });
}

RunResult run_support_only(const SupportConfig& config, const Limits& limits) {
  return guarded([&](RunResult& res) {
    const rootdata::SimpleGroup g(config.group.letter, config.group.rank);
    const auto hw = repsupport::parse_highest_weight(g, config.weight_text);
    const auto support = repsupport::weight_support(g, hw, limits.max_support);

    solver::GITSolution shell;
    shell.metadata.highest_weight = hw;
    shell.metadata.support_size = support.size();
    if (config.format == Format::Json) {
      nlohmann::ordered_json j;
      j["group"] = g.name();
      j["highest_weight"] = hw.weight().coeffs;
      j["support_size"] = support.size();
      if (config.list) {
        auto ws = nlohmann::ordered_json::array();
        for (const auto& w : support.weights) ws.push_back(display_weight(g, shell, w));
        j["weights"] = std::move(ws);
      }
      res.report = j.dump(2) + "\n";
      return;
    }
    std::ostringstream os;
    os << support.size() << "\n";
    if (config.list) {
      for (const auto& w : support.weights) os << to_string(display_weight(g, shell, w)) << "\n";
    }
    res.report = os.str();
  });
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stability loci of simple groups acting on projectivised irreducible representations"};
  app.require_subcommand(1);

  std::string group_text;
  std::string weight_text;
  std::string loci_text = "nonstable,unstable,polystable";
  std::string format_text = "text";
  std::string weights_file;
  std::string out_path;
  bool weyl_opt = false;
  bool all_faces = false;
  bool timing = false;
  bool list = false;
  unsigned threads = 1;

  auto* solve_cmd = app.add_subcommand("solve", "compute non-stable, unstable and strictly polystable states");
  solve_cmd->add_option("group", group_text, "Dynkin type and rank, e.g. A2, B3, G2")->required();
  auto* weight_opt = solve_cmd->add_option("--weight", weight_text,
                                           "highest weight: 'a1,...,ar', L-form for type A, or 'd*w<i>'");
  auto* file_opt = solve_cmd->add_option("--weights-file", weights_file,
                                         "weight list, one weight per line (fundamental coefficients)");
  weight_opt->excludes(file_opt);
  solve_cmd->add_option("--loci", loci_text, "comma list of nonstable,unstable,polystable");
  solve_cmd->add_flag("--weyl-opt", weyl_opt, "drop Weyl-equivalent maximal states");
  solve_cmd->add_flag("--all-faces", all_faces,
                      "take polystable candidates from every arrangement face");
  solve_cmd->add_option("--format", format_text, "text or json");
  solve_cmd->add_option("--out", out_path, "write the report to a file");
  solve_cmd->add_flag("--timing", timing, "append timings to the text report");
  solve_cmd->add_option("--threads", threads, "worker threads for candidate evaluation");

  auto* support_cmd = app.add_subcommand("support", "print the number of weights of a representation");
  support_cmd->add_option("group", group_text, "Dynkin type and rank")->required();
  support_cmd->add_option("--weight", weight_text, "highest weight")->required();
  support_cmd->add_flag("--list", list, "also list the weights");
  support_cmd->add_option("--format", format_text, "text or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParseError;
  }

  RunResult res;
  try {
    const auto group = rootdata::DynkinType::parse(group_text);
    const auto format = parse_format(format_text);
    if (solve_cmd->parsed()) {
      if (weight_text.empty() && weights_file.empty()) {
        throw ParseError("either --weight or --weights-file is required");
      }
      RunConfig cfg;
      cfg.group = group;
      cfg.weight_text = weight_text;
      cfg.loci = parse_loci(loci_text);
      cfg.weyl_opt = weyl_opt;
      cfg.all_faces = all_faces;
      cfg.format = format;
      if (!weights_file.empty()) cfg.weights_file = weights_file;
      if (!out_path.empty()) cfg.output_path = out_path;
      cfg.timing = timing;
      cfg.threads = std::max(1u, threads);
      res = run(cfg);
    } else {
      SupportConfig cfg{group, weight_text, list, format};
      res = run_support_only(cfg);
    }
  } catch (const ParseError& e) {
    res = {kParseError, {}, std::string("parse error: ") + e.what()};
  }
  out << res.report;
  if (!res.diagnostic.empty()) err << res.diagnostic << "\n";
  return res.exit_code;
}

}  // namespace gitsolve::cli
