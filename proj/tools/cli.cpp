// Apache License, Version 2.0, refer to LICENSE.txt

#include "cli.hpp"

#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <fmt/chrono.h>
#include <fmt/format.h>
#include <nlohmann/json.hpp>
#include <openssl/evp.h>

#include "mwcr/error.hpp"
#include "mwcr/gibbs.hpp"
#include "mwcr/ingest.hpp"
#include "mwcr/plot.hpp"
#include "mwcr/posterior.hpp"
#include "mwcr/simulate.hpp"

namespace mwcr::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr std::string_view kToolName = "mwcr";
constexpr std::string_view kToolVersion = "1.0.0";
constexpr int kInternal = 1;

class IoError : public DataError {
 public:
  using DataError::DataError;
};

std::string now_utc() {
  const auto now = std::chrono::system_clock::now();
  return fmt::format("{:%Y-%m-%dT%H:%M:%SZ}", fmt::gmtime(std::chrono::system_clock::to_time_t(now)));
}

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_input(const std::string& path) {
  if (path == "-") return read_all(std::cin);
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  return read_all(in);
}

std::vector<double> parse_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw DomainError(flag + ": not a number: '" + item + "'");
    }
  }
  return out;
}

// Collects the files of one output directory and writes its manifest.
class OutputDir {
 public:
  explicit OutputDir(fs::path dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec || !fs::is_directory(dir_)) throw IoError("cannot create output directory " + dir_.string());
  }

  const fs::path& path() const noexcept { return dir_; }

  void write(const std::string& name, const std::string& content) {
    const fs::path p = dir_ / name;
    std::ofstream f(p, std::ios::binary | std::ios::trunc);
    f << content;
    f.close();
    if (!f) throw IoError("cannot write " + p.string());
    files_.push_back({{"file", name}, {"sha256", sha256_hex(content)}});
  }

  void finish(json manifest) {
    manifest["outputs"] = files_;
    manifest["finished_at"] = now_utc();
    const fs::path p = dir_ / "manifest.json";
    std::ofstream f(p, std::ios::trunc);
    f << manifest.dump(2) << '\n';
    f.close();
    if (!f) throw IoError("cannot write " + p.string());
  }

 private:
  fs::path dir_;
  json files_ = json::array();
};

json base_manifest(const std::string& command, const std::vector<std::string>& args, const std::string& started) {
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"command", command},
          {"argv", args},
          {"started_at", started},
          {"rng", Rng::kAlgorithm}};
}

json params_json(const ModelParams& mp) {
  return {{"lambda1", mp.lambda1()}, {"lambda2", mp.lambda2()}, {"alpha", mp.alpha()}, {"beta", mp.beta()}};
}

json diagnostics_json(const Diagnostics& d) {
  json out = json::object();
  for (Param p : kAllParams) {
    const ParamDiagnostics& pd = d[static_cast<std::size_t>(p)];
    out[std::string(param_name(p))] = {{"evaluations", pd.slice.evaluations},
                                       {"stepouts", pd.slice.stepouts},
                                       {"shrinks", pd.slice.shrinks},
                                       {"exhausted", pd.slice.exhausted},
                                       {"nonpositive_information", pd.nonpositive_information},
                                       {"outside_support", pd.outside_support},
                                       {"reentries", pd.reentries}};
  }
  return out;
}

std::string join(const std::vector<double>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + fmt::format("{}", xs[i]);
  return s;
}

// ---------------------------------------------------------------- simulate

std::map<std::string, std::string> read_key_values(const std::string& path);

struct SimulateOptions {
  int scheme = 0;
  std::string spec_file;
  std::uint64_t seed = 1;
  std::string cause_mode = "latent-min";
  std::string out;
};

// key=value lines: lambda1, lambda2, alpha, beta, n, and either m or a
// comma-separated removals list; optional name.
SimSpec read_spec_file(const std::string& path, std::uint64_t seed, CauseMode mode) {
  std::map<std::string, std::string> kv = read_key_values(path);
  auto need = [&](const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw DataError(path + ": missing key '" + key + "'");
    return it->second;
  };
  auto number = [&](const std::string& key) {
    const auto v = parse_list(need(key), key);
    if (v.size() != 1) throw DataError(path + ": key '" + key + "' needs one value");
    return v[0];
  };
  const ModelParams mp(number("lambda1"), number("lambda2"), number("alpha"), number("beta"));
  const auto n = static_cast<long>(number("n"));
  std::optional<CensoringScheme> scheme;
  if (kv.count("removals")) {
    std::vector<long> removals;
    for (double r : parse_list(kv["removals"], "removals")) removals.push_back(static_cast<long>(r));
    scheme.emplace(n, std::move(removals));
  } else {
    scheme = CensoringScheme::type2(n, kv.count("m") ? static_cast<long>(number("m")) : n);
  }
  return SimSpec{kv.count("name") ? kv["name"] : fs::path(path).stem().string(), mp, *scheme, mode, seed};
}

int cmd_simulate(const SimulateOptions& o, std::ostream& out, std::ostream&) {
  const std::string started = now_utc();
  const CauseMode mode = parse_cause_mode(o.cause_mode);
  if ((o.scheme == 0) == o.spec_file.empty()) throw DomainError("simulate: give exactly one of --scheme or --spec");
  const SimSpec spec = o.scheme ? catalog_scheme(o.scheme, o.seed, mode) : read_spec_file(o.spec_file, o.seed, mode);
  const std::string text = serialize_sample(generate(spec));
  if (o.out.empty()) {
    out << text;
    return kOk;
  }

  std::vector<std::string> args{"simulate", "--seed", std::to_string(o.seed), "--cause-mode", cause_mode_name(mode)};
  json input = nullptr;
  if (o.scheme) {
    args.insert(args.end(), {"--scheme", std::to_string(o.scheme)});
  } else {
    const std::string abs = fs::absolute(o.spec_file).string();
    args.insert(args.end(), {"--spec", abs});
    input = {{"path", abs}, {"sha256", sha256_hex(read_input(o.spec_file))}};
  }
  OutputDir dir(o.out);
  dir.write("dataset.csv", text);
  json m = base_manifest("simulate", args, started);
  m["seed"] = o.seed;
  m["input"] = input;
  m["config"] = {{"name", spec.name},
                 {"params", params_json(spec.params)},
                 {"n", spec.scheme.n()},
                 {"m", spec.scheme.m()},
                 {"removals", spec.scheme.removals()},
                 {"cause_mode", cause_mode_name(mode)}};
  dir.finish(std::move(m));
  return kOk;
}

// --------------------------------------------------------------------- fit

struct FitOptions {
  std::string input;
  std::string out;
  long iterations = 10000;
  long burn_in = -1;  // M / 5 when negative
  long thin = 1;
  std::uint64_t seed = 1;
  double gamma = 0.05;
  std::string width;
  std::string init;
  int chains = 1;
  std::string seeds;
};

std::vector<std::uint64_t> chain_seeds(const FitOptions& o) {
  if (o.chains < 1) throw DomainError("--chains must be at least 1");
  std::vector<std::uint64_t> seeds;
  if (o.seeds.empty()) {
    for (int i = 0; i < o.chains; ++i) seeds.push_back(o.seed + static_cast<std::uint64_t>(i));
    return seeds;
  }
  std::stringstream ss(o.seeds);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      seeds.push_back(std::stoull(item));
    } catch (const std::logic_error&) {
      throw DomainError("--seeds: not an integer: '" + item + "'");
    }
  }
  if (static_cast<int>(seeds.size()) != o.chains) {
    throw DomainError(fmt::format("--seeds lists {} seeds for {} chains", seeds.size(), o.chains));
  }
  return seeds;
}

ChainConfig chain_config(const FitOptions& o, const ProgressiveSample& s, std::uint64_t seed) {
  ChainConfig cc = default_chain_config(s, o.iterations, seed);
  if (o.burn_in >= 0) cc.burn_in = o.burn_in;
  cc.thin = o.thin;
  if (!o.width.empty()) {
    const auto w = parse_list(o.width, "--width");
    if (w.size() != 1 && w.size() != 4) throw DomainError("--width takes one value or four comma-separated values");
    for (std::size_t i = 0; i < 4; ++i) cc.slice[i].width = w.size() == 1 ? w[0] : w[i];
  }
  if (!o.init.empty()) {
    const auto v = parse_list(o.init, "--init");
    if (v.size() != 4) throw DomainError("--init takes lambda1,lambda2,alpha,beta");
    cc.init = ModelParams(v[0], v[1], v[2], v[3]);
  }
  cc.validate();
  return cc;
}

std::vector<Chain> run_chains(const std::vector<ChainConfig>& configs, const ProgressiveSample& s) {
  std::vector<Chain> chains(configs.size());
  std::vector<std::exception_ptr> errors(configs.size());
  std::vector<std::thread> workers;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    workers.emplace_back([&, i] {
      try {
        chains[i] = run_chain(configs[i], s);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    });
  }
  for (std::thread& t : workers) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return chains;
}

int cmd_fit(const FitOptions& o, std::ostream& out, std::ostream& err) {
  const std::string started = now_utc();
  if (!(o.gamma > 0.0 && o.gamma < 1.0)) throw DomainError("--gamma must lie in (0, 1)");
  const std::string text = read_input(o.input);
  std::istringstream in(text);
  const ProgressiveSample sample = parse_sample(in);
  require_both_causes(sample);

  const auto seeds = chain_seeds(o);
  std::vector<ChainConfig> configs;
  for (std::uint64_t seed : seeds) configs.push_back(chain_config(o, sample, seed));
  if (const std::string w = configs[0].warning(); !w.empty()) err << "warning: " << w << '\n';

  OutputDir dir(o.out);
  std::string input_path = o.input == "-" ? "-" : fs::absolute(o.input).string();
  if (o.input == "-") {
    dir.write("input.csv", text);
    input_path = fs::absolute(dir.path() / "input.csv").string();
  }

  const std::vector<Chain> chains = run_chains(configs, sample);
  std::vector<ModelParams> pooled;
  json per_chain = json::array();
  std::string table;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    const std::string name = chains.size() == 1 ? "chain.csv" : fmt::format("chain_{}.csv", i + 1);
    dir.write(name, serialize_chain(chains[i].draws));
    pooled.insert(pooled.end(), chains[i].draws.begin(), chains[i].draws.end());
    per_chain.push_back({{"file", name},
                         {"seed", seeds[i]},
                         {"init", params_json(configs[i].init)},
                         {"draws", chains[i].draws.size()},
                         {"diagnostics", diagnostics_json(chains[i].diagnostics)}});
    if (chains.size() > 1) {
      table += fmt::format("chain {} (seed {})\n{}\n", i + 1, seeds[i], to_table(summarize(chains[i], o.gamma)));
    }
  }
  const PosteriorSummary summary = summarize(std::span<const ModelParams>(pooled), o.gamma);
  if (chains.size() > 1) table += fmt::format("pooled over {} chains\n", chains.size());
  table += to_table(summary);
  dir.write("summary.txt", table);
  dir.write("summary.json", to_json(summary) + "\n");
  out << table;
  for (const ParamSummary& p : summary.params) {
    if (p.hpd.degenerate) err << "warning: HPD interval for " << param_name(p.param) << " is degenerate\n";
  }

  const ChainConfig& cc = configs[0];
  std::vector<std::string> args{"fit",
                                input_path,
                                "--iterations",
                                std::to_string(cc.iterations),
                                "--burn-in",
                                std::to_string(cc.burn_in),
                                "--thin",
                                std::to_string(cc.thin),
                                "--gamma",
                                fmt::format("{}", o.gamma),
                                "--chains",
                                std::to_string(seeds.size()),
                                "--seeds",
                                fmt::format("{}", fmt::join(seeds, ","))};
  std::vector<double> widths;
  for (const SliceConfig& sc : cc.slice) widths.push_back(sc.width);
  args.insert(args.end(), {"--width", join(widths)});
  if (!o.init.empty()) args.insert(args.end(), {"--init", join(std::vector<double>(cc.init.values().begin(), cc.init.values().end()))});

  json m = base_manifest("fit", args, started);
  m["seed"] = seeds[0];
  m["input"] = {{"path", o.input == "-" ? "-" : input_path}, {"sha256", sha256_hex(text)}};
  m["config"] = {{"iterations", cc.iterations},
                 {"burn_in", cc.burn_in},
                 {"thin", cc.thin},
                 {"gamma", o.gamma},
                 {"slice_width", widths},
                 {"chains", seeds.size()},
                 {"data", {{"n", sample.n()}, {"m", sample.m()}, {"m1", sample.m1()}, {"m2", sample.m2()}}}};
  m["chains"] = per_chain;
  dir.finish(std::move(m));
  return kOk;
}

// ------------------------------------------------------------------ ingest

struct IngestOptions {
  std::string input;
  int case_number = 2;
  std::string out;
};

int cmd_ingest(const IngestOptions& o, std::ostream& out, std::ostream& err) {
  const std::string started = now_utc();
  if (o.case_number != 1 && o.case_number != 2) throw DomainError("--case must be 1 or 2");
  const std::string text = read_input(o.input);
  std::istringstream in(text);
  const std::vector<FollicularRow> rows = parse_dataset(in);
  const PreparedSample prepared = o.case_number == 1 ? prepare_case1(rows) : prepare_case2(rows);
  std::map<int, long> counts;
  for (const FollicularRow& r : rows) ++counts[static_cast<int>(compute_cause(r))];
  if (prepared.perturbed_ties > 0) {
    err << "note: " << prepared.perturbed_ties << " tied failure times moved up by one ulp\n";
  }
  if (prepared.folded_leading_censored > 0) {
    err << "note: " << prepared.folded_leading_censored << " censored rows before the first failure added to R1\n";
  }
  const std::string dataset = serialize_sample(prepared.sample);
  if (o.out.empty()) {
    out << dataset;
    return kOk;
  }

  const std::string abs = o.input == "-" ? "-" : fs::absolute(o.input).string();
  OutputDir dir(o.out);
  dir.write("dataset.csv", dataset);
  json m = base_manifest("ingest", {"ingest", abs, "--case", std::to_string(o.case_number)}, started);
  m["seed"] = nullptr;
  m["input"] = {{"path", abs}, {"sha256", sha256_hex(text)}};
  m["config"] = {{"case", o.case_number},
                 {"rows", rows.size()},
                 {"censored", counts[0]},
                 {"cause1", counts[1]},
                 {"cause2", counts[2]},
                 {"perturbed_ties", prepared.perturbed_ties},
                 {"folded_leading_censored", prepared.folded_leading_censored}};
  dir.finish(std::move(m));
  return kOk;
}

// -------------------------------------------------------------------- plot

struct PlotOptions {
  std::string input;
  std::string out;
};

int cmd_plot(const PlotOptions& o, std::ostream&, std::ostream&) {
  const std::string started = now_utc();
  const std::string text = read_input(o.input);
  std::istringstream in(text);
  Chain chain;
  chain.draws = parse_chain(in);
  if (chain.draws.empty()) throw DataError(o.input + ": chain has no draws");

  OutputDir dir(o.out);
  for (Param p : kAllParams) {
    const std::string name(param_name(p));
    const std::vector<double> xs = chain.column(p);
    const auto bins = histogram(xs);
    dir.write("trace_" + name + ".csv", trace_csv(xs));
    dir.write("hist_" + name + ".csv", histogram_csv(bins));
    dir.write("trace_" + name + ".svg", trace_svg(xs, name));
    dir.write("hist_" + name + ".svg", histogram_svg(bins, name));
  }
  const std::string abs = o.input == "-" ? "-" : fs::absolute(o.input).string();
  json m = base_manifest("plot", {"plot", abs}, started);
  m["seed"] = nullptr;
  m["input"] = {{"path", abs}, {"sha256", sha256_hex(text)}};
  m["config"] = {{"draws", chain.draws.size()}};
  dir.finish(std::move(m));
  return kOk;
}

// ------------------------------------------------------------------- rerun

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_rerun(const std::string& manifest_path, const std::string& out_dir, std::ostream& out, std::ostream& err) {
  json m;
  try {
    m = json::parse(read_input(manifest_path));
  } catch (const json::exception& e) {
    throw DataError(manifest_path + ": " + e.what());
  }
  if (!m.contains("argv") || !m["argv"].is_array()) throw DataError(manifest_path + ": no argv recorded");
  std::vector<std::string> args{std::string(kToolName)};
  for (const json& a : m["argv"]) args.push_back(a.get<std::string>());
  for (const std::string& a : args) {
    if (a == "-") throw DataError(manifest_path + ": recorded input was standard input");
  }
  const fs::path target = out_dir.empty() ? fs::path(manifest_path).parent_path() : fs::path(out_dir);
  args.insert(args.end(), {"--out", target.empty() ? std::string(".") : target.string()});
  return dispatch(args, out, err);
}

// ---------------------------------------------------------------- dispatch

std::map<std::string, std::string> read_key_values(const std::string& path) {
  std::istringstream in(read_input(path));
  std::map<std::string, std::string> kv;
  std::string line;
  long lineno = 0;
  auto trim = [](const std::string& x) {
    const auto b = x.find_first_not_of(" \t\r");
    const auto e = x.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : x.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw DataError(fmt::format("{}: line {}: expected key=value", path, lineno));
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

// Appends "--key value" for each config entry whose flag is not already on
// the command line.
std::vector<std::string> with_config_defaults(const std::vector<std::string>& args) {
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  if (path.empty()) return args;
  std::vector<std::string> out = args;
  for (const auto& [key, value] : read_key_values(path)) {
    const std::string flag = "--" + key;
    bool given = false;
    for (const std::string& a : args) given = given || a == flag || a.rfind(flag + "=", 0) == 0;
    if (!given) out.insert(out.end(), {flag, value});
  }
  return out;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::string config_file;
  CLI::App app{"Bayesian competing-risks analysis with modified Weibull lifetimes", std::string(kToolName)};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "Simulate a progressively censored competing-risks sample");
  simulate->add_option("--scheme", sim.scheme, "Reference design 1-4");
  simulate->add_option("--spec", sim.spec_file, "key=value file with lambda1, lambda2, alpha, beta, n and m or removals");
  simulate->add_option("--seed", sim.seed, "Random seed")->capture_default_str();
  simulate->add_option("--cause-mode", sim.cause_mode, "latent-min or bernoulli-half")->capture_default_str();
  simulate->add_option("--out", sim.out, "Output directory (standard output when omitted)");
  simulate->add_option("--config", config_file, "key=value file of option defaults");

  FitOptions fo;
  auto* fit = app.add_subcommand("fit", "Sample the posterior by slice-within-Gibbs");
  fit->add_option("dataset", fo.input, "Dataset file, or - for standard input")->required();
  fit->add_option("--out", fo.out, "Output directory")->required();
  fit->add_option("--iterations", fo.iterations, "Sweeps per chain, burn-in included")->capture_default_str();
  fit->add_option("--burn-in", fo.burn_in, "Discarded sweeps (default iterations/5)");
  fit->add_option("--thin", fo.thin, "Keep every k-th sweep after burn-in")->capture_default_str();
  fit->add_option("--seed", fo.seed, "Seed of the first chain")->capture_default_str();
  fit->add_option("--gamma", fo.gamma, "HPD level is 1 - gamma")->capture_default_str();
  fit->add_option("--width", fo.width, "Slice width on the log axis: one value or four");
  fit->add_option("--init", fo.init, "Starting point lambda1,lambda2,alpha,beta");
  fit->add_option("--chains", fo.chains, "Number of chains run concurrently")->capture_default_str();
  fit->add_option("--seeds", fo.seeds, "Comma-separated seed per chain");
  fit->add_option("--config", config_file, "key=value file of option defaults");

  IngestOptions io;
  auto* ingest = app.add_subcommand("ingest", "Convert the follicular lymphoma file to a canonical dataset");
  ingest->add_option("input", io.input, "Whitespace-delimited file with a header row")->required();
  ingest->add_option("--case", io.case_number, "1: failures only, 2: censored rows as removals")->capture_default_str();
  ingest->add_option("--out", io.out, "Output directory (standard output when omitted)");
  ingest->add_option("--config", config_file, "key=value file of option defaults");

  PlotOptions po;
  auto* plot = app.add_subcommand("plot", "Trace and histogram files for each parameter of a chain");
  plot->add_option("chain", po.input, "Chain file written by fit")->required();
  plot->add_option("--out", po.out, "Output directory")->required();

  std::string manifest_path;
  std::string rerun_out;
  auto* rerun = app.add_subcommand("rerun", "Repeat the command recorded in a manifest");
  rerun->add_option("manifest", manifest_path, "manifest.json of an earlier run")->required();
  rerun->add_option("--out", rerun_out, "Output directory (default: the manifest's directory)");

  const std::vector<std::string> full = with_config_defaults(args);
  std::vector<std::string> reversed(full.rbegin(), std::prev(full.rend()));
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (*simulate) return cmd_simulate(sim, out, err);
  if (*fit) return cmd_fit(fo, out, err);
  if (*ingest) return cmd_ingest(io, out, err);
  if (*plot) return cmd_plot(po, out, err);
  return cmd_rerun(manifest_path, rerun_out, out, err);
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1) {
    throw NumericError("SHA-256 digest failed");
  }
  std::string hex;
  for (unsigned int i = 0; i < len; ++i) hex += fmt::format("{:02x}", md[i]);
  return hex;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (args.empty()) return kUsage;
  try {
    return dispatch(args, out, err);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace mwcr::cli
