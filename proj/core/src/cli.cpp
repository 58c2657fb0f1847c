#include "gon/cli.hpp"

#include <cstdio>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "gon/campaign.hpp"
#include "gon/error.hpp"
#include "gon/instance_io.hpp"
#include "report.hpp"

namespace gon {
namespace {

using io::Json;

enum class Format { json, text };

struct Options {
  std::string input;
  std::string format = "json";
  std::string t_samples;
  std::string dim = "2";
  std::string mode = "theorem1";
  std::uint64_t seed = 0;
  std::size_t count = 1;
  std::size_t jobs = 1;
  long entry_bound = 5;
  std::uint64_t capacity = kDefaultOracleCapacity;
  bool via_strong = false;
};

Format parse_format(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "text") return Format::text;
  throw InvalidInput("format: expected json or text");
}

std::vector<Rational> parse_t_samples(const std::string& s) {
  if (s.empty()) return default_t_samples();
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(parse_rational(item));
    } catch (const InvalidInput& e) {
      throw InvalidInput(std::string("t-samples: ") + e.what());
    }
    if (out.back() < 1) throw InvalidInput("t-samples: every t must be at least 1");
  }
  if (out.empty()) throw InvalidInput("t-samples: empty list");
  return out;
}

std::pair<std::size_t, std::size_t> parse_dim(const std::string& s) {
  auto number = [&](const std::string& part) -> std::size_t {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("dim: expected D or D1-D2");
    return static_cast<std::size_t>(std::stoul(part));
  };
  const auto dash = s.find('-');
  if (dash == std::string::npos) {
    const std::size_t d = number(s);
    return {d, d};
  }
  return {number(s.substr(0, dash)), number(s.substr(dash + 1))};
}

int emit(const std::string& command, const io::Outcome& outcome, Format format, std::ostream& out,
         std::ostream& err) {
  if (outcome.report.contains("error")) err << "gon " << command << ": " << outcome.report["error"]["message"].get<std::string>() << "\n";
  if (format == Format::json) {
    Json j;
    j["command"] = command;
    j["status"] = to_string(outcome.status);
    j["report"] = outcome.report;
    out << j.dump(2) << "\n";
  } else {
    out << "command: " << command << "\nstatus: " << to_string(outcome.status) << "\n"
        << io::render_text(outcome.report);
  }
  return exit_code(outcome.status);
}

std::string summary_cell(CampaignMode mode, const Json& r) {
  if (r.contains("error")) return r["error"]["kind"].get<std::string>();
  switch (mode) {
    case CampaignMode::theorem1:
      return r["count"].get<std::string>() + " <= " + r["bound"].get<std::string>();
    case CampaignMode::strong:
      return r["bhw"]["count"].get<std::string>() + " <= " + r["bhw"]["bound"].get<std::string>();
    case CampaignMode::translation:
      return std::to_string(r["verification"]["pairs"].size()) + " pairs";
    case CampaignMode::oracle_diff:
      return r["enumeration"].get<std::string>() + " vs " + r["oracle"].get<std::string>();
  }
  return "";
}

int run_campaign_command(const Options& opt, Format format, std::ostream& out) {
  CampaignConfig config;
  config.seed = opt.seed;
  config.count = opt.count;
  std::tie(config.dim_min, config.dim_max) = parse_dim(opt.dim);
  config.entry_bound = opt.entry_bound;
  config.mode = parse_mode(opt.mode);
  config.jobs = opt.jobs;
  config.t_samples = parse_t_samples(opt.t_samples);
  config.oracle_capacity = opt.capacity;
  const CampaignResult result = run_campaign(config);

  if (format == Format::json) {
    Json j;
    j["config"] = {{"seed", config.seed},
                   {"count", config.count},
                   {"dim", {config.dim_min, config.dim_max}},
                   {"entry_bound", config.entry_bound},
                   {"mode", to_string(config.mode)}};
    j["summary"] = {{"status", to_string(result.status())},
                    {"passed", result.count(Status::pass)},
                    {"verification_failures", result.count(Status::verification_failure)},
                    {"invalid_input", result.count(Status::invalid_input)},
                    {"hypothesis_violations", result.count(Status::hypothesis_violation)}};
    j["reports"] = Json::array();
    for (const auto& o : result.outcomes) {
      j["reports"].push_back({{"index", o.index},
                              {"seed", o.seed},
                              {"status", to_string(o.status)},
                              {"instance", Json::parse(o.instance)},
                              {"result", Json::parse(o.report)}});
    }
    out << j.dump(2) << "\n";
  } else {
    char line[160];
    std::snprintf(line, sizeof line, "%-7s %-4s %-22s %s\n", "index", "dim", "status", "result");
    out << line;
    for (const auto& o : result.outcomes) {
      const Json inst = Json::parse(o.instance);
      const std::string cell = summary_cell(config.mode, Json::parse(o.report));
      std::snprintf(line, sizeof line, "%-7zu %-4zu %-22s %s\n", o.index, inst["dim"].get<std::size_t>(),
                    to_string(o.status), cell.c_str());
      out << line;
    }
    out << "mode " << to_string(config.mode) << ", seed " << config.seed << ": " << result.count(Status::pass) << "/"
        << result.outcomes.size() << " passed, status " << to_string(result.status()) << "\n";
  }
  return exit_code(result.status());
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice-point counting and verification of covering bounds", "gon"};
  app.require_subcommand(1);
  Options opt;

  auto add_io = [&](CLI::App* sub, bool needs_input) {
    auto* in = sub->add_option("--input", opt.input, "Instance file (JSON)");
    if (needs_input) in->required();
    sub->add_option("--format", opt.format, "Output format: json or text")->capture_default_str();
  };

  auto* count = app.add_subcommand("count", "Lattice points in each body of the instance");
  add_io(count, true);
  auto* minima = app.add_subcommand("minima", "Successive minima of the lattice and of the body");
  add_io(minima, true);
  auto* qvalues = app.add_subcommand("qvalues", "q_i = floor(2 / lambda_i) + 1 for the body");
  add_io(qvalues, true);
  auto* bhw = app.add_subcommand("verify-bhw", "Check count <= prod q_i on an ellipsoid instance");
  add_io(bhw, true);
  bhw->add_flag("--via-strong", opt.via_strong, "Route the check through the slicing replay");
  auto* translate = app.add_subcommand("translate", "Translate a sphere pack and certify all t >= 1");
  add_io(translate, true);
  translate->add_option("--t-samples", opt.t_samples, "Comma-separated rationals t >= 1");
  auto* strong = app.add_subcommand("verify-strong", "Replay the slicing induction with a full trace");
  add_io(strong, true);
  auto* diff = app.add_subcommand("oracle-diff", "Compare enumeration against the box oracle");
  add_io(diff, true);
  diff->add_option("--capacity", opt.capacity, "Largest oracle box to scan")->capture_default_str();
  auto* campaign = app.add_subcommand("campaign", "Seeded batch of random instances");
  add_io(campaign, false);
  campaign->add_option("--seed", opt.seed, "64-bit seed")->capture_default_str();
  campaign->add_option("--count", opt.count, "Number of instances")->capture_default_str();
  campaign->add_option("--dim", opt.dim, "Dimension D or range D1-D2")->capture_default_str();
  campaign->add_option("--mode", opt.mode, "theorem1, strong, translation or oracle-diff")->capture_default_str();
  campaign->add_option("--entry-bound", opt.entry_bound, "Bound on generated numerators and denominators")
      ->capture_default_str();
  campaign->add_option("--jobs", opt.jobs, "Worker threads")->capture_default_str();
  campaign->add_option("--t-samples", opt.t_samples, "Comma-separated rationals t >= 1 (translation mode)");
  campaign->add_option("--capacity", opt.capacity, "Largest oracle box to scan (oracle-diff mode)")
      ->capture_default_str();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "gon: " << e.what() << "\n";
    return exit_code(Status::invalid_input);
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    const Format format = parse_format(opt.format);
    if (sub == campaign) return run_campaign_command(opt, format, out);

    const io::Outcome outcome = io::guarded([&]() -> io::Outcome {
      const Instance inst = load_instance(opt.input);
      if (sub == count) return io::run_count(inst);
      if (sub == minima) return io::run_minima(inst);
      if (sub == qvalues) return io::run_qvalues(inst);
      if (sub == bhw) return io::run_verify_bhw(inst, opt.via_strong);
      if (sub == translate) return io::run_translate(inst, parse_t_samples(opt.t_samples));
      if (sub == strong) return io::run_verify_strong(inst);
      return io::run_oracle_diff(inst, opt.capacity);
    });
    return emit(name, outcome, format, out, err);
  } catch (const InvalidInput& e) {
    err << "gon " << name << ": " << e.what() << "\n";
    return exit_code(Status::invalid_input);
  } catch (const Error& e) {
    err << "gon " << name << ": " << e.what() << "\n";
    return exit_code(Status::verification_failure);
  }
}

}  // namespace gon
