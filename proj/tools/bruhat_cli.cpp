// SPDX-License-Identifier: Apache-2.0
// bruhat: build weighted Bruhat graphs, print Schubert polynomials and run
// the verification suites. Exit codes: 0 ok, 1 counterexample, 2 usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <bruhat/chains.hpp>
#include <bruhat/hasse.hpp>
#include <bruhat/operators.hpp>
#include <bruhat/polynomial.hpp>
#include <bruhat/schubert.hpp>
#include <bruhat/snf.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

namespace {

using namespace bruhat;

constexpr int kPathCap = 6;
constexpr int kOperatorCap = 5;
constexpr int kSnfExhaustiveCap = 4;
constexpr int kSnfSampledCap = 5;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 3;
  std::string order = "weak";
  std::string weights;
  std::optional<int> from;
  std::optional<int> to;
  std::string perm;
  std::string profile;
  std::string suite;
  std::string format = "json";
  int jobs = 1;
  bool padded = false;
  bool standard = false;
  bool specialize = false;
  bool uncapped = false;
};

void enforce_cap(const Options& opt, int cap, const std::string& what) {
  if (opt.n <= cap) return;
  if (!opt.uncapped) {
    throw UsageError(what + " is capped at n=" + std::to_string(cap) + "; pass --no-cap to override");
  }
  std::cerr << "warning: running " << what << " at n=" << opt.n << " beyond the default cap of " << cap
            << "\n";
}

std::string default_weights(Order order) { return order == Order::Weak ? "nabla" : "code"; }

std::string edge_table(const HasseDiagram& g) {
  std::string out = "source  target  weight\n";
  for (const auto& e : g.edges()) {
    out += g.vertex(e.source).to_string() + "  " + g.vertex(e.target).to_string() + "  " +
           to_decimal(e.weight) + "\n";
  }
  return out;
}

int cmd_hasse(const Options& opt) {
  enforce_cap(opt, kPathCap, "hasse");
  Order order;
  WeightSystem weights;
  try {
    order = parse_order(opt.order);
    weights = parse_weight_system(opt.weights.empty() ? default_weights(order) : opt.weights);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!compatible(order, weights)) {
    throw UsageError("weights '" + std::string(to_string(weights)) + "' do not apply to the " +
                     std::string(to_string(order)) + " order");
  }
  const HasseDiagram g = HasseDiagram::build(opt.n, order, weights);
  if (opt.format == "dot") {
    std::cout << to_dot(g);
  } else if (opt.format == "table") {
    std::cout << edge_table(g);
  } else {
    std::cout << to_json(g) << "\n";
  }
  return 0;
}

int cmd_schubert(const Options& opt) {
  Permutation w;
  try {
    w = Permutation::parse(opt.perm);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const IntPolynomial p = opt.standard ? schubert_standard(w) : schubert(w);
  std::string value;
  std::string key = "polynomial";
  if (opt.specialize) {
    value = to_decimal(principal_specialization(p));
    key = "value";
  } else {
    value = opt.padded ? pad(p).to_string() : p.to_string();
  }
  if (opt.format == "table") {
    std::cout << value << "\n";
    return 0;
  }
  nlohmann::ordered_json doc;
  doc["perm"] = w.to_string();
  doc["convention"] = opt.standard ? "standard" : "left";
  if (opt.padded && !opt.specialize) doc["padded"] = "true";
  doc[key] = value;
  std::cout << doc.dump(2) << "\n";
  return 0;
}

ChainProfile require_profile(const Options& opt) {
  if (opt.profile.empty()) throw UsageError("suite '" + opt.suite + "' needs --M");
  try {
    return ChainProfile::parse(opt.profile);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Report run_snf(const Options& opt) {
  if (opt.from || opt.to) {
    if (!opt.from || !opt.to) throw UsageError("--from and --to go together");
    enforce_cap(opt, kSnfSampledCap, "snf");
    try {
      return verify_snf_theorem(opt.n, *opt.from, *opt.to);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (opt.n <= kSnfExhaustiveCap || opt.uncapped) {
    enforce_cap(opt, kSnfExhaustiveCap, "exhaustive snf");
    return verify_snf_theorem_all(opt.n, opt.jobs);
  }
  enforce_cap(opt, kSnfSampledCap, "sampled snf");
  Report report("snf", opt.n);
  for (const auto& [lo, hi] : snf_sample_pairs(opt.n)) report.merge(verify_snf_theorem(opt.n, lo, hi));
  report.notes.push_back("sampled " + std::to_string(snf_sample_pairs(opt.n).size()) + " rank pairs");
  return report;
}

Report run_chains_snf(const Options& opt) {
  const ChainProfile m = require_profile(opt);
  if (!opt.from && !opt.to) return chains_snf_suite(m, opt.jobs);
  if (!opt.from || !opt.to) throw UsageError("--from and --to go together");
  try {
    return um_snf_check(m, *opt.from, *opt.to);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Report run_suite(const Options& opt) {
  const std::map<std::string, std::function<Report()>> suites = {
      {"nabla-action", [&] { enforce_cap(opt, kOperatorCap, "nabla-action"); return verify_nabla_theorem(opt.n, opt.jobs); }},
      {"delta-action", [&] { enforce_cap(opt, kOperatorCap, "delta-action"); return verify_delta_theorem(opt.n, opt.jobs); }},
      {"sl2", [&] { enforce_cap(opt, kOperatorCap, "sl2"); return commutator_report(opt.n); }},
      {"path-identities", [&] { enforce_cap(opt, kPathCap, "path-identities"); return verify_path_identities(opt.n, opt.jobs); }},
      {"macdonald", [&] { enforce_cap(opt, kPathCap, "macdonald"); return verify_macdonald(opt.n, opt.jobs); }},
      {"w0-symmetry", [&] { enforce_cap(opt, kPathCap, "w0-symmetry"); return verify_w0_symmetry(opt.n); }},
      {"top-paths", [&] { enforce_cap(opt, kPathCap, "top-paths"); return verify_top_path_counts(opt.n); }},
      {"snf", [&] { return run_snf(opt); }},
      {"chains-basis", [&] { return chains_basis_suite(require_profile(opt)); }},
      {"chains-snf", [&] { return run_chains_snf(opt); }},
      {"chains-det", [&] { return chains_det_suite(require_profile(opt)); }},
      {"chains-sl2", [&] { return chains_sl2_suite(require_profile(opt)); }},
  };
  const auto it = suites.find(opt.suite);
  if (it == suites.end()) throw UsageError("unknown suite '" + opt.suite + "'");
  if (opt.n < 1) throw UsageError("--n must be at least 1");
  return it->second();
}

int cmd_verify(const Options& opt) {
  const Report report = run_suite(opt);
  if (opt.format == "table") {
    std::cout << report.suite << ": checked " << report.checked << ", failures " << report.failures.size()
              << "\n";
    for (const auto& f : report.failures) {
      std::cout << "  " << f.witness << "  expected " << f.expected << "  actual " << f.actual << "\n";
    }
    for (const auto& note : report.notes) std::cout << "  note: " << note << "\n";
  } else {
    std::cout << report.to_json() << "\n";
  }
  return report.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted Bruhat graphs, Schubert polynomials and Smith forms"};
  app.require_subcommand(1);
  Options opt;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", opt.n, "Size of the symmetric group")->check(CLI::Range(1, 12));
    sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"dot", "json", "table"}));
    sub->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--no-cap", opt.uncapped, "Allow n beyond the default caps");
  };

  auto* hasse = app.add_subcommand("hasse", "Export a weighted Hasse diagram");
  add_common(hasse);
  hasse->add_option("--order", opt.order, "weak | strong");
  hasse->add_option("--weights", opt.weights, "nabla | code | chevalley | unit");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  add_common(verify);
  verify->add_option("--suite", opt.suite, "Suite name")->required();
  verify->add_option("--from", opt.from, "Lower rank");
  verify->add_option("--to", opt.to, "Upper rank");
  verify->add_option("--M", opt.profile, "Chain lengths, comma separated");

  auto* schub = app.add_subcommand("schubert", "Print a Schubert polynomial");
  schub->add_option("--perm", opt.perm, "One-line permutation, e.g. 132 or 1,3,2")->required();
  schub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));
  schub->add_flag("--padded", opt.padded, "Print the y-padded form");
  schub->add_flag("--standard-convention", opt.standard, "Use the right-action recursion");
  schub->add_flag("--specialize", opt.specialize, "Print the value at x = (1,...,1)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (hasse->parsed()) return cmd_hasse(opt);
    if (verify->parsed()) return cmd_verify(opt);
    return cmd_schubert(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
