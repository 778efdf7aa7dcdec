#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "singtuple/acceptance.h"
#include "singtuple/cohomology.h"
#include "singtuple/ed_degree.h"
#include "singtuple/eigensolver.h"
#include "singtuple/fiber.h"
#include "singtuple/harmonic.h"
#include "singtuple/tensor.h"
#include "singtuple/tensor_io.h"

namespace singtuple::cli {

using nlohmann::json;

namespace {

// Thrown for input problems the library itself does not see (bad flag
// combinations, wrong tensor kind).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr int kLargeSystemWarning = 24;

struct Common {
  bool pretty = false;
  bool timing = false;
  int threads = 0;
};

struct Result {
  Result() = default;
  Result(json b, int code = kExitOk, json t = nullptr)
      : body(std::move(b)), exit_code(code), timing(std::move(t)) {}

  json body;
  int exit_code = kExitOk;
  json timing;  // only reported with --timing, never checksummed
};

int default_threads() {
  if (const char* env = std::getenv("SINGTUPLE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
  }
  return 1;
}

json number_or_null(double v) {
  return std::isfinite(v) ? json(v) : json(nullptr);
}

void warn_if_large(const TensorFormat& format, std::ostream& err) {
  if (format.total_dim() > kLargeSystemWarning)
    err << "warning: sum of dims is " << format.total_dim()
        << "; the solver is meant for small formats and may be slow\n";
}

RationalTensor require_exact(const AnyTensor& t) {
  if (const auto* r = std::get_if<RationalTensor>(&t)) return *r;
  throw InputError("this command needs exact \"p/q\" coefficients");
}

std::optional<int> expected_kernel(const TensorFormat& format) {
  if (!validate_format(format).theorem_applicable) return std::nullopt;
  return format.all_degrees_even() ? 2 : 1;
}

json format_report_json(const TensorFormat& format) {
  const FormatReport rep = validate_format(format);
  json j = format_to_json(format);
  j["triangle_ok"] = rep.triangle_ok;
  j["theorem_applicable"] = rep.theorem_applicable;
  j["excluded_case"] = rep.excluded_case ? json(*rep.excluded_case) : json(nullptr);
  return j;
}

Result cmd_ed_degree(const std::vector<int>& degrees, const std::vector<int>& dims) {
  const TensorFormat format(degrees, dims);
  return {{{"format", format_to_json(format)}, {"ed_degree", ed_degree(format).get_str()}}};
}

Result cmd_validate(const std::vector<int>& degrees, const std::vector<int>& dims) {
  return {format_report_json(TensorFormat(degrees, dims))};
}

SolveResult solve_any(const AnyTensor& t, const SolveConfig& cfg) {
  return std::visit([&](const auto& x) { return solve_singular_tuples(x, cfg); }, t);
}

Result cmd_solve(const std::string& path, std::uint64_t seed, int max_restarts,
                 const Common& common, std::ostream& err) {
  const AnyTensor t = tensor_from_json(read_json_file(path));
  const TensorFormat& format = format_of(t);
  warn_if_large(format, err);
  SolveConfig cfg;
  cfg.seed = seed;
  cfg.threads = common.threads;
  if (max_restarts > 0) cfg.max_restarts = max_restarts;
  const SolveResult res = solve_any(t, cfg);
  json tuples = json::array();
  for (const auto& tuple : res.tuples) tuples.push_back(tuple_to_json(tuple));
  return {{{"format", format_to_json(format)},
           {"ed_degree", res.target.get_str()},
           {"complete", res.complete},
           {"restarts_used", res.restarts_used},
           {"tuples", tuples}}};
}

Result cmd_fiber_check(const std::string& path, std::optional<std::uint64_t> seed,
                       const std::string& tuples_path, const Common& common,
                       std::ostream& err) {
  const AnyTensor t = tensor_from_json(read_json_file(path));
  const TensorFormat& format = format_of(t);
  warn_if_large(format, err);
  const BigInt target = ed_degree(format);

  std::vector<SingularTuple> tuples;
  bool complete = false;
  if (!tuples_path.empty()) {
    tuples = tuples_from_json(read_json_file(tuples_path), format);
    complete = BigInt(tuples.size()) == target;
  } else {
    if (!seed) throw InputError("fiber-check needs --seed or --tuples");
    SolveConfig cfg;
    cfg.seed = *seed;
    cfg.threads = common.threads;
    const SolveResult res = solve_any(t, cfg);
    tuples = res.tuples;
    complete = res.complete;
  }

  json body = {{"format", format_report_json(format)},
               {"ed_degree", target.get_str()},
               {"num_points", tuples.size()},
               {"complete", complete}};
  const std::optional<int> expected = expected_kernel(format);
  body["expected_kernel_dimension"] = expected ? json(*expected) : json(nullptr);
  if (tuples.empty()) {
    body["verdict"] = "inconclusive";
    return {body};
  }

  const FiberReport rep = fiber_dimension(format, tuples);
  const Eigen::VectorXcd self =
      std::visit([](const auto& x) { return x.coefficient_vector(); }, t);
  const double self_residual = kernel_projection_residual(rep, self);
  body["rows"] = rep.rows;
  body["cols"] = rep.cols;
  body["singular_values"] = rep.singular_values;
  body["numerical_rank"] = rep.numerical_rank;
  body["gap_ratio"] = number_or_null(rep.gap_ratio);
  body["rank_ambiguous"] = rep.rank_ambiguous;
  body["kernel_dimension"] = rep.kernel_dimension();
  body["input_residual"] = self_residual;
  body["q_membership"] = {{"computed", rep.q_membership.computed},
                          {"claimed", rep.q_membership.claimed},
                          {"residual", rep.q_membership.residual}};
  json basis = json::array();
  for (const auto& b : rep.kernel_basis) basis.push_back(tensor_to_json(b));
  body["kernel_basis"] = basis;

  std::string verdict;
  int code = kExitOk;
  if (!expected) {
    verdict = "not_applicable";
  } else if (!complete || rep.rank_ambiguous) {
    verdict = "inconclusive";
  } else if (rep.kernel_dimension() != *expected || self_residual >= kMembershipTol ||
             (format.all_degrees_even() && !rep.q_membership.claimed)) {
    verdict = "violation";
    code = kExitViolation;
  } else {
    verdict = "consistent";
  }
  body["verdict"] = verdict;
  return {body, code};
}

Result cmd_harmonic(const std::string& path) {
  const RationalTensor t = require_exact(tensor_from_json(read_json_file(path)));
  if (t.format().k() != 1) throw InputError("harmonic needs a single-block tensor");
  const int d = t.format().degrees[0];
  const HarmonicDecomposition dec = harmonic_decompose(t.polynomial(), d);
  json comps = json::array();
  std::optional<Rational> c;
  if (d % 2 == 0) c = Rational(0);
  for (const auto& [j, h] : dec.components) {
    comps.push_back({{"j", j}, {"degree", d - 2 * j}, {"h", h.to_string()}});
    if (2 * j == d) c = h.coefficient_of(Exponent(dec.num_vars, 0));
  }
  return {{{"format", format_to_json(t.format())},
           {"degree", d},
           {"components", comps},
           {"kernel_component", c ? json(c->get_str()) : json(nullptr)}}};
}

Result cmd_bott(const std::string& family, int m, int r, int t) {
  BundleDescriptor b;
  if (family == "line") b = BundleDescriptor::line(m, t);
  else if (family == "cotangent") b = BundleDescriptor::cotangent(m, r, t);
  else if (family == "wedgeqq") b = BundleDescriptor::wedge_q_tensor_q(m, r, t);
  else throw InputError("unknown family " + family);
  json summands = json::array();
  for (const Weight& w : irreducible_summands(b)) {
    const auto idx = bott_index(w);
    summands.push_back({{"weight", w},
                        {"pairings", root_pairings(w)},
                        {"index", idx ? json(*idx) : json(nullptr)}});
  }
  const CohomologySupport s = bott_support(b);
  return {{{"bundle", b.to_string()},
           {"family", family},
           {"m", b.m},
           {"r", b.r},
           {"t", b.t},
           {"summands", summands},
           {"support", std::vector<int>(s.begin(), s.end())}}};
}

Result cmd_vanishing(const std::vector<int>& degrees, const std::vector<int>& dims) {
  const TensorFormat format(degrees, dims);
  const VanishingReport rep = vanishing_scan(format);
  json witnesses = json::array();
  for (const auto& w : rep.witnesses)
    witnesses.push_back({{"r", w.r},
                         {"slot", w.slot},
                         {"composition", w.composition},
                         {"degrees", w.degrees}});
  json body = format_report_json(format);
  body["all_clear"] = rep.all_clear;
  body["witnesses"] = witnesses;
  const bool violation = validate_format(format).theorem_applicable && !rep.all_clear;
  return {body, violation ? kExitViolation : kExitOk};
}

Result cmd_reproduce(std::uint64_t seed, const std::vector<int>& only,
                     const Common& common) {
  AcceptanceOptions opts;
  opts.seed = seed;
  opts.threads = common.threads;
  for (int id : only) {
    if (id < 1 || id > kNumCriteria) throw InputError("no criterion " + std::to_string(id));
    opts.only.insert(id);
  }
  json criteria = json::array();
  json seconds = json::object();
  bool all = true;
  for (const auto& r : run_acceptance(opts)) {
    criteria.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed},
                        {"detail", r.detail}, {"limit_seconds", r.limit_seconds}});
    seconds[std::to_string(r.id)] = r.seconds;
    all = all && r.passed;
  }
  return {{{"criteria", criteria}, {"all_passed", all}},
          all ? kExitOk : kExitViolation,
          {{"criteria_seconds", seconds}}};
}

// One "path: value" line per leaf.
void render_pretty(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [k, v] : j.items())
      render_pretty(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array() && !j.empty() &&
             std::any_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i)
      render_pretty(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Singular tuples of multisymmetric tensors", "singtuple"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  app.set_version_flag("--version", SINGTUPLE_VERSION);

  Common common;
  common.threads = default_threads();
  app.add_flag("--pretty", common.pretty, "Print a plain key/value listing instead of JSON");
  app.add_flag("--timing", common.timing, "Record wall-clock time in the manifest");
  app.add_option("--threads", common.threads, "Worker thread cap")
      ->check(CLI::Range(1, 1024));

  std::vector<int> degrees, dims, only;
  std::string tensor_path, tuples_path, family;
  std::uint64_t seed = 0;
  int max_restarts = 0, bm = 1, br = 0, bt = 0;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--degrees", degrees, "Comma-separated d_1,...,d_k")
        ->required()->delimiter(',');
    sub->add_option("--dims", dims, "Comma-separated m_1,...,m_k")
        ->required()->delimiter(',');
  };
  auto* ed = app.add_subcommand("ed-degree", "Number of singular tuples of a general tensor");
  add_format(ed);
  auto* validate = app.add_subcommand("validate-format", "Check the format hypotheses");
  add_format(validate);
  auto* solve = app.add_subcommand("solve", "Numerical singular tuples of a tensor");
  solve->add_option("--tensor", tensor_path, "Tensor JSON file")->required();
  solve->add_option("--seed", seed, "Random seed")->required();
  solve->add_option("--max-restarts", max_restarts, "Restart budget (0 = automatic)")
      ->check(CLI::NonNegativeNumber);
  auto* fiber = app.add_subcommand("fiber-check", "Tensors sharing the singular tuples");
  fiber->add_option("--tensor", tensor_path, "Tensor JSON file")->required();
  auto* fiber_seed = fiber->add_option("--seed", seed, "Random seed for the solver");
  fiber->add_option("--tuples", tuples_path, "Use these tuples instead of solving");
  auto* harmonic = app.add_subcommand("harmonic", "Harmonic decomposition of a form");
  harmonic->add_option("--tensor", tensor_path, "Exact single-block tensor JSON")->required();
  auto* bott = app.add_subcommand("bott", "Cohomology support of a homogeneous bundle");
  bott->add_option("--family", family, "line, cotangent or wedgeqq")
      ->required()->check(CLI::IsMember({"line", "cotangent", "wedgeqq"}));
  bott->add_option("--m", bm, "Projective dimension")->required();
  bott->add_option("--r", br, "Wedge index (ignored for line bundles)");
  bott->add_option("--t", bt, "Twist")->required();
  auto* scan = app.add_subcommand("vanishing-scan", "Koszul cohomology vanishing scan");
  add_format(scan);
  auto* repro = app.add_subcommand("reproduce-paper", "Run the acceptance battery");
  repro->add_option("--seed", seed, "Random seed")->required();
  repro->add_option("--only", only, "Comma-separated criterion ids")->delimiter(',');

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  const auto start = std::chrono::steady_clock::now();
  Result result;
  std::optional<std::uint64_t> used_seed;
  std::string command;
  try {
    if (ed->parsed()) {
      command = "ed-degree";
      result = cmd_ed_degree(degrees, dims);
    } else if (validate->parsed()) {
      command = "validate-format";
      result = cmd_validate(degrees, dims);
    } else if (solve->parsed()) {
      command = "solve";
      used_seed = seed;
      result = cmd_solve(tensor_path, seed, max_restarts, common, err);
    } else if (fiber->parsed()) {
      command = "fiber-check";
      if (fiber_seed->count()) used_seed = seed;
      result = cmd_fiber_check(tensor_path, used_seed, tuples_path, common, err);
    } else if (harmonic->parsed()) {
      command = "harmonic";
      result = cmd_harmonic(tensor_path);
    } else if (bott->parsed()) {
      command = "bott";
      result = cmd_bott(family, bm, br, bt);
    } else if (scan->parsed()) {
      command = "vanishing-scan";
      result = cmd_vanishing(degrees, dims);
    } else if (repro->parsed()) {
      command = "reproduce-paper";
      used_seed = seed;
      result = cmd_reproduce(seed, only, common);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::runtime_error& e) {  // I/O, InputError
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const json::exception& e) {
    err << "error: malformed JSON input: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }

  json manifest = {{"command", command},
                   {"argv", args},
                   {"seed", used_seed ? json(*used_seed) : json(nullptr)},
                   {"version", SINGTUPLE_VERSION},
                   {"checksum", fnv1a_hex(result.body.dump())}};
  if (common.timing) {
    manifest["wall_clock_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (result.timing.is_object())
      for (const auto& [k, v] : result.timing.items()) manifest[k] = v;
  }
  json doc = result.body;
  doc["manifest"] = manifest;
  if (common.pretty) render_pretty(doc, "", out);
  else out << doc.dump() << '\n';
  return result.exit_code;
}

}  // namespace singtuple::cli
