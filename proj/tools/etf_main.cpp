// Command-line front end: construct reference frames, analyze frame files,
// emit signature matrices, search symmetries, and run the roux detector.
// Exit codes: 0 success / all checks passed, 1 a requested check failed,
// 2 usage or parameter error, 3 I/O or malformed input.

#include "etf/gabor.hpp"
#include "etf/json_io.hpp"
#include "etf/roux.hpp"
#include "etf/signature.hpp"
#include "etf/symmetry.hpp"
#include "etf/triples.hpp"
#include "etf/version.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace etf;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(clock::now() - start_).count();
  }

 private:
  using clock = std::chrono::steady_clock;
  clock::time_point start_ = clock::now();
};

void emit(const Json& payload, const std::string& out_path) {
  const std::string text = payload.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(out_path, text);
  }
}

Frame load_frame(const std::string& path) {
  const std::string text = read_text_file(path);
  return frame_from_json(Json::parse(text));
}

Backend backend_from_flag(const std::string& name) {
  if (name == "exact") return Backend::kExact;
  if (name == "float") return Backend::kFloat;
  throw CLI::ValidationError("--backend must be 'exact' or 'float'");
}

Json error_check(const std::string& name, const Error& e) {
  return Json{{"name", name},
              {"pass", false},
              {"error", error_code_name(e.code())},
              {"details", e.what()}};
}

struct AnalyzeOptions {
  std::vector<std::string> checks{"etf"};
  double tol = 1e-9;
  std::uint64_t seed = CocycleOptions{}.seed;
  long long max_nodes = SearchLimits{}.max_nodes;
  bool timings = false;
};

// Runs the requested checks and fills the report; returns true when every
// requested check passed.
bool run_checks(const Frame& frame, const AnalyzeOptions& options, Json* report) {
  Json checks = Json::array();
  bool all_pass = true;
  const auto push = [&](Json check) {
    all_pass = all_pass && check.at("pass").get<bool>();
    checks.push_back(std::move(check));
  };

  Json timings = Json::object();
  for (const std::string& name : options.checks) {
    Stopwatch watch;
    if (name == "etf") {
      const EtfVerdict v = verify_etf(frame, options.tol);
      Json check = verdict_to_json(v);
      check["name"] = "etf";
      check["pass"] = v.is_etf() && v.saturates_welch && v.gerzon_ok;
      push(std::move(check));
    } else if (name == "signature") {
      try {
        const SignatureMatrix s = signature_of(frame);
        const SignatureAxiomsReport axioms = check_signature_axioms(s, frame.dim);
        Json check = axioms_to_json(axioms);
        check["name"] = "signature";
        push(std::move(check));
      } catch (const Error& e) {
        push(error_check("signature", e));
      }
    } else if (name == "triples") {
      try {
        push(check_to_json(sum_identity_check(frame, options.tol)));
      } catch (const Error& e) {
        push(error_check("sum-identity", e));
      }
      try {
        CocycleOptions cocycle;
        cocycle.seed = options.seed;
        cocycle.tol = options.tol;
        push(check_to_json(cocycle_identity_check(frame, cocycle)));
      } catch (const Error& e) {
        push(error_check("cocycle-identity", e));
      }
      (*report)["simplex"] = simplex_test(frame, options.tol);
    } else if (name == "covariance") {
      Json check;
      try {
        const CheckReport obstruction = triple_covariance_obstruction(frame, options.tol);
        check = check_to_json(obstruction);
        check["name"] = "covariance";
        if (frame.count > frame.dim) {
          const CheckReport phase = two_transitive_phase_test(frame, options.tol);
          check["phase_2n_roots"] = check_to_json(phase);
        }
        SearchLimits limits;
        limits.max_nodes = options.max_nodes;
        const PermGroup group = tp_automorphisms(frame, limits);
        Json verdicts = Json::object();
        for (int k = 1; k <= 3; ++k) {
          verdicts[std::to_string(k)] =
              k <= frame.count && k_transitive(group, frame.count, k);
        }
        check["group_order"] = group.order();
        check["k_covariant"] = std::move(verdicts);
        if (check.contains("phase_2n_roots") && check["k_covariant"]["2"].get<bool>() &&
            !check["phase_2n_roots"].at("pass").get<bool>()) {
          check["pass"] = false;  // doubly transitive yet phases off: inconsistent
        }
      } catch (const Error& e) {
        if (check.is_null()) check = Json::object();
        check["name"] = "covariance";
        check["pass"] = false;
        check["error"] = error_code_name(e.code());
        check["details"] = e.what();
      }
      push(std::move(check));
    } else if (name == "roux") {
      try {
        const SignatureMatrix s = signature_of(frame);
        const auto [normalized, diag] = normalize_signature(s);
        const RouxReport roux = roux_detect(normalized, RouxOptions{.tol = 1e-8});
        Json check = roux_to_json(roux);
        check["name"] = "roux";
        check["pass"] = roux.is_roux;
        push(std::move(check));
      } catch (const Error& e) {
        push(error_check("roux", e));
      }
    } else {
      throw CLI::ValidationError("unknown check: " + name);
    }
    timings[name] = watch.elapsed_ms();
  }

  (*report)["checks"] = std::move(checks);
  if (options.timings) (*report)["timings"] = std::move(timings);
  return all_pass;
}

Json frame_summary(const Frame& frame, double tol) {
  const EtfVerdict v = verify_etf(frame, tol);
  return Json{{"n", frame.count},
              {"d", frame.dim},
              {"coherence", v.coherence},
              {"welch_bound", v.welch_bound}};
}

int cmd_analyze(const std::string& path, const AnalyzeOptions& options,
                const std::string& out_path) {
  Frame frame;
  std::string bytes;
  try {
    bytes = read_text_file(path);
    frame = frame_from_json(Json::parse(bytes));
  } catch (const Json::exception& e) {
    std::cerr << "error: malformed frame file: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }

  Json report{{"tool_version", kToolVersion}, {"input_digest", fnv1a64_hex(bytes)}};
  report["frame"] = frame_summary(frame, options.tol);
  const bool pass = run_checks(frame, options, &report);
  report["pass"] = pass;
  emit(report, out_path);
  return pass ? kExitOk : kExitCheckFailed;
}

int cmd_report(const Frame& frame, const AnalyzeOptions& options,
               const std::string& out_path) {
  AnalyzeOptions all = options;
  all.checks = {"etf", "signature", "triples", "covariance", "roux"};
  const std::string canonical = frame_to_json(frame).dump();
  Json report{{"tool_version", kToolVersion}, {"input_digest", fnv1a64_hex(canonical)}};
  report["frame"] = frame_summary(frame, all.tol);
  const bool pass = run_checks(frame, all, &report);
  report["pass"] = pass;
  emit(report, out_path);
  return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gabor-Steiner equiangular tight frames: construction, verification, "
               "signature matrices, symmetry, and roux-lines detection"};
  app.require_subcommand(1);
  app.set_version_flag("--version", etf::kToolVersion);

  std::string out_path;

  // construct
  auto* construct = app.add_subcommand("construct", "construct a frame and write it as JSON");
  construct->require_subcommand(1);
  construct->fallthrough();
  std::string shape_arg;
  int dim_arg = 1;
  auto* construct_gabor = construct->add_subcommand("gabor", "Gabor-Steiner orbit G(m)");
  construct_gabor->fallthrough();
  construct_gabor->add_option("--m", shape_arg, "comma-separated odd integers >= 3")
      ->required();
  auto* construct_onb = construct->add_subcommand("onb", "standard orthonormal basis");
  construct_onb->fallthrough();
  construct_onb->add_option("--d", dim_arg, "dimension")->required();
  auto* construct_simplex = construct->add_subcommand("simplex", "d+1 vectors in dimension d");
  construct_simplex->fallthrough();
  construct_simplex->add_option("--d", dim_arg, "dimension")->required();
  construct->add_option("--out", out_path, "output path (default: stdout)");

  // analyze
  auto* analyze = app.add_subcommand("analyze", "run checks against a frame file");
  std::string frame_path;
  AnalyzeOptions analyze_options;
  analyze->add_option("frame", frame_path, "frame JSON file")->required();
  analyze->add_option("--checks", analyze_options.checks,
                      "subset of etf,signature,triples,covariance,roux")
      ->delimiter(',');
  analyze->add_option("--tol", analyze_options.tol, "tolerance for identity checks");
  analyze->add_option("--seed", analyze_options.seed, "seed for sampled checks");
  analyze->add_option("--max-nodes", analyze_options.max_nodes, "symmetry search budget");
  analyze->add_flag("--timings", analyze_options.timings, "include timings (not byte-stable)");
  analyze->add_option("--out", out_path, "output path (default: stdout)");

  // signature
  auto* signature = app.add_subcommand("signature", "emit a signature matrix S or S-bar");
  std::string signature_frame;
  std::string signature_shape;
  bool want_normalized = false;
  std::string backend_flag = "exact";
  signature->add_option("frame", signature_frame, "frame JSON file");
  signature->add_option("--m", signature_shape,
                        "emit the closed-form normalized signature of G(m) instead");
  signature->add_flag("--normalized", want_normalized, "switch to normalized form");
  signature->add_option("--backend", backend_flag, "exact|float (with --m)");
  signature->add_option("--out", out_path, "output path (default: stdout)");

  // symmetry
  auto* symmetry = app.add_subcommand("symmetry", "triple-product symmetry group");
  std::string symmetry_frame;
  int k_arg = 2;
  long long max_nodes = SearchLimits{}.max_nodes;
  bool with_antiunitary = false;
  symmetry->add_option("frame", symmetry_frame, "frame JSON file")->required();
  symmetry->add_option("--k", k_arg, "transitivity degree to decide");
  symmetry->add_option("--max-nodes", max_nodes, "search node budget");
  symmetry->add_flag("--antiunitary", with_antiunitary,
                     "also list triple-product-conjugating permutations");
  symmetry->add_option("--out", out_path, "output path (default: stdout)");

  // roux
  auto* roux = app.add_subcommand("roux", "roux-lines detector / theorem harness");
  std::string roux_signature_path;
  std::string roux_shape;
  long p_arg = 0;
  int s_arg = 0;
  long r_max = 0;
  double roux_tol = 1e-8;
  roux->add_option("signature", roux_signature_path, "normalized signature JSON file");
  roux->add_option("--m", roux_shape, "run the detector on closed_form_normalized(m)");
  roux->add_option("--p", p_arg, "odd prime: run the theorem harness on G(p,...,p)");
  roux->add_option("--s", s_arg, "number of extra p factors (with --p)");
  roux->add_option("--backend", backend_flag, "exact|float");
  roux->add_option("--r-max", r_max, "bound for the root-of-unity order search");
  roux->add_option("--tol", roux_tol, "tolerance (float backend)");
  roux->add_option("--out", out_path, "output path (default: stdout)");

  // report
  auto* report = app.add_subcommand("report", "construct a frame and run every check");
  std::string report_shape;
  std::string report_kind = "gabor";
  int report_dim = 1;
  AnalyzeOptions report_options;
  report->add_option("--m", report_shape, "Gabor-Steiner shape (kind=gabor)");
  report->add_option("--kind", report_kind, "gabor|onb|simplex");
  report->add_option("--d", report_dim, "dimension (kind=onb|simplex)");
  report->add_option("--tol", report_options.tol, "tolerance for identity checks");
  report->add_option("--seed", report_options.seed, "seed for sampled checks");
  report->add_option("--max-nodes", report_options.max_nodes, "symmetry search budget");
  report->add_flag("--timings", report_options.timings, "include timings (not byte-stable)");
  report->add_option("--out", out_path, "output path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
        e.get_name() == "CallForVersion") {
      return app.exit(e);
    }
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (construct->parsed()) {
      Frame frame;
      if (construct_gabor->parsed()) {
        frame = gabor_steiner(GroupShape::parse(shape_arg));
      } else if (construct_onb->parsed()) {
        frame = onb(dim_arg);
      } else {
        frame = simplex(dim_arg);
      }
      emit(frame_to_json(frame), out_path);
      return kExitOk;
    }

    if (analyze->parsed()) {
      return cmd_analyze(frame_path, analyze_options, out_path);
    }

    if (signature->parsed()) {
      SignatureMatrix s;
      if (!signature_shape.empty()) {
        s = closed_form_normalized(GroupShape::parse(signature_shape));
        if (backend_from_flag(backend_flag) == Backend::kFloat) {
          s.entries = CMatrix(s.entries.to_floating());
        }
      } else if (!signature_frame.empty()) {
        s = signature_of(load_frame(signature_frame));
        if (want_normalized) s = normalize_signature(s).first;
      } else {
        std::cerr << "usage error: signature needs a frame file or --m\n";
        return kExitUsage;
      }
      emit(signature_to_json(s), out_path);
      return kExitOk;
    }

    if (symmetry->parsed()) {
      const Frame frame = load_frame(symmetry_frame);
      SearchLimits limits;
      limits.max_nodes = max_nodes;
      limits.include_antiunitary = with_antiunitary;
      const PermGroup group = tp_automorphisms(frame, limits);
      Json payload = group_to_json(group);
      payload["k"] = k_arg;
      const bool transitive = k_transitive(group, frame.count, k_arg);
      payload["k_transitive"] = transitive;
      emit(payload, out_path);
      return transitive ? kExitOk : kExitCheckFailed;
    }

    if (roux->parsed()) {
      const Backend backend = backend_from_flag(backend_flag);
      if (p_arg > 0) {
        const RouxHarnessReport harness = roux_theorem_harness(p_arg, s_arg, backend);
        emit(roux_harness_to_json(harness), out_path);
        return harness.pass() ? kExitOk : kExitCheckFailed;
      }
      SignatureMatrix s;
      if (!roux_shape.empty()) {
        s = closed_form_normalized(GroupShape::parse(roux_shape));
        if (backend == Backend::kFloat) s.entries = CMatrix(s.entries.to_floating());
      } else if (!roux_signature_path.empty()) {
        s = signature_from_json(Json::parse(read_text_file(roux_signature_path)));
      } else {
        std::cerr << "usage error: roux needs a signature file, --m, or --p\n";
        return kExitUsage;
      }
      RouxOptions options;
      options.tol = roux_tol;
      if (r_max > 0) options.r_max = r_max;
      const RouxReport result = roux_detect(s, options);
      emit(roux_to_json(result), out_path);
      return result.is_roux ? kExitOk : kExitCheckFailed;
    }

    if (report->parsed()) {
      Frame frame;
      if (report_kind == "gabor") {
        if (report_shape.empty()) {
          std::cerr << "usage error: report --kind gabor needs --m\n";
          return kExitUsage;
        }
        frame = gabor_steiner(GroupShape::parse(report_shape));
      } else if (report_kind == "onb") {
        frame = onb(report_dim);
      } else if (report_kind == "simplex") {
        frame = simplex(report_dim);
      } else {
        std::cerr << "usage error: unknown kind: " << report_kind << "\n";
        return kExitUsage;
      }
      return cmd_report(frame, report_options, out_path);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const etf::Json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::kInvalidArgument:
      case ErrorCode::kIndexOutOfRange:
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
      default:
        std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
        return kExitCheckFailed;
    }
  }

  return kExitUsage;
}
