#include "minkarr/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "minkarr/io.hpp"

namespace minkarr::cli {

namespace {

using io::json;

// Thrown for bad flags or unreadable inputs; maps to exit code 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_all(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << content;
}

std::vector<double> parse_numbers(const std::string& text, char sep, const std::string& flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    char* end = nullptr;
    const double v = std::strtod(item.c_str(), &end);
    if (item.empty() || end != item.c_str() + item.size() || !std::isfinite(v)) {
      throw UsageError(flag + ": malformed number '" + item + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw UsageError(flag + ": no numbers given");
  return values;
}

// "x1,y1;x2,y2;..."
std::vector<Point> parse_vertices(const std::string& text) {
  std::vector<Point> vs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    std::vector<double> xy = parse_numbers(item, ',', "--vertices");
    if (xy.size() != 2) throw UsageError("--vertices: each vertex needs two coordinates");
    vs.emplace_back(std::move(xy));
  }
  return vs;
}

NormBody body_from_flags(const std::string& norm, std::size_t dim, const std::string& vertices) {
  if (norm == "euclidean") return NormBody::euclidean(dim);
  if (norm == "linf") return NormBody::linf(dim);
  if (norm == "polygon") {
    if (dim != 2) throw UsageError("--norm polygon requires dimension 2");
    if (vertices.empty()) throw UsageError("--norm polygon requires --vertices");
    return NormBody::polygon(parse_vertices(vertices));
  }
  throw UsageError("--norm: expected euclidean, linf or polygon");
}

struct TolFlags {
  double abs_eps = 1e-9;
  double rel_eps = 1e-9;

  void add_to(CLI::App* app) {
    app->add_option("--tol-abs", abs_eps, "Absolute containment tolerance")->capture_default_str();
    app->add_option("--tol-rel", rel_eps, "Relative containment tolerance")->capture_default_str();
  }

  TolerancePolicy policy() const {
    TolerancePolicy tol{abs_eps, rel_eps};
    try {
      tol.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return tol;
  }
};

int cmd_verify(const std::string& input, const std::string& depth_flag, const TolerancePolicy& tol,
               std::istream& in, std::ostream& out, std::ostream& err) {
  const Instance inst = io::parse_instance(read_all(input, in));

  std::size_t depth_bound = 0;
  if (depth_flag == "auto") {
    depth_bound = default_depth_bound(inst.body());
  } else {
    char* end = nullptr;
    const long long v = std::strtoll(depth_flag.c_str(), &end, 10);
    if (depth_flag.empty() || end != depth_flag.c_str() + depth_flag.size() || v < 1) {
      throw UsageError("--depth-bound: expected 'auto' or a positive integer");
    }
    depth_bound = static_cast<std::size_t>(v);
  }

  const HypothesisReport hyp = check_hypothesis(inst, tol);
  const double ratio = global_ratio(inst);
  const double bound = inst.lambda() / static_cast<double>(depth_bound);

  json report = {{"hypothesis", io::to_json(hyp)},
                 {"certificate", nullptr},
                 {"depth_bound", depth_bound},
                 {"global_ratio", ratio},
                 {"bound", bound},
                 {"verdict", ratio >= bound - 1e-12 ? "bound_holds" : "bound_fails"}};

  int code = kOk;
  try {
    const Certificate cert = make_certificate(inst, depth_bound, tol);
    const VerificationResult check = verify_certificate(inst, cert, tol);
    report["certificate"] = io::to_json(cert);
    report["certificate_verified"] = check.ok;
    report["status"] = "ok";
    if (!check.ok) {
      report["status"] = "certificate_rejected";
      report["reasons"] = check.reasons;
      code = kBoundMisconfigured;
    } else if (report["verdict"] != "bound_holds") {
      report["status"] = "bound_fails";
      code = kBoundMisconfigured;
    }
  } catch (const CertificateError& e) {
    const bool hyp_fail = e.failure() == CertificateFailure::HypothesisNotSatisfied;
    report["status"] = hyp_fail ? "hypothesis_fails" : "depth_bound_exceeded";
    report["reasons"] = json::array({e.what()});
    err << "minkarr verify: " << e.what() << "\n";
    code = hyp_fail ? kHypothesisFails : kBoundMisconfigured;
  }
  out << report.dump(2) << "\n";
  return code;
}

int cmd_cover(const std::string& input, const std::string& svg_path, const TolerancePolicy& tol, std::istream& in,
              std::ostream& out) {
  const Instance inst = io::parse_instance(read_all(input, in));
  if (!svg_path.empty() && inst.body().dim() != 2) throw UsageError("--svg requires a planar (dim 2) instance");
  const CoverResult cover = greedy_cover(inst.red_family(), tol);
  if (!svg_path.empty()) write_file(svg_path, io::render_svg(inst, cover.selected_indices));
  out << io::to_json(cover).dump(2) << "\n";
  return kOk;
}

int cmd_depth(const std::string& input, const std::string& probe_text, const TolerancePolicy& tol, std::istream& in,
              std::ostream& out) {
  const Instance inst = io::parse_instance(read_all(input, in));
  std::vector<double> coords = parse_numbers(probe_text, ',', "--probe");
  if (coords.size() != inst.body().dim()) {
    throw UsageError("--probe: expected " + std::to_string(inst.body().dim()) + " coordinates");
  }
  out << io::to_json(depth(inst.red_family(), Point(std::move(coords)), tol)).dump(2) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strict homothet covers, depth queries and density certificates", "minkarr"};
  app.require_subcommand(1);

  TolFlags tol_flags;

  std::string verify_input;
  std::string depth_bound = "auto";
  auto* verify = app.add_subcommand("verify", "Check the local hypothesis and certify |B|/|R| >= lambda/M");
  verify->add_option("input", verify_input, "Instance JSON file ('-' for stdin)")->required();
  verify->add_option("--depth-bound", depth_bound, "Depth bound M: 'auto' or a positive integer")->capture_default_str();
  tol_flags.add_to(verify);

  std::string cover_input;
  std::string svg_path;
  auto* cover = app.add_subcommand("cover", "Greedy strict cover of the red points");
  cover->add_option("input", cover_input, "Instance JSON file ('-' for stdin)")->required();
  cover->add_option("--svg", svg_path, "Also draw the instance and cover as SVG");
  tol_flags.add_to(cover);

  std::string depth_input;
  std::string probe;
  auto* depth_cmd = app.add_subcommand("depth", "Number of red homothets containing a probe point");
  depth_cmd->add_option("input", depth_input, "Instance JSON file ('-' for stdin)")->required();
  depth_cmd->add_option("--probe", probe, "Probe coordinates, comma separated")->required();
  tol_flags.add_to(depth_cmd);

  auto* generate = app.add_subcommand("generate", "Emit an instance JSON document");
  generate->require_subcommand(1);
  auto* gen_pentagon = generate->add_subcommand("pentagon", "Tight Euclidean instance, ratio 1/5");

  std::size_t cube_dim = 2;
  auto* gen_cube = generate->add_subcommand("hypercube", "Tight cube instance, ratio 1/2^d");
  gen_cube->add_option("--d", cube_dim, "Dimension (1..10)")->required();

  double cx_lambda = 1.0;
  double cx_eps = 0.5;
  std::size_t cx_n = 10;
  std::string cx_norm = "euclidean";
  std::string cx_vertices;
  std::string cx_witnesses;
  auto* gen_cx = generate->add_subcommand("counterexample", "Instance with small |B|/|R| but rich witness translates");
  gen_cx->add_option("--lambda", cx_lambda, "Local ratio per witness")->required();
  gen_cx->add_option("--eps", cx_eps, "Target bound on |B|/|R|")->required();
  gen_cx->add_option("--n", cx_n, "Number of red points")->required();
  gen_cx->add_option("--norm", cx_norm, "euclidean, linf or polygon")->capture_default_str();
  gen_cx->add_option("--vertices", cx_vertices, "Polygon vertices 'x,y;x,y;...' (counterclockwise)");
  gen_cx->add_option("--witnesses", cx_witnesses, "Write the witness translates as JSON to this path");

  RandomSpec rspec;
  std::string r_norm = "euclidean";
  std::string r_vertices;
  auto* gen_random_cmd = generate->add_subcommand("random", "Random instance satisfying the local hypothesis");
  gen_random_cmd->add_option("--seed", rspec.seed, "Seed")->required();
  gen_random_cmd->add_option("--n", rspec.n_red, "Number of red points")->required();
  gen_random_cmd->add_option("--dim", rspec.dim, "Dimension")->capture_default_str();
  gen_random_cmd->add_option("--norm", r_norm, "euclidean, linf or polygon")->capture_default_str();
  gen_random_cmd->add_option("--vertices", r_vertices, "Polygon vertices 'x,y;x,y;...'");
  gen_random_cmd->add_option("--rmin", rspec.radius_lo, "Smallest radius")->capture_default_str();
  gen_random_cmd->add_option("--rmax", rspec.radius_hi, "Largest radius")->capture_default_str();
  gen_random_cmd->add_option("--box", rspec.box_side, "Side of the sampling box")->capture_default_str();
  gen_random_cmd->add_option("--lambda", rspec.lambda, "Local ratio")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_input, depth_bound, tol_flags.policy(), in, out, err);
    if (cover->parsed()) return cmd_cover(cover_input, svg_path, tol_flags.policy(), in, out);
    if (depth_cmd->parsed()) return cmd_depth(depth_input, probe, tol_flags.policy(), in, out);

    if (gen_pentagon->parsed()) {
      out << io::serialize_instance(gen_pentagon_tight());
    } else if (gen_cube->parsed()) {
      out << io::serialize_instance(gen_hypercube_tight(cube_dim));
    } else if (gen_cx->parsed()) {
      const Counterexample cx = gen_counterexample(body_from_flags(cx_norm, 2, cx_vertices), cx_lambda, cx_eps, cx_n);
      if (!cx_witnesses.empty()) write_file(cx_witnesses, io::witnesses_to_json(cx).dump(2) + "\n");
      out << io::serialize_instance(cx.instance);
    } else if (gen_random_cmd->parsed()) {
      const NormBody body = body_from_flags(r_norm, rspec.dim, r_vertices);
      rspec.kind = body.kind();
      rspec.polygon_vertices = body.vertices();
      out << io::serialize_instance(gen_random(rspec));
    }
    return kOk;
  } catch (const io::FormatError& e) {
    err << "minkarr: malformed instance: " << e.what() << "\n";
  } catch (const UsageError& e) {
    err << "minkarr: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "minkarr: " << e.what() << "\n";
  }
  return kUsageError;
}

}  // namespace minkarr::cli
