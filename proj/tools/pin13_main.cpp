// Command-line front end: run the verification suite, apply the covering
// maps to user matrices, transform spin-tensor files, classify frames.
//
// Exit codes: 0 success, 64 usage error, 65 bad input data, 2 I/O failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "pin13/pin13.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 64;
constexpr int kExitData = 65;
constexpr int kExitIo = 2;

pin13::json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  pin13::json j;
  try {
    in >> j;
  } catch (const pin13::json::parse_error& e) {
    throw pin13::DomainError(std::string("malformed JSON: ") + e.what());
  }
  return j;
}

int cmd_verify(std::uint64_t seed, long samples, const std::string& json_out,
               double tol) {
  pin13::SuiteConfig cfg;
  cfg.seed = seed;
  cfg.samples = samples;
  cfg.tol = tol;
  const std::vector<pin13::CheckResult> results = pin13::run_suite(cfg);

  for (const pin13::CheckResult& r : results)
    std::printf("%s  %-30s residual %.3e  samples %ld  (%.3fs)\n",
                r.pass ? "PASS" : "FAIL", r.name.c_str(), r.max_residual,
                r.samples, r.seconds);
  const bool ok = pin13::all_pass(results);
  std::printf("%s (%zu/%zu checks)\n", ok ? "all checks passed" : "FAILURES",
              results.size(), results.size());

  if (!json_out.empty()) {
    std::ofstream out(json_out, std::ios::binary);
    if (!out) {
      std::fprintf(stderr, "error: cannot open %s for writing\n",
                   json_out.c_str());
      return kExitIo;
    }
    out << pin13::report_json(cfg, results).dump(2) << "\n";
    if (!out) {
      std::fprintf(stderr, "error: short write to %s\n", json_out.c_str());
      return kExitIo;
    }
  }
  return ok ? kExitOk : 1;
}

int cmd_phi(const std::string& input, double tol) {
  const pin13::Mat2C m = pin13::mat2c_from_json(load_json(input));
  pin13::SL2Element s;
  try {
    s = pin13::make_sl2(m, tol);
  } catch (const pin13::DomainError&) {
    throw pin13::DomainError("not in SL(2,C): determinant must be 1");
  }
  const pin13::Mat4R image = pin13::phi(s);
  pin13::json out{
      {"matrix", pin13::to_json(image)},
      {"residuals",
       {{"metric", pin13::metric_residual(image)},
        {"det", std::abs(pin13::det(image) - 1.0)},
        {"orthochronous", std::max(0.0, 1.0 - image(0, 0))}}}};
  std::cout << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_classify(const std::string& input, double tol) {
  const pin13::Mat4C m = pin13::mat4c_from_json(load_json(input));
  const pin13::FrameClassification c =
      pin13::classify_frame(pin13::transition_from_pin(m, tol), tol);
  std::cout << pin13::to_json(c).dump(2) << "\n";
  return kExitOk;
}

int cmd_transform(const std::string& tensor_path,
                  const std::string& transition_path, double tol) {
  const pin13::SpinTensor x = pin13::tensor_from_json(load_json(tensor_path));
  const pin13::FrameTransition f =
      pin13::transition_from_json(load_json(transition_path), tol);
  std::cout << pin13::to_json(pin13::transform(x, f)).dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Double cover of the full Lorentz group: gamma algebra, "
               "covering maps, spin-tensor transforms, frame classification"};
  app.require_subcommand(1);

  std::uint64_t seed = 42;
  long samples = 100;
  double tol = pin13::kEpsFloat;
  std::string json_out;
  std::string input;
  std::string tensor_path;
  std::string transition_path;

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--samples", samples, "per-check sample count");
  verify->add_option("--json", json_out, "write the JSON report here");
  verify->add_option("--tol", tol, "float tolerance override");

  CLI::App* phi_cmd =
      app.add_subcommand("phi", "map a 2x2 unit-determinant matrix");
  phi_cmd->add_option("input", input, "path to a 2x2 complex matrix JSON")
      ->required();
  phi_cmd->add_option("--tol", tol, "float tolerance override");

  CLI::App* classify =
      app.add_subcommand("classify", "classify a frame transition matrix");
  classify->add_option("input", input, "path to a 4x4 complex matrix JSON")
      ->required();
  classify->add_option("--tol", tol, "float tolerance override");

  CLI::App* transform =
      app.add_subcommand("transform", "transform a spin-tensor file");
  transform->add_option("tensor", tensor_path, "path to a spin-tensor JSON")
      ->required();
  transform
      ->add_option("transition", transition_path,
                   "path to a frame-transition JSON")
      ->required();
  transform->add_option("--tol", tol, "float tolerance override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (samples < 1) {
        std::fprintf(stderr, "error: --samples must be at least 1\n");
        return kExitUsage;
      }
      return cmd_verify(seed, samples, json_out, tol);
    }
    if (phi_cmd->parsed()) return cmd_phi(input, tol);
    if (classify->parsed()) return cmd_classify(input, tol);
    if (transform->parsed()) return cmd_transform(tensor_path, transition_path, tol);
  } catch (const std::ios_base::failure& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitIo;
  } catch (const pin13::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitData;
  } catch (const pin13::InternalError& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 70;
  }
  return kExitUsage;
}
