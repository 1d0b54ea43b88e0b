// toric: analyze simplicial complexes through their toric rings.
//
// Exit status: 0 when every applicable check passes, 1 when a check fails,
// 2 on invalid input or a failed precondition.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "toric/fixtures.hpp"
#include "toric/generator.hpp"
#include "toric/io.hpp"
#include "toric/oracle.hpp"
#include "toric/report.hpp"

namespace {

struct Input {
  std::string path;
  std::string fixture;
};

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("path", in.path, "complex JSON file ({\"n\": .., \"facets\": [[..], ..]})");
  cmd->add_option("--fixture", in.fixture, "built-in complex: E1 E2 E3 T2 D1 D2 D3 D4");
}

toric::SimplicialComplex load(const Input& in) {
  if (!in.fixture.empty()) {
    for (auto& [name, c] : toric::fixtures::all())
      if (name == in.fixture) return c;
    throw toric::Error(toric::ErrorCode::ParseError, "unknown fixture " + in.fixture);
  }
  if (in.path.empty()) throw toric::Error(toric::ErrorCode::ParseError, "no input: give a path or --fixture");
  return toric::read_complex(in.path);
}

void emit(const toric::Json& j, const std::string& format) {
  if (format == "text")
    std::cout << toric::render_text(j);
  else
    std::cout << j.dump(2) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toric rings of simplicial complexes: primes, normality, class group, canonical class, Gröbner basis"};
  app.require_subcommand(1);

  toric::AnalysisOptions opts = toric::options_from_environment();
  std::string format = "json";
  auto add_bounds = [&](CLI::App* cmd) {
    cmd->add_option("--max-normality-height", opts.max_normality_height, "normality scan bound (default n)")
        ->check(CLI::NonNegativeNumber);
    cmd->add_option("--radical-bound", opts.radical_bound, "height bound for the radicality scan")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--kernel-bound", opts.kernel_bound, "degree bound for the toric kernel oracle")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--perfect-cap", opts.perfect_cap, "largest vertex count for the perfect graph test")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  Input input;
  auto* analyze = app.add_subcommand("analyze", "full analysis report");
  add_input(analyze, input);
  add_bounds(analyze);
  analyze->add_flag("--timing", opts.timing, "include per-section timings (breaks byte stability)");

  auto* gb = app.add_subcommand("gb", "quadratic Gröbner basis of a quasi-forest");
  add_input(gb, input);
  add_bounds(gb);

  toric::GeneratorConfig gen_cfg;
  std::string mode = "any";
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "random complex as JSON");
  gen->add_option("--n", gen_cfg.n, "vertex count")->check(CLI::PositiveNumber);
  gen->add_option("--facets", gen_cfg.facets, "facet count (edges for flag and one_dimensional; 0 = random)");
  gen->add_option("--max-size", gen_cfg.max_size, "largest facet size");
  gen->add_option("--mode", mode, "any | flag | quasi_forest | one_dimensional");
  gen->add_option("--seed", gen_cfg.seed, "random seed");
  gen->add_option("-o,--out", out_path, "write to a file instead of stdout");

  auto* oracle = app.add_subcommand("oracle", "brute-force reference values for small complexes");
  add_input(oracle, input);
  add_bounds(oracle);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      const auto report = toric::analyze(load(input), opts);
      emit(report, format);
      return toric::passed(report) ? 0 : 1;
    }
    if (gb->parsed()) {
      const auto report = toric::gb_report(load(input), opts);
      emit(report, format);
      return toric::passed(report) ? 0 : 1;
    }
    if (gen->parsed()) {
      gen_cfg.mode = toric::parse_generator_mode(mode);
      const std::string text = toric::dump_complex(toric::generate(gen_cfg)) + "\n";
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path);
        if (!out) throw toric::Error(toric::ErrorCode::ParseError, "cannot write " + out_path);
        out << text;
      }
      return 0;
    }
    if (oracle->parsed()) {
      emit(toric::oracle::report(load(input), opts.kernel_bound), format);
      return 0;
    }
  } catch (const toric::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
