// Command line front end: enumeration, coloring, cover construction and
// verification, exact solving, and bound tables over hypercube subcubes.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cubecover/bounds.hpp"
#include "cubecover/covering.hpp"
#include "cubecover/json_io.hpp"
#include "cubecover/polychromatic.hpp"
#include "cubecover/solver.hpp"
#include "cubecover/subcube.hpp"

namespace {

using namespace cubecover;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;      // verification failed / optimality not proved
constexpr int kExitBadArgs = 2;
constexpr int kExitResource = 3;

// Data goes to --output (resolved against CUBECOVER_OUTPUT_DIR when
// relative) or standard output; diagnostics go to standard error.
class OutputStream {
 public:
  explicit OutputStream(const std::string& path) {
    if (path.empty() || path == "-") return;
    std::string resolved = path;
    const char* dir = std::getenv("CUBECOVER_OUTPUT_DIR");
    if (dir != nullptr && *dir != '\0' && path.front() != '/') {
      resolved = std::string(dir) + "/" + path;
    }
    file_ = std::make_unique<std::ofstream>(resolved);
    if (!*file_) {
      throw std::invalid_argument("cannot open output file: " + resolved);
    }
  }

  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

ColorTuple parse_color_list(const std::string& text) {
  ColorTuple t;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    t.push_back(std::stoi(item));
  }
  return t;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    int v = std::stoi(text);
    return {v, v};
  }
  int lo = std::stoi(text.substr(0, colon));
  int hi = std::stoi(text.substr(colon + 1));
  if (lo > hi) throw std::invalid_argument("empty range: " + text);
  return {lo, hi};
}

int run(CLI::App& app, int argc, char** argv) {
  std::string output_path;
  std::string format = "auto";
  app.add_option("-o,--output", output_path, "Output path (default: stdout)");
  app.add_option("--format", format, "Output format: json, csv, or text")
      ->check(CLI::IsMember({"auto", "json", "csv", "text"}));

  // enumerate n i
  auto* enumerate_cmd =
      app.add_subcommand("enumerate", "List all dimension-i subcubes of Q_n");
  int en_n = 0, en_i = 0;
  enumerate_cmd->add_option("n", en_n, "Ambient dimension")->required();
  enumerate_cmd->add_option("i", en_i, "Subcube dimension")->required();

  // color --n --d --l [--verify | --class]
  auto* color_cmd =
      app.add_subcommand("color", "Residue coloring: scheme, verification, classes");
  int co_n = 0, co_d = 0, co_l = 0;
  bool co_verify = false;
  std::string co_class;
  color_cmd->add_option("--n", co_n, "Ambient dimension")->required();
  color_cmd->add_option("--d", co_d, "Target cube dimension")->required();
  color_cmd->add_option("--l", co_l, "Colored cube dimension")->required();
  color_cmd->add_flag("--verify", co_verify,
                      "Check that every d-cube sees every color");
  color_cmd->add_option("--class", co_class,
                        "Emit the class of this color (comma-separated residues)");

  // cover --n --d --l --method facet|pipeline [--seed]
  auto* cover_cmd = app.add_subcommand("cover", "Construct a (d,l)-covering set");
  int cv_n = 0, cv_d = 0, cv_l = 0;
  std::string cv_method;
  std::uint64_t cv_seed = 0;
  cover_cmd->add_option("--n", cv_n, "Ambient dimension")->required();
  cover_cmd->add_option("--d", cv_d, "Covered cube dimension")->required();
  cover_cmd->add_option("--l", cv_l, "Member cube dimension")->required();
  cover_cmd->add_option("--method", cv_method, "facet (d = n-1) or pipeline")
      ->required()
      ->check(CLI::IsMember({"facet", "pipeline"}));
  cover_cmd->add_option("--seed", cv_seed, "Seed for the pipeline's random cuts");

  // verify --file cover.json
  auto* verify_cmd = app.add_subcommand("verify", "Verify a covering set file");
  std::string vf_file;
  verify_cmd->add_option("--file", vf_file, "Covering set JSON file")->required();

  // solve --n --d --l [--budget]
  auto* solve_cmd = app.add_subcommand("solve", "Exact minimum covering size");
  int sv_n = 0, sv_d = 0, sv_l = 0;
  std::uint64_t sv_budget = SolveBudget{}.max_nodes;
  solve_cmd->add_option("--n", sv_n, "Ambient dimension")->required();
  solve_cmd->add_option("--d", sv_d, "Covered cube dimension")->required();
  solve_cmd->add_option("--l", sv_l, "Member cube dimension")->required();
  solve_cmd->add_option("--budget", sv_budget, "Search node budget");

  // bounds --n --d --l
  auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form bound report");
  int bd_n = 0, bd_d = 0, bd_l = 0;
  bounds_cmd->add_option("--n", bd_n, "Ambient dimension")->required();
  bounds_cmd->add_option("--d", bd_d, "Covered cube dimension")->required();
  bounds_cmd->add_option("--l", bd_l, "Member cube dimension")->required();

  // table --n-range --d-range --l-range [--exact --budget]
  auto* table_cmd = app.add_subcommand("table", "CSV bound table over ranges");
  std::string tb_n = "3:6", tb_d = "2:5", tb_l = "1:4";
  bool tb_exact = false;
  std::uint64_t tb_budget = 1'000'000;
  table_cmd->add_option("--n-range", tb_n, "Ambient dimension range lo:hi");
  table_cmd->add_option("--d-range", tb_d, "Covered dimension range lo:hi");
  table_cmd->add_option("--l-range", tb_l, "Member dimension range lo:hi");
  table_cmd->add_flag("--exact", tb_exact,
                      "Solve each row exactly when it fits the budget");
  table_cmd->add_option("--budget", tb_budget, "Per-row solver node budget");

  app.require_subcommand(1);
  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
    sub->fallthrough();
  }
  app.parse(argc, argv);

  OutputStream output(output_path);
  std::ostream& out = output.get();

  if (app.got_subcommand(enumerate_cmd)) {
    if (format != "auto" && format != "text" && format != "json") {
      throw std::invalid_argument("enumerate supports text or json output");
    }
    SubcubeEnumerator stream(en_n, en_i);
    Subcube q;
    if (format == "json") {
      json subs = json::array();
      while (stream.next(q)) subs.push_back(format_subcube(q));
      emit_json(out, json{{"n", en_n}, {"dim", en_i}, {"subcubes", std::move(subs)}});
    } else {
      while (stream.next(q)) out << format_subcube(q) << "\n";
    }
    return kExitOk;
  }

  if (app.got_subcommand(color_cmd)) {
    ColorScheme s = scheme(co_d, co_l);
    if (co_verify) {
      PolychromaticReport report = verify_residue_coloring(co_n, s);
      emit_json(out, polychromatic_report_to_json(report, s));
      return report.ok ? kExitOk : kExitFailed;
    }
    if (!co_class.empty()) {
      CoveringSet klass = color_class(co_n, s, parse_color_list(co_class));
      emit_json(out, covering_set_to_json(klass));
      return kExitOk;
    }
    if (co_n <= co_d) {
      throw std::invalid_argument("color: need n > d");
    }
    emit_json(out, scheme_to_json(s));
    return kExitOk;
  }

  if (app.got_subcommand(cover_cmd)) {
    CoveringSet cs;
    if (cv_method == "facet") {
      if (cv_d != cv_n - 1) {
        throw std::invalid_argument("cover --method facet requires d = n-1");
      }
      cs = construct_facet_cover(cv_n, cv_l);
    } else {
      cs = construct_pipeline_cover(cv_n, cv_d, cv_l, cv_seed);
    }
    emit_json(out, covering_set_to_json(cs));
    return kExitOk;
  }

  if (app.got_subcommand(verify_cmd)) {
    std::ifstream in(vf_file);
    if (!in) throw std::invalid_argument("cannot open cover file: " + vf_file);
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw std::invalid_argument("invalid cover JSON: " + std::string(e.what()));
    }
    CoveringSet cs = covering_set_from_json(j);
    CoverReport report = verify_covering(cs);
    emit_json(out, cover_report_to_json(report));
    return report.ok ? kExitOk : kExitFailed;
  }

  if (app.got_subcommand(solve_cmd)) {
    IncidenceInstance inst = build_incidence(Params{sv_n, sv_d, sv_l});
    SolveResult result = solve_min_cover(inst, SolveBudget{sv_budget});
    emit_json(out, solve_result_to_json(result));
    return result.proved_optimal ? kExitOk : kExitFailed;
  }

  if (app.got_subcommand(bounds_cmd)) {
    emit_json(out, bound_report_to_json(bound_report(Params{bd_n, bd_d, bd_l})));
    return kExitOk;
  }

  if (app.got_subcommand(table_cmd)) {
    if (format != "auto" && format != "csv") {
      throw std::invalid_argument("table emits csv output");
    }
    auto [n_lo, n_hi] = parse_range(tb_n);
    auto [d_lo, d_hi] = parse_range(tb_d);
    auto [l_lo, l_hi] = parse_range(tb_l);
    out << "n,d,l,f_lower,f_exact,c_lower,c_upper,pc_lower,pc_upper\n";
    for (int n = n_lo; n <= n_hi; ++n) {
      for (int d = d_lo; d <= d_hi; ++d) {
        for (int l = l_lo; l <= l_hi; ++l) {
          if (!(0 <= l && l < d && d < n && n <= kMaxDimension)) continue;
          Params p{n, d, l};
          std::string f_exact;
          if (tb_exact) {
            try {
              SolveResult r = solve_min_cover(build_incidence(p), SolveBudget{tb_budget});
              if (r.proved_optimal) f_exact = std::to_string(r.size);
            } catch (const ResourceError&) {
              // Row is too large to solve; leave the column blank.
            }
          }
          auto [c_lo, c_hi] = bounds_c(d, l);
          auto [pc_lo, pc_hi] = bounds_pc(d, l);
          out << n << "," << d << "," << l << "," << lower_bound_f(p) << ","
              << f_exact << "," << rational_to_string(c_lo) << ","
              << rational_to_string(c_hi) << "," << pc_lo << "," << pc_hi << "\n";
        }
      }
    }
    return kExitOk;
  }

  return kExitBadArgs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subcube covering and polychromatic coloring toolkit"};
  try {
    return run(app, argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadArgs;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  }
}
