// scx: spectra, Betti numbers, property campaigns and matroid queries.
#include <chrono>
#include <cmath>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "scx/error.hpp"
#include "scx/homology.hpp"
#include "scx/io.hpp"
#include "scx/matroid.hpp"
#include "scx/verify.hpp"

namespace {

using nlohmann::json;

enum Exit { kPass = 0, kFail = 1, kParse = 2, kNumeric = 3, kGuard = 4 };

json finite_or_string(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

struct Common {
  bool pretty = false;
  bool timing = false;
  scx::Tolerances tol;
};

void add_common(CLI::App* app, Common& c) {
  app->add_flag("--pretty", c.pretty, "Human-readable output instead of JSON");
  app->add_option("--kernel-tol", c.tol.kernel, "Eigenvalues below this count as kernel")->capture_default_str();
  app->add_option("--slack", c.tol.slack, "Slack allowed on inequalities")->capture_default_str();
}

int emit_report(scx::VerificationReport& rep, const Common& c, double seconds) {
  if (c.timing) rep.wall_seconds = seconds;
  std::cout << (c.pretty ? rep.to_table() : rep.to_json() + "\n");
  return rep.pass() ? kPass : kFail;
}

void print_hall(const scx::HallReport& h, bool pretty) {
  if (pretty) {
    std::cout << h.check << "\n  classes  value       threshold  holds\n";
    for (const auto& row : h.rows) {
      char line[160];
      std::snprintf(line, sizeof line, "  %-8llu %-11s %-10s %s\n", static_cast<unsigned long long>(row.classes),
                    row.value.c_str(), row.threshold.c_str(), row.holds ? "yes" : "no");
      std::cout << line;
    }
    std::cout << "hypothesis " << (h.hypothesis ? "holds" : "fails") << "; colorful set "
              << (h.witness ? h.witness->to_string() : std::string("none")) << "\n";
    std::cout << (h.pass() ? "PASS" : "FAIL") << "\n";
    return;
  }
  json rows = json::array();
  for (const auto& row : h.rows) {
    rows.push_back({{"classes", row.classes},
                    {"value", row.value},
                    {"threshold", row.threshold},
                    {"margin", finite_or_string(row.margin)},
                    {"holds", row.holds}});
  }
  json j{{"check", h.check}, {"rows", rows}, {"hypothesis", h.hypothesis}, {"pass", h.pass()}};
  j["witness"] = h.witness ? json(h.witness->to_vector()) : json(nullptr);
  std::cout << j.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simplicial complex spectra, homology and domination checks"};
  app.require_subcommand(1);

  Common common;
  std::string input;
  int dim = 0;

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the k-Laplacian");
  spectrum->add_option("input", input, "Complex file or builtin:NAME")->required();
  spectrum->add_option("--dim", dim, "Cochain dimension k")->required();
  add_common(spectrum, common);

  auto* betti = app.add_subcommand("betti", "Reduced Betti number over Q");
  betti->add_option("input", input, "Complex file or builtin:NAME")->required();
  betti->add_option("--dim", dim, "Dimension k")->required();
  add_common(betti, common);

  std::string suite;
  scx::CampaignOptions campaign;
  auto* verify = app.add_subcommand("verify", "Randomized property campaign");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(scx::suite_names()));
  verify->add_option("--seed", campaign.seed)->capture_default_str();
  verify->add_option("--trials", campaign.trials)->capture_default_str()->check(CLI::NonNegativeNumber);
  verify->add_option("--n-max", campaign.n_max)->capture_default_str()->check(CLI::Range(4, 16));
  verify->add_option("--d-max", campaign.d_max)->capture_default_str()->check(CLI::Range(1, 8));
  verify->add_flag("--timing", common.timing, "Include wall time in the report");
  add_common(verify, common);

  std::string example;
  auto* repro = app.add_subcommand("reproduce", "Check a named extremal example");
  repro->add_option("name", example, "Example name")->required()->check(CLI::IsMember(scx::example_names()));
  repro->add_flag("--stretch", campaign.stretch, "Run the exact pg33 homology computation (hours, many GB)");
  repro->add_flag("--timing", common.timing, "Include wall time in the report");
  add_common(repro, common);

  std::string query;
  std::string matroid_spec;
  std::string subset_spec = "all";
  std::string partition_spec;
  auto* matroid = app.add_subcommand("matroid", "Matroid general-position queries");
  matroid->add_option("query", query, "phi | phistar | hall")->required()->check(
      CLI::IsMember({"phi", "phistar", "hall"}));
  matroid->add_option("--matroid", matroid_spec, "Matroid file, builtin:AG23, builtin:PG33 or uniform:R,N")
      ->required();
  matroid->add_option("--subset", subset_spec, "Subset file or 'all'")->capture_default_str();
  matroid->add_option("--partition", partition_spec, "Partition file or 3-parallel-lines");
  add_common(matroid, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kParse;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    if (*spectrum) {
      const scx::Complex x = scx::resolve_complex(input);
      const scx::SpectrumReport s = scx::spectrum(x, dim);
      if (common.pretty) {
        std::cout << "k = " << s.k << ", " << s.eigenvalues.size() << " eigenvalues\n";
        for (double e : s.eigenvalues) std::cout << "  " << e << "\n";
        std::cout << "mu = " << s.mu << "\nlambda_max = " << s.lambda_max << "\n";
      } else {
        json j{{"k", s.k},
               {"size", s.eigenvalues.size()},
               {"eigenvalues", s.eigenvalues},
               {"mu", finite_or_string(s.mu)},
               {"lambda_max", finite_or_string(s.lambda_max)}};
        std::cout << j.dump() << "\n";
      }
      return kPass;
    }
    if (*betti) {
      const scx::Complex x = scx::resolve_complex(input);
      const long b = scx::betti_exact(x, dim);
      if (common.pretty) {
        std::cout << "b" << dim << " = " << b << "\n";
      } else {
        std::cout << json{{"k", dim}, {"betti", b}}.dump() << "\n";
      }
      return kPass;
    }
    if (*verify) {
      campaign.tol = common.tol;
      scx::VerificationReport rep = scx::run_suite(suite, campaign);
      return emit_report(rep, common, elapsed());
    }
    if (*repro) {
      campaign.tol = common.tol;
      scx::VerificationReport rep = scx::reproduce(example, campaign);
      return emit_report(rep, common, elapsed());
    }
    if (*matroid) {
      const scx::Matroid m = scx::resolve_matroid(matroid_spec);
      if (query == "hall") {
        if (partition_spec.empty()) throw scx::ParseError("matroid hall: --partition is required");
        const scx::Partition part = scx::resolve_partition(partition_spec);
        const scx::HallReport star = scx::check_myHMSstar(m, part);
        const scx::HallReport plain = scx::check_myHMS(m, part);
        print_hall(star, common.pretty);
        print_hall(plain, common.pretty);
        return star.pass() && plain.pass() ? kPass : kFail;
      }
      const scx::VertexSet s = scx::resolve_subset(subset_spec, m.ground());
      if (query == "phi") {
        scx::VertexSet best;
        const int value = scx::phi(m, s, &best);
        if (common.pretty) {
          std::cout << "phi = " << value << "  witness " << best.to_string() << "\n";
        } else {
          std::cout << json{{"phi", value}, {"witness", best.to_vector()}}.dump() << "\n";
        }
        return kPass;
      }
      const scx::PhiStar star = scx::phi_star(m, s);
      json weights = json::array();
      for (int v : s) weights.push_back(scx::to_string(star.weight[v]));
      if (common.pretty) {
        std::cout << "phi* = " << scx::to_string(star.value) << "  (" << star.constraints << " constraints)\n";
      } else {
        std::cout << json{{"phistar", scx::to_string(star.value)}, {"weights", weights},
                          {"constraints", star.constraints}}.dump()
                  << "\n";
      }
      return kPass;
    }
  } catch (const scx::GuardError& e) {
    std::cerr << "scx: " << e.what() << "\n";
    return kGuard;
  } catch (const scx::NumericError& e) {
    std::cerr << "scx: " << e.what() << "\n";
    return kNumeric;
  } catch (const scx::InputError& e) {
    std::cerr << "scx: " << e.what() << "\n";
    return kParse;
  }
  return kPass;
}
