#include "scx/verify.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "scx/builtins.hpp"
#include "scx/domination.hpp"
#include "scx/error.hpp"
#include "scx/io.hpp"
#include "scx/matroid.hpp"
#include "scx/random.hpp"
#include "scx/theorem_checks.hpp"

namespace scx {

namespace {

using nlohmann::json;

json number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double read_number(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j == "inf") return kInfinity;
  if (j == "-inf") return -kInfinity;
  if (j == "nan") return std::nan("");
  throw ParseError("report: expected a number");
}

std::string fmt(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

std::string complex_digest(const Complex& x) {
  return "n=" + std::to_string(x.num_vertices()) + " #" + digest(complex_to_json(x));
}

std::string matroid_digest(const Matroid& m) {
  std::string text = m.name() + std::to_string(m.prime());
  for (const auto& c : m.columns())
    for (int e : c) text += std::to_string(e) + ",";
  return m.name() + " n=" + std::to_string(m.size()) + " #" + digest(text);
}

CheckResult from_hall(const HallReport& h) {
  CheckResult r;
  r.check = h.check;
  long holding = 0;
  for (const auto& row : h.rows) holding += row.holds ? 1 : 0;
  r.detail = "subsets=" + std::to_string(h.rows.size());
  r.lhs = static_cast<double>(holding);
  r.rhs = static_cast<double>(h.rows.size());
  r.margin = r.lhs - r.rhs;
  r.applicable = h.hypothesis;
  r.pass = h.pass();
  r.note = h.witness ? "colorful " + h.witness->to_string() : "no colorful set";
  return r;
}

CheckResult failed(const std::string& check, const std::string& what) {
  CheckResult r;
  r.check = check;
  r.pass = false;
  r.note = what;
  return r;
}

using TrialFn = std::function<void(VerificationReport&, int, std::mt19937_64&, const CampaignOptions&)>;

RandomComplexOptions complex_options(const CampaignOptions& o) {
  RandomComplexOptions r;
  r.n_max = o.n_max;
  r.d_max = o.d_max;
  return r;
}

void suite_fp(VerificationReport& rep, int t, std::mt19937_64& rng, const CampaignOptions& o) {
  const Complex x = random_complex(rng, complex_options(o));
  const int d = *x.max_missing_dim();
  for (int k = d; k <= std::max(d, x.dimension()); ++k) rep.add(t, complex_digest(x), check_fp(x, k, o.tol));
}

void suite_corollary(VerificationReport& rep, int t, std::mt19937_64& rng, const CampaignOptions& o) {
  const Complex x = random_complex(rng, complex_options(o));
  const int d = *x.max_missing_dim();
  for (int k = d - 1; k <= std::max(d - 1, x.dimension()); ++k) {
    rep.add(t, complex_digest(x), check_corollary_fp(x, k, o.tol));
  }
}

void suite_intersection(VerificationReport& rep, int t, std::mt19937_64& rng, const CampaignOptions& o) {
  std::vector<Complex> parts{random_complex(rng, complex_options(o))};
  RandomComplexOptions same = complex_options(o);
  same.n_fixed = parts.front().num_vertices();
  const int m = draw_int(rng, 2, 3);
  while (static_cast<int>(parts.size()) < m) parts.push_back(random_complex(rng, same));
  std::string input;
  for (const auto& p : parts) input += (input.empty() ? "" : " & ") + complex_digest(p);
  const int top = intersect(parts).dimension();
  for (int k = 0; k <= std::max(0, top); ++k) rep.add(t, input, check_intersection_eigen(parts, k, o.tol));
}

void suite_yi(VerificationReport& rep, int t, std::mt19937_64& rng, const CampaignOptions& o) {
  const Complex x = random_complex(rng, complex_options(o));
  for (int i : x.missing_dims()) rep.add(t, complex_digest(x), check_yi_identity(x, i));
}

void suite_mu_bound(VerificationReport& rep, int t, std::mt19937_64& rng, const CampaignOptions& o) {
  const Complex x = random_complex(rng, complex_options(o));
  for (int k = 0; k <= x.dimension(); ++k) rep.add(t, complex_digest(x), check_mu_lower_bound(x, k, o.tol));
}

void suite_eigenhom(VerificationReport& rep, int t, std::mt19937_64& rng, const CampaignOptions& o) {
  const Complex x = random_complex(rng, complex_options(o));
  rep.add(t, complex_digest(x), check_eigenhom2(x, o.tol));
}

void suite_countdeg(VerificationReport& rep, int t, std::mt19937_64& rng, const CampaignOptions& o) {
  const Complex x = random_complex(rng, complex_options(o));
  const int d = *x.max_missing_dim();
  const int top = x.dimension();
  for (int k = std::max(d, top - 1); k <= top; ++k)
    for (VertexSet sigma : x.faces(k)) rep.add(t, complex_digest(x), check_countdegrees(x, sigma));
}

void suite_pluslap(VerificationReport& rep, int t, std::mt19937_64& rng, const CampaignOptions& o) {
  const Complex x = random_complex(rng, complex_options(o));
  for (int i : x.missing_dims()) {
    const Complex y = derived_yi(x, i);
    const auto phi = random_cochain(rng, static_cast<int>(binomial(x.num_vertices(), i)));
    rep.add(t, complex_digest(x), check_pluslapnorm(y, i, phi, o.tol));
  }
}

void suite_hodge(VerificationReport& rep, int t, std::mt19937_64& rng, const CampaignOptions& o) {
  const Complex x = random_complex(rng, complex_options(o));
  for (int k = -1; k <= x.dimension(); ++k) rep.add(t, complex_digest(x), check_hodge(x, k, o.tol));
}

void suite_laplacian(VerificationReport& rep, int t, std::mt19937_64& rng, const CampaignOptions& o) {
  const Complex x = random_complex(rng, complex_options(o));
  for (int k = -1; k <= x.dimension(); ++k) rep.add(t, complex_digest(x), check_laplacian_assembly(x, k));
}

void suite_duality(VerificationReport& rep, int t, std::mt19937_64& rng, const CampaignOptions& o) {
  const Complex x = random_complex(rng, complex_options(o));
  const VectorRepresentation p = random_representation(rng, x);
  CheckResult r;
  r.check = "duality";
  r.detail = "blocks=" + std::to_string(p.blocks.size());
  try {
    const RepValue v = rep_value(p, x);
    if (v.infinite) {
      r.lhs = r.rhs = kInfinity;
      r.exact_lhs = r.exact_rhs = "inf";
      r.note = "covering infeasible, packing unbounded";
    } else {
      const Rational packed = -v.dual.value;
      r.lhs = to_double(v.primal.value);
      r.rhs = to_double(packed);
      r.exact_lhs = to_string(v.primal.value);
      r.exact_rhs = to_string(packed);
      r.pass = v.primal.value == packed;
      r.note = "pivots " + std::to_string(v.primal.pivots) + "/" + std::to_string(v.dual.pivots);
    }
  } catch (const NumericError& e) {
    r = failed("duality", e.what());
  }
  rep.add(t, complex_digest(x), r);
}

void suite_gamma(VerificationReport& rep, int t, std::mt19937_64& rng, const CampaignOptions& o) {
  RandomComplexOptions opts = complex_options(o);
  opts.mixed = false;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Complex x = random_complex(rng, opts);
    if (!total_domination(x).gamma) continue;
    rep.add(t, complex_digest(x) + " all-ones", check_gamma_vs_gamma(x, all_ones_representation(x)));
    rep.add(t, complex_digest(x) + " random", check_gamma_vs_gamma(x, random_representation(rng, x)));
    return;
  }
  rep.add(t, "none", failed("gamma-vs-gamma", "no complex with finite total domination in 64 draws"));
}

void suite_connectivity(VerificationReport& rep, int t, std::mt19937_64& rng, const CampaignOptions& o) {
  const Complex x = random_complex(rng, complex_options(o));
  rep.add(t, complex_digest(x) + " all-ones", check_connectivity_bound(x, all_ones_representation(x)));
  rep.add(t, complex_digest(x) + " random", check_connectivity_bound(x, random_representation(rng, x)));
}

void suite_eigenrep(VerificationReport& rep, int t, std::mt19937_64& rng, const CampaignOptions& o) {
  const Complex x = random_complex(rng, complex_options(o));
  const VectorRepresentation ones = all_ones_representation(x);
  const VectorRepresentation random = random_representation(rng, x);
  for (int i : x.missing_dims()) {
    rep.add(t, complex_digest(x) + " all-ones", check_eigenrep(x, ones, i, o.tol));
    rep.add(t, complex_digest(x) + " random", check_eigenrep(x, random, i, o.tol));
  }
}

void suite_multiplier(VerificationReport& rep, int t, std::mt19937_64& rng, const CampaignOptions& o) {
  const Complex x = random_complex(rng, complex_options(o));
  const auto a = random_multiplier(rng, x.num_vertices(), 2);
  std::string input = complex_digest(x) + " a=";
  for (int v : a) input += std::to_string(v);
  rep.add(t, input, check_multiplier_betti(x, a));
}

// Draws (Z, partition) pairs until the η-hypothesis holds for every class
// subset, lowering the class count after repeated misses.
void suite_hall(VerificationReport& rep, int t, std::mt19937_64& rng, const CampaignOptions& o) {
  int m = draw_int(rng, 1, 5);
  for (int attempt = 0; attempt < 256; ++attempt) {
    if (attempt > 0 && attempt % 32 == 0 && m > 1) --m;
    RandomComplexOptions opts = complex_options(o);
    opts.n_max = std::max(o.n_max, m);
    const Complex z = random_complex(rng, opts);
    if (z.num_vertices() < m) continue;
    const Partition part = random_partition(rng, z.ground(), m);
    const HallReport h = check_hall_eta(z, part);
    if (!h.hypothesis) continue;
    rep.add(t, complex_digest(z) + " m=" + std::to_string(m), from_hall(h));
    return;
  }
  rep.add(t, "none", failed("hall-eta", "hypothesis never held in 256 draws"));
}

void suite_general_hall(VerificationReport& rep, int t, std::mt19937_64& rng, const CampaignOptions& o) {
  const Complex x = random_complex(rng, complex_options(o));
  const int m = draw_int(rng, 1, std::min(4, x.num_vertices()));
  const Partition part = random_partition(rng, x.ground(), m);
  rep.add(t, complex_digest(x) + " m=" + std::to_string(m), from_hall(check_generalhalltype(x, part)));
}

void suite_matroid_hall(VerificationReport& rep, int t, std::mt19937_64& rng, const CampaignOptions&) {
  const Matroid mat = random_linear_matroid(rng, 3, 4, 9, 3);
  const int m = draw_int(rng, 1, std::min(4, mat.size()));
  const Partition part = random_partition(rng, mat.ground(), m);
  const std::string input = matroid_digest(mat) + " m=" + std::to_string(m);
  rep.add(t, input, from_hall(check_myHMSstar(mat, part)));
  rep.add(t, input, from_hall(check_myHMS(mat, part)));
}

void suite_matroid(VerificationReport& rep, int t, std::mt19937_64& rng, const CampaignOptions&) {
  const Matroid mat = random_linear_matroid(rng, 3, 4, 9, 4);
  const std::string input = matroid_digest(mat);
  VertexSet witness;
  const int best = phi(mat, mat.ground(), &witness);
  const PhiStar star = phi_star(mat, mat.ground());
  CheckResult frac;
  frac.check = "phistar-vs-phi";
  frac.lhs = to_double(star.value);
  frac.rhs = best;
  frac.exact_lhs = to_string(star.value);
  frac.exact_rhs = std::to_string(best);
  frac.margin = frac.lhs - frac.rhs;
  frac.pass = star.value >= best && is_general_position(mat, witness);
  rep.add(t, input, frac);

  CheckResult gp;
  gp.check = "gp-definitions";
  long agree = 0;
  long total = 0;
  if (mat.size() <= 8) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << mat.size()); ++bits) {
      const VertexSet s(bits);
      agree += is_general_position(mat, s) == is_general_position_by_flats(mat, s) ? 1 : 0;
      ++total;
    }
  } else {
    for (int i = 0; i < 256; ++i) {
      const VertexSet s(rng() & mat.ground().bits());
      agree += is_general_position(mat, s) == is_general_position_by_flats(mat, s) ? 1 : 0;
      ++total;
    }
  }
  gp.lhs = static_cast<double>(agree);
  gp.rhs = static_cast<double>(total);
  gp.exact_lhs = std::to_string(agree);
  gp.exact_rhs = std::to_string(total);
  gp.pass = agree == total;
  rep.add(t, input, gp);

  rep.add(t, input, check_flat_representation(mat, mat.ground()));
}

const std::map<std::string, TrialFn>& suites() {
  static const std::map<std::string, TrialFn> table{
      {"fp", suite_fp},
      {"corollary", suite_corollary},
      {"intersection", suite_intersection},
      {"yi", suite_yi},
      {"mu-bound", suite_mu_bound},
      {"eigenhom", suite_eigenhom},
      {"countdeg", suite_countdeg},
      {"pluslap", suite_pluslap},
      {"hodge", suite_hodge},
      {"laplacian", suite_laplacian},
      {"duality", suite_duality},
      {"gamma", suite_gamma},
      {"connectivity", suite_connectivity},
      {"eigenrep", suite_eigenrep},
      {"multiplier", suite_multiplier},
      {"hall", suite_hall},
      {"general-hall", suite_general_hall},
      {"matroid-hall", suite_matroid_hall},
      {"matroid", suite_matroid},
  };
  return table;
}

CheckResult near(const std::string& check, const std::string& detail, double value, double target, double tol) {
  CheckResult r;
  r.check = check;
  r.detail = detail + " tol=" + fmt(tol);
  r.lhs = value;
  r.rhs = target;
  r.margin = tol - std::abs(value - target);
  r.pass = std::abs(value - target) <= tol;
  return r;
}

CheckResult exact_count(const std::string& check, const std::string& detail, long value, long target, bool at_least) {
  CheckResult r;
  r.check = check;
  r.detail = detail;
  r.lhs = static_cast<double>(value);
  r.rhs = static_cast<double>(target);
  r.exact_lhs = std::to_string(value);
  r.exact_rhs = std::to_string(target);
  r.margin = r.lhs - r.rhs;
  r.pass = at_least ? value >= target : value == target;
  return r;
}

void example_rpartite(VerificationReport& rep, const CampaignOptions&) {
  for (auto [r, l] : {std::pair{2, 3}, std::pair{3, 2}, std::pair{4, 2}}) {
    const Complex x = builtins::complete_multipartite_clique_complex(r, l);
    const int n = x.num_vertices();
    const std::string name = "rpartite:" + std::to_string(r) + "," + std::to_string(l);
    rep.add(-1, name, near("mu0", "(r-1)n/r", spectral_gap(x, 0), static_cast<double>((r - 1) * n) / r, 1e-9));
    rep.add(-1, name, exact_count("betti", "b" + std::to_string(r - 1) + " >= 1", betti_exact(x, r - 1), 1, true));
  }
}

void example_ag23(VerificationReport& rep, const CampaignOptions&) {
  const Complex x = builtins::affine_plane_complex();
  rep.add(-1, "ag23", near("mu1", "mu_1 = 6", spectral_gap(x, 1), 6.0, 1e-8));
  rep.add(-1, "ag23", exact_count("betti", "b2 = 1", betti_exact(x, 2), 1, false));
  const Eta e = eta(x);
  rep.add(-1, "ag23", exact_count("eta", "eta = 3", e.value.value_or(-1), 3, false));
  rep.add(-1, "ag23", near("lambda-bar", "lambda_bar_2 = 3", lambda_bar(x, 2), 3.0, 1e-8));
}

void example_pg33(VerificationReport& rep, const CampaignOptions& o) {
  const Complex x = builtins::projective_space_complex();
  rep.add(-1, "pg33", near("mu1", "mu_1 = 36", spectral_gap(x, 1), 36.0, 1e-6));
  if (o.stretch) {
    rep.add(-1, "pg33", exact_count("betti", "b4 >= 1", betti_exact(x, 4), 1, true));
  } else {
    CheckResult r;
    r.check = "betti";
    r.detail = "b4 >= 1";
    r.vacuous = true;
    r.applicable = false;
    r.note = "skipped; pass --stretch to run the exact rank computation";
    rep.add(-1, "pg33", r);
  }
}

void example_ag23_sharpness(VerificationReport& rep, const CampaignOptions& o) {
  const Complex x = builtins::affine_plane_complex();
  const CheckResult cor = check_corollary_fp(x, 2, o.tol);
  CheckResult eq = near("equality", "mu_1 = (1 - 1/C(3,2)) * 9", cor.lhs, cor.rhs, 1e-8);
  rep.add(-1, "ag23", eq);
  CheckResult hyp;
  hyp.check = "hypothesis-fails";
  hyp.detail = "strict hypothesis of the vanishing corollary at k=2";
  hyp.lhs = cor.lhs;
  hyp.rhs = cor.rhs;
  hyp.margin = cor.margin;
  hyp.pass = !cor.applicable;
  rep.add(-1, "ag23", hyp);
  rep.add(-1, "ag23", exact_count("betti", "b2 != 0", betti_exact(x, 2), 1, true));
}

const std::map<std::string, std::function<void(VerificationReport&, const CampaignOptions&)>>& examples() {
  static const std::map<std::string, std::function<void(VerificationReport&, const CampaignOptions&)>> table{
      {"rpartite", example_rpartite},
      {"ag23", example_ag23},
      {"pg33", example_pg33},
      {"ag23-sharpness", example_ag23_sharpness},
  };
  return table;
}

std::vector<std::string> keys_of(const auto& table) {
  std::vector<std::string> out;
  for (const auto& [k, v] : table) out.push_back(k);
  return out;
}

}  // namespace

std::string digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) out[i] = hex[h & 0xF];
  return out;
}

bool VerificationReport::pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  std::size_t f = 0;
  for (const auto& r : records) f += r.pass ? 0 : 1;
  return f;
}

void VerificationReport::add(int trial, const std::string& input, const CheckResult& r) {
  ReportRecord rec;
  rec.trial = trial;
  rec.check = r.check;
  rec.input = input;
  rec.detail = r.detail;
  rec.lhs = r.lhs;
  rec.rhs = r.rhs;
  rec.margin = r.margin;
  rec.exact_lhs = r.exact_lhs;
  rec.exact_rhs = r.exact_rhs;
  rec.pass = r.pass;
  rec.vacuous = r.vacuous;
  rec.applicable = r.applicable;
  rec.note = r.note;
  records.push_back(std::move(rec));
}

std::string VerificationReport::to_json(int indent) const {
  json recs = json::array();
  for (const auto& r : records) {
    recs.push_back({{"trial", r.trial},
                    {"check", r.check},
                    {"input", r.input},
                    {"detail", r.detail},
                    {"lhs", number(r.lhs)},
                    {"rhs", number(r.rhs)},
                    {"margin", number(r.margin)},
                    {"exact_lhs", r.exact_lhs},
                    {"exact_rhs", r.exact_rhs},
                    {"pass", r.pass},
                    {"vacuous", r.vacuous},
                    {"applicable", r.applicable},
                    {"note", r.note}});
  }
  json j{{"suite", suite},
         {"seed", seed},
         {"trials", trials},
         {"tolerances", {{"kernel", tol.kernel}, {"slack", tol.slack}}},
         {"pass", pass()},
         {"failures", failures()},
         {"records", std::move(recs)}};
  if (wall_seconds) j["wall_seconds"] = *wall_seconds;
  return j.dump(indent);
}

VerificationReport VerificationReport::from_json(std::string_view text) {
  VerificationReport rep;
  try {
    const json j = json::parse(text);
    rep.suite = j.at("suite").get<std::string>();
    rep.seed = j.at("seed").get<std::uint64_t>();
    rep.trials = j.at("trials").get<int>();
    rep.tol.kernel = j.at("tolerances").at("kernel").get<double>();
    rep.tol.slack = j.at("tolerances").at("slack").get<double>();
    if (j.contains("wall_seconds")) rep.wall_seconds = j.at("wall_seconds").get<double>();
    for (const auto& r : j.at("records")) {
      ReportRecord rec;
      rec.trial = r.at("trial").get<int>();
      rec.check = r.at("check").get<std::string>();
      rec.input = r.at("input").get<std::string>();
      rec.detail = r.at("detail").get<std::string>();
      rec.lhs = read_number(r.at("lhs"));
      rec.rhs = read_number(r.at("rhs"));
      rec.margin = read_number(r.at("margin"));
      rec.exact_lhs = r.at("exact_lhs").get<std::string>();
      rec.exact_rhs = r.at("exact_rhs").get<std::string>();
      rec.pass = r.at("pass").get<bool>();
      rec.vacuous = r.at("vacuous").get<bool>();
      rec.applicable = r.at("applicable").get<bool>();
      rec.note = r.at("note").get<std::string>();
      rep.records.push_back(std::move(rec));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("report: ") + e.what());
  }
  return rep;
}

std::string VerificationReport::to_table() const {
  std::ostringstream os;
  os << "suite " << suite << "  seed " << seed << "  trials " << trials << "\n";
  os << "trial  check                 lhs             rhs             margin          result  detail\n";
  for (const auto& r : records) {
    const std::string result = !r.pass ? "FAIL" : r.vacuous ? "vacuous" : !r.applicable ? "n/a" : "pass";
    const std::string lhs = r.exact_lhs.empty() ? fmt(r.lhs) : r.exact_lhs;
    const std::string rhs = r.exact_rhs.empty() ? fmt(r.rhs) : r.exact_rhs;
    char line[512];
    std::snprintf(line, sizeof line, "%-6d %-21s %-15s %-15s %-15s %-7s %s", r.trial, r.check.c_str(),
                  lhs.c_str(), rhs.c_str(), fmt(r.margin).c_str(), result.c_str(), r.detail.c_str());
    os << line;
    if (!r.note.empty()) os << "  (" << r.note << ")";
    os << "\n";
  }
  os << records.size() << " records, " << failures() << " failures";
  if (wall_seconds) os << ", " << fmt(*wall_seconds) << " s";
  os << "\n";
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = keys_of(suites());
  return names;
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names = keys_of(examples());
  return names;
}

VerificationReport run_suite(const std::string& name, const CampaignOptions& options) {
  const auto it = suites().find(name);
  if (it == suites().end()) throw InputError("unknown suite: " + name);
  VerificationReport rep;
  rep.suite = name;
  rep.seed = options.seed;
  rep.trials = options.trials;
  rep.tol = options.tol;
  for (int t = 0; t < options.trials; ++t) {
    std::mt19937_64 rng = trial_rng(options.seed, static_cast<std::uint64_t>(t));
    try {
      it->second(rep, t, rng, options);
    } catch (const GuardError&) {
      throw;
    } catch (const Error& e) {
      rep.add(t, "error", failed(name, e.what()));
    }
  }
  return rep;
}

VerificationReport reproduce(const std::string& name, const CampaignOptions& options) {
  const auto it = examples().find(name);
  if (it == examples().end()) throw InputError("unknown example: " + name);
  VerificationReport rep;
  rep.suite = "reproduce:" + name;
  rep.seed = options.seed;
  rep.tol = options.tol;
  it->second(rep, options);
  return rep;
}

}  // namespace scx
