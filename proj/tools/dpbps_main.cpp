#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <set>

#include "dpbps/checks.hpp"
#include "dpbps/classes.hpp"
#include "dpbps/error.hpp"
#include "dpbps/invariants.hpp"
#include "dpbps/report.hpp"
#include "dpbps/series.hpp"
#include "dpbps/sweep.hpp"
#include "dpbps/walls.hpp"

using namespace dpbps;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kOutOfScope = 3 };

int print_list(const Surface& s, const std::vector<DivClass>& classes) {
  for (const auto& c : classes) std::cout << format_class(s, c) << "\n";
  std::cout << "count " << classes.size() << "\n";
  return kOk;
}

int cmd_classify(const std::string& token, bool json) {
  const Token t = parse_token(token);
  const ClassProfile p = classify(t.surface, t.beta);
  if (json) {
    nlohmann::ordered_json j;
    j["surface"] = t.surface.name();
    j["class"] = p.beta.coeffs;
    j["w"] = p.w;
    j["pa"] = p.pa;
    j["beta_sq"] = p.beta_sq;
    j["eta"] = p.eta;
    j["kind"] = std::string(to_string(p.kind));
    j["nef"] = p.nef;
    j["big"] = p.big;
    j["very_ample"] = p.very_ample;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << format_token(t.surface, p.beta) << " kind=" << to_string(p.kind) << " w=" << p.w << " pa=" << p.pa
              << " beta^2=" << p.beta_sq << " eta=" << p.eta << " nef=" << p.nef << " big=" << p.big
              << " very_ample=" << p.very_ample << "\n";
  }
  return p.kind == ClassKind::OutOfScope ? kOutOfScope : kOk;
}

int cmd_invariants(const std::string& token, bool json, bool csv) {
  const Token t = parse_token(token);
  const InvariantReport rep = run_checks(t.surface, t.beta);
  if (json) std::cout << report_to_json(rep).dump() << "\n";
  else if (csv) std::cout << csv_header() << "\n" << report_to_csv(rep) << "\n";
  else std::cout << report_to_text(rep);
  return kOk;
}

int cmd_check(const std::string& token) {
  const Token t = parse_token(token);
  const InvariantReport rep = run_checks(t.surface, t.beta);
  std::cout << report_to_text(rep);
  std::cout << (rep.all_checks_pass() ? "all checks pass" : "CHECK FAILURE") << "\n";
  return rep.all_checks_pass() ? kOk : kCheckFailed;
}

int cmd_sweep(SweepSpec spec, const std::string& out_path, bool csv) {
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw Error(ErrorKind::Parse, "cannot open " + out_path);
  }
  std::ostream& os = out_path.empty() ? std::cout : file;
  if (csv) os << csv_header() << "\n";
  std::size_t total = 0;
  std::size_t failed = 0;
  run_sweep(spec, [&](const InvariantReport& rep) {
    ++total;
    if (!rep.all_checks_pass()) {
      ++failed;
      std::cerr << "check failure: " << format_token(rep.surface, rep.profile.beta) << "\n";
    }
    if (csv) os << report_to_csv(rep) << "\n";
    else os << report_to_json(rep).dump() << "\n";
  });
  (out_path.empty() ? std::cerr : std::cout) << spec.surface.name() << ": " << total << " classes, " << failed
                                             << " failures\n";
  return failed == 0 ? kOk : kCheckFailed;
}

int cmd_walls(const std::string& token, bool json) {
  const Token t = parse_token(token);
  const WallCrossingTrace tr = wallcrossing_trace(t.surface, t.beta);
  const Surface& ms = tr.model_surface;
  if (json) {
    nlohmann::ordered_json j;
    j["class"] = format_token(t.surface, t.beta);
    j["model"] = format_token(ms, tr.model_class);
    j["pairs_plus"] = tr.pairs_plus.to_string();
    j["pairs_minus"] = tr.pairs_minus.to_string();
    auto rows = nlohmann::ordered_json::array();
    for (const auto& d : tr.walls) rows.push_back(decomposition_to_json(ms, d));
    j["walls"] = rows;
    j["poincare"] = tr.poincare.to_string();
    std::cout << j.dump() << "\n";
    return kOk;
  }
  std::cout << "model " << format_token(ms, tr.model_class) << "\n";
  std::cout << "P_t(P_1)  = " << tr.pairs_plus.to_string() << "\n";
  std::cout << "P_t(P_-1) = " << tr.pairs_minus.to_string() << "\n";
  std::cout << "type,beta1,n1,beta2,n2,delta0,ext_plus,ext_minus,correction\n";
  for (const auto& d : tr.walls)
    std::cout << to_string(d.type) << ",\"" << format_class(ms, d.beta1) << "\"," << d.n1 << ",\""
              << format_class(ms, d.beta2) << "\"," << d.n2 << ',' << rational_to_string(d.wall_delta0) << ','
              << d.ext_plus << ',' << d.ext_minus << ",\"" << correction_poly(d).to_string() << "\"\n";
  std::cout << "count " << tr.walls.size() << "\n";
  std::cout << "P_t(M) = " << tr.poincare.to_string() << "\n";
  for (const auto& f : tr.flags) std::cerr << "note: " << f << "\n";
  return kOk;
}

std::int64_t curve_degree(const Surface& s, const DivClass& c) {
  return s.kind() == SurfaceKind::P1xP1 ? c[0] + c[1] : c[0];
}

int cmd_gw(const Surface& s, std::int64_t max_deg) {
  if (max_deg < 1) throw Error(ErrorKind::Parse, "--max-deg must be at least 1");
  SweepSpec spec;
  spec.surface = s;
  spec.max_degree = (s.kind() == SurfaceKind::P1xP1 ? 2 : 3) * max_deg;
  BpsTable table;
  table.surface = s;
  std::vector<DivClass> rows;
  for (const auto& c : sweep_classes(spec)) {
    if (curve_degree(s, c) > max_deg) continue;
    table.set(c, 0, bps_n(s, c));
    rows.push_back(c);
  }
  std::sort(rows.begin(), rows.end(), [&](const DivClass& a, const DivClass& b) {
    return std::make_pair(curve_degree(s, a), a) < std::make_pair(curve_degree(s, b), b);
  });
  std::cout << "class,I0\n";
  for (const auto& c : rows) {
    const GwValue v = gw_genus0(table, c);
    std::cout << '"' << format_class(s, c) << "\"," << rational_to_string(v.value) << "\n";
    for (const auto& m : v.missing)
      std::cerr << "warning: " << format_class(s, m) << " absent from the table; treated as 0\n";
  }
  return kOk;
}

BpsTable read_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  try {
    const nlohmann::json j = nlohmann::json::parse(in);
    BpsTable t;
    t.surface = parse_surface(j.at("surface").get<std::string>());
    for (const auto& e : j.at("entries")) {
      const DivClass beta = make_class(t.surface, e.at("class").get<std::vector<std::int64_t>>());
      const auto& n = e.at("n");
      t.set(beta, e.at("genus").get<int>(), n.is_string() ? mpz_class(n.get<std::string>()) : mpz_class(static_cast<long>(n.get<std::int64_t>())));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, path + ": " + e.what());
  }
}

int cmd_zpt(const std::string& path, std::int64_t max_deg, int q_min, int q_max, bool json) {
  const BpsTable table = read_table(path);
  const Truncation trunc{max_deg, q_min, q_max, true};
  const TruncSeries z = zpt_expand(table, trunc);
  if (!json) {
    std::cout << z.to_string() << "\n";
    return kOk;
  }
  nlohmann::ordered_json j;
  j["surface"] = table.surface.name();
  j["max_degree"] = max_deg;
  j["q_min"] = q_min;
  j["q_max"] = q_max;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [k, c] : z.coeffs())
    terms.push_back({{"class", k.first.coeffs}, {"q", k.second}, {"coeff", rational_to_string(c)}});
  j["terms"] = terms;
  j["text"] = z.to_string();
  std::cout << j.dump() << "\n";
  return kOk;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfScope: return kOutOfScope;
    case ErrorKind::Parse:
    case ErrorKind::InvalidClass: return kUsage;
    default: return kCheckFailed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Poincare polynomials and BPS invariants of curve classes on del Pezzo surfaces"};
  app.require_subcommand(1);

  std::string arg;
  bool json = false;
  bool csv = false;

  auto* lines = app.add_subcommand("lines", "list (-1)-curve classes");
  lines->add_option("surface", arg, "P2, P1xP1 or S1..S8")->required();
  auto* conics = app.add_subcommand("conics", "list conic classes");
  conics->add_option("surface", arg)->required();

  auto* classify_cmd = app.add_subcommand("classify", "profile of a class");
  classify_cmd->add_option("token", arg, "e.g. S5:(4;2,1,1,1,1)")->required();
  classify_cmd->add_flag("--json", json);

  auto* inv = app.add_subcommand("invariants", "Poincare polynomial, BPS and refined invariants");
  inv->add_option("token", arg)->required();
  auto* inv_json = inv->add_flag("--json", json);
  inv->add_flag("--csv", csv)->excludes(inv_json);

  auto* check = app.add_subcommand("check", "run every cross-check; exit 1 on failure");
  check->add_option("token", arg)->required();

  SweepSpec spec;
  std::vector<int> genera{0, 1, 2};
  std::string out_path;
  auto* sweep = app.add_subcommand("sweep", "generate and check all in-scope classes");
  sweep->add_option("surface", arg)->required();
  sweep->add_option("--genus", genera, "comma separated subset of 0,1,2")->delimiter(',')->check(CLI::Range(0, 2));
  sweep->add_option("--max-deg", spec.max_degree, "anticanonical degree bound")->check(CLI::PositiveNumber);
  sweep->add_flag("--orbits", spec.full_orbits, "emit full orbits instead of sorted representatives");
  sweep->add_option("--threads", spec.threads)->check(CLI::PositiveNumber);
  sweep->add_option("--out", out_path, "JSON-lines output file");
  sweep->add_flag("--csv", csv);

  auto* walls = app.add_subcommand("walls", "wall-crossing decompositions");
  walls->add_option("token", arg)->required();
  walls->add_flag("--json", json);

  std::int64_t gw_deg = 3;
  auto* gw = app.add_subcommand("gw", "genus-0 multiple cover sums");
  gw->add_option("surface", arg)->required();
  gw->add_option("--max-deg", gw_deg, "curve degree bound (beta.h, or a+b on P1xP1)");

  std::int64_t z_deg = 6;
  int q_min = -3;
  int q_max = 3;
  auto* zpt = app.add_subcommand("zpt", "truncated PT product expansion");
  zpt->add_option("table", arg, "JSON file {\"surface\":..,\"entries\":[{\"class\":..,\"genus\":..,\"n\":..}]}")->required();
  zpt->add_option("--max-deg", z_deg, "anticanonical degree bound");
  zpt->add_option("--q-min", q_min);
  zpt->add_option("--q-max", q_max);
  zpt->add_flag("--json", json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*lines) return print_list(parse_surface(arg), enumerate_lines(parse_surface(arg)));
    if (*conics) return print_list(parse_surface(arg), enumerate_conics(parse_surface(arg)));
    if (*classify_cmd) return cmd_classify(arg, json);
    if (*inv) return cmd_invariants(arg, json, csv);
    if (*check) return cmd_check(arg);
    if (*sweep) {
      spec.surface = parse_surface(arg);
      spec.genera = std::set<int>(genera.begin(), genera.end());
      return cmd_sweep(spec, out_path, csv);
    }
    if (*walls) return cmd_walls(arg, json);
    if (*gw) return cmd_gw(parse_surface(arg), gw_deg);
    if (*zpt) return cmd_zpt(arg, z_deg, q_min, q_max, json);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return kUsage;
}
