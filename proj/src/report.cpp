#include "dpbps/report.hpp"

#include <sstream>

#include "dpbps/classes.hpp"
#include "dpbps/error.hpp"
#include "dpbps/series.hpp"

namespace dpbps {

namespace {

nlohmann::ordered_json poly_json(const PolyZ& p) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& c : p.coeffs()) {
    if (c.fits_slong_p()) out.push_back(c.get_si());
    else out.push_back(c.get_str());
  }
  return out;
}

mpz_class json_int(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw Error(ErrorKind::Parse, "expected integer, got " + j.dump());
}

PolyZ poly_from_json(const nlohmann::json& j) {
  std::vector<mpz_class> c;
  for (const auto& x : j) c.push_back(json_int(x));
  return PolyZ(std::move(c));
}

std::string join_poly(const PolyZ& p) {
  std::string out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out += (i ? " " : "") + p.coeffs()[i].get_str();
  return out;
}

}  // namespace

nlohmann::ordered_json report_to_json(const InvariantReport& rep) {
  const ClassProfile& p = rep.profile;
  nlohmann::ordered_json j;
  j["surface"] = rep.surface.name();
  j["class"] = p.beta.coeffs;
  j["w"] = p.w;
  j["pa"] = p.pa;
  j["beta_sq"] = p.beta_sq;
  j["eta"] = p.eta;
  j["kind"] = std::string(to_string(p.kind));
  j["poincare"] = poly_json(rep.poincare);
  j["quotient"] = poly_json(rep.quotient);
  j["palindromic"] = rep.palindromic;
  j["n"] = rep.n.fits_slong_p() ? nlohmann::ordered_json(rep.n.get_si()) : nlohmann::ordered_json(rep.n.get_str());
  j["m"] = rep.m.fits_slong_p() ? nlohmann::ordered_json(rep.m.get_si()) : nlohmann::ordered_json(rep.m.get_str());
  auto refined = nlohmann::ordered_json::array();
  for (const auto& t : rep.refined.terms()) refined.push_back({{"jl2", t.jl2}, {"jr2", t.jr2}, {"mult", t.mult}});
  j["refined"] = refined;
  nlohmann::ordered_json checks = nlohmann::ordered_json::object();
  for (const auto& [k, v] : rep.checks) checks[k] = v;
  j["checks"] = checks;
  return j;
}

InvariantReport report_from_json(const nlohmann::json& j) {
  try {
    InvariantReport rep;
    rep.surface = parse_surface(j.at("surface").get<std::string>());
    const DivClass beta = make_class(rep.surface, j.at("class").get<std::vector<std::int64_t>>());
    rep.profile = classify(rep.surface, beta);
    if (rep.profile.w != j.at("w").get<std::int64_t>() || rep.profile.pa != j.at("pa").get<std::int64_t>() ||
        rep.profile.beta_sq != j.at("beta_sq").get<std::int64_t>() || rep.profile.eta != j.at("eta").get<std::int64_t>() ||
        rep.profile.kind != parse_class_kind(j.at("kind").get<std::string>()))
      throw Error(ErrorKind::Parse, "stored profile does not match class " + format_token(rep.surface, beta));
    rep.poincare = poly_from_json(j.at("poincare"));
    rep.quotient = poly_from_json(j.at("quotient"));
    rep.palindromic = j.at("palindromic").get<bool>();
    rep.n = json_int(j.at("n"));
    rep.m = json_int(j.at("m"));
    for (const auto& t : j.at("refined"))
      rep.refined.add(t.at("jl2").get<int>(), t.at("jr2").get<int>(), t.at("mult").get<std::int64_t>());
    rep.dim = rep.profile.beta_sq + 1;
    for (const auto& [k, v] : j.at("checks").items()) rep.checks[k] = v.get<bool>();
    return rep;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

std::string csv_header() { return "surface,class,w,pa,beta_sq,eta,kind,poincare,quotient,palindromic,n,m,checks_pass"; }

std::string report_to_csv(const InvariantReport& rep) {
  const ClassProfile& p = rep.profile;
  std::ostringstream os;
  os << rep.surface.name() << ",\"" << format_class(rep.surface, p.beta) << "\"," << p.w << ',' << p.pa << ','
     << p.beta_sq << ',' << p.eta << ',' << to_string(p.kind) << ",\"" << join_poly(rep.poincare) << "\",\""
     << join_poly(rep.quotient) << "\"," << (rep.palindromic ? "true" : "false") << ',' << rep.n << ',' << rep.m
     << ',' << (rep.all_checks_pass() ? "true" : "false");
  return os.str();
}

std::string report_to_text(const InvariantReport& rep) {
  const ClassProfile& p = rep.profile;
  std::ostringstream os;
  os << "class     " << format_token(rep.surface, p.beta) << "\n"
     << "kind      " << to_string(p.kind) << "\n"
     << "w         " << p.w << "\n"
     << "p_a       " << p.pa << "\n"
     << "beta^2    " << p.beta_sq << "\n"
     << "eta       " << p.eta << "\n"
     << "P_t(M)    " << rep.poincare.to_string() << "\n"
     << "quotient  " << rep.quotient.to_string() << (rep.palindromic ? " (palindromic)" : " (not palindromic)") << "\n"
     << "n         " << rep.n << "\n"
     << "m         " << rep.m << "\n"
     << "refined  ";
  for (const auto& t : rep.refined.terms())
    os << ' ' << (t.mult == 1 ? "" : std::to_string(t.mult)) << '[' << rational_to_string(mpq_class(t.jl2, 2)) << ','
       << rational_to_string(mpq_class(t.jr2, 2)) << ']';
  os << "\n";
  for (const auto& [k, v] : rep.checks) os << "check     " << k << ": " << (v ? "pass" : "FAIL") << "\n";
  for (const auto& f : rep.flags) os << "note      " << f << "\n";
  return os.str();
}

nlohmann::ordered_json decomposition_to_json(const Surface& s, const Decomposition& d) {
  nlohmann::ordered_json j;
  j["type"] = std::string(to_string(d.type));
  j["beta1"] = format_class(s, d.beta1);
  j["n1"] = d.n1;
  j["beta2"] = format_class(s, d.beta2);
  j["n2"] = d.n2;
  j["delta0"] = rational_to_string(d.wall_delta0);
  j["ext_plus"] = d.ext_plus;
  j["ext_minus"] = d.ext_minus;
  j["correction"] = correction_poly(d).to_string();
  return j;
}

}  // namespace dpbps
