#include "sgb/pipeline.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sgb::pipeline {

namespace {

using nlohmann::ordered_json;

constexpr int kBoundarySamples = 4096;

// every numeric JSON leaf carries its formula anchor
ordered_json num(double v, const char* provenance) {
  return ordered_json{{"value", v}, {"provenance", provenance}};
}

ordered_json bound_value(const bounds::BoundValue& b, const char* provenance) {
  return ordered_json{
      {"value", b.value}, {"vacuous", b.vacuous}, {"provenance", provenance}};
}

double polygon_perimeter(const confmap::Polygon& poly) {
  double s = 0.0;
  for (size_t k = 0; k < poly.size(); ++k) {
    const auto& p = poly[k];
    const auto& q = poly[(k + 1) % poly.size()];
    s += std::hypot(q[0] - p[0], q[1] - p[1]);
  }
  return s;
}

constants::ConstantTrace trace(std::string name, double value, double arg,
                               std::string formula, bool is_log10 = false) {
  constants::ConstantTrace t;
  t.name = std::move(name);
  t.value = value;
  t.is_log10 = is_log10;
  t.optimizer_argument = arg;
  t.formula_id = std::move(formula);
  return t;
}

void fill_common(DomainReport& rep, double alpha) {
  rep.alpha = alpha;
  rep.area = confmap::area(rep.map);
  rep.deriv_norm = confmap::derivative_norm(rep.map, alpha);
  rep.deviation_l2 = confmap::deviation_norm_l2(rep.map);
  rep.variation = confmap::variation_upper_bound(rep.map, alpha);
  rep.gamma = constants::gamma_alpha(alpha);
  rep.rho_numeric = confmap::inscribed_radius(rep.map, confmap::InradiusMode::numeric);
}

double ratio_band(double l1, double b1, double l2, double b2) {
  // first-order propagation of the two per-mode bands into the ratio
  return (l2 / l1) * (b1 / l1 + b2 / l2);
}

}  // namespace

std::string alpha_label(double alpha) {
  if (std::isinf(alpha)) return "inf";
  std::ostringstream oss;
  oss << alpha;
  return oss.str();
}

DomainReport epicycloid_report(int n, double alpha,
                               const constants::DiscConstants& disc) {
  DomainReport rep;
  rep.family = "epicycloid";
  rep.param = n;
  rep.map = confmap::epicycloid_map(n);
  fill_common(rep, alpha);
  rep.rho = confmap::inscribed_radius(rep.map, confmap::InradiusMode::closed_form);
  rep.perimeter = polygon_perimeter(confmap::boundary_polygon(rep.map, kBoundarySamples));

  bounds::BoundInputs in;
  in.rho = rep.rho;
  in.alpha = alpha;
  in.variation = rep.variation;
  in.gamma_alpha_value = rep.gamma.value;
  in.area = rep.area;
  in.perimeter = rep.perimeter;

  bounds::BoundReport br;
  br.lambda1_upper = bounds::lambda1_upper(in, disc);
  br.lambda2_lower = bounds::lambda2_lower(in, disc);
  br.ratio_lower = bounds::ppw_ratio_lower(in, disc);
  br.gap_lower = bounds::spectral_gap_lower(in, disc);
  const double l1rho = disc.lambda1 / (rep.rho * rep.rho);
  br.stability_radius_k[1] =
      bounds::stability_bound(1, l1rho * l1rho, rep.gamma.value, rep.variation);
  br.stability_radius_k[2] = bounds::stability_bound(
      2, disc.lambda_star * disc.lambda_star * l1rho * l1rho, rep.gamma.value,
      rep.variation);
  br.pw_upper = bounds::payne_weinberger_upper(rep.area, rep.perimeter, disc);
  br.fk_lower = bounds::faber_krahn_lower(rep.area, disc);
  br.constants_used = {
      trace("lambda1_disc", disc.lambda1, std::nan(""), "disc-spectrum"),
      trace("lambda2_disc", disc.lambda2, std::nan(""), "disc-spectrum"),
      trace("gamma_alpha", rep.gamma.value, rep.gamma.p_star, "gamma-alpha-infimum"),
      trace("variation_upper", rep.variation, std::nan(""), "witness-variation"),
      trace("inscribed_radius", rep.rho, std::nan(""), "epicycloid-inradius"),
  };
  rep.bound_report = std::move(br);
  return rep;
}

DomainReport section4_report(int k, double alpha,
                             const constants::DiscConstants& disc) {
  DomainReport rep;
  rep.family = "section4";
  rep.param = k;
  auto s4 = confmap::section4_map(k);
  rep.map = s4.map;
  rep.t = s4.t;
  fill_common(rep, alpha);
  rep.rho = rep.rho_numeric;
  rep.perimeter = polygon_perimeter(confmap::boundary_polygon(rep.map, kBoundarySamples));
  rep.containment_certified = confmap::check_disc_containment(rep.map, rep.t);

  for (int kk = 1; kk <= 4; ++kk) {
    auto [lo, hi] = bounds::high_eigenvalue_bounds(kk, rep.t, rep.gamma.value,
                                                   rep.variation, disc,
                                                   rep.containment_certified);
    rep.high_bounds.push_back({kk, lo, hi, !(lo > 0.0)});
  }
  rep.high_ratio_12 =
      bounds::high_ratio_lower(1, 2, rep.t, rep.gamma.value, rep.variation,
                               disc, rep.containment_certified);
  return rep;
}

void attach_solver(DomainReport& rep, double h,
                   const constants::DiscConstants& disc) {
  auto poly = confmap::boundary_polygon(rep.map, kBoundarySamples);
  SolverCheck sc;
  sc.result = eigensolver::solve_domain(poly, h, 3, true);
  // conservative fine-grid values (no Richardson across boundary cusps)
  sc.lambda1 = sc.result.values_half[0];
  sc.lambda2 = sc.result.values_half[1];
  sc.band1 = sc.result.band[0];
  sc.band2 = sc.result.band[1];

  auto add = [&](std::string name, bool pass, double lhs, double rhs) {
    sc.flags.push_back({std::move(name), pass, lhs, rhs});
  };
  const double rband =
      ratio_band(sc.lambda1, sc.band1, sc.lambda2, sc.band2);
  const double ratio = sc.lambda2 / sc.lambda1;

  if (rep.bound_report) {
    const auto& br = *rep.bound_report;
    add("lambda1_le_upper", sc.lambda1 <= br.lambda1_upper + sc.band1,
        sc.lambda1, br.lambda1_upper);
    if (!br.lambda2_lower.vacuous)
      add("lambda2_ge_lower", sc.lambda2 >= br.lambda2_lower.value - sc.band2,
          sc.lambda2, br.lambda2_lower.value);
    if (!br.ratio_lower.vacuous)
      add("ratio_ge_lower", ratio >= br.ratio_lower.value - rband, ratio,
          br.ratio_lower.value);
    if (!br.gap_lower.vacuous)
      add("gap_ge_lower",
          sc.lambda2 - sc.lambda1 >= br.gap_lower.value - sc.band1 - sc.band2,
          sc.lambda2 - sc.lambda1, br.gap_lower.value);
    add("ratio_le_ppw", ratio <= disc.lambda_star + rband, ratio,
        disc.lambda_star);
    add("fk_le_lambda1", sc.lambda1 >= br.fk_lower - sc.band1, sc.lambda1,
        br.fk_lower);
    const double l1rho = disc.lambda1 / (rep.rho * rep.rho);
    add("domain_monotonicity", sc.lambda1 <= l1rho + sc.band1, sc.lambda1,
        l1rho);
  }
  if (rep.family == "section4" && !rep.high_bounds.empty()) {
    const auto& hb = rep.high_bounds.front();  // k = 1
    add("lambda1_le_t2_disc", sc.lambda1 <= hb.upper + sc.band1, sc.lambda1,
        hb.upper);
    if (!hb.vacuous)
      add("lambda1_ge_lower", sc.lambda1 >= hb.lower - sc.band1, sc.lambda1,
          hb.lower);
  }
  sc.all_pass = true;
  for (const auto& f : sc.flags) sc.all_pass = sc.all_pass && f.pass;
  rep.solver = std::move(sc);
}

nlohmann::ordered_json report_to_json(const DomainReport& rep) {
  ordered_json j;
  j["schema"] = "sgb/1";
  j["family"] = rep.family;
  j["param"] = rep.param;
  j["alpha"] = alpha_label(rep.alpha);
  j["map"] = confmap::map_to_json(rep.map);
  j["area"] = num(rep.area, "coefficient-area-sum");
  j["inscribed_radius"] = num(rep.rho, rep.family == "epicycloid"
                                           ? "epicycloid-inradius"
                                           : "grid-inradius");
  j["inscribed_radius_numeric"] = num(rep.rho_numeric, "grid-inradius");
  j["perimeter"] = num(rep.perimeter, "boundary-polygon-arclength");
  j["derivative_norm_alpha"] = num(rep.deriv_norm, "disc-quadrature");
  j["deviation_l2"] = num(rep.deviation_l2, "coefficient-l2-identity");
  j["variation_upper"] = num(rep.variation, "witness-variation");
  j["gamma_alpha"] = ordered_json{{"value", rep.gamma.value},
                                  {"p_star", rep.gamma.p_star},
                                  {"interior_minimum", rep.gamma.interior},
                                  {"provenance", "gamma-alpha-infimum"}};
  if (rep.bound_report) {
    const auto& br = *rep.bound_report;
    ordered_json b;
    b["lambda1_upper"] = num(br.lambda1_upper, "lambda1-upper");
    b["lambda2_lower"] = bound_value(br.lambda2_lower, "lambda2-lower");
    b["ratio_lower"] = bound_value(br.ratio_lower, "ppw-ratio-lower");
    b["gap_lower"] = bound_value(br.gap_lower, "spectral-gap-lower");
    ordered_json st;
    for (const auto& [k, v] : br.stability_radius_k)
      st[std::to_string(k)] = num(v, "stability-estimate");
    b["stability_radius_k"] = st;
    if (br.pw_upper) b["pw_upper"] = num(*br.pw_upper, "payne-weinberger-upper");
    b["fk_lower"] = num(br.fk_lower, "faber-krahn-lower");
    ordered_json traces = ordered_json::array();
    for (const auto& t : br.constants_used) {
      ordered_json tr;
      tr["name"] = t.name;
      tr[t.is_log10 ? "log10_value" : "value"] = t.value;
      if (!std::isnan(t.optimizer_argument))
        tr["optimizer_argument"] = t.optimizer_argument;
      tr["formula_id"] = t.formula_id;
      traces.push_back(tr);
    }
    b["constants_used"] = traces;
    j["bounds"] = b;
  }
  if (rep.family == "section4") {
    j["t"] = num(rep.t, "section4-scaling");
    j["containment_certified"] = rep.containment_certified;
    ordered_json hb = ordered_json::array();
    for (const auto& h : rep.high_bounds)
      hb.push_back(ordered_json{{"k", h.k},
                                {"lower", h.lower},
                                {"upper", h.upper},
                                {"vacuous", h.vacuous},
                                {"provenance", "high-eigenvalue-sandwich"}});
    j["high_eigenvalue_bounds"] = hb;
    j["high_ratio_lower_12"] = bound_value(rep.high_ratio_12, "high-ratio-lower");
  }
  if (rep.solver) {
    const auto& sc = *rep.solver;
    ordered_json s;
    s["h"] = sc.result.h;
    s["n_nodes"] = sc.result.n_nodes;
    s["eigenvalues_h"] = sc.result.values;
    s["eigenvalues_h2"] = sc.result.values_half;
    s["richardson"] = sc.result.extrapolated;
    s["band"] = sc.result.band;
    s["lambda1"] = num(sc.lambda1, "fd-oracle");
    s["lambda2"] = num(sc.lambda2, "fd-oracle");
    ordered_json flags = ordered_json::array();
    for (const auto& f : sc.flags)
      flags.push_back(ordered_json{
          {"name", f.name}, {"pass", f.pass}, {"lhs", f.lhs}, {"rhs", f.rhs}});
    s["sandwich_flags"] = flags;
    s["all_pass"] = sc.all_pass;
    j["solver"] = s;
  }
  return j;
}

nlohmann::ordered_json constants_to_json(const std::vector<double>& alphas,
                                         const constants::DiscConstants& disc) {
  ordered_json j;
  j["schema"] = "sgb/1";
  ordered_json d;
  d["j01"] = num(disc.j01, "bessel-zero");
  d["lambda1"] = num(disc.lambda1, "disc-spectrum");
  d["lambda2"] = num(disc.lambda2, "disc-spectrum");
  d["lambda_star"] = num(disc.lambda_star, "disc-spectrum");
  j["disc"] = d;
  ordered_json rows = ordered_json::array();
  for (double a : alphas) {
    auto g = constants::gamma_alpha(a);
    const double r = std::isinf(a) ? 4.0 : 4.0 * a / (a - 2.0);
    auto pc = constants::poincare_constant_bound(r);
    rows.push_back(ordered_json{
        {"alpha", alpha_label(a)},
        {"gamma_alpha", num(g.value, "gamma-alpha-infimum")},
        {"p_star", g.p_star},
        {"interior_minimum", g.interior},
        {"r", r},
        {"poincare_bound", num(pc.value, "poincare-sobolev-bound")},
    });
  }
  j["alphas"] = rows;
  return j;
}

nlohmann::ordered_json quasidisc_to_json(const quasidisc::QuasidiscReport& rep) {
  ordered_json j;
  j["schema"] = "sgb/1";
  j["K"] = rep.params.K;
  j["alpha_star"] = num(rep.params.alpha_star, "integrability-exponent");
  j["feasible_alpha_max"] = num(rep.params.feasible_alpha_max, "nu-feasibility");
  j["m_alpha_log10"] = ordered_json{{"log10_value", rep.m.value.log10_value},
                                    {"alpha_opt", rep.m.alpha_opt},
                                    {"s_opt", rep.m.s_opt},
                                    {"p_opt", rep.m.p_opt},
                                    {"provenance", "quasidisc-m-alpha"}};
  if (rep.slack_sign == 0) {
    j["slack_log10"] =
        ordered_json{{"zero", true}, {"provenance", "quasidisc-stability-slack"}};
  } else {
    j["slack_log10"] = ordered_json{{"log10_value", rep.slack_log10},
                                    {"zero", false},
                                    {"provenance", "quasidisc-stability-slack"}};
  }
  j["lambda1_upper"] =
      ordered_json{{"value", rep.lambda1_upper_linear},
                   {"finite", rep.lambda1_upper_finite},
                   {"provenance", "lambda1-upper"}};
  j["lambda2_lower"] = bound_value(rep.lambda2_lower, "lambda2-lower");
  j["ratio_lower"] = bound_value(rep.ratio_lower, "ppw-ratio-lower");
  return j;
}

std::string sweep_csv(const std::vector<DomainReport>& reports) {
  std::ostringstream oss;
  oss.precision(17);
  oss << "param,alpha,variation,lambda1_upper,lambda2_lower,lambda2_vacuous,"
         "ratio_lower,ratio_vacuous,gap_lower,C_factor";
  bool solver = !reports.empty() && reports.front().solver.has_value();
  if (solver) oss << ",solver_lambda1,solver_lambda2,band1,band2,all_pass";
  oss << "\n";
  for (const auto& r : reports) {
    double c = r.bound_report ? r.bound_report->stability_radius_k.at(1) : 0.0;
    oss << r.param << "," << alpha_label(r.alpha) << "," << r.variation << ",";
    if (r.bound_report) {
      const auto& b = *r.bound_report;
      oss << b.lambda1_upper << "," << b.lambda2_lower.value << ","
          << (b.lambda2_lower.vacuous ? 1 : 0) << "," << b.ratio_lower.value
          << "," << (b.ratio_lower.vacuous ? 1 : 0) << "," << b.gap_lower.value
          << "," << c;
    } else {
      oss << ",,,,,,";
    }
    if (r.solver) {
      const auto& s = *r.solver;
      oss << "," << s.lambda1 << "," << s.lambda2 << "," << s.band1 << ","
          << s.band2 << "," << (s.all_pass ? 1 : 0);
    } else if (solver) {
      oss << ",,,,,";
    }
    oss << "\n";
  }
  return oss.str();
}

}  // namespace sgb::pipeline
