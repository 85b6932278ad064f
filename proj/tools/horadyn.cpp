// horadyn command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "horadyn/horadyn.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitFailedSuite = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSingular = 3;

struct EquationDeleter {
  void operator()(hd_equation* e) const { hd_equation_destroy(e); }
};
struct SeriesDeleter {
  void operator()(hd_series* s) const { hd_series_destroy(s); }
};
struct ProductsDeleter {
  void operator()(hd_products* p) const { hd_products_destroy(p); }
};
struct ReportDeleter {
  void operator()(hd_identity_report* r) const { hd_identity_report_destroy(r); }
};
using Equation = std::unique_ptr<hd_equation, EquationDeleter>;
using Series = std::unique_ptr<hd_series, SeriesDeleter>;
using Products = std::unique_ptr<hd_products, ProductsDeleter>;
using Report = std::unique_ptr<hd_identity_report, ReportDeleter>;

// Thrown to unwind out of a subcommand with a given exit status.
struct Exit {
  int code;
};

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int exit_code_for(hd_status st) {
  switch (st) {
    case HD_OK: return kExitOk;
    case HD_ERR_FORBIDDEN_INITIAL:
    case HD_ERR_INITIAL_AT_MINUS_PHI_PLUS:
    case HD_ERR_SINGULARITY:
    case HD_ERR_NEAR_SINGULARITY: return kExitSingular;
    case HD_ERR_INVALID_ARGUMENT:
    case HD_ERR_INDEX_CONSTRAINT:
    case HD_ERR_WRONG_BRANCH:
    case HD_ERR_SPEC_NOT_CANONICAL: return kExitUsage;
    default: return kExitFailedSuite;
  }
}

void check(hd_status st) {
  if (st == HD_OK) return;
  std::cerr << "horadyn: " << hd_status_name(st) << ": " << hd_last_error();
  if (hd_last_error_step() >= 0) std::cerr << " (step " << hd_last_error_step() << ")";
  std::cerr << '\n';
  throw Exit{exit_code_for(st)};
}

struct EquationArgs {
  std::string branch = "plus";
  std::string p;
  std::string q;
  int nu = 1;

  void add_to(CLI::App* cmd, bool with_nu) {
    cmd->add_option("--branch", branch, "plus: q/(p+x^nu), minus: q/(-p+x^nu)")
        ->check(CLI::IsMember({"plus", "minus"}))
        ->capture_default_str();
    cmd->add_option("--p", p, "p > 0 (rational)")->required();
    cmd->add_option("--q", q, "q > 0 (rational)")->required();
    if (with_nu) cmd->add_option("--nu", nu, "exponent nu >= 1")->capture_default_str();
  }

  Equation make() const {
    hd_equation* raw = nullptr;
    check(hd_equation_create(branch == "plus" ? HD_BRANCH_PLUS : HD_BRANCH_MINUS, p.c_str(), q.c_str(), nu, &raw));
    return Equation(raw);
  }
};

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
}

std::string cell(const hd_series* s, std::size_t i) {
  const char* exact = hd_series_exact(s, i);
  return exact ? std::string(exact) : fmt17(hd_series_value(s, i));
}

const char* status_name(hd_orbit_status st) {
  switch (st) {
    case HD_ORBIT_COMPLETED: return "completed";
    case HD_ORBIT_SINGULARITY: return "singularity";
    case HD_ORBIT_NEAR_SINGULAR: return "near-singular";
  }
  return "unknown";
}

json series_json(const hd_series* s) {
  json rows = json::array();
  const bool exact = hd_series_is_exact(s);
  for (std::size_t i = 0; i < hd_series_length(s); ++i) {
    json row;
    row["n"] = hd_series_index(s, i);
    if (exact)
      row["value"] = hd_series_exact(s, i);
    else
      row["value"] = hd_series_value(s, i);
    rows.push_back(std::move(row));
  }
  return rows;
}

void print_csv(const hd_series* s) {
  std::cout << "n,value\n";
  for (std::size_t i = 0; i < hd_series_length(s); ++i) std::cout << hd_series_index(s, i) << ',' << cell(s, i) << '\n';
}

// Emits a series; a series that stopped at a singularity still prints what it
// has, then exits 3.
void emit_series(const hd_series* s, const std::string& format, json meta = json::object()) {
  long step = -1;
  const hd_orbit_status st = hd_series_status(s, &step);
  if (format == "json") {
    meta["status"] = status_name(st);
    if (step >= 0) meta["status_step"] = step;
    meta["series"] = series_json(s);
    std::cout << meta.dump(2) << '\n';
  } else {
    print_csv(s);
  }
  if (st != HD_ORBIT_COMPLETED) {
    std::cerr << "horadyn: orbit stopped: " << status_name(st) << " at step " << step << '\n';
    throw Exit{kExitSingular};
  }
}

json equation_json(const EquationArgs& e) {
  return json{{"branch", e.branch}, {"p", e.p}, {"q", e.q}, {"nu", e.nu}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numerical analysis of x' = q/(+-p + x^nu) and Horadam sequences", "horadyn"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(hd_version()));

  // horadam
  std::string h_a = "0", h_b = "1", h_p, h_q, h_format = "csv";
  long h_from = 0, h_to = 20;
  auto* horadam = app.add_subcommand("horadam", "Horadam sequence W_n(a,b;p,q) over an index window");
  horadam->add_option("--p", h_p)->required();
  horadam->add_option("--q", h_q)->required();
  horadam->add_option("--a", h_a)->capture_default_str();
  horadam->add_option("--b", h_b)->capture_default_str();
  horadam->add_option("--from", h_from)->capture_default_str();
  horadam->add_option("--to", h_to)->capture_default_str();
  add_format(horadam, h_format);

  // simulate
  EquationArgs s_eq;
  std::string s_x0, s_plane = "float", s_format = "csv";
  long s_steps = 50;
  long s_max_period = 0, s_burn_in = 100;
  double s_period_tol = 1e-9;
  auto* simulate = app.add_subcommand("simulate", "Iterate the map from x0");
  s_eq.add_to(simulate, true);
  simulate->add_option("--x0", s_x0)->required();
  simulate->add_option("--steps", s_steps)->check(CLI::NonNegativeNumber)->capture_default_str();
  simulate->add_option("--plane", s_plane)->check(CLI::IsMember({"exact", "float"}))->capture_default_str();
  simulate->add_option("--detect-period", s_max_period, "report the smallest period up to this bound");
  simulate->add_option("--period-tol", s_period_tol)->capture_default_str();
  simulate->add_option("--burn-in", s_burn_in)->capture_default_str();
  add_format(simulate, s_format);

  // closed-form
  EquationArgs c_eq;
  std::string c_x0, c_format = "csv";
  long c_n = 20;
  auto* closed = app.add_subcommand("closed-form", "x_0..x_n from the Horadam closed form (nu = 1)");
  c_eq.add_to(closed, false);
  closed->add_option("--x0", c_x0)->required();
  closed->add_option("--n", c_n)->check(CLI::NonNegativeNumber)->capture_default_str();
  add_format(closed, c_format);

  // forbidden
  EquationArgs f_eq;
  std::string f_format = "csv";
  long f_depth = 20;
  auto* forbidden = app.add_subcommand("forbidden", "Initial values whose orbit is undefined at step n (nu = 1)");
  f_eq.add_to(forbidden, false);
  forbidden->add_option("--depth", f_depth)->check(CLI::PositiveNumber)->capture_default_str();
  add_format(forbidden, f_format);

  // products
  EquationArgs pr_eq;
  std::string pr_x0, pr_format = "csv";
  long pr_steps = 40;
  auto* products = app.add_subcommand("products", "Running products x_0 x_1 ... x_n and their limit (nu = 1)");
  pr_eq.add_to(products, false);
  products->add_option("--x0", pr_x0)->required();
  products->add_option("--steps", pr_steps)->check(CLI::NonNegativeNumber)->capture_default_str();
  add_format(products, pr_format);

  // analyze
  EquationArgs a_eq;
  std::string a_format = "csv";
  auto* analyze = app.add_subcommand("analyze", "Equilibria and their linearised stability");
  a_eq.add_to(analyze, true);
  add_format(analyze, a_format);

  // period2
  EquationArgs t_eq;
  double t_tol = 1e-10;
  std::string t_format = "csv";
  auto* period2 = app.add_subcommand("period2", "Prime period-two cycle");
  t_eq.add_to(period2, true);
  period2->add_option("--tol", t_tol)->check(CLI::PositiveNumber)->capture_default_str();
  add_format(period2, t_format);

  // identities
  std::string i_p, i_q, i_format = "csv";
  long i_nmax = 20;
  auto* identities = app.add_subcommand("identities", "Exhaustive check of the Horadam identities up to nmax");
  identities->add_option("--p", i_p)->required();
  identities->add_option("--q", i_q)->required();
  identities->add_option("--nmax", i_nmax)->capture_default_str();
  add_format(identities, i_format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }


  try {
    if (*horadam) {
      hd_series* raw = nullptr;
      check(hd_horadam_series(h_a.c_str(), h_b.c_str(), h_p.c_str(), h_q.c_str(), h_from, h_to, &raw));
      Series s(raw);
      emit_series(s.get(), h_format, json{{"a", h_a}, {"b", h_b}, {"p", h_p}, {"q", h_q}});
    } else if (*simulate) {
      auto eq = s_eq.make();
      hd_series* raw = nullptr;
      check(hd_simulate(eq.get(), s_x0.c_str(), s_steps, s_plane == "exact" ? HD_PLANE_EXACT : HD_PLANE_FLOAT, &raw));
      Series s(raw);
      json meta = equation_json(s_eq);
      meta["x0"] = s_x0;
      meta["plane"] = s_plane;
      if (s_max_period > 0) {
        long period = 0, phase = 0;
        int found = 0;
        check(hd_detect_period(s.get(), s_max_period, s_period_tol, s_burn_in, &period, &phase, &found));
        if (s_format == "json") {
          meta["period"] = found ? json(period) : json(nullptr);
          if (found) meta["phase"] = phase;
        } else if (found) {
          std::cout << "# period: " << period << "\n# phase: " << phase << '\n';
        } else {
          std::cout << "# period: none\n";
        }
      }
      emit_series(s.get(), s_format, std::move(meta));
    } else if (*closed) {
      auto eq = c_eq.make();
      hd_series* raw = nullptr;
      check(hd_closed_form(eq.get(), c_x0.c_str(), c_n, &raw));
      Series s(raw);
      json meta = equation_json(c_eq);
      meta["x0"] = c_x0;
      emit_series(s.get(), c_format, std::move(meta));
    } else if (*forbidden) {
      auto eq = f_eq.make();
      hd_series* raw = nullptr;
      check(hd_forbidden(eq.get(), f_depth, &raw));
      Series s(raw);
      emit_series(s.get(), f_format, equation_json(f_eq));
    } else if (*products) {
      auto eq = pr_eq.make();
      hd_products* raw = nullptr;
      check(hd_products_create(eq.get(), pr_x0.c_str(), pr_steps, &raw));
      Products r(raw);
      double limit = 0, even = 0, odd = 0;
      const bool has_limit = hd_products_limit(r.get(), &limit);
      const bool has_even = hd_products_even_limit(r.get(), &even);
      const bool has_odd = hd_products_odd_limit(r.get(), &odd);
      const hd_series* partials = hd_products_partials(r.get());
      if (pr_format == "json") {
        json meta = equation_json(pr_eq);
        meta["x0"] = pr_x0;
        meta["regime"] = hd_products_regime(r.get());
        meta["predicted_limit"] = has_limit ? json(limit) : json(nullptr);
        meta["alternating"] = hd_products_alternating(r.get()) != 0;
        if (has_even) meta["even_limit"] = even;
        if (has_odd) meta["odd_limit"] = odd;
        meta["divergence_certified"] = hd_products_divergence_certified(r.get()) != 0;
        meta["status"] = "completed";
        meta["series"] = series_json(partials);
        std::cout << meta.dump(2) << '\n';
      } else {
        std::cout << "# regime: " << hd_products_regime(r.get()) << '\n';
        std::cout << "# predicted_limit: " << (has_limit ? fmt17(limit) : std::string("none")) << '\n';
        if (hd_products_alternating(r.get())) {
          std::cout << "# alternating: true\n";
          if (has_even) std::cout << "# even_limit: " << fmt17(even) << '\n';
          if (has_odd) std::cout << "# odd_limit: " << fmt17(odd) << '\n';
        }
        std::cout << "# divergence_certified: " << (hd_products_divergence_certified(r.get()) ? "true" : "false")
                  << '\n';
        print_csv(partials);
      }
    } else if (*analyze) {
      auto eq = a_eq.make();
      hd_equilibrium reports[4];
      std::size_t count = 0;
      check(hd_equilibria(eq.get(), reports, 4, &count));
      if (a_format == "json") {
        json out = equation_json(a_eq);
        json list = json::array();
        for (std::size_t i = 0; i < count; ++i)
          list.push_back({{"value", reports[i].value},
                          {"multiplier", reports[i].multiplier},
                          {"classification", hd_stability_name(reports[i].classification)},
                          {"bracket", hd_bracket_name(reports[i].bracket)}});
        out["equilibria"] = std::move(list);
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << "value,multiplier,classification,bracket\n";
        for (std::size_t i = 0; i < count; ++i)
          std::cout << fmt17(reports[i].value) << ',' << fmt17(reports[i].multiplier) << ','
                    << hd_stability_name(reports[i].classification) << ',' << hd_bracket_name(reports[i].bracket)
                    << '\n';
      }
    } else if (*period2) {
      auto eq = t_eq.make();
      hd_cycle c{};
      int found = 0;
      check(hd_period_two(eq.get(), t_tol, &c, &found));
      if (t_format == "json") {
        json out = equation_json(t_eq);
        if (found) {
          out["cycle"] = {{"phi", c.phi}, {"psi", c.psi}, {"residual", c.residual}};
          out["approx_form"] = {c.approx_phi, c.approx_psi};
        } else {
          out["cycle"] = nullptr;
        }
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << "phi,psi,residual,approx_phi,approx_psi\n";
        if (found)
          std::cout << fmt17(c.phi) << ',' << fmt17(c.psi) << ',' << fmt17(c.residual) << ',' << fmt17(c.approx_phi)
                    << ',' << fmt17(c.approx_psi) << '\n';
        else
          std::cerr << "horadyn: no prime two-cycle found\n";
      }
    } else if (*identities) {
      hd_identity_report* raw = nullptr;
      check(hd_identity_suite(i_p.c_str(), i_q.c_str(), i_nmax, &raw));
      Report r(raw);
      if (i_format == "json") {
        json out{{"p", i_p}, {"q", i_q}, {"nmax", i_nmax}};
        json list = json::array();
        for (std::size_t i = 0; i < hd_identity_report_count(r.get()); ++i)
          list.push_back({{"identity", hd_identity_report_kind(r.get(), i)},
                          {"checked", hd_identity_report_checked(r.get(), i)},
                          {"failed", hd_identity_report_failed(r.get(), i)}});
        out["identities"] = std::move(list);
        out["all_zero"] = hd_identity_report_all_zero(r.get()) != 0;
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << "identity,checked,failed\n";
        for (std::size_t i = 0; i < hd_identity_report_count(r.get()); ++i)
          std::cout << hd_identity_report_kind(r.get(), i) << ',' << hd_identity_report_checked(r.get(), i) << ','
                    << hd_identity_report_failed(r.get(), i) << '\n';
      }
      if (!hd_identity_report_all_zero(r.get())) throw Exit{kExitFailedSuite};
    }
  } catch (const Exit& e) {
    std::cout.flush();
    return e.code;
  }
  return kExitOk;
}
