#include "horadyn/horadyn.h"

#include <new>
#include <optional>
#include <string>
#include <vector>

#include "horadyn/analysis.hpp"
#include "horadyn/closed_form.hpp"
#include "horadyn/dynamics.hpp"
#include "horadyn/equation.hpp"
#include "horadyn/error.hpp"
#include "horadyn/horadam.hpp"
#include "horadyn/rational.hpp"

using namespace horadyn;

struct hd_equation {
  EquationSpec spec;
};

struct hd_series {
  std::vector<long> index;
  std::vector<double> values;
  std::vector<std::string> exact;  // empty for floating series
  hd_orbit_status status = HD_ORBIT_COMPLETED;
  long status_step = -1;
};

struct hd_products {
  closed_form::ProductAnalysis analysis;
  hd_series partials;
};

struct hd_identity_report {
  std::array<horadam::IdentitySuiteEntry, 5> entries;
};

namespace {

thread_local std::string g_last_error;
thread_local long g_last_step = -1;

hd_status map_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return HD_ERR_INVALID_ARGUMENT;
    case ErrorCode::NonRealRoots: return HD_ERR_NON_REAL_ROOTS;
    case ErrorCode::SpecNotCanonical: return HD_ERR_SPEC_NOT_CANONICAL;
    case ErrorCode::IndexConstraintViolated: return HD_ERR_INDEX_CONSTRAINT;
    case ErrorCode::ZeroDenominator: return HD_ERR_ZERO_DENOMINATOR;
    case ErrorCode::ForbiddenInitialCondition: return HD_ERR_FORBIDDEN_INITIAL;
    case ErrorCode::InitialAtMinusPhiPlus: return HD_ERR_INITIAL_AT_MINUS_PHI_PLUS;
    case ErrorCode::Singularity: return HD_ERR_SINGULARITY;
    case ErrorCode::NearSingularity: return HD_ERR_NEAR_SINGULARITY;
    case ErrorCode::WrongBranch: return HD_ERR_WRONG_BRANCH;
    case ErrorCode::NotAnEquilibrium: return HD_ERR_NOT_EQUILIBRIUM;
    case ErrorCode::OrbitTooShort: return HD_ERR_ORBIT_TOO_SHORT;
  }
  return HD_ERR_INTERNAL;
}

hd_status fail(hd_status status, const char* message, long step = -1) {
  g_last_error = message;
  g_last_step = step;
  return status;
}

template <class F>
hd_status guard(F&& body) {
  try {
    body();
    g_last_error.clear();
    g_last_step = -1;
    return HD_OK;
  } catch (const Error& e) {
    return fail(map_code(e.code()), e.what(), e.step());
  } catch (const std::bad_alloc&) {
    return fail(HD_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(HD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HD_ERR_INTERNAL, "unknown failure");
  }
}

void require(const void* ptr, const char* what) {
  if (ptr == nullptr) throw Error(ErrorCode::InvalidArgument, std::string(what) + " must not be null");
}

Rational arg(const char* text, const char* what) {
  require(text, what);
  return parse_rational(text);
}

void push_exact(hd_series& s, long index, const Rational& v) {
  s.index.push_back(index);
  s.values.push_back(to_double(v));
  s.exact.push_back(to_string(v));
}

hd_series* series_from_orbit(const dynamics::Orbit& orbit) {
  auto* s = new hd_series;
  const bool exact = orbit.plane == dynamics::Plane::Exact;
  for (std::size_t i = 0; i < orbit.values.size(); ++i) {
    s->index.push_back(static_cast<long>(i));
    s->values.push_back(orbit.values[i]);
    if (exact) s->exact.push_back(to_string(orbit.exact[i]));
  }
  switch (orbit.status) {
    case dynamics::OrbitStatus::Completed: s->status = HD_ORBIT_COMPLETED; break;
    case dynamics::OrbitStatus::HitSingularity: s->status = HD_ORBIT_SINGULARITY; break;
    case dynamics::OrbitStatus::NearSingular: s->status = HD_ORBIT_NEAR_SINGULAR; break;
  }
  s->status_step = orbit.status_step;
  return s;
}

int optional_out(const std::optional<double>& v, double* out) {
  if (!v) return 0;
  if (out != nullptr) *out = *v;
  return 1;
}

}  // namespace

extern "C" {

const char* hd_version(void) { return "0.1.0"; }

const char* hd_status_name(hd_status status) {
  switch (status) {
    case HD_OK: return "ok";
    case HD_ERR_INVALID_ARGUMENT: return "invalid-argument";
    case HD_ERR_NON_REAL_ROOTS: return "non-real-roots";
    case HD_ERR_SPEC_NOT_CANONICAL: return "spec-not-canonical";
    case HD_ERR_INDEX_CONSTRAINT: return "index-constraint-violated";
    case HD_ERR_ZERO_DENOMINATOR: return "zero-denominator";
    case HD_ERR_FORBIDDEN_INITIAL: return "forbidden-initial-condition";
    case HD_ERR_INITIAL_AT_MINUS_PHI_PLUS: return "initial-at-minus-phi-plus";
    case HD_ERR_SINGULARITY: return "singularity";
    case HD_ERR_NEAR_SINGULARITY: return "near-singularity";
    case HD_ERR_WRONG_BRANCH: return "wrong-branch";
    case HD_ERR_NOT_EQUILIBRIUM: return "not-an-equilibrium";
    case HD_ERR_ORBIT_TOO_SHORT: return "orbit-too-short";
    case HD_ERR_OUT_OF_MEMORY: return "out-of-memory";
    case HD_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* hd_last_error(void) { return g_last_error.c_str(); }

long hd_last_error_step(void) { return g_last_step; }

hd_status hd_equation_create(hd_branch branch, const char* p, const char* q, int nu, hd_equation** out) {
  return guard([&] {
    require(out, "out");
    *out = nullptr;
    if (branch != HD_BRANCH_PLUS && branch != HD_BRANCH_MINUS)
      throw Error(ErrorCode::InvalidArgument, "unknown branch");
    auto spec = EquationSpec::make(branch == HD_BRANCH_PLUS ? Branch::Plus : Branch::Minus, arg(p, "p"),
                                   arg(q, "q"), nu);
    *out = new hd_equation{std::move(spec)};
  });
}

void hd_equation_destroy(hd_equation* eq) { delete eq; }

size_t hd_series_length(const hd_series* s) { return s ? s->values.size() : 0; }

long hd_series_index(const hd_series* s, size_t i) { return s && i < s->index.size() ? s->index[i] : 0; }

double hd_series_value(const hd_series* s, size_t i) { return s && i < s->values.size() ? s->values[i] : 0.0; }

const char* hd_series_exact(const hd_series* s, size_t i) {
  return s && i < s->exact.size() ? s->exact[i].c_str() : nullptr;
}

int hd_series_is_exact(const hd_series* s) { return s && s->exact.size() == s->values.size() ? 1 : 0; }

hd_orbit_status hd_series_status(const hd_series* s, long* step) {
  if (step != nullptr) *step = s ? s->status_step : -1;
  return s ? s->status : HD_ORBIT_COMPLETED;
}

void hd_series_destroy(hd_series* s) { delete s; }

hd_status hd_horadam_series(const char* a, const char* b, const char* p, const char* q, long from, long to,
                            hd_series** out) {
  return guard([&] {
    require(out, "out");
    *out = nullptr;
    horadam::HoradamSpec spec{arg(a, "a"), arg(b, "b"), arg(p, "p"), arg(q, "q")};
    const auto values = horadam::range(spec, from, to);
    auto* s = new hd_series;
    for (std::size_t i = 0; i < values.size(); ++i) push_exact(*s, from + static_cast<long>(i), values[i]);
    *out = s;
  });
}

hd_status hd_binet_roots(double p, double q, double a, double b, hd_roots* out) {
  return guard([&] {
    require(out, "out");
    const auto r = horadam::binet_roots(p, q, a, b);
    *out = hd_roots{r.phi_plus, r.phi_minus, r.discriminant, r.A, r.B};
  });
}

hd_status hd_check_identity(hd_identity kind, const char* p, const char* q, const long* indices, size_t count,
                            int* is_zero) {
  return guard([&] {
    require(is_zero, "is_zero");
    if (count > 0) require(indices, "indices");
    if (kind < HD_IDENTITY_CONVOLUTION || kind > HD_IDENTITY_PHI_POWER)
      throw Error(ErrorCode::InvalidArgument, "unknown identity");
    const auto spec = horadam::HoradamSpec::canonical(arg(p, "p"), arg(q, "q"));
    const auto r = horadam::check_identity(static_cast<horadam::Identity>(kind), spec,
                                           std::span<const long>(indices, count));
    *is_zero = r.is_zero() ? 1 : 0;
  });
}

hd_status hd_identity_suite(const char* p, const char* q, long nmax, hd_identity_report** out) {
  return guard([&] {
    require(out, "out");
    *out = nullptr;
    auto entries = horadam::run_identity_suite(arg(p, "p"), arg(q, "q"), nmax);
    *out = new hd_identity_report{std::move(entries)};
  });
}

size_t hd_identity_report_count(const hd_identity_report* r) { return r ? r->entries.size() : 0; }

const char* hd_identity_report_kind(const hd_identity_report* r, size_t i) {
  return r && i < r->entries.size() ? horadam::to_string(r->entries[i].kind) : nullptr;
}

long hd_identity_report_checked(const hd_identity_report* r, size_t i) {
  return r && i < r->entries.size() ? r->entries[i].checked : 0;
}

long hd_identity_report_failed(const hd_identity_report* r, size_t i) {
  return r && i < r->entries.size() ? r->entries[i].failed : 0;
}

int hd_identity_report_all_zero(const hd_identity_report* r) {
  if (r == nullptr) return 0;
  for (const auto& e : r->entries)
    if (e.failed != 0) return 0;
  return 1;
}

void hd_identity_report_destroy(hd_identity_report* r) { delete r; }

hd_status hd_closed_form(const hd_equation* eq, const char* x0, long n, hd_series** out) {
  return guard([&] {
    require(eq, "eq");
    require(out, "out");
    *out = nullptr;
    const auto values = closed_form::solve_series(eq->spec, arg(x0, "x0"), n);
    auto* s = new hd_series;
    for (std::size_t i = 0; i < values.size(); ++i) push_exact(*s, static_cast<long>(i), values[i]);
    *out = s;
  });
}

hd_status hd_forbidden(const hd_equation* eq, long depth, hd_series** out) {
  return guard([&] {
    require(eq, "eq");
    require(out, "out");
    *out = nullptr;
    const auto points = closed_form::forbidden_points(eq->spec, depth);
    auto* s = new hd_series;
    for (const auto& pt : points) push_exact(*s, pt.depth, pt.value);
    *out = s;
  });
}

hd_status hd_asymptotic_limit(const hd_equation* eq, double* out) {
  return guard([&] {
    require(eq, "eq");
    require(out, "out");
    *out = closed_form::asymptotic_limit(eq->spec);
  });
}

hd_status hd_product_value(hd_product_theorem kind, const char* p, const char* q, long i, long j,
                             hd_series** out) {
  return guard([&] {
    require(out, "out");
    *out = nullptr;
    const Rational pr = arg(p, "p");
    const Rational qr = arg(q, "q");
    Rational value;
    switch (kind) {
      case HD_PRODUCT_RECONSTRUCT: value = closed_form::reconstruct_horadam(pr, qr, i, j).value; break;
      case HD_PRODUCT_DOCAGNE: value = closed_form::docagne_product(pr, qr, i, j); break;
      case HD_PRODUCT_JOHNSON: value = closed_form::johnson_product(pr, qr, i, j).value; break;
      default: throw Error(ErrorCode::InvalidArgument, "unknown product theorem");
    }
    auto* s = new hd_series;
    push_exact(*s, 0, value);
    *out = s;
  });
}

hd_status hd_products_create(const hd_equation* eq, const char* x0, long steps, hd_products** out) {
  return guard([&] {
    require(eq, "eq");
    require(out, "out");
    *out = nullptr;
    auto* r = new hd_products;
    try {
      r->analysis = closed_form::product_analysis(eq->spec, arg(x0, "x0"), steps);
    } catch (...) {
      delete r;
      throw;
    }
    for (std::size_t i = 0; i < r->analysis.partials_exact.size(); ++i)
      push_exact(r->partials, static_cast<long>(i), r->analysis.partials_exact[i]);
    *out = r;
  });
}

const char* hd_products_regime(const hd_products* r) {
  return r ? closed_form::to_string(r->analysis.regime) : nullptr;
}

int hd_products_limit(const hd_products* r, double* value) {
  return r ? optional_out(r->analysis.predicted_limit, value) : 0;
}

int hd_products_even_limit(const hd_products* r, double* value) {
  return r ? optional_out(r->analysis.even_limit, value) : 0;
}

int hd_products_odd_limit(const hd_products* r, double* value) {
  return r ? optional_out(r->analysis.odd_limit, value) : 0;
}

int hd_products_alternating(const hd_products* r) { return r && r->analysis.alternating ? 1 : 0; }

int hd_products_divergence_certified(const hd_products* r) {
  return r && r->analysis.divergence_certified ? 1 : 0;
}

const hd_series* hd_products_partials(const hd_products* r) { return r ? &r->partials : nullptr; }

void hd_products_destroy(hd_products* r) { delete r; }

hd_status hd_simulate(const hd_equation* eq, const char* x0, long steps, hd_plane plane, hd_series** out) {
  return guard([&] {
    require(eq, "eq");
    require(out, "out");
    *out = nullptr;
    const auto orbit = dynamics::iterate(eq->spec, arg(x0, "x0"), steps,
                                         plane == HD_PLANE_EXACT ? dynamics::Plane::Exact : dynamics::Plane::Floating);
    *out = series_from_orbit(orbit);
  });
}

hd_status hd_bounds_envelope(const hd_equation* eq, double* lo, double* hi) {
  return guard([&] {
    require(eq, "eq");
    require(lo, "lo");
    require(hi, "hi");
    const auto env = eq->spec.branch == Branch::Plus ? dynamics::bounds_envelope(eq->spec)
                                                     : dynamics::negative_envelope(eq->spec);
    *lo = env.lo;
    *hi = env.hi;
  });
}

hd_status hd_detect_period(const hd_series* orbit, long max_period, double tol, long burn_in, long* period,
                           long* phase, int* found) {
  return guard([&] {
    require(orbit, "orbit");
    require(found, "found");
    dynamics::Orbit o;
    o.values = orbit->values;
    const auto d = dynamics::detect_period(o, max_period, tol, burn_in);
    *found = d ? 1 : 0;
    if (d && period != nullptr) *period = d->period;
    if (d && phase != nullptr) *phase = d->phase;
  });
}

hd_status hd_equilibria(const hd_equation* eq, hd_equilibrium* out, size_t cap, size_t* count) {
  return guard([&] {
    require(eq, "eq");
    require(count, "count");
    if (cap > 0) require(out, "out");
    const auto reports = analysis::equilibria(eq->spec);
    *count = reports.size();
    for (std::size_t i = 0; i < reports.size() && i < cap; ++i)
      out[i] = hd_equilibrium{reports[i].value, reports[i].multiplier,
                              static_cast<hd_stability>(reports[i].classification),
                              static_cast<hd_bracket>(reports[i].bracket)};
  });
}

const char* hd_stability_name(hd_stability s) { return analysis::to_string(static_cast<analysis::Stability>(s)); }

const char* hd_bracket_name(hd_bracket b) { return analysis::to_string(static_cast<analysis::Bracket>(b)); }

hd_status hd_period_two(const hd_equation* eq, double tol, hd_cycle* out, int* found) {
  return guard([&] {
    require(eq, "eq");
    require(out, "out");
    require(found, "found");
    const auto c = analysis::solve_period_two(eq->spec, tol);
    *found = c ? 1 : 0;
    if (c) *out = hd_cycle{c->phi, c->psi, c->residual, c->approx_form.first, c->approx_form.second};
  });
}

hd_status hd_minus_even_threshold(const char* p, const char* q, int cap, int* nu, int* found) {
  return guard([&] {
    require(found, "found");
    const auto t = analysis::minus_even_cycle_threshold(arg(p, "p"), arg(q, "q"), cap);
    *found = t ? 1 : 0;
    if (t && nu != nullptr) *nu = *t;
  });
}

}  // extern "C"
