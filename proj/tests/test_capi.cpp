#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <thread>

#include "horadyn/horadyn.h"

namespace {

hd_equation* make(hd_branch b, const char* p, const char* q, int nu) {
  hd_equation* e = nullptr;
  REQUIRE(hd_equation_create(b, p, q, nu, &e) == HD_OK);
  return e;
}

}  // namespace

TEST_CASE("equation validation maps to status codes") {
  hd_equation* e = nullptr;
  CHECK(hd_equation_create(HD_BRANCH_PLUS, "0", "1", 1, &e) == HD_ERR_INVALID_ARGUMENT);
  CHECK(e == nullptr);
  CHECK(std::string(hd_last_error()).find("p must be positive") != std::string::npos);
  CHECK(hd_equation_create(HD_BRANCH_PLUS, "x", "1", 1, &e) == HD_ERR_INVALID_ARGUMENT);
  CHECK(hd_equation_create(HD_BRANCH_PLUS, nullptr, "1", 1, &e) == HD_ERR_INVALID_ARGUMENT);
  CHECK(hd_equation_create(HD_BRANCH_PLUS, "1", "1", 1, nullptr) == HD_ERR_INVALID_ARGUMENT);
  CHECK(hd_equation_create(HD_BRANCH_PLUS, "1", "1", 1, &e) == HD_OK);
  CHECK(std::string(hd_last_error()).empty());
  hd_equation_destroy(e);
  hd_equation_destroy(nullptr);
}

TEST_CASE("status names are distinct") {
  for (int a = HD_OK; a <= HD_ERR_INTERNAL; ++a)
    for (int b = a + 1; b <= HD_ERR_INTERNAL; ++b)
      CHECK(std::strcmp(hd_status_name(static_cast<hd_status>(a)), hd_status_name(static_cast<hd_status>(b))) != 0);
}

TEST_CASE("horadam series") {
  hd_series* s = nullptr;
  REQUIRE(hd_horadam_series("0", "1", "1", "2", -2, 5, &s) == HD_OK);
  REQUIRE(hd_series_length(s) == 8);
  CHECK(hd_series_index(s, 0) == -2);
  CHECK(std::string(hd_series_exact(s, 0)) == "-1/4");
  CHECK(std::string(hd_series_exact(s, 7)) == "11");
  CHECK(hd_series_value(s, 1) == 0.5);
  CHECK(hd_series_is_exact(s));
  CHECK(hd_series_exact(s, 99) == nullptr);
  hd_series_destroy(s);
}

TEST_CASE("simulate in both planes") {
  hd_equation* e = make(HD_BRANCH_PLUS, "2", "7", 1);
  hd_series* s = nullptr;
  REQUIRE(hd_simulate(e, "3", 3, HD_PLANE_EXACT, &s) == HD_OK);
  CHECK(std::string(hd_series_exact(s, 3)) == "119/69");
  hd_series_destroy(s);
  REQUIRE(hd_simulate(e, "3", 3, HD_PLANE_FLOAT, &s) == HD_OK);
  CHECK(hd_series_exact(s, 3) == nullptr);
  CHECK(hd_series_value(s, 3) == doctest::Approx(119.0 / 69));
  long step = 0;
  CHECK(hd_series_status(s, &step) == HD_ORBIT_COMPLETED);
  CHECK(step == -1);
  hd_series_destroy(s);
  hd_equation_destroy(e);
}

TEST_CASE("singular orbit reports its step") {
  hd_equation* e = make(HD_BRANCH_PLUS, "1", "1", 1);
  hd_series* s = nullptr;
  REQUIRE(hd_simulate(e, "-2", 10, HD_PLANE_EXACT, &s) == HD_OK);
  long step = 0;
  CHECK(hd_series_status(s, &step) == HD_ORBIT_SINGULARITY);
  CHECK(step == 2);
  hd_series_destroy(s);

  CHECK(hd_closed_form(e, "-2", 10, &s) == HD_ERR_FORBIDDEN_INITIAL);
  CHECK(s == nullptr);
  CHECK(hd_last_error_step() == 2);
  hd_equation_destroy(e);
}

TEST_CASE("forbidden points and limits") {
  hd_equation* e = make(HD_BRANCH_PLUS, "1", "1", 1);
  hd_series* s = nullptr;
  REQUIRE(hd_forbidden(e, 3, &s) == HD_OK);
  CHECK(std::string(hd_series_exact(s, 2)) == "-3/2");
  CHECK(hd_series_index(s, 2) == 3);
  hd_series_destroy(s);
  double lim = 0;
  REQUIRE(hd_asymptotic_limit(e, &lim) == HD_OK);
  CHECK(lim == doctest::Approx((std::sqrt(5.0) - 1) / 2));
  hd_equation_destroy(e);
}

TEST_CASE("products handle") {
  hd_equation* e = make(HD_BRANCH_MINUS, "1", "2", 1);
  hd_products* r = nullptr;
  REQUIRE(hd_products_create(e, "-9", 60, &r) == HD_OK);
  CHECK(std::string(hd_products_regime(r)) == "p=q-1");
  CHECK(hd_products_alternating(r));
  double even = 0, odd = 0;
  CHECK(hd_products_even_limit(r, &even));
  CHECK(hd_products_odd_limit(r, &odd));
  CHECK(even == doctest::Approx(-27.0 / 11));
  CHECK(odd == doctest::Approx(27.0 / 11));
  const hd_series* partials = hd_products_partials(r);
  CHECK(hd_series_length(partials) == 61);
  CHECK(std::string(hd_series_exact(partials, 0)) == "-9");
  hd_products_destroy(r);
  CHECK(hd_products_create(e, "2", 10, &r) == HD_ERR_INITIAL_AT_MINUS_PHI_PLUS);
  hd_equation_destroy(e);
}

TEST_CASE("product theorems") {
  hd_series* s = nullptr;
  REQUIRE(hd_product_value(HD_PRODUCT_RECONSTRUCT, "1", "1", 1, 15, &s) == HD_OK);
  CHECK(std::string(hd_series_exact(s, 0)) == "610");
  hd_series_destroy(s);
  REQUIRE(hd_product_value(HD_PRODUCT_JOHNSON, "1", "2", 3, 5, &s) == HD_OK);
  CHECK(std::string(hd_series_exact(s, 0)) == "3");
  hd_series_destroy(s);
  REQUIRE(hd_product_value(HD_PRODUCT_DOCAGNE, "1", "2", 1, 3, &s) == HD_OK);
  CHECK(std::string(hd_series_exact(s, 0)) == "5/3");
  hd_series_destroy(s);
  CHECK(hd_product_value(HD_PRODUCT_JOHNSON, "1", "1", 3, 3, &s) == HD_ERR_INDEX_CONSTRAINT);
}

TEST_CASE("identities") {
  int zero = 0;
  const long idx[] = {5, 1, 4, 2, 1};
  REQUIRE(hd_check_identity(HD_IDENTITY_JOHNSON, "1", "2", idx, 5, &zero) == HD_OK);
  CHECK(zero == 1);
  CHECK(hd_check_identity(HD_IDENTITY_JOHNSON, "1", "2", idx, 3, &zero) == HD_ERR_INDEX_CONSTRAINT);
  hd_identity_report* r = nullptr;
  REQUIRE(hd_identity_suite("3", "2", 10, &r) == HD_OK);
  CHECK(hd_identity_report_count(r) == 5);
  CHECK(std::string(hd_identity_report_kind(r, 4)) == "phi-power");
  CHECK(hd_identity_report_all_zero(r));
  CHECK(hd_identity_report_checked(r, 1) == 10);
  hd_identity_report_destroy(r);
}

TEST_CASE("analysis through the C API") {
  hd_equation* e = make(HD_BRANCH_MINUS, "3", "1", 2);
  hd_equilibrium eqs[2];
  size_t count = 0;
  REQUIRE(hd_equilibria(e, eqs, 2, &count) == HD_OK);
  CHECK(count == 2);
  CHECK(std::string(hd_bracket_name(eqs[0].bracket)) == "(-1,0)");
  CHECK(hd_equilibria(e, nullptr, 0, &count) == HD_OK);
  CHECK(count == 2);
  hd_equation_destroy(e);

  e = make(HD_BRANCH_PLUS, "1", "2", 3);
  hd_cycle c{};
  int found = 0;
  REQUIRE(hd_period_two(e, 1e-10, &c, &found) == HD_OK);
  CHECK(found == 1);
  CHECK(c.approx_phi == doctest::Approx(2.0));
  CHECK(c.approx_psi == doctest::Approx(2.0 / 9));
  double lo = 0, hi = 0;
  REQUIRE(hd_bounds_envelope(e, &lo, &hi) == HD_OK);
  CHECK(hi == doctest::Approx(2.0));

  hd_series* s = nullptr;
  REQUIRE(hd_simulate(e, "0.5", 400, HD_PLANE_FLOAT, &s) == HD_OK);
  long period = 0, phase = 0;
  REQUIRE(hd_detect_period(s, 4, 1e-9, 100, &period, &phase, &found) == HD_OK);
  CHECK(found == 1);
  CHECK(period == 2);
  CHECK(hd_detect_period(s, 400, 1e-9, 100, &period, &phase, &found) == HD_ERR_ORBIT_TOO_SHORT);
  hd_series_destroy(s);
  hd_equation_destroy(e);

  int nu = 0;
  REQUIRE(hd_minus_even_threshold("1", "2", 64, &nu, &found) == HD_OK);
  CHECK(found == 1);
  CHECK(nu % 2 == 0);
}

TEST_CASE("last error is per thread") {
  hd_equation* e = nullptr;
  CHECK(hd_equation_create(HD_BRANCH_PLUS, "-1", "1", 1, &e) == HD_ERR_INVALID_ARGUMENT);
  std::string other;
  std::thread t([&] { other = hd_last_error(); });
  t.join();
  CHECK(other.empty());
  CHECK_FALSE(std::string(hd_last_error()).empty());
}
