#include "horadyn/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "horadyn/error.hpp"
#include "horadyn/horadam.hpp"

namespace horadyn::closed_form {

namespace {

// The Horadam sequence that solves the branch: W_n(0,1;p,q) for Plus and the
// sign-alternated W_n(0,1;-p,q) for Minus.
horadam::HoradamSpec solving_sequence(const EquationSpec& eq) {
  return horadam::HoradamSpec::canonical(eq.branch == Branch::Plus ? eq.p : Rational(-eq.p), eq.q);
}

Rational linear_step(const EquationSpec& eq, const Rational& x, long step) {
  Rational den = eq.signed_p() + x;
  if (den == 0)
    throw Error(ErrorCode::ZeroDenominator, "orbit undefined at step " + std::to_string(step), step);
  Rational next = eq.q / den;
  next.canonicalize();
  return next;
}

// First m in [1, depth] with s_{m+1} + x0 s_m = 0, given s_0 .. s_{depth+1}.
std::optional<long> first_vanishing(const std::vector<Rational>& s, const Rational& x0, long depth) {
  for (long m = 1; m <= depth; ++m) {
    const auto i = static_cast<std::size_t>(m);
    if (s[i + 1] + x0 * s[i] == 0) return m;
  }
  return std::nullopt;
}

[[noreturn]] void forbidden(const EquationSpec& eq, const Rational& x0, long m) {
  throw Error(ErrorCode::ForbiddenInitialCondition,
              "initial value " + horadyn::to_string(x0) + " is forbidden for " + describe(eq) + ": orbit undefined at step " +
                  std::to_string(m),
              m);
}

Rational closed_value(const std::vector<Rational>& s, const Rational& q, const Rational& x0, long n) {
  if (n == 0) return x0;
  const auto i = static_cast<std::size_t>(n);
  Rational v = q * (s[i] + x0 * s[i - 1]) / (s[i + 1] + x0 * s[i]);
  v.canonicalize();
  return v;
}

}  // namespace

std::vector<Rational> solve_series(const EquationSpec& eq, const Rational& x0, long n) {
  require_linear(eq);
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be non-negative");
  const auto s = horadam::range(solving_sequence(eq), 0, n + 1);
  if (auto m = first_vanishing(s, x0, n)) forbidden(eq, x0, *m);
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n + 1));
  for (long i = 0; i <= n; ++i) out.push_back(closed_value(s, eq.q, x0, i));
  return out;
}

Rational solve(const EquationSpec& eq, const Rational& x0, long n) {
  require_linear(eq);
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be non-negative");
  const auto s = horadam::range(solving_sequence(eq), 0, n + 1);
  if (auto m = first_vanishing(s, x0, n)) forbidden(eq, x0, *m);
  return closed_value(s, eq.q, x0, n);
}

std::vector<ForbiddenPoint> forbidden_points(const EquationSpec& eq, long depth) {
  require_linear(eq);
  if (depth < 1) return {};
  const auto s = horadam::range(solving_sequence(eq), 0, depth + 1);
  std::vector<ForbiddenPoint> out;
  out.reserve(static_cast<std::size_t>(depth));
  for (long m = 1; m <= depth; ++m) {
    const auto i = static_cast<std::size_t>(m);
    Rational v = -s[i + 1] / s[i];
    v.canonicalize();
    out.push_back({m, std::move(v)});
  }
  return out;
}

std::optional<long> forbidden_depth(const EquationSpec& eq, const Rational& x0, long depth) {
  require_linear(eq);
  if (depth < 1) return std::nullopt;
  return first_vanishing(horadam::range(solving_sequence(eq), 0, depth + 1), x0, depth);
}

bool at_excluded_point(const EquationSpec& eq, double x0, double tol) {
  require_linear(eq);
  const auto r = horadam::binet_roots(eq.p_real(), eq.q_real());
  for (double phi : {r.phi_plus, r.phi_minus}) {
    const double point = eq.branch == Branch::Plus ? 1.0 / phi : phi;
    if (std::abs(x0 - point) < tol * std::max(1.0, std::abs(point))) return true;
  }
  return false;
}

FixedSolution fixed_solution(const EquationSpec& eq, Root which) {
  require_linear(eq);
  const auto r = horadam::binet_roots(eq.p_real(), eq.q_real());
  const double phi = which == Root::PhiPlus ? r.phi_plus : r.phi_minus;
  if (eq.branch == Branch::Minus) return {phi, phi, phi};
  const double value = eq.q_real() / phi;
  return {value, value, 1.0 / phi};
}

double asymptotic_limit(const EquationSpec& eq) {
  require_linear(eq);
  const auto r = horadam::binet_roots(eq.p_real(), eq.q_real());
  return eq.branch == Branch::Plus ? -r.phi_minus : r.phi_minus;
}

Rational conjugate_orbit_check(const Rational& p, const Rational& q, const Rational& x0, long n) {
  const auto plus = EquationSpec::make(Branch::Plus, p, q, 1);
  const auto minus = EquationSpec::make(Branch::Minus, p, q, 1);
  Rational sum = solve(plus, x0, n) + solve(minus, Rational(-x0), n);
  sum.canonicalize();
  return sum;
}

const char* to_string(ProductRegime regime) noexcept {
  switch (regime) {
    case ProductRegime::PGreaterQm1: return "p>q-1";
    case ProductRegime::PEqualQm1: return "p=q-1";
    case ProductRegime::PLessQm1: return "p<q-1";
  }
  return "unknown";
}

namespace {

// True when x equals -phi_+ exactly (rational phi_+) or to 1e-12 otherwise.
bool at_minus_phi_plus(const EquationSpec& eq, const Rational& x) {
  const Rational disc = eq.p * eq.p + 4 * eq.q;
  if (mpz_perfect_square_p(disc.get_num_mpz_t()) && mpz_perfect_square_p(disc.get_den_mpz_t())) {
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), disc.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), disc.get_den_mpz_t());
    Rational phi_plus = (eq.p + Rational(num, den)) / 2;
    phi_plus.canonicalize();
    return x == -phi_plus;
  }
  const double phi_plus = horadam::binet_roots(eq.p_real(), eq.q_real()).phi_plus;
  return std::abs(to_double(x) + phi_plus) < 1e-12 * std::max(1.0, phi_plus);
}

}  // namespace

ProductAnalysis product_analysis(const EquationSpec& eq, const Rational& x0, long steps) {
  require_linear(eq);
  if (steps < 1) throw Error(ErrorCode::InvalidArgument, "steps must be positive");
  if (auto m = forbidden_depth(eq, x0, steps)) forbidden(eq, x0, *m);
  // The limit formula is written for the Plus orbit; the Minus orbit of y0 is
  // the negated Plus orbit of -y0.
  const Rational plus_x0 = eq.branch == Branch::Plus ? x0 : Rational(-x0);
  {
    const auto plus_eq = EquationSpec::make(Branch::Plus, eq.p, eq.q, 1);
    if (at_minus_phi_plus(plus_eq, plus_x0))
      throw Error(ErrorCode::InitialAtMinusPhiPlus,
                  "initial value " + horadyn::to_string(x0) + " sits at the excluded point of the product theorem");
  }

  ProductAnalysis out;
  const int cmp = sgn(Rational(eq.p - (eq.q - 1)));
  out.regime = cmp > 0 ? ProductRegime::PGreaterQm1
                       : (cmp == 0 ? ProductRegime::PEqualQm1 : ProductRegime::PLessQm1);

  out.partials_exact.reserve(static_cast<std::size_t>(steps + 1));
  Rational x = x0;
  Rational running = x0;
  out.partials_exact.push_back(running);
  for (long n = 1; n <= steps; ++n) {
    x = linear_step(eq, x, n);
    running *= x;
    running.canonicalize();
    out.partials_exact.push_back(running);
  }
  out.partials.reserve(out.partials_exact.size());
  for (const auto& v : out.partials_exact) out.partials.push_back(to_double(v));

  switch (out.regime) {
    case ProductRegime::PGreaterQm1:
      out.predicted_limit = 0.0;
      break;
    case ProductRegime::PEqualQm1: {
      const auto r = horadam::binet_roots(eq.p_real(), eq.q_real());
      const double xp = to_double(plus_x0);
      const double limit = xp * std::sqrt(r.discriminant) / (r.phi_plus + xp);
      out.predicted_limit = limit;
      if (eq.branch == Branch::Minus) {
        // prod_{i=0}^n y_i = (-1)^{n+1} prod_{i=0}^n x_i
        out.alternating = true;
        out.even_limit = -limit;
        out.odd_limit = limit;
      }
      break;
    }
    case ProductRegime::PLessQm1: {
      out.burn_in = std::min<long>(50, steps / 2);
      bool growing = steps > out.burn_in;
      Rational best = abs(out.partials_exact[0]);
      for (long n = 1; n <= steps; ++n) {
        const Rational mag = abs(out.partials_exact[static_cast<std::size_t>(n)]);
        if (n > out.burn_in && !(mag > best)) growing = false;
        if (mag > best) best = mag;
      }
      out.divergence_certified = growing;
      break;
    }
  }
  return out;
}

Rational product_closed_form(const EquationSpec& eq, const Rational& x0, long n) {
  require_linear(eq);
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "n must be non-negative");
  const auto s = horadam::range(solving_sequence(eq), 0, n + 1);
  const auto i = static_cast<std::size_t>(n);
  const Rational den = s[i + 1] + x0 * s[i];
  if (den == 0) forbidden(eq, x0, n);
  Rational v = pow(eq.q, n) * x0 / den;
  v.canonicalize();
  return v;
}

Reconstruction reconstruct_horadam(const Rational& p, const Rational& q, long k, long n) {
  if (k < 0 || n <= k + 1) throw Error(ErrorCode::IndexConstraintViolated, "reconstruction needs k >= 0 and n > k + 1");
  const auto eq = EquationSpec::make(Branch::Plus, p, q, 1);
  const auto w = horadam::range(horadam::HoradamSpec::canonical(p, q), 0, n);
  const auto wk = w[static_cast<std::size_t>(k)];
  const auto wk1 = w[static_cast<std::size_t>(k + 1)];
  Rational x = q * wk / wk1;
  x.canonicalize();
  const long count = n - (k + 1);
  Rational product = 1;
  for (long i = 1; i <= count; ++i) {
    x = linear_step(eq, x, i);
    product *= x;
  }
  product.canonicalize();
  if (product == 0) throw Error(ErrorCode::ZeroDenominator, "orbit product vanished");
  Rational value = pow(q, count) * wk1 / product;
  value.canonicalize();
  return {std::move(product), std::move(value)};
}

Rational docagne_product(const Rational& p, const Rational& q, long n, long r) {
  if (n < 1 || r < 1) throw Error(ErrorCode::IndexConstraintViolated, "d'Ocagne product needs n, r >= 1");
  const auto eq = EquationSpec::make(Branch::Plus, p, q, 1);
  const auto w = horadam::range(horadam::HoradamSpec::canonical(p, q), 0, n + r + 1);
  const auto& top = w[static_cast<std::size_t>(n + r + 1)];
  const auto& bottom = w[static_cast<std::size_t>(n + r)];
  if (bottom == 0) throw Error(ErrorCode::ZeroDenominator, "W_{n+r} is zero");
  Rational x = -top / bottom;
  x.canonicalize();
  Rational product = 1;
  for (long i = 1; i <= n; ++i) {
    x = linear_step(eq, x, i);
    product *= x;
  }
  if (n % 2 != 0) product = -product;
  product.canonicalize();
  return product;
}

JohnsonProduct johnson_product(const Rational& p, const Rational& q, long r, long n) {
  if (r < 1 || n < 1 || n == r)
    throw Error(ErrorCode::IndexConstraintViolated, "Johnson product needs r >= 1, n >= 1 and n != r");
  const auto eq = EquationSpec::make(Branch::Plus, p, q, 1);
  const auto w = horadam::range(horadam::HoradamSpec::canonical(p, q), 0, r + 1);
  Rational x = -w[static_cast<std::size_t>(r + 1)] / w[static_cast<std::size_t>(r)];
  x.canonicalize();

  JohnsonProduct out;
  Rational product = 1;
  for (long i = 1; i <= n; ++i) {
    if (eq.signed_p() + x != 0) {
      x = linear_step(eq, x, i);
      product *= x;
      continue;
    }
    if (out.pole_step || i == n)
      throw Error(ErrorCode::ZeroDenominator, "orbit undefined at step " + std::to_string(i), i);
    // x_i = infinity, x_{i+1} = 0; the pair's product tends to q.
    out.pole_step = i;
    product *= q;
    x = 0;
    ++i;
  }
  Rational value = pow(q, r - n) * product;
  if ((r + 1) % 2 != 0) value = -value;
  value.canonicalize();
  out.value = std::move(value);
  return out;
}

}  // namespace horadyn::closed_form
