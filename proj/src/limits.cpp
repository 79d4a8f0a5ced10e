#include "streamsnap/limits.hpp"

#include <cmath>
#include <string>

#include "streamsnap/format.hpp"

namespace streamsnap {

RegimeDescriptor classify(double g, double alpha) {
  if (!(g > 0.0))
    throw std::domain_error("classify: g must be > 0, got " + format_double(g));
  if (!(alpha >= 0.0))
    throw std::domain_error("classify: alpha must be >= 0, got " +
                            format_double(alpha));
  Regime r;
  if (alpha == 0.0)
    r = Regime::kConstantGeo;
  else if (alpha < 1.0)
    r = Regime::kSublinearExp;
  else if (alpha == 1.0)
    r = Regime::kLinearBeta;
  else if (alpha < 2.0)
    r = Regime::kSubquadraticL;
  else if (alpha == 2.0)
    r = Regime::kQuadraticL;
  else
    r = Regime::kSuperquadraticL;
  return RegimeDescriptor{r, g, alpha};
}

RegimeDescriptor classify(const Schedule& s) {
  const auto [g, alpha] = s.power_params();
  return classify(g, alpha);
}

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::kConstantGeo:
      return "geometric";
    case Regime::kSublinearExp:
      return "exponential";
    case Regime::kLinearBeta:
      return "beta";
    case Regime::kSubquadraticL:
      return "subquadratic";
    case Regime::kQuadraticL:
      return "quadratic";
    case Regime::kSuperquadraticL:
      return "superquadratic";
  }
  return "unknown";
}

bool has_limit_law(Regime r) {
  return r == Regime::kConstantGeo || r == Regime::kSublinearExp ||
         r == Regime::kLinearBeta;
}

double limiting_cdf(const RegimeDescriptor& r, double x) {
  switch (r.regime) {
    case Regime::kConstantGeo: {
      if (x < 1.0) return 0.0;
      const double p = r.g < 1.0 ? r.g : 1.0;
      return 1.0 - std::pow(1.0 - p, std::floor(x));
    }
    case Regime::kSublinearExp:
      if (x <= 0.0) return 0.0;
      return -std::expm1(-r.g * x);
    case Regime::kLinearBeta:
      if (x <= 0.0) return 0.0;
      if (x >= 1.0) return 1.0;
      return 1.0 - std::pow(1.0 - x, r.g);
    default:
      throw UnsupportedRegime(std::string("limiting_cdf: no age limit law in ") +
                              regime_name(r.regime) + " regime");
  }
}

double expected_age_asymptotic(const RegimeDescriptor& r, std::uint64_t n) {
  switch (r.regime) {
    case Regime::kConstantGeo: {
      const double p = r.g < 1.0 ? r.g : 1.0;
      return 1.0 / p;
    }
    case Regime::kSublinearExp:
      return std::pow(static_cast<double>(n), r.alpha) / r.g;
    case Regime::kLinearBeta:
      return static_cast<double>(n) / (r.g + 1.0);
    default:
      throw UnsupportedRegime(
          std::string("expected_age_asymptotic: age diverges to n in ") +
          regime_name(r.regime) + " regime; use expected_position_asymptotic");
  }
}

double expected_position_asymptotic(const RegimeDescriptor& r,
                                    std::uint64_t n) {
  const double nd = static_cast<double>(n);
  switch (r.regime) {
    case Regime::kSubquadraticL: {
      const double a = r.alpha;
      const double lead = r.g * std::pow(nd, 2.0 - a) / (2.0 - a);
      if (a < 1.5)
        return lead -
               r.g * r.g * std::pow(nd, 3.0 - 2.0 * a) /
                   ((3.0 - 2.0 * a) * (2.0 - a));
      if (a == 1.5) return lead - r.g * r.g * harmonic(n) / (a - 1.0);
      return lead;
    }
    case Regime::kQuadraticL:
      return r.g * std::log(nd);
    case Regime::kSuperquadraticL: {
      const double root = std::pow(r.g, 1.0 / r.alpha);
      return 0.5 * (root + 1.0) * root + r.g * zeta(r.alpha - 1.0);
    }
    default:
      throw UnsupportedRegime(
          std::string("expected_position_asymptotic: position is o(n) only for "
                      "alpha > 1; in the ") +
          regime_name(r.regime) + " regime use expected_age_asymptotic");
  }
}

double harmonic(std::uint64_t n) {
  // Ascending terms: sum smallest first.
  double h = 0.0;
  for (std::uint64_t i = n; i >= 1; --i) h += 1.0 / static_cast<double>(i);
  return h;
}

double harmonic_pow(std::uint64_t n, double a) {
  double h = 0.0;
  for (std::uint64_t i = n; i >= 1; --i)
    h += std::pow(static_cast<double>(i), -a);
  return h;
}

double zeta(double s) {
  if (!(s > 1.0))
    throw std::domain_error("zeta: defined here only for s > 1, got " +
                            format_double(s));
  constexpr std::uint64_t kN = 1000000;
  // Kahan summation over k < N, ascending terms.
  double sum = 0.0, c = 0.0;
  for (std::uint64_t k = kN - 1; k >= 1; --k) {
    const double term = std::pow(static_cast<double>(k), -s);
    const double y = term - c;
    const double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
  const double nd = static_cast<double>(kN);
  const double tail = std::pow(nd, 1.0 - s) / (s - 1.0) +
                      0.5 * std::pow(nd, -s) +
                      s * std::pow(nd, -s - 1.0) / 12.0;
  return sum + tail;
}

}  // namespace streamsnap
