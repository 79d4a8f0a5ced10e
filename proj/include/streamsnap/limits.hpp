#pragma once

#include <cstdint>
#include <stdexcept>

#include "streamsnap/schedule.hpp"

namespace streamsnap {

// Asymptotic behaviour of the sampler as a function of the power-law
// parameters (g, alpha). The age K_n has a proper limit law for alpha <= 1;
// for alpha > 1 the age is pinned near n and the retained position
// L_n = n + 1 - K_n is the meaningful scale.
enum class Regime {
  kConstantGeo,      // alpha = 0: K_n -> Geometric(min{1, g})
  kSublinearExp,     // 0 < alpha < 1: K_n / n^alpha -> Exponential(g)
  kLinearBeta,       // alpha = 1: K_n / n -> Beta(1, g)
  kSubquadraticL,    // 1 < alpha < 2: E[L_n] grows like g n^(2-alpha)/(2-alpha)
  kQuadraticL,       // alpha = 2: E[L_n] = g ln n + O(1)
  kSuperquadraticL,  // alpha > 2: E[L_n] stays bounded
};

struct RegimeDescriptor {
  Regime regime;
  double g;
  double alpha;
};

// Requested quantity has no defined form in the given regime.
class UnsupportedRegime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

RegimeDescriptor classify(double g, double alpha);
RegimeDescriptor classify(const Schedule& s);

const char* regime_name(Regime r);

// True for the regimes where a normalized age limit law exists (alpha <= 1).
bool has_limit_law(Regime r);

// CDF of the limiting distribution of the normalized age:
//   kConstantGeo:   K_n itself,        F(x) = 1 - (1-p)^floor(x), p = min{1, g}
//   kSublinearExp:  K_n / n^alpha,     F(x) = 1 - exp(-g x)
//   kLinearBeta:    K_n / n,           F(x) = 1 - (1-x)^g on [0, 1]
// Throws UnsupportedRegime for position regimes.
double limiting_cdf(const RegimeDescriptor& r, double x);

// First-order prediction of E[K_n]; defined for alpha <= 1.
double expected_age_asymptotic(const RegimeDescriptor& r, std::uint64_t n);

// Prediction of E[L_n]; defined for alpha > 1:
//   1 < alpha < 3/2: g n^(2-a)/(2-a) - g^2 n^(3-2a)/((3-2a)(2-a))
//   alpha = 3/2:     g n^(1/2)/(1/2) - g^2 H_n / (alpha - 1)
//   3/2 < alpha < 2: g n^(2-a)/(2-a)
//   alpha = 2:       g ln n
//   alpha > 2:       (g^(1/a) + 1) g^(1/a) / 2 + g zeta(a - 1)   (upper bound)
double expected_position_asymptotic(const RegimeDescriptor& r, std::uint64_t n);

// Harmonic number H_n and generalized H_{n,a} = sum_{i<=n} i^-a.
double harmonic(std::uint64_t n);
double harmonic_pow(std::uint64_t n, double a);

// Riemann zeta for s > 1: Kahan-summed direct series plus an
// Euler-Maclaurin tail; absolute error well below 1e-10 for s >= 1.1.
double zeta(double s);

}  // namespace streamsnap
