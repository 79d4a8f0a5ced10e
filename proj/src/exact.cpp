#include "streamsnap/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace streamsnap {

namespace {

void check_support(std::uint64_t n, std::uint64_t k) {
  if (n == 0) throw std::domain_error("age law: n must be >= 1");
  if (k < 1 || k > n)
    throw std::domain_error("age law: k must be in [1, n]");
}

}  // namespace

double age_survival(const Schedule& s, std::uint64_t n, std::uint64_t k) {
  check_support(n, k);
  double acc = 0.0;
  for (std::uint64_t i = n - k + 2; i <= n; ++i) {
    const double a = s.alpha_at(i);
    if (a >= 1.0) return 0.0;
    acc += std::log1p(-a);
  }
  return std::exp(acc);
}

double age_pmf(const Schedule& s, std::uint64_t n, std::uint64_t k) {
  check_support(n, k);
  const double head = s.alpha_at(n - k + 1);
  if (head == 0.0) return 0.0;
  double acc = 0.0;
  for (std::uint64_t i = n - k + 2; i <= n; ++i) {
    const double a = s.alpha_at(i);
    if (a >= 1.0) return 0.0;
    acc += std::log1p(-a);
  }
  return head * std::exp(acc);
}

double position_pmf(const Schedule& s, std::uint64_t n, std::uint64_t k) {
  check_support(n, k);
  return age_pmf(s, n, n + 1 - k);
}

double expected_age(const Schedule& s, std::uint64_t n) {
  if (n == 0) throw std::domain_error("expected_age: n must be >= 1");
  double e = 1.0;
  for (std::uint64_t m = 2; m <= n; ++m)
    e = 1.0 + (1.0 - s.alpha_at(m)) * e;
  return e;
}

double expected_position(const Schedule& s, std::uint64_t n) {
  return static_cast<double>(n + 1) - expected_age(s, n);
}

std::vector<double> age_pmf_all(const Schedule& s, std::uint64_t n) {
  if (n == 0) throw std::domain_error("age_pmf_all: n must be >= 1");
  std::vector<double> out(n);
  // Walk k upward; the survival product gains factor (1 - alpha_{n-k+1})
  // when moving from k to k+1.
  double log_surv = 0.0;
  bool dead = false;
  for (std::uint64_t k = 1; k <= n; ++k) {
    const double a = s.alpha_at(n - k + 1);
    out[k - 1] = dead ? 0.0 : std::exp(log_surv) * a;
    if (a >= 1.0)
      dead = true;
    else if (!dead)
      log_surv += std::log1p(-a);
  }
  return out;
}

std::vector<double> age_survival_all(const Schedule& s, std::uint64_t n) {
  if (n == 0) throw std::domain_error("age_survival_all: n must be >= 1");
  std::vector<double> out(n);
  double log_surv = 0.0;
  bool dead = false;
  for (std::uint64_t k = 1; k <= n; ++k) {
    out[k - 1] = dead ? 0.0 : std::exp(log_surv);
    const double a = s.alpha_at(n - k + 1);
    if (a >= 1.0)
      dead = true;
    else if (!dead)
      log_surv += std::log1p(-a);
  }
  return out;
}

std::vector<double> expected_age_sweep(const Schedule& s, std::uint64_t n) {
  if (n == 0) throw std::domain_error("expected_age_sweep: n must be >= 1");
  std::vector<double> out(n);
  double e = 1.0;
  out[0] = e;
  for (std::uint64_t m = 2; m <= n; ++m) {
    e = 1.0 + (1.0 - s.alpha_at(m)) * e;
    out[m - 1] = e;
  }
  return out;
}

}  // namespace streamsnap
