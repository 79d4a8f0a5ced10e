#include "streamsnap/schedule.hpp"

#include <charconv>
#include <cmath>

#include "streamsnap/format.hpp"

namespace streamsnap {

Schedule Schedule::uniform() { return Schedule(Kind::kUniform, 0.0, 0.0, 0.0); }

Schedule Schedule::constant(double a) {
  if (!(a > 1.0))
    throw std::domain_error("constant schedule: a must be > 1, got " +
                            format_double(a));
  return Schedule(Kind::kConstant, a, 0.0, 0.0);
}

Schedule Schedule::power_law(double g, double alpha) {
  if (!(g > 0.0))
    throw std::domain_error("power schedule: g must be > 0, got " +
                            format_double(g));
  if (!(alpha >= 0.0))
    throw std::domain_error("power schedule: alpha must be >= 0, got " +
                            format_double(alpha));
  return Schedule(Kind::kPowerLaw, 0.0, g, alpha);
}

double Schedule::alpha_at(std::uint64_t n) const {
  if (n == 0) throw std::domain_error("alpha_at: n must be >= 1");
  if (n == 1) return 1.0;
  switch (kind_) {
    case Kind::kUniform:
      return 1.0 / static_cast<double>(n);
    case Kind::kConstant:
      return 1.0 / a_;
    case Kind::kPowerLaw: {
      const double a = g_ * std::pow(static_cast<double>(n), -alpha_);
      return a < 1.0 ? a : 1.0;
    }
  }
  throw std::logic_error("alpha_at: bad kind");
}

double Schedule::divisor() const {
  if (kind_ != Kind::kConstant)
    throw std::logic_error("divisor: not a constant schedule");
  return a_;
}

double Schedule::gain() const {
  if (kind_ != Kind::kPowerLaw)
    throw std::logic_error("gain: not a power-law schedule");
  return g_;
}

double Schedule::exponent() const {
  if (kind_ != Kind::kPowerLaw)
    throw std::logic_error("exponent: not a power-law schedule");
  return alpha_;
}

std::pair<double, double> Schedule::power_params() const {
  switch (kind_) {
    case Kind::kUniform:
      return {1.0, 1.0};
    case Kind::kConstant:
      return {1.0 / a_, 0.0};
    case Kind::kPowerLaw:
      return {g_, alpha_};
  }
  throw std::logic_error("power_params: bad kind");
}

std::string Schedule::spec() const {
  switch (kind_) {
    case Kind::kUniform:
      return "uniform";
    case Kind::kConstant:
      return "constant:" + format_double(a_);
    case Kind::kPowerLaw:
      return "power:" + format_double(g_) + "," + format_double(alpha_);
  }
  throw std::logic_error("spec: bad kind");
}

namespace {

// Parses a double starting at offset pos; advances pos past it.
double parse_number(std::string_view spec, std::size_t& pos,
                    const char* what) {
  double value = 0.0;
  const char* first = spec.data() + pos;
  const char* last = spec.data() + spec.size();
  const auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr == first)
    throw ScheduleParseError(std::string("expected a number for ") + what,
                             pos);
  pos += static_cast<std::size_t>(res.ptr - first);
  return value;
}

}  // namespace

Schedule parse_schedule(std::string_view spec) {
  using namespace std::string_view_literals;
  if (spec == "uniform"sv) return Schedule::uniform();

  if (spec.starts_with("constant:"sv)) {
    std::size_t pos = 9;
    const double a = parse_number(spec, pos, "<a>");
    if (pos != spec.size())
      throw ScheduleParseError("trailing characters after constant:<a>", pos);
    return Schedule::constant(a);
  }

  if (spec.starts_with("power:"sv)) {
    std::size_t pos = 6;
    const double g = parse_number(spec, pos, "<g>");
    if (pos >= spec.size() || spec[pos] != ',')
      throw ScheduleParseError("expected ',' between <g> and <alpha>", pos);
    ++pos;
    const double alpha = parse_number(spec, pos, "<alpha>");
    if (pos != spec.size())
      throw ScheduleParseError("trailing characters after power:<g>,<alpha>",
                               pos);
    return Schedule::power_law(g, alpha);
  }

  throw ScheduleParseError(
      "expected 'uniform', 'constant:<a>' or 'power:<g>,<alpha>'", 0);
}

std::vector<double> alpha_table(const Schedule& s, std::uint64_t n) {
  std::vector<double> table(n + 1, 0.0);
  for (std::uint64_t i = 1; i <= n; ++i) table[i] = s.alpha_at(i);
  return table;
}

}  // namespace streamsnap
