#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace streamsnap {

// Replacement-probability control law alpha_n. Every variant reports
// alpha_1 = 1, so the first stream item is always retained and the sampler
// state is defined from n = 1 on.
class Schedule {
 public:
  enum class Kind { kUniform, kConstant, kPowerLaw };

  // alpha_n = 1/n.
  static Schedule uniform();
  // alpha_n = 1/a with a > 1 (clamped to 1 at n = 1).
  static Schedule constant(double a);
  // alpha_n = min{1, g / n^alpha} with g > 0, alpha >= 0.
  static Schedule power_law(double g, double alpha);

  double alpha_at(std::uint64_t n) const;

  Kind kind() const { return kind_; }
  double divisor() const;   // Constant only
  double gain() const;      // PowerLaw only
  double exponent() const;  // PowerLaw only

  // (g, alpha) of the equivalent min{1, g/n^alpha} law; defined for every
  // variant (Uniform -> (1, 1), Constant(a) -> (1/a, 0)).
  std::pair<double, double> power_params() const;

  // Textual form accepted by parse_schedule; round-trips exactly.
  std::string spec() const;

  friend bool operator==(const Schedule&, const Schedule&) = default;

 private:
  Schedule(Kind kind, double a, double g, double alpha)
      : kind_(kind), a_(a), g_(g), alpha_(alpha) {}

  Kind kind_;
  double a_;
  double g_;
  double alpha_;
};

// Grammar error from parse_schedule; position is the 0-based offset into the
// spec string where parsing failed.
class ScheduleParseError : public std::invalid_argument {
 public:
  ScheduleParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Accepts: uniform | constant:<a> | power:<g>,<alpha>
// Out-of-range parameters raise std::domain_error naming the violated bound.
Schedule parse_schedule(std::string_view spec);

// alpha values for one stream prefix: table[i] = alpha_i for i in [1, n],
// table[0] unused. Hoists the per-step alpha computation out of hot loops.
std::vector<double> alpha_table(const Schedule& s, std::uint64_t n);

}  // namespace streamsnap
