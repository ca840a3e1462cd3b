#pragma once

#include <string>

namespace sinrconn {

// Oblivious power function: the power of a link depends only on its length.
// Every supported kind is a power law x^tau:
//   uniform   tau = 0
//   linear    tau = alpha
//   mean      tau = alpha / 2
//   exponent  tau given explicitly
struct PowerFunction {
  enum class Kind { uniform, linear, mean, exponent };

  Kind kind = Kind::mean;
  double tau = 0.0;  // only read for Kind::exponent

  static PowerFunction uniform() { return {Kind::uniform, 0.0}; }
  static PowerFunction linear() { return {Kind::linear, 0.0}; }
  static PowerFunction mean() { return {Kind::mean, 0.0}; }
  static PowerFunction exponent(double tau) { return {Kind::exponent, tau}; }

  [[nodiscard]] double exponent_for(double alpha) const;
  [[nodiscard]] double operator()(double x, double alpha) const;
  [[nodiscard]] double log_eval(double x, double alpha) const;
  [[nodiscard]] std::string name() const;
};

// Parses "uniform", "linear", "mean" or "exponent:<tau>".
PowerFunction parse_power_function(const std::string& text);

}  // namespace sinrconn
