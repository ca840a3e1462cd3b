#include "sinrconn/power_function.hpp"

#include "sinrconn/errors.hpp"

#include <cmath>
#include <sstream>

namespace sinrconn {

double PowerFunction::exponent_for(double alpha) const {
  switch (kind) {
    case Kind::uniform:
      return 0.0;
    case Kind::linear:
      return alpha;
    case Kind::mean:
      return alpha / 2.0;
    case Kind::exponent:
      return tau;
  }
  return tau;
}

double PowerFunction::operator()(double x, double alpha) const { return std::pow(x, exponent_for(alpha)); }

double PowerFunction::log_eval(double x, double alpha) const { return exponent_for(alpha) * std::log(x); }

std::string PowerFunction::name() const {
  switch (kind) {
    case Kind::uniform:
      return "uniform";
    case Kind::linear:
      return "linear";
    case Kind::mean:
      return "mean";
    case Kind::exponent: {
      std::ostringstream os;
      os.precision(17);
      os << "exponent:" << tau;
      return os.str();
    }
  }
  return "unknown";
}

PowerFunction parse_power_function(const std::string& text) {
  if (text == "uniform") return PowerFunction::uniform();
  if (text == "linear") return PowerFunction::linear();
  if (text == "mean") return PowerFunction::mean();
  const std::string prefix = "exponent:";
  if (text.rfind(prefix, 0) == 0) {
    try {
      std::size_t used = 0;
      const std::string rest = text.substr(prefix.size());
      const double tau = std::stod(rest, &used);
      if (used == rest.size() && std::isfinite(tau)) return PowerFunction::exponent(tau);
    } catch (const std::exception&) {
    }
  }
  throw PreconditionError("unknown power function '" + text + "' (uniform|linear|mean|exponent:<tau>)");
}

}  // namespace sinrconn
