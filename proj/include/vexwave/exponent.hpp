#pragma once

#include <functional>
#include <string>

namespace vexwave {

/// Variable exponent alpha(t) with base value alpha0 = alpha(0) in (1,2).
/// Profiles must satisfy alpha'(0) = 0 (checked numerically on construction).
struct ExponentProfile {
  std::string label;
  double alpha0 = 0.0;
  double abar = 0.0;  // alpha0 - 1
  std::function<double(double)> alpha;
};

/// Registry keys: "example1" (a0 + t^2/11), "example2" (a0 + t^2/(3+e^{2t})),
/// "constant". Throws std::invalid_argument for unknown labels, alpha0 outside
/// (1,2), or profiles failing the alpha'(0)=0 check.
ExponentProfile make_profile(const std::string& label, double alpha0);

/// Validation used by make_profile; public so custom profiles can be vetted.
void validate_profile(const ExponentProfile& p, double t_max = 1.0);

}  // namespace vexwave
