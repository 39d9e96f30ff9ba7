#pragma once

#include <functional>

namespace fadesde::quad {

struct Options {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_depth = 30;
};

// Adaptive Simpson integration of f over [a, b]. Throws NumericError
// (carrying the best estimate) if any subinterval still misses the local
// tolerance at max_depth.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts = {});

}  // namespace fadesde::quad
