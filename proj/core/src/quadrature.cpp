#include "fadesde/quadrature.hpp"

#include <cmath>

#include "fadesde/errors.hpp"

namespace fadesde::quad {

namespace {

struct Worker {
  const std::function<double(double)>& f;
  double tol;  // absolute tolerance for the whole interval
  int max_depth;
  bool converged = true;

  static double simpson(double fa, double fm, double fb, double h) {
    return (fa + 4.0 * fm + fb) * (h / 6.0);
  }

  // One adaptive step on [a,b] with midpoint m and previous estimate s.
  double refine(double a, double m, double b, double fa, double fm, double fb,
                double s, double tol_here, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double sl = simpson(fa, flm, fm, m - a);
    const double sr = simpson(fm, frm, fb, b - m);
    const double err = (sl + sr - s) / 15.0;
    if (std::abs(err) <= tol_here || depth >= max_depth) {
      if (std::abs(err) > tol_here) converged = false;
      return sl + sr + err;
    }
    return refine(a, lm, m, fa, flm, fm, sl, 0.5 * tol_here, depth + 1) +
           refine(m, rm, b, fm, frm, fb, sr, 0.5 * tol_here, depth + 1);
  }
};

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts) {
  if (a == b) return 0.0;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fm = f(m);
  const double fb = f(b);
  const double s0 = Worker::simpson(fa, fm, fb, b - a);
  // The Richardson error estimate is compared against a fixed absolute
  // budget; the relative part is seeded from the crude first estimate.
  const double tol =
      std::max(opts.abs_tol, opts.rel_tol * std::max(1e-30, std::abs(s0)));
  Worker w{f, tol, opts.max_depth};
  const double result = w.refine(a, m, b, fa, fm, fb, s0, tol, 0);
  if (!w.converged) {
    throw NumericError("adaptive Simpson did not converge at max depth",
                       result);
  }
  return result;
}

}  // namespace fadesde::quad
