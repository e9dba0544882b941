//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#include "dockaudit/numeric.hpp"

#include <cmath>
#include <limits>

#include "dockaudit/error.hpp"

namespace dockaudit {

namespace {

// Modified Lentz evaluation of the continued fraction for I_x(a,b).
double beta_cf(double a, double b, double x) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-15;
  constexpr int kMaxIter = 500;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny)
    d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny)
      d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny)
      c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny)
      d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny)
      c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps)
      return h;
  }
  throw Error("regularized_incomplete_beta: continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (a <= 0 || b <= 0)
    throw Error("regularized_incomplete_beta: a and b must be positive");
  if (x < 0 || x > 1)
    throw Error("regularized_incomplete_beta: x outside [0, 1]");
  if (x == 0.0)
    return 0.0;
  if (x == 1.0)
    return 1.0;

  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * beta_cf(a, b, x) / a;
  return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double dof) {
  if (dof <= 0)
    throw Error("student_t_cdf: dof must be positive");
  if (t == 0.0)
    return 0.5;
  const double x = dof / (dof + t * t);
  const double half_tail = 0.5 * regularized_incomplete_beta(dof / 2.0, 0.5, x);
  return t > 0 ? 1.0 - half_tail : half_tail;
}

double student_t_two_tailed_p(double t, double dof) {
  if (dof <= 0)
    throw Error("student_t_two_tailed_p: dof must be positive");
  if (t == 0.0)
    return 1.0;
  const double x = dof / (dof + t * t);
  double p = regularized_incomplete_beta(dof / 2.0, 0.5, x);
  if (p <= 0.0)
    p = std::numeric_limits<double>::min();
  if (p > 1.0)
    p = 1.0;
  return p;
}

}  // namespace dockaudit
