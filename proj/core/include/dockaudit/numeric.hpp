//
// Project DockAudit - Copyright 2026 DockAudit Developers.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef DOCKAUDIT_NUMERIC_HPP
#define DOCKAUDIT_NUMERIC_HPP

namespace dockaudit {

/// Regularized incomplete beta function I_x(a, b), evaluated with the
/// Lentz continued fraction (switching to the symmetric form for
/// convergence). Accurate to ~1e-14 for the parameter ranges used by the
/// t distribution.
double regularized_incomplete_beta(double a, double b, double x);

/// CDF of Student's t with `dof` degrees of freedom.
double student_t_cdf(double t, double dof);

/// Two-tailed tail probability, I_{v/(v+t^2)}(v/2, 1/2), clamped into
/// (0, 1] so extreme statistics never report an exact zero.
double student_t_two_tailed_p(double t, double dof);

}  // namespace dockaudit

#endif  // DOCKAUDIT_NUMERIC_HPP
