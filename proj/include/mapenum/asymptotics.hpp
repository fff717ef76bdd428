// Copyright 2026 The mapenum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <vector>

#include "mapenum/constraint.hpp"
#include "mapenum/enumeration.hpp"

namespace mapenum {

/// e_P(x) = sum_{n in P} x^n / n! as a double. The exponential for all of
/// Z>=0, Horner over the support otherwise.
double evaluate_e(const PreimageConstraint& p, double x);

/// Constants of the square-root singularity of T^P at rho.
struct SingularData {
  PreimageConstraint constraint = PreimageConstraint::all_nonnegative();
  double tau = 0;
  double rho = 0;
  double e_tau = 0;     // e_P(tau)
  double e_m1_tau = 0;  // e_{P-1}(tau)
  double e_m2_tau = 0;  // e_{P-2}(tau)
  bool aperiodic = true;
  std::uint32_t period = 1;
};

/// Solves t e_P'(t) - (e_P(t) - 1) = 1 by bisection to width `tol`, then
/// two Newton steps. Needs 0 in P and P - 2 nonempty, else throws
/// ConstraintNotAdmissible. Periodic P is solved too and flagged through
/// `aperiodic`.
SingularData solve_singular(const PreimageConstraint& p, double tol = 1e-13);

/// tau_0 .. tau_k_max with tau_0 = 0 and tau_{k+1} = rho e_P(tau_k).
std::vector<double> tau_sequence(const SingularData& s, std::uint32_t k_max);

/// Natural log of an asymptotic estimate. `unproven` is set when the
/// constraint is periodic, where the estimate is heuristic.
struct Asymptote {
  double log_value = 0;
  bool unproven = false;

  /// exp(log_value); throws std::overflow_error when that is not finite.
  double value() const;
};

/// Leading-order estimate of [z^n] for Tree, Function, PartialFunction,
/// XiCyclic, XiImage(k) and XiPartialImage(k). Other families throw Error.
Asymptote coefficient_asymptote(const SingularData& s, FamilyKind family, std::uint32_t n);

/// c = sqrt(pi / (2 tau rho e_{P-2}(tau))); the mean number of cyclic
/// points is about c sqrt(n).
double cyclic_constant(const SingularData& s);
double average_cyclic_asymptote(const SingularData& s, std::uint32_t n);

/// n (1 - tau_k / tau), the mean size of f^k([n]) for functions and for
/// partial functions alike.
double kth_image_asymptote(const SingularData& s, std::uint32_t n, std::uint32_t k);

/// log2(1 - tau_k/tau) for P minus the same quantity for all of Z>=0.
double coalescence_metric(const SingularData& s, std::uint32_t k);

/// log2(1 - tau_k/tau) for k = 0..k_max.
std::vector<double> log2_image_ratio(const SingularData& s, std::uint32_t k_max);

}  // namespace mapenum
