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


#include "mapenum/asymptotics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "mapenum/errors.hpp"

namespace mapenum {

namespace {

// f(t) = t e_P'(t) - (e_P(t) - 1) = sum_{n in P, n >= 2} (n - 1) t^n / n!
double excess(const PreimageConstraint& p, double t) {
  if (p.is_all()) return t * std::exp(t) - std::expm1(t);
  double sum = 0;
  double term = 1;  // t^n / n!
  for (std::uint32_t n = 1; n <= p.max_element(); ++n) {
    term *= t / n;
    if (n >= 2 && p.contains(n)) sum += (n - 1) * term;
  }
  return sum;
}

double initial_bracket(const PreimageConstraint& p) {
  std::uint32_t k = 2;
  if (!p.is_all()) {
    for (auto n : p.elements()) {
      if (n > 1) {
        k = n;
        break;
      }
    }
  }
  const double kf = k;
  return std::pow(std::tgamma(kf) / (1.0 - 1.0 / kf), 1.0 / kf);
}

}  // namespace

double evaluate_e(const PreimageConstraint& p, double x) {
  if (p.is_all()) return std::exp(x);
  if (p.empty()) return 0.0;
  const std::uint32_t top = p.max_element();
  // Horner on sum_{n <= top} [n in P] x^n / n!, nested as
  // c_0 + x/1 (c_1 + x/2 (c_2 + ...)).
  double acc = p.contains(top) ? 1.0 : 0.0;
  for (std::uint32_t n = top; n-- > 0;) acc = (p.contains(n) ? 1.0 : 0.0) + acc * x / (n + 1);
  return acc;
}

SingularData solve_singular(const PreimageConstraint& p, double tol) {
  if (p.empty() || !is_admissible(p)) {
    throw ConstraintNotAdmissible("constraint " + p.to_string() +
                                  " needs 0 in P and an element >= 2 for singular analysis");
  }
  double lo = 0;
  double hi = initial_bracket(p);
  while (excess(p, hi) < 1.0) hi *= 2;
  for (int i = 0; i < 400 && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    (excess(p, mid) < 1.0 ? lo : hi) = mid;
  }
  double tau = 0.5 * (lo + hi);
  const PreimageConstraint m2 = shift(p, 2);
  for (int i = 0; i < 2; ++i) tau -= (excess(p, tau) - 1.0) / (tau * evaluate_e(m2, tau));

  const AdmissibilityClass cls = classify(p);
  SingularData s;
  s.constraint = p;
  s.tau = tau;
  s.e_tau = evaluate_e(p, tau);
  s.e_m1_tau = evaluate_e(shift(p, 1), tau);
  s.e_m2_tau = evaluate_e(m2, tau);
  s.rho = tau / s.e_tau;
  s.period = cls.period;
  s.aperiodic = cls.period == 1;
  return s;
}

std::vector<double> tau_sequence(const SingularData& s, std::uint32_t k_max) {
  std::vector<double> out(k_max + 1, 0.0);
  for (std::uint32_t k = 0; k < k_max; ++k) out[k + 1] = s.rho * evaluate_e(s.constraint, out[k]);
  return out;
}

double Asymptote::value() const {
  const double v = std::exp(log_value);
  if (!std::isfinite(v)) throw std::overflow_error("asymptote exceeds double range; use log_value");
  return v;
}

Asymptote coefficient_asymptote(const SingularData& s, FamilyKind family, std::uint32_t n) {
  using Tag = FamilyKind::Tag;
  const double pi = std::numbers::pi;
  const double ln_n = std::log(static_cast<double>(n));
  const double growth = -static_cast<double>(n) * std::log(s.rho);
  const double tree_const = 0.5 * std::log(s.e_tau / (2 * pi * s.e_m2_tau));
  const double trp = s.tau * s.rho * s.e_m2_tau;

  Asymptote a;
  a.unproven = !s.aperiodic;
  switch (family.tag) {
    case Tag::Tree:
      a.log_value = tree_const - 1.5 * ln_n + growth;
      break;
    case Tag::Function:
    case Tag::PartialFunction:
      a.log_value = -0.5 * std::log(2 * pi * trp) - 0.5 * ln_n + growth;
      if (family.tag == Tag::PartialFunction) a.log_value += s.tau;
      break;
    case Tag::XiCyclic:
      a.log_value = -std::log(2 * trp) + growth;
      break;
    case Tag::XiImage:
    case Tag::XiPartialImage: {
      const double tau_k = tau_sequence(s, family.param).back();
      a.log_value = std::log(tau_k / (s.tau * s.tau)) + tree_const + 0.5 * ln_n + growth;
      if (family.tag == Tag::XiPartialImage) a.log_value += s.tau;
      break;
    }
    default:
      throw Error("no asymptotic estimate for family " + family.name());
  }
  return a;
}

double cyclic_constant(const SingularData& s) {
  return std::sqrt(std::numbers::pi / (2 * s.tau * s.rho * s.e_m2_tau));
}

double average_cyclic_asymptote(const SingularData& s, std::uint32_t n) {
  return cyclic_constant(s) * std::sqrt(static_cast<double>(n));
}

double kth_image_asymptote(const SingularData& s, std::uint32_t n, std::uint32_t k) {
  return static_cast<double>(n) * (1.0 - tau_sequence(s, k).back() / s.tau);
}

std::vector<double> log2_image_ratio(const SingularData& s, std::uint32_t k_max) {
  std::vector<double> out = tau_sequence(s, k_max);
  for (auto& t : out) t = std::log2(1.0 - t / s.tau);
  return out;
}

double coalescence_metric(const SingularData& s, std::uint32_t k) {
  const SingularData base = solve_singular(PreimageConstraint::all_nonnegative());
  return log2_image_ratio(s, k).back() - log2_image_ratio(base, k).back();
}

}  // namespace mapenum
