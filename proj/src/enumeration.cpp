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

#include "mapenum/enumeration.hpp"

#include <cmath>
#include <limits>
#include <optional>

#include "mapenum/errors.hpp"

namespace mapenum {

namespace {

// Memoizes the pieces shared by the closed forms: T, e_{P-1}(T),
// e_{P-2}(T), F, e^T.
template <typename R>
class Pipeline {
 public:
  Pipeline(PreimageConstraint p, std::size_t order, R scale)
      : p_(std::move(p)), order_(order), scale_(std::move(scale)) {}

  Series<R> z() const { return Series<R>::variable(order_, scale_); }

  const Series<R>& tree() {
    if (!tree_) {
      tree_ = p_.contains(0) ? lagrange_invert<R>(p_, order_, scale_) : Series<R>(order_, scale_);
    }
    return *tree_;
  }

  // T_{<=h}, with T_{<=-1} = 0. Heights past order-1 no longer change the
  // truncated series.
  Series<R> bounded_tree(std::int64_t h) const {
    Series<R> b(order_, scale_);
    const std::int64_t steps = std::min<std::int64_t>(h + 1, static_cast<std::int64_t>(order_) + 1);
    const Series<R> var = z();
    for (std::int64_t i = 0; i < steps; ++i) b = mul(var, exp_compose(p_, b));
    return b;
  }

  const Series<R>& e_minus1_of_tree() {
    if (!e_m1_) e_m1_ = exp_compose(shift(p_, 1), tree());
    return *e_m1_;
  }

  const Series<R>& e_minus2_of_tree() {
    if (!e_m2_) e_m2_ = exp_compose(shift(p_, 2), tree());
    return *e_m2_;
  }

  const Series<R>& exp_of_tree() {
    if (!exp_t_) exp_t_ = exp_series(tree());
    return *exp_t_;
  }

  // F = (1 - z e_{P-1}(T))^{-1}
  const Series<R>& function() {
    if (!function_) {
      const Series<R> one = Series<R>::constant(R(1), order_, scale_);
      function_ = mul_inverse(one - mul(z(), e_minus1_of_tree()));
    }
    return *function_;
  }

  const Series<R>& log_function() {
    if (!log_f_) log_f_ = log_series(function());
    return *log_f_;
  }

  Series<R> series(FamilyKind family) {
    using Tag = FamilyKind::Tag;
    switch (family.tag) {
      case Tag::Tree:
        return tree();
      case Tag::BoundedTree:
        return bounded_tree(family.param);
      case Tag::Function:
        return function();
      case Tag::PartialFunction:
        return mul(function(), exp_of_tree());
      case Tag::Connected:
        return log_function();
      case Tag::XiImage: {
        // z T_{<=k-1} e_{P-2}(T) F^3
        const Series<R>& f = function();
        return mul(mul(mul(z(), bounded_tree(std::int64_t{family.param} - 1)), e_minus2_of_tree()),
                   mul(f, mul(f, f)));
      }
      case Tag::XiPartialImage: {
        // T_{<=k-1} F^2 e^T (z e_{P-2}(T) F + 1)
        const Series<R>& f = function();
        Series<R> bracket = mul(mul(z(), e_minus2_of_tree()), f);
        bracket[0] += R(1);
        return mul(mul(bounded_tree(std::int64_t{family.param} - 1), mul(f, f)),
                   mul(exp_of_tree(), bracket));
      }
      case Tag::XiCyclic: {
        // z e_{P-1}(T) F^2
        const Series<R>& f = function();
        return mul(mul(z(), e_minus1_of_tree()), mul(f, f));
      }
      case Tag::XiComponent:
        return mul(function(), log_function());
    }
    throw Error("unknown family");
  }

 private:
  PreimageConstraint p_;
  std::size_t order_;
  R scale_;
  std::optional<Series<R>> tree_, e_m1_, e_m2_, exp_t_, function_, log_f_;
};

Rational inverse_factorial(std::uint32_t n) { return Rational(BigInt(1), factorial(n)); }

}  // namespace

bool FamilyKind::is_counting() const {
  switch (tag) {
    case Tag::Tree:
    case Tag::BoundedTree:
    case Tag::Function:
    case Tag::PartialFunction:
    case Tag::Connected:
      return true;
    default:
      return false;
  }
}

std::string FamilyKind::name() const {
  switch (tag) {
    case Tag::Tree: return "tree";
    case Tag::BoundedTree: return "bounded-tree";
    case Tag::Function: return "function";
    case Tag::PartialFunction: return "partial-function";
    case Tag::Connected: return "connected";
    case Tag::XiImage: return "xi-image";
    case Tag::XiPartialImage: return "xi-partial-image";
    case Tag::XiCyclic: return "xi-cyclic";
    case Tag::XiComponent: return "xi-component";
  }
  return "?";
}

FamilyKind parse_family(std::string_view name, std::uint32_t param) {
  if (name == "tree") return FamilyKind::tree();
  if (name == "bounded-tree") return FamilyKind::bounded_tree(param);
  if (name == "function") return FamilyKind::function();
  if (name == "partial-function") return FamilyKind::partial_function();
  if (name == "connected") return FamilyKind::connected();
  if (name == "xi-image") return FamilyKind::xi_image(param);
  if (name == "xi-partial-image") return FamilyKind::xi_partial_image(param);
  if (name == "xi-cyclic") return FamilyKind::xi_cyclic();
  if (name == "xi-component") return FamilyKind::xi_component();
  throw Error("unknown family '" + std::string(name) + "'");
}

template <typename R>
Series<R> family_series(const PreimageConstraint& p, FamilyKind family, std::size_t order,
                        R scale) {
  if (p.empty()) throw InvalidConstraint("the empty constraint admits no functions");
  Pipeline<R> pipeline(p, order, std::move(scale));
  return pipeline.series(family);
}

template Series<Rational> family_series(const PreimageConstraint&, FamilyKind, std::size_t,
                                        Rational);
template Series<double> family_series(const PreimageConstraint&, FamilyKind, std::size_t, double);

CountReport count(const PreimageConstraint& p, FamilyKind family, std::uint32_t n) {
  if (p.empty()) throw InvalidConstraint("the empty constraint admits no functions");
  CountReport report;
  report.n = n;
  report.family = family;
  report.constraint = p;

  using Tag = FamilyKind::Tag;
  const bool direct = p.contains(0) && (family.tag == Tag::Tree || family.tag == Tag::Function ||
                                        family.tag == Tag::PartialFunction);
  if (direct) {
    const TruncatedSeries pw = power(e_series<Rational>(p, n), n);
    if (family.tag == Tag::Tree) {
      report.coefficient = n == 0 ? Rational(0) : Rational(pw[n - 1] / n);
    } else if (family.tag == Tag::Function) {
      report.coefficient = pw[n];
    } else {
      Rational acc = 0;
      for (std::uint32_t j = 0; j <= n; ++j) acc += pw[n - j] * inverse_factorial(j);
      report.coefficient = acc;
    }
  } else {
    Pipeline<Rational> pipeline(p, n, Rational(1));
    report.coefficient = pipeline.series(family)[n];
    if (!family.is_counting()) {
      const Rational& f = pipeline.function()[n];
      if (sgn(f) != 0) report.average = Rational(report.coefficient / f);
    }
  }

  const Rational scaled = report.coefficient * factorial(n);
  if (scaled.get_den() != 1) throw Error("n! * [z^n] is not an integer; series pipeline is broken");
  report.count = scaled.get_num();
  return report;
}

std::vector<BigInt> count_sequence(const PreimageConstraint& p, FamilyKind family,
                                   std::uint32_t n_max) {
  if (p.empty()) throw InvalidConstraint("the empty constraint admits no functions");
  std::vector<BigInt> out(n_max + 1);
  using Tag = FamilyKind::Tag;
  const bool direct = p.contains(0) && (family.tag == Tag::Tree || family.tag == Tag::Function ||
                                        family.tag == Tag::PartialFunction);
  if (!direct) {
    const TruncatedSeries s = family_series<Rational>(p, family, n_max);
    for (std::uint32_t n = 0; n <= n_max; ++n) {
      out[n] = Rational(s[n] * factorial(n)).get_num();
    }
    return out;
  }

  // pw holds e_P^n; one sparse multiplication per step.
  const TruncatedSeries e = e_series<Rational>(p, n_max);
  TruncatedSeries pw = TruncatedSeries::constant(Rational(1), n_max);
  std::vector<Rational> inv_fact(n_max + 1);
  for (std::uint32_t j = 0; j <= n_max; ++j) inv_fact[j] = inverse_factorial(j);

  for (std::uint32_t n = 0; n <= n_max; ++n) {
    if (n > 0) pw = mul(e, pw);
    Rational coefficient;
    if (family.tag == Tag::Tree) {
      coefficient = n == 0 ? Rational(0) : Rational(pw[n - 1] / n);
    } else if (family.tag == Tag::Function) {
      coefficient = pw[n];
    } else {
      for (std::uint32_t j = 0; j <= n; ++j) coefficient += pw[n - j] * inv_fact[j];
    }
    out[n] = Rational(coefficient * factorial(n)).get_num();
  }
  return out;
}

std::string Statistic::name() const {
  switch (tag) {
    case Tag::ImageDeficiency: return "image-deficiency";
    case Tag::ImageSize: return "image-size";
    case Tag::CyclicPoints: return "cyclic-points";
    case Tag::Components: return "components";
  }
  return "?";
}

Statistic parse_statistic(std::string_view name, std::uint32_t k) {
  if (name == "image-deficiency") return Statistic::image_deficiency(k);
  if (name == "image-size") return Statistic::image_size(k);
  if (name == "cyclic-points") return Statistic::cyclic_points();
  if (name == "components") return Statistic::components();
  throw Error("unknown statistic '" + std::string(name) + "'");
}

namespace {

FamilyKind numerator_family(Statistic stat) {
  switch (stat.tag) {
    case Statistic::Tag::ImageDeficiency:
    case Statistic::Tag::ImageSize:
      return FamilyKind::xi_image(stat.k);
    case Statistic::Tag::CyclicPoints:
      return FamilyKind::xi_cyclic();
    case Statistic::Tag::Components:
      return FamilyKind::xi_component();
  }
  throw Error("unknown statistic");
}

}  // namespace

Rational expected_statistic(const PreimageConstraint& p, Statistic stat, std::uint32_t n) {
  if (p.empty()) throw InvalidConstraint("the empty constraint admits no functions");
  Pipeline<Rational> pipeline(p, n, Rational(1));
  const Rational f = pipeline.function()[n];
  if (sgn(f) == 0) {
    throw NoFunctionsOfThisSize("no function on " + std::to_string(n) +
                                " points satisfies the constraint " + p.to_string());
  }
  const Rational mean = pipeline.series(numerator_family(stat))[n] / f;
  if (stat.tag == Statistic::Tag::ImageSize) return Rational(n) - mean;
  return mean;
}

std::vector<double> approx_expected_statistic(const PreimageConstraint& p, Statistic stat,
                                              std::uint32_t n_max, double scale) {
  if (p.empty()) throw InvalidConstraint("the empty constraint admits no functions");
  Pipeline<double> pipeline(p, n_max, scale);
  const FloatSeries& f = pipeline.function();
  const FloatSeries num = pipeline.series(numerator_family(stat));
  std::vector<double> out(n_max + 1, std::numeric_limits<double>::quiet_NaN());
  for (std::uint32_t n = 0; n <= n_max; ++n) {
    if (f[n] == 0.0) continue;
    // The rescaling factor s^n cancels in the ratio.
    const double mean = num[n] / f[n];
    out[n] = stat.tag == Statistic::Tag::ImageSize ? static_cast<double>(n) - mean : mean;
  }
  return out;
}

}  // namespace mapenum
