// Copyright 2026 The ifra Authors
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

#include "ifra/families.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/gamma.hpp>

#include "ifra/quadrature.hpp"

namespace ifra {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool finite_positive(double v) { return std::isfinite(v) && v > 0.0; }

// Cumulative hazard -log S(x).
double makeham_hazard(double theta, double x) {
  // x + e^{-x} - 1 == expm1(-x) + x, accurate for small x.
  return x + theta * (std::expm1(-x) + x);
}

double makeham_quantile(double theta, double target) {
  if (theta == 0.0) return target;
  // Cumulative hazard is increasing and convex and lies above x, so Newton
  // from x = target approaches the root monotonically from the right.
  double x = target;
  for (int it = 0; it < 50; ++it) {
    const double g = makeham_hazard(theta, x) - target;
    const double dg = 1.0 + theta * (-std::expm1(-x));
    const double next = x - g / dg;
    if (!(next >= 0.0) || !std::isfinite(next)) break;
    if (std::abs(next - x) <= 1e-15 * std::max(1.0, x)) return next;
    x = next;
  }
  // Fallback: bisection on a geometrically grown bracket.
  double lo = 0.0;
  double hi = std::max(target, 1.0);
  while (makeham_hazard(theta, hi) < target) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    (makeham_hazard(theta, mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> parse_numbers(std::string_view text,
                                  std::string_view spec) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    require(res.ec == std::errc() && res.ptr == item.data() + item.size() &&
                !item.empty(),
            "bad number '" + std::string(item) + "' in family spec '" +
                std::string(spec) + "'");
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

std::string_view to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::exponential: return "exp";
    case FamilyKind::weibull: return "weibull";
    case FamilyKind::lfr: return "lfr";
    case FamilyKind::makeham: return "makeham";
    case FamilyKind::gamma: return "gamma";
    case FamilyKind::beta: return "beta";
  }
  return "?";
}

Family Family::exponential(double rate) {
  require(finite_positive(rate), "exponential rate must be positive");
  return {FamilyKind::exponential, rate, 0.0};
}

Family Family::weibull(double shape, double scale) {
  require(std::isfinite(shape) && shape >= 1.0,
          "Weibull shape must be >= 1");
  require(finite_positive(scale), "Weibull scale must be positive");
  return {FamilyKind::weibull, shape, scale};
}

Family Family::lfr(double theta) {
  require(std::isfinite(theta) && theta >= 0.0, "LFR theta must be >= 0");
  return {FamilyKind::lfr, theta, 0.0};
}

Family Family::makeham(double theta) {
  require(std::isfinite(theta) && theta >= 0.0,
          "Makeham theta must be >= 0");
  return {FamilyKind::makeham, theta, 0.0};
}

Family Family::gamma(double shape, double scale) {
  require(finite_positive(shape) && finite_positive(scale),
          "gamma parameters must be positive");
  return {FamilyKind::gamma, shape, scale};
}

Family Family::beta(double a, double b) {
  require(finite_positive(a) && finite_positive(b),
          "beta parameters must be positive");
  return {FamilyKind::beta, a, b};
}

Family Family::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  require(colon != std::string_view::npos,
          "family spec '" + std::string(spec) + "' needs the form name:params");
  const std::string_view name = spec.substr(0, colon);
  const std::vector<double> p = parse_numbers(spec.substr(colon + 1), spec);
  auto arity = [&](std::size_t lo, std::size_t hi) {
    require(p.size() >= lo && p.size() <= hi,
            "wrong number of parameters in family spec '" + std::string(spec) +
                "'");
  };
  if (name == "exp" || name == "exponential") {
    arity(1, 1);
    return exponential(p[0]);
  }
  if (name == "weibull") {
    arity(1, 2);
    return weibull(p[0], p.size() > 1 ? p[1] : 1.0);
  }
  if (name == "lfr") {
    arity(1, 1);
    return lfr(p[0]);
  }
  if (name == "makeham") {
    arity(1, 1);
    return makeham(p[0]);
  }
  if (name == "gamma") {
    arity(1, 2);
    return gamma(p[0], p.size() > 1 ? p[1] : 1.0);
  }
  if (name == "beta") {
    arity(2, 2);
    return beta(p[0], p[1]);
  }
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

std::string Family::to_string() const {
  std::ostringstream out;
  out << ifra::to_string(kind_) << ':' << theta_;
  if (kind_ == FamilyKind::weibull || kind_ == FamilyKind::gamma ||
      kind_ == FamilyKind::beta) {
    out << ',' << aux_;
  }
  return out.str();
}

double Family::support_upper() const noexcept {
  return kind_ == FamilyKind::beta ? 1.0 : kInf;
}

FamilyPoint Family::eval(double x) const {
  require(!std::isnan(x), "family evaluated at NaN");
  if (x <= 0.0) {
    // Densities at the origin are only needed by quadrature, which never
    // touches the endpoint.
    return {0.0, 0.0};
  }
  switch (kind_) {
    case FamilyKind::exponential: {
      const double s = std::exp(-theta_ * x);
      return {theta_ * s, -std::expm1(-theta_ * x)};
    }
    case FamilyKind::weibull: {
      const double z = x / aux_;
      const double zt = std::pow(z, theta_);
      return {theta_ / aux_ * std::pow(z, theta_ - 1.0) * std::exp(-zt),
              -std::expm1(-zt)};
    }
    case FamilyKind::lfr: {
      const double h = x + 0.5 * theta_ * x * x;
      return {(1.0 + theta_ * x) * std::exp(-h), -std::expm1(-h)};
    }
    case FamilyKind::makeham: {
      const double h = makeham_hazard(theta_, x);
      return {(1.0 + theta_ * (-std::expm1(-x))) * std::exp(-h),
              -std::expm1(-h)};
    }
    case FamilyKind::gamma: {
      const boost::math::gamma_distribution<double> d(theta_, aux_);
      return {boost::math::pdf(d, x), boost::math::cdf(d, x)};
    }
    case FamilyKind::beta: {
      if (x >= 1.0) return {0.0, 1.0};
      const boost::math::beta_distribution<double> d(theta_, aux_);
      return {boost::math::pdf(d, x), boost::math::cdf(d, x)};
    }
  }
  return {};
}

double Family::survival(double x) const {
  if (x <= 0.0) return 1.0;
  switch (kind_) {
    case FamilyKind::exponential: return std::exp(-theta_ * x);
    case FamilyKind::weibull: return std::exp(-std::pow(x / aux_, theta_));
    case FamilyKind::lfr: return std::exp(-(x + 0.5 * theta_ * x * x));
    case FamilyKind::makeham: return std::exp(-makeham_hazard(theta_, x));
    case FamilyKind::gamma:
      return boost::math::cdf(boost::math::complement(
          boost::math::gamma_distribution<double>(theta_, aux_), x));
    case FamilyKind::beta:
      if (x >= 1.0) return 0.0;
      return boost::math::cdf(boost::math::complement(
          boost::math::beta_distribution<double>(theta_, aux_), x));
  }
  return 0.0;
}

double Family::quantile(double u) const {
  require(u > 0.0 && u < 1.0, "quantile level must lie in (0, 1)");
  const double t = -std::log1p(-u);  // exponential quantile
  switch (kind_) {
    case FamilyKind::exponential: return t / theta_;
    case FamilyKind::weibull: return aux_ * std::pow(t, 1.0 / theta_);
    case FamilyKind::lfr:
      // Root of theta x^2 / 2 + x - t = 0 in the cancellation-free form.
      return 2.0 * t / (1.0 + std::sqrt(1.0 + 2.0 * theta_ * t));
    case FamilyKind::makeham: return makeham_quantile(theta_, t);
    case FamilyKind::gamma:
      return boost::math::quantile(
          boost::math::gamma_distribution<double>(theta_, aux_), u);
    case FamilyKind::beta:
      return boost::math::quantile(
          boost::math::beta_distribution<double>(theta_, aux_), u);
  }
  return 0.0;
}

void draw_into(const Family& family, RandomStream& rng, double* out,
               std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = family.quantile(rng.uniform());
  }
}

Sample draw(const Family& family, std::size_t count, RandomStream& rng,
            std::string_view name) {
  std::vector<double> values(count);
  draw_into(family, rng, values.data(), count);
  return Sample(std::move(values), name);
}

double family_mean(const Family& family, double tol) {
  return integrate([&](double x) { return family.survival(x); }, 0.0,
                   family.support_upper(), tol)
      .value;
}

double star_ratio_delta(const Family& family, double tol) {
  const double upper = family.support_upper();
  const double mu = family_mean(family, tol);
  // 1 - F^2 = S (2 - S).
  const double mu2 = integrate(
                         [&](double x) {
                           const double s = family.survival(x);
                           return s * (2.0 - s);
                         },
                         0.0, upper, tol)
                         .value;
  return mu2 / mu;
}

}  // namespace ifra
