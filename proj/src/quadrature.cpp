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

#include "ifra/quadrature.hpp"

#include <cmath>
#include <sstream>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace ifra {

Integral integrate(const std::function<double(double)>& f, double a, double b,
                   double tol) {
  using boost::math::quadrature::gauss_kronrod;
  Integral out;
  double l1 = 0.0;
  out.value = gauss_kronrod<double, 61>::integrate(f, a, b, 20, tol * 1e-2,
                                                   &out.error, &l1);
  const auto converged = [&](const Integral& r) {
    return std::isfinite(r.value) &&
           r.error <= tol * std::max(1.0, std::abs(r.value));
  };
  if (!converged(out)) {
    // Endpoint singularities in a derivative (Weibull or gamma shapes near
    // one) stall Gauss-Kronrod; double-exponential rules cluster nodes there.
    Integral de;
    try {
      if (std::isinf(b)) {
        boost::math::quadrature::exp_sinh<double> rule;
        de.value = rule.integrate(
            [&](double x) { return f(a + x); }, tol * 1e-2, &de.error, &l1);
      } else {
        boost::math::quadrature::tanh_sinh<double> rule;
        de.value = rule.integrate(f, a, b, tol * 1e-2, &de.error, &l1);
      }
      if (converged(de) || de.error < out.error) out = de;
    } catch (const std::exception&) {
      // Keep the Gauss-Kronrod estimate and report it below.
    }
  }
  if (!converged(out)) {
    std::ostringstream msg;
    msg << "quadrature on [" << a << ", " << b
        << "] did not converge: estimated error " << out.error
        << " (requested " << tol << ")";
    throw QuadratureError(msg.str(), out.error);
  }
  return out;
}

}  // namespace ifra
