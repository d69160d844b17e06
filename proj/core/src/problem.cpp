/*
 * Copyright 2026 The elastovem authors. All rights reserved.
 * This file is licensed to you under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License. You may obtain a copy
 * of the License at http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software distributed under
 * the License is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR REPRESENTATIONS
 * OF ANY KIND, either express or implied. See the License for the specific language
 * governing permissions and limitations under the License.
 */
#include "elastovem/problem.hpp"

#include <cmath>

namespace elastovem {

double MaterialParams::kappa_p() const { return std::sqrt(kappa_p_squared()); }
double MaterialParams::kappa_s() const { return std::sqrt(kappa_s_squared()); }

void MaterialParams::validate() const {
    if (!(lambda > 0.0) || !(mu > 0.0) || !(rho > 0.0) || !(kappa >= 0.0) || !std::isfinite(lambda) ||
        !std::isfinite(mu) || !std::isfinite(rho) || !std::isfinite(kappa)) {
        throw UnsupportedConfigurationError("material parameters need lambda, mu, rho > 0 and kappa >= 0");
    }
}

ElasticProblem problem_from_potentials(const MaterialParams& material, const ScalarField& phi_p,
                                       const ScalarField& phi_s) {
    ElasticProblem p;
    p.material = material;
    const double cp = material.lambda + 2.0 * material.mu;
    const double cs = material.mu;
    const double kp2 = material.kappa_p_squared();
    const double ks2 = material.kappa_s_squared();
    p.f_p = [=](const Point2& x) { return cp * (-phi_p.laplacian(x) - kp2 * phi_p.value(x)); };
    p.f_s = [=](const Point2& x) { return cs * (-phi_s.laplacian(x) - ks2 * phi_s.value(x)); };
    p.exact_u = [=](const Point2& x) -> Vector2 {
        return phi_p.gradient(x) + curl_of_gradient(phi_s.gradient(x));
    };
    p.g = p.exact_u;
    p.exact_phi_p = phi_p.value;
    p.exact_phi_s = phi_s.value;
    return p;
}

} // namespace elastovem
