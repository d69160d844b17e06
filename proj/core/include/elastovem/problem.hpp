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
#pragma once

#include "elastovem/common.hpp"

#include <optional>

namespace elastovem {

/// Lame constants, density and angular frequency.
struct MaterialParams {
    double lambda = 1.0;
    double mu = 1.0;
    double rho = 1.0;
    double kappa = 1.0;

    double kappa_p_squared() const { return rho * kappa * kappa / (lambda + 2.0 * mu); }
    double kappa_s_squared() const { return rho * kappa * kappa / mu; }
    double kappa_p() const;
    double kappa_s() const;

    /// Throws UnsupportedConfigurationError unless lambda, mu, rho > 0 and kappa >= 0.
    void validate() const;
};

/// Scalar field with the derivatives the solver needs.
struct ScalarField {
    ScalarFunction value;
    VectorFunction gradient;
    ScalarFunction laplacian;
};

/// Vector source given with analytic divergence and scalar curl (d1 f2 - d2 f1).
struct VectorSource {
    VectorFunction f;
    ScalarFunction div;
    ScalarFunction curl;
};

/**
 * Dirichlet problem for the potentials: -lap phi_P - kP^2 phi_P = f_P / (lambda + 2 mu),
 * -lap phi_S - kS^2 phi_S = f_S / mu, with u = grad phi_P + curl phi_S = g on the boundary.
 * The source is either the pair (f_p, f_s) or a vector field to be decomposed numerically.
 */
struct ElasticProblem {
    MaterialParams material;
    ScalarFunction f_p;
    ScalarFunction f_s;
    std::optional<VectorSource> vector_source;
    VectorFunction g;

    VectorFunction exact_u;
    ScalarFunction exact_phi_p;
    ScalarFunction exact_phi_s;

    bool has_exact_displacement() const { return static_cast<bool>(exact_u); }
};

/// curl v = (d2 v, -d1 v).
inline Vector2 curl_of_gradient(const Vector2& grad) { return {grad.y(), -grad.x()}; }

/// Manufactured problem whose exact potentials are phi_p and phi_s.
ElasticProblem problem_from_potentials(const MaterialParams& material, const ScalarField& phi_p,
                                       const ScalarField& phi_s);

} // namespace elastovem
