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

#include <Eigen/Core>

#include <functional>
#include <stdexcept>
#include <string>

namespace elastovem {

using Point2 = Eigen::Vector2d;
using Vector2 = Eigen::Vector2d;

using ScalarFunction = std::function<double(const Point2&)>;
using VectorFunction = std::function<Vector2(const Point2&)>;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or non-conforming mesh input.
class MeshError : public Error {
public:
    using Error::Error;
};

/// Degenerate element (singular projector system).
class ElementError : public Error {
public:
    ElementError(int cell, const std::string& what)
        : Error("cell " + std::to_string(cell) + ": " + what), m_cell(cell) {}
    int cell() const { return m_cell; }

private:
    int m_cell;
};

/// P- and S-boundary partitions do not describe the same oriented curve.
class BoundaryMismatchError : public Error {
public:
    using Error::Error;
};

/// Configuration that the library refuses to handle (e.g. overlay of non-convex cells).
class UnsupportedConfigurationError : public Error {
public:
    using Error::Error;
};

/// Sparse factorization failed; carries whatever diagnostics were available.
class SolverError : public Error {
public:
    SolverError(const std::string& what, double condition_estimate)
        : Error(what), m_condition_estimate(condition_estimate) {}
    double condition_estimate() const { return m_condition_estimate; }

private:
    double m_condition_estimate;
};

/// Spaces that cannot be compared DOF-by-DOF.
class IncomparableSpacesError : public Error {
public:
    using Error::Error;
};

} // namespace elastovem
