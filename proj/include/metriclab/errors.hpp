// Copyright (c) 2026 The metriclab authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace metriclab {

/// A point failed a domain membership precondition.
class domain_membership_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// An operation defined only on convex domains was given a sector wider than pi.
class non_convex_domain_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A Moebius transformation was evaluated at (or too close to) its pole.
class pole_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Moebius coefficients with a (numerically) vanishing determinant.
class degenerate_map_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A scalar argument is outside the documented range (windows, exponents, angles, ...).
class invalid_parameter_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A planar-only quantity was requested in dimension n != 2.
class unsupported_dimension_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A (metric, domain) or (domain, domain) pairing with no defined constants.
class unsupported_combination_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An iterative routine exhausted its iteration budget.
class convergence_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace metriclab
