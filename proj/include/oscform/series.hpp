#pragma once

#include <span>
#include <vector>

#include "oscform/polynomial.hpp"

namespace oscform {

/// p(values) with every intermediate product cut at total degree max_degree.
Polynomial substitute_truncated(const Polynomial& p, std::span<const Polynomial> values, unsigned max_degree);

/// 1/a modulo terms of degree > order. Requires a(0) != 0.
Polynomial series_reciprocal(const Polynomial& a, unsigned order);

/// Truncated implicit-function solve. `equations` live in a ring whose first
/// params->size() variables are the parameters and whose remaining variables
/// are the unknowns (one per equation). Returns z(u) through total degree
/// `order` with equations(u, z(u)) = O(|u|^(order+1)). Requires the equations
/// to vanish at the origin with an invertible Jacobian in the unknowns there;
/// throws SingularPoint otherwise.
std::vector<Polynomial> newton_series_solve(const std::vector<Polynomial>& equations, const VarList& params,
                                            unsigned order);

}  // namespace oscform
