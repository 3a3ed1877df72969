#pragma once

#include <vector>

#include "esym/scalar.hpp"

namespace esym {

/// Eigen-decomposition of a symmetric matrix, cyclic Jacobi. `values` are
/// ascending; `vectors` is column-major, column k paired with values[k].
struct SymEigen {
    std::vector<double> values;
    std::vector<double> vectors;
    int n = 0;
};

/// m: row-major n*n, must be symmetric (caller's responsibility).
SymEigen jacobi_eigen(const std::vector<double>& m, int n);

/// Determinant via LU with partial pivoting; m is row-major n*n.
double lu_determinant(std::vector<double> m, int n);

/// Signature (s, t) of a symmetric rational matrix: s positive and t negative
/// eigenvalue counts, computed by exact congruence reduction. A zero diagonal
/// pivot with a nonzero off-diagonal entry is the hyperbolic case and yields
/// one positive and one negative inertia unit.
std::pair<int, int> rational_inertia(std::vector<Scalar> m, int n);

/// v^T M v exactly.
Scalar quadratic_form(const std::vector<Scalar>& m, const std::vector<Scalar>& v);

}  // namespace esym
