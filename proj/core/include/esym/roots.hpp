#pragma once

#include <complex>
#include <vector>

#include "esym/unipoly.hpp"

namespace esym {

/// Approximate complex roots with multiplicities. Multiplicities come from
/// the exact squarefree decomposition, so sum(multiplicities) == deg P holds
/// by construction; the float part only ever chases simple roots.
struct RootSet {
    std::vector<std::complex<double>> roots;
    std::vector<int> multiplicities;
    /// Largest |P(root)| / (sum_i |a_i| |root|^i) over reported roots.
    double worst_residual = 0.0;
};

struct RootOptions {
    double residual_eps = 1e-12;  ///< relative residual bound per root
    double cluster_eps = 1e-8;    ///< merge radius, scaled by 1 + max|root|
    int max_iterations = 500;
    int max_restarts = 5;
};

/// Simultaneous-iteration (Aberth) root extraction. deg P >= 1 required.
/// Throws std::runtime_error("refinement failed ...") when the residual bound
/// cannot be met after all restarts.
RootSet complex_roots(const UniPoly& p, const RootOptions& opts = {});

/// Newton-polishes the given approximations against the squarefree part of P
/// until the relative residual drops below `target` (or iterations run out).
/// Returns the worst residual reached.
double refine_roots(const UniPoly& p, std::vector<std::complex<double>>& roots,
                    double target = 1e-13, int iterations = 60);

}  // namespace esym
