#include "esym/roots.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace esym {

namespace {

using cd = std::complex<double>;

std::vector<double> to_doubles(const UniPoly& p) {
    std::vector<double> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = to_double(p.coeffs()[i]);
    return c;
}

cd horner(const std::vector<double>& c, cd z) {
    cd acc(0.0, 0.0);
    for (size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

cd horner_derivative(const std::vector<double>& c, cd z) {
    cd acc(0.0, 0.0);
    for (size_t i = c.size(); i-- > 1;) acc = acc * z + static_cast<double>(i) * c[i];
    return acc;
}

double residual_scale(const std::vector<double>& c, cd z) {
    double az = std::abs(z), s = 0.0, pw = 1.0;
    for (double a : c) {
        s += std::abs(a) * pw;
        pw *= az;
    }
    return std::max(s, 1e-300);
}

double relative_residual(const std::vector<double>& c, cd z) {
    return std::abs(horner(c, z)) / residual_scale(c, z);
}

/// Aberth-Ehrlich pass on a squarefree (all roots simple) double polynomial.
/// Returns true when every iterate meets the residual bound.
bool aberth(const std::vector<double>& c, std::vector<cd>& z, double eps, int max_iter) {
    const size_t d = z.size();
    for (int it = 0; it < max_iter; ++it) {
        double worst_move = 0.0;
        for (size_t i = 0; i < d; ++i) {
            cd pv = horner(c, z[i]);
            if (std::abs(pv) == 0.0) continue;
            cd dv = horner_derivative(c, z[i]);
            if (std::abs(dv) == 0.0) {
                z[i] += cd(1e-8, 1e-8);
                continue;
            }
            cd newton = pv / dv;
            cd rep(0.0, 0.0);
            for (size_t j = 0; j < d; ++j)
                if (j != i) rep += 1.0 / (z[i] - z[j]);
            cd denom = 1.0 - newton * rep;
            cd w = (std::abs(denom) < 1e-14) ? newton : newton / denom;
            z[i] -= w;
            worst_move = std::max(worst_move, std::abs(w) / (1.0 + std::abs(z[i])));
        }
        if (worst_move < 1e-15) break;
    }
    for (const cd& zi : z)
        if (relative_residual(c, zi) > eps) return false;
    return true;
}

std::vector<cd> initial_guesses(const std::vector<double>& c, int restart) {
    const size_t d = c.size() - 1;
    double lead = std::abs(c.back());
    double radius = 0.0;
    for (size_t i = 0; i < d; ++i) radius = std::max(radius, std::abs(c[i]) / lead);
    radius = 1.0 + radius;
    std::vector<cd> z(d);
    double phase0 = 0.4 + 0.7311 * restart;            // fixed offsets, reproducible
    double stretch = 1.0 + 0.17 * restart;
    for (size_t i = 0; i < d; ++i) {
        double ang = phase0 + 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(d);
        z[i] = stretch * radius * cd(std::cos(ang), std::sin(ang));
    }
    return z;
}

}  // namespace

RootSet complex_roots(const UniPoly& p, const RootOptions& opts) {
    if (p.degree() < 1) throw std::invalid_argument("complex_roots requires degree >= 1");

    RootSet out;
    std::vector<UniPoly> factors = p.squarefree_decomposition();
    for (size_t f = 0; f < factors.size(); ++f) {
        const UniPoly& s = factors[f];
        if (s.degree() < 1) continue;
        std::vector<double> c = to_doubles(s.primitive());
        std::vector<cd> z;
        bool ok = false;
        for (int restart = 0; restart <= opts.max_restarts && !ok; ++restart) {
            z = initial_guesses(c, restart);
            ok = aberth(c, z, opts.residual_eps, opts.max_iterations);
        }
        if (!ok)
            throw std::runtime_error("refinement failed: residual bound not met for factor " +
                                     s.str());
        for (const cd& zi : z) {
            out.roots.push_back(zi);
            out.multiplicities.push_back(static_cast<int>(f) + 1);
            out.worst_residual = std::max(out.worst_residual, relative_residual(c, zi));
        }
    }

    // snap conjugate noise: a real polynomial's near-real roots are real
    double max_abs = 0.0;
    for (const cd& z : out.roots) max_abs = std::max(max_abs, std::abs(z));
    double snap = opts.cluster_eps * (1.0 + max_abs);
    for (cd& z : out.roots)
        if (std::abs(z.imag()) < snap) z = cd(z.real(), 0.0);

    // cluster numerically indistinguishable approximations across factors
    std::vector<cd> roots;
    std::vector<int> mult;
    for (size_t i = 0; i < out.roots.size(); ++i) {
        bool merged = false;
        for (size_t j = 0; j < roots.size(); ++j) {
            if (std::abs(out.roots[i] - roots[j]) <= snap) {
                mult[j] += out.multiplicities[i];
                merged = true;
                break;
            }
        }
        if (!merged) {
            roots.push_back(out.roots[i]);
            mult.push_back(out.multiplicities[i]);
        }
    }
    // deterministic order for reports
    std::vector<size_t> idx(roots.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        if (roots[a].real() != roots[b].real()) return roots[a].real() < roots[b].real();
        return roots[a].imag() < roots[b].imag();
    });
    RootSet sorted;
    sorted.worst_residual = out.worst_residual;
    for (size_t i : idx) {
        sorted.roots.push_back(roots[i]);
        sorted.multiplicities.push_back(mult[i]);
    }
    return sorted;
}

double refine_roots(const UniPoly& p, std::vector<std::complex<double>>& roots, double target,
                    int iterations) {
    std::vector<double> c = to_doubles(p.squarefree_part().primitive());
    double worst = 0.0;
    for (cd& z : roots) {
        for (int it = 0; it < iterations; ++it) {
            if (relative_residual(c, z) <= target) break;
            cd dv = horner_derivative(c, z);
            if (std::abs(dv) == 0.0) break;
            z -= horner(c, z) / dv;
        }
        worst = std::max(worst, relative_residual(c, z));
    }
    return worst;
}

}  // namespace esym
