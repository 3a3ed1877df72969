#include "esym/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace esym {

SymEigen jacobi_eigen(const std::vector<double>& m, int n) {
    if (static_cast<int>(m.size()) != n * n) throw std::invalid_argument("jacobi_eigen: bad size");
    std::vector<double> a = m;
    std::vector<double> v(static_cast<size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<size_t>(i) * n + i] = 1.0;

    auto at = [&](std::vector<double>& mat, int r, int c) -> double& {
        return mat[static_cast<size_t>(r) * n + c];
    };

    for (int sweep = 0; sweep < 64; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::abs(at(a, p, q));
        if (off == 0.0) break;
        double thresh = (sweep < 3) ? 0.2 * off / (n * n) : 0.0;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = at(a, p, q);
                double g = 100.0 * std::abs(apq);
                if (sweep > 3 && std::abs(at(a, p, p)) + g == std::abs(at(a, p, p)) &&
                    std::abs(at(a, q, q)) + g == std::abs(at(a, q, q))) {
                    at(a, p, q) = at(a, q, p) = 0.0;
                    continue;
                }
                if (std::abs(apq) <= thresh) continue;
                double h = at(a, q, q) - at(a, p, p);
                double t;
                if (std::abs(h) + g == std::abs(h)) {
                    t = apq / h;
                } else {
                    double theta = 0.5 * h / apq;
                    t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                    if (theta < 0.0) t = -t;
                }
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                double tau = s / (1.0 + c);
                double hpq = t * apq;
                at(a, p, p) -= hpq;
                at(a, q, q) += hpq;
                at(a, p, q) = at(a, q, p) = 0.0;
                auto rotate = [&](std::vector<double>& mat, int i1, int j1, int i2, int j2) {
                    double g1 = at(mat, i1, j1), g2 = at(mat, i2, j2);
                    at(mat, i1, j1) = g1 - s * (g2 + g1 * tau);
                    at(mat, i2, j2) = g2 + s * (g1 - g2 * tau);
                };
                for (int j = 0; j < p; ++j) rotate(a, j, p, j, q);
                for (int j = p + 1; j < q; ++j) rotate(a, p, j, j, q);
                for (int j = q + 1; j < n; ++j) rotate(a, p, j, q, j);
                for (int j = 0; j < n; ++j) rotate(v, j, p, j, q);
            }
        }
    }

    SymEigen out;
    out.n = n;
    out.values.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out.values[static_cast<size_t>(i)] = at(a, i, i);
    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return out.values[static_cast<size_t>(x)] < out.values[static_cast<size_t>(y)]; });
    std::vector<double> vals(static_cast<size_t>(n));
    std::vector<double> vecs(static_cast<size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
        vals[static_cast<size_t>(k)] = out.values[static_cast<size_t>(order[static_cast<size_t>(k)])];
        for (int i = 0; i < n; ++i)
            vecs[static_cast<size_t>(i) * n + k] = v[static_cast<size_t>(i) * n + order[static_cast<size_t>(k)]];
    }
    out.values = std::move(vals);
    out.vectors = std::move(vecs);
    return out;
}

double lu_determinant(std::vector<double> m, int n) {
    double det = 1.0;
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(m[static_cast<size_t>(i) * n + k]) > std::abs(m[static_cast<size_t>(piv) * n + k])) piv = i;
        if (m[static_cast<size_t>(piv) * n + k] == 0.0) return 0.0;
        if (piv != k) {
            for (int j = 0; j < n; ++j)
                std::swap(m[static_cast<size_t>(piv) * n + j], m[static_cast<size_t>(k) * n + j]);
            det = -det;
        }
        det *= m[static_cast<size_t>(k) * n + k];
        for (int i = k + 1; i < n; ++i) {
            double f = m[static_cast<size_t>(i) * n + k] / m[static_cast<size_t>(k) * n + k];
            for (int j = k; j < n; ++j)
                m[static_cast<size_t>(i) * n + j] -= f * m[static_cast<size_t>(k) * n + j];
        }
    }
    return det;
}

std::pair<int, int> rational_inertia(std::vector<Scalar> m, int n) {
    auto at = [&](int r, int c) -> Scalar& { return m[static_cast<size_t>(r) * n + c]; };
    int s = 0, t = 0;
    for (int k = 0; k < n; ++k) {
        if (sign(at(k, k)) == 0) {
            int swap_with = -1, add_from = -1;
            for (int l = k + 1; l < n && swap_with < 0; ++l)
                if (sign(at(l, l)) != 0) swap_with = l;
            if (swap_with >= 0) {
                for (int j = 0; j < n; ++j) std::swap(at(k, j), at(swap_with, j));
                for (int i = 0; i < n; ++i) std::swap(at(i, k), at(i, swap_with));
            } else {
                for (int l = k + 1; l < n && add_from < 0; ++l)
                    if (sign(at(k, l)) != 0) add_from = l;
                if (add_from < 0) continue;  // decoupled zero row: null direction
                // congruence e_k <- e_k + e_l turns the hyperbolic pair into
                // a +/- diagonal pair over the two following pivot steps
                for (int j = 0; j < n; ++j) at(k, j) += at(add_from, j);
                for (int i = 0; i < n; ++i) at(i, k) += at(i, add_from);
            }
        }
        const Scalar pivot = at(k, k);
        if (sign(pivot) > 0)
            ++s;
        else if (sign(pivot) < 0)
            ++t;
        for (int i = k + 1; i < n; ++i) {
            if (sign(at(i, k)) == 0) continue;
            Scalar f = at(i, k) / pivot;
            for (int j = k; j < n; ++j) at(i, j) -= f * at(k, j);
            for (int j = k; j < n; ++j) at(j, i) = at(i, j);
        }
    }
    return {s, t};
}

Scalar quadratic_form(const std::vector<Scalar>& m, const std::vector<Scalar>& v) {
    size_t n = v.size();
    if (m.size() != n * n) throw std::invalid_argument("quadratic_form: bad sizes");
    Scalar acc(0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) acc += v[i] * m[i * n + j] * v[j];
    return acc;
}

}  // namespace esym
