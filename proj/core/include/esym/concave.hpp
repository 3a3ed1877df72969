#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "esym/linalg.hpp"
#include "esym/report.hpp"
#include "esym/symfun.hpp"

namespace esym {

/// f(x) H(x) + (mu - 1) D(x) (x) D(x): sign-equivalent to the Hessian of
/// f^mu wherever f > 0. Throws std::domain_error("outside positivity domain")
/// when f(x) <= 0.
template <class T>
std::vector<T> concavity_matrix(const std::vector<T>& a, const std::vector<T>& x, const T& mu) {
    SymDerivatives<T> d = f_derivatives(a, x);
    if (!(d.value > T(0))) throw std::domain_error("outside positivity domain");
    size_t n = x.size();
    std::vector<T> m(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m[i * n + j] = d.value * d.hessian[i * n + j] + (mu - T(1)) * d.gradient[i] * d.gradient[j];
    return m;
}

struct NsdResult {
    bool nsd = false;
    double lambda_max = 0.0;
    std::vector<double> direction;  ///< eigenvector of the top eigenvalue when not nsd
};

/// Cyclic-Jacobi eigendecomposition; nsd iff lambda_max <= tol * scale with
/// scale = max(1, max|M_ij|). Throws on input asymmetric beyond 1e-12 relative.
NsdResult nsd_verdict(const std::vector<double>& m, int n, double tol);

enum class P2Status { Concave, NotConcave, Boundary };

struct P2Certificate {
    P2Status status;
    Scalar margin;  ///< n a1^2 - 2(n-1) a0 a2, exact
};

/// Exact decision of sqrt(f_a) concavity on Gamma_n for p = 2 via the sign of
/// n a1^2 - 2(n-1) a0 a2. Zero margin is the boundary case and still concave
/// (limits of concave functions are concave). Requires a >= 0 component-wise.
P2Certificate p2_certificate(const CoeffVec& a, int n);

enum class DetKind { P3, SparseN };

/// The shift vector y_i = (a2 + a3 sigma_1(x))/2 - a3 x_i of the p = 3
/// closed-form determinant, exposed for tests.
std::vector<Scalar> p3_shift_vector(const CoeffVec& a, const Point& x);

/// Exact evaluation of the closed-form determinant expressions for
/// det H(f^{1/p}): kind P3 covers a = (a0,a1,a2,a3), kind SparseN covers
/// a = (a0,a1,0,...,0,an). The value is sign-equivalent (not equal) to the
/// determinant, so callers compare signs only.
///
/// NOTE: for P3 the two published renderings of the quadratic term differ
/// (sigma_1(D f)/sigma_1(y) in one, its square in the other); this follows
/// the determinant expansion, whose closing form carries
/// (sum_i f_i)^2 / sigma_1(y).
Scalar closedform_det(const CoeffVec& a, const Point& x, DetKind kind);

struct GammaSample {
    std::vector<PointF> points;
    bool truncated = false;  ///< rejection budget ran out before `count` points
};

/// Deterministic Gamma_k sample: log-uniform positive coordinates in
/// [1e-2, 1e2] (always in Gamma_n), plus sign-mixed rejection samples when
/// k < n. Every point is re-verified through sigma_all before it is returned.
GammaSample sample_gamma(int n, int k, int count, std::uint64_t seed);

enum class ConcavityStatus { CertifiedConcave, Counterexample, NoViolationFound };

struct ConcavityWitness {
    Point point;                    ///< exact rationalized sample
    std::vector<Scalar> direction;  ///< exact rationalized direction
    Scalar value;                   ///< v^T M(x) v > 0, exact
};

struct ConcavityVerdict {
    ConcavityStatus status = ConcavityStatus::NoViolationFound;
    std::optional<ConcavityWitness> witness;
    long samples_used = 0;
    double tolerance = 0.0;
    std::uint64_t seed = 0;
    long unconfirmed_flags = 0;  ///< float-level flags that failed the exact re-check
};

struct ScanOptions {
    double tol = 1e-9;
    unsigned jobs = 0;           ///< 0 = hardware concurrency
    long den_cap = 1000000;      ///< witness rationalization cap
};

/// Samples Gamma_n, assembles the concavity matrix for mu = 1/p in floats,
/// runs nsd_verdict, and accepts a violation only if it survives an exact
/// rational re-check at the rationalized (point, direction). The report is a
/// pure function of (a, p, n, samples, seed): violations are confirmed in
/// sample order, so worker count never shows in the result.
ConcavityVerdict concavity_scan(const CoeffVec& a, int p, int n, int samples,
                                std::uint64_t seed, const ScanOptions& opts = {});

struct MembershipReport {
    bool in_xi = false;  ///< bar f_a real-rooted (exact)
    bool in_x = false;   ///< bar f_a^(1/p) concave on the positive axis (exact)
    ConcavityVerdict k_scan;
    /// in_xi && counterexample: the scan refuted the real-rooted => concave
    /// conjecture at this a.
    bool xi_vs_scan_conflict = false;
    /// in_x vs scan tension in either direction.
    bool x_vs_scan_conflict = false;
};

MembershipReport set_membership(const CoeffVec& a, int n, int p, int samples,
                                std::uint64_t seed, const ScanOptions& opts = {});

/// Numerically probes the Marcus-Lopes-type theorems: sigma_k^(1/k) (l = 0)
/// or (sigma_{k+l}/sigma_k)^(1/l) is concave on Gamma_n. Central differences
/// with one Richardson level against nsd tolerance 1e-6. The theorems are
/// proven, so false is a numerical red flag and is logged to stderr.
bool marcus_lopes_check(int k, int l, const PointF& x);

namespace detail {
/// Central-difference Hessian with per-coordinate steps h_i = h_scale*|x_i|
/// and one Richardson extrapolation level.
std::vector<double> fd_hessian(const std::function<double(const PointF&)>& fn, const PointF& x,
                               double h_scale = 1e-3);
}  // namespace detail

struct DetCheckReport {
    DetKind kind = DetKind::P3;
    int n = 0;
    long points_requested = 0;
    long compared = 0;            ///< admissible, above the degeneracy margin
    long agreements = 0;
    long disagreements = 0;
    long skipped_degenerate = 0;  ///< below margin or singular for the formula
    std::uint64_t seed = 0;
};

/// Validates the closed-form determinant against the finite-difference
/// det H(f^{1/p}) oracle at random admissible points: only SIGNS are
/// compared (the closed forms are sign-equivalent, not equal), and samples
/// whose FD determinant sits below 1e-8 of its Hadamard bound are skipped as
/// degenerate. fixed_a pins the coefficient vector; otherwise one is drawn
/// per point.
DetCheckReport detcheck(DetKind kind, int n, int points, std::uint64_t seed,
                        const std::optional<CoeffVec>& fixed_a = std::nullopt);

Json to_json(const ConcavityVerdict& v);
Json to_json(const MembershipReport& m);
Json to_json(const DetCheckReport& d);

}  // namespace esym
