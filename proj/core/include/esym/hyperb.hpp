#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "esym/concave.hpp"
#include "esym/report.hpp"
#include "esym/symfun.hpp"
#include "esym/unipoly.hpp"

namespace esym {

/// A homogeneous polynomial given by an exact evaluator. sigma_k and the
/// semi-symmetric s_{n,p} get closed-form line restrictions along the
/// all-ones direction; anything else goes through exact interpolation.
struct HomogeneousSpec {
    enum class Kind { SigmaK, SNP, Custom };

    Kind kind = Kind::Custom;
    std::string name;
    int dim = 0;
    int degree = 0;
    int k = 0, n = 0, p = 0;  ///< parameters for SigmaK / SNP
    std::function<Scalar(const Point&)> eval;

    static HomogeneousSpec sigma_k(int k, int n);
    static HomogeneousSpec s_np(int n, int p);
    static HomogeneousSpec custom(std::string name, int dim, int degree,
                                  std::function<Scalar(const Point&)> eval);

    /// The directional derivative sum_i v_i d/dx_i of this spec, itself
    /// homogeneous of one degree less.
    HomogeneousSpec directional_derivative(const Point& v) const;
};

/// Exact restriction t -> spec(x + t v). sigma_k along the all-ones direction
/// uses the binomial closed form; the general case interpolates spec at
/// t = 0..degree and solves the Vandermonde system exactly (Lagrange form).
UniPoly restrict_to_line(const HomogeneousSpec& spec, const Point& x, const Point& v);

enum class ProbeStatus { FailsPositivity, Witness, NoViolation };

struct ProbeResult {
    ProbeStatus status = ProbeStatus::NoViolation;
    std::optional<Point> witness;  ///< x whose line restriction is not real-rooted
    long trials_run = 0;
};

/// Checks spec(v) > 0, then for `trials` random rational points x asserts by
/// exact Sturm count that spec(x + t v) is real-rooted in t. Deterministic in
/// seed; the reported witness is the lowest-index failure.
ProbeResult hyperbolicity_probe(const HomogeneousSpec& spec, const Point& v, long trials,
                                std::uint64_t seed);

/// s_{n,p}(x, lambda) = sum_k sigma_k(x) sigma_{p-k}(lambda) / C(n,k), exact.
Scalar s_np_eval(const Point& x, const Point& lambda);

/// pi_p by the closed double sum: coefficient of (2X)^l is
/// sum_i (p-i)!(l+i)!/(p! l!) sigma_{p-l-i}(mu) sigma_i(lambda).
UniPoly pi_p_closed(const Point& mu, const Point& lambda);

/// pi_p as (1/p!) sum_k P^(k) Q^(p-k) with P = prod(X+mu_i), Q = prod(X+lambda_i).
UniPoly pi_p_direct(const Point& mu, const Point& lambda);

/// Coefficient vector with a_k = a_p sigma_{p-k}(lambda): f_a is then the
/// restriction a_p sigma_p(lambda, .), hence 1/p-concave on Gamma_n.
/// With check=true the merge identity is verified at random points.
CoeffVec pascinde_lift(const Point& lambda, int p, const Scalar& a_p, bool check = false);

struct TrialParams {
    int p = 2;
    int n = 3;
    long trials = 1000;
    std::uint64_t seed = 1;
    long root_range = 10;  ///< coefficients/roots drawn from [-R, R]
    long den_cap = 100;
    int scan_samples = 500;
    unsigned jobs = 0;
    double tol = 1e-9;
};

struct Counterexample {
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string failed_check;
    std::vector<std::pair<std::string, std::string>> exact_values;
};

struct TrialReport {
    int conjecture = 0;
    int p = 0;
    int n = 0;
    long trials = 0;
    std::uint64_t seed = 0;
    long root_range = 10;
    std::vector<Counterexample> counterexamples;
    long suspected = 0;  ///< float-level flags that failed exact confirmation
    long accepted = 0;   ///< draws accepted into the tested set (rejection ids)
    long elapsed_ms = 0; ///< 0 unless timing was requested
};

/// Randomized falsification run for one of the five conjectures:
///  1: a >= 0 accepted iff bar f^(1/p) concave on the axis (exact); scan for
///     a Gamma_n concavity violation. Rejected draws get an exact diagonal
///     witness, so "concave by scan but not in X" cannot silently pass.
///  2: lambda >= 0 lifted through the binomial relation (bar f real-rooted by
///     construction); scan expecting no violation.
///  3: random non-negative P; a (P2 and not P1) hit is a reported discovery.
///  4: exact real-rootedness of sum P^(k) Q^(p-k) for root-drawn P, Q.
///  5: hull membership of the roots of the convolution, exact hull edges,
///     residual-certified refined roots.
/// Counterexamples carry exact inputs; float-level flags that fail exact
/// confirmation count as `suspected`, never as counterexamples.
TrialReport conjecture_trial(int id, const TrialParams& params);

struct IdentitySuiteResult {
    std::string name;
    long instances = 0;
    long failures = 0;
};

/// The exact identity suites: sigma merge, shift-expansion two-route
/// equality, the gradient sum identity, and pi_p closed == direct.
std::vector<IdentitySuiteResult> run_identity_suites(int max_p, int max_n, int instances_per,
                                                     std::uint64_t seed);

Json to_json(const TrialReport& r);
Json to_json(const ProbeResult& r);

}  // namespace esym
