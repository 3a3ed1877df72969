#pragma once

#include <utility>
#include <vector>

#include "esym/report.hpp"
#include "esym/sturm.hpp"
#include "esym/unipoly.hpp"

namespace esym {

/// m * P * P'' + (1 - m) * P'^2: integral multiple of P P'' + (1/m - 1) P'^2,
/// the curvature form of P^(1/m) wherever P > 0.
UniPoly concavity_form(const UniPoly& p, int m);

/// concavity_form with m = deg P. Nonpositive on R iff P satisfies (P2).
UniPoly p2_form(const UniPoly& p);

enum class Domain { AllReals, PositiveAxis };

/// Exact decision of "R <= 0 everywhere on the domain": R is identically
/// zero, or its leading sign and the multiplicity parity of its roots inside
/// the domain admit no positive value. Squarefree decomposition + Sturm.
bool nonpositive_on(const UniPoly& r, Domain domain);

/// Signature (s, t) of the Hermite quadratic form built from the Bezoutian
/// L(P,X,Y) = (P(X)P'(Y) - P(Y)P'(X)) / (X - Y). s - t counts distinct real
/// roots of P, s + t distinct complex roots.
std::pair<int, int> hermite_signature(const UniPoly& p);

/// Builds the n x n Bezoutian coefficient matrix of P (row-major, exact).
std::vector<Scalar> hermite_matrix(const UniPoly& p);

/// Totally-positive-sequence probe at finite truncation: decides whether the
/// (n+order) x (n+order) leading submatrix of the lower-triangular Toeplitz
/// matrix of (a_0,...,a_n,0,...) has a negative minor. Requires a_k >= 0 and
/// a_0 != 0. Returns false on a certified negative minor (hence P is not
/// real-rooted); true means no violation found at this truncation.
bool total_positivity_truncated(const std::vector<Scalar>& coeffs, int order);

namespace detail {
/// Literal definition: enumerates every minor of size <= max_size of the
/// (n+order) x (n+order) leading submatrix (max_size <= 0 caps minor size at
/// `order`). Exponential; test oracle for small sizes only. With
/// max_size = n+order it decides exactly what the Neville route does.
bool tp_enumerate_minors(const std::vector<Scalar>& coeffs, int order, int max_size = 0);
}  // namespace detail

/// Plain mode: a_{k-1} a_{k+1} <= a_k^2 over the zero-padded sequence.
/// Weighted mode: the binomially normalized Newton inequality
/// (a_{k-1}/C(n,k-1)) (a_{k+1}/C(n,k+1)) <= (a_k/C(n,k))^2.
bool log_concave(const std::vector<Scalar>& coeffs, bool weighted = false);

/// Strict criterion 4 a_{k-1} a_{k+1} < a_k^2 for 1 <= k <= n-1; sufficient
/// for distinct real roots when all coefficients are positive. Any zero or
/// negative coefficient returns false (hypothesis unmet).
bool kurtz(const std::vector<Scalar>& coeffs);

struct CriterionReport {
    bool p1_exact = false;
    bool p2_holds = false;
    bool p3_holds = false;
    int hermite_real_count = 0;
    int hermite_s = 0;
    int hermite_t = 0;
    bool log_concave = false;
    bool kurtz = false;
    bool totally_positive_truncated = true;
    int tp_truncation_order = 0;  ///< 0 when the TP theorem hypotheses fail
};

/// Runs every criterion and asserts the implication lattice
/// (kurtz => p1, p1 => log-concave for non-negative coefficients,
/// p1 => p2 => p3, hermite count == Sturm count, TP violation => not p1).
/// A lattice violation is an internal-consistency defect and throws
/// std::logic_error carrying the input. tp_order <= 0 selects deg + 2.
CriterionReport battery(const UniPoly& p, int tp_order = 0);

Json to_json(const CriterionReport& r);

}  // namespace esym
