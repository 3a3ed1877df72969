#pragma once

#include <optional>
#include <vector>

#include "esym/unipoly.hpp"

namespace esym {

/// Interval endpoint: finite rational or +-infinity. Root counts use the
/// half-open convention (lo, hi], so counts over adjacent intervals add.
struct Bound {
    enum class Kind { NegInf, Finite, PosInf };
    Kind kind = Kind::Finite;
    Scalar value{};

    static Bound neg_inf() { return {Kind::NegInf, Scalar(0)}; }
    static Bound pos_inf() { return {Kind::PosInf, Scalar(0)}; }
    static Bound at(Scalar v) { return {Kind::Finite, std::move(v)}; }
};

/// Sturm chain of a squarefree polynomial: P, P', then negated remainders,
/// each rescaled to a primitive integer polynomial (positive factor, so the
/// sign data the chain exists for is untouched).
class SturmChain {
public:
    /// P must be squarefree; use UniPoly::squarefree_part() first.
    static SturmChain build(const UniPoly& squarefree);

    const std::vector<UniPoly>& chain() const { return chain_; }

    int variations_at(const Bound& b) const;

    /// Distinct roots in (lo, hi].
    int count(const Bound& lo, const Bound& hi) const;

private:
    std::vector<UniPoly> chain_;
};

/// Distinct real roots of P in (lo, hi], computed on the exactly gcd-reduced
/// squarefree part. Throws std::domain_error("undefined root count") on the
/// zero polynomial.
int sturm_real_root_count(const UniPoly& p, const Bound& lo = Bound::neg_inf(),
                          const Bound& hi = Bound::pos_inf());

/// True iff the squarefree part of P has as many distinct real roots as its
/// degree, i.e. every complex root of P is real.
bool is_real_rooted(const UniPoly& p);

/// A rational t > 0 with r(t) > 0, when one exists; nullopt iff r <= 0 on the
/// whole open positive axis. Exact: Sturm isolation of the positive roots,
/// then sign sampling strictly between consecutive roots and at both ends.
std::optional<Scalar> positive_sample_on_axis(const UniPoly& r);

}  // namespace esym
