#include "esym/sturm.hpp"

#include <functional>
#include <stdexcept>

namespace esym {

SturmChain SturmChain::build(const UniPoly& squarefree) {
    SturmChain sc;
    if (squarefree.is_zero()) throw std::domain_error("Sturm chain of zero polynomial");
    sc.chain_.push_back(squarefree.primitive());
    if (squarefree.degree() == 0) return sc;
    sc.chain_.push_back(squarefree.derivative().primitive());
    while (sc.chain_.back().degree() > 0) {
        UniPoly r = UniPoly::divrem(sc.chain_[sc.chain_.size() - 2], sc.chain_.back()).second;
        if (r.is_zero()) break;  // only for non-squarefree input
        sc.chain_.push_back((-r).primitive());
    }
    return sc;
}

namespace {

int sign_at(const UniPoly& p, const Bound& b) {
    if (p.is_zero()) return 0;
    switch (b.kind) {
        case Bound::Kind::Finite:
            return sign(p(b.value));
        case Bound::Kind::PosInf:
            return sign(p.lead());
        case Bound::Kind::NegInf:
            return (p.degree() % 2 == 0) ? sign(p.lead()) : -sign(p.lead());
    }
    return 0;
}

}  // namespace

int SturmChain::variations_at(const Bound& b) const {
    int last = 0, var = 0;
    for (const auto& p : chain_) {
        int s = sign_at(p, b);
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

int SturmChain::count(const Bound& lo, const Bound& hi) const {
    return variations_at(lo) - variations_at(hi);
}

int sturm_real_root_count(const UniPoly& p, const Bound& lo, const Bound& hi) {
    if (p.is_zero()) throw std::domain_error("undefined root count");
    UniPoly s = p.squarefree_part();
    if (s.degree() == 0) return 0;
    return SturmChain::build(s).count(lo, hi);
}

bool is_real_rooted(const UniPoly& p) {
    if (p.is_zero()) throw std::domain_error("real-rootedness of zero polynomial");
    UniPoly s = p.squarefree_part();
    if (s.degree() == 0) return true;
    return SturmChain::build(s).count(Bound::neg_inf(), Bound::pos_inf()) == s.degree();
}

std::optional<Scalar> positive_sample_on_axis(const UniPoly& r) {
    if (r.is_zero()) return std::nullopt;

    // cheap dyadic grid first; it resolves almost every practical input
    for (int e = -24; e <= 24; ++e) {
        Scalar t = (e >= 0) ? Scalar(Int(1) << e) : scalar_of(1, 1L << (-e));
        if (sign(r(t)) > 0) return t;
    }

    UniPoly s = r.squarefree_part();
    if (s.degree() == 0) return std::nullopt;  // constant sign already sampled
    SturmChain chain = SturmChain::build(s);

    // Cauchy bound on the roots of s
    Scalar bound(1);
    for (const auto& c : s.coeffs()) {
        Scalar ratio = abs(c / s.lead());
        if (ratio > bound) bound = ratio;
    }
    bound += 1;

    // sign of r beyond every positive root
    if (sign(r.lead()) > 0) return bound + 1;

    int roots_inside = chain.count(Bound::at(Scalar(0)), Bound::at(bound));
    if (roots_inside == 0) {
        // constant sign on (0, inf) up to the leading behavior: both the
        // grid and the bound sample were <= 0
        return std::nullopt;
    }

    // isolate the positive roots
    std::vector<std::pair<Scalar, Scalar>> intervals;
    std::function<void(Scalar, Scalar)> isolate = [&](Scalar lo, Scalar hi) {
        int cnt = chain.count(Bound::at(lo), Bound::at(hi));
        if (cnt == 0) return;
        if (cnt == 1) {
            intervals.emplace_back(std::move(lo), std::move(hi));
            return;
        }
        Scalar mid = (lo + hi) / 2;
        isolate(lo, mid);
        isolate(mid, hi);
    };
    isolate(Scalar(0), bound);

    auto bisect = [&](std::pair<Scalar, Scalar>& iv) {
        Scalar mid = (iv.first + iv.second) / 2;
        if (chain.count(Bound::at(iv.first), Bound::at(mid)) == 1)
            iv.second = mid;
        else
            iv.first = mid;
    };

    // separate consecutive intervals so midpoints fall strictly between roots
    for (size_t i = 0; i + 1 < intervals.size(); ++i)
        while (!(intervals[i].second < intervals[i + 1].first)) {
            bisect(intervals[i]);
            bisect(intervals[i + 1]);
        }
    // make the left end of the first interval positive
    while (!(sign(intervals.front().first) > 0)) bisect(intervals.front());

    std::vector<Scalar> candidates;
    candidates.push_back(intervals.front().first / 2);  // below the smallest root
    for (size_t i = 0; i + 1 < intervals.size(); ++i)
        candidates.push_back((intervals[i].second + intervals[i + 1].first) / 2);
    candidates.push_back(intervals.back().second + bound);  // beyond the largest
    for (auto& t : candidates)
        if (sign(t) > 0 && sign(r(t)) > 0) return t;
    return std::nullopt;
}

}  // namespace esym
