#include "esym/scalar.hpp"

#include <cmath>
#include <stdexcept>

namespace esym {

Scalar scalar_of(long num, long den) {
    if (den == 0) throw std::invalid_argument("scalar with zero denominator");
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

namespace {

[[noreturn]] void bad_token(std::string_view text) {
    throw std::invalid_argument("invalid scalar token: '" + std::string(text) + "'");
}

bool parse_int(std::string_view s, Int& out) {
    if (s.empty()) return false;
    size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') return false;
    out = Int(std::string(s), 10);
    return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    // trim surrounding whitespace
    size_t b = text.find_first_not_of(" \t");
    size_t e = text.find_last_not_of(" \t");
    if (b == std::string_view::npos) bad_token(text);
    std::string_view s = text.substr(b, e - b + 1);

    size_t slash = s.find('/');
    Int num, den(1);
    if (slash == std::string_view::npos) {
        if (!parse_int(s, num)) bad_token(text);
    } else {
        if (!parse_int(s.substr(0, slash), num)) bad_token(text);
        if (!parse_int(s.substr(slash + 1), den)) bad_token(text);
        if (sign(den) == 0) bad_token(text);
    }
    Scalar q(num, den);
    q.canonicalize();
    return q;
}

std::vector<Scalar> parse_scalar_list(std::string_view text) {
    std::vector<Scalar> out;
    size_t pos = 0;
    while (true) {
        size_t comma = text.find(',', pos);
        std::string_view tok = (comma == std::string_view::npos)
                                   ? text.substr(pos)
                                   : text.substr(pos, comma - pos);
        out.push_back(parse_scalar(tok));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string to_string(const Scalar& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar rationalize(double x, unsigned long den_cap) {
    if (!std::isfinite(x)) throw std::invalid_argument("rationalize: non-finite input");
    bool neg = x < 0;
    double v = neg ? -x : x;

    // continued-fraction convergents p/q with p_n = a_n p_{n-1} + p_{n-2}
    Int p_prev(1), p_prev2(0), q_prev(0), q_prev2(1);
    double frac = v;
    for (int iter = 0; iter < 64; ++iter) {
        double fl = std::floor(frac);
        Int a;
        mpz_set_d(a.get_mpz_t(), fl);  // exact for any finite double
        Int p_next = a * p_prev + p_prev2;
        Int q_next = a * q_prev + q_prev2;
        if (q_next > Int(den_cap)) break;
        p_prev2 = p_prev; p_prev = p_next;
        q_prev2 = q_prev; q_prev = q_next;
        double rem = frac - fl;
        if (rem < 1e-15 * std::max(1.0, frac)) break;
        frac = 1.0 / rem;
    }
    if (sign(q_prev) == 0) { p_prev = 0; q_prev = 1; }
    Scalar q(neg ? Int(-p_prev) : p_prev, q_prev);
    q.canonicalize();
    return q;
}

Int binomial(unsigned long n, unsigned long k) {
    if (k > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace esym
