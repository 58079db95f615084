#include "flatsurf/geom.hpp"

#include <numeric>

namespace flatsurf {

static void require_finite(double p) {
    if (!std::isfinite(p)) throw std::invalid_argument("non-finite matrix parameter");
}

Mat2 diag_t(double t) {
    require_finite(t);
    double e = std::exp(t);
    return {e, 0.0, 0.0, 1.0 / e};
}

Mat2 rot_theta(double theta) {
    require_finite(theta);
    double c = std::cos(theta), s = std::sin(theta);
    return {c, s, -s, c};
}

Mat2 upper_u(double s) {
    require_finite(s);
    return {1.0, s, 0.0, 1.0};
}

Mat2 veech_unipotent(int n) {
    if (n < 3) throw std::invalid_argument("veech_unipotent requires n >= 3");
    return {1.0, 0.0, 2.0 / std::tan(M_PI / n), 1.0};
}

Mat2 sl2_element(Sl2Kind kind, double param) {
    switch (kind) {
        case Sl2Kind::DiagT: return diag_t(param);
        case Sl2Kind::RotTheta: return rot_theta(param);
        case Sl2Kind::UpperU: return upper_u(param);
        case Sl2Kind::VeechUnipotent: {
            double r = std::round(param);
            if (std::abs(param - r) > 1e-9) throw std::invalid_argument("veech_unipotent parameter must be an integer");
            return veech_unipotent(static_cast<int>(r));
        }
    }
    throw std::invalid_argument("unknown sl2 kind");
}

AngleFrac::AngleFrac(std::int64_t n, std::int64_t d) : num(n), den(d) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    if (den < 0) { num = -num; den = -den; }
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
}

AngleFrac AngleFrac::operator+(AngleFrac o) const {
    return AngleFrac(num * o.den + o.num * den, den * o.den);
}

AngleFrac AngleFrac::operator-(AngleFrac o) const {
    return AngleFrac(num * o.den - o.num * den, den * o.den);
}

AngleFrac AngleFrac::mod_two_pi() const {
    std::int64_t m = ((num % (2 * den)) + 2 * den) % (2 * den);
    return AngleFrac(m, den);
}

bool AngleFrac::operator<(const AngleFrac& o) const {
    return num * o.den < o.num * den;
}

std::string AngleFrac::str() const {
    return std::to_string(num) + "/" + std::to_string(den) + " pi";
}

}  // namespace flatsurf
