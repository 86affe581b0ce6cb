#ifndef D0Q_FAMILIES_HPP
#define D0Q_FAMILIES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "d0q/curve.hpp"

namespace d0q {

// Parameter value outside the family's admissible domain (singular curve or
// wrong torsion order).
class InadmissibleParameter : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

struct FamilyInstance {
    int N;
    Rational t;
    CurveModel curve;
    CurvePoint point; // marked point of exact order N
};

inline const std::vector<int>& family_levels() {
    static const std::vector<int> levels{3, 4, 5, 6, 7, 8, 9, 10, 12};
    return levels;
}

// Kubert's parameter name for each level, as used in the verification table.
inline const char* family_param_name(int N) {
    switch (N) {
        case 3: return "a1";
        case 4: return "b";
        case 5: return "c";
        case 6: return "c";
        case 7: return "d";
        case 8: return "d";
        case 9: return "f";
        case 10: return "f";
        case 12: return "tau";
        default: return "t";
    }
}

namespace detail {

// Tate normal form E(b,c): y^2 + (1-c) xy - b y = x^3 - b x^2, marked (0,0).
inline CurveModel tate_normal(const Rational& b, const Rational& c) {
    return CurveModel{1 - c, -b, -b, Rational(0), Rational(0)};
}

inline CurveModel raw_family_curve(int N, const Rational& t) {
    switch (N) {
        case 3:
            // y^2 + t xy + t y = x^3 (a1 = a3 = t)
            return CurveModel{t, Rational(0), t, Rational(0), Rational(0)};
        case 4:
            return tate_normal(t, Rational(0));
        case 5:
            return tate_normal(t, t);
        case 6:
            return tate_normal(t * t + t, t);
        case 7:
            return tate_normal(t * t * (t - 1), t * (t - 1));
        case 8: {
            Rational b = (2 * t - 1) * (t - 1);
            if (t == 0) throw InadmissibleParameter("N=8: parameter d = 0 is excluded");
            return tate_normal(b, b / t);
        }
        case 9: {
            Rational c = t * t * (t - 1);
            return tate_normal(c * (t * t - t + 1), c);
        }
        case 10: {
            Rational den = t * t - 3 * t + 1;
            if (den == 0) throw InadmissibleParameter("N=10: f^2 - 3f + 1 = 0 is excluded");
            Rational c = -t * (t - 1) * (2 * t - 1) / den;
            Rational b = t * t * t * (t - 1) * (2 * t - 1) / (den * den);
            return tate_normal(b, c);
        }
        case 12: {
            if (t == 1) throw InadmissibleParameter("N=12: tau = 1 is excluded");
            Rational c = -t * (2 * t - 1) * (3 * t * t - 3 * t + 1) / ((t - 1) * (t - 1) * (t - 1));
            Rational b = c * (2 * t * t - 2 * t + 1) / (1 - t);
            return tate_normal(b, c);
        }
        default:
            throw std::invalid_argument("family_curve: N must be one of 3..10, 12");
    }
}

} // namespace detail

// Curve and marked point of exact order N for admissible parameter t.
// Admissibility is checked, not assumed: Delta != 0 and the exact group-law
// order of (0,0) must be N.
inline FamilyInstance family_curve(int N, const Rational& t) {
    CurveModel e = detail::raw_family_curve(N, t);
    if (invariants(e).disc == 0)
        throw InadmissibleParameter("family_curve: discriminant vanishes at t = " + to_string(t));
    CurvePoint p = CurvePoint::affine(Rational(0), Rational(0));
    auto ord = point_order(e, p, 2L * N);
    if (!ord || *ord != N)
        throw InadmissibleParameter("family_curve: (0,0) has order " +
                                    (ord ? std::to_string(*ord) : std::string("> 2N")) +
                                    " instead of " + std::to_string(N) + " at t = " + to_string(t));
    return FamilyInstance{N, t, e, p};
}

// Rationals enumerated by increasing height, positives before negatives.
inline std::vector<Rational> rationals_by_height(long max_height) {
    std::vector<Rational> out;
    for (long h = 1; h <= max_height; ++h) {
        std::vector<Rational> layer;
        for (long q = 1; q <= h; ++q) {
            if (gcd(Integer(h), Integer(q)) != 1) continue;
            layer.emplace_back(Integer(h), Integer(q));
            if (q != h) layer.emplace_back(Integer(q), Integer(h));
        }
        for (const auto& r : layer) out.push_back(r);
        for (const auto& r : layer) out.push_back(-r);
    }
    return out;
}

// First `count` admissible parameters for the level-N family, by height.
inline std::vector<Rational> admissible_samples(int N, int count) {
    if (count < 1) throw std::invalid_argument("admissible_samples: count must be >= 1");
    std::vector<Rational> out;
    long max_h = 4;
    while (static_cast<int>(out.size()) < count && max_h < (1L << 20)) {
        out.clear();
        for (const auto& t : rationals_by_height(max_h)) {
            try {
                family_curve(N, t);
            } catch (const InadmissibleParameter&) {
                continue;
            }
            out.push_back(t);
            if (static_cast<int>(out.size()) == count) break;
        }
        max_h *= 2;
    }
    if (static_cast<int>(out.size()) < count)
        throw std::runtime_error("admissible_samples: search exhausted");
    return out;
}

} // namespace d0q

#endif
