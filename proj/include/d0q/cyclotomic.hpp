#ifndef D0Q_CYCLOTOMIC_HPP
#define D0Q_CYCLOTOMIC_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "d0q/complex.hpp"
#include "d0q/rational.hpp"

namespace d0q {

// Dense univariate polynomials over Q, coefficients low to high.
namespace poly {

using Poly = std::vector<Rational>;

inline void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

inline Poly sub(Poly a, const Poly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

// Euclidean division; requires divisor nonzero.
inline std::pair<Poly, Poly> divmod(Poly a, const Poly& b) {
    if (b.empty()) throw std::domain_error("poly::divmod: division by zero polynomial");
    trim(a);
    Poly q;
    while (deg(a) >= deg(b)) {
        int shift = deg(a) - deg(b);
        Rational c = a.back() / b.back();
        if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1, Rational(0));
        q[shift] += c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    return {q, a};
}

// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic (or zero).
inline std::tuple<Poly, Poly, Poly> xgcd(Poly a, Poly b) {
    Poly u0{Rational(1)}, v0, u1, v1{Rational(1)};
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto [q, r] = divmod(a, b);
        a = b;
        b = r;
        Poly u2 = sub(u0, mul(q, u1));
        Poly v2 = sub(v0, mul(q, v1));
        u0 = u1;
        v0 = v1;
        u1 = u2;
        v1 = v2;
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
        for (auto& c : u0) c /= lead;
        for (auto& c : v0) c /= lead;
    }
    return {a, u0, v0};
}

// N-th cyclotomic polynomial via Phi_N = (X^N - 1) / prod_{d|N, d<N} Phi_d.
inline const Poly& cyclotomic(int N) {
    static std::map<int, Poly> cache;
    auto it = cache.find(N);
    if (it != cache.end()) return it->second;
    Poly xn1(N + 1, Rational(0));
    xn1[0] = -1;
    xn1[N] = 1;
    Poly acc{Rational(1)};
    for (int d = 1; d < N; ++d)
        if (N % d == 0) acc = mul(acc, cyclotomic(d));
    auto [q, r] = divmod(xn1, acc);
    if (!r.empty()) throw std::logic_error("cyclotomic: nonzero remainder");
    return cache.emplace(N, q).first->second;
}

} // namespace poly

// Exact element of Q(zeta_N), stored as a length-N coefficient vector modulo
// X^N - 1 (cheap multiplication); canonical form modulo Phi_N on demand.
class CycloElem {
public:
    explicit CycloElem(int N) : N_(N), c_(N, Rational(0)) {
        if (N < 1) throw std::invalid_argument("CycloElem: N must be positive");
    }
    CycloElem(int N, const Rational& constant) : CycloElem(N) { c_[0] = constant; }

    static CycloElem zeta_pow(int N, long k) {
        CycloElem e(N);
        e.c_[static_cast<size_t>(((k % N) + N) % N)] = 1;
        return e;
    }

    int conductor() const { return N_; }
    const Rational& operator[](size_t i) const { return c_[i]; }
    Rational& operator[](size_t i) { return c_[i]; }

    friend CycloElem operator+(const CycloElem& a, const CycloElem& b) {
        a.check(b);
        CycloElem r(a.N_);
        for (int i = 0; i < a.N_; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend CycloElem operator-(const CycloElem& a, const CycloElem& b) {
        a.check(b);
        CycloElem r(a.N_);
        for (int i = 0; i < a.N_; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    friend CycloElem operator-(const CycloElem& a) {
        CycloElem r(a.N_);
        for (int i = 0; i < a.N_; ++i) r.c_[i] = -a.c_[i];
        return r;
    }
    friend CycloElem operator*(const CycloElem& a, const CycloElem& b) {
        a.check(b);
        CycloElem r(a.N_);
        for (int i = 0; i < a.N_; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; j < a.N_; ++j) {
                if (b.c_[j] == 0) continue;
                r.c_[(i + j) % a.N_] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }
    friend CycloElem operator*(const Rational& s, const CycloElem& a) {
        CycloElem r(a.N_);
        for (int i = 0; i < a.N_; ++i) r.c_[i] = s * a.c_[i];
        return r;
    }
    CycloElem& operator+=(const CycloElem& o) { return *this = *this + o; }
    CycloElem& operator-=(const CycloElem& o) { return *this = *this - o; }

    // Canonical representative modulo Phi_N (degree < phi(N)).
    CycloElem reduced() const {
        poly::Poly p(c_.begin(), c_.end());
        poly::trim(p);
        auto [q, r] = poly::divmod(p, poly::cyclotomic(N_));
        CycloElem out(N_);
        for (size_t i = 0; i < r.size(); ++i) out.c_[i] = r[i];
        return out;
    }

    bool is_zero() const {
        CycloElem r = reduced();
        for (const auto& c : r.c_)
            if (c != 0) return false;
        return true;
    }

    friend bool operator==(const CycloElem& a, const CycloElem& b) {
        a.check(b);
        return (a - b).is_zero();
    }

    // Multiplicative inverse in Q(zeta_N); throws on zero.
    CycloElem inverse() const {
        CycloElem red = reduced();
        poly::Poly p(red.c_.begin(), red.c_.end());
        poly::trim(p);
        if (p.empty()) throw std::domain_error("CycloElem::inverse: zero element");
        auto [g, u, v] = poly::xgcd(p, poly::cyclotomic(N_));
        if (poly::deg(g) != 0) throw std::logic_error("CycloElem::inverse: gcd not constant");
        CycloElem out(N_);
        for (size_t i = 0; i < u.size() && i < static_cast<size_t>(N_); ++i) out.c_[i] = u[i] / g[0];
        // xgcd may return u with degree >= N only if input was not reduced; it is.
        return out;
    }

    friend CycloElem operator/(const CycloElem& a, const CycloElem& b) { return a * b.inverse(); }

    // Numeric embedding zeta_N = exp(2 pi i / N).
    Complex embed(mpfr_prec_t prec) const {
        Complex acc(prec);
        Real two_pi_over_n = 2L * Real::pi(prec) / static_cast<long>(N_);
        for (int i = 0; i < N_; ++i) {
            if (c_[i] == 0) continue;
            Real coeff(c_[i], prec);
            Real ang = Real(static_cast<long>(i), prec) * two_pi_over_n;
            acc += Complex(coeff * cos(ang), coeff * sin(ang));
        }
        return acc;
    }

    // True if every canonical coefficient is rational with zero zeta-part
    // beyond degree 0.
    bool is_rational(Rational* value = nullptr) const {
        CycloElem r = reduced();
        for (int i = 1; i < N_; ++i)
            if (r.c_[i] != 0) return false;
        if (value) *value = r.c_[0];
        return true;
    }

    std::string str() const {
        CycloElem r = reduced();
        std::string out;
        for (int i = 0; i < N_; ++i) {
            if (r.c_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += to_string(r.c_[i]);
            if (i >= 1) out += "*z" + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return out.empty() ? "0" : out;
    }

private:
    void check(const CycloElem& o) const {
        if (N_ != o.N_) throw std::invalid_argument("CycloElem: conductor mismatch");
    }
    int N_;
    std::vector<Rational> c_;
};

} // namespace d0q

#endif
