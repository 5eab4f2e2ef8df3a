#ifndef MCKATZ_POLYNOMIAL_HPP
#define MCKATZ_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "mckatz/errors.hpp"

namespace mckatz {

// Dense univariate polynomial over an exact field K.  Coefficients are
// stored low degree first and kept trimmed, so the zero polynomial has an
// empty coefficient vector and degree() == -1.
template <class K>
struct Poly {
    std::vector<K> c;

    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c(std::move(coeffs)) { trim(); }
    static Poly constant(K v) { return Poly(std::vector<K>{std::move(v)}); }

    long degree() const { return static_cast<long>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }

    void trim() {
        while (!c.empty() && c.back() == K(0)) c.pop_back();
    }

    K coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c.size())) return K(0);
        return c[i];
    }

    K leading() const {
        if (c.empty()) throw precondition_error("leading coefficient of the zero polynomial");
        return c.back();
    }

    K operator()(const K& x) const {
        K acc(0);
        for (long i = degree(); i >= 0; --i) acc = acc * x + c[i];
        return acc;
    }

    bool operator==(const Poly& o) const {
        if (c.size() != o.c.size()) return false;
        for (size_t i = 0; i < c.size(); ++i)
            if (!(c[i] == o.c[i])) return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }
};

template <class K>
Poly<K> operator+(const Poly<K>& a, const Poly<K>& b) {
    std::vector<K> out(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) out[i] = out[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) out[i] = out[i] + b.c[i];
    return Poly<K>(std::move(out));
}

template <class K>
Poly<K> operator-(const Poly<K>& a, const Poly<K>& b) {
    std::vector<K> out(std::max(a.c.size(), b.c.size()), K(0));
    for (size_t i = 0; i < a.c.size(); ++i) out[i] = out[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) out[i] = out[i] - b.c[i];
    return Poly<K>(std::move(out));
}

template <class K>
Poly<K> operator-(const Poly<K>& a) {
    std::vector<K> out = a.c;
    for (auto& v : out) v = K(0) - v;
    return Poly<K>(std::move(out));
}

template <class K>
Poly<K> operator*(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<K>();
    std::vector<K> out(a.c.size() + b.c.size() - 1, K(0));
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == K(0)) continue;
        for (size_t j = 0; j < b.c.size(); ++j) out[i + j] = out[i + j] + a.c[i] * b.c[j];
    }
    return Poly<K>(std::move(out));
}

template <class K>
Poly<K> operator*(const K& s, const Poly<K>& a) {
    std::vector<K> out = a.c;
    for (auto& v : out) v = s * v;
    return Poly<K>(std::move(out));
}

// Quotient and remainder over the field K.
template <class K>
std::pair<Poly<K>, Poly<K>> divmod(Poly<K> a, const Poly<K>& b) {
    if (b.is_zero()) throw division_by_zero();
    Poly<K> quo;
    if (a.degree() >= b.degree()) quo.c.assign(a.degree() - b.degree() + 1, K(0));
    while (!a.is_zero() && a.degree() >= b.degree()) {
        K f = a.leading() / b.leading();
        long shift = a.degree() - b.degree();
        quo.c[shift] = f;
        for (long j = 0; j <= b.degree(); ++j)
            a.c[j + shift] = a.c[j + shift] - f * b.c[j];
        a.trim();
    }
    quo.trim();
    return {quo, a};
}

// Composition with a linear argument: p(s*x + t), by Horner.
template <class K>
Poly<K> compose_linear(const Poly<K>& p, const K& s, const K& t) {
    Poly<K> lin(std::vector<K>{t, s});
    Poly<K> acc;
    for (long i = p.degree(); i >= 0; --i)
        acc = acc * lin + Poly<K>::constant(p.coeff(i));
    return acc;
}

// Product of monic linear factors (x - roots[i]).
template <class K>
Poly<K> poly_from_roots(const std::vector<K>& roots) {
    Poly<K> p = Poly<K>::constant(K(1));
    for (const auto& r : roots) p = p * Poly<K>(std::vector<K>{K(0) - r, K(1)});
    return p;
}

} // namespace mckatz

#endif
