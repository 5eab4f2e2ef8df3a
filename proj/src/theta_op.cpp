#include "mckatz/theta_op.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "mckatz/errors.hpp"

namespace mckatz {

int ThetaOperator::min_power() const {
    if (terms.empty()) throw precondition_error("power range of the zero operator");
    return terms.begin()->first;
}

int ThetaOperator::max_power() const {
    if (terms.empty()) throw precondition_error("power range of the zero operator");
    return terms.rbegin()->first;
}

int ThetaOperator::order() const {
    long d = -1;
    for (const auto& [i, p] : terms) d = std::max(d, p.degree());
    return static_cast<int>(d);
}

ThetaOperator make_term(int xpow, RPoly p) {
    ThetaOperator l;
    add_term(l, xpow, p);
    return l;
}

void add_term(ThetaOperator& l, int xpow, const RPoly& p) {
    if (p.is_zero()) return;
    auto it = l.terms.find(xpow);
    if (it == l.terms.end()) {
        l.terms.emplace(xpow, p);
    } else {
        it->second = it->second + p;
        if (it->second.is_zero()) l.terms.erase(it);
    }
}

ThetaOperator op_add(const ThetaOperator& a, const ThetaOperator& b) {
    ThetaOperator out = a;
    for (const auto& [i, p] : b.terms) add_term(out, i, p);
    return out;
}

ThetaOperator op_sub(const ThetaOperator& a, const ThetaOperator& b) {
    ThetaOperator out = a;
    for (const auto& [i, p] : b.terms) add_term(out, i, -p);
    return out;
}

ThetaOperator op_mul(const ThetaOperator& a, const ThetaOperator& b) {
    // x^i p(theta) x^j q(theta) = x^{i+j} p(theta + j) q(theta)
    ThetaOperator out;
    for (const auto& [i, p] : a.terms)
        for (const auto& [j, q] : b.terms)
            add_term(out, i + j, compose_linear(p, Rational(1), Rational(j)) * q);
    return out;
}

ThetaOperator scalar_mul(const Rational& s, const ThetaOperator& a) {
    ThetaOperator out;
    for (const auto& [i, p] : a.terms) add_term(out, i, s * p);
    return out;
}

bool op_equal(const ThetaOperator& a, const ThetaOperator& b) {
    return a.terms == b.terms;
}

ThetaOperator adjoint(const ThetaOperator& l) {
    ThetaOperator out;
    for (const auto& [k, p] : l.terms)
        add_term(out, k, compose_linear(p, Rational(-1), Rational(-(k + 1))));
    return out;
}

SelfAdjointness formal_self_adjointness(const ThetaOperator& l) {
    SelfAdjointness res;
    if (l.is_zero()) return res;
    for (int s : {0, -1}) {
        ThetaOperator shifted;
        for (const auto& [i, p] : l.terms) shifted.terms.emplace(i + s, p);
        ThetaOperator adj = adjoint(shifted);
        for (int sign : {1, -1}) {
            ThetaOperator cmp = (sign == 1) ? shifted : scalar_mul(Rational(-1), shifted);
            if (op_equal(adj, cmp)) {
                res.self_adjoint = true;
                res.power_shift = s;
                res.sign = sign;
                return res;
            }
        }
    }
    return res;
}

ThetaOperator shift_theta(const ThetaOperator& l, const Rational& a) {
    ThetaOperator out;
    for (const auto& [i, p] : l.terms) add_term(out, i, compose_linear(p, Rational(1), Rational(-a)));
    return out;
}

ThetaOperator convolution_ca(const ThetaOperator& l, const Rational& a_raw) {
    if (l.is_zero()) throw precondition_error("convolution of the zero operator");
    // The parameter is a root-of-unity exponent: only its class mod 1 matters,
    // and the formula below wants the representative in (0,1).
    Rational a = frac_mod1(a_raw);
    if (a == 0)
        throw unsupported_parameter("operator convolution needs a non-integral parameter");
    if (l.min_power() < 0)
        throw precondition_error("operator convolution needs nonnegative powers");
    int m = l.max_power();
    ThetaOperator out;
    for (const auto& [i, p] : l.terms) {
        RPoly factor = RPoly::constant(Rational(1));
        for (int j = 0; j < i; ++j)
            factor = factor * RPoly(std::vector<Rational>{Rational(i - j) - a, Rational(1)});
        for (int k = 0; k < m - i; ++k)
            factor = factor * RPoly(std::vector<Rational>{Rational(-k), Rational(1)});
        add_term(out, i, factor * compose_linear(p, Rational(1), Rational(-a)));
    }
    return out;
}

ThetaOperator divide_left_theta(const ThetaOperator& l, const RPoly& q) {
    if (q.is_zero()) throw division_by_zero();
    ThetaOperator out;
    for (const auto& [i, p] : l.terms) {
        RPoly qi = compose_linear(q, Rational(1), Rational(i));
        auto [quo, rem] = divmod(p, qi);
        if (!rem.is_zero())
            throw not_divisible("left factor does not divide the term at x^" + std::to_string(i));
        add_term(out, i, quo);
    }
    return out;
}

ThetaOperator content_normalize(const ThetaOperator& l) {
    if (l.is_zero()) return l;
    Integer den_lcm(1), num_gcd(0);
    for (const auto& [i, p] : l.terms)
        for (const auto& c : p.c) {
            den_lcm = lcm(den_lcm, Integer(c.get_den()));
            num_gcd = gcd(num_gcd, Integer(c.get_num()));
        }
    Rational scale(den_lcm, num_gcd == 0 ? Integer(1) : num_gcd);
    scale.canonicalize();
    ThetaOperator out = scalar_mul(scale, l);
    if (out.terms.rbegin()->second.leading() < 0) out = scalar_mul(Rational(-1), out);
    return out;
}

bool op_equal_normalized(const ThetaOperator& a, const ThetaOperator& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() == b.is_zero();
    return op_equal(content_normalize(a), content_normalize(b));
}

namespace {

void factor_into(Integer n, std::map<Integer, int>& out);

Integer pollard_rho(const Integer& n) {
    if (n % 2 == 0) return Integer(2);
    for (long c = 1;; ++c) {
        Integer x(2), y(2), d(1);
        auto step = [&](const Integer& v) { return (v * v + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = gcd(abs(x - y), n);
        }
        if (d != n) return d;
    }
}

void factor_into(Integer n, std::map<Integer, int>& out) {
    for (Integer p(2); p * p <= n && p < 100000; ++p)
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        ++out[n];
        return;
    }
    Integer d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::vector<Integer> divisors_of(const Integer& n) {
    std::map<Integer, int> f;
    if (n > 1) factor_into(n, f);
    std::vector<Integer> divs{Integer(1)};
    for (const auto& [p, e] : f) {
        size_t base = divs.size();
        Integer pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
        if (divs.size() > 200000) throw calc_error("too many divisor candidates for root search");
    }
    return divs;
}

} // namespace

RootList rational_roots(const RPoly& p) {
    if (p.is_zero()) throw precondition_error("roots of the zero polynomial");
    RootList out;
    RPoly q = p;
    int zero_mult = 0;
    while (q.coeff(0) == 0 && q.degree() > 0) {
        q.c.erase(q.c.begin());
        ++zero_mult;
    }
    if (zero_mult > 0) out.roots.push_back({Rational(0), zero_mult});
    if (q.degree() >= 1) {
        Integer den_lcm(1);
        for (const auto& c : q.c) den_lcm = lcm(den_lcm, Integer(c.get_den()));
        std::vector<Integer> ic;
        for (const auto& c : q.c) ic.push_back(Integer(c.get_num()) * (den_lcm / Integer(c.get_den())));
        Integer content(0);
        for (const auto& v : ic) content = gcd(content, v);
        for (auto& v : ic) v /= content;

        std::set<Rational> cands;
        for (const auto& a : divisors_of(abs(ic.front())))
            for (const auto& b : divisors_of(abs(ic.back()))) {
                Rational r(a, b);
                r.canonicalize();
                cands.insert(r);
                cands.insert(-r);
            }
        for (const auto& r : cands) {
            if (q(r) != 0) continue;
            RPoly lin(std::vector<Rational>{-r, Rational(1)});
            int mult = 0;
            for (;;) {
                auto [quo, rem] = divmod(q, lin);
                if (!rem.is_zero()) break;
                q = quo;
                ++mult;
            }
            if (mult > 0) out.roots.push_back({r, mult});
        }
        std::sort(out.roots.begin(), out.roots.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
    }
    out.leftover = q;
    return out;
}

namespace {

std::vector<Rational> full_rational_roots(const RPoly& p, const std::string& where) {
    RootList rl = rational_roots(p);
    if (rl.leftover.degree() > 0)
        throw non_rational_exponent("indicial polynomial at " + where +
                                    " has irrational roots: leftover " +
                                    format_rpoly(rl.leftover, "t"));
    std::vector<Rational> out;
    for (const auto& [r, m] : rl.roots)
        for (int k = 0; k < m; ++k) out.push_back(r);
    // Scheme columns are reported largest exponent first.
    std::sort(out.begin(), out.end(), std::greater<Rational>());
    return out;
}

} // namespace

RiemannScheme riemann_scheme(const ThetaOperator& l) {
    if (l.is_zero()) throw precondition_error("scheme of the zero operator");
    // Left-multiplying by a power of x changes nothing about the solutions.
    ThetaOperator op;
    int shift = -l.min_power();
    for (const auto& [i, p] : l.terms) op.terms.emplace(i + shift, p);
    int n = op.order();
    int m = op.max_power();

    RiemannScheme scheme;
    scheme.push_back({"0", full_rational_roots(op.terms.begin()->second, "0")});

    // theta^j = sum_k S(j,k) x^k d^k with Stirling numbers of the second
    // kind; collecting x powers gives the d/dx coefficients a_k(x).
    std::vector<std::vector<Integer>> stirling(n + 1, std::vector<Integer>(n + 1, Integer(0)));
    stirling[0][0] = 1;
    for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= j; ++k)
            stirling[j][k] = Integer(k) * stirling[j - 1][k] + stirling[j - 1][k - 1];

    std::vector<RPoly> ak(n + 1);
    for (int k = 0; k <= n; ++k) {
        std::vector<Rational> coeffs(m + k + 1, Rational(0));
        for (const auto& [i, p] : op.terms) {
            Rational v(0);
            for (long j = k; j <= p.degree(); ++j)
                v += Rational(stirling[j][k]) * p.coeff(j);
            coeffs[i + k] += v;
        }
        ak[k] = RPoly(std::move(coeffs));
    }

    std::vector<Rational> sing;
    for (const auto& [r, mult] : rational_roots(ak[n]).roots)
        if (r != 0) sing.push_back(r);
    std::sort(sing.begin(), sing.end());

    for (const auto& c : sing) {
        std::vector<RPoly> shifted(n + 1);
        for (int k = 0; k <= n; ++k) shifted[k] = compose_linear(ak[k], Rational(1), c);
        long nu = 0;
        bool have = false;
        for (int k = 0; k <= n; ++k) {
            if (shifted[k].is_zero()) continue;
            long ord = 0;
            while (shifted[k].coeff(ord) == 0) ++ord;
            if (!have || ord - k < nu) nu = ord - k;
            have = true;
        }
        RPoly indicial;
        for (int k = 0; k <= n; ++k) {
            if (k + nu < 0) continue;
            Rational beta = shifted[k].coeff(k + nu);
            if (beta == 0) continue;
            RPoly fall = RPoly::constant(Rational(1));
            for (int t = 0; t < k; ++t)
                fall = fall * RPoly(std::vector<Rational>{Rational(-t), Rational(1)});
            indicial = indicial + beta * fall;
        }
        scheme.push_back({format_rational(c), full_rational_roots(indicial, format_rational(c))});
    }

    scheme.push_back(
        {"inf", full_rational_roots(compose_linear(op.terms.rbegin()->second, Rational(-1), Rational(0)),
                                    "inf")});
    return scheme;
}

std::string format_rpoly(const RPoly& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = p.degree(); i >= 0; --i) {
        Rational c = p.coeff(i);
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (a != 1 || i == 0) os << format_rational(a) << (i > 0 ? "*" : "");
        if (i > 0) os << var;
        if (i > 1) os << "^" << i;
        first = false;
    }
    return os.str();
}

std::string format_theta_operator(const ThetaOperator& l) {
    if (l.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, p] : l.terms) {
        if (!first) os << " + ";
        if (i != 0) {
            os << "x";
            if (i != 1) os << "^" << i;
            os << "*";
        }
        os << "(" << format_rpoly(p, "t") << ")";
        first = false;
    }
    return os.str();
}

std::string format_scheme(const RiemannScheme& s) {
    std::ostringstream os;
    for (size_t i = 0; i < s.size(); ++i) {
        if (i) os << "\n";
        os << s[i].point << ":";
        for (const auto& e : s[i].exponents) os << " " << format_rational(e);
    }
    return os.str();
}

} // namespace mckatz
