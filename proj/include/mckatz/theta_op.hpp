#ifndef MCKATZ_THETA_OP_HPP
#define MCKATZ_THETA_OP_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mckatz/polynomial.hpp"
#include "mckatz/rational.hpp"

namespace mckatz {

using RPoly = Poly<Rational>;

// Differential operator sum_i x^i p_i(theta) with theta = x d/dx.  The keys
// are the x powers and may be negative; zero polynomials are never stored.
struct ThetaOperator {
    std::map<int, RPoly> terms;

    bool is_zero() const { return terms.empty(); }
    int min_power() const;
    int max_power() const;
    int order() const; // largest theta degree over all terms
};

ThetaOperator make_term(int xpow, RPoly p);
void add_term(ThetaOperator& l, int xpow, const RPoly& p);

ThetaOperator op_add(const ThetaOperator& a, const ThetaOperator& b);
ThetaOperator op_sub(const ThetaOperator& a, const ThetaOperator& b);
ThetaOperator op_mul(const ThetaOperator& a, const ThetaOperator& b);
ThetaOperator scalar_mul(const Rational& s, const ThetaOperator& a);
bool op_equal(const ThetaOperator& a, const ThetaOperator& b);

// Formal adjoint: x^k p(theta) -> x^k p(-theta - k - 1).
ThetaOperator adjoint(const ThetaOperator& l);

// Whether some power normalization x^s L (s in {0, -1}) satisfies
// adjoint(x^s L) = sign * x^s L.
struct SelfAdjointness {
    bool self_adjoint = false;
    int power_shift = 0;
    int sign = 0;
};
SelfAdjointness formal_self_adjointness(const ThetaOperator& l);

// Conjugation by x^a: p_i(theta) -> p_i(theta - a).
ThetaOperator shift_theta(const ThetaOperator& l, const Rational& a);

// Convolution with parameter a on operators with nonnegative powers
// x^0..x^m: the term x^i P_i(theta) contributes
//   y^i prod_{j<i}(theta + i - a - j) * prod_{k<m-i}(theta - k) * P_i(theta - a).
ThetaOperator convolution_ca(const ThetaOperator& l, const Rational& a);

// Removes the left factor q(theta): the quotient term at x^i is
// p_i / q(theta + i), exactly or not_divisible.
ThetaOperator divide_left_theta(const ThetaOperator& l, const RPoly& q);

// Integer coefficients with overall content 1 and positive sign of the
// highest theta coefficient of the highest x power.
ThetaOperator content_normalize(const ThetaOperator& l);
bool op_equal_normalized(const ThetaOperator& a, const ThetaOperator& b);

// Rational roots with multiplicities; leftover holds the rootless factor.
struct RootList {
    std::vector<std::pair<Rational, int>> roots;
    RPoly leftover;
};
RootList rational_roots(const RPoly& p);

struct SchemePoint {
    std::string point; // "0", "inf", or a rational value
    std::vector<Rational> exponents;
};
using RiemannScheme = std::vector<SchemePoint>;

// Local exponents at 0 (lowest theta polynomial), at infinity (highest one
// with theta negated) and at the rational roots of the leading d/dx
// coefficient.  Throws non_rational_exponent when an indicial polynomial
// at a reported point has irrational roots.
RiemannScheme riemann_scheme(const ThetaOperator& l);

std::string format_rpoly(const RPoly& p, const std::string& var);
std::string format_theta_operator(const ThetaOperator& l);
std::string format_scheme(const RiemannScheme& s);

} // namespace mckatz

#endif
