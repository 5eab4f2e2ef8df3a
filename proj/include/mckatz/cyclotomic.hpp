#ifndef MCKATZ_CYCLOTOMIC_HPP
#define MCKATZ_CYCLOTOMIC_HPP

#include <optional>
#include <string>
#include <vector>

#include "mckatz/rational.hpp"

namespace mckatz {

long euler_phi(long n);

// Coefficients of the n-th cyclotomic polynomial, low degree first.
// Monic with integer coefficients; degree euler_phi(n).
const std::vector<Integer>& cyclotomic_polynomial(long n);

// A root of unity e^{2 pi i e} identified by its exponent e in Q/Z.
class RootOfUnity {
public:
    RootOfUnity() : exp_(0) {}
    explicit RootOfUnity(const Rational& exponent) : exp_(frac_mod1(exponent)) {}

    const Rational& exponent() const { return exp_; }
    long order() const { return to_long(Integer(exp_.get_den())); }
    bool is_one() const { return exp_ == 0; }

    RootOfUnity inverse() const { return RootOfUnity(-exp_); }
    RootOfUnity operator*(const RootOfUnity& o) const { return RootOfUnity(exp_ + o.exp_); }
    bool operator==(const RootOfUnity& o) const { return exp_ == o.exp_; }
    bool operator!=(const RootOfUnity& o) const { return exp_ != o.exp_; }
    bool operator<(const RootOfUnity& o) const { return exp_ < o.exp_; }

private:
    Rational exp_;
};

// Element of the cyclotomic field Q(zeta_N), stored as coordinates in the
// power basis 1, zeta, ..., zeta^{phi(N)-1} reduced mod the N-th cyclotomic
// polynomial.  That representation is unique, so equality is coordinate
// equality after lifting both operands to a common conductor.
class CycloScalar {
public:
    CycloScalar() : n_(1), c_(1, Rational(0)) {}
    CycloScalar(long v) : n_(1), c_(1, Rational(v)) {}
    explicit CycloScalar(const Rational& v, long conductor = 1);

    static CycloScalar zero(long conductor);
    static CycloScalar one(long conductor);

    long conductor() const { return n_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    // pre: is_rational()
    Rational rational_value() const;

    friend bool operator==(const CycloScalar& a, const CycloScalar& b);
    friend bool operator!=(const CycloScalar& a, const CycloScalar& b) { return !(a == b); }

private:
    long n_;
    std::vector<Rational> c_;

    friend CycloScalar make_cyclo(long n, std::vector<Rational> coeffs);
};

// Assemble a scalar from raw power-basis coordinates (length phi(n)).
CycloScalar make_cyclo(long n, std::vector<Rational> coeffs);

// zeta_N^k as a scalar; the root's order must divide N.
CycloScalar root_to_scalar(const RootOfUnity& r, long conductor);

CycloScalar operator+(const CycloScalar& a, const CycloScalar& b);
CycloScalar operator-(const CycloScalar& a, const CycloScalar& b);
CycloScalar operator-(const CycloScalar& a);
CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);
CycloScalar operator/(const CycloScalar& a, const CycloScalar& b);
CycloScalar inverse(const CycloScalar& a);

CycloScalar& operator+=(CycloScalar& a, const CycloScalar& b);
CycloScalar& operator-=(CycloScalar& a, const CycloScalar& b);
CycloScalar& operator*=(CycloScalar& a, const CycloScalar& b);

// Galois action zeta -> zeta^k for gcd(k, N) = 1.
CycloScalar galois(const CycloScalar& a, long k);
// Complex conjugation zeta -> zeta^{-1}.
CycloScalar conjugate(const CycloScalar& a);

// Lift into Q(zeta_N) for a multiple N of the current conductor.
CycloScalar lift_to_conductor(const CycloScalar& a, long n);
// Rewrite in Q(zeta_M) if the value lies in that subfield (M | N or N | M).
std::optional<CycloScalar> try_to_conductor(const CycloScalar& a, long m);

// Smallest divisor M of the conductor with a in Q(zeta_M).
long minimal_conductor(const CycloScalar& a);

// Sign of a real scalar: -1, 0, +1.  Decided by interval refinement with
// rational endpoints, so the answer is certified.  Throws not_real_error
// when conjugate(a) != a.
int real_sign(const CycloScalar& a);

// Exponents k with galois(a, k) == a, as a sorted list; the fixed field of
// this subgroup of (Z/N)^* is the subfield generated by a.
std::vector<long> galois_stabilizer(const CycloScalar& a);

std::string format_cyclo(const CycloScalar& a);

} // namespace mckatz

#endif
