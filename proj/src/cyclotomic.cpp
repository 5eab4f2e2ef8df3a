#include "mckatz/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "mckatz/errors.hpp"

namespace mckatz {

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal");
    std::string num = text, den = "1";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    auto digits_ok = [](const std::string& s, bool sign_ok) {
        if (s.empty()) return false;
        size_t i = (sign_ok && (s[0] == '+' || s[0] == '-')) ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw parse_error("bad rational literal: '" + text + "'");
    Integer n(num), d(den);
    if (d == 0) throw parse_error("zero denominator in rational literal: '" + text + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational frac_mod1(const Rational& q) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    Rational r = q - Rational(fl);
    r.canonicalize();
    return r;
}

long euler_phi(long n) {
    if (n <= 0) throw calc_error("euler_phi of non-positive argument");
    long result = n, m = n;
    for (long p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

// Integer polynomials, low degree first, used only to build the cyclotomic
// polynomials by exact division of x^n - 1.
using ZPoly = std::vector<Integer>;

ZPoly zpoly_divexact(const ZPoly& a, const ZPoly& b) {
    ZPoly rem = a, quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Integer(0));
    long db = static_cast<long>(b.size()) - 1;
    for (long i = static_cast<long>(rem.size()) - 1; i >= db; --i) {
        if (rem[i] == 0) continue;
        // b is monic throughout this file (cyclotomic polynomials are).
        Integer c = rem[i];
        quo[i - db] = c;
        for (long j = 0; j <= db; ++j) rem[i - db + j] -= c * b[j];
    }
    for (const auto& c : rem)
        if (c != 0) throw calc_error("internal: inexact cyclotomic division");
    return quo;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
    static std::map<long, ZPoly> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    if (n <= 0) throw calc_error("cyclotomic polynomial index must be positive");

    ZPoly num(n + 1, Integer(0)); // x^n - 1
    num[0] = -1;
    num[n] = 1;
    for (long d = 1; d < n; ++d)
        if (n % d == 0) num = zpoly_divexact(num, cyclotomic_polynomial(d));
    return cache.emplace(n, std::move(num)).first->second;
}

namespace {

// Per-conductor reduction data: coordinates of zeta^m in the power basis for
// every m < max(N, 2 deg - 1).  Row m for m >= deg encodes the reduction of
// x^m mod Phi_N; products and Galois images fold through these rows.
struct FieldTable {
    long n = 1;
    long deg = 1;
    std::vector<std::vector<Rational>> power;
};

const FieldTable& field_table(long n) {
    static std::map<long, FieldTable> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    FieldTable t;
    t.n = n;
    const auto& phi = cyclotomic_polynomial(n);
    t.deg = static_cast<long>(phi.size()) - 1;
    long rows = std::max(n, 2 * t.deg - 1);
    t.power.assign(rows, std::vector<Rational>(t.deg, Rational(0)));
    for (long m = 0; m < std::min(rows, t.deg); ++m) t.power[m][m] = 1;
    for (long m = t.deg; m < rows; ++m) {
        // x^m = x * x^{m-1}; shift then reduce the overflow coefficient via
        // x^deg = -(phi[deg-1] x^{deg-1} + ... + phi[0]).
        const auto& prev = t.power[m - 1];
        auto& row = t.power[m];
        Rational top = prev[t.deg - 1];
        for (long j = t.deg - 1; j >= 1; --j) row[j] = prev[j - 1];
        row[0] = 0;
        if (top != 0)
            for (long j = 0; j < t.deg; ++j) row[j] -= top * Rational(phi[j]);
    }
    return cache.emplace(n, std::move(t)).first->second;
}

} // namespace

CycloScalar make_cyclo(long n, std::vector<Rational> coeffs) {
    CycloScalar s;
    s.n_ = n;
    s.c_ = std::move(coeffs);
    return s;
}

CycloScalar::CycloScalar(const Rational& v, long conductor) {
    n_ = conductor;
    c_.assign(field_table(conductor).deg, Rational(0));
    c_[0] = v;
}

CycloScalar CycloScalar::zero(long conductor) { return CycloScalar(Rational(0), conductor); }
CycloScalar CycloScalar::one(long conductor) { return CycloScalar(Rational(1), conductor); }

bool CycloScalar::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q == 0; });
}

bool CycloScalar::is_rational() const {
    for (size_t j = 1; j < c_.size(); ++j)
        if (c_[j] != 0) return false;
    return true;
}

Rational CycloScalar::rational_value() const {
    if (!is_rational()) throw precondition_error("scalar is not rational: " + format_cyclo(*this));
    return c_[0];
}

CycloScalar lift_to_conductor(const CycloScalar& a, long n) {
    if (a.conductor() == n) return a;
    if (n % a.conductor() != 0)
        throw precondition_error("conductor " + std::to_string(n) + " is no multiple of " +
                                 std::to_string(a.conductor()));
    const auto& t = field_table(n);
    long step = n / a.conductor();
    std::vector<Rational> out(t.deg, Rational(0));
    const auto& c = a.coeffs();
    for (size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        const auto& row = t.power[(static_cast<long>(j) * step) % n];
        for (long i = 0; i < t.deg; ++i) out[i] += c[j] * row[i];
    }
    return make_cyclo(n, std::move(out));
}

namespace {

long common_conductor(const CycloScalar& a, const CycloScalar& b) {
    return std::lcm(a.conductor(), b.conductor());
}

} // namespace

bool operator==(const CycloScalar& a, const CycloScalar& b) {
    long n = common_conductor(a, b);
    return lift_to_conductor(a, n).coeffs() == lift_to_conductor(b, n).coeffs();
}

CycloScalar operator+(const CycloScalar& a, const CycloScalar& b) {
    long n = common_conductor(a, b);
    CycloScalar x = lift_to_conductor(a, n), y = lift_to_conductor(b, n);
    std::vector<Rational> out = x.coeffs();
    for (size_t j = 0; j < out.size(); ++j) out[j] += y.coeffs()[j];
    return make_cyclo(n, std::move(out));
}

CycloScalar operator-(const CycloScalar& a, const CycloScalar& b) {
    long n = common_conductor(a, b);
    CycloScalar x = lift_to_conductor(a, n), y = lift_to_conductor(b, n);
    std::vector<Rational> out = x.coeffs();
    for (size_t j = 0; j < out.size(); ++j) out[j] -= y.coeffs()[j];
    return make_cyclo(n, std::move(out));
}

CycloScalar operator-(const CycloScalar& a) {
    std::vector<Rational> out = a.coeffs();
    for (auto& q : out) q = -q;
    return make_cyclo(a.conductor(), std::move(out));
}

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
    long n = common_conductor(a, b);
    CycloScalar x = lift_to_conductor(a, n), y = lift_to_conductor(b, n);
    const auto& t = field_table(n);
    std::vector<Rational> conv(2 * t.deg - 1, Rational(0));
    const auto& u = x.coeffs();
    const auto& v = y.coeffs();
    for (long i = 0; i < t.deg; ++i) {
        if (u[i] == 0) continue;
        for (long j = 0; j < t.deg; ++j) {
            if (v[j] == 0) continue;
            conv[i + j] += u[i] * v[j];
        }
    }
    std::vector<Rational> out(conv.begin(), conv.begin() + t.deg);
    for (long m = t.deg; m < static_cast<long>(conv.size()); ++m) {
        if (conv[m] == 0) continue;
        const auto& row = t.power[m];
        for (long j = 0; j < t.deg; ++j) out[j] += conv[m] * row[j];
    }
    return make_cyclo(n, std::move(out));
}

CycloScalar& operator+=(CycloScalar& a, const CycloScalar& b) { return a = a + b; }
CycloScalar& operator-=(CycloScalar& a, const CycloScalar& b) { return a = a - b; }
CycloScalar& operator*=(CycloScalar& a, const CycloScalar& b) { return a = a * b; }

namespace {

// Dense rational polynomials for the extended Euclid behind inverse().
using QPoly = std::vector<Rational>;

void qtrim(QPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly qsub_scaled(QPoly a, const QPoly& b, const Rational& c, long shift) {
    // a - c x^shift b
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rational(0));
    for (size_t j = 0; j < b.size(); ++j) a[j + shift] -= c * b[j];
    qtrim(a);
    return a;
}

// Returns (quotient, remainder) of a by b over Q.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
    qtrim(a);
    QPoly quo;
    if (b.empty()) throw division_by_zero();
    if (a.size() >= b.size()) quo.assign(a.size() - b.size() + 1, Rational(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        long shift = static_cast<long>(a.size() - b.size());
        quo[shift] = c;
        a = qsub_scaled(std::move(a), b, c, shift);
    }
    qtrim(quo);
    return {quo, a};
}

} // namespace

CycloScalar inverse(const CycloScalar& a) {
    if (a.is_zero()) throw division_by_zero();
    const auto& t = field_table(a.conductor());
    if (a.is_rational()) {
        CycloScalar r(Rational(1) / a.coeffs()[0], a.conductor());
        return r;
    }
    // Extended Euclid on (a, Phi_N): u a + v Phi = gcd = const, so a^{-1} is
    // u / const reduced mod Phi_N.  Phi_N is irreducible, so the gcd is a
    // nonzero constant whenever a != 0.
    QPoly r0 = a.coeffs();
    qtrim(r0);
    QPoly r1(cyclotomic_polynomial(a.conductor()).size());
    for (size_t j = 0; j < r1.size(); ++j) r1[j] = Rational(cyclotomic_polynomial(a.conductor())[j]);
    QPoly s0{Rational(1)}, s1{};
    while (!r1.empty()) {
        auto [q, r2] = qdivmod(r0, r1);
        // s2 = s0 - q s1
        QPoly s2 = s0;
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            s2 = qsub_scaled(std::move(s2), s1, q[i], static_cast<long>(i));
        }
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1)
        throw calc_error("internal: cyclotomic polynomial not coprime with nonzero scalar");
    std::vector<Rational> out(t.deg, Rational(0));
    for (size_t j = 0; j < s0.size() && j < out.size(); ++j) out[j] = s0[j] / r0[0];
    return make_cyclo(a.conductor(), std::move(out));
}

CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) { return a * inverse(b); }

CycloScalar galois(const CycloScalar& a, long k) {
    long n = a.conductor();
    long km = ((k % n) + n) % n;
    if (std::gcd(km, n) != 1)
        throw precondition_error("galois exponent " + std::to_string(k) +
                                 " not coprime with conductor " + std::to_string(n));
    const auto& t = field_table(n);
    std::vector<Rational> out(t.deg, Rational(0));
    const auto& c = a.coeffs();
    for (size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        const auto& row = t.power[(static_cast<long>(j) * km) % n];
        for (long i = 0; i < t.deg; ++i) out[i] += c[j] * row[i];
    }
    return make_cyclo(n, std::move(out));
}

CycloScalar conjugate(const CycloScalar& a) {
    return galois(a, a.conductor() - 1 == 0 ? 1 : a.conductor() - 1);
}

CycloScalar root_to_scalar(const RootOfUnity& r, long conductor) {
    long q = r.order();
    if (conductor % q != 0)
        throw unsupported_parameter("root of unity of order " + std::to_string(q) +
                                    " does not lie in conductor " + std::to_string(conductor));
    long p = to_long(Integer(r.exponent().get_num()));
    long k = ((p % q) * (conductor / q)) % conductor;
    if (k < 0) k += conductor;
    const auto& t = field_table(conductor);
    return make_cyclo(conductor, t.power[k]);
}

std::optional<CycloScalar> try_to_conductor(const CycloScalar& a, long m) {
    if (m == a.conductor()) return a;
    if (m % a.conductor() == 0) return lift_to_conductor(a, m);
    if (a.conductor() % m != 0) return std::nullopt;
    // Solve sum_j x_j zeta_M^j = a over Q in the big field's coordinates.
    long degm = field_table(m).deg;
    long degn = field_table(a.conductor()).deg;
    std::vector<std::vector<Rational>> cols(degm);
    for (long j = 0; j < degm; ++j)
        cols[j] = lift_to_conductor(root_to_scalar(RootOfUnity(Rational(j, m)), m), a.conductor()).coeffs();
    // Gaussian elimination on the degn x (degm+1) augmented system.
    std::vector<std::vector<Rational>> aug(degn, std::vector<Rational>(degm + 1, Rational(0)));
    for (long i = 0; i < degn; ++i) {
        for (long j = 0; j < degm; ++j) aug[i][j] = cols[j][i];
        aug[i][degm] = a.coeffs()[i];
    }
    long row = 0;
    std::vector<long> pivot_col(degn, -1);
    for (long col = 0; col < degm && row < degn; ++col) {
        long p = -1;
        for (long i = row; i < degn; ++i)
            if (aug[i][col] != 0) { p = i; break; }
        if (p < 0) continue;
        std::swap(aug[row], aug[p]);
        Rational d = aug[row][col];
        for (auto& q : aug[row]) q /= d;
        for (long i = 0; i < degn; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            Rational f = aug[i][col];
            for (long j = col; j <= degm; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_col[row] = col;
        ++row;
    }
    for (long i = row; i < degn; ++i)
        if (aug[i][degm] != 0) return std::nullopt; // inconsistent: not in the subfield
    std::vector<Rational> x(degm, Rational(0));
    for (long i = 0; i < row; ++i) x[pivot_col[i]] = aug[i][degm];
    return make_cyclo(m, std::move(x));
}

long minimal_conductor(const CycloScalar& a) {
    long n = a.conductor();
    long best = n;
    for (long m = 1; m <= n; ++m) {
        if (n % m != 0) continue;
        if (try_to_conductor(a, m)) { best = m; break; }
    }
    return best;
}

std::vector<long> galois_stabilizer(const CycloScalar& a) {
    std::vector<long> fix;
    long n = a.conductor();
    for (long k = 1; k < std::max<long>(n, 2); ++k) {
        if (n > 1 && std::gcd(k, n) != 1) continue;
        if (galois(a, k) == a) fix.push_back(k);
    }
    if (n == 1) fix.assign(1, 1L);
    return fix;
}

namespace {

// Rational interval endpoints for the certified sign decision.
struct QInterval {
    Rational lo, hi;
};

QInterval atan_inv_bracket(long x, int terms) {
    // arctan(1/x) = sum (-1)^i / ((2i+1) x^{2i+1}); alternating, decreasing.
    Rational s(0);
    Rational pw(1, x);
    Rational x2 = Rational(1, x) * Rational(1, x);
    Rational prev_partial(0);
    QInterval out{Rational(0), Rational(0)};
    for (int i = 0; i <= terms; ++i) {
        Rational term = pw / Rational(2 * i + 1);
        s += (i % 2 == 0) ? term : -term;
        if (i == terms - 1) prev_partial = s;
        pw *= x2;
    }
    out.lo = std::min(prev_partial, s);
    out.hi = std::max(prev_partial, s);
    return out;
}

QInterval pi_bracket(int terms) {
    // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239).
    QInterval a5 = atan_inv_bracket(5, terms), a239 = atan_inv_bracket(239, terms);
    return {16 * a5.lo - 4 * a239.hi, 16 * a5.hi - 4 * a239.lo};
}

// Cosine Taylor partial sums bracket cos(x) for 0 <= x < 3.1416 once the
// terms decrease, which holds from index 2 on in that range.
QInterval cos_bracket(const Rational& x, int terms) {
    int k = std::max(terms, 4);
    Rational x2 = x * x;
    Rational term(1), s(0), prev(0);
    for (int i = 0; i <= k; ++i) {
        s += (i % 2 == 0) ? term : -term;
        if (i == k - 1) prev = s;
        term = term * x2 / Rational((2 * i + 1) * (2 * i + 2));
    }
    return {std::min(prev, s), std::max(prev, s)};
}

// Enclosure of cos(2 pi m / n).
QInterval cos2pi(long m, long n, int terms) {
    m %= n;
    if (m < 0) m += n;
    if (m * 2 > n) m = n - m;
    if (m == 0) return {Rational(1), Rational(1)};
    if (2 * m == n) return {Rational(-1), Rational(-1)};
    QInterval pi = pi_bracket(std::max(terms / 4, 3));
    Rational frac(2 * m, n);
    Rational tlo = pi.lo * frac, thi = pi.hi * frac;
    if (thi >= Rational(31416, 10000))
        throw calc_error("internal: angle enclosure too wide");
    // cos is decreasing on [0, pi], and thi < pi by the width guard above.
    QInterval at_hi = cos_bracket(thi, terms), at_lo = cos_bracket(tlo, terms);
    return {at_hi.lo, at_lo.hi};
}

} // namespace

int real_sign(const CycloScalar& a) {
    if (conjugate(a) != a)
        throw not_real_error("real_sign of non-real scalar " + format_cyclo(a));
    if (a.is_zero()) return 0;
    long n = a.conductor();
    const auto& c = a.coeffs();
    // A real scalar equals its own real part: sum_j c_j cos(2 pi j / n).
    for (int terms = 8; terms <= (1 << 14); terms *= 2) {
        Rational lo(0), hi(0);
        for (size_t j = 0; j < c.size(); ++j) {
            if (c[j] == 0) continue;
            QInterval cj = cos2pi(static_cast<long>(j), n, terms);
            if (c[j] > 0) {
                lo += c[j] * cj.lo;
                hi += c[j] * cj.hi;
            } else {
                lo += c[j] * cj.hi;
                hi += c[j] * cj.lo;
            }
        }
        if (lo > 0) return 1;
        if (hi < 0) return -1;
    }
    throw calc_error("real_sign failed to separate a nonzero value from zero");
}

std::string format_cyclo(const CycloScalar& a) {
    std::ostringstream os;
    bool first = true;
    const auto& c = a.coeffs();
    for (size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        if (!first) os << " + ";
        os << format_rational(c[j]);
        if (j > 0) os << "*z" << a.conductor() << "^" << j;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

} // namespace mckatz
