#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mckatz/catalog.hpp"
#include "mckatz/errors.hpp"
#include "mckatz/theta_op.hpp"

using namespace mckatz;

namespace {

// x^xpow * (c0 + c1 theta + ...)
ThetaOperator term(int xpow, std::vector<Rational> coeffs) {
    return make_term(xpow, RPoly(std::move(coeffs)));
}

ThetaOperator random_op(std::mt19937_64& rng, int max_x = 2, int max_deg = 2) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    ThetaOperator l;
    for (int i = 0; i <= max_x; ++i) {
        std::vector<Rational> c(max_deg + 1);
        for (auto& v : c) v = Rational(coeff(rng));
        add_term(l, i, RPoly(std::move(c)));
    }
    if (l.is_zero()) add_term(l, 0, RPoly::constant(Rational(1)));
    return l;
}

RPoly linear(const Rational& c0, const Rational& c1) {
    return RPoly(std::vector<Rational>{c0, c1});
}

const Rational kChainShift1 = Rational(9, 10);
const Rational kChainA1 = Rational(3, 5) + Rational(5, 6);
const Rational kChainShift2 = Rational(3, 5) + Rational(1, 6) - Rational(2);
const Rational kChainA2 = Rational(2, 5) + Rational(1, 6);

std::vector<Rational> column(const RiemannScheme& s, const std::string& point) {
    for (const auto& c : s)
        if (c.point == point) return c.exponents;
    return {};
}

} // namespace

TEST_CASE("operator ring basics") {
    // theta * x = x(theta + 1)
    ThetaOperator theta = term(0, {Rational(0), Rational(1)});
    ThetaOperator x = term(1, {Rational(1)});
    CHECK(op_equal(op_mul(theta, x), term(1, {Rational(1), Rational(1)})));

    ThetaOperator one = term(0, {Rational(1)});
    std::mt19937_64 rng(41);
    ThetaOperator l = random_op(rng);
    CHECK(op_equal(op_mul(one, l), l));
    CHECK(op_equal(op_mul(l, one), l));
    CHECK(op_equal(op_sub(l, l), ThetaOperator{}));
    CHECK(op_equal(scalar_mul(Rational(3), l), op_add(l, op_add(l, l))));
}

TEST_CASE("multiplication laws") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 6; ++trial) {
        ThetaOperator a = random_op(rng), b = random_op(rng), c = random_op(rng);
        CHECK(op_equal(op_mul(op_mul(a, b), c), op_mul(a, op_mul(b, c))));
        CHECK(op_equal(op_mul(a, op_add(b, c)), op_add(op_mul(a, b), op_mul(a, c))));
        CHECK(op_equal(op_mul(op_add(a, b), c), op_add(op_mul(a, c), op_mul(b, c))));
    }
}

TEST_CASE("formal adjoint") {
    ThetaOperator theta = term(0, {Rational(0), Rational(1)});
    CHECK(op_equal(adjoint(theta), term(0, {Rational(-1), Rational(-1)})));

    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 6; ++trial) {
        ThetaOperator a = random_op(rng), b = random_op(rng);
        CHECK(op_equal(adjoint(adjoint(a)), a));
        CHECK(op_equal(adjoint(op_mul(a, b)), op_mul(adjoint(b), adjoint(a))));
    }
}

TEST_CASE("self adjointness of the catalog operators") {
    SelfAdjointness p = formal_self_adjointness(catalog::selfadjoint4());
    CHECK(p.self_adjoint);
    CHECK(p.power_shift == 0);
    CHECK(p.sign == 1);

    SelfAdjointness t = formal_self_adjointness(catalog::two_j2());
    CHECK(t.self_adjoint);
    CHECK(t.power_shift == -1); // x^{-1} L is the self adjoint normalization
    CHECK(t.sign == 1);

    CHECK(!formal_self_adjointness(term(0, {Rational(-7), Rational(1)})).self_adjoint);
}

TEST_CASE("theta shifts") {
    std::mt19937_64 rng(53);
    ThetaOperator l = random_op(rng);
    CHECK(op_equal(shift_theta(l, Rational(0)), l));
    Rational a(3, 7), b(-2, 5);
    CHECK(op_equal(shift_theta(shift_theta(l, a), b), shift_theta(l, a + b)));

    // scheme columns move by +a at 0 and -a at infinity
    ThetaOperator p = catalog::selfadjoint4();
    RiemannScheme base = riemann_scheme(p), moved = riemann_scheme(shift_theta(p, a));
    auto plus = column(base, "0");
    for (auto& e : plus) e += a;
    CHECK(column(moved, "0") == plus);
    auto minus = column(base, "inf");
    for (auto& e : minus) e -= a;
    CHECK(column(moved, "inf") == minus);
    CHECK(column(moved, "1") == column(base, "1"));
}

TEST_CASE("convolution transform") {
    // x-degree 0: empty products leave a pure shift
    ThetaOperator c = term(0, {Rational(1), Rational(2), Rational(1)});
    CHECK(op_equal(convolution_ca(c, Rational(1, 2)), shift_theta(c, Rational(1, 2))));

    // Gauss: (theta - b) - x(theta - c) becomes
    // theta(theta - a - b) - y(theta + 1 - a)(theta - a - c)
    Rational a(1, 2), b(1, 3), c2(1, 7);
    ThetaOperator l;
    add_term(l, 0, linear(-b, Rational(1)));
    add_term(l, 1, Rational(-1) * linear(-c2, Rational(1)));
    ThetaOperator want;
    add_term(want, 0, linear(Rational(0), Rational(1)) * linear(-a - b, Rational(1)));
    add_term(want, 1,
             Rational(-1) * (linear(Rational(1) - a, Rational(1)) * linear(-a - c2, Rational(1))));
    CHECK(op_equal(convolution_ca(l, a), want));

    // the parameter is only defined mod 1
    CHECK(op_equal(convolution_ca(l, a + 1), convolution_ca(l, a)));
    CHECK(op_equal(convolution_ca(l, a - 3), convolution_ca(l, a)));

    CHECK_THROWS_AS(convolution_ca(l, Rational(2)), unsupported_parameter);
    CHECK_THROWS_AS(convolution_ca(ThetaOperator{}, a), precondition_error);
    ThetaOperator laurent = term(-1, {Rational(1)});
    CHECK_THROWS_AS(convolution_ca(laurent, a), precondition_error);

    // degrees: x-degree stays m, theta-order grows by m
    ThetaOperator p = catalog::selfadjoint4();
    ThetaOperator l2 = convolution_ca(shift_theta(p, kChainShift1), kChainA1);
    CHECK(l2.max_power() == 2);
    CHECK(l2.order() == 6);
    ThetaOperator l3 = convolution_ca(shift_theta(l2, kChainShift2), kChainA2);
    CHECK(l3.max_power() == 2);
    CHECK(l3.order() == 8);
}

TEST_CASE("two step convolution chain hits the catalog product") {
    ThetaOperator l2 = convolution_ca(shift_theta(catalog::selfadjoint4(), kChainShift1), kChainA1);
    ThetaOperator l3 = convolution_ca(shift_theta(l2, kChainShift2), kChainA2);
    CHECK(op_equal_normalized(l3, catalog::chain_product6()));

    // split off the two left linear factors and undo the 1/6 shift
    RPoly q = linear(Rational(-17), Rational(30)) * linear(Rational(7), Rational(30));
    ThetaOperator quotient = divide_left_theta(l3, q);
    CHECK(op_equal_normalized(shift_theta(quotient, Rational(-1, 6)), catalog::two_j2()));
    CHECK(op_equal(op_mul(make_term(0, q), quotient), l3));
}

TEST_CASE("left division") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 5; ++trial) {
        ThetaOperator r = random_op(rng);
        std::uniform_int_distribution<int> coeff(1, 4);
        RPoly q = linear(Rational(coeff(rng)), Rational(coeff(rng)));
        CHECK(op_equal(divide_left_theta(op_mul(make_term(0, q), r), q), r));
    }
    // theta does not divide theta - x: the x-term fails
    ThetaOperator bad = op_sub(term(0, {Rational(0), Rational(1)}), term(1, {Rational(1)}));
    CHECK_THROWS_AS(divide_left_theta(bad, linear(Rational(0), Rational(1))), not_divisible);
    CHECK_THROWS_AS(divide_left_theta(bad, RPoly{}), division_by_zero);
}

TEST_CASE("content normalization") {
    ThetaOperator l = catalog::two_j2();
    CHECK(op_equal(content_normalize(l), content_normalize(scalar_mul(Rational(-7, 3), l))));
    CHECK(op_equal(content_normalize(content_normalize(l)), content_normalize(l)));
    CHECK(op_equal_normalized(l, scalar_mul(Rational(22, 7), l)));
    CHECK(!op_equal_normalized(l, catalog::selfadjoint4()));
}

TEST_CASE("riemann schemes") {
    ThetaOperator tc = term(0, {Rational(-5, 6), Rational(1)});
    RiemannScheme s = riemann_scheme(tc);
    CHECK(column(s, "0") == std::vector<Rational>{Rational(5, 6)});

    // the order-6 target operator
    RiemannScheme t = riemann_scheme(catalog::two_j2());
    CHECK(column(t, "0") == std::vector<Rational>{Rational(5, 6), Rational(1, 3), Rational(1, 6),
                                                  Rational(-1, 6), Rational(-1, 3),
                                                  Rational(-5, 6)});
    CHECK(column(t, "1") == std::vector<Rational>{Rational(3), Rational(5, 2), Rational(2),
                                                  Rational(1), Rational(1, 2), Rational(0)});
    CHECK(column(t, "inf") == std::vector<Rational>{Rational(17, 10), Rational(7, 5),
                                                    Rational(11, 10), Rational(9, 10),
                                                    Rational(3, 5), Rational(3, 10)});

    // the order-4 hypergeometric seed
    RiemannScheme h = riemann_scheme(catalog::hypergeometric4());
    CHECK(column(h, "0") == std::vector<Rational>{Rational(13, 15), Rational(8, 15),
                                                  Rational(7, 15), Rational(2, 15)});
    CHECK(column(h, "1") == std::vector<Rational>{Rational(2), Rational(1), Rational(1),
                                                  Rational(0)});
    CHECK(column(h, "inf") == std::vector<Rational>{Rational(13, 20), Rational(1, 20),
                                                    Rational(-3, 20), Rational(-11, 20)});

    // irrational indicial roots are refused, naming no rational part
    ThetaOperator irr;
    add_term(irr, 0, RPoly(std::vector<Rational>{Rational(-1), Rational(-1), Rational(1)}));
    add_term(irr, 1, RPoly::constant(Rational(1)));
    CHECK_THROWS_AS(riemann_scheme(irr), non_rational_exponent);
}

TEST_CASE("fuchs relation across the catalog") {
    // sum of all exponents = (p-2) n (n-1) / 2 for p singular points
    auto fuchs_sum = [](const ThetaOperator& l) {
        Rational sum(0);
        for (const auto& c : riemann_scheme(l))
            for (const auto& e : c.exponents) sum += e;
        return sum;
    };
    CHECK(fuchs_sum(catalog::two_j2()) == Rational(15));
    CHECK(fuchs_sum(catalog::hypergeometric4()) == Rational(6));
    CHECK(fuchs_sum(catalog::selfadjoint4()) == Rational(6));
    CHECK(fuchs_sum(catalog::chain_product6()) == Rational(28));
}

TEST_CASE("catalog shapes") {
    CHECK(catalog::two_j2().order() == 6);
    CHECK(catalog::two_j2().max_power() == 2);
    CHECK(catalog::selfadjoint4().order() == 4);
    CHECK(catalog::hypergeometric4().order() == 4);
    CHECK(catalog::chain_product6().order() == 8);

    // the chain product's leading x^2 coefficient factors as displayed
    RPoly lead = catalog::chain_product6().terms.at(2);
    RPoly want = RPoly::constant(Rational(16));
    auto lin = [](long c0, long c1) { return RPoly(std::vector<Rational>{Rational(c0), Rational(c1)}); };
    for (const RPoly& f : {lin(2, 15), lin(23, 15), lin(67, 30), lin(37, 30), lin(14, 15),
                           lin(11, 15), lin(43, 30), lin(13, 30)})
        want = want * f;
    CHECK(lead == want);
}

TEST_CASE("parametric family") {
    // the concrete 2.J2 parameters recover the target operator
    ThetaOperator fam = catalog::two_j2_family(Rational(-1, 6), Rational(1, 10), Rational(2, 5),
                                               Rational(7, 10));
    CHECK(op_equal_normalized(fam, catalog::two_j2()));

    // symbolic scheme at random rational parameters
    std::mt19937_64 rng(61);
    std::uniform_int_distribution<int> num(1, 9);
    for (int trial = 0; trial < 3; ++trial) {
        Rational a1 = Rational(num(rng)) / 10, c1 = Rational(num(rng)) / 11,
                 c2 = Rational(num(rng)) / 13, c3 = Rational(num(rng)) / 17;
        ThetaOperator l = catalog::two_j2_family(a1, c1, c2, c3);
        RiemannScheme s = riemann_scheme(l);
        std::vector<Rational> e0{a1 + 1, Rational(2) * a1, a1, -a1, Rational(-2) * a1,
                                 Rational(-1) - a1};
        std::sort(e0.begin(), e0.end(), std::greater<Rational>());
        CHECK(column(s, "0") == e0);
        CHECK(column(s, "1") == std::vector<Rational>{Rational(3), Rational(5, 2), Rational(2),
                                                      Rational(1), Rational(1, 2), Rational(0)});
        std::vector<Rational> einf{Rational(1) + c1, Rational(1) - c1, Rational(1) + c2,
                                   Rational(1) - c2, Rational(1) + c3, Rational(1) - c3};
        std::sort(einf.begin(), einf.end(), std::greater<Rational>());
        CHECK(column(s, "inf") == einf);
    }

    // a further row of the specialization table stays formally self adjoint
    ThetaOperator other = catalog::two_j2_family(Rational(-1, 6), Rational(19, 20),
                                                 Rational(9, 20), Rational(3, 4));
    CHECK(other.order() == 6);
    SelfAdjointness sa = formal_self_adjointness(other);
    CHECK(sa.self_adjoint);

    // the order-4 seed of the family
    ThetaOperator seed = catalog::two_j2_family_seed(Rational(-1, 6), Rational(1, 10),
                                                     Rational(2, 5), Rational(7, 10));
    CHECK(seed.order() == 4);
    CHECK(seed.max_power() == 1);
}

TEST_CASE("formatting smoke") {
    CHECK(!format_theta_operator(catalog::two_j2()).empty());
    CHECK(!format_scheme(riemann_scheme(catalog::hypergeometric4())).empty());
    CHECK(format_rpoly(linear(Rational(-17), Rational(30)), "t").find("t") != std::string::npos);
}
