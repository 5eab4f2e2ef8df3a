#include "mckatz/catalog.hpp"

namespace mckatz {
namespace catalog {

namespace {

// c0 + c1*theta
RPoly th(long c0, long c1) { return RPoly(std::vector<Rational>{Rational(c0), Rational(c1)}); }

RPoly thq(const Rational& c0, const Rational& c1) {
    return RPoly(std::vector<Rational>{c0, c1});
}

RPoly quartic(long c0, long c1, long c2, long c3, long c4) {
    return RPoly(std::vector<Rational>{Rational(c0), Rational(c1), Rational(c2), Rational(c3),
                                       Rational(c4)});
}

JordanData simple(std::initializer_list<Rational> exps) {
    JordanData jd;
    for (const auto& e : exps) jd.push_back({RootOfUnity(e), 1});
    std::sort(jd.begin(), jd.end(), [](const JordanBlock& a, const JordanBlock& b) {
        if (a.eig.exponent() != b.eig.exponent()) return a.eig.exponent() < b.eig.exponent();
        return a.size < b.size;
    });
    return jd;
}

OpStep mt(const Rational& a, const Rational& b, const Rational& c) {
    OpStep s;
    s.kind = OpStep::Kind::MT;
    s.lambdas = {RootOfUnity(a), RootOfUnity(b), RootOfUnity(c)};
    return s;
}

OpStep mc(const Rational& a) {
    OpStep s;
    s.kind = OpStep::Kind::MC;
    s.lambda = RootOfUnity(a);
    return s;
}

} // namespace

ThetaOperator hypergeometric4() {
    ThetaOperator l;
    add_term(l, 0, Rational(256) * (th(-13, 15) * th(-7, 15) * th(-8, 15) * th(-2, 15)));
    add_term(l, 1, Rational(-81) * (th(-11, 20) * th(13, 20) * th(-3, 20) * th(1, 20)));
    return l;
}

std::vector<Rational> hypergeometric4_exp0() {
    return {Rational(2, 15), Rational(7, 15), Rational(8, 15), Rational(13, 15)};
}

std::vector<Rational> hypergeometric4_exp_inf() {
    return {Rational(-11, 20), Rational(-3, 20), Rational(1, 20), Rational(13, 20)};
}

ThetaOperator selfadjoint4() {
    ThetaOperator l;
    add_term(l, 0, Rational(900) * (th(5, 6) * th(1, 10) * th(9, 10) * th(1, 6)));
    add_term(l, 1, Rational(-1) * quartic(9522215, 32263200, 42051600, 25920000, 6480000));
    add_term(l, 2, Rational(5184) * (th(11, 5) * th(7, 5) * th(8, 5) * th(4, 5)));
    return l;
}

ThetaOperator chain_product6() {
    ThetaOperator l;
    add_term(l, 0,
             Rational(6750000) * (th(0, 1) * th(-1, 1) * th(2, 3) * th(-1, 3) * th(1, 6) *
                                  th(-1, 2) * th(-17, 30) * th(7, 30)));
    add_term(l, 1,
             Rational(-1125) * (th(0, 1) * th(2, 3) * th(37, 30) * th(13, 30) *
                                quartic(20201, 204960, 499440, 576000, 432000)));
    add_term(l, 2,
             Rational(16) * (th(2, 15) * th(23, 15) * th(67, 30) * th(37, 30) * th(14, 15) *
                             th(11, 15) * th(43, 30) * th(13, 30)));
    return l;
}

ThetaOperator two_j2() {
    ThetaOperator l;
    add_term(l, 0,
             Rational(250000) *
                 (th(5, 6) * th(-1, 6) * th(-1, 3) * th(1, 3) * th(1, 6) * th(-5, 6)));
    add_term(l, 1,
             Rational(-125) * (th(1, 6) * th(5, 6) *
                               quartic(213703, 1282320, 2578320, 2592000, 1296000)));
    add_term(l, 2,
             Rational(11664) * (th(17, 10) * th(7, 5) * th(11, 10) * th(9, 10) * th(3, 5) *
                                th(3, 10)));
    return l;
}

ThetaOperator two_j2_family(const Rational& a1, const Rational& c1, const Rational& c2,
                            const Rational& c3) {
    Rational one(1);
    Rational v1 = 4 * a1 * a1 + c1 * c1 + c2 * c2 + c3 * c3;
    Rational v2 = 16 * a1 * a1 * a1 * a1 + c1 * c1 * c1 * c1 + c2 * c2 * c2 * c2 +
                  c3 * c3 * c3 * c3;
    ThetaOperator l;
    add_term(l, 0,
             Rational(64) * (thq(-a1, one) * thq(a1, one) * thq(-2 * a1, one) *
                             thq(2 * a1, one) * thq(one + a1, one) * thq(-one - a1, one)));
    RPoly mid(std::vector<Rational>{-32 * v2 + 16 * v1 * v1 - 24 * v1 + 39,
                                    -64 * v1 + 176, -64 * v1 + 304, Rational(256),
                                    Rational(128)});
    add_term(l, 1, Rational(-1) * (thq(one + a1, one) * thq(-a1, one) * mid));
    add_term(l, 2,
             Rational(64) * (thq(one + c3, one) * thq(one - c3, one) * thq(one + c2, one) *
                             thq(one - c2, one) * thq(one + c1, one) * thq(one - c1, one)));
    return l;
}

ThetaOperator two_j2_family_seed(const Rational& a1, const Rational& c1, const Rational& c2,
                                 const Rational& c3) {
    Rational one(1), two(2), four(4);
    ThetaOperator l;
    add_term(l, 0,
             Rational(16) * (thq(2 * a1 - c1 - one, two) * thq(-2 * a1 + c1 - one, two) *
                             thq(-2 * a1 - c1 - one, two) * thq(2 * a1 + c1 - one, two)));
    add_term(l, 1,
             Rational(-1) * (thq(2 * (c3 + c2) + one, four) * thq(2 * (c2 - c3) - one, four) *
                             thq(-2 * (c3 + c2) + one, four) * thq(2 * (c3 - c2) - one, four)));
    return l;
}

OpScript construction_script() {
    return {mt(Rational(2, 5), Rational(0), Rational(3, 5)), mc(Rational(13, 30)),
            mt(Rational(23, 30), Rational(0), Rational(7, 30)), mc(Rational(17, 30)),
            mt(Rational(5, 6), Rational(0), Rational(1, 6))};
}

OpScript reduction_script() {
    return {mt(Rational(1, 6), Rational(0), Rational(5, 6)), mc(Rational(13, 30)),
            mt(Rational(7, 30), Rational(0), Rational(23, 30)), mc(Rational(17, 30)),
            mt(Rational(3, 5), Rational(0), Rational(2, 5))};
}

LocalData two_j2_local_data() {
    LocalData d;
    d.rank = 6;
    d.points.push_back(simple({Rational(1, 6), Rational(1, 6), Rational(1, 3), Rational(2, 3),
                               Rational(5, 6), Rational(5, 6)}));
    d.points.push_back(simple({Rational(1, 2), Rational(1, 2), Rational(0), Rational(0),
                               Rational(0), Rational(0)}));
    d.points.push_back(simple({Rational(1, 10), Rational(3, 10), Rational(3, 5), Rational(2, 5),
                               Rational(7, 10), Rational(9, 10)}));
    return d;
}

LocalData wedge_local_data() {
    LocalData d;
    d.rank = 6;
    d.points.push_back(simple({Rational(2, 5), Rational(1, 3), Rational(0), Rational(0),
                               Rational(2, 3), Rational(3, 5)}));
    JordanData mid;
    mid.push_back({RootOfUnity(Rational(0)), 1});
    mid.push_back({RootOfUnity(Rational(0)), 1});
    mid.push_back({RootOfUnity(Rational(0)), 2});
    mid.push_back({RootOfUnity(Rational(0)), 2});
    d.points.push_back(mid);
    d.points.push_back(simple({Rational(1, 10), Rational(3, 10), Rational(1, 2), Rational(1, 2),
                               Rational(7, 10), Rational(9, 10)}));
    return d;
}

LocalData rank4_local_data() {
    LocalData d;
    d.rank = 4;
    d.points.push_back(
        simple({Rational(1, 10), Rational(1, 6), Rational(5, 6), Rational(9, 10)}));
    d.points.push_back(simple({Rational(1, 2), Rational(1, 2), Rational(0), Rational(0)}));
    d.points.push_back(
        simple({Rational(1, 5), Rational(2, 5), Rational(3, 5), Rational(4, 5)}));
    return d;
}

LocalData sp4_local_data() {
    LocalData d;
    d.rank = 4;
    d.points.push_back(
        simple({Rational(3, 5), Rational(1, 3), Rational(2, 3), Rational(2, 5)}));
    d.points.push_back(simple({Rational(1, 2), Rational(1, 2), Rational(0), Rational(0)}));
    d.points.push_back(
        simple({Rational(1, 10), Rational(3, 10), Rational(7, 10), Rational(9, 10)}));
    return d;
}

} // namespace catalog
} // namespace mckatz
