#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mckatz/catalog.hpp"
#include "mckatz/errors.hpp"
#include "mckatz/rigidity.hpp"

using namespace mckatz;

namespace {

JordanData simple(const std::vector<Rational>& exps) {
    JordanData jd;
    for (const auto& e : exps) jd.push_back({RootOfUnity(e), 1});
    std::sort(jd.begin(), jd.end(), [](const JordanBlock& a, const JordanBlock& b) {
        if (a.eig != b.eig) return a.eig < b.eig;
        return a.size < b.size;
    });
    return jd;
}

Matrix realize(const JordanData& jd, long conductor) {
    int n = 0;
    for (const auto& b : jd) n += b.size;
    Matrix m(n, n);
    int at = 0;
    for (const auto& b : jd) {
        CycloScalar eig = root_to_scalar(b.eig, conductor);
        for (int i = 0; i < b.size; ++i) {
            m.at(at + i, at + i) = eig;
            if (i + 1 < b.size) m.at(at + i, at + i + 1) = CycloScalar(1);
        }
        at += b.size;
    }
    return m;
}

} // namespace

TEST_CASE("gl centralizer dimensions") {
    // regular semisimple order-10 class
    CHECK(dim_cent_gl(simple({Rational(1, 10), Rational(3, 10), Rational(3, 5), Rational(2, 5),
                              Rational(7, 10), Rational(9, 10)})) == 6);
    // (-1,-1,1,1,1,1): 2^2 + 4^2
    CHECK(dim_cent_gl(simple({Rational(1, 2), Rational(1, 2), Rational(0), Rational(0),
                              Rational(0), Rational(0)})) == 20);
    // two J(2) and two J(1) at one eigenvalue: sum of min over 16 pairs
    JordanData mixed;
    mixed.push_back({RootOfUnity(Rational(0)), 2});
    mixed.push_back({RootOfUnity(Rational(0)), 2});
    mixed.push_back({RootOfUnity(Rational(0)), 1});
    mixed.push_back({RootOfUnity(Rational(0)), 1});
    CHECK(dim_cent_gl(mixed) == 20);
}

TEST_CASE("formula agrees with the intertwiner solver") {
    std::mt19937_64 rng(67);
    std::uniform_int_distribution<int> denom_pick(0, 2);
    std::vector<long> denoms{4, 5, 6};
    for (int trial = 0; trial < 6; ++trial) {
        JordanData jd;
        int n = 0;
        std::uniform_int_distribution<int> size(1, 2);
        while (n < 4) {
            int s = size(rng);
            long d = denoms[denom_pick(rng)];
            std::uniform_int_distribution<long> k(0, d - 1);
            Rational e = Rational(k(rng)) / d;
            jd.push_back({RootOfUnity(e), s});
            n += s;
        }
        Matrix m = realize(jd, 60);
        CHECK(dim_cent_gl(jordan_data(m, 60)) ==
              static_cast<int>(solve_intertwiners({m}, {m}).size()));
    }
}

TEST_CASE("symplectic centralizer at the identity") {
    Matrix omega(6, 6);
    for (int i = 0; i < 3; ++i) {
        omega.at(i, i + 3) = CycloScalar(1);
        omega.at(i + 3, i) = CycloScalar(-1);
    }
    CHECK(dim_cent_sp(Matrix::identity(6), omega) == 21);
}

TEST_CASE("scott formula and rigidity indices") {
    RigidityReport two_j2 = scott_and_indices(catalog::two_j2_local_data());
    CHECK(two_j2.cent_dims == std::vector<int>{10, 20, 6});
    CHECK(two_j2.sum == 36);
    CHECK(two_j2.bound == 38);
    CHECK(!two_j2.linearly_rigid);

    LocalData seed = local_data_of(
        levelt_hypergeometric(catalog::hypergeometric4_exp0(), catalog::hypergeometric4_exp_inf(),
                              60),
        60);
    RigidityReport hg = scott_and_indices(seed);
    CHECK(hg.cent_dims == std::vector<int>{4, 10, 4});
    CHECK(hg.sum == 18);
    CHECK(hg.bound == 18);
    CHECK(hg.linearly_rigid);
}

TEST_CASE("local data validation") {
    LocalData good = catalog::two_j2_local_data();
    CHECK_NOTHROW(validate_local_data(good));

    LocalData bad_rank = good;
    bad_rank.rank = 5;
    CHECK_THROWS_AS(validate_local_data(bad_rank), calc_error);

    LocalData bad_det = good;
    bad_det.points[0][0].eig = RootOfUnity(Rational(1, 7));
    CHECK_THROWS_AS(validate_local_data(bad_det), calc_error);
}

TEST_CASE("numerology of the wedge convolution") {
    NumerologyResult res = mc_numerology(catalog::wedge_local_data(), RootOfUnity(Rational(1, 2)));
    // rank formula: 4 + 2 + 4 - 6
    CHECK(res.new_rank == 4);
    CHECK(res.predicted == catalog::rank4_local_data());
}

TEST_CASE("numerology round trips") {
    RootOfUnity lambda(Rational(1, 2));
    for (const LocalData& d : {catalog::wedge_local_data(), catalog::sp4_local_data()}) {
        NumerologyResult fwd = mc_numerology(d, lambda);
        NumerologyResult back = mc_numerology(fwd.predicted, lambda.inverse());
        CHECK(back.predicted == d);
    }
    CHECK_THROWS_AS(mc_numerology(catalog::wedge_local_data(), RootOfUnity(Rational(0))),
                    calc_error);
}

TEST_CASE("twists on local data") {
    LocalData d = catalog::sp4_local_data();
    std::vector<RootOfUnity> tw{RootOfUnity(Rational(1, 3)), RootOfUnity(),
                                RootOfUnity(Rational(2, 3))};
    LocalData t = mt_local(d, tw);
    CHECK(t.rank == d.rank);
    // eigenvalues of member 1 moved by 1/3, member 2 untouched
    for (size_t b = 0; b < d.points[1].size(); ++b)
        CHECK(t.points[1][b] == d.points[1][b]);
    std::vector<RootOfUnity> bad{RootOfUnity(Rational(1, 3)), RootOfUnity(), RootOfUnity()};
    CHECK_THROWS_AS(mt_local(d, bad), product_violation);
}

TEST_CASE("katz reduction certifies the hypergeometric seed") {
    LocalData seed = local_data_of(
        levelt_hypergeometric(catalog::hypergeometric4_exp0(), catalog::hypergeometric4_exp_inf(),
                              60),
        60);
    KatzReduction red = katz_reduce(seed);
    CHECK(red.reached_rank_one);
    CHECK(red.final_data.rank == 1);
    CHECK(red.steps.size() == 3);
    std::vector<int> ranks;
    for (const auto& s : red.steps) ranks.push_back(s.rank_after);
    CHECK(ranks == std::vector<int>{3, 2, 1});
}

TEST_CASE("katz reduction stalls on the rank six data") {
    KatzReduction red = katz_reduce(catalog::two_j2_local_data());
    CHECK(!red.reached_rank_one);
    CHECK(red.final_data.rank == 4);
    std::vector<int> ranks;
    for (const auto& s : red.steps) ranks.push_back(s.rank_after);
    CHECK(ranks == std::vector<int>{5, 4});
}

TEST_CASE("rank one data is terminal") {
    LocalData d;
    d.rank = 1;
    d.points.push_back(simple({Rational(1, 3)}));
    d.points.push_back(simple({Rational(1, 3)}));
    d.points.push_back(simple({Rational(1, 3)}));
    KatzReduction red = katz_reduce(d);
    CHECK(red.reached_rank_one);
    CHECK(red.steps.empty());
}

TEST_CASE("formatting smoke") {
    CHECK(!format_local_data(catalog::two_j2_local_data()).empty());
    CHECK(!format_jordan(simple({Rational(1, 2), Rational(0)})).empty());
}
