#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mckatz/catalog.hpp"
#include "mckatz/errors.hpp"
#include "mckatz/rigidity.hpp"
#include "mckatz/sampling.hpp"
#include "mckatz/tuples.hpp"

using namespace mckatz;

namespace {

CycloScalar zeta(long num, long den, long conductor = 60) {
    return root_to_scalar(RootOfUnity(Rational(num, den)), conductor);
}

MonodromyTuple rank1_tuple(const RootOfUnity& a, const RootOfUnity& b, long conductor) {
    Matrix m1(1, 1), m2(1, 1), m3(1, 1);
    m1.at(0, 0) = root_to_scalar(a, conductor);
    m2.at(0, 0) = root_to_scalar(b, conductor);
    m3.at(0, 0) = root_to_scalar((a * b).inverse(), conductor);
    return default_points_tuple(1, {m1, m2, m3});
}

const MonodromyTuple& seed_tuple() {
    static MonodromyTuple t = levelt_hypergeometric(catalog::hypergeometric4_exp0(),
                                                    catalog::hypergeometric4_exp_inf(), 60);
    return t;
}

const MonodromyTuple& wedge_tuple() {
    static MonodromyTuple t = wedge_square_tuple(seed_tuple());
    return t;
}

bool product_is_one(const MonodromyTuple& t) {
    Matrix p = Matrix::identity(t.rank);
    for (const auto& m : t.matrices) p = p * m;
    return p == Matrix::identity(t.rank);
}

} // namespace

TEST_CASE("tuple validation") {
    CHECK_NOTHROW(validate_tuple(seed_tuple()));
    MonodromyTuple broken = seed_tuple();
    broken.matrices[1] = CycloScalar(2) * broken.matrices[1];
    CHECK_THROWS_AS(validate_tuple(broken), calc_error);
}

TEST_CASE("scalar twists") {
    MonodromyTuple t = seed_tuple();
    MonodromyTuple same = mt_twist(t, {RootOfUnity(), RootOfUnity(), RootOfUnity()});
    CHECK(same.matrices[0] == t.matrices[0]);
    CHECK(same.matrices[2] == t.matrices[2]);

    CHECK_THROWS_AS(mt_twist(t, {RootOfUnity(Rational(1, 3)), RootOfUnity(), RootOfUnity()}),
                    product_violation);

    // eigenvalue exponents move by the twist
    std::vector<RootOfUnity> tw{RootOfUnity(Rational(1, 3)), RootOfUnity(),
                                RootOfUnity(Rational(2, 3))};
    MonodromyTuple tt = mt_twist(t, tw);
    CHECK(product_is_one(tt));
    JordanData before = jordan_data(t.matrices[0], 60);
    JordanData after = jordan_data(tt.matrices[0], 60);
    REQUIRE(before.size() == after.size());
    std::vector<Rational> b_exps, a_exps;
    for (const auto& blk : before) b_exps.push_back(frac_mod1(blk.eig.exponent() + Rational(1, 3)));
    for (const auto& blk : after) a_exps.push_back(blk.eig.exponent());
    std::sort(b_exps.begin(), b_exps.end());
    std::sort(a_exps.begin(), a_exps.end());
    CHECK(b_exps == a_exps);
}

TEST_CASE("convolution blocks on a rank one tuple") {
    RootOfUnity a(Rational(1, 3)), b(Rational(1, 5)), lambda(Rational(1, 2));
    MonodromyTuple t = rank1_tuple(a, b, 30);
    ConvolutionResult res = convolution(t, lambda);
    REQUIRE(res.big.rank == 2);
    CHECK(product_is_one(res.big));

    CycloScalar av = zeta(1, 3, 30), bv = zeta(1, 5, 30), lv = zeta(1, 2, 30);
    Matrix b1 = res.big.matrices[0], b2 = res.big.matrices[1];
    // B_1 - 1 lives in row 1: ((a-1)lambda shifted form) per the block display
    CHECK(b1.at(0, 0) == av * lv);
    CHECK(b1.at(0, 1) == bv - CycloScalar(1));
    CHECK(b1.at(1, 0) == CycloScalar(0));
    CHECK(b1.at(1, 1) == CycloScalar(1));
    // B_2 - 1 lives in row 2
    CHECK(b2.at(0, 0) == CycloScalar(1));
    CHECK(b2.at(0, 1) == CycloScalar(0));
    CHECK(b2.at(1, 0) == (av - CycloScalar(1)) * lv);
    CHECK(b2.at(1, 1) == bv * lv);

    CHECK(res.kl_dim == res.k_dim + res.l_dim); // K and L intersect trivially
    CHECK_THROWS_AS(convolution(t, RootOfUnity()), unsupported_parameter);
}

TEST_CASE("convolution subspaces on the wedge tuple") {
    ConvolutionResult res = convolution(wedge_tuple(), RootOfUnity(Rational(1, 2)));
    CHECK(res.big.rank == 12);
    CHECK(res.k_dim == 6);
    CHECK(res.l_dim == 2);
    CHECK(res.kl_dim == 8); // trivial intersection, rank 12 - 8 = 4 survives
    CHECK(product_is_one(res.big));

    // K + L is invariant under every B_i
    Matrix kl = vstack(res.k_basis, res.l_basis);
    for (const auto& bi : res.big.matrices) {
        Matrix image = kl * transpose(bi);
        Matrix stacked = vstack(kl, image);
        CHECK(rank(stacked) == res.kl_dim);
    }
}

TEST_CASE("middle convolution of the wedge") {
    MonodromyTuple rank4 = middle_convolution(wedge_tuple(), RootOfUnity(Rational(1, 2)));
    CHECK(rank4.rank == 4);
    CHECK(product_is_one(rank4));
    CHECK(is_irreducible(rank4));
    CHECK(local_data_of(rank4, 60) == catalog::rank4_local_data());

    CHECK_THROWS_AS(middle_convolution(wedge_tuple(), RootOfUnity()), unsupported_parameter);

    // reducible inputs are refused
    Matrix d1 = Matrix::identity(2), d2 = Matrix::identity(2), d3 = Matrix::identity(2);
    d1.at(0, 0) = zeta(1, 3);
    d3.at(0, 0) = zeta(2, 3);
    MonodromyTuple diag = default_points_tuple(2, {d1, d2, d3});
    CHECK_THROWS_AS(middle_convolution(diag, RootOfUnity(Rational(1, 2))), precondition_error);
}

TEST_CASE("levelt generators") {
    MonodromyTuple tiny = levelt_hypergeometric({Rational(1, 3)}, {Rational(2, 3)}, 3);
    CHECK(tiny.rank == 1);
    CHECK(product_is_one(tiny));
    CHECK(jordan_data(tiny.matrices[1], 3)[0].eig.is_one());

    const MonodromyTuple& t = seed_tuple();
    CHECK(t.rank == 4);
    CHECK(product_is_one(t));
    CHECK(is_irreducible(t));
    CHECK(rank(t.matrices[1] - Matrix::identity(4)) == 1); // pseudo-reflection at 1

    JordanData j0 = jordan_data(t.matrices[0], 60);
    std::vector<Rational> exps;
    for (const auto& b : j0) exps.push_back(b.eig.exponent());
    std::sort(exps.begin(), exps.end());
    CHECK(exps == std::vector<Rational>{Rational(2, 15), Rational(7, 15), Rational(8, 15),
                                        Rational(13, 15)});

    CHECK_THROWS_AS(levelt_hypergeometric({Rational(1, 3), Rational(1, 2)},
                                          {Rational(1, 3), Rational(3, 4)}, 12),
                    resonance_error);
}

TEST_CASE("burnside irreducibility") {
    CHECK(matrix_algebra_dimension(seed_tuple()) == 16);

    Matrix u1(2, 2), u2(2, 2), u3(2, 2);
    u1 = Matrix::identity(2);
    u2 = Matrix::identity(2);
    u3 = Matrix::identity(2);
    u1.at(0, 1) = CycloScalar(1);
    u2.at(0, 1) = CycloScalar(-1);
    MonodromyTuple upper = default_points_tuple(2, {u1, u2, u3});
    CHECK(!is_irreducible(upper));
    CHECK(matrix_algebra_dimension(upper) < 4);
}

TEST_CASE("equivalence of tuples") {
    std::mt19937_64 rng(71);
    MonodromyTuple t = random_hypergeometric_tuple(rng, 2, 12);
    std::uniform_int_distribution<int> coeff(-3, 3);
    Matrix s;
    do {
        s = Matrix(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) s.at(i, j) = CycloScalar(coeff(rng));
    } while (rank(s) != 2);
    MonodromyTuple conj = t;
    for (auto& m : conj.matrices) m = s * m * inverse(s);
    EquivalenceResult res = equivalent(t, conj);
    CHECK(res.equivalent);
    REQUIRE(res.witness.has_value());
    Matrix w = *res.witness;
    for (size_t i = 0; i < t.matrices.size(); ++i)
        CHECK(w * t.matrices[i] * inverse(w) == conj.matrices[i]);

    MonodromyTuple other = random_hypergeometric_tuple(rng, 2, 12);
    if (local_data_of(other, 12) != local_data_of(t, 12)) CHECK(!equivalent(t, other).equivalent);
}

TEST_CASE("mc inverts and matches numerology on random triples") {
    std::mt19937_64 rng(73);
    int done = 0;
    for (int attempt = 0; attempt < 40 && done < 8; ++attempt) {
        int rank = 2 + (attempt & 1);
        MonodromyTuple t = random_hypergeometric_tuple(rng, rank, 12);
        RootOfUnity lambda = random_mc_parameter(rng, 12);
        MonodromyTuple once;
        try {
            once = middle_convolution(t, lambda);
        } catch (const calc_error&) {
            continue; // degenerate draw
        }
        CHECK(product_is_one(once));
        CHECK(is_irreducible(once));

        NumerologyResult predicted = mc_numerology(local_data_of(t, 12), lambda);
        CHECK(predicted.new_rank == once.rank);
        CHECK(predicted.predicted == local_data_of(once, 12));

        MonodromyTuple back = middle_convolution(once, lambda.inverse());
        CHECK(back.rank == t.rank);
        CHECK(equivalent(back, t).equivalent);
        ++done;
    }
    CHECK(done == 8);
}

TEST_CASE("scripts replay the construction") {
    MonodromyTuple rank4 = middle_convolution(wedge_tuple(), RootOfUnity(Rational(1, 2)));
    MonodromyTuple sp4 = mt_twist(rank4, {RootOfUnity(Rational(1, 2)), RootOfUnity(),
                                          RootOfUnity(Rational(1, 2))});
    CHECK(local_data_of(sp4, 60) == catalog::sp4_local_data());

    ScriptTrace trace;
    MonodromyTuple six = apply_script(sp4, catalog::construction_script(), &trace, 60);
    CHECK(six.rank == 6);
    CHECK(product_is_one(six));
    CHECK(is_irreducible(six));
    CHECK(local_data_of(six, 60) == catalog::two_j2_local_data());
    std::vector<int> ranks;
    for (const auto& s : trace.stages) ranks.push_back(s.rank_after);
    CHECK(ranks == std::vector<int>{4, 5, 5, 6, 6});

    // the reduction script undoes it
    MonodromyTuple down = apply_script(six, catalog::reduction_script(), nullptr, 60);
    CHECK(down.rank == 4);
    CHECK(equivalent(down, sp4).equivalent);

    // empty script is the identity
    MonodromyTuple same = apply_script(sp4, {}, nullptr, 60);
    CHECK(same.matrices[0] == sp4.matrices[0]);

    // failures are annotated with the step index
    OpScript bad{OpStep{OpStep::Kind::MC, {}, RootOfUnity()}};
    try {
        apply_script(sp4, bad, nullptr, 60);
        CHECK(false);
    } catch (const calc_error& e) {
        CHECK(std::string(e.what()).find("step 1") != std::string::npos);
    }
}

TEST_CASE("wedge squares") {
    MonodromyTuple idt = default_points_tuple(
        4, {Matrix::identity(4), Matrix::identity(4), Matrix::identity(4)});
    MonodromyTuple w = wedge_square_tuple(idt);
    CHECK(w.rank == 6);
    CHECK(w.matrices[0] == Matrix::identity(6));

    CHECK(local_data_of(wedge_tuple(), 60) == catalog::wedge_local_data());
    auto forms = invariant_form(wedge_tuple().matrices, FormKind::Bilinear);
    REQUIRE(forms.size() == 1);
    CHECK(is_symmetric(forms[0]));
    CHECK(rank(forms[0]) == 6);
}

TEST_CASE("random sampling utilities") {
    std::mt19937_64 rng(79);
    MonodromyTuple t = random_hypergeometric_tuple(rng, 3, 12);
    CHECK(t.rank == 3);
    CHECK(product_is_one(t));
    CHECK(is_irreducible(t));
    for (int i = 0; i < 10; ++i) CHECK(!random_mc_parameter(rng, 12).is_one());
}
