#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mckatz/catalog.hpp"
#include "mckatz/errors.hpp"
#include "mckatz/tuples.hpp"

using namespace mckatz;

namespace {

MonodromyTuple toy_tuple() {
    // (-1, -1, 1) over the conductor-6 field
    Matrix m1(1, 1), m2(1, 1), m3(1, 1);
    m1.at(0, 0) = root_to_scalar(RootOfUnity(Rational(1, 2)), 6);
    m2.at(0, 0) = root_to_scalar(RootOfUnity(Rational(1, 2)), 6);
    m3.at(0, 0) = CycloScalar(1);
    return default_points_tuple(1, {m1, m2, m3});
}

const MonodromyTuple& wedge_tuple() {
    static MonodromyTuple t = wedge_square_tuple(levelt_hypergeometric(
        catalog::hypergeometric4_exp0(), catalog::hypergeometric4_exp_inf(), 60));
    return t;
}

const MonodromyTuple& sp4_tuple() {
    static MonodromyTuple t = [] {
        MonodromyTuple rank4 = middle_convolution(wedge_tuple(), RootOfUnity(Rational(1, 2)));
        return mt_twist(rank4, {RootOfUnity(Rational(1, 2)), RootOfUnity(),
                                RootOfUnity(Rational(1, 2))});
    }();
    return t;
}

Matrix unique_form(const MonodromyTuple& t, FormKind kind) {
    auto forms = invariant_form(t.matrices, kind);
    REQUIRE(forms.size() == 1);
    return forms[0];
}

} // namespace

TEST_CASE("transport on a rank one tuple") {
    Matrix x(1, 1);
    x.at(0, 0) = CycloScalar(1);
    TransportReport rep = transport_form(toy_tuple(), x, RootOfUnity(Rational(1, 3)),
                                         RootOfUnity(Rational(1, 3)));
    CHECK(rep.y_invariant);
    CHECK(rep.y_symmetry_matches);
    CHECK(rep.y_kills_u);
    CHECK(rep.u_dim == 2);
    CHECK(rep.quotient_dim == 2);
    CHECK(rep.y_rank == 1);
    CHECK(!rep.descends_nondegenerate);
}

TEST_CASE("transport of the symmetric wedge form") {
    Matrix x = unique_form(wedge_tuple(), FormKind::Bilinear);
    CHECK(is_symmetric(x));
    TransportReport rep =
        transport_form(wedge_tuple(), x, RootOfUnity(), RootOfUnity(Rational(1, 2)));
    CHECK(rep.y_invariant);
    CHECK(rep.y_symmetry_matches);
    CHECK(rep.y_kills_u);
    CHECK(rep.u_dim == 18);
    CHECK(rep.quotient_dim == 6);
    CHECK(rep.y_rank == 6);
    CHECK(rep.descends_nondegenerate);
}

TEST_CASE("transport of the antisymmetric rank four form") {
    Matrix x = unique_form(sp4_tuple(), FormKind::Bilinear);
    CHECK(is_antisymmetric(x));
    // lambda1*lambda2 = 2/5 + 1/6 = 17/30, the outer convolution parameter of
    // the rank-6 construction; the induced form descends to its symplectic form.
    TransportReport rep = transport_form(sp4_tuple(), x, RootOfUnity(Rational(2, 5)),
                                         RootOfUnity(Rational(1, 6)));
    CHECK(rep.y_invariant);
    CHECK(rep.y_symmetry_matches);
    CHECK(rep.y_kills_u);
    CHECK(rep.u_dim == 10);
    CHECK(rep.quotient_dim == 6);
    CHECK(rep.y_rank == 6);
    CHECK(rep.descends_nondegenerate);
}

TEST_CASE("transport rejects bad hypotheses") {
    Matrix x = unique_form(wedge_tuple(), FormKind::Bilinear);

    // lambda1 * lambda2 = 1 has no twisted convolution
    CHECK_THROWS_AS(transport_form(wedge_tuple(), x, RootOfUnity(Rational(1, 3)),
                                   RootOfUnity(Rational(2, 3))),
                    unsupported_parameter);

    // a non-invariant matrix is not a form for the tuple
    Matrix junk = Matrix::identity(6);
    junk.at(0, 1) = CycloScalar(1);
    CHECK_THROWS_AS(transport_form(wedge_tuple(), junk, RootOfUnity(),
                                   RootOfUnity(Rational(1, 2))),
                    precondition_error);

    // invariant but neither symmetric nor antisymmetric: scalar tuple with a
    // generic invertible matrix (everything is invariant for scalars)
    Matrix m1 = root_to_scalar(RootOfUnity(Rational(1, 3)), 6) * Matrix::identity(2);
    Matrix m2 = root_to_scalar(RootOfUnity(Rational(1, 3)), 6) * Matrix::identity(2);
    Matrix m3 = root_to_scalar(RootOfUnity(Rational(1, 3)), 6) * Matrix::identity(2);
    MonodromyTuple scalars = default_points_tuple(2, {m1, m2, m3});
    Matrix mixed(2, 2);
    mixed.at(0, 0) = CycloScalar(1);
    mixed.at(0, 1) = CycloScalar(1);
    mixed.at(1, 1) = CycloScalar(1);
    CHECK_THROWS_AS(transport_form(scalars, mixed, RootOfUnity(Rational(1, 3)),
                                   RootOfUnity(Rational(1, 3))),
                    precondition_error);
}
