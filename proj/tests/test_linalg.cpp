#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "mckatz/errors.hpp"
#include "mckatz/matrix.hpp"

using namespace mckatz;

namespace {

CycloScalar zeta(long num, long den, long conductor = 60) {
    return root_to_scalar(RootOfUnity(Rational(num, den)), conductor);
}

Matrix diag_roots(const std::vector<Rational>& exps, long conductor = 60) {
    int n = static_cast<int>(exps.size());
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = root_to_scalar(RootOfUnity(exps[i]), conductor);
    return m;
}

Matrix random_matrix(std::mt19937_64& rng, int rows, int cols, long conductor = 5) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    Matrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            std::vector<Rational> c(euler_phi(conductor));
            for (auto& v : c) v = Rational(coeff(rng));
            m.at(i, j) = make_cyclo(conductor, c);
        }
    return m;
}

Matrix random_invertible(std::mt19937_64& rng, int n, long conductor = 5) {
    for (;;) {
        Matrix s = random_matrix(rng, n, n, conductor);
        if (rank(s) == n) return s;
    }
}

// monic with the given low-first tail
CPoly monic(std::vector<CycloScalar> tail) {
    tail.push_back(CycloScalar(1));
    return CPoly(std::move(tail));
}

} // namespace

TEST_CASE("rank and kernel") {
    Matrix z(6, 6);
    CHECK(rank(z) == 0);
    CHECK(kernel_basis(z) == Matrix::identity(6));

    Matrix j = diag_roots({Rational(1, 2), Rational(1, 2), Rational(0), Rational(0), Rational(0),
                           Rational(0)});
    CHECK(rank(j - Matrix::identity(6)) == 2);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix m = random_matrix(rng, 4, 2) * random_matrix(rng, 2, 4);
        CHECK(rank(m) <= 2);
        Matrix ker = kernel_basis(m);
        CHECK(rank(m) + ker.rows() == 4);
        CHECK((m * transpose(ker)).is_zero());
    }
}

TEST_CASE("rref is canonical") {
    std::mt19937_64 rng(5);
    Matrix m = random_matrix(rng, 3, 5);
    Echelon e1 = rref(m);
    Echelon e2 = rref(m);
    CHECK(e1.reduced == e2.reduced);
    CHECK(e1.pivots == e2.pivots);
    for (size_t s = 0; s < e1.pivots.size(); ++s)
        CHECK(e1.reduced.at(static_cast<int>(s), e1.pivots[s]) == CycloScalar(1));
}

TEST_CASE("characteristic polynomials") {
    CPoly p = monic({CycloScalar(-1), CycloScalar(-1)}); // t^2 - t - 1
    CHECK(char_poly(companion(p)) == p);

    Matrix d = diag_roots({Rational(1, 6), Rational(5, 6)});
    CPoly cp = char_poly(d); // t^2 - t + 1 since z6 + z6^-1 = 1
    CHECK(cp == monic({CycloScalar(1), CycloScalar(-1)}));

    CPoly idp = char_poly(Matrix::identity(3)); // (t-1)^3
    CHECK(idp == monic({CycloScalar(-1), CycloScalar(3), CycloScalar(-3)}));
}

TEST_CASE("companion round trips") {
    CHECK(companion(monic({zeta(1, 3)})).at(0, 0) == CycloScalar(-1) * zeta(1, 3));

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 5; ++trial) {
        std::uniform_int_distribution<int> coeff(-3, 3);
        CPoly p = monic({CycloScalar(coeff(rng)), CycloScalar(coeff(rng)), CycloScalar(coeff(rng))});
        CHECK(char_poly(companion(p)) == p);
    }

    // hypergeometric infinity column: eigenvalue exponents taken mod 1
    std::vector<Rational> inf_exps{Rational(-11, 20), Rational(-3, 20), Rational(1, 20),
                                   Rational(13, 20)};
    CPoly q = CPoly::constant(CycloScalar(1));
    for (const Rational& e : inf_exps)
        q = q * CPoly(std::vector<CycloScalar>{CycloScalar(0) - root_to_scalar(RootOfUnity(e), 60),
                                               CycloScalar(1)});
    JordanData jd = jordan_data(companion(q), 60);
    REQUIRE(jd.size() == 4);
    CHECK(jd[0].eig.exponent() == Rational(1, 20));
    CHECK(jd[1].eig.exponent() == Rational(9, 20));
    CHECK(jd[2].eig.exponent() == Rational(13, 20));
    CHECK(jd[3].eig.exponent() == Rational(17, 20));
}

TEST_CASE("jordan data") {
    Matrix order2 = diag_roots({Rational(1, 2), Rational(1, 2), Rational(0), Rational(0),
                                Rational(0), Rational(0)});
    JordanData jd = jordan_data(order2, 60);
    JordanData expect;
    for (int k = 0; k < 4; ++k) expect.push_back({RootOfUnity(Rational(0)), 1});
    expect.push_back({RootOfUnity(Rational(1, 2)), 1});
    expect.push_back({RootOfUnity(Rational(1, 2)), 1});
    CHECK(jd == expect);

    Matrix uni(2, 2);
    uni.at(0, 0) = CycloScalar(1);
    uni.at(0, 1) = CycloScalar(1);
    uni.at(1, 1) = CycloScalar(1);
    JordanData ujd = jordan_data(uni, 60);
    REQUIRE(ujd.size() == 1);
    CHECK(ujd[0].size == 2);
    CHECK(ujd[0].eig.is_one());

    Matrix order10 = diag_roots({Rational(1, 10), Rational(3, 10), Rational(3, 5), Rational(2, 5),
                                 Rational(7, 10), Rational(9, 10)});
    JordanData tjd = jordan_data(order10, 60);
    REQUIRE(tjd.size() == 6);
    for (const auto& b : tjd) CHECK(b.size == 1);

    // golden-ratio eigenvalues are no roots of unity
    CHECK_THROWS_AS(jordan_data(companion(monic({CycloScalar(-1), CycloScalar(-1)})), 60),
                    eigenvalue_outside_field);
}

TEST_CASE("jordan data is conjugation invariant") {
    std::mt19937_64 rng(13);
    Matrix m = diag_roots({Rational(1, 5), Rational(1, 5), Rational(0)}, 5);
    m.at(0, 1) = CycloScalar(1); // a J(z5, 2) block
    JordanData base = jordan_data(m, 5);
    for (int trial = 0; trial < 3; ++trial) {
        Matrix s = random_invertible(rng, 3);
        CHECK(jordan_data(s * m * inverse(s), 5) == base);
    }
    CycloScalar prod(1);
    for (const auto& b : base)
        for (int k = 0; k < b.size; ++k) prod *= root_to_scalar(b.eig, 5);
    CHECK(prod == det(m));
}

TEST_CASE("intertwiner solver") {
    CHECK(solve_intertwiners({Matrix::identity(3)}, {Matrix::identity(3)}).size() == 9);

    Matrix order10 = diag_roots({Rational(1, 10), Rational(3, 10), Rational(3, 5), Rational(2, 5),
                                 Rational(7, 10), Rational(9, 10)});
    CHECK(solve_intertwiners({order10}, {order10}).size() == 6);

    // Schur: conjugating an irreducible pair pins the intertwiner line
    std::mt19937_64 rng(17);
    Matrix a1 = companion(monic({zeta(1, 5), CycloScalar(2)}));
    Matrix a2 = companion(monic({zeta(2, 5), CycloScalar(1)}));
    Matrix s = random_invertible(rng, 2);
    auto space = solve_intertwiners({a1, a2}, {s * a1 * inverse(s), s * a2 * inverse(s)});
    REQUIRE(space.size() == 1);
    Matrix w = space[0];
    // w is proportional to s
    CHECK(rank(w) == 2);
    Matrix ratio = inverse(s) * w;
    CHECK(ratio.at(0, 0) == ratio.at(1, 1));
    CHECK(ratio.at(0, 1) == CycloScalar(0));
    CHECK(ratio.at(1, 0) == CycloScalar(0));

    // the self system of an irreducible pair is exactly the scalar line
    auto self = solve_intertwiners({a1, a2}, {a1, a2});
    REQUIRE(self.size() == 1);
    Matrix c = self[0];
    CHECK(c.at(0, 1) == CycloScalar(0));
    CHECK(c.at(1, 0) == CycloScalar(0));
    CHECK(c.at(0, 0) == c.at(1, 1));
}

TEST_CASE("form predicates and scaling") {
    Matrix sym(2, 2), anti(2, 2);
    sym.at(0, 1) = CycloScalar(1);
    sym.at(1, 0) = CycloScalar(1);
    anti.at(0, 1) = CycloScalar(1);
    anti.at(1, 0) = CycloScalar(-1);
    CHECK(is_symmetric(sym));
    CHECK(!is_antisymmetric(sym));
    CHECK(is_antisymmetric(anti));
    CHECK(is_hermitian(sym));

    // i * hermitian scales back to hermitian
    Matrix h = Matrix::identity(2);
    h.at(0, 1) = zeta(1, 5);
    h.at(1, 0) = conjugate(zeta(1, 5));
    REQUIRE(is_hermitian(h));
    Matrix skew = zeta(1, 4) * h;
    CHECK(!is_hermitian(skew));
    auto rescaled = scale_to_hermitian(skew);
    REQUIRE(rescaled.has_value());
    CHECK(is_hermitian(*rescaled));

    Matrix pos = Matrix::identity(2);
    pos.at(0, 1) = CycloScalar(Rational(1, 2), 1);
    pos.at(1, 0) = CycloScalar(Rational(1, 2), 1);
    CHECK(hermitian_definiteness(pos) == 1);
    CHECK(hermitian_definiteness(CycloScalar(-1) * pos) == -1);
    Matrix indef(2, 2);
    indef.at(0, 0) = CycloScalar(1);
    indef.at(1, 1) = CycloScalar(-1);
    CHECK(hermitian_definiteness(indef) == 0);
}

TEST_CASE("invariant forms of the identity tuple") {
    CHECK(invariant_form({Matrix::identity(3), Matrix::identity(3)}, FormKind::Bilinear).size() ==
          9);
}

TEST_CASE("exterior square") {
    CHECK(exterior_square(Matrix::identity(4)) == Matrix::identity(6));

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 3; ++trial) {
        Matrix m = random_matrix(rng, 4, 4);
        CycloScalar d = det(m);
        CHECK(det(exterior_square(m)) == d * d * d);
    }
    // functorial: wedge of a product is the product of wedges
    Matrix a = random_matrix(rng, 4, 4), b = random_matrix(rng, 4, 4);
    CHECK(exterior_square(a * b) == exterior_square(a) * exterior_square(b));
}

TEST_CASE("misc matrix utilities") {
    std::mt19937_64 rng(29);
    Matrix m = random_invertible(rng, 3);
    CHECK(m * inverse(m) == Matrix::identity(3));
    CHECK(pow(m, 0) == Matrix::identity(3));
    CHECK(pow(m, 3) == m * m * m);
    CHECK(pow(m, -1) == inverse(m));
    CHECK(trace(Matrix::identity(5)) == CycloScalar(5));
    CHECK(transpose(transpose(m)) == m);
    CHECK(unvectorize(vectorize(m), 3, 3) == m);
    Matrix singular(2, 2);
    singular.at(0, 0) = CycloScalar(1);
    CHECK_THROWS_AS(inverse(singular), precondition_error);
}
