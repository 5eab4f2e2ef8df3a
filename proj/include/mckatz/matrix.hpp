#ifndef MCKATZ_MATRIX_HPP
#define MCKATZ_MATRIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "mckatz/cyclotomic.hpp"
#include "mckatz/polynomial.hpp"

namespace mckatz {

using CPoly = Poly<CycloScalar>;

// Dense matrix over a cyclotomic field.  Entries may carry different
// conductors; arithmetic lifts pairwise as needed.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    CycloScalar& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const CycloScalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

private:
    int rows_, cols_;
    std::vector<CycloScalar> e_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const CycloScalar& s, const Matrix& a);
bool operator==(const Matrix& a, const Matrix& b);
inline bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

Matrix transpose(const Matrix& a);
Matrix conjugate_entries(const Matrix& a);
CycloScalar trace(const Matrix& a);
CycloScalar det(const Matrix& a);
Matrix inverse(const Matrix& a); // throws precondition_error when singular
Matrix pow(const Matrix& a, long k);

// Reduced row echelon form with its pivot columns.  Fully canonical: the
// same input always yields the same output, which downstream code relies on
// for reproducible bases.
struct Echelon {
    Matrix reduced;
    std::vector<int> pivots;
};
Echelon rref(const Matrix& a);

int rank(const Matrix& a);

// Canonical kernel basis, one vector per row; built from the free columns
// of the reduced echelon form in ascending column order.
Matrix kernel_basis(const Matrix& a);

// Rows of `vectors` that are independent, appended greedily in row order to
// an (optional) starting span; returns the row indices kept.
std::vector<int> greedy_complement(const Matrix& span_rows, int ambient_dim);

// Stack two row-bases vertically.
Matrix vstack(const Matrix& a, const Matrix& b);

// Row vector of length rows*cols (row-major), and back.
Matrix vectorize(const Matrix& a);
Matrix unvectorize(const Matrix& v, int rows, int cols);

// Characteristic polynomial t^n + c_{n-1} t^{n-1} + ... + c_0 by the
// Faddeev-LeVerrier recurrence; exact over the field.
CPoly char_poly(const Matrix& a);

struct JordanBlock {
    RootOfUnity eig;
    int size = 1;
    bool operator==(const JordanBlock& o) const { return eig == o.eig && size == o.size; }
};

// Jordan block multiset, sorted by (exponent, size).
using JordanData = std::vector<JordanBlock>;

std::string format_jordan(const JordanData& j);

// Jordan data of a quasi-unipotent matrix: eigenvalues are searched among
// the N-th roots of unity for the given conductor, block sizes read off the
// rank sequence of (M - alpha I)^j.  Throws eigenvalue_outside_field when
// the characteristic polynomial has other roots, reporting the leftover
// factor.
JordanData jordan_data(const Matrix& m, long conductor);

// Solutions X of X A_i = B_i X for all i; canonical basis.
std::vector<Matrix> solve_intertwiners(const std::vector<Matrix>& a, const std::vector<Matrix>& b);

enum class FormKind { Bilinear, Sesquilinear };

// Basis of the space of invariant forms G: T^t G T = G (bilinear) or
// conj(T)^t G T = G (sesquilinear) for every T in `mats`.
std::vector<Matrix> invariant_form(const std::vector<Matrix>& mats, FormKind kind);

bool is_symmetric(const Matrix& g);
bool is_antisymmetric(const Matrix& g);
bool is_hermitian(const Matrix& g);

// Scale g so that conj(g)^t == g; requires the line K*g to be stable under
// the conjugate-transpose involution.
std::optional<Matrix> scale_to_hermitian(const Matrix& g);

// Certified definiteness of a hermitian matrix via signs of leading
// principal minors: +1 positive definite, -1 negative definite, 0 neither.
int hermitian_definiteness(const Matrix& h);

// Companion matrix of a monic polynomial: ones on the subdiagonal, negated
// coefficients in the last column.
Matrix companion(const CPoly& p);

// Exterior square on the basis e_i ^ e_j, (i < j) in lexicographic order.
Matrix exterior_square(const Matrix& m);

} // namespace mckatz

#endif
