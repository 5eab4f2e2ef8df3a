#include "mckatz/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mckatz/errors.hpp"

namespace mckatz {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = CycloScalar(1);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& v : e_)
        if (!v.is_zero()) return false;
    return true;
}

namespace {

void require_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw precondition_error(std::string("shape mismatch in matrix ") + op);
}

} // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "addition");
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) + b.at(i, j);
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b, "subtraction");
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j) - b.at(i, j);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw precondition_error("shape mismatch in matrix product");
    Matrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const CycloScalar& f = a.at(i, k);
            if (f.is_zero()) continue;
            for (int j = 0; j < b.cols(); ++j) {
                if (b.at(k, j).is_zero()) continue;
                out.at(i, j) += f * b.at(k, j);
            }
        }
    return out;
}

Matrix operator*(const CycloScalar& s, const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = s * a.at(i, j);
    return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != b.at(i, j)) return false;
    return true;
}

Matrix transpose(const Matrix& a) {
    Matrix out(a.cols(), a.rows());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
    return out;
}

Matrix conjugate_entries(const Matrix& a) {
    Matrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = conjugate(a.at(i, j));
    return out;
}

CycloScalar trace(const Matrix& a) {
    CycloScalar t;
    for (int i = 0; i < a.rows(); ++i) t += a.at(i, i);
    return t;
}

Matrix pow(const Matrix& a, long k) {
    if (!a.is_square()) throw precondition_error("power of a non-square matrix");
    Matrix acc = Matrix::identity(a.rows());
    Matrix base = a;
    if (k < 0) {
        base = inverse(base);
        k = -k;
    }
    for (; k > 0; k >>= 1) {
        if (k & 1) acc = acc * base;
        if (k > 1) base = base * base;
    }
    return acc;
}

Echelon rref(const Matrix& a) {
    Echelon e{a, {}};
    Matrix& m = e.reduced;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!m.at(i, col).is_zero()) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
        CycloScalar d = inverse(m.at(row, col));
        for (int j = col; j < m.cols(); ++j) m.at(row, j) = d * m.at(row, j);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col).is_zero()) continue;
            CycloScalar f = m.at(i, col);
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

int rank(const Matrix& a) { return static_cast<int>(rref(a).pivots.size()); }

Matrix kernel_basis(const Matrix& a) {
    Echelon e = rref(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int j = 0; j < a.cols(); ++j)
        if (!is_pivot[j]) free_cols.push_back(j);
    Matrix out(static_cast<int>(free_cols.size()), a.cols());
    for (size_t v = 0; v < free_cols.size(); ++v) {
        int f = free_cols[v];
        out.at(static_cast<int>(v), f) = CycloScalar(1);
        for (size_t r = 0; r < e.pivots.size(); ++r)
            out.at(static_cast<int>(v), e.pivots[r]) = -e.reduced.at(static_cast<int>(r), f);
    }
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw precondition_error("shape mismatch in vstack");
    Matrix out(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
    return out;
}

std::vector<int> greedy_complement(const Matrix& span_rows, int ambient_dim) {
    std::vector<int> picked;
    Matrix current = span_rows;
    int r = rank(current);
    for (int j = 0; j < ambient_dim && r < ambient_dim; ++j) {
        Matrix cand(1, ambient_dim);
        cand.at(0, j) = CycloScalar(1);
        Matrix test = vstack(current, cand);
        int r2 = rank(test);
        if (r2 > r) {
            picked.push_back(j);
            current = test;
            r = r2;
        }
    }
    return picked;
}

Matrix vectorize(const Matrix& a) {
    Matrix out(1, a.rows() * a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) out.at(0, i * a.cols() + j) = a.at(i, j);
    return out;
}

Matrix unvectorize(const Matrix& v, int rows, int cols) {
    if (v.rows() != 1 || v.cols() != rows * cols)
        throw precondition_error("shape mismatch in unvectorize");
    Matrix out(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = v.at(0, i * cols + j);
    return out;
}

Matrix inverse(const Matrix& a) {
    if (!a.is_square()) throw precondition_error("inverse of a non-square matrix");
    int n = a.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, n + i) = CycloScalar(1);
    }
    Echelon e = rref(aug);
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(e.pivots.size()) <= i || e.pivots[i] != i)
            throw precondition_error("matrix is singular");
    Matrix out(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = e.reduced.at(i, n + j);
    return out;
}

CPoly char_poly(const Matrix& a) {
    if (!a.is_square()) throw precondition_error("char_poly of a non-square matrix");
    int n = a.rows();
    std::vector<CycloScalar> coeffs(n + 1);
    coeffs[n] = CycloScalar(1);
    Matrix m = a;
    for (int k = 1; k <= n; ++k) {
        CycloScalar ck = CycloScalar(-1) * trace(m) / CycloScalar(k);
        coeffs[n - k] = ck;
        if (k < n) {
            Matrix shifted = m;
            for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
            m = a * shifted;
        }
    }
    return CPoly(std::move(coeffs));
}

CycloScalar det(const Matrix& a) {
    CPoly p = char_poly(a);
    CycloScalar c0 = p.coeff(0);
    return (a.rows() % 2 == 0) ? c0 : -c0;
}

std::string format_jordan(const JordanData& j) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        os << "(" << format_rational(j[i].eig.exponent()) << "; " << j[i].size << ")";
    }
    os << "]";
    return os.str();
}

JordanData jordan_data(const Matrix& m, long conductor) {
    if (!m.is_square()) throw precondition_error("jordan_data of a non-square matrix");
    int n = m.rows();
    CPoly p = char_poly(m);
    JordanData out;
    int accounted = 0;
    std::vector<std::pair<RootOfUnity, int>> found; // eigenvalue, algebraic multiplicity
    for (long k = 0; k < conductor; ++k) {
        RootOfUnity r{Rational(k, conductor)};
        CycloScalar alpha = root_to_scalar(r, conductor);
        if (!p(alpha).is_zero()) continue;
        Matrix shifted = m;
        for (int i = 0; i < n; ++i) shifted.at(i, i) -= alpha;
        // ranks r_j of (M - alpha)^j; blocks of size >= j number r_{j-1} - r_j.
        std::vector<int> ranks{n};
        Matrix power = shifted;
        while (true) {
            int rj = rank(power);
            ranks.push_back(rj);
            if (rj == ranks[ranks.size() - 2]) break;
            power = power * shifted;
        }
        int mult = 0;
        for (size_t j = 1; j < ranks.size(); ++j) {
            int ge_j = ranks[j - 1] - ranks[j];
            int ge_j1 = (j + 1 < ranks.size()) ? ranks[j] - ranks[j + 1] : 0;
            int exactly_j = ge_j - ge_j1;
            for (int b = 0; b < exactly_j; ++b) out.push_back({r, static_cast<int>(j)});
            mult += static_cast<int>(j) * exactly_j;
        }
        accounted += mult;
        found.emplace_back(r, mult);
    }
    if (accounted != n) {
        // Divide off the recognized roots and report what is left.
        CPoly rem = p;
        for (const auto& [r, mult] : found) {
            CycloScalar alpha = root_to_scalar(r, conductor);
            CPoly lin(std::vector<CycloScalar>{-alpha, CycloScalar(1)});
            for (int i = 0; i < mult; ++i) rem = divmod(rem, lin).first;
        }
        std::ostringstream os;
        os << "eigenvalues outside the roots of unity of conductor " << conductor
           << "; unexplained characteristic factor of degree " << rem.degree() << ": ";
        for (long i = 0; i <= rem.degree(); ++i) {
            if (i) os << " + ";
            os << "(" << format_cyclo(rem.coeff(i)) << ")t^" << i;
        }
        throw eigenvalue_outside_field(os.str());
    }
    std::sort(out.begin(), out.end(), [](const JordanBlock& a, const JordanBlock& b) {
        if (a.eig.exponent() != b.eig.exponent()) return a.eig.exponent() < b.eig.exponent();
        return a.size < b.size;
    });
    return out;
}

std::vector<Matrix> solve_intertwiners(const std::vector<Matrix>& a, const std::vector<Matrix>& b) {
    if (a.empty() || a.size() != b.size())
        throw precondition_error("intertwiner solve needs matching nonempty lists");
    int n = a[0].cols(), m = b[0].rows();
    for (const auto& mat : a)
        if (mat.rows() != n || mat.cols() != n) throw precondition_error("left list not square/uniform");
    for (const auto& mat : b)
        if (mat.rows() != m || mat.cols() != m) throw precondition_error("right list not square/uniform");
    // Unknown X is m x n, row-major in vec(X); equations X A_i - B_i X = 0.
    int unknowns = m * n;
    Matrix sys(static_cast<int>(a.size()) * unknowns, unknowns);
    int row = 0;
    for (size_t t = 0; t < a.size(); ++t) {
        for (int p = 0; p < m; ++p)
            for (int q = 0; q < n; ++q) {
                for (int s = 0; s < n; ++s) sys.at(row, p * n + s) += a[t].at(s, q);
                for (int s = 0; s < m; ++s) sys.at(row, s * n + q) -= b[t].at(p, s);
                ++row;
            }
    }
    Matrix null = kernel_basis(sys);
    std::vector<Matrix> out;
    for (int i = 0; i < null.rows(); ++i) {
        Matrix v(1, unknowns);
        for (int j = 0; j < unknowns; ++j) v.at(0, j) = null.at(i, j);
        out.push_back(unvectorize(v, m, n));
    }
    return out;
}

std::vector<Matrix> invariant_form(const std::vector<Matrix>& mats, FormKind kind) {
    if (mats.empty()) throw precondition_error("invariant_form needs at least one matrix");
    int n = mats[0].rows();
    for (const auto& m : mats)
        if (m.rows() != n || m.cols() != n) throw precondition_error("invariant_form: shape mismatch");
    // Unknown G, equations S_i^t G T_i - G = 0 with S_i = T_i (bilinear) or
    // S_i = conj(T_i) (sesquilinear).
    int unknowns = n * n;
    Matrix sys(static_cast<int>(mats.size()) * unknowns, unknowns);
    int row = 0;
    for (const auto& t : mats) {
        Matrix s = (kind == FormKind::Sesquilinear) ? conjugate_entries(t) : t;
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q) {
                // (S^t G T)_{pq} = sum_{u,v} S_{up} G_{uv} T_{vq}
                for (int u = 0; u < n; ++u) {
                    if (s.at(u, p).is_zero()) continue;
                    for (int v = 0; v < n; ++v) {
                        if (t.at(v, q).is_zero()) continue;
                        sys.at(row, u * n + v) += s.at(u, p) * t.at(v, q);
                    }
                }
                sys.at(row, p * n + q) -= CycloScalar(1);
                ++row;
            }
    }
    Matrix null = kernel_basis(sys);
    std::vector<Matrix> out;
    for (int i = 0; i < null.rows(); ++i) {
        Matrix v(1, unknowns);
        for (int j = 0; j < unknowns; ++j) v.at(0, j) = null.at(i, j);
        out.push_back(unvectorize(v, n, n));
    }
    return out;
}

bool is_symmetric(const Matrix& g) { return transpose(g) == g; }
bool is_antisymmetric(const Matrix& g) { return transpose(g) == (CycloScalar(-1) * g); }
bool is_hermitian(const Matrix& g) { return conjugate_entries(transpose(g)) == g; }

std::optional<Matrix> scale_to_hermitian(const Matrix& g) {
    if (g.is_zero()) return std::nullopt;
    Matrix gd = conjugate_entries(transpose(g));
    // Need gd == gamma * g for a scalar gamma with gamma conj(gamma) = 1.
    CycloScalar gamma;
    bool have = false;
    for (int i = 0; i < g.rows() && !have; ++i)
        for (int j = 0; j < g.cols() && !have; ++j)
            if (!g.at(i, j).is_zero()) {
                gamma = gd.at(i, j) / g.at(i, j);
                have = true;
            }
    if (!have || gd != gamma * g) return std::nullopt;
    // Solve c/conj(c) = gamma: c = 1 + gamma works unless gamma = -1, where
    // any purely imaginary unit does.
    CycloScalar one(1);
    CycloScalar c = one + gamma;
    if (c.is_zero()) {
        long n = std::lcm(4L, g.at(0, 0).conductor());
        CycloScalar i_unit = root_to_scalar(RootOfUnity(Rational(1, 4)), n);
        c = i_unit * (one - gamma);
    }
    Matrix h = c * g;
    if (!is_hermitian(h)) return std::nullopt;
    return h;
}

int hermitian_definiteness(const Matrix& h) {
    if (!h.is_square() || !is_hermitian(h))
        throw precondition_error("definiteness test requires a hermitian matrix");
    int n = h.rows();
    std::vector<int> signs;
    for (int k = 1; k <= n; ++k) {
        Matrix lead(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lead.at(i, j) = h.at(i, j);
        signs.push_back(real_sign(det(lead)));
    }
    bool pos = std::all_of(signs.begin(), signs.end(), [](int s) { return s > 0; });
    bool neg = true;
    for (int k = 1; k <= n; ++k)
        if (signs[k - 1] != ((k % 2) ? -1 : 1)) neg = false;
    if (pos) return 1;
    if (neg) return -1;
    return 0;
}

Matrix companion(const CPoly& p) {
    long n = p.degree();
    if (n < 1) throw precondition_error("companion matrix needs degree >= 1");
    if (!(p.leading() == CycloScalar(1))) throw precondition_error("companion matrix needs a monic polynomial");
    Matrix c(static_cast<int>(n), static_cast<int>(n));
    for (long i = 0; i + 1 < n; ++i) c.at(static_cast<int>(i) + 1, static_cast<int>(i)) = CycloScalar(1);
    for (long i = 0; i < n; ++i) c.at(static_cast<int>(i), static_cast<int>(n) - 1) = -p.coeff(i);
    return c;
}

Matrix exterior_square(const Matrix& m) {
    if (!m.is_square()) throw precondition_error("exterior square of a non-square matrix");
    int n = m.rows();
    std::vector<std::pair<int, int>> basis;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) basis.emplace_back(i, j);
    int d = static_cast<int>(basis.size());
    Matrix out(d, d);
    for (int a = 0; a < d; ++a) {
        auto [i, j] = basis[a];
        for (int b = 0; b < d; ++b) {
            auto [k, l] = basis[b];
            out.at(a, b) = m.at(i, k) * m.at(j, l) - m.at(i, l) * m.at(j, k);
        }
    }
    return out;
}

} // namespace mckatz
