#include "mckatz/tuples.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "mckatz/errors.hpp"

namespace mckatz {

namespace {

CycloScalar root_scalar(const RootOfUnity& r) { return root_to_scalar(r, r.order()); }

Matrix scaled(const RootOfUnity& r, const Matrix& m) { return root_scalar(r) * m; }

// Incremental span tracker over the field; rows are reduced against the
// stored echelon rows only as far as membership testing needs.
struct SpanBuilder {
    std::vector<std::vector<CycloScalar>> rows;
    std::vector<int> pivots;

    bool insert(std::vector<CycloScalar> v) {
        for (size_t k = 0; k < rows.size(); ++k) {
            const CycloScalar& c = v[pivots[k]];
            if (c.is_zero()) continue;
            CycloScalar f = c; // rows are pivot-normalized
            for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[k][j];
        }
        int piv = -1;
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) { piv = static_cast<int>(j); break; }
        if (piv < 0) return false;
        CycloScalar d = inverse(v[piv]);
        for (auto& x : v) x = d * x;
        rows.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    }

    int dim() const { return static_cast<int>(rows.size()); }
};

std::vector<CycloScalar> row_of(const Matrix& m) {
    std::vector<CycloScalar> v(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v[static_cast<size_t>(i) * m.cols() + j] = m.at(i, j);
    return v;
}

int count_nontrivial(const MonodromyTuple& t) {
    Matrix id = Matrix::identity(t.rank);
    int c = 0;
    for (const auto& m : t.matrices)
        if (m != id) ++c;
    return c;
}

} // namespace

void validate_tuple(const MonodromyTuple& t) {
    if (t.rank < 1) throw precondition_error("tuple rank must be positive");
    if (t.members() < 2) throw precondition_error("tuple needs at least two members");
    if (t.points.size() != t.matrices.size())
        throw precondition_error("tuple point labels and matrices differ in number");
    for (const auto& m : t.matrices)
        if (m.rows() != t.rank || m.cols() != t.rank)
            throw precondition_error("tuple member shape does not match the rank");
    Matrix prod = Matrix::identity(t.rank);
    for (const auto& m : t.matrices) prod = prod * m;
    if (prod != Matrix::identity(t.rank))
        throw product_violation("tuple members do not multiply to the identity");
}

MonodromyTuple default_points_tuple(int rank, std::vector<Matrix> mats) {
    MonodromyTuple t;
    t.rank = rank;
    t.matrices = std::move(mats);
    int r = static_cast<int>(t.matrices.size()) - 1;
    for (int i = 0; i < r; ++i) t.points.push_back(std::to_string(i));
    if (r >= 1) {
        t.points[0] = "0";
        if (r >= 2) t.points[1] = "1";
        for (int i = 2; i < r; ++i) t.points[i] = "p" + std::to_string(i);
    }
    t.points.push_back("inf");
    return t;
}

MonodromyTuple mt_twist(const MonodromyTuple& t, const std::vector<RootOfUnity>& lambdas) {
    validate_tuple(t);
    if (static_cast<int>(lambdas.size()) != t.members())
        throw precondition_error("twist needs one scalar per tuple member");
    Rational sum(0);
    for (const auto& l : lambdas) sum += l.exponent();
    if (frac_mod1(sum) != 0)
        throw product_violation("twist scalars do not multiply to 1 (exponent sum " +
                                format_rational(sum) + ")");
    MonodromyTuple out = t;
    for (int i = 0; i < t.members(); ++i)
        if (!lambdas[i].is_one()) out.matrices[i] = scaled(lambdas[i], out.matrices[i]);
    return out;
}

ConvolutionResult convolution(const MonodromyTuple& t, const RootOfUnity& lambda,
                              const RootOfUnity& first_slot_twist) {
    validate_tuple(t);
    int r = t.r();
    int n = t.rank;
    if (lambda.is_one())
        throw unsupported_parameter("convolution with scalar 1 loses the K/L intersection guarantee");
    if (r < 2) throw precondition_error("convolution needs at least three tuple members");
    if (count_nontrivial(t) < 2)
        throw precondition_error("convolution needs at least two nontrivial members");

    // The first-slot twist is the same as convolving the twisted tuple, so
    // fold it in up front.
    MonodromyTuple tt = t;
    if (!first_slot_twist.is_one()) {
        tt.matrices[0] = scaled(first_slot_twist, tt.matrices[0]);
        tt.matrices[r] = scaled(first_slot_twist.inverse(), tt.matrices[r]);
    }

    CycloScalar lv = root_scalar(lambda);
    const int big = n * r;
    std::vector<Matrix> bs;
    for (int i = 0; i < r; ++i) {
        Matrix b = Matrix::identity(big);
        for (int j = 0; j < r; ++j) {
            Matrix blk;
            if (j < i)
                blk = lv * (tt.matrices[j] - Matrix::identity(n));
            else if (j == i)
                blk = lv * tt.matrices[i];
            else
                blk = tt.matrices[j] - Matrix::identity(n);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) b.at(i * n + p, j * n + q) = blk.at(p, q);
        }
        bs.push_back(std::move(b));
    }
    Matrix prod = Matrix::identity(big);
    for (const auto& b : bs) prod = prod * b;
    bs.push_back(inverse(prod));

    ConvolutionResult res;
    res.big.rank = big;
    res.big.points = t.points;
    res.big.matrices = std::move(bs);

    // K: slot-embedded kernels of A_i - 1 (slot 1 already twisted above).
    Matrix k_rows(0, 0);
    bool k_any = false;
    for (int i = 0; i < r; ++i) {
        Matrix ker = kernel_basis(tt.matrices[i] - Matrix::identity(n));
        if (ker.rows() == 0) continue;
        Matrix emb(ker.rows(), big);
        for (int a = 0; a < ker.rows(); ++a)
            for (int j = 0; j < n; ++j) emb.at(a, i * n + j) = ker.at(a, j);
        k_rows = k_any ? vstack(k_rows, emb) : emb;
        k_any = true;
    }
    if (!k_any) k_rows = Matrix(0, big);

    // L: columns (A_2...A_r v, ..., A_r v, v) over v in ker(A_1...A_r lambda - 1).
    Matrix front = Matrix::identity(n);
    for (int i = 0; i < r; ++i) front = front * tt.matrices[i];
    Matrix lker = kernel_basis(lv * front - Matrix::identity(n));
    Matrix l_rows(lker.rows(), big);
    if (lker.rows() > 0) {
        std::vector<Matrix> suffix(r + 1);
        suffix[r] = Matrix::identity(n);
        for (int i = r - 1; i >= 1; --i) suffix[i] = tt.matrices[i] * suffix[i + 1];
        // suffix[i] = A_{i+1} ... A_r in 1-based slot terms (index shift below)
        for (int a = 0; a < lker.rows(); ++a) {
            Matrix vcol(n, 1);
            for (int j = 0; j < n; ++j) vcol.at(j, 0) = lker.at(a, j);
            for (int i = 1; i <= r; ++i) {
                Matrix seg = suffix[i] * vcol;
                for (int j = 0; j < n; ++j) l_rows.at(a, (i - 1) * n + j) = seg.at(j, 0);
            }
        }
    }

    res.k_basis = k_rows;
    res.l_basis = l_rows;
    res.k_dim = k_rows.rows();
    res.l_dim = l_rows.rows();
    res.kl_dim = rank(vstack(k_rows, l_rows));
    return res;
}

MonodromyTuple middle_convolution(const MonodromyTuple& t, const RootOfUnity& lambda) {
    if (lambda.is_one())
        throw unsupported_parameter("middle convolution with scalar 1 is not supported");
    if (!is_irreducible(t))
        throw precondition_error("middle convolution requires an irreducible tuple");
    ConvolutionResult conv = convolution(t, lambda);
    const int big = conv.big.rank;

    Echelon u = rref(vstack(conv.k_basis, conv.l_basis));
    int d = static_cast<int>(u.pivots.size());
    Matrix u_rows(d, big);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < big; ++j) u_rows.at(i, j) = u.reduced.at(i, j);

    std::vector<int> comp = greedy_complement(u_rows, big);
    int q = static_cast<int>(comp.size());

    // Column basis [span(U) | e_comp]; expressing B e_j in it and keeping the
    // complement coordinates realizes the action on the quotient.
    Matrix m(big, big);
    for (int c = 0; c < d; ++c)
        for (int j = 0; j < big; ++j) m.at(j, c) = u_rows.at(c, j);
    for (int s = 0; s < q; ++s) m.at(comp[s], d + s) = CycloScalar(1);
    Matrix minv = inverse(m);

    MonodromyTuple out;
    out.rank = q;
    out.points = t.points;
    for (const auto& b : conv.big.matrices) {
        Matrix cols(big, q);
        for (int s = 0; s < q; ++s)
            for (int j = 0; j < big; ++j) cols.at(j, s) = b.at(j, comp[s]);
        Matrix x = minv * cols;
        Matrix act(q, q);
        for (int i = 0; i < q; ++i)
            for (int s = 0; s < q; ++s) act.at(i, s) = x.at(d + i, s);
        out.matrices.push_back(std::move(act));
    }
    Matrix prod = Matrix::identity(q);
    for (const auto& mmat : out.matrices) prod = prod * mmat;
    if (prod != Matrix::identity(q))
        throw calc_error("internal: middle convolution quotient product is not 1");
    return out;
}

MonodromyTuple wedge_square_tuple(const MonodromyTuple& t) {
    validate_tuple(t);
    if (t.rank < 2) throw precondition_error("exterior square needs rank >= 2");
    MonodromyTuple out;
    out.rank = t.rank * (t.rank - 1) / 2;
    out.points = t.points;
    for (const auto& m : t.matrices) out.matrices.push_back(exterior_square(m));
    return out;
}

MonodromyTuple levelt_hypergeometric(const std::vector<Rational>& exp0,
                                     const std::vector<Rational>& exp_inf, long conductor) {
    if (exp0.empty() || exp0.size() != exp_inf.size())
        throw precondition_error("levelt needs two exponent lists of the same positive length");
    int n = static_cast<int>(exp0.size());
    for (const auto& a : exp0)
        for (const auto& b : exp_inf)
            if (frac_mod1(a) == frac_mod1(b))
                throw resonance_error("resonant exponent pair " + format_rational(a) + " vs " +
                                      format_rational(b));

    auto root_poly = [&](const std::vector<Rational>& exps, int sign) {
        std::vector<CycloScalar> roots;
        for (const auto& e : exps)
            roots.push_back(root_to_scalar(RootOfUnity(sign * e), conductor));
        return poly_from_roots(roots);
    };
    Matrix t_inf = companion(root_poly(exp_inf, +1));
    Matrix t0_inv = companion(root_poly(exp0, -1));
    Matrix t_1 = t0_inv * inverse(t_inf);

    MonodromyTuple t;
    t.rank = n;
    t.points = {"0", "1", "inf"};
    t.matrices = {inverse(t0_inv), t_1, t_inf};
    validate_tuple(t);
    // Generically the middle member is a pseudo-reflection; in the rank-one
    // case with expInf = -exp0 it degenerates to the identity.
    if (rank(t_1 - Matrix::identity(n)) > 1)
        throw calc_error("internal: middle member is not a pseudo-reflection");
    return t;
}

int matrix_algebra_dimension(const MonodromyTuple& t) {
    validate_tuple(t);
    int n = t.rank;
    SpanBuilder span;
    std::vector<Matrix> work;
    Matrix id = Matrix::identity(n);
    span.insert(row_of(id));
    work.push_back(id);
    // Word closure: right-multiplying the current basis by the generators
    // until the span stabilizes.
    for (size_t i = 0; i < work.size(); ++i) {
        for (const auto& g : t.matrices) {
            Matrix m = work[i] * g;
            if (span.insert(row_of(m))) {
                work.push_back(std::move(m));
                if (span.dim() == n * n) return n * n;
            }
        }
    }
    return span.dim();
}

bool is_irreducible(const MonodromyTuple& t) {
    return matrix_algebra_dimension(t) == t.rank * t.rank;
}

EquivalenceResult equivalent(const MonodromyTuple& a, const MonodromyTuple& b) {
    if (!is_irreducible(a) || !is_irreducible(b))
        throw precondition_error("equivalence test requires irreducible tuples");
    EquivalenceResult res;
    if (a.rank != b.rank || a.members() != b.members()) return res;
    std::vector<Matrix> space = solve_intertwiners(a.matrices, b.matrices);
    if (space.size() != 1) return res; // 0 for inequivalent; >1 impossible here
    Matrix s = space[0];
    if (rank(s) != a.rank) return res;
    res.equivalent = true;
    res.witness = s;
    return res;
}

MonodromyTuple apply_script(const MonodromyTuple& t, const OpScript& script, ScriptTrace* trace,
                            long conductor) {
    MonodromyTuple cur = t;
    for (size_t i = 0; i < script.size(); ++i) {
        const OpStep& step = script[i];
        try {
            cur = (step.kind == OpStep::Kind::MT) ? mt_twist(cur, step.lambdas)
                                                  : middle_convolution(cur, step.lambda);
        } catch (const std::exception& e) {
            throw calc_error("script step " + std::to_string(i + 1) + " (" +
                             (step.kind == OpStep::Kind::MT ? "MT" : "MC") + ") failed: " + e.what());
        }
        if (trace) {
            ScriptStageRecord rec;
            rec.index = static_cast<int>(i + 1);
            rec.op = (step.kind == OpStep::Kind::MT) ? "MT" : "MC";
            rec.rank_after = cur.rank;
            for (const auto& m : cur.matrices) rec.jordan_after.push_back(jordan_data(m, conductor));
            trace->stages.push_back(std::move(rec));
        }
    }
    return cur;
}

namespace {

Matrix block_diag(const std::vector<Matrix>& blocks) {
    int rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    Matrix out(rows, cols);
    int ro = 0, co = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out.at(ro + i, co + j) = b.at(i, j);
        ro += b.rows();
        co += b.cols();
    }
    return out;
}

void put_block(Matrix& m, int bi, int bj, const Matrix& blk) {
    for (int i = 0; i < blk.rows(); ++i)
        for (int j = 0; j < blk.cols(); ++j) m.at(bi * blk.rows() + i, bj * blk.cols() + j) = blk.at(i, j);
}

} // namespace

TransportReport transport_form(const MonodromyTuple& t, const Matrix& x, const RootOfUnity& lambda1,
                               const RootOfUnity& lambda2) {
    validate_tuple(t);
    int r = t.r();
    int n = t.rank;
    if (x.rows() != n || x.cols() != n || x.is_zero())
        throw precondition_error("form transport needs a nonzero n x n form");
    RootOfUnity lambda = lambda1 * lambda2;
    if (lambda.is_one()) throw unsupported_parameter("form transport needs lambda1*lambda2 != 1");

    bool x_sym = is_symmetric(x);
    if (!x_sym && !is_antisymmetric(x))
        throw precondition_error("form transport needs X with X^t = X or X^t = -X");
    for (int i = 0; i < r; ++i)
        if (transpose(t.matrices[i]) * x * t.matrices[i] != x)
            throw precondition_error("form transport: X is not invariant under member " +
                                     std::to_string(i + 1));

    CycloScalar l1 = root_scalar(lambda1), l2 = root_scalar(lambda2), lv = root_scalar(lambda);
    CycloScalar one(1);

    // Twisted tuple, its convolution at lambda^{-1}, the in-between twist,
    // and the outer convolution at lambda.
    std::vector<RootOfUnity> tw1(r + 1), tw2(r + 1), tw3(r + 1);
    tw1[0] = lambda1;
    tw1[r] = lambda1.inverse();
    tw2[0] = lambda1.inverse() * lambda2;
    tw2[r] = lambda1 * lambda2.inverse();
    tw3[0] = lambda2.inverse();
    tw3[r] = lambda2;
    MonodromyTuple twisted = mt_twist(t, tw1);
    ConvolutionResult conv1 = convolution(twisted, lambda.inverse());
    MonodromyTuple mid = mt_twist(conv1.big, tw2);
    ConvolutionResult conv2 = convolution(mid, lambda);
    MonodromyTuple b = mt_twist(conv2.big, tw3);

    const int nr = n * r;
    const int dim = nr * r;

    // H has every n x n block equal to X.
    Matrix h(nr, nr);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) put_block(h, i, j, x);

    const auto& a = t.matrices;
    Matrix id = Matrix::identity(n);
    Matrix a1l1 = l1 * a[0] - id;

    std::vector<Matrix> d2(r + 1), d4(r + 1);
    {
        std::vector<Matrix> slots(r);
        slots[0] = inverse(l2) * a[0] - id;
        for (int s = 1; s < r; ++s) slots[s] = a1l1;
        d2[1] = block_diag(slots);
    }
    for (int i = 2; i <= r; ++i) {
        std::vector<Matrix> slots(r, a[i - 1] - id);
        d2[i] = block_diag(slots);
    }
    Matrix d31;
    {
        std::vector<Matrix> slots(r);
        slots[0] = inverse(l2) * (a[0] - l1 * id);
        for (int s = 1; s < r; ++s) slots[s] = a1l1;
        d31 = block_diag(slots);
    }

    auto build_d4 = [&](int i, int offset) {
        // Zero first slot, A_i^{-1}-1 before the fixed slot, A_i^{-1}lambda-1
        // at it, (A_i^{-1}-1)lambda after it.
        int fix = std::min(std::max(i + offset, 2), r);
        Matrix ainv = inverse(a[i - 1]);
        std::vector<Matrix> slots(r);
        slots[0] = Matrix(n, n);
        for (int s = 2; s <= r; ++s) {
            if (s < fix)
                slots[s - 1] = ainv - id;
            else if (s == fix)
                slots[s - 1] = lv * ainv - id;
            else
                slots[s - 1] = lv * (ainv - id);
        }
        return block_diag(slots);
    };

    std::vector<Matrix> d1(r + 1);
    {
        std::vector<Matrix> slots(r);
        slots[0] = a1l1;
        for (int s = 1; s < r; ++s) slots[s] = a[s] - id;
        d1[1] = block_diag(slots);
    }
    CycloScalar lvinv = inverse(lv);
    for (int i = 2; i <= r; ++i) {
        std::vector<Matrix> slots(r);
        slots[0] = lvinv * a1l1;
        for (int s = 2; s <= r; ++s) {
            if (s < i)
                slots[s - 1] = lvinv * (a[s - 1] - id);
            else if (s == i)
                slots[s - 1] = lvinv * a[s - 1] - id;
            else
                slots[s - 1] = a[s - 1] - id;
        }
        d1[i] = block_diag(slots);
    }

    CycloScalar ratio = l1 * inverse(l2);
    CycloScalar cofac = one - ratio;

    TransportReport rep;
    rep.x_symmetric = x_sym;

    for (int offset : {0, 1, -1}) {
        for (int i = 2; i <= r; ++i) d4[i] = build_d4(i, offset);

        Matrix y0(dim, dim);
        for (int i = 1; i <= r; ++i)
            for (int j = 1; j <= r; ++j) {
                Matrix blk;
                if (i == 1 && j == 1)
                    blk = transpose(d2[1]) * h * d2[1];
                else if (i == 1)
                    blk = transpose(d31) * h * d2[j] + cofac * (transpose(d4[j]) * h);
                else if (j == 1)
                    blk = transpose(d2[i]) * h * d31 + cofac * (h * d4[i]);
                else
                    blk = ratio * (transpose(d2[i]) * h * d2[j]);
                for (int p = 0; p < nr; ++p)
                    for (int q = 0; q < nr; ++q) y0.at((i - 1) * nr + p, (j - 1) * nr + q) = blk.at(p, q);
            }
        Matrix dd = block_diag(std::vector<Matrix>(d1.begin() + 1, d1.end()));
        Matrix y = transpose(dd) * y0 * dd;

        bool inv_ok = true;
        for (int i = 0; i < r && inv_ok; ++i)
            inv_ok = (transpose(b.matrices[i]) * y * b.matrices[i] == y);
        if (!inv_ok && offset == 0 && r > 2) continue;

        rep.y = y;
        rep.fix_slot = offset;
        rep.y_invariant = inv_ok;
        rep.y_symmetry_matches = x_sym ? is_symmetric(y) : is_antisymmetric(y);

        // U stacks, slot by slot, ker(Ã_i - 1) + K + L from the inner
        // convolution level.
        Matrix u_rows(0, dim);
        bool any = false;
        for (int i = 0; i < r; ++i) {
            Matrix ker = kernel_basis(mid.matrices[i] - Matrix::identity(nr));
            Matrix w = vstack(vstack(ker, conv1.k_basis), conv1.l_basis);
            Echelon we = rref(w);
            for (size_t s = 0; s < we.pivots.size(); ++s) {
                Matrix row(1, dim);
                for (int j = 0; j < nr; ++j) row.at(0, i * nr + j) = we.reduced.at(static_cast<int>(s), j);
                u_rows = any ? vstack(u_rows, row) : row;
                any = true;
            }
        }
        rep.u_dim = any ? rank(u_rows) : 0;
        rep.quotient_dim = dim - rep.u_dim;
        bool kills = true;
        if (any) {
            Matrix prod = y * transpose(u_rows);
            kills = prod.is_zero();
        }
        rep.y_kills_u = kills;
        rep.y_rank = rank(y);
        rep.descends_nondegenerate = (rep.y_rank == rep.quotient_dim);
        if (inv_ok || r <= 2) break; // all offsets coincide for r = 2
    }
    return rep;
}

} // namespace mckatz
