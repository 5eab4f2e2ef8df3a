#include "mckatz/rigidity.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mckatz/errors.hpp"

namespace mckatz {

namespace {

void sort_blocks(JordanData& jd) {
    std::sort(jd.begin(), jd.end(), [](const JordanBlock& a, const JordanBlock& b) {
        if (a.eig.exponent() != b.eig.exponent()) return a.eig.exponent() < b.eig.exponent();
        return a.size < b.size;
    });
}

int total_size(const JordanData& jd) {
    int s = 0;
    for (const auto& b : jd) s += b.size;
    return s;
}

} // namespace

void validate_local_data(const LocalData& d) {
    if (d.rank < 1) throw precondition_error("local data rank must be positive");
    if (d.members() < 2) throw precondition_error("local data needs at least two members");
    Rational det_sum(0);
    for (const auto& jd : d.points) {
        if (total_size(jd) != d.rank)
            throw precondition_error("local data block sizes do not sum to the rank");
        for (const auto& b : jd) {
            if (b.size < 1) throw precondition_error("local data block sizes must be positive");
            det_sum += b.size * b.eig.exponent();
        }
    }
    if (frac_mod1(det_sum) != 0)
        throw product_violation("local data violates the determinant product condition");
}

LocalData local_data_of(const MonodromyTuple& t, long conductor) {
    validate_tuple(t);
    LocalData d;
    d.rank = t.rank;
    for (const auto& m : t.matrices) d.points.push_back(jordan_data(m, conductor));
    return d;
}

int dim_cent_gl(const JordanData& jd) {
    std::map<Rational, std::vector<int>> by_eig;
    for (const auto& b : jd) by_eig[b.eig.exponent()].push_back(b.size);
    int dim = 0;
    for (const auto& [e, sizes] : by_eig)
        for (int a : sizes)
            for (int b : sizes) dim += std::min(a, b);
    return dim;
}

int dim_cent_sp(const Matrix& m, const Matrix& omega) {
    int n = m.rows();
    if (!m.is_square() || omega.rows() != n || omega.cols() != n)
        throw precondition_error("symplectic centralizer needs square matrices of equal size");
    // Unknown Z, row-major; rows: ZM - MZ = 0 then Z^t omega + omega Z = 0.
    Matrix sys(2 * n * n, n * n);
    auto var = [n](int i, int j) { return i * n + j; };
    int row = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j, ++row) {
            for (int k = 0; k < n; ++k) {
                sys.at(row, var(i, k)) += m.at(k, j);
                sys.at(row, var(k, j)) -= m.at(i, k);
            }
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j, ++row) {
            // (Z^t omega)_{ij} + (omega Z)_{ij}
            for (int k = 0; k < n; ++k) {
                sys.at(row, var(k, i)) += omega.at(k, j);
                sys.at(row, var(k, j)) += omega.at(i, k);
            }
        }
    return n * n - rank(sys);
}

RigidityReport scott_and_indices(const LocalData& d) {
    validate_local_data(d);
    RigidityReport rep;
    for (const auto& jd : d.points) rep.cent_dims.push_back(dim_cent_gl(jd));
    for (int c : rep.cent_dims) rep.sum += c;
    rep.bound = (d.r() - 1) * d.rank * d.rank + 2;
    rep.linearly_rigid = (rep.sum == rep.bound);
    return rep;
}

NumerologyResult mc_numerology(const LocalData& d, const RootOfUnity& lambda) {
    validate_local_data(d);
    if (lambda.is_one())
        throw unsupported_parameter("numerology for middle convolution needs lambda != 1");
    int r = d.r();
    int n = d.rank;
    RootOfUnity one;
    RootOfUnity linv = lambda.inverse();

    int rk_sum = 0;
    for (int i = 0; i < r; ++i)
        for (const auto& b : d.points[i]) rk_sum += (b.eig == one) ? b.size - 1 : b.size;
    int rk_last = 0;
    for (const auto& b : d.points[r]) rk_last += (b.eig == lambda) ? b.size - 1 : b.size;
    int new_rank = rk_sum + rk_last - n;
    if (new_rank < 1) throw calc_error("numerology: predicted rank " + std::to_string(new_rank));

    NumerologyResult res;
    res.new_rank = new_rank;
    res.predicted.rank = new_rank;
    for (int i = 0; i <= r; ++i) {
        JordanData out;
        bool last = (i == r);
        for (const auto& b : d.points[i]) {
            RootOfUnity e = b.eig;
            int l = b.size;
            if (!last) {
                if (e == one) {
                    if (l > 1) out.push_back({lambda, l - 1});
                } else if (e == linv) {
                    out.push_back({one, l + 1});
                } else {
                    out.push_back({e * lambda, l});
                }
            } else {
                if (e == lambda) {
                    if (l > 1) out.push_back({one, l - 1});
                } else if (e == one) {
                    out.push_back({linv, l + 1});
                } else {
                    out.push_back({e * linv, l});
                }
            }
        }
        int fill = new_rank - total_size(out);
        if (fill < 0) throw calc_error("numerology: block sizes overflow the predicted rank");
        for (int k = 0; k < fill; ++k) out.push_back({last ? linv : one, 1});
        sort_blocks(out);
        res.predicted.points.push_back(std::move(out));
    }
    validate_local_data(res.predicted);
    return res;
}

LocalData mt_local(const LocalData& d, const std::vector<RootOfUnity>& lambdas) {
    validate_local_data(d);
    if (static_cast<int>(lambdas.size()) != d.members())
        throw precondition_error("twist needs one scalar per member");
    Rational sum(0);
    for (const auto& l : lambdas) sum += l.exponent();
    if (frac_mod1(sum) != 0)
        throw product_violation("twist scalars do not multiply to 1");
    LocalData out = d;
    for (int i = 0; i < d.members(); ++i) {
        for (auto& b : out.points[i]) b.eig = b.eig * lambdas[i];
        sort_blocks(out.points[i]);
    }
    return out;
}

KatzReduction katz_reduce(const LocalData& start, int max_steps) {
    validate_local_data(start);
    KatzReduction out;
    LocalData cur = start;
    for (int step = 0; step < max_steps && cur.rank > 1; ++step) {
        int r = cur.r();
        std::vector<RootOfUnity> twist(r + 1);
        Rational acc(0);
        for (int i = 0; i < r; ++i) {
            // Dominant eigenvalue: largest total multiplicity, then smallest
            // exponent.
            std::map<Rational, int> mult;
            for (const auto& b : cur.points[i]) mult[b.eig.exponent()] += b.size;
            Rational best_e(0);
            int best_m = -1;
            for (const auto& [e, m] : mult)
                if (m > best_m) { best_m = m; best_e = e; }
            twist[i] = RootOfUnity(-best_e);
            acc += twist[i].exponent();
        }
        twist[r] = RootOfUnity(-acc);
        LocalData twisted = mt_local(cur, twist);

        std::vector<RootOfUnity> cands;
        for (const auto& b : twisted.points[r])
            if (!b.eig.is_one() &&
                std::find(cands.begin(), cands.end(), b.eig) == cands.end())
                cands.push_back(b.eig);
        std::sort(cands.begin(), cands.end());

        bool found = false;
        RootOfUnity best_lambda;
        NumerologyResult best_num;
        for (const auto& l : cands) {
            NumerologyResult num = mc_numerology(twisted, l);
            if (!found || num.new_rank < best_num.new_rank) {
                found = true;
                best_lambda = l;
                best_num = num;
            }
        }
        if (!found || best_num.new_rank >= cur.rank) break; // stalled

        cur = best_num.predicted;
        KatzStep rec;
        rec.twist = twist;
        rec.lambda = best_lambda;
        rec.rank_after = cur.rank;
        rec.data_after = cur;
        out.steps.push_back(std::move(rec));
    }
    out.final_data = cur;
    out.reached_rank_one = (cur.rank == 1);
    return out;
}

std::string format_local_data(const LocalData& d) {
    std::ostringstream os;
    os << "rank " << d.rank << ":";
    for (int i = 0; i < d.members(); ++i) os << " " << format_jordan(d.points[i]);
    return os.str();
}

} // namespace mckatz
