#ifndef MCKATZ_RIGIDITY_HPP
#define MCKATZ_RIGIDITY_HPP

#include <string>
#include <vector>

#include "mckatz/tuples.hpp"

namespace mckatz {

// Jordan data of every member of a tuple, detached from the matrices.  This
// is all the numerology functions need.
struct LocalData {
    int rank = 0;
    std::vector<JordanData> points;

    int members() const { return static_cast<int>(points.size()); }
    int r() const { return members() - 1; }
};

inline bool operator==(const LocalData& a, const LocalData& b) {
    return a.rank == b.rank && a.points == b.points;
}

// Checks block sizes against the rank and the determinant product condition.
void validate_local_data(const LocalData& d);

LocalData local_data_of(const MonodromyTuple& t, long conductor);

// Centralizer dimension in gl_n from Jordan data: sum of min(l_i, l_j) over
// block pairs with equal eigenvalue.
int dim_cent_gl(const JordanData& jd);

// Centralizer dimension inside the symplectic Lie algebra of the form omega:
// solutions of ZM = MZ with Z^t omega + omega Z = 0.
int dim_cent_sp(const Matrix& m, const Matrix& omega);

// Sum of gl centralizer dimensions against the linear rigidity bound
// (r-1)n^2 + 2.
struct RigidityReport {
    std::vector<int> cent_dims;
    int sum = 0;
    int bound = 0;
    bool linearly_rigid = false;
};

RigidityReport scott_and_indices(const LocalData& d);

// Rank and Jordan data predicted for the middle convolution MC_lambda, by
// the eigenvalue bookkeeping rules (J(alpha,l) moves to J(alpha*lambda,.)
// at the finite positions and to J(beta/lambda,.) at the last one, sizes
// stepping by one at the special eigenvalues, the rest filled with
// J(1,1) resp. J(1/lambda,1)).
struct NumerologyResult {
    int new_rank = 0;
    LocalData predicted;
};

NumerologyResult mc_numerology(const LocalData& d, const RootOfUnity& lambda);

// Scalar twist on the level of local data.
LocalData mt_local(const LocalData& d, const std::vector<RootOfUnity>& lambdas);

// One greedy reduction step: twist the dominant eigenvalue to 1 at the
// finite positions (last member forced by the product), then convolve with
// the eigenvalue of the twisted last member that drops the rank the most.
struct KatzStep {
    std::vector<RootOfUnity> twist;
    RootOfUnity lambda;
    int rank_after = 0;
    LocalData data_after;
};

struct KatzReduction {
    std::vector<KatzStep> steps;
    LocalData final_data;
    bool reached_rank_one = false;
};

KatzReduction katz_reduce(const LocalData& start, int max_steps = 32);

std::string format_local_data(const LocalData& d);

} // namespace mckatz

#endif
