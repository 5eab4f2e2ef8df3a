#ifndef MCKATZ_TUPLES_HPP
#define MCKATZ_TUPLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "mckatz/matrix.hpp"

namespace mckatz {

// Tuple (T_1, ..., T_{r+1}) in GL_n with T_1 ... T_{r+1} = 1.  The labels
// name the singular points the members belong to; the last member is the
// product inverse (the point at infinity in the standard setup).
struct MonodromyTuple {
    int rank = 0;
    std::vector<std::string> points;
    std::vector<Matrix> matrices;

    int members() const { return static_cast<int>(matrices.size()); }
    int r() const { return members() - 1; }
};

// Throws when the shape is inconsistent or the product is not the identity.
void validate_tuple(const MonodromyTuple& t);

MonodromyTuple default_points_tuple(int rank, std::vector<Matrix> mats);

// Scalar twist: member i is multiplied by lambda_i; the exponent sum must
// vanish mod 1 so the product stays 1.
MonodromyTuple mt_twist(const MonodromyTuple& t, const std::vector<RootOfUnity>& lambdas);

// The big convolution tuple B_i in GL_{nr} together with the two invariant
// subspaces (row bases).  first_slot_twist mu != 1 builds the variant where
// member 1 enters all kernel formulas as mu*T_1 (and member r+1 as
// mu^{-1}*T_{r+1}).
struct ConvolutionResult {
    MonodromyTuple big;
    Matrix k_basis; // rows span K = ker(A_1 - 1) + ... (block-embedded)
    Matrix l_basis; // rows span L
    int k_dim = 0;
    int l_dim = 0;
    int kl_dim = 0; // dim(K + L); equals k_dim + l_dim when they intersect trivially
};

ConvolutionResult convolution(const MonodromyTuple& t, const RootOfUnity& lambda,
                              const RootOfUnity& first_slot_twist = RootOfUnity());

// Action induced on K^{nr}/(K+L); canonical quotient basis.
MonodromyTuple middle_convolution(const MonodromyTuple& t, const RootOfUnity& lambda);

// Member-wise exterior square.
MonodromyTuple wedge_square_tuple(const MonodromyTuple& t);

// Rank-n tuple (T_0, T_1, T_inf) with companion-matrix generators whose
// local eigenvalue exponents at 0 and infinity are as given; T_1 comes out
// a pseudo-reflection.  Throws resonance_error when the two exponent lists
// collide mod 1.
MonodromyTuple levelt_hypergeometric(const std::vector<Rational>& exp0,
                                     const std::vector<Rational>& exp_inf, long conductor);

// Burnside criterion: the matrix algebra generated by the members has full
// dimension n^2 exactly for irreducible tuples.
bool is_irreducible(const MonodromyTuple& t);
int matrix_algebra_dimension(const MonodromyTuple& t);

struct EquivalenceResult {
    bool equivalent = false;
    std::optional<Matrix> witness; // S with S T_i S^{-1} = U_i
};

// Simultaneous conjugacy of two irreducible tuples.
EquivalenceResult equivalent(const MonodromyTuple& a, const MonodromyTuple& b);

// One step of a tuple script: a scalar twist or a middle convolution.
struct OpStep {
    enum class Kind { MT, MC } kind = Kind::MC;
    std::vector<RootOfUnity> lambdas; // MT
    RootOfUnity lambda;               // MC
};
using OpScript = std::vector<OpStep>;

struct ScriptStageRecord {
    int index = 0;
    std::string op;
    int rank_after = 0;
    std::vector<JordanData> jordan_after;
};

struct ScriptTrace {
    std::vector<ScriptStageRecord> stages;
};

// Applies the steps left to right.  Errors are re-thrown annotated with the
// failing step index.  The optional trace records rank and Jordan data
// after every step (searched at the given conductor).
MonodromyTuple apply_script(const MonodromyTuple& t, const OpScript& script,
                            ScriptTrace* trace = nullptr, long conductor = 60);

// Transport of an invariant bilinear form X along the twisted double
// convolution with parameters lambda1, lambda2 (lambda = lambda1*lambda2).
// Y is the transported form on the big space of dimension n*r^2; the report
// carries the exactness checks.
struct TransportReport {
    Matrix y;
    bool x_symmetric = false;     // else antisymmetric
    bool y_invariant = false;     // B_i^t Y B_i = Y for i = 1..r
    bool y_symmetry_matches = false;
    bool y_kills_u = false;       // Y u = 0 for the canonical invariant subspace U
    int u_dim = 0;
    int quotient_dim = 0;
    int y_rank = 0;
    bool descends_nondegenerate = false; // rank(Y) == quotient dim
    int fix_slot = 0;             // diagonal slot placement used in the D4 blocks
};

TransportReport transport_form(const MonodromyTuple& t, const Matrix& x,
                               const RootOfUnity& lambda1, const RootOfUnity& lambda2);

} // namespace mckatz

#endif
