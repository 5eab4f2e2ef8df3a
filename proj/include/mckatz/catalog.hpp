#ifndef MCKATZ_CATALOG_HPP
#define MCKATZ_CATALOG_HPP

#include "mckatz/rigidity.hpp"
#include "mckatz/theta_op.hpp"
#include "mckatz/tuples.hpp"

namespace mckatz {
namespace catalog {

// Order-4 hypergeometric seed operator with exponents k/15 at 0 and k/20 at
// infinity.
ThetaOperator hypergeometric4();

// Exponents of the seed at 0 and infinity (mod 1), for the companion-matrix
// tuple construction.
std::vector<Rational> hypergeometric4_exp0();
std::vector<Rational> hypergeometric4_exp_inf();

// Order-4 formally self adjoint operator attached to the symplectically
// rigid rank-4 triple (the convolution image of the wedge of the seed).
ThetaOperator selfadjoint4();

// Order-8 operator produced by the two-step operator convolution chain from
// selfadjoint4; splits off two left linear factors.
ThetaOperator chain_product6();

// Order-6 operator with monodromy group 2.J2.
ThetaOperator two_j2();

// Parameterized order-6 family; (-1/6, 1/10, 2/5, 7/10) recovers two_j2 up
// to content.
ThetaOperator two_j2_family(const Rational& a1, const Rational& c1, const Rational& c2,
                            const Rational& c3);

// Parameterized order-4 hypergeometric operator the family above arises
// from (by the same convolution passage as the concrete chain).
ThetaOperator two_j2_family_seed(const Rational& a1, const Rational& c1, const Rational& c2,
                                 const Rational& c3);

// Tuple scripts of the rank-4 <-> rank-6 passage (composition right to
// left, the lists apply left to right).
OpScript construction_script(); // rank 4 -> rank 6
OpScript reduction_script();    // rank 6 -> rank 4

// Reference local data along the construction.
LocalData two_j2_local_data();   // the target rank-6 triple
LocalData wedge_local_data();    // exterior square of the seed tuple
LocalData rank4_local_data();    // after MC_{-1} on the wedge
LocalData sp4_local_data();      // after the extra MT_{(-1,1,-1)} twist

} // namespace catalog
} // namespace mckatz

#endif
