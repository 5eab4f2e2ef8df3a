#ifndef MCKATZ_SAMPLING_HPP
#define MCKATZ_SAMPLING_HPP

#include <random>

#include "mckatz/tuples.hpp"

namespace mckatz {

// Random irreducible rank-n triple with quasi-unipotent members: companion
// generators on non-resonant exponent lists k/denominator.  Deterministic
// in the generator state, for seeded property tests.
MonodromyTuple random_hypergeometric_tuple(std::mt19937_64& rng, int rank, long denominator);

// Random convolution parameter e^{2 pi i k/denominator} with k != 0, so the
// parameter is never the excluded value 1.
RootOfUnity random_mc_parameter(std::mt19937_64& rng, long denominator);

} // namespace mckatz

#endif
