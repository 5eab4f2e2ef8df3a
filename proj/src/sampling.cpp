#include "mckatz/sampling.hpp"

#include <set>

namespace mckatz {

MonodromyTuple random_hypergeometric_tuple(std::mt19937_64& rng, int rank, long denominator) {
    std::uniform_int_distribution<long> dist(0, denominator - 1);
    // Distinct residues overall: the two lists stay disjoint mod 1, which is
    // exactly the non-resonance the companion construction needs, and makes
    // the triple irreducible.
    std::set<long> used;
    auto draw = [&] {
        for (;;) {
            long k = dist(rng);
            if (used.insert(k).second) return k;
        }
    };
    auto frac = [&](long k) {
        Rational q(k, denominator);
        q.canonicalize();
        return q;
    };
    std::vector<Rational> e0, einf;
    for (int i = 0; i < rank; ++i) e0.push_back(frac(draw()));
    for (int i = 0; i < rank; ++i) einf.push_back(frac(draw()));
    return levelt_hypergeometric(e0, einf, denominator);
}

RootOfUnity random_mc_parameter(std::mt19937_64& rng, long denominator) {
    std::uniform_int_distribution<long> dist(1, denominator - 1);
    Rational q(dist(rng), denominator);
    q.canonicalize();
    return RootOfUnity(q);
}

} // namespace mckatz
