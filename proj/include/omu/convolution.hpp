#ifndef OMU_CONVOLUTION_HPP
#define OMU_CONVOLUTION_HPP

#include <vector>

#include "omu/bigfloat.hpp"
#include "omu/multinomial.hpp"
#include "omu/numeric.hpp"

namespace omu {

/// Exact pmf of the sum of L independent uniforms on {0,...,q}:
/// probs[k] = binom(L,k)_q / (q+1)^L.
struct PmfTable {
    int q = 1;
    long L = 0;
    std::vector<Rational> probs;
};

PmfTable pmf(int q, long L);

/// Maximal probability c_{q,L} with its attaining index.
struct MaxProb {
    int q = 1;
    long L = 0;
    Rational value;
    long arg = 0;
};

/// Value from the closed form binom(L, floor((qL+1)/2))_q / (q+1)^L,
/// cross-checked against the direct maximum of the pmf.
MaxProb max_prob(int q, long L);

/// c_{q,L} compared against the literature bound sqrt(6/(pi q (q+2) L)).
struct BoundCheck {
    bool holds = false;
    BigFloat value;
    BigFloat bound;
    BigFloat slack;  // bound - value; negative iff violated
};

BoundCheck check_mattner_roos(int q, long L);

}  // namespace omu

#endif
