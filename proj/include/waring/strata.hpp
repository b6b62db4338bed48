#ifndef WARING_STRATA_HPP
#define WARING_STRATA_HPP

#include <map>
#include <optional>
#include <vector>

#include "waring/apolar.hpp"

namespace waring {

// Rank of a general binary form of degree d: ceil((d+1)/2).
int generic_rank(int d);

// Point of the parametrized set { l0^{d-1} g + l1^d + ... + lk^d }; the
// generic member has rank d - k.
struct SupragenericPoint {
    int d, k;
    std::vector<LinearForm> l;  // l[0..k]
    LinearForm g;
    BinaryForm f;
};

// Assembles f from the pieces (no resampling, no rank check).
BinaryForm assemble_suprageneric(int d, const std::vector<LinearForm>& l, const LinearForm& g);

// Random sample with pairwise non-proportional l_i and g not proportional
// to l_0, resampled until the verified rank is d - k. Requires
// d - k > ceil((d+1)/2) and k >= 0.
SupragenericPoint suprageneric_sample(int d, int k, const FieldRef& field, Rng& rng);

struct SampleResult {
    BinaryForm f;
    RankCertificate cert;
};

// A form of verified rank r: sums of r random powers for r <= generic rank,
// the suprageneric construction with k = d - r above it. Unreachable (d, r)
// pairs are rejected with the stratification reason.
SampleResult sample_rank_r(int d, int r, const FieldRef& field, Rng& rng);

struct ChainStep {
    LinearForm l;
    Scalar c;
    int new_rank;
};

// Raises the rank by exactly one per step until rank d, returning the
// additions c*l^d. Below the generic rank a random power works; at or above
// it the step must cancel a summand of a suprageneric representation, so
// candidates come from the simple roots of g1 with the coefficient located
// by a minor-vanishing polynomial in c (plus an exhaustive (l, c) sweep
// over small prime fields). Search exhaustion reports the stuck rank.
std::vector<ChainStep> rank_raising_chain(const BinaryForm& f, Rng& rng);

// The 2k+4 tangent-space generators at a point of the parametrized set, in
// the fixed order x*l_i^{d-1}, y*l_i^{d-1} (i = 1..k), then x*l0^{d-2}g,
// y*l0^{d-2}g, x*l0^{d-1}, y*l0^{d-1}.
std::vector<BinaryForm> tangent_generators(const SupragenericPoint& p);

// Affine rank of the (2k+4) x (d+1) coefficient matrix of the generators;
// the projective dimension is one less.
int tangent_dimension(const SupragenericPoint& p);

struct RankCensus {
    int d = 0, k = 0, samples = 0;
    std::map<int, int> freq;            // rank -> count, all samples
    std::map<int, int> freq_g_eq_l0;    // rank -> count, g = l0 specializations
    int coincident_samples = 0;
    int flagged = 0;                    // ranks outside {1..k+1} u {d-k..d}
    std::vector<int> flagged_ranks;
};

// Samples the parametrized set including boundary specializations
// (g = l0 with probability 1/4; coincident l_i with probability 1/4) and
// records verified ranks.
RankCensus stratum_census(int d, int k, int samples, const FieldRef& field, Rng& rng);

}  // namespace waring

#endif
