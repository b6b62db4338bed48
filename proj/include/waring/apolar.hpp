#ifndef WARING_APOLAR_HPP
#define WARING_APOLAR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "waring/binary_form.hpp"
#include "waring/matrix.hpp"

namespace waring {

// Matrix of the contraction map g -> g.f from dual degree-e forms (columns,
// basis u^{e-j} v^j) to primal degree-(d-e) forms (rows, monomial basis).
// Shape (d-e+1) x (e+1). Entries carry the factorials of literal
// differentiation; kernels are unaffected by that normalization.
Matrix catalecticant(const BinaryForm& f, int e);

// Basis of the degree-e slice of the apolar ideal (f)^perp, as dual forms.
// For e > deg f every form annihilates f, so the slice is all of S_e.
std::vector<BinaryForm> apolar_slice(const BinaryForm& f, int e);

// The two generators of (f)^perp, deg g1 <= deg g2, d1 + d2 = d + 2.
// g2 is reduced modulo g1 * (forms of degree d2 - d1) and both are
// normalized with leading nonzero coefficient 1.
struct ApolarPair {
    BinaryForm g1, g2;
    int d1, d2;
};

ApolarPair apolar_pair(const BinaryForm& f);

struct RankCertificate {
    int rank;
    BinaryForm g1;
    bool g1_squarefree;
    MultiplicityProfile g1_profile;
    int d1, d2;
};

// Waring rank over the algebraic closure, by the apolar-pair rule:
// rank = d1 when g1 is squarefree, d2 otherwise. When the first kernel is
// 2-dimensional (generic even degree, d1 = d2) both branches agree.
RankCertificate waring_rank(const BinaryForm& f);

// Maximal catalecticant rank over all e; for binary forms this is the least
// r with f in the r-th secant of the rational normal curve.
int border_rank(const BinaryForm& f);

struct WaringTerm {
    Scalar coeff;
    LinearForm l;
};

struct WaringDecomposition {
    std::vector<WaringTerm> terms;  // f = sum coeff_i * l_i^d, pairwise non-proportional l_i
};

struct DecomposeResult {
    RankCertificate cert;
    BinaryForm generator;  // the rank-determining apolar element actually used
    std::optional<WaringDecomposition> decomposition;  // absent when the generator
                                                       // does not split over the field
};

// Extracts a minimal decomposition when a squarefree split apolar element of
// degree rank(f) can be found: g1 itself when squarefree, otherwise random
// combinations g2 + h*g1 (height <= 20, at most 50 retries). Reconstruction
// is verified exactly; a mismatch is an internal error.
DecomposeResult decompose(const BinaryForm& f, Rng& rng);

// (rank f, rank(f + c*l^d)). Adding one d-th power moves the rank by at
// most one in each direction.
std::pair<int, int> forbidden_probe(const BinaryForm& f, const LinearForm& l, const Scalar& c);

// Searches the degree-e slice of (f)^perp for a squarefree element that
// splits over the base field: random combinations first, and over small
// prime fields an exhaustive sweep of the projectivized slice (bounded by
// max_points). Used by decompose and by field-rank certification.
std::optional<BinaryForm> find_split_squarefree_in_slice(const BinaryForm& f, int e, Rng& rng,
                                                         int random_tries,
                                                         long exhaustive_max_points);

}  // namespace waring

#endif
