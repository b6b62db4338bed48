#ifndef WARING_HYPERSURFACE_HPP
#define WARING_HYPERSURFACE_HPP

#include <map>
#include <vector>

#include "waring/binary_form.hpp"
#include "waring/matrix.hpp"

namespace waring {

// Sparse multivariate polynomial with a fixed number of variables; no zero
// coefficients are stored.
class MultiPoly {
public:
    MultiPoly(FieldRef field, int arity) : field_(std::move(field)), arity_(arity) {}

    static MultiPoly zero(const FieldRef& field, int arity) { return MultiPoly(field, arity); }
    static MultiPoly constant(const FieldRef& field, int arity, const Scalar& c);
    static MultiPoly variable(const FieldRef& field, int arity, int index);

    int arity() const { return arity_; }
    const FieldRef& field() const { return field_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::map<std::vector<int>, Scalar>& terms() const { return terms_; }

    void add_term(const std::vector<int>& exponents, const Scalar& c);

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly negate() const;

    MultiPoly derivative(int var) const;
    Scalar eval(const std::vector<Scalar>& point) const;

    int total_degree() const;       // -1 for zero
    bool is_homogeneous() const;    // true for zero

    // Exact division by the variable `var`; every term must contain it.
    MultiPoly divide_by_variable(int var) const;

private:
    FieldRef field_;
    int arity_;
    std::map<std::vector<int>, Scalar> terms_;
};

// Determinant of a square matrix of MultiPolys, expanded by dynamic
// programming over column subsets (fine up to ~13 x 13 sparse entries).
MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m);

// Context for the hypersurface S_{2k+1, k+2}: the discriminant of the
// generic degree-(k+1) binary form in its k+2 coefficient variables
// b_0..b_{k+1}, homogeneous of degree 2k, normalized like discriminant().
struct HypersurfaceContext {
    int k;
    FieldRef field;
    MultiPoly disc_in_b;
    std::vector<MultiPoly> disc_partials;  // d(disc)/d(b_j)
};

// k in [1, 6]; larger k is refused (symbolic expansion size guard).
HypersurfaceContext context_make(int k, const FieldRef& field);

// Coordinates a_i = c_i / binom(d, i) of f on S_d. The displayed Hankel
// matrix (a_{r+c}) is the catalecticant in these coordinates: it is
// row-scaling equivalent to the contraction matrix, which raw monomial
// coefficients are not.
std::vector<Scalar> dp_coords(const BinaryForm& f);

// Signed maximal minors b_j = (-1)^j det(Hankel with column j deleted) of
// the (k+1) x (k+2) Hankel matrix, so that q(u,v) = sum b_j u^{k+1-j} v^j
// is the first-row cofactor expansion of the bordered determinant.
std::vector<Scalar> minors(const BinaryForm& f);
std::vector<Scalar> minors_from_coords(const FieldRef& field, const std::vector<Scalar>& a);

// q(u, v) as a dual form of degree k+1.
BinaryForm q_form(const BinaryForm& f);

// disc_in_b evaluated at the minors; zero iff f lies on the closure of
// S_{2k+1,k+2} (up to the fixed normalization).
Scalar defining_value(const HypersurfaceContext& ctx, const BinaryForm& f);
Scalar defining_value_at(const HypersurfaceContext& ctx, const std::vector<Scalar>& a);

// Gradient d(defining value)/d(a_i), i = 0..2k+1, by the chain rule
// through the minors; the composite is never expanded in the a_i.
std::vector<Scalar> defining_gradient(const HypersurfaceContext& ctx, const BinaryForm& f);
std::vector<Scalar> defining_gradient_at(const HypersurfaceContext& ctx,
                                         const std::vector<Scalar>& a);

// 2k(k+1), cross-checked against the homogeneous degree of disc_in_b.
int degree_of_equation(const HypersurfaceContext& ctx);

}  // namespace waring

#endif
