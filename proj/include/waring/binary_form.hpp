#ifndef WARING_BINARY_FORM_HPP
#define WARING_BINARY_FORM_HPP

#include <string>
#include <utility>
#include <vector>

#include "waring/field.hpp"
#include "waring/upoly.hpp"

namespace waring {

// Primal forms live in (x, y), dual forms in (u, v). The apolar pairing
// always contracts a form against one of the opposite tag.
enum class VarTag { primal, dual };

VarTag opposite(VarTag t);

// a*x + b*y (or a*u + b*v). Compared projectively where noted.
struct LinearForm {
    Scalar a, b;
    VarTag tag = VarTag::primal;
};

bool proportional(const LinearForm& l, const LinearForm& m);
LinearForm random_linear(const FieldRef& field, Rng& rng, long height,
                         VarTag tag = VarTag::primal);

// Homogeneous binary form of degree d as the coefficient sequence c_0..c_d
// of sum_i c_i X^{d-i} Y^i (monomial coefficients, no binomial weighting).
// The zero form is representable at every degree.
class BinaryForm {
public:
    BinaryForm(FieldRef field, VarTag tag, int degree);
    static BinaryForm from_coeffs(FieldRef field, VarTag tag, std::vector<Scalar> coeffs);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    VarTag tag() const { return tag_; }
    const FieldRef& field() const { return field_; }

    const Scalar& operator[](int i) const { return c_[i]; }
    Scalar& operator[](int i) { return c_[i]; }
    const std::vector<Scalar>& coeffs() const { return c_; }

    bool is_zero() const;

    friend bool operator==(const BinaryForm& f, const BinaryForm& g) {
        return f.tag_ == g.tag_ && f.c_ == g.c_;
    }
    friend bool operator!=(const BinaryForm& f, const BinaryForm& g) { return !(f == g); }

private:
    FieldRef field_;
    VarTag tag_;
    std::vector<Scalar> c_;
};

BinaryForm add(const BinaryForm& f, const BinaryForm& g);
BinaryForm sub(const BinaryForm& f, const BinaryForm& g);
BinaryForm scale(const BinaryForm& f, const Scalar& c);
BinaryForm mul(const BinaryForm& f, const BinaryForm& g);
Scalar eval(const BinaryForm& f, const Scalar& X, const Scalar& Y);

// (a X + b Y)^d by binomial expansion.
BinaryForm power_of_linear(const LinearForm& l, int d);
BinaryForm linear_to_form(const LinearForm& l);

BinaryForm derivative_x(const BinaryForm& f);
BinaryForm derivative_y(const BinaryForm& f);

// Contraction by differentiation: op(d/dX, d/dY) applied to target, literal
// derivatives with no normalization (the factorials stay in the result).
// Requires opposite variable tags and deg(op) <= deg(target).
BinaryForm apolar_action(const BinaryForm& op, const BinaryForm& target);

// One entry per multiplicity m occurring in f: the degree of the radical of
// the multiplicity-m part (the root at infinity counts). Sorted by m.
struct MultiplicityEntry {
    int multiplicity;
    int radical_degree;
    friend bool operator==(const MultiplicityEntry&, const MultiplicityEntry&) = default;
};
using MultiplicityProfile = std::vector<MultiplicityEntry>;

BinaryForm gcd(const BinaryForm& f, const BinaryForm& g);
MultiplicityProfile squarefree_profile(const BinaryForm& f);
bool is_squarefree(const BinaryForm& f);

// Determinant of the (m+n)x(m+n) Sylvester matrix built from the formal
// degrees, so shared roots at infinity are detected. Res(x, y) = +1 fixes
// the sign convention (f-rows above g-rows).
Scalar resultant(const BinaryForm& f, const BinaryForm& g);

// Normalized so Disc(a u^2 + b uv + c v^2) = b^2 - 4ac:
//   Disc(f) = (-1)^{m(m-1)/2} Res(f, df/dx) / c_0,
// computed in a sheared chart x -> x, y -> y + t x when c_0 = 0 (the value
// is invariant because the substitution is unimodular).
Scalar discriminant(const BinaryForm& f);

// Projective point (s : t), normalized to t = 1 or (1 : 0).
struct ProjectivePoint {
    Scalar s, t;
};

bool same_point(const ProjectivePoint& p, const ProjectivePoint& q);

struct RootReport {
    std::vector<std::pair<ProjectivePoint, int>> roots;  // (point, multiplicity)
    bool split;  // multiplicities account for the full degree
};

// All roots lying in the base field. Over Q: complete rational root search
// (modular root scan + Hensel lifting + rational reconstruction, so large
// coefficients never need factoring). Over F_p: exhaustive scan of the p+1
// projective points, p <= 65521.
RootReport roots_in_field(const BinaryForm& f);

// f with root (s:t) removed once; root must divide f.
BinaryForm divide_root(const BinaryForm& f, const ProjectivePoint& pt);

// Text grammar (whitespace insignificant):
//   form  := term (('+'|'-') term)*
//   term  := coeff? monomial?
//   coeff := int | int '/' uint
//   monomial := var ('^' uint)? ('*'? var ('^' uint)?)*
//   var   := 'x' | 'y' | 'u' | 'v'
// x/y and u/v may not be mixed; inhomogeneous input is rejected.
BinaryForm parse_form(const std::string& text, const FieldRef& field);

std::string to_string(const BinaryForm& f);
std::string to_string(const LinearForm& l);

// f(t, 1) as a univariate polynomial in t (ascending coefficients).
upoly::Poly dehomogenize(const BinaryForm& f);

// Binary form of the stated degree with f(t,1) = p(t); deg(p) <= degree.
BinaryForm homogenize(const FieldRef& field, VarTag tag, const upoly::Poly& p, int degree);

}  // namespace waring

#endif
