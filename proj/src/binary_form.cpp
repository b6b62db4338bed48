#include "waring/binary_form.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "waring/matrix.hpp"

namespace waring {

VarTag opposite(VarTag t) {
    return t == VarTag::primal ? VarTag::dual : VarTag::primal;
}

bool proportional(const LinearForm& l, const LinearForm& m) {
    return l.a * m.b == l.b * m.a;
}

LinearForm random_linear(const FieldRef& field, Rng& rng, long height, VarTag tag) {
    for (;;) {
        Scalar a = random_scalar(field, rng, height);
        Scalar b = random_scalar(field, rng, height);
        if (!a.is_zero() || !b.is_zero()) return LinearForm{a, b, tag};
    }
}

BinaryForm::BinaryForm(FieldRef field, VarTag tag, int degree)
    : field_(std::move(field)), tag_(tag) {
    if (degree < 0) throw Error(ErrorKind::degree, "negative degree");
    c_.assign(static_cast<std::size_t>(degree) + 1, Scalar::zero(field_));
}

BinaryForm BinaryForm::from_coeffs(FieldRef field, VarTag tag, std::vector<Scalar> coeffs) {
    if (coeffs.empty()) throw Error(ErrorKind::degree, "empty coefficient sequence");
    BinaryForm f(field, tag, static_cast<int>(coeffs.size()) - 1);
    f.c_ = std::move(coeffs);
    return f;
}

bool BinaryForm::is_zero() const {
    for (const Scalar& c : c_)
        if (!c.is_zero()) return false;
    return true;
}

namespace {

void check_same_shape(const BinaryForm& f, const BinaryForm& g) {
    if (f.tag() != g.tag())
        throw Error(ErrorKind::constraint, "variable tags differ");
    if (f.degree() != g.degree())
        throw Error(ErrorKind::degree, "degrees differ");
}

}  // namespace

BinaryForm add(const BinaryForm& f, const BinaryForm& g) {
    check_same_shape(f, g);
    BinaryForm r = f;
    for (int i = 0; i <= f.degree(); ++i) r[i] += g[i];
    return r;
}

BinaryForm sub(const BinaryForm& f, const BinaryForm& g) {
    check_same_shape(f, g);
    BinaryForm r = f;
    for (int i = 0; i <= f.degree(); ++i) r[i] -= g[i];
    return r;
}

BinaryForm scale(const BinaryForm& f, const Scalar& c) {
    BinaryForm r = f;
    for (int i = 0; i <= f.degree(); ++i) r[i] *= c;
    return r;
}

BinaryForm mul(const BinaryForm& f, const BinaryForm& g) {
    if (f.tag() != g.tag())
        throw Error(ErrorKind::constraint, "variable tags differ");
    BinaryForm r(f.field(), f.tag(), f.degree() + g.degree());
    for (int i = 0; i <= f.degree(); ++i) {
        if (f[i].is_zero()) continue;
        for (int j = 0; j <= g.degree(); ++j) {
            if (g[j].is_zero()) continue;
            r[i + j] += f[i] * g[j];
        }
    }
    return r;
}

Scalar eval(const BinaryForm& f, const Scalar& X, const Scalar& Y) {
    // Horner on x-powers: f = sum c_i X^{d-i} Y^i.
    Scalar acc = Scalar::zero(f.field());
    for (int i = 0; i <= f.degree(); ++i) acc = acc * X + f[i] * Y.pow(i);
    return acc;
}

BinaryForm power_of_linear(const LinearForm& l, int d) {
    if (d < 0) throw Error(ErrorKind::degree, "negative exponent");
    const FieldRef& field = l.a.field();
    BinaryForm r(field, l.tag, d);
    for (int i = 0; i <= d; ++i) {
        r[i] = Scalar(field, binomial(d, i)) * l.a.pow(d - i) * l.b.pow(i);
    }
    return r;
}

BinaryForm linear_to_form(const LinearForm& l) { return power_of_linear(l, 1); }

BinaryForm derivative_x(const BinaryForm& f) {
    if (f.degree() == 0) return BinaryForm(f.field(), f.tag(), 0);
    BinaryForm r(f.field(), f.tag(), f.degree() - 1);
    for (int i = 0; i < f.degree(); ++i)
        r[i] = f[i] * Scalar(f.field(), static_cast<long>(f.degree() - i));
    return r;
}

BinaryForm derivative_y(const BinaryForm& f) {
    if (f.degree() == 0) return BinaryForm(f.field(), f.tag(), 0);
    BinaryForm r(f.field(), f.tag(), f.degree() - 1);
    for (int i = 1; i <= f.degree(); ++i)
        r[i - 1] = f[i] * Scalar(f.field(), static_cast<long>(i));
    return r;
}

BinaryForm apolar_action(const BinaryForm& op, const BinaryForm& target) {
    if (op.tag() == target.tag())
        throw Error(ErrorKind::constraint, "apolar action needs opposite variable tags");
    const int e = op.degree(), d = target.degree();
    if (e > d) throw Error(ErrorKind::degree, "operator degree exceeds target degree");
    target.field()->ensure_degree_supported(d);
    BinaryForm r(target.field(), target.tag(), d - e);
    for (int i = 0; i <= d - e; ++i) {
        Scalar acc = Scalar::zero(target.field());
        for (int j = 0; j <= e; ++j) {
            if (op[j].is_zero() || target[i + j].is_zero()) continue;
            // d^{e-j}/dX^{e-j} d^j/dY^j applied to X^{d-i-j} Y^{i+j}.
            mpz_class ff(1);
            for (int s = 0; s < e - j; ++s) ff *= (d - i - j - s);
            for (int s = 0; s < j; ++s) ff *= (i + j - s);
            acc += op[j] * target[i + j] * Scalar(target.field(), ff);
        }
        r[i] = acc;
    }
    return r;
}

upoly::Poly dehomogenize(const BinaryForm& f) {
    upoly::Poly p(static_cast<std::size_t>(f.degree()) + 1, Scalar::zero(f.field()));
    for (int i = 0; i <= f.degree(); ++i) p[f.degree() - i] = f[i];
    upoly::trim(p);
    return p;
}

BinaryForm homogenize(const FieldRef& field, VarTag tag, const upoly::Poly& p, int degree) {
    if (upoly::degree(p) > degree)
        throw Error(ErrorKind::degree, "polynomial degree exceeds target degree");
    BinaryForm f(field, tag, degree);
    for (std::size_t j = 0; j < p.size(); ++j) f[degree - static_cast<int>(j)] = p[j];
    return f;
}

namespace {

// f = y^{y_mult} * x^{x_mult} * (core homogenized), core has nonzero ends.
struct SplitEnds {
    int y_mult = 0;
    int x_mult = 0;
    upoly::Poly core;  // core[j] = c_{M-j}, degree M - w
};

SplitEnds split_ends(const BinaryForm& f) {
    if (f.is_zero()) throw Error(ErrorKind::constraint, "zero form");
    const int d = f.degree();
    int w = 0;
    while (f[w].is_zero()) ++w;
    int M = d;
    while (f[M].is_zero()) --M;
    SplitEnds s;
    s.y_mult = w;
    s.x_mult = d - M;
    s.core.assign(static_cast<std::size_t>(M - w) + 1, Scalar::zero(f.field()));
    for (int i = w; i <= M; ++i) s.core[M - i] = f[i];
    return s;
}

}  // namespace

BinaryForm gcd(const BinaryForm& f, const BinaryForm& g) {
    if (f.tag() != g.tag())
        throw Error(ErrorKind::constraint, "variable tags differ");
    if (f.is_zero() && g.is_zero())
        throw Error(ErrorKind::constraint, "gcd of two zero forms is undefined");
    if (f.is_zero()) return gcd(g, g);
    if (g.is_zero()) return gcd(f, f);

    int wf = 0, wg = 0;
    while (f[wf].is_zero()) ++wf;
    while (g[wg].is_zero()) ++wg;
    // f = y^wf * hf with hf(t,1) of exact degree d-wf.
    upoly::Poly hf(static_cast<std::size_t>(f.degree() - wf) + 1, Scalar::zero(f.field()));
    for (int i = wf; i <= f.degree(); ++i) hf[f.degree() - i] = f[i];
    upoly::Poly hg(static_cast<std::size_t>(g.degree() - wg) + 1, Scalar::zero(g.field()));
    for (int i = wg; i <= g.degree(); ++i) hg[g.degree() - i] = g[i];

    upoly::Poly h = upoly::gcd(hf, hg);
    const int wy = std::min(wf, wg);
    BinaryForm core = homogenize(f.field(), f.tag(), h, upoly::degree(h));
    if (wy == 0) return core;
    BinaryForm ypow(f.field(), f.tag(), wy);
    ypow[wy] = Scalar::one(f.field());
    return mul(ypow, core);
}

MultiplicityProfile squarefree_profile(const BinaryForm& f) {
    if (f.is_zero()) throw Error(ErrorKind::constraint, "zero form");
    f.field()->ensure_degree_supported(f.degree());
    const SplitEnds se = split_ends(f);

    std::map<int, int> buckets;  // multiplicity -> radical degree
    if (se.y_mult > 0) buckets[se.y_mult] += 1;
    if (se.x_mult > 0) buckets[se.x_mult] += 1;

    // Yun's squarefree decomposition of the core.
    upoly::Poly p = upoly::make_monic(se.core);
    if (upoly::degree(p) > 0) {
        upoly::Poly dp = upoly::derivative(p);
        upoly::Poly a0 = upoly::gcd(p, dp);
        upoly::Poly b = upoly::div_exact(p, a0);
        upoly::Poly c = upoly::div_exact(dp, a0);
        upoly::Poly d = upoly::sub(c, upoly::derivative(b));
        int i = 1;
        while (upoly::degree(b) > 0) {
            upoly::Poly ai = upoly::gcd(b, d);
            if (upoly::degree(ai) > 0) buckets[i] += upoly::degree(ai);
            b = upoly::div_exact(b, ai);
            c = upoly::div_exact(d, ai);
            d = upoly::sub(c, upoly::derivative(b));
            ++i;
        }
    }

    MultiplicityProfile profile;
    for (const auto& [m, deg] : buckets) profile.push_back({m, deg});
    return profile;
}

bool is_squarefree(const BinaryForm& f) {
    const MultiplicityProfile p = squarefree_profile(f);
    for (const auto& e : p)
        if (e.multiplicity > 1) return false;
    return true;
}

Scalar resultant(const BinaryForm& f, const BinaryForm& g) {
    if (f.is_zero() || g.is_zero())
        throw Error(ErrorKind::constraint, "resultant of the zero form is undefined");
    const int m = f.degree(), n = g.degree();
    if (m < 1 || n < 1) throw Error(ErrorKind::degree, "resultant needs degrees >= 1");
    Matrix s(f.field(), m + n, m + n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) s.at(i, i + j) = f[j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) s.at(n + i, i + j) = g[j];
    return determinant(s);
}

namespace {

// g(x, y) = f(x, t*x + y); unimodular, so the discriminant is unchanged.
BinaryForm shear(const BinaryForm& f, long t) {
    const int d = f.degree();
    const Scalar ts(f.field(), t);
    BinaryForm r(f.field(), f.tag(), d);
    for (int k = 0; k <= d; ++k) {
        Scalar acc = Scalar::zero(f.field());
        for (int i = k; i <= d; ++i) {
            if (f[i].is_zero()) continue;
            acc += f[i] * Scalar(f.field(), binomial(i, k)) * ts.pow(i - k);
        }
        r[k] = acc;
    }
    return r;
}

}  // namespace

Scalar discriminant(const BinaryForm& f) {
    const int m = f.degree();
    if (m < 2) throw Error(ErrorKind::degree, "discriminant needs degree >= 2");
    if (f.is_zero()) throw Error(ErrorKind::constraint, "discriminant of the zero form");
    f.field()->ensure_degree_supported(m);

    BinaryForm g = f;
    if (g[0].is_zero()) {
        // Move a nonzero value into the leading coefficient; f has at most m
        // roots so some t in 0..m works (char 0 or p > m).
        for (long t = 1; t <= m + 1; ++t) {
            g = shear(f, t);
            if (!g[0].is_zero()) break;
        }
        if (g[0].is_zero())
            throw Error(ErrorKind::internal, "no admissible chart for discriminant");
    }
    Scalar res = resultant(g, derivative_x(g));
    Scalar d = res / g[0];
    if ((static_cast<long>(m) * (m - 1) / 2) % 2 != 0) d = -d;
    return d;
}

bool same_point(const ProjectivePoint& p, const ProjectivePoint& q) {
    return p.s * q.t == p.t * q.s;
}

namespace {

// ---- rational root machinery over Q ----------------------------------
//
// Complete rational root search without integer factoring: reduce mod a
// small prime where the squarefree part stays squarefree, scan roots there,
// Hensel-lift to a modulus exceeding the coefficient bound, then recover
// n/m by rational reconstruction and verify exactly.

std::vector<mpz_class> to_primitive_int(const upoly::Poly& p) {
    mpz_class lcm_den(1);
    for (const Scalar& c : p) {
        mpz_class den = c.value().get_den();
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    }
    std::vector<mpz_class> v;
    v.reserve(p.size());
    mpz_class content(0);
    for (const Scalar& c : p) {
        mpq_class q = c.value() * lcm_den;
        v.push_back(q.get_num());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.back().get_mpz_t());
    }
    if (content > 1)
        for (auto& z : v) z /= content;
    return v;
}

std::uint64_t mod_u64(const mpz_class& z, std::uint64_t p) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
    return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = static_cast<unsigned __int128>(acc) * b % p;
        b = static_cast<unsigned __int128>(b) * b % p;
        e >>= 1;
    }
    return acc;
}

std::vector<std::uint64_t> poly_mod(const std::vector<mpz_class>& poly, std::uint64_t p) {
    std::vector<std::uint64_t> r(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) r[i] = mod_u64(poly[i], p);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::uint64_t eval_mod(const std::vector<std::uint64_t>& poly, std::uint64_t x, std::uint64_t p) {
    std::uint64_t acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;)
        acc = (static_cast<unsigned __int128>(acc) * x + poly[i]) % p;
    return acc;
}

std::vector<std::uint64_t> gcd_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b,
                                   std::uint64_t p) {
    auto trimv = [](std::vector<std::uint64_t>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trimv(a);
    trimv(b);
    while (!b.empty()) {
        // a mod b
        std::uint64_t inv = pow_mod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            std::uint64_t c = static_cast<unsigned __int128>(a.back()) * inv % p;
            if (c != 0) {
                std::size_t off = a.size() - b.size();
                for (std::size_t j = 0; j < b.size(); ++j) {
                    std::uint64_t sub = static_cast<unsigned __int128>(c) * b[j] % p;
                    a[off + j] = (a[off + j] + p - sub) % p;
                }
            }
            a.pop_back();
            trimv(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

mpz_class eval_int(const std::vector<mpz_class>& poly, const mpz_class& x, const mpz_class& mod) {
    mpz_class acc(0);
    for (std::size_t i = poly.size(); i-- > 0;) {
        acc = acc * x + poly[i];
        if (mod != 0) mpz_fdiv_r(acc.get_mpz_t(), acc.get_mpz_t(), mod.get_mpz_t());
    }
    return acc;
}

// Rational reconstruction: find n/m with z*m = n (mod M), |n| <= nbound,
// 0 < m <= mbound. Requires M > 2*nbound*mbound for uniqueness; the caller
// verifies candidates exactly anyway.
bool rational_reconstruct(const mpz_class& z, const mpz_class& M, const mpz_class& nbound,
                          const mpz_class& mbound, mpz_class& n, mpz_class& m) {
    mpz_class r0 = M, r1 = z, t0 = 0, t1 = 1;
    while (r1 > nbound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0) return false;
    if (t1 < 0) {
        t1 = -t1;
        r1 = -r1;
    }
    if (t1 > mbound) return false;
    n = r1;
    m = t1;
    return true;
}

// Rational roots of a squarefree primitive integer polynomial, deg >= 1,
// nonzero constant term.
std::vector<mpq_class> rational_roots_squarefree(const std::vector<mpz_class>& poly) {
    static const std::uint64_t kPrimes[] = {10007, 10009, 10037, 10039, 10061, 10067,
                                            10069, 10079, 10091, 10093, 10099, 10103,
                                            10111, 10133, 10139, 10141, 10151, 10159};
    const std::size_t deg = poly.size() - 1;
    std::vector<mpz_class> dpoly(deg);
    for (std::size_t i = 1; i < poly.size(); ++i) dpoly[i - 1] = poly[i] * static_cast<long>(i);

    for (std::uint64_t p : kPrimes) {
        if (mod_u64(poly.back(), p) == 0) continue;
        std::vector<std::uint64_t> pm = poly_mod(poly, p);
        std::vector<std::uint64_t> dm = poly_mod(dpoly, p);
        if (gcd_mod(pm, dm, p).size() > 1) continue;  // not squarefree mod p

        // Roots mod p by scanning.
        std::vector<std::uint64_t> roots_p;
        for (std::uint64_t x = 0; x < p; ++x)
            if (eval_mod(pm, x, p) == 0) roots_p.push_back(x);
        if (roots_p.empty()) return {};

        // Lift to p^K with p^K > 2 * |a_0| * |a_deg| (bounds for n | a_0, m | a_deg).
        mpz_class nbound = abs(poly.front());
        mpz_class mbound = abs(poly.back());
        mpz_class target = 2 * nbound * mbound + 1;
        mpz_class M(p);
        while (M <= target) M *= M;

        std::vector<mpq_class> found;
        for (std::uint64_t r0 : roots_p) {
            // Newton iteration with quadratic precision growth.
            mpz_class z(static_cast<unsigned long>(r0)), mod(p);
            while (mod <= target) {
                mod *= mod;
                mpz_class fz = eval_int(poly, z, mod);
                mpz_class dz = eval_int(dpoly, z, mod);
                mpz_class inv;
                if (mpz_invert(inv.get_mpz_t(), dz.get_mpz_t(), mod.get_mpz_t()) == 0) break;
                z = z - fz * inv;
                mpz_fdiv_r(z.get_mpz_t(), z.get_mpz_t(), mod.get_mpz_t());
            }
            if (mod <= target) continue;
            mpz_class n, m;
            if (!rational_reconstruct(z, mod, nbound, mbound, n, m)) continue;
            mpq_class cand(n, m);
            cand.canonicalize();
            // Exact verification.
            mpq_class acc(0);
            for (std::size_t i = poly.size(); i-- > 0;) acc = acc * cand + poly[i];
            if (acc == 0) found.push_back(cand);
        }
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        return found;
    }
    throw Error(ErrorKind::internal, "no usable prime for rational root search");
}

}  // namespace

RootReport roots_in_field(const BinaryForm& f) {
    if (f.is_zero()) throw Error(ErrorKind::constraint, "roots of the zero form");
    const FieldRef& field = f.field();
    const SplitEnds se = split_ends(f);
    RootReport rep;
    int accounted = se.y_mult + se.x_mult;
    if (se.y_mult > 0)
        rep.roots.push_back({{Scalar::one(field), Scalar::zero(field)}, se.y_mult});
    if (se.x_mult > 0)
        rep.roots.push_back({{Scalar::zero(field), Scalar::one(field)}, se.x_mult});

    upoly::Poly core = se.core;
    if (upoly::degree(core) > 0) {
        if (field->is_prime_field()) {
            if (field->modulus() > 65521)
                throw Error(ErrorKind::constraint,
                            "root scan over F_p requires p <= 65521");
            const unsigned long p = field->modulus().get_ui();
            upoly::Poly rem = core;
            for (unsigned long a = 0; a < p && upoly::degree(rem) > 0; ++a) {
                const Scalar sa(field, static_cast<long>(a));
                int mult = 0;
                while (upoly::degree(rem) > 0 && upoly::eval(rem, sa).is_zero()) {
                    upoly::Poly lin{-sa, Scalar::one(field)};
                    rem = upoly::div_exact(rem, lin);
                    ++mult;
                }
                if (mult > 0) {
                    rep.roots.push_back({{sa, Scalar::one(field)}, mult});
                    accounted += mult;
                }
            }
        } else {
            // Squarefree part over Q, then its primitive integer version.
            upoly::Poly sf = upoly::div_exact(core, upoly::gcd(core, upoly::derivative(core)));
            if (upoly::degree(sf) >= 1) {
                std::vector<mpz_class> sprim = to_primitive_int(sf);
                std::vector<mpq_class> rts = rational_roots_squarefree(sprim);
                for (const mpq_class& r : rts) {
                    const Scalar sr(field, r);
                    upoly::Poly lin{-sr, Scalar::one(field)};
                    int mult = 0;
                    upoly::Poly rem = core;
                    for (;;) {
                        auto [q, rr] = upoly::divmod(rem, lin);
                        if (!upoly::is_zero(rr)) break;
                        rem = q;
                        ++mult;
                    }
                    rep.roots.push_back({{sr, Scalar::one(field)}, mult});
                    accounted += mult;
                }
            }
        }
    }
    rep.split = (accounted == f.degree());
    return rep;
}

BinaryForm divide_root(const BinaryForm& f, const ProjectivePoint& pt) {
    const int d = f.degree();
    if (d < 1) throw Error(ErrorKind::degree, "cannot divide a constant");
    if (!eval(f, pt.s, pt.t).is_zero())
        throw Error(ErrorKind::constraint, "point is not a root");
    if (pt.t.is_zero()) {
        // factor y
        BinaryForm r(f.field(), f.tag(), d - 1);
        for (int i = 1; i <= d; ++i) r[i - 1] = f[i];
        return r;
    }
    const Scalar root = pt.s / pt.t;
    upoly::Poly p = dehomogenize(f);
    upoly::Poly lin{-root, Scalar::one(f.field())};
    return homogenize(f.field(), f.tag(), upoly::div_exact(p, lin), d - 1);
}

// ---- parsing and printing --------------------------------------------

namespace {

struct Token {
    enum Kind { Int, Slash, Caret, Star, Plus, Minus, Var, End } kind;
    std::size_t pos;
    mpz_class value;
    char var = 0;
};

std::vector<Token> tokenize(const std::string& text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        const char ch = text[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({Token::Int, i, mpz_class(text.substr(i, j - i)), 0});
            i = j;
            continue;
        }
        Token t{Token::End, i, mpz_class(0), 0};
        switch (ch) {
            case '/': t.kind = Token::Slash; break;
            case '^': t.kind = Token::Caret; break;
            case '*': t.kind = Token::Star; break;
            case '+': t.kind = Token::Plus; break;
            case '-': t.kind = Token::Minus; break;
            case 'x': case 'y': case 'u': case 'v':
                t.kind = Token::Var;
                t.var = ch;
                break;
            default: {
                std::ostringstream os;
                os << "syntax error at position " << i << ": unexpected character '" << ch << "'";
                throw Error(ErrorKind::parse, os.str());
            }
        }
        out.push_back(t);
        ++i;
    }
    out.push_back({Token::End, text.size(), mpz_class(0), 0});
    return out;
}

struct RawTerm {
    mpq_class coeff;
    int e_first = 0;   // exponent of x (or u)
    int e_second = 0;  // exponent of y (or v)
    std::string text;
};

[[noreturn]] void syntax_error(const Token& t, const std::string& what) {
    std::ostringstream os;
    os << "syntax error at position " << t.pos << ": " << what;
    throw Error(ErrorKind::parse, os.str());
}

}  // namespace

BinaryForm parse_form(const std::string& text, const FieldRef& field) {
    const std::vector<Token> toks = tokenize(text);
    std::size_t i = 0;
    std::vector<RawTerm> terms;
    bool saw_primal = false, saw_dual = false;

    auto parse_uint = [&](const char* what) -> unsigned long {
        if (toks[i].kind != Token::Int) syntax_error(toks[i], what);
        if (!toks[i].value.fits_ulong_p()) syntax_error(toks[i], "integer too large");
        unsigned long v = toks[i].value.get_ui();
        ++i;
        return v;
    };

    bool first_term = true;
    while (toks[i].kind != Token::End) {
        int sign = 1;
        if (toks[i].kind == Token::Plus || toks[i].kind == Token::Minus) {
            if (first_term && toks[i].kind == Token::Plus)
                syntax_error(toks[i], "unexpected '+'");
            sign = (toks[i].kind == Token::Minus) ? -1 : 1;
            ++i;
        } else if (!first_term) {
            syntax_error(toks[i], "expected '+' or '-' between terms");
        }
        first_term = false;

        const std::size_t term_start = toks[i].pos;
        RawTerm term;
        term.coeff = 1;
        bool have_coeff = false, have_mono = false;

        if (toks[i].kind == Token::Int) {
            mpz_class num = toks[i].value;
            ++i;
            if (toks[i].kind == Token::Slash) {
                ++i;
                if (toks[i].kind != Token::Int) syntax_error(toks[i], "expected denominator");
                if (toks[i].value == 0) syntax_error(toks[i], "zero denominator");
                term.coeff = mpq_class(num, toks[i].value);
                term.coeff.canonicalize();
                ++i;
            } else {
                term.coeff = mpq_class(num);
            }
            have_coeff = true;
            if (toks[i].kind == Token::Star &&
                (i + 1 < toks.size() && toks[i + 1].kind == Token::Var))
                ++i;  // optional '*' between coefficient and monomial
        }

        while (toks[i].kind == Token::Var) {
            const char var = toks[i].var;
            ++i;
            unsigned long exp = 1;
            if (toks[i].kind == Token::Caret) {
                ++i;
                exp = parse_uint("expected exponent");
            }
            if (var == 'x' || var == 'y') saw_primal = true;
            if (var == 'u' || var == 'v') saw_dual = true;
            if (var == 'x' || var == 'u')
                term.e_first += static_cast<int>(exp);
            else
                term.e_second += static_cast<int>(exp);
            have_mono = true;
            if (toks[i].kind == Token::Star) {
                if (i + 1 < toks.size() && toks[i + 1].kind == Token::Var)
                    ++i;
                else
                    syntax_error(toks[i + 1], "expected variable after '*'");
            }
        }

        if (!have_coeff && !have_mono) syntax_error(toks[i], "expected a term");
        if (sign < 0) term.coeff = -term.coeff;
        std::size_t term_end = toks[i].pos;
        term.text = text.substr(term_start, term_end - term_start);
        while (!term.text.empty() && std::isspace(static_cast<unsigned char>(term.text.back())))
            term.text.pop_back();
        terms.push_back(std::move(term));
    }

    if (terms.empty()) throw Error(ErrorKind::parse, "empty form");
    if (saw_primal && saw_dual)
        throw Error(ErrorKind::parse, "cannot mix primal (x,y) and dual (u,v) variables");
    const VarTag tag = saw_dual ? VarTag::dual : VarTag::primal;

    const int degree = terms.front().e_first + terms.front().e_second;
    for (const RawTerm& t : terms) {
        if (t.e_first + t.e_second != degree) {
            std::ostringstream os;
            os << "inhomogeneous form: monomial '" << t.text << "' has degree "
               << (t.e_first + t.e_second) << ", expected " << degree << " (from '"
               << terms.front().text << "')";
            throw Error(ErrorKind::parse, os.str());
        }
    }

    BinaryForm f(field, tag, degree);
    for (const RawTerm& t : terms) f[t.e_second] += Scalar(field, t.coeff);
    return f;
}

namespace {

std::string monomial_string(VarTag tag, int e_first, int e_second) {
    const char* X = (tag == VarTag::primal) ? "x" : "u";
    const char* Y = (tag == VarTag::primal) ? "y" : "v";
    std::ostringstream os;
    if (e_first > 0) {
        os << X;
        if (e_first > 1) os << "^" << e_first;
    }
    if (e_second > 0) {
        if (e_first > 0) os << "*";
        os << Y;
        if (e_second > 1) os << "^" << e_second;
    }
    return os.str();
}

}  // namespace

std::string to_string(const BinaryForm& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const int d = f.degree();
    for (int i = 0; i <= d; ++i) {
        const Scalar& c = f[i];
        if (c.is_zero()) continue;
        const bool neg = sgn(c.value()) < 0;
        mpq_class a = neg ? mpq_class(-c.value()) : c.value();
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        std::string mono = monomial_string(f.tag(), d - i, i);
        std::string num = (a.get_den() == 1) ? a.get_num().get_str()
                                             : a.get_num().get_str() + "/" + a.get_den().get_str();
        if (mono.empty()) {
            os << num;
        } else if (a == 1) {
            os << mono;
        } else {
            os << num << "*" << mono;
        }
    }
    return os.str();
}

std::string to_string(const LinearForm& l) { return to_string(linear_to_form(l)); }

}  // namespace waring
