#include "waring/hypersurface.hpp"

#include <sstream>

namespace waring {

MultiPoly MultiPoly::constant(const FieldRef& field, int arity, const Scalar& c) {
    MultiPoly p(field, arity);
    p.add_term(std::vector<int>(arity, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const FieldRef& field, int arity, int index) {
    MultiPoly p(field, arity);
    std::vector<int> e(arity, 0);
    e[index] = 1;
    p.add_term(e, Scalar::one(field));
    return p;
}

void MultiPoly::add_term(const std::vector<int>& exponents, const Scalar& c) {
    if (static_cast<int>(exponents.size()) != arity_)
        throw Error(ErrorKind::internal, "exponent vector arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly MultiPoly::negate() const {
    MultiPoly r(field_, arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    MultiPoly r(field_, arity_);
    std::vector<int> e(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (int i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(field_, arity_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        std::vector<int> de = e;
        de[var] -= 1;
        r.add_term(de, c * Scalar(field_, static_cast<long>(e[var])));
    }
    return r;
}

Scalar MultiPoly::eval(const std::vector<Scalar>& point) const {
    if (static_cast<int>(point.size()) != arity_)
        throw Error(ErrorKind::internal, "evaluation point arity mismatch");
    Scalar acc = Scalar::zero(field_);
    for (const auto& [e, c] : terms_) {
        Scalar t = c;
        for (int i = 0; i < arity_; ++i) {
            if (e[i] > 0) t *= point[i].pow(static_cast<unsigned long>(e[i]));
        }
        acc += t;
    }
    return acc;
}

int MultiPoly::total_degree() const {
    int best = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        best = std::max(best, s);
    }
    return best;
}

bool MultiPoly::is_homogeneous() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        if (deg < 0) deg = s;
        if (s != deg) return false;
    }
    return true;
}

MultiPoly MultiPoly::divide_by_variable(int var) const {
    MultiPoly r(field_, arity_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0)
            throw Error(ErrorKind::internal, "inexact division by variable");
        std::vector<int> de = e;
        de[var] -= 1;
        r.terms_.emplace(de, c);
    }
    return r;
}

MultiPoly poly_determinant(const std::vector<std::vector<MultiPoly>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) throw Error(ErrorKind::internal, "empty determinant");
    const FieldRef& field = m[0][0].field();
    const int arity = m[0][0].arity();
    if (n > 20) throw Error(ErrorKind::constraint, "symbolic determinant too large");

    // minors[mask] = det of the first popcount(mask) rows on column set mask.
    std::vector<MultiPoly> cur{MultiPoly::constant(field, arity, Scalar::one(field))};
    std::vector<std::uint32_t> cur_masks{0};
    for (int r = 0; r < n; ++r) {
        std::map<std::uint32_t, MultiPoly> next;
        for (std::size_t idx = 0; idx < cur_masks.size(); ++idx) {
            const std::uint32_t mask = cur_masks[idx];
            const MultiPoly& minor = cur[idx];
            if (minor.is_zero()) continue;
            for (int c = 0; c < n; ++c) {
                if (mask & (1u << c)) continue;
                if (m[r][c].is_zero()) continue;
                // Laplace along row r: sign (-1)^{r + position of c in the set}.
                const int below = __builtin_popcount(mask & ((1u << c) - 1));
                MultiPoly contrib = m[r][c] * minor;
                if ((r + below) % 2 != 0) contrib = contrib.negate();
                const std::uint32_t nm = mask | (1u << c);
                auto it = next.find(nm);
                if (it == next.end())
                    next.emplace(nm, contrib);
                else
                    it->second = it->second + contrib;
            }
        }
        cur.clear();
        cur_masks.clear();
        for (auto& [mask, poly] : next) {
            cur_masks.push_back(mask);
            cur.push_back(std::move(poly));
        }
    }
    if (cur.size() != 1) throw Error(ErrorKind::internal, "determinant DP corrupted");
    return cur[0];
}

HypersurfaceContext context_make(int k, const FieldRef& field) {
    if (k < 1) throw Error(ErrorKind::constraint, "hypersurface context needs k >= 1");
    if (k > 6)
        throw Error(ErrorKind::constraint,
                    "k > 6 refused: the symbolic discriminant expansion grows too large");
    const int m = k + 1;       // degree of q in (u, v)
    const int arity = k + 2;   // variables b_0..b_{k+1}

    // Sylvester matrix of the generic form B = sum b_j u^{m-j} v^j and dB/du,
    // with MultiPoly entries; normalized as in discriminant():
    //   disc = (-1)^{m(m-1)/2} Res(B, B_u) / b_0.
    const int rows = 2 * m - 1;
    std::vector<std::vector<MultiPoly>> s(
        rows, std::vector<MultiPoly>(rows, MultiPoly::zero(field, arity)));
    for (int i = 0; i < m - 1; ++i)
        for (int j = 0; j <= m; ++j)
            s[i][i + j] = MultiPoly::variable(field, arity, j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= m - 1; ++j) {
            MultiPoly bj = MultiPoly::variable(field, arity, j);
            s[m - 1 + i][i + j] =
                bj * MultiPoly::constant(field, arity, Scalar(field, static_cast<long>(m - j)));
        }

    MultiPoly res = poly_determinant(s);
    MultiPoly disc = res.divide_by_variable(0);
    if ((static_cast<long>(m) * (m - 1) / 2) % 2 != 0) disc = disc.negate();

    if (!disc.is_homogeneous() || disc.total_degree() != 2 * k)
        throw Error(ErrorKind::internal, "discriminant is not homogeneous of degree 2k");

    std::vector<MultiPoly> partials;
    for (int j = 0; j < arity; ++j) partials.push_back(disc.derivative(j));
    return HypersurfaceContext{k, field, std::move(disc), std::move(partials)};
}

std::vector<Scalar> dp_coords(const BinaryForm& f) {
    const int d = f.degree();
    f.field()->ensure_degree_supported(d);
    std::vector<Scalar> a;
    a.reserve(d + 1);
    for (int i = 0; i <= d; ++i)
        a.push_back(f[i] / Scalar(f.field(), binomial(d, i)));
    return a;
}

namespace {

int k_from_coords(const std::vector<Scalar>& a) {
    const int d = static_cast<int>(a.size()) - 1;
    if (d < 3 || d % 2 == 0)
        throw Error(ErrorKind::degree, "hypersurface needs odd degree d = 2k+1 >= 3");
    return (d - 1) / 2;
}

Matrix hankel_from_coords(const FieldRef& field, const std::vector<Scalar>& a, int k) {
    Matrix h(field, k + 1, k + 2);
    for (int r = 0; r <= k; ++r)
        for (int c = 0; c <= k + 1; ++c) h.at(r, c) = a[r + c];
    return h;
}

Matrix delete_column(const Matrix& m, int col) {
    Matrix r(m.field(), m.rows(), m.cols() - 1);
    for (int i = 0; i < m.rows(); ++i) {
        int cc = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (j == col) continue;
            r.at(i, cc++) = m.at(i, j);
        }
    }
    return r;
}

}  // namespace

std::vector<Scalar> minors_from_coords(const FieldRef& field, const std::vector<Scalar>& a) {
    const int k = k_from_coords(a);
    Matrix h = hankel_from_coords(field, a, k);
    std::vector<Scalar> b;
    b.reserve(k + 2);
    for (int j = 0; j <= k + 1; ++j) {
        Scalar det = determinant(delete_column(h, j));
        if (j % 2 != 0) det = -det;
        b.push_back(det);
    }
    return b;
}

std::vector<Scalar> minors(const BinaryForm& f) {
    if (f.degree() < 3 || f.degree() % 2 == 0)
        throw Error(ErrorKind::degree, "hypersurface needs odd degree d = 2k+1 >= 3");
    return minors_from_coords(f.field(), dp_coords(f));
}

BinaryForm q_form(const BinaryForm& f) {
    std::vector<Scalar> b = minors(f);
    return BinaryForm::from_coeffs(f.field(), VarTag::dual, std::move(b));
}

namespace {

void check_context_degree(const HypersurfaceContext& ctx, int d) {
    if (d != 2 * ctx.k + 1) {
        std::ostringstream os;
        os << "context k = " << ctx.k << " expects degree " << 2 * ctx.k + 1 << ", got " << d;
        throw Error(ErrorKind::degree, os.str());
    }
}

}  // namespace

Scalar defining_value_at(const HypersurfaceContext& ctx, const std::vector<Scalar>& a) {
    check_context_degree(ctx, static_cast<int>(a.size()) - 1);
    return ctx.disc_in_b.eval(minors_from_coords(ctx.field, a));
}

Scalar defining_value(const HypersurfaceContext& ctx, const BinaryForm& f) {
    check_context_degree(ctx, f.degree());
    return ctx.disc_in_b.eval(minors(f));
}

std::vector<Scalar> defining_gradient_at(const HypersurfaceContext& ctx,
                                         const std::vector<Scalar>& a) {
    const int k = ctx.k;
    check_context_degree(ctx, static_cast<int>(a.size()) - 1);
    const FieldRef& field = ctx.field;
    Matrix h = hankel_from_coords(field, a, k);
    std::vector<Scalar> b = minors_from_coords(field, a);
    std::vector<Scalar> disc_grad;
    disc_grad.reserve(k + 2);
    for (const MultiPoly& partial : ctx.disc_partials) disc_grad.push_back(partial.eval(b));

    // d(b_j)/d(a_i): signed sum of (k x k) cofactors over the Hankel
    // positions (r, c) with r + c = i, skipping the deleted column j.
    std::vector<Scalar> grad(2 * k + 2, Scalar::zero(field));
    for (int i = 0; i <= 2 * k + 1; ++i) {
        Scalar acc = Scalar::zero(field);
        for (int j = 0; j <= k + 1; ++j) {
            if (disc_grad[j].is_zero()) continue;
            Matrix hj = delete_column(h, j);
            Scalar dbj = Scalar::zero(field);
            for (int r = 0; r <= k; ++r) {
                const int c = i - r;
                if (c < 0 || c > k + 1 || c == j) continue;
                const int cc = c < j ? c : c - 1;  // column index inside hj
                // cofactor of position (r, cc) in hj
                Matrix sub(field, k, k);
                int ri = 0;
                for (int rr = 0; rr <= k; ++rr) {
                    if (rr == r) continue;
                    int ci = 0;
                    for (int ccj = 0; ccj <= k; ++ccj) {
                        if (ccj == cc) continue;
                        sub.at(ri, ci++) = hj.at(rr, ccj);
                    }
                    ++ri;
                }
                Scalar cof = determinant(sub);
                if ((r + cc) % 2 != 0) cof = -cof;
                dbj += cof;
            }
            if (j % 2 != 0) dbj = -dbj;
            acc += disc_grad[j] * dbj;
        }
        grad[i] = acc;
    }
    return grad;
}

std::vector<Scalar> defining_gradient(const HypersurfaceContext& ctx, const BinaryForm& f) {
    check_context_degree(ctx, f.degree());
    return defining_gradient_at(ctx, dp_coords(f));
}

int degree_of_equation(const HypersurfaceContext& ctx) {
    const int deg_disc = ctx.disc_in_b.total_degree();
    if (deg_disc != 2 * ctx.k)
        throw Error(ErrorKind::internal, "discriminant degree drifted");
    // Each minor is homogeneous of degree k+1 in the a_i.
    return deg_disc * (ctx.k + 1);
}

}  // namespace waring
