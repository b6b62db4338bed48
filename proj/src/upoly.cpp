#include "waring/upoly.hpp"

namespace waring::upoly {

void trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(const Poly& p) { return p.empty(); }

Poly add(const Poly& a, const Poly& b) {
    Poly r = a;
    if (r.size() < b.size()) r.resize(b.size(), Scalar());
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (i < a.size())
            r[i] = a[i] + b[i];
        else
            r[i] = b[i];
    }
    trim(r);
    return r;
}

Poly sub(const Poly& a, const Poly& b) {
    Poly nb = b;
    for (auto& c : nb) c = -c;
    return add(a, nb);
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    const FieldRef& f = a.front().field();
    Poly r(a.size() + b.size() - 1, Scalar::zero(f));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] += a[i] * b[j];
        }
    }
    trim(r);
    return r;
}

Poly scale(const Poly& a, const Scalar& c) {
    if (c.is_zero()) return {};
    Poly r = a;
    for (auto& x : r) x *= c;
    return r;
}

Poly derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    const FieldRef& f = p.front().field();
    Poly r(p.size() - 1, Scalar::zero(f));
    for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * Scalar(f, static_cast<long>(i));
    trim(r);
    return r;
}

Scalar eval(const Poly& p, const Scalar& x) {
    Scalar acc = Scalar::zero(x.field());
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

std::pair<Poly, Poly> divmod(const Poly& num, const Poly& den) {
    if (is_zero(den)) throw Error(ErrorKind::constraint, "polynomial division by zero");
    if (num.size() < den.size()) return {Poly{}, num};
    const FieldRef& f = den.front().field();
    Poly rem = num;
    Poly quo(num.size() - den.size() + 1, Scalar::zero(f));
    const Scalar lead_inv = den.back().inverse();
    for (int i = static_cast<int>(num.size()) - static_cast<int>(den.size()); i >= 0; --i) {
        Scalar c = rem[i + den.size() - 1] * lead_inv;
        quo[i] = c;
        if (c.is_zero()) continue;
        for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
    }
    trim(rem);
    trim(quo);
    return {quo, rem};
}

Poly div_exact(const Poly& num, const Poly& den) {
    auto [q, r] = divmod(num, den);
    if (!is_zero(r)) throw Error(ErrorKind::internal, "inexact polynomial division");
    return q;
}

Poly make_monic(Poly p) {
    trim(p);
    if (p.empty()) return p;
    const Scalar inv = p.back().inverse();
    for (auto& c : p) c *= inv;
    return p;
}

Poly gcd(Poly a, Poly b) {
    trim(a);
    trim(b);
    while (!is_zero(b)) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a));
}

Poly interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
    if (xs.size() != ys.size() || xs.empty())
        throw Error(ErrorKind::constraint, "interpolate: bad node count");
    const FieldRef& f = xs.front().field();
    // Newton form, then expand.
    const std::size_t n = xs.size();
    std::vector<Scalar> coef = ys;  // divided differences
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    Poly r{coef[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        // r = r*(t - xs[i]) + coef[i]
        Poly shifted(r.size() + 1, Scalar::zero(f));
        for (std::size_t j = 0; j < r.size(); ++j) {
            shifted[j + 1] += r[j];
            shifted[j] -= r[j] * xs[i];
        }
        shifted[0] += coef[i];
        r = std::move(shifted);
        trim(r);
        if (r.empty()) r = Poly{};
    }
    trim(r);
    return r;
}

}  // namespace waring::upoly
