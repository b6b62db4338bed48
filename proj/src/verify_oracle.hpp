#ifndef WARING_VERIFY_ORACLE_HPP
#define WARING_VERIFY_ORACLE_HPP

#include <cstdint>
#include <vector>

// Brute-force machinery for the acceptance suite. Deliberately independent
// of the library's Scalar/Matrix code paths: plain uint64 arithmetic mod a
// small prime. Nothing here is part of the library API.

namespace waring::oracle {

inline std::uint64_t mulp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return a * b % p;  // p <= 65521, no overflow in 64 bits
}

inline std::uint64_t powp(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t acc = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) acc = mulp(acc, b, p);
        b = mulp(b, b, p);
        e >>= 1;
    }
    return acc;
}

inline std::uint64_t invp(std::uint64_t a, std::uint64_t p) { return powp(a, p - 2, p); }

// Coefficient vectors (c_0..c_d of sum c_i x^{d-i} y^i) of l^d for all
// p+1 points l = s*x + t*y of P^1(F_p): (s:1) for s in 0..p-1, then (1:0).
struct PowerBasis {
    std::uint64_t p;
    int d;
    std::vector<std::vector<std::uint64_t>> vecs;
};

inline PowerBasis make_power_basis(std::uint64_t p, int d) {
    PowerBasis basis{p, d, {}};
    // binomials mod p (d < p so they are nonzero)
    std::vector<std::vector<std::uint64_t>> binom(d + 1, std::vector<std::uint64_t>(d + 1, 0));
    for (int n = 0; n <= d; ++n) {
        binom[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            binom[n][k] = (binom[n - 1][k - 1] + (k <= n - 1 ? binom[n - 1][k] : 0)) % p;
    }
    for (std::uint64_t s = 0; s < p; ++s) {
        std::vector<std::uint64_t> v(d + 1);
        for (int i = 0; i <= d; ++i) v[i] = mulp(binom[d][i], powp(s, d - i, p), p);
        basis.vecs.push_back(std::move(v));  // l = s*x + y
    }
    std::vector<std::uint64_t> xd(d + 1, 0);
    xd[0] = 1;
    basis.vecs.push_back(std::move(xd));  // l = x
    return basis;
}

// Eliminates [columns(subset) | f]; true iff f has no pivot of its own.
inline bool in_span(const PowerBasis& basis, const std::vector<int>& subset,
                    const std::vector<std::uint64_t>& f) {
    const std::uint64_t p = basis.p;
    const int rows = basis.d + 1;
    const int cols = static_cast<int>(subset.size()) + 1;
    std::vector<std::uint64_t> m(static_cast<std::size_t>(rows) * cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j + 1 < cols; ++j) m[i * cols + j] = basis.vecs[subset[j]][i];
        m[i * cols + cols - 1] = f[i] % p;
    }
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int piv = -1;
        for (int i = r; i < rows; ++i)
            if (m[i * cols + c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (c == cols - 1) return false;  // pivot in the f column
        for (int j = 0; j < cols; ++j) std::swap(m[piv * cols + j], m[r * cols + j]);
        const std::uint64_t inv = invp(m[r * cols + c], p);
        for (int i = r + 1; i < rows; ++i) {
            const std::uint64_t factor = mulp(m[i * cols + c], inv, p);
            if (factor == 0) continue;
            for (int j = c; j < cols; ++j) {
                std::uint64_t sub = mulp(factor, m[r * cols + j], p);
                m[i * cols + j] = (m[i * cols + j] + p - sub) % p;
            }
        }
        ++r;
    }
    return true;
}

// Minimal r such that f lies in the span of r of the p+1 power vectors,
// by exhaustive subset enumeration in increasing r.
inline int min_span_rank(const PowerBasis& basis, const std::vector<std::uint64_t>& f) {
    bool zero = true;
    for (std::uint64_t c : f)
        if (c % basis.p != 0) zero = false;
    if (zero) return 0;
    const int n = static_cast<int>(basis.vecs.size());
    for (int r = 1; r <= n; ++r) {
        std::vector<int> idx(r);
        for (int i = 0; i < r; ++i) idx[i] = i;
        for (;;) {
            if (in_span(basis, idx, f)) return r;
            int pos = r - 1;
            while (pos >= 0 && idx[pos] == n - r + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int j = pos + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return -1;  // unreachable for p >= d+1
}

// True when some element of the given slice (spanned by basis vectors of
// length e+1, coefficients mod p) has exactly e distinct roots in P^1(F_p),
// i.e. is squarefree and split. Exhaustive over the projectivized slice.
inline bool split_witness_exists(std::uint64_t p, int e,
                                 const std::vector<std::vector<std::uint64_t>>& slice) {
    if (slice.empty()) return false;
    const std::size_t dim = slice.size();
    // Power tables for the p+1 evaluation points.
    std::vector<std::vector<std::uint64_t>> point_pow;
    for (std::uint64_t s = 0; s < p; ++s) {
        std::vector<std::uint64_t> row(e + 1);
        for (int i = 0; i <= e; ++i) row[i] = powp(s, e - i, p);  // (s:1)
        point_pow.push_back(std::move(row));
    }
    {
        std::vector<std::uint64_t> row(e + 1, 0);
        row[0] = 1;  // (1:0)
        point_pow.push_back(std::move(row));
    }

    std::vector<std::uint64_t> coords(dim, 0), cand(e + 1);
    for (std::size_t lead = 0; lead < dim; ++lead) {
        std::fill(coords.begin(), coords.end(), 0ULL);
        coords[lead] = 1;
        for (;;) {
            std::fill(cand.begin(), cand.end(), 0ULL);
            for (std::size_t j = lead; j < dim; ++j) {
                if (coords[j] == 0) continue;
                for (int i = 0; i <= e; ++i)
                    cand[i] = (cand[i] + mulp(coords[j], slice[j][i], p)) % p;
            }
            int zeros = 0;
            for (const auto& pt : point_pow) {
                std::uint64_t acc = 0;
                for (int i = 0; i <= e; ++i) acc = (acc + mulp(cand[i], pt[i], p)) % p;
                if (acc == 0) ++zeros;
            }
            if (zeros == e) return true;
            bool exhausted = true;
            for (std::size_t pos = dim; pos > lead + 1;) {
                --pos;
                if (++coords[pos] < p) {
                    exhausted = false;
                    break;
                }
                coords[pos] = 0;
            }
            if (exhausted) break;
        }
    }
    return false;
}

}  // namespace waring::oracle

#endif
