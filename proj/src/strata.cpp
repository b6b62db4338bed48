#include "waring/strata.hpp"

#include <algorithm>
#include <sstream>

#include "waring/upoly.hpp"

namespace waring {

int generic_rank(int d) {
    if (d < 1) throw Error(ErrorKind::degree, "generic rank needs degree >= 1");
    return (d + 2) / 2;  // ceil((d+1)/2)
}

BinaryForm assemble_suprageneric(int d, const std::vector<LinearForm>& l, const LinearForm& g) {
    if (l.empty()) throw Error(ErrorKind::constraint, "need at least l_0");
    BinaryForm f = mul(power_of_linear(l[0], d - 1), linear_to_form(g));
    for (std::size_t i = 1; i < l.size(); ++i) f = add(f, power_of_linear(l[i], d));
    return f;
}

namespace {

void check_suprageneric_params(int d, int k) {
    if (k < 0) throw Error(ErrorKind::constraint, "k must be >= 0");
    if (d - k <= generic_rank(d)) {
        std::ostringstream os;
        os << "rank " << d - k << " is not suprageneric for degree " << d << " (generic rank "
           << generic_rank(d) << ")";
        throw Error(ErrorKind::constraint, os.str());
    }
}

constexpr long kSampleHeight = 50;  // "general point" = random integers of height 50

}  // namespace

SupragenericPoint suprageneric_sample(int d, int k, const FieldRef& field, Rng& rng) {
    check_suprageneric_params(d, k);
    field->ensure_degree_supported(d);
    for (int attempt = 0; attempt < 400; ++attempt) {
        std::vector<LinearForm> l;
        bool ok = true;
        for (int i = 0; i <= k && ok; ++i) {
            for (int tries = 0;; ++tries) {
                if (tries > 100) {
                    ok = false;
                    break;
                }
                LinearForm cand = random_linear(field, rng, kSampleHeight);
                bool distinct = true;
                for (const auto& other : l)
                    if (proportional(cand, other)) distinct = false;
                if (distinct) {
                    l.push_back(cand);
                    break;
                }
            }
        }
        if (!ok) continue;
        LinearForm g = random_linear(field, rng, kSampleHeight);
        if (proportional(g, l[0])) continue;
        BinaryForm f = assemble_suprageneric(d, l, g);
        if (f.is_zero()) continue;
        if (waring_rank(f).rank != d - k) continue;
        return SupragenericPoint{d, k, std::move(l), g, std::move(f)};
    }
    throw Error(ErrorKind::search_exhausted, "suprageneric sampling kept degenerating");
}

SampleResult sample_rank_r(int d, int r, const FieldRef& field, Rng& rng) {
    if (d < 1) throw Error(ErrorKind::degree, "degree must be >= 1");
    if (r < 1 || r > d) {
        std::ostringstream os;
        os << "rank " << r << " is unreachable for binary forms of degree " << d
           << ": ranks range over 1..d (values above the generic rank " << generic_rank(d)
           << " are the suprageneric strata d-k)";
        throw Error(ErrorKind::constraint, os.str());
    }
    field->ensure_degree_supported(d);
    const int g = generic_rank(d);
    if (r > g) {
        SupragenericPoint p = suprageneric_sample(d, d - r, field, rng);
        RankCertificate cert = waring_rank(p.f);
        return SampleResult{std::move(p.f), std::move(cert)};
    }
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<LinearForm> ls;
        bool ok = true;
        for (int i = 0; i < r && ok; ++i) {
            for (int tries = 0;; ++tries) {
                if (tries > 100) {
                    ok = false;
                    break;
                }
                LinearForm cand = random_linear(field, rng, kSampleHeight);
                bool distinct = true;
                for (const auto& other : ls)
                    if (proportional(cand, other)) distinct = false;
                if (distinct) {
                    ls.push_back(cand);
                    break;
                }
            }
        }
        if (!ok) continue;
        BinaryForm f(field, VarTag::primal, d);
        for (const auto& li : ls) f = add(f, power_of_linear(li, d));
        if (f.is_zero()) continue;
        RankCertificate cert = waring_rank(f);
        if (cert.rank == r) return SampleResult{std::move(f), std::move(cert)};
    }
    std::ostringstream os;
    os << "could not realize rank " << r << " in degree " << d << " after 100 attempts";
    throw Error(ErrorKind::search_exhausted, os.str());
}

namespace {

// Candidate coefficients c for which f + c*l^d can lie in the closure of
// the next-higher rank stratum: the maximal minors of the degree-(k+1)
// catalecticant must all vanish, so c-candidates are the common field roots
// of a few of those minors (each a polynomial in c found by interpolation).
std::vector<Scalar> raise_coefficient_candidates(const BinaryForm& f, const LinearForm& l,
                                                 int current_rank) {
    const FieldRef& field = f.field();
    const int d = f.degree();
    const int e = d - current_rank + 1;  // minimal generator degree of the target stratum
    const BinaryForm ld = power_of_linear(l, d);

    const int rows = d - e + 1, cols = e + 1;
    if (rows < cols) return {};  // no minor condition available at this rank

    // The magic c is a common root of every maximal minor, so gcd the
    // determinants of all square row windows (skipping identically zero
    // ones, which structured forms do produce).
    upoly::Poly h;
    for (int window = 0; window + cols <= rows; ++window) {
        std::vector<Scalar> xs, ys;
        for (int t = 0; t <= cols; ++t) {
            const Scalar ct(field, t);
            Matrix m = catalecticant(add(f, scale(ld, ct)), e);
            Matrix sq(field, cols, cols);
            for (int i = 0; i < cols; ++i)
                for (int j = 0; j < cols; ++j) sq.at(i, j) = m.at(window + i, j);
            xs.push_back(ct);
            ys.push_back(determinant(sq));
        }
        upoly::Poly minor = upoly::interpolate(xs, ys);
        if (upoly::is_zero(minor)) continue;
        h = upoly::is_zero(h) ? minor : upoly::gcd(h, minor);
        if (upoly::degree(h) == 0) break;  // coprime windows: no common root
    }
    if (upoly::is_zero(h) || upoly::degree(h) < 1) return {};

    std::vector<Scalar> out;
    BinaryForm hf = homogenize(field, VarTag::primal, h, upoly::degree(h));
    for (const auto& [pt, mult] : roots_in_field(hf).roots) {
        if (pt.t.is_zero()) continue;  // root at infinity is not a coefficient
        out.push_back(pt.s / pt.t);
    }
    return out;
}

std::optional<ChainStep> raise_step(const BinaryForm& f, const RankCertificate& cert, Rng& rng) {
    const FieldRef& field = f.field();
    const int d = f.degree();
    const int r = cert.rank;
    const int target = r + 1;

    if (target <= generic_rank(d)) {
        // A random power almost surely lands in the next stratum.
        for (int trial = 0; trial < 200; ++trial) {
            LinearForm l = random_linear(field, rng, 20);
            Scalar c = random_nonzero_scalar(field, rng, 20);
            BinaryForm f2 = add(f, scale(power_of_linear(l, d), c));
            if (f2.is_zero()) continue;
            if (waring_rank(f2).rank == target) return ChainStep{l, c, target};
        }
        return std::nullopt;
    }

    // Suprageneric step: the addition has to cancel a power summand, so the
    // usable lines are the simple roots of g1 and the coefficient is pinned
    // by a minor-vanishing condition.
    std::vector<LinearForm> candidates;
    RootReport rep = roots_in_field(cert.g1);
    for (const auto& [pt, mult] : rep.roots)
        if (mult == 1) candidates.push_back(LinearForm{pt.s, pt.t, VarTag::primal});

    for (const LinearForm& l : candidates) {
        for (const Scalar& c : raise_coefficient_candidates(f, l, r)) {
            if (c.is_zero()) continue;
            BinaryForm f2 = add(f, scale(power_of_linear(l, d), c));
            if (f2.is_zero()) continue;
            if (waring_rank(f2).rank == target) return ChainStep{l, c, target};
        }
    }

    // Over a small prime field an exhaustive sweep of (l, c) is feasible.
    if (field->is_prime_field() && field->modulus() <= 101) {
        const long p = field->modulus().get_si();
        std::vector<LinearForm> lines;
        for (long a = 0; a < p; ++a)
            lines.push_back(LinearForm{Scalar(field, a), Scalar::one(field), VarTag::primal});
        lines.push_back(LinearForm{Scalar::one(field), Scalar::zero(field), VarTag::primal});
        for (const LinearForm& l : lines) {
            for (long cc = 1; cc < p; ++cc) {
                BinaryForm f2 = add(f, scale(power_of_linear(l, d), Scalar(field, cc)));
                if (f2.is_zero()) continue;
                if (waring_rank(f2).rank == target)
                    return ChainStep{l, Scalar(field, cc), target};
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::vector<ChainStep> rank_raising_chain(const BinaryForm& f, Rng& rng) {
    if (f.is_zero()) throw Error(ErrorKind::constraint, "chain from the zero form");
    BinaryForm cur = f;
    RankCertificate cert = waring_rank(cur);
    const int d = f.degree();
    std::vector<ChainStep> chain;
    while (cert.rank < d) {
        std::optional<ChainStep> step = raise_step(cur, cert, rng);
        if (!step) {
            std::ostringstream os;
            os << "rank-raising search exhausted at rank " << cert.rank << " (degree " << d << ")";
            throw Error(ErrorKind::search_exhausted, os.str());
        }
        cur = add(cur, scale(power_of_linear(step->l, d), step->c));
        cert = waring_rank(cur);
        if (cert.rank != step->new_rank)
            throw Error(ErrorKind::internal, "chain step verification mismatch");
        chain.push_back(*step);
    }
    return chain;
}

std::vector<BinaryForm> tangent_generators(const SupragenericPoint& p) {
    const FieldRef& field = p.f.field();
    const int d = p.d;
    std::vector<BinaryForm> gens;
    const LinearForm x{Scalar::one(field), Scalar::zero(field), VarTag::primal};
    const LinearForm y{Scalar::zero(field), Scalar::one(field), VarTag::primal};
    auto push = [&](const BinaryForm& base, const LinearForm& times) {
        gens.push_back(mul(base, linear_to_form(times)));
    };
    for (int i = 1; i <= p.k; ++i) {
        BinaryForm li = power_of_linear(p.l[i], d - 1);
        push(li, x);
        push(li, y);
    }
    BinaryForm block = mul(power_of_linear(p.l[0], d - 2), linear_to_form(p.g));
    push(block, x);
    push(block, y);
    BinaryForm l0 = power_of_linear(p.l[0], d - 1);
    push(l0, x);
    push(l0, y);
    return gens;
}

int tangent_dimension(const SupragenericPoint& p) {
    std::vector<BinaryForm> gens = tangent_generators(p);
    Matrix m(p.f.field(), static_cast<int>(gens.size()), p.d + 1);
    for (int i = 0; i < static_cast<int>(gens.size()); ++i)
        for (int j = 0; j <= p.d; ++j) m.at(i, j) = gens[i][j];
    return rank(m);
}

RankCensus stratum_census(int d, int k, int samples, const FieldRef& field, Rng& rng) {
    check_suprageneric_params(d, k);
    if (samples < 1) throw Error(ErrorKind::constraint, "samples must be >= 1");
    field->ensure_degree_supported(d);

    RankCensus census;
    census.d = d;
    census.k = k;
    census.samples = samples;

    for (int s = 0, attempt = 0; s < samples; ++s, ++attempt) {
        Rng sub = rng.fork(static_cast<std::uint64_t>(attempt));
        std::vector<LinearForm> l;
        for (int i = 0; i <= k; ++i) {
            for (;;) {
                LinearForm cand = random_linear(field, sub, kSampleHeight);
                bool distinct = true;
                for (const auto& other : l)
                    if (proportional(cand, other)) distinct = false;
                if (distinct) {
                    l.push_back(cand);
                    break;
                }
            }
        }
        LinearForm g = random_linear(field, sub, kSampleHeight);
        const std::uint64_t mode = sub.below(4);
        bool g_eq_l0 = false;
        if (mode == 0) {
            g = l[0];
            g_eq_l0 = true;
        } else if (mode == 1) {
            if (k >= 2) {
                l[2] = l[1];
                ++census.coincident_samples;
            } else if (k == 1) {
                l[1] = l[0];
                ++census.coincident_samples;
            }
        } else {
            while (proportional(g, l[0])) g = random_linear(field, sub, kSampleHeight);
        }

        BinaryForm f = assemble_suprageneric(d, l, g);
        if (f.is_zero()) {
            // Cancellation to zero counts as the rank-0 boundary; resample.
            --s;
            continue;
        }
        const int r = waring_rank(f).rank;
        census.freq[r] += 1;
        if (g_eq_l0) census.freq_g_eq_l0[r] += 1;
        const bool allowed = (r >= 1 && r <= k + 1) || (r >= d - k && r <= d);
        if (!allowed) {
            census.flagged += 1;
            census.flagged_ranks.push_back(r);
        }
    }
    return census;
}

}  // namespace waring
