#include "waring/partitions.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace waring {

Partition Partition::make(std::vector<int> parts) {
    for (int p : parts) {
        if (p <= 0) {
            std::ostringstream os;
            os << "partition parts must be positive, got " << p;
            throw Error(ErrorKind::constraint, os.str());
        }
    }
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    Partition r;
    r.parts_ = std::move(parts);
    r.n_ = 0;
    for (int p : r.parts_) r.n_ += p;
    return r;
}

int Partition::multiplicity(int i) const {
    int m = 0;
    for (int p : parts_)
        if (p == i) ++m;
    return m;
}

std::string Partition::str() const {
    if (parts_.empty()) return "-";
    std::ostringstream os;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    return os.str();
}

namespace {

// Exact cover over multisets: can the parts of mu be grouped into blocks
// summing to the parts of lambda? Deterministic backtracking; duplicate
// values at the same search level are skipped.
bool cover(std::vector<int>& mu, const std::vector<int>& lambda, std::size_t li) {
    if (li == lambda.size()) {
        for (int v : mu)
            if (v != 0) return false;
        return true;
    }
    const int target = lambda[li];
    // Choose a subset of the remaining mu-parts summing to target, then
    // recurse on the next lambda-part.
    std::function<bool(std::size_t, int)> pick = [&](std::size_t from, int remaining) -> bool {
        if (remaining == 0) return cover(mu, lambda, li + 1);
        int prev = -1;
        for (std::size_t i = from; i < mu.size(); ++i) {
            if (mu[i] == 0 || mu[i] > remaining || mu[i] == prev) continue;
            prev = mu[i];
            const int saved = mu[i];
            mu[i] = 0;
            if (pick(i + 1, remaining - saved)) {
                mu[i] = saved;
                return true;
            }
            mu[i] = saved;
        }
        return false;
    };
    return pick(0, target);
}

}  // namespace

bool refines(const Partition& mu, const Partition& lambda) {
    if (mu.n() != lambda.n())
        throw Error(ErrorKind::constraint, "refinement needs partitions of the same integer");
    std::vector<int> parts = mu.parts();
    return cover(parts, lambda.parts(), 0);
}

Partition derived(const Partition& lambda) {
    std::vector<int> parts;
    for (int p : lambda.parts())
        if (p > 1) parts.push_back(p - 1);
    return parts.empty() ? Partition::empty() : Partition::make(std::move(parts));
}

bool dual_included(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n())
        throw Error(ErrorKind::constraint, "dual inclusion needs partitions of the same integer");
    if (lambda.n() > 30)
        throw Error(ErrorKind::constraint, "dual inclusion test limited to n <= 30");
    const Partition lp = derived(lambda);
    const Partition mp = derived(mu);
    if (lp.n() > mp.n()) return false;
    const int surplus = mp.n() - lp.n();
    if (lp.num_parts() == 0) return mp.num_parts() == 0;

    // Distribute the surplus over the parts of lambda' (count preserved),
    // deduplicating the resulting partitions.
    const std::vector<int>& base = lp.parts();
    const int np = lp.num_parts();
    std::set<std::vector<int>> seen;
    std::vector<int> extra(np, 0);
    std::function<bool(int, int)> distribute = [&](int idx, int remaining) -> bool {
        if (idx == np - 1) {
            extra[idx] = remaining;
            std::vector<int> parts(np);
            for (int i = 0; i < np; ++i) parts[i] = base[i] + extra[i];
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            if (!seen.insert(parts).second) return false;
            return refines(mp, Partition::make(parts));
        }
        for (int give = 0; give <= remaining; ++give) {
            extra[idx] = give;
            if (distribute(idx + 1, remaining - give)) return true;
        }
        extra[idx] = 0;
        return false;
    };
    return distribute(0, surplus);
}

int dim_delta(const Partition& lambda) { return lambda.num_parts(); }

int dim_dual(const Partition& lambda) {
    const int m1 = lambda.multiplicity(1);
    if (m1 == lambda.num_parts())
        throw Error(ErrorKind::constraint,
                    "dual of Delta_(1^n) is degenerate: no dual dimension");
    return lambda.n() - m1 - 1;
}

mpz_class deg_delta(const Partition& lambda) {
    const int d = lambda.num_parts();
    mpz_class r = factorial(d);
    for (int p : lambda.parts()) r *= p;
    for (int i = 1; i <= lambda.max_part(); ++i) r /= factorial(lambda.multiplicity(i));
    return r;
}

mpz_class deg_dual(const Partition& lambda) {
    if (lambda.multiplicity(1) != 0)
        throw Error(ErrorKind::constraint,
                    "dual degree formula needs m_1 = 0 (dual must be a hypersurface)");
    const int d = lambda.num_parts();
    mpz_class r = factorial(d + 1);
    for (int p : lambda.parts()) r *= (p - 1);
    for (int i = 2; i <= lambda.max_part(); ++i) r /= factorial(lambda.multiplicity(i));
    return r;
}

Partition suprageneric_partition(int d, int k) {
    if (k < 0) throw Error(ErrorKind::constraint, "k must be >= 0");
    if (d - k <= (d + 1 + 1) / 2) {
        std::ostringstream os;
        os << "rank " << d - k << " is not suprageneric for degree " << d
           << " (need d-k > ceil((d+1)/2) = " << (d + 2) / 2 << ")";
        throw Error(ErrorKind::constraint, os.str());
    }
    if (d - 2 * k - 3 < 0) {
        std::ostringstream os;
        os << "partition (3,2^" << k << ",1^{d-2k-3}) needs d-2k-3 >= 0, got " << (d - 2 * k - 3);
        throw Error(ErrorKind::constraint, os.str());
    }
    std::vector<int> parts{3};
    for (int i = 0; i < k; ++i) parts.push_back(2);
    for (int i = 0; i < d - 2 * k - 3; ++i) parts.push_back(1);
    return Partition::make(std::move(parts));
}

ConormalSample conormal_sample(const Partition& lambda, const FieldRef& field, Rng& rng) {
    if (lambda.num_parts() == 0 || lambda.max_part() < 2)
        throw Error(ErrorKind::constraint,
                    "conormal sample needs a part >= 2 (otherwise g would vanish)");
    const int n = lambda.n();
    field->ensure_degree_supported(n);
    const int d = lambda.num_parts();

    for (;;) {
        std::vector<ProjectivePoint> pts;
        bool ok = true;
        for (int i = 0; i < d && ok; ++i) {
            for (int attempt = 0;; ++attempt) {
                if (attempt > 200) {
                    ok = false;
                    break;
                }
                Scalar s = random_scalar(field, rng, 20);
                Scalar t = random_scalar(field, rng, 20);
                if (s.is_zero() && t.is_zero()) continue;
                ProjectivePoint cand{s, t};
                bool distinct = true;
                for (const auto& q : pts)
                    if (same_point(cand, q)) distinct = false;
                if (distinct) {
                    pts.push_back(cand);
                    break;
                }
            }
        }
        if (!ok) continue;

        BinaryForm f(field, VarTag::primal, 0);
        f[0] = Scalar::one(field);
        for (int i = 0; i < d; ++i) {
            LinearForm li{pts[i].t, -pts[i].s, VarTag::primal};  // t_i x - s_i y
            f = mul(f, power_of_linear(li, lambda.parts()[i]));
        }

        BinaryForm g(field, VarTag::dual, n);
        std::vector<BinaryForm> cofactors;
        for (int i = 0; i < d; ++i) {
            const int li = lambda.parts()[i];
            if (li < 2) continue;
            BinaryForm gi(field, VarTag::dual, li - 2);
            for (int j = 0; j <= li - 2; ++j) gi[j] = random_scalar(field, rng, 20);
            if (gi.is_zero()) gi[0] = Scalar::one(field);
            cofactors.push_back(gi);
            LinearForm dual_pt{pts[i].s, pts[i].t, VarTag::dual};  // s_i u + t_i v
            g = add(g, mul(power_of_linear(dual_pt, n - li + 2), gi));
        }
        if (g.is_zero()) continue;
        return ConormalSample{lambda, std::move(pts), std::move(cofactors), std::move(f),
                              std::move(g)};
    }
}

bool annihilation_check(const ConormalSample& sample) {
    const FieldRef& field = sample.f.field();
    BinaryForm op(field, VarTag::primal, 0);
    op[0] = Scalar::one(field);
    for (std::size_t i = 0; i < sample.points.size(); ++i) {
        const int li = sample.lambda.parts()[static_cast<int>(i)];
        if (li == 1) continue;
        LinearForm l{sample.points[i].t, -sample.points[i].s, VarTag::primal};
        op = mul(op, power_of_linear(l, li - 1));
    }
    return apolar_action(op, sample.g).is_zero();
}

}  // namespace waring
