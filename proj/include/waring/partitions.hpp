#ifndef WARING_PARTITIONS_HPP
#define WARING_PARTITIONS_HPP

#include <string>
#include <vector>

#include "waring/binary_form.hpp"

namespace waring {

// Partition of n with weakly decreasing positive parts. The empty partition
// of 0 is a first-class value (it is derived((1^n))).
class Partition {
public:
    Partition() = default;  // empty partition of 0
    static Partition make(std::vector<int> parts);
    static Partition empty() { return Partition(); }

    int n() const { return n_; }
    int num_parts() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int max_part() const { return parts_.empty() ? 0 : parts_.front(); }

    // m_i = number of parts equal to i.
    int multiplicity(int i) const;

    std::string str() const;  // "3,2,1,1" ("-" for the empty partition)

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int n_ = 0;
};

// mu refines lambda: the parts of mu can be grouped into blocks whose sums
// are exactly the parts of lambda.
bool refines(const Partition& mu, const Partition& lambda);

// Each part decreased by one, zeros dropped; partitions n - #parts.
Partition derived(const Partition& lambda);

// Dual-variety inclusion test: true iff |lambda'| <= |mu'| and the surplus
// can be added onto the parts of lambda' (count preserved, re-sorted) to
// reach a partition refined by mu'. Exhaustive over the compositions of the
// surplus; n <= 30 enforced.
bool dual_included(const Partition& lambda, const Partition& mu);

int dim_delta(const Partition& lambda);

// n - m_1 - 1; errors for (1^n) whose dual is degenerate.
int dim_dual(const Partition& lambda);

// d! * prod(lambda_i) / prod(m_i!) with d = number of parts. The factorial
// numerator is forced by deg_delta((1^n)) = 1.
mpz_class deg_delta(const Partition& lambda);

// (d+1)!/(m_2! ... m_p!) * prod(lambda_i - 1); requires m_1 = 0.
mpz_class deg_dual(const Partition& lambda);

// (3, 2^k, 1^{d-2k-3}), the partition whose dual carries the closure of the
// rank-(d-k) locus. Requires d - k > ceil((d+1)/2) and d - 2k - 3 >= 0.
Partition suprageneric_partition(int d, int k);

// Point of the conormal variety of Delta_lambda: distinct points (s_i : t_i),
// f = prod (t_i x - s_i y)^{lambda_i}, and
// g = sum_{lambda_i >= 2} (s_i u + t_i v)^{n - lambda_i + 2} g_i(u, v)
// with random cofactors g_i of degree lambda_i - 2.
struct ConormalSample {
    Partition lambda;
    std::vector<ProjectivePoint> points;
    std::vector<BinaryForm> cofactors;  // one per part with lambda_i >= 2
    BinaryForm f;  // primal, degree n
    BinaryForm g;  // dual, degree n
};

ConormalSample conormal_sample(const Partition& lambda, const FieldRef& field, Rng& rng);

// prod l_i^{lambda_i - 1} applied as a differential operator annihilates g.
bool annihilation_check(const ConormalSample& sample);

}  // namespace waring

#endif
