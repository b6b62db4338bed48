#include "waring/apolar.hpp"

#include <algorithm>
#include <sstream>

namespace waring {

namespace {

BinaryForm dual_basis_monomial(const FieldRef& field, VarTag tag, int e, int j) {
    BinaryForm m(field, tag, e);
    m[j] = Scalar::one(field);
    return m;
}

BinaryForm form_from_vector(const FieldRef& field, VarTag tag, const std::vector<Scalar>& v) {
    return BinaryForm::from_coeffs(field, tag, v);
}

// Leading nonzero coefficient scaled to 1.
BinaryForm normalize_leading(const BinaryForm& f) {
    for (int i = 0; i <= f.degree(); ++i) {
        if (!f[i].is_zero()) return scale(f, f[i].inverse());
    }
    return f;
}

}  // namespace

Matrix catalecticant(const BinaryForm& f, int e) {
    const int d = f.degree();
    if (e < 0 || e > d) throw Error(ErrorKind::degree, "catalecticant index out of range");
    if (f.tag() != VarTag::primal)
        throw Error(ErrorKind::constraint, "catalecticant expects a primal form");
    Matrix m(f.field(), d - e + 1, e + 1);
    const VarTag dual_tag = opposite(f.tag());
    for (int j = 0; j <= e; ++j) {
        BinaryForm img = apolar_action(dual_basis_monomial(f.field(), dual_tag, e, j), f);
        for (int r = 0; r <= d - e; ++r) m.at(r, j) = img[r];
    }
    return m;
}

std::vector<BinaryForm> apolar_slice(const BinaryForm& f, int e) {
    const VarTag dual_tag = opposite(f.tag());
    if (e > f.degree()) {
        // Every degree-e form annihilates f.
        std::vector<BinaryForm> all;
        for (int j = 0; j <= e; ++j)
            all.push_back(dual_basis_monomial(f.field(), dual_tag, e, j));
        return all;
    }
    std::vector<BinaryForm> slice;
    for (const auto& v : kernel_basis(catalecticant(f, e)))
        slice.push_back(form_from_vector(f.field(), dual_tag, v));
    return slice;
}

namespace {

// Smallest e with a nontrivial kernel, plus that kernel. For binary forms
// the first kernel has dimension 1, or 2 exactly when d1 = d2 = (d+2)/2.
struct FirstKernel {
    int d1;
    std::vector<BinaryForm> basis;
};

FirstKernel first_kernel(const BinaryForm& f) {
    if (f.is_zero()) throw Error(ErrorKind::constraint, "apolar ideal of the zero form");
    const int d = f.degree();
    f.field()->ensure_degree_supported(d);
    const int bound = (d + 3) / 2;  // kernel guaranteed by e = ceil((d+1)/2)
    for (int e = 1; e <= std::min(d, bound); ++e) {
        std::vector<BinaryForm> slice = apolar_slice(f, e);
        if (slice.empty()) continue;
        const std::size_t dim = slice.size();
        if (dim > 2 || (dim == 2 && 2 * e != d + 2)) {
            std::ostringstream os;
            os << "first apolar kernel at degree " << e << " has dimension " << dim
               << "; binary forms admit 1, or 2 only when d1 = d2";
            throw Error(ErrorKind::internal, os.str());
        }
        return {e, std::move(slice)};
    }
    // f constant (d = 0): the ideal is (u, v).
    if (d == 0) {
        std::vector<BinaryForm> basis;
        basis.push_back(dual_basis_monomial(f.field(), opposite(f.tag()), 1, 0));
        basis.push_back(dual_basis_monomial(f.field(), opposite(f.tag()), 1, 1));
        return {1, std::move(basis)};
    }
    throw Error(ErrorKind::internal, "no apolar generator found below the Sylvester bound");
}

// Reduce v modulo the span of the given forms (all same degree), zeroing
// the coordinates where the span has pivots; deterministic.
BinaryForm reduce_modulo_span(const BinaryForm& v, const std::vector<BinaryForm>& span) {
    if (span.empty()) return v;
    const int n = v.degree() + 1;
    // Row-reduce the span, then eliminate pivots from v.
    Matrix m(v.field(), static_cast<int>(span.size()), n);
    for (int i = 0; i < static_cast<int>(span.size()); ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = span[i][j];
    Echelon ech = bareiss_echelon(std::move(m));
    std::vector<Scalar> x = v.coeffs();
    const int nr = static_cast<int>(ech.pivot_cols.size());
    for (int pr = 0; pr < nr; ++pr) {
        const int pc = ech.pivot_cols[pr];
        if (x[pc].is_zero()) continue;
        const Scalar factor = x[pc] / ech.m.at(pr, pc);
        for (int j = pc; j < n; ++j) x[j] -= factor * ech.m.at(pr, j);
    }
    return form_from_vector(v.field(), v.tag(), x);
}

std::vector<BinaryForm> g1_multiples(const BinaryForm& g1, int target_degree) {
    std::vector<BinaryForm> mult;
    const int s = target_degree - g1.degree();
    if (s < 0) return mult;
    for (int j = 0; j <= s; ++j) {
        BinaryForm mono(g1.field(), g1.tag(), s);
        mono[j] = Scalar::one(g1.field());
        mult.push_back(mul(g1, mono));
    }
    return mult;
}

}  // namespace

ApolarPair apolar_pair(const BinaryForm& f) {
    FirstKernel fk = first_kernel(f);
    const int d = f.degree();
    const int d1 = fk.d1;
    const int d2 = d + 2 - d1;
    BinaryForm g1 = normalize_leading(fk.basis.front());

    BinaryForm g2(f.field(), opposite(f.tag()), d2);
    if (fk.basis.size() == 2) {
        g2 = normalize_leading(reduce_modulo_span(fk.basis[1], {g1}));
    } else {
        const std::vector<BinaryForm> mult = g1_multiples(g1, d2);
        for (const BinaryForm& cand : apolar_slice(f, d2)) {
            BinaryForm red = reduce_modulo_span(cand, mult);
            if (!red.is_zero()) {
                g2 = normalize_leading(red);
                break;
            }
        }
        if (g2.is_zero())
            throw Error(ErrorKind::internal, "no independent second apolar generator");
    }
    return ApolarPair{std::move(g1), std::move(g2), d1, d2};
}

RankCertificate waring_rank(const BinaryForm& f) {
    FirstKernel fk = first_kernel(f);
    const int d = f.degree();
    const int d1 = fk.d1;
    const int d2 = d + 2 - d1;
    BinaryForm g1 = normalize_leading(fk.basis.front());
    MultiplicityProfile profile = squarefree_profile(g1);
    bool sf = true;
    for (const auto& e : profile)
        if (e.multiplicity > 1) sf = false;
    const int rank = sf ? d1 : d2;
    return RankCertificate{rank, std::move(g1), sf, std::move(profile), d1, d2};
}

int border_rank(const BinaryForm& f) {
    if (f.is_zero()) throw Error(ErrorKind::constraint, "border rank of the zero form");
    f.field()->ensure_degree_supported(f.degree());
    int best = 0;
    for (int e = 0; e <= f.degree(); ++e) best = std::max(best, rank(catalecticant(f, e)));
    return best;
}

namespace {

// True when g has exactly deg(g) distinct roots in the base field.
bool is_split_squarefree(const BinaryForm& g) {
    if (g.is_zero()) return false;
    RootReport rep = roots_in_field(g);
    if (!rep.split) return false;
    for (const auto& [pt, mult] : rep.roots)
        if (mult > 1) return false;
    return true;
}

}  // namespace

std::optional<BinaryForm> find_split_squarefree_in_slice(const BinaryForm& f, int e, Rng& rng,
                                                         int random_tries,
                                                         long exhaustive_max_points) {
    std::vector<BinaryForm> basis = apolar_slice(f, e);
    if (basis.empty()) return std::nullopt;
    const FieldRef& field = f.field();

    // Basis elements and small random combinations.
    for (const BinaryForm& b : basis)
        if (is_split_squarefree(b)) return normalize_leading(b);
    for (int t = 0; t < random_tries; ++t) {
        BinaryForm cand(field, basis.front().tag(), e);
        for (const BinaryForm& b : basis)
            cand = add(cand, scale(b, random_scalar(field, rng, 20)));
        if (!cand.is_zero() && is_split_squarefree(cand)) return normalize_leading(cand);
    }

    // Exhaustive sweep of P(slice) over a small prime field.
    if (field->is_prime_field() && exhaustive_max_points > 0) {
        const unsigned long p = field->modulus().get_ui();
        const std::size_t dim = basis.size();
        double npoints = 0;
        for (std::size_t lead = 0; lead < dim; ++lead) {
            double block = 1;
            for (std::size_t j = lead + 1; j < dim; ++j) block *= static_cast<double>(p);
            npoints += block;
        }
        if (npoints <= static_cast<double>(exhaustive_max_points)) {
            std::vector<unsigned long> coords(dim, 0);
            for (std::size_t lead = 0; lead < dim; ++lead) {
                // coords[lead] = 1, positions after lead range over F_p.
                std::fill(coords.begin(), coords.end(), 0UL);
                coords[lead] = 1;
                for (;;) {
                    BinaryForm cand(field, basis.front().tag(), e);
                    for (std::size_t j = lead; j < dim; ++j) {
                        if (coords[j] != 0)
                            cand = add(cand,
                                       scale(basis[j], Scalar(field, static_cast<long>(coords[j]))));
                    }
                    if (is_split_squarefree(cand)) return normalize_leading(cand);
                    // Odometer over positions lead+1..dim-1.
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
        }
    }
    return std::nullopt;
}

DecomposeResult decompose(const BinaryForm& f, Rng& rng) {
    RankCertificate cert = waring_rank(f);
    const int d = f.degree();
    const int r = cert.rank;
    const FieldRef& field = f.field();

    std::optional<BinaryForm> generator;
    if (cert.g1_squarefree && r == cert.d1) {
        generator = cert.g1;
    } else {
        generator = find_split_squarefree_in_slice(f, r, rng, 50, 0);
    }

    BinaryForm gen = generator.value_or(cert.g1);
    DecomposeResult result{std::move(cert), gen, std::nullopt};
    if (!generator) return result;

    RootReport rep = roots_in_field(gen);
    bool simple = rep.split;
    for (const auto& [pt, mult] : rep.roots)
        if (mult > 1) simple = false;
    if (!simple || static_cast<int>(rep.roots.size()) != r) return result;

    // Dual root (s:t) gives the line l = s x + t y; solve for coefficients.
    std::vector<LinearForm> lines;
    for (const auto& [pt, mult] : rep.roots) lines.push_back(LinearForm{pt.s, pt.t, f.tag()});
    Matrix a(field, d + 1, r);
    for (int j = 0; j < r; ++j) {
        BinaryForm pw = power_of_linear(lines[j], d);
        for (int i = 0; i <= d; ++i) a.at(i, j) = pw[i];
    }
    std::optional<std::vector<Scalar>> lam = solve(a, f.coeffs());
    if (!lam) throw Error(ErrorKind::internal, "apolar decomposition system inconsistent");

    WaringDecomposition dec;
    BinaryForm check(field, f.tag(), d);
    for (int j = 0; j < r; ++j) {
        if ((*lam)[j].is_zero())
            throw Error(ErrorKind::internal, "decomposition produced a zero coefficient");
        dec.terms.push_back(WaringTerm{(*lam)[j], lines[j]});
        check = add(check, scale(power_of_linear(lines[j], d), (*lam)[j]));
    }
    if (check != f) throw Error(ErrorKind::internal, "decomposition failed to reconstruct f");
    result.decomposition = std::move(dec);
    return result;
}

std::pair<int, int> forbidden_probe(const BinaryForm& f, const LinearForm& l, const Scalar& c) {
    if (f.degree() < 1) throw Error(ErrorKind::degree, "probe needs degree >= 1");
    const int before = waring_rank(f).rank;
    BinaryForm g = add(f, scale(power_of_linear(l, f.degree()), c));
    const int after = g.is_zero() ? 0 : waring_rank(g).rank;
    return {before, after};
}

}  // namespace waring
