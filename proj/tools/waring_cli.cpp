#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "waring/hypersurface.hpp"
#include "waring/partitions.hpp"
#include "waring/strata.hpp"
#include "waring/verify.hpp"

using json = nlohmann::ordered_json;
using namespace waring;

namespace {

constexpr const char* kSchema = "waring-forms/1";

FieldRef parse_field(const std::string& spec) {
    if (spec == "q" || spec == "Q") return Field::rationals();
    if (spec.rfind("fp:", 0) == 0) return Field::prime(mpz_class(spec.substr(3)));
    throw Error(ErrorKind::field, "field must be 'q' or 'fp:<prime>', got '" + spec + "'");
}

std::vector<int> parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',') {
            if (cur.empty()) throw Error(ErrorKind::parse, "empty entry in part list");
            parts.push_back(std::stoi(cur));
            cur.clear();
        } else if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '-') {
            cur += ch;
        } else {
            throw Error(ErrorKind::parse, std::string("bad character in part list: '") + ch + "'");
        }
    }
    return parts;
}

json profile_json(const MultiplicityProfile& p) {
    json a = json::array();
    for (const auto& e : p) a.push_back({e.multiplicity, e.radical_degree});
    return a;
}

json scalars_json(const std::vector<Scalar>& v) {
    json a = json::array();
    for (const Scalar& s : v) a.push_back(s.str());
    return a;
}

json cert_json(const RankCertificate& cert) {
    json j;
    j["rank"] = cert.rank;
    j["d1"] = cert.d1;
    j["d2"] = cert.d2;
    j["g1"] = to_string(cert.g1);
    j["g1_squarefree"] = cert.g1_squarefree;
    j["g1_profile"] = profile_json(cert.g1_profile);
    return j;
}

struct Output {
    bool json_mode = false;
    json obj;

    void set(const char* key, const json& value) { obj[key] = value; }
    void emit(std::ostream& os) const {
        if (json_mode) {
            os << obj.dump() << "\n";
        } else {
            for (const auto& [k, v] : obj.items()) {
                if (k == "schema") continue;
                os << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Waring rank, apolarity and multiple-root-locus toolkit for binary forms"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string field_spec = "q";
    std::uint64_t seed = 0;
    bool json_mode = false;
    long height = 50;
    int samples = 100;
    app.add_option("--field", field_spec, "base field: q (default) or fp:<prime>");
    app.add_option("--seed", seed, "RNG seed for randomized commands (echoed in output)");
    app.add_flag("--json", json_mode, "emit a single JSON object");
    app.add_option("--height", height, "coefficient height for randomized sampling");
    app.add_option("--samples", samples, "sample count for census/probe commands");

    std::string form_text, form_text2, parts_text, parts_text2, suite = "all";
    int opt_d = 0, opt_r = 0, opt_k = 0, opt_e = 1, opt_n = 0;
    double budget = 0;
    std::string special = "";

    auto* cmd_rank = app.add_subcommand("rank", "Waring rank with apolar certificate");
    cmd_rank->add_option("form", form_text, "binary form, e.g. \"x^5*y\"")->required();

    auto* cmd_decompose = app.add_subcommand("decompose", "minimal Waring decomposition");
    cmd_decompose->add_option("form", form_text)->required();

    auto* cmd_apolar = app.add_subcommand("apolar", "generators of the apolar ideal");
    cmd_apolar->add_option("form", form_text)->required();

    auto* cmd_cat = app.add_subcommand("cat", "catalecticant matrix at degree e");
    cmd_cat->add_option("form", form_text)->required();
    cmd_cat->add_option("--e", opt_e, "contraction degree")->required();

    auto* cmd_border = app.add_subcommand("border-rank", "maximal catalecticant rank");
    cmd_border->add_option("form", form_text)->required();

    auto* cmd_partition = app.add_subcommand("partition", "partition calculus");
    cmd_partition->require_subcommand(1);
    auto* p_dim = cmd_partition->add_subcommand("dim", "dim of the multiple root locus");
    p_dim->add_option("parts", parts_text)->required();
    auto* p_dimdual = cmd_partition->add_subcommand("dim-dual", "dim of the dual variety");
    p_dimdual->add_option("parts", parts_text)->required();
    auto* p_deg = cmd_partition->add_subcommand("deg", "degree of the multiple root locus");
    p_deg->add_option("parts", parts_text)->required();
    auto* p_degdual = cmd_partition->add_subcommand("deg-dual", "degree of the dual variety");
    p_degdual->add_option("parts", parts_text)->required();
    auto* p_refines = cmd_partition->add_subcommand("refines", "does mu refine lambda?");
    p_refines->add_option("mu", parts_text)->required();
    p_refines->add_option("lambda", parts_text2)->required();
    auto* p_dualincl = cmd_partition->add_subcommand("dual-incl", "dual variety inclusion");
    p_dualincl->add_option("lambda", parts_text)->required();
    p_dualincl->add_option("mu", parts_text2)->required();
    auto* p_conormal = cmd_partition->add_subcommand("conormal", "sample the conormal variety");
    p_conormal->add_option("parts", parts_text)->required();
    p_conormal->add_option("--n", opt_n, "expected |lambda| (cross-check)");

    auto* cmd_sample = app.add_subcommand("sample", "form of prescribed rank");
    cmd_sample->add_option("--d", opt_d, "degree")->required();
    cmd_sample->add_option("--r", opt_r, "target rank")->required();

    auto* cmd_census = app.add_subcommand("census", "rank census of the stratum closure");
    cmd_census->add_option("--d", opt_d, "degree")->required();
    cmd_census->add_option("--k", opt_k, "stratum index (rank d-k)")->required();

    auto* cmd_tangent = app.add_subcommand("tangent", "tangent-space dimension at a stratum point");
    cmd_tangent->add_option("--d", opt_d, "degree")->required();
    cmd_tangent->add_option("--k", opt_k, "stratum index")->required();
    cmd_tangent->add_option("--special", special, "g-eq-l0 | li-eq-lj");

    auto* cmd_chain = app.add_subcommand("chain", "rank-raising chain up to rank d");
    cmd_chain->add_option("form", form_text)->required();

    auto* cmd_hyp = app.add_subcommand("hyp", "the hypersurface S_{2k+1,k+2}");
    cmd_hyp->require_subcommand(1);
    auto* h_value = cmd_hyp->add_subcommand("value", "defining value at a form");
    h_value->add_option("--k", opt_k)->required();
    h_value->add_option("form", form_text)->required();
    auto* h_grad = cmd_hyp->add_subcommand("grad", "gradient of the defining equation");
    h_grad->add_option("--k", opt_k)->required();
    h_grad->add_option("form", form_text)->required();
    auto* h_degree = cmd_hyp->add_subcommand("degree", "degree of the defining equation");
    h_degree->add_option("--k", opt_k)->required();
    auto* h_probe = cmd_hyp->add_subcommand("probe-singular", "gradient census at rank-r samples");
    h_probe->add_option("--k", opt_k)->required();
    h_probe->add_option("--rank", opt_r, "rank of the sampled forms")->required();

    auto* cmd_verify = app.add_subcommand("verify", "acceptance suites");
    cmd_verify->add_option("suite", suite, "apolarity|strata|partitions|hypersurface|all");
    cmd_verify->add_option("--budget", budget, "wall-clock budget in seconds (report partial)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage errors exit 2, --help stays 0
    }

    Output out;
    out.json_mode = json_mode;
    out.set("schema", kSchema);

    try {
        FieldRef field = parse_field(field_spec);
        Rng rng(seed);

        if (*cmd_verify) {
            if (!verify::suite_known(suite))
                throw Error(ErrorKind::constraint, "unknown suite: " + suite);
            verify::Options vopts;
            vopts.seed = seed == 0 ? 42 : seed;
            vopts.suite = suite;
            vopts.budget_seconds = budget;
            return verify::print_report(verify::run(vopts), std::cout);
        }

        if (*cmd_rank || *cmd_border || *cmd_decompose || *cmd_apolar || *cmd_cat ||
            *cmd_chain) {
            BinaryForm f = parse_form(form_text, field);
            field->ensure_session_degree(f.degree());
            out.set("field", field->name());
            out.set("degree", f.degree());
            if (*cmd_rank) {
                out.set("command", "rank");
                RankCertificate cert = waring_rank(f);
                const json cj = cert_json(cert);
                for (const auto& [k, v] : cj.items()) out.set(k.c_str(), v);
                out.set("border_rank", border_rank(f));
            } else if (*cmd_border) {
                out.set("command", "border-rank");
                out.set("border_rank", border_rank(f));
            } else if (*cmd_apolar) {
                out.set("command", "apolar");
                ApolarPair pair = apolar_pair(f);
                out.set("d1", pair.d1);
                out.set("d2", pair.d2);
                out.set("g1", to_string(pair.g1));
                out.set("g2", to_string(pair.g2));
            } else if (*cmd_cat) {
                out.set("command", "cat");
                Matrix m = catalecticant(f, opt_e);
                out.set("e", opt_e);
                out.set("rows", m.rows());
                out.set("cols", m.cols());
                json rows = json::array();
                for (int i = 0; i < m.rows(); ++i) {
                    json row = json::array();
                    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
                    rows.push_back(row);
                }
                out.set("entries", rows);
                out.set("rank", rank(m));
            } else if (*cmd_decompose) {
                out.set("command", "decompose");
                out.set("seed", seed);
                DecomposeResult res = decompose(f, rng);
                const json cj = cert_json(res.cert);
                for (const auto& [k, v] : cj.items()) out.set(k.c_str(), v);
                out.set("border_rank", border_rank(f));
                out.set("generator", to_string(res.generator));
                if (res.decomposition) {
                    json terms = json::array();
                    for (const WaringTerm& t : res.decomposition->terms)
                        terms.push_back({{"coeff", t.coeff.str()}, {"l", to_string(t.l)}});
                    out.set("decomposition", terms);
                } else {
                    out.set("decomposition", nullptr);
                    out.set("note", "generator does not split over the base field; "
                                    "certificate only");
                }
            } else if (*cmd_chain) {
                out.set("command", "chain");
                out.set("seed", seed);
                RankCertificate cert = waring_rank(f);
                out.set("start_rank", cert.rank);
                std::vector<ChainStep> chain = rank_raising_chain(f, rng);
                json steps = json::array();
                for (const ChainStep& s : chain)
                    steps.push_back({{"l", to_string(s.l)},
                                     {"c", s.c.str()},
                                     {"new_rank", s.new_rank}});
                out.set("steps", steps);
                out.set("final_rank", chain.empty() ? cert.rank : chain.back().new_rank);
            }
        } else if (*cmd_partition) {
            out.set("command", "partition");
            Partition lambda = Partition::make(parse_parts(parts_text));
            out.set("lambda", lambda.str());
            if (*p_dim) {
                out.set("dim", dim_delta(lambda));
            } else if (*p_dimdual) {
                out.set("dim_dual", dim_dual(lambda));
            } else if (*p_deg) {
                out.set("deg", deg_delta(lambda).get_str());
            } else if (*p_degdual) {
                out.set("deg_dual", deg_dual(lambda).get_str());
            } else if (*p_refines) {
                Partition mu = lambda;  // first positional is mu here
                Partition lam = Partition::make(parse_parts(parts_text2));
                out.obj.erase("lambda");
                out.set("mu", mu.str());
                out.set("lambda", lam.str());
                out.set("refines", refines(mu, lam));
            } else if (*p_dualincl) {
                Partition mu = Partition::make(parse_parts(parts_text2));
                out.set("mu", mu.str());
                out.set("included", dual_included(lambda, mu));
            } else if (*p_conormal) {
                if (opt_n > 0 && opt_n != lambda.n())
                    throw Error(ErrorKind::constraint, "--n does not match |lambda|");
                out.set("field", field->name());
                out.set("seed", seed);
                ConormalSample s = conormal_sample(lambda, field, rng);
                out.set("f", to_string(s.f));
                out.set("g", to_string(s.g));
                json pts = json::array();
                for (const auto& pt : s.points) pts.push_back({pt.s.str(), pt.t.str()});
                out.set("points", pts);
                out.set("annihilation_check", annihilation_check(s));
            }
        } else if (*cmd_sample) {
            out.set("command", "sample");
            field->ensure_session_degree(opt_d);
            out.set("field", field->name());
            out.set("seed", seed);
            SampleResult res = sample_rank_r(opt_d, opt_r, field, rng);
            out.set("d", opt_d);
            out.set("r", opt_r);
            out.set("form", to_string(res.f));
            const json cj = cert_json(res.cert);
            for (const auto& [k, v] : cj.items()) out.set(k.c_str(), v);
            out.set("border_rank", border_rank(res.f));
        } else if (*cmd_census) {
            out.set("command", "census");
            field->ensure_session_degree(opt_d);
            out.set("field", field->name());
            out.set("seed", seed);
            RankCensus census = stratum_census(opt_d, opt_k, samples, field, rng);
            out.set("d", census.d);
            out.set("k", census.k);
            out.set("samples", census.samples);
            json freq = json::object();
            for (const auto& [r, c] : census.freq) freq[std::to_string(r)] = c;
            out.set("freq", freq);
            json freq0 = json::object();
            for (const auto& [r, c] : census.freq_g_eq_l0) freq0[std::to_string(r)] = c;
            out.set("freq_g_eq_l0", freq0);
            out.set("flagged", census.flagged);
        } else if (*cmd_tangent) {
            out.set("command", "tangent");
            field->ensure_session_degree(opt_d);
            out.set("field", field->name());
            out.set("seed", seed);
            if (!special.empty() && special != "g-eq-l0" && special != "li-eq-lj")
                throw Error(ErrorKind::constraint, "--special must be g-eq-l0 or li-eq-lj");
            if (special == "li-eq-lj" && opt_k < 2)
                throw Error(ErrorKind::constraint, "li-eq-lj specialization needs k >= 2");
            // Build the point directly; specializations are not rank-verified.
            std::vector<LinearForm> l;
            for (int i = 0; i <= opt_k; ++i) {
                for (;;) {
                    LinearForm cand = random_linear(field, rng, height);
                    bool distinct = true;
                    for (const auto& o : l)
                        if (proportional(cand, o)) distinct = false;
                    if (distinct) {
                        l.push_back(cand);
                        break;
                    }
                }
            }
            LinearForm g = random_linear(field, rng, height);
            if (special == "g-eq-l0") g = l[0];
            else
                while (proportional(g, l[0])) g = random_linear(field, rng, height);
            if (special == "li-eq-lj") l[2] = l[1];
            if (opt_d - opt_k <= generic_rank(opt_d))
                throw Error(ErrorKind::constraint, "need d-k > ceil((d+1)/2)");
            SupragenericPoint pt{opt_d, opt_k, l, g, assemble_suprageneric(opt_d, l, g)};
            out.set("d", opt_d);
            out.set("k", opt_k);
            out.set("special", special.empty() ? "none" : special);
            json gens = json::array();
            for (const BinaryForm& b : tangent_generators(pt)) gens.push_back(to_string(b));
            out.set("generators", gens);
            const int affine = tangent_dimension(pt);
            out.set("affine_rank", affine);
            out.set("projective_dimension", affine - 1);
        } else if (*cmd_hyp) {
            out.set("command", "hyp");
            HypersurfaceContext ctx = context_make(opt_k, field);
            out.set("field", field->name());
            out.set("k", opt_k);
            if (*h_degree) {
                out.set("degree", degree_of_equation(ctx));
            } else if (*h_value || *h_grad) {
                BinaryForm f = parse_form(form_text, field);
                field->ensure_session_degree(f.degree());
                if (*h_value) {
                    out.set("value", defining_value(ctx, f).str());
                } else {
                    out.set("gradient", scalars_json(defining_gradient(ctx, f)));
                }
            } else if (*h_probe) {
                out.set("seed", seed);
                const int d = 2 * opt_k + 1;
                field->ensure_session_degree(d);
                int zero_grad = 0;
                for (int i = 0; i < samples; ++i) {
                    SampleResult s = sample_rank_r(d, opt_r, field, rng);
                    std::vector<Scalar> grad = defining_gradient(ctx, s.f);
                    bool zero = true;
                    for (const Scalar& x : grad)
                        if (!x.is_zero()) zero = false;
                    if (zero) ++zero_grad;
                }
                out.set("rank", opt_r);
                out.set("samples", samples);
                out.set("zero_gradient", zero_grad);
                out.set("nonzero_gradient", samples - zero_grad);
            }
        }
        out.emit(std::cout);
        return 0;
    } catch (const Error& err) {
        json e;
        e["schema"] = kSchema;
        e["error"] = {{"kind", err.kind_name()}, {"message", err.what()}};
        if (json_mode)
            std::cout << e.dump() << "\n";
        else
            std::cerr << "error (" << err.kind_name() << "): " << err.what() << "\n";
        return 1;
    }
}
