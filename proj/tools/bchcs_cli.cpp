// Command-line front end: deterministic sensing-matrix construction, coherence
// and RIP spot checks, counting tables, and matching-pursuit experiments.

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bchcs/analysis.hpp"
#include "bchcs/bsm_io.hpp"
#include "bchcs/codes.hpp"
#include "bchcs/counting.hpp"
#include "bchcs/devore.hpp"
#include "bchcs/errors.hpp"
#include "bchcs/field.hpp"
#include "bchcs/recovery.hpp"
#include "bchcs/rng.hpp"

namespace {

using namespace bchcs;

struct GlobalOpts {
    uint64_t seed = 1;
    std::string out;
    std::string backend = "naive";
    std::string mode = "ls_refine";
    std::string format = "text";
};

Backend parse_backend(const std::string& s) {
    if (s == "naive") return Backend::naive;
    if (s == "dft") return Backend::dft;
    throw ValidationError("backend must be naive or dft");
}

RecoveryMode parse_mode(const std::string& s) {
    if (s == "pure_mp") return RecoveryMode::pure_mp;
    if (s == "ls_refine") return RecoveryMode::ls_refine;
    throw ValidationError("mode must be pure_mp or ls_refine");
}

unsigned ceil_log2_u(uint32_t k) {
    unsigned i = 0;
    while ((uint32_t(1) << i) < k) ++i;
    return i;
}

// m, i resolved from either --i or --k (i = ceil(log2 k)).
unsigned resolve_gap(int i_opt, int k_opt, unsigned m_tilde) {
    if (i_opt < 0 && k_opt < 0) throw ValidationError("one of --i or --k is required");
    if (i_opt >= 0 && k_opt >= 0) throw ValidationError("--i and --k are mutually exclusive");
    unsigned i = (i_opt >= 0) ? static_cast<unsigned>(i_opt)
                              : ceil_log2_u(static_cast<uint32_t>(k_opt));
    if (i < 1 || i > m_tilde) throw ValidationError("need 1 <= i <= m_tilde");
    return i;
}

CodeSpec build_from_args(unsigned m_tilde, unsigned i, const std::string& primpoly) {
    FieldPtr field = primpoly.empty() ? make_field(m_tilde)
                                      : make_field(m_tilde, Gf2Poly::parse(primpoly));
    return build_code(std::move(field), i);
}

void print_analysis(std::ostream& os, const AnalysisReport& rep, const GershgorinReport* gersh,
                    const std::string& format) {
    const bool csv = format == "csv";
    if (csv) {
        os << "key,value\n";
        os << "coherence_exact," << rep.coherence.str() << "\n";
        os << "coherence," << rep.coherence.value() << "\n";
        os << "sampled," << (rep.sampled ? 1 : 0) << "\n";
        os << "pairs_checked," << rep.pairs_checked << "\n";
        os << "max_rip_order," << rep.max_rip_order << "\n";
        for (uint32_t k = 2; rep.coherence.num != 0 && k <= rep.max_rip_order; ++k)
            os << "delta_" << k << "," << rep.delta_k(k) << "\n";
    } else {
        os << "coherence = " << rep.coherence.str() << " = " << rep.coherence.value()
           << (rep.sampled ? "  (sampled lower bound, " : "  (exact, ")
           << rep.pairs_checked << " pairs)\n";
        if (rep.coherence.num == 0) {
            os << "columns are orthogonal; delta_k table empty\n";
        } else {
            os << "delta_k = (k-1) * coherence stays below 1 up to k = " << rep.max_rip_order
               << ":\n";
            for (uint32_t k = 2; k <= rep.max_rip_order; ++k)
                os << "  k = " << k << "  delta_k = " << rep.delta_k(k) << "\n";
        }
    }
    if (gersh) {
        if (csv) {
            os << "gersh_k," << gersh->k << "\n";
            os << "gersh_trials," << gersh->trials << "\n";
            os << "gersh_delta," << gersh->delta_k << "\n";
            os << "gersh_min_eig," << gersh->min_eigenvalue << "\n";
            os << "gersh_max_eig," << gersh->max_eigenvalue << "\n";
            os << "gersh_all_within," << (gersh->all_within ? 1 : 0) << "\n";
        } else {
            os << "gershgorin spot check: k = " << gersh->k << ", " << gersh->trials
               << " trials, eigenvalues in [" << gersh->min_eigenvalue << ", "
               << gersh->max_eigenvalue << "], target [" << 1.0 - gersh->delta_k << ", "
               << 1.0 + gersh->delta_k << "] -> " << (gersh->all_within ? "ok" : "VIOLATED")
               << "\n";
        }
    }
}

int cmd_construct(unsigned m_tilde, int i_opt, int k_opt, const std::string& primpoly,
                  const GlobalOpts& g) {
    const unsigned i = resolve_gap(i_opt, k_opt, m_tilde);
    const CodeSpec spec = build_from_args(m_tilde, i, primpoly);
    const SensingMatrix A = build_pm1(spec);
    if (g.out.empty()) throw ValidationError("--out is required for construct");
    write_bsm_file(g.out, A);
    const uint32_t bound_num = (uint32_t(1) << (m_tilde - i)) - 1;
    std::cout << "wrote " << g.out << "\n"
              << "m = " << A.rows() << ", n = " << A.cols() << ", k_tilde = " << spec.k_tilde
              << ", dmin bound = " << spec.dmin_bound << "\n"
              << "coherence bound = " << bound_num << "/" << spec.n_tilde << " = "
              << static_cast<double>(bound_num) / spec.n_tilde << "\n";
    return 0;
}

int cmd_analyze(const std::string& in, uint64_t sample, uint32_t gersh_k, uint64_t gersh_trials,
                const GlobalOpts& g) {
    const SensingMatrix A = read_bsm_file(in);
    AnalysisReport rep = (sample > 0) ? coherence_sampled(A, sample, g.seed)
                                      : coherence_full(A);
    std::optional<GershgorinReport> gersh;
    if (gersh_trials > 0) {
        uint32_t k = gersh_k ? gersh_k : std::min<uint32_t>(5, rep.max_rip_order);
        k = std::min({k, A.cols(), A.rows()});
        gersh = gershgorin_check(A, k, gersh_trials, g.seed);
    }
    print_analysis(std::cout, rep, gersh ? &*gersh : nullptr, g.format);
    return 0;
}

int cmd_recover(const std::string& matrix_path, const std::string& samples_path, uint32_t k_max,
                double tol, const GlobalOpts& g) {
    const SensingMatrix A = read_bsm_file(matrix_path);
    const std::vector<double> y = read_vector_file(samples_path);
    MpOptions opt;
    opt.k_max = k_max ? k_max : std::max<uint32_t>(4, A.rows());
    opt.tol = tol;
    opt.backend = parse_backend(g.backend);
    opt.mode = parse_mode(g.mode);
    const RecoveryResult res = mp_recover(A, y, opt);
    if (!g.out.empty()) write_vector_file(g.out, res.coefficients);
    std::cout << "iterations = " << res.iterations
              << ", final residual = " << res.residual_history.back() << "\n"
              << "support =";
    std::vector<uint32_t> sorted = res.support;
    std::sort(sorted.begin(), sorted.end());
    for (uint32_t s : sorted) std::cout << ' ' << s;
    std::cout << "\nmult_count = " << res.mult_count << "\n";
    return 0;
}

int cmd_simulate(const std::string& matrix_path, unsigned m_tilde, int i_opt, int k_opt,
                 uint32_t sparsity, uint64_t trials, const GlobalOpts& g) {
    SensingMatrix A;
    if (!matrix_path.empty()) {
        A = read_bsm_file(matrix_path);
    } else {
        if (m_tilde == 0) throw ValidationError("either --matrix or --mtilde is required");
        A = build_pm1(build_from_args(m_tilde, resolve_gap(i_opt, k_opt, m_tilde), ""));
    }
    if (sparsity == 0 || sparsity > A.cols()) throw ValidationError("bad sparsity");
    if (trials == 0) throw ValidationError("trials must be positive");

    MpOptions opt;
    opt.k_max = 4 * sparsity;
    opt.backend = parse_backend(g.backend);
    opt.mode = parse_mode(g.mode);

    // Per-trial seeds keep the outcome independent of the thread schedule;
    // results land in slot t and are reduced in order.
    std::vector<uint8_t> trial_success(trials, 0), trial_sel_ok(trials, 1);
    std::vector<double> trial_residual(trials, 0.0);
    std::vector<uint64_t> trial_mults(trials, 0);
#pragma omp parallel for schedule(dynamic)
    for (int64_t t = 0; t < static_cast<int64_t>(trials); ++t) {
        SplitMix64 rng(g.seed + static_cast<uint64_t>(t));
        std::vector<uint32_t> support = rng.distinct(sparsity, A.cols());
        std::vector<double> y(A.rows(), 0.0);
        std::vector<uint32_t> sorted_support = support;
        std::sort(sorted_support.begin(), sorted_support.end());
        for (uint32_t idx : support) {
            const double amp = rng.normal();
            const std::vector<double> col = A.column(idx);
            for (uint32_t r = 0; r < A.rows(); ++r) y[r] += amp * col[r];
        }
        const RecoveryResult res = mp_recover(A, y, opt);
        std::vector<uint32_t> got = res.support;
        std::sort(got.begin(), got.end());
        trial_success[t] = (got == sorted_support) ? 1 : 0;
        trial_residual[t] = res.residual_history.back();
        trial_mults[t] = res.mult_count;
        for (uint32_t sel : res.selections)
            trial_sel_ok[t] &=
                std::binary_search(sorted_support.begin(), sorted_support.end(), sel) ? 1 : 0;
    }
    uint64_t successes = 0, mult_total = 0;
    double residual_sum = 0.0;
    bool selections_in_support = true;
    for (uint64_t t = 0; t < trials; ++t) {
        successes += trial_success[t];
        residual_sum += trial_residual[t];
        mult_total += trial_mults[t];
        selections_in_support &= trial_sel_ok[t] != 0;
    }

    uint64_t dft_cost = 0;
    bool dft_available = true;
    try {
        dft_cost = dft_pass_cost(CorrelationEngine(A, Backend::dft));
    } catch (const BackendUnavailableError&) {
        dft_available = false;
    }

    const double rate = static_cast<double>(successes) / static_cast<double>(trials);
    if (g.format == "csv") {
        std::cout << "key,value\n"
                  << "trials," << trials << "\n"
                  << "success_rate," << rate << "\n"
                  << "mean_residual," << residual_sum / static_cast<double>(trials) << "\n"
                  << "selections_in_support," << (selections_in_support ? 1 : 0) << "\n"
                  << "mult_count_total," << mult_total << "\n"
                  << "mult_per_pass_naive," << naive_pass_cost(A) << "\n";
        if (dft_available) std::cout << "mult_per_pass_dft," << dft_cost << "\n";
    } else {
        std::cout << "trials = " << trials << ", success_rate = " << rate
                  << ", mean_residual = " << residual_sum / static_cast<double>(trials) << "\n"
                  << "all selections inside true support: "
                  << (selections_in_support ? "yes" : "no") << "\n"
                  << "mult_count total = " << mult_total << "\n"
                  << "per correlation pass: naive = " << naive_pass_cost(A);
        if (dft_available)
            std::cout << ", dft = " << dft_cost;
        else
            std::cout << ", dft = unavailable (no orbit metadata)";
        std::cout << "\n";
    }
    return 0;
}

// Reference parity-check polynomials reproduced by the i = 3 family.
const std::map<unsigned, const char*> kReferenceH = {
    {4, "x^5+x^4+x^2+1"},
    {6, "x^7+x^6+x^2+1"},
    {8, "x^13+x^12+x^10+x^9+x^8+x^4+x^3+1"},
    {10, "x^26+x^25+x^24+x^20+x^16+x^14+x^13+x^12+x^10+x^9+x^7+x^5+x^4+x^3+x+1"},
};

int cmd_tables(unsigned i, const std::string& mtilde_list, const GlobalOpts& g) {
    std::vector<unsigned> ms;
    std::istringstream ls(mtilde_list);
    std::string tok;
    while (std::getline(ls, tok, ',')) ms.push_back(static_cast<unsigned>(std::stoul(tok)));
    if (ms.empty()) throw ValidationError("--mtilde list is empty");

    const bool csv = g.format == "csv";
    if (csv) std::cout << "m_tilde,i,primitive_poly_hex,h_hex,deg_h\n";
    for (unsigned m : ms) {
        const CodeSpec spec = build_from_args(m, i, "");
        const char* sep = csv ? "," : ", ";
        std::cout << m << sep << i << sep << spec.field->primitive_poly().to_hex() << sep
                  << spec.h.to_hex() << sep << spec.k_tilde << "\n";
        if (!csv && i == 3 && kReferenceH.count(m)) {
            const Gf2Poly target = Gf2Poly::parse(kReferenceH.at(m));
            const std::optional<Gf2Poly> found = find_table1_primitive(m, i, target);
            std::cout << "  reference h " << target.to_hex() << " ("
                      << target.to_monomials() << "): "
                      << (found ? "reproduced by primitive " + found->to_hex()
                                : "not reproduced by any primitive polynomial")
                      << "\n";
        }
    }
    return 0;
}

int cmd_count(unsigned a, const std::string& b_range, const GlobalOpts& g) {
    unsigned lo = 0, hi = 0;
    const size_t dots = b_range.find("..");
    if (dots == std::string::npos) {
        lo = hi = static_cast<unsigned>(std::stoul(b_range));
    } else {
        lo = static_cast<unsigned>(std::stoul(b_range.substr(0, dots)));
        hi = static_cast<unsigned>(std::stoul(b_range.substr(dots + 2)));
    }
    if (lo == 0 || hi < lo) throw ValidationError("bad --b range");
    const bool csv = g.format == "csv";
    if (csv) std::cout << "a,b,kappa,tau\n";
    for (unsigned b = lo; b <= hi; ++b) {
        const char* sep = csv ? "," : " ";
        std::cout << a << sep << b << sep << kappa(a, b).get_str() << sep << tau(a, b).get_str()
                  << "\n";
    }
    return 0;
}

int cmd_devore(uint32_t p, uint32_t r, const GlobalOpts& g) {
    const SensingMatrix A = build_devore(DevoreSpec{p, r});
    if (g.out.empty()) throw ValidationError("--out is required for devore");
    write_bsm_file(g.out, A);
    std::cout << "wrote " << g.out << "\nm = " << A.rows() << ", n = " << A.cols()
              << ", column weight = " << p << ", pairwise inner products <= " << r << "\n";
    return 0;
}

int cmd_combine(uint32_t p, unsigned m_tilde, uint32_t k, const GlobalOpts& g) {
    unsigned m = m_tilde;
    if (m == 0) {
        if (p == 0) throw ValidationError("either --p or --mtilde is required");
        while ((uint32_t(1) << m) - 1 < p) ++m;
        if ((uint32_t(1) << m) - 1 != p) throw NotMersenneError("p must be of the form 2^m - 1");
    }
    const SensingMatrix A = build_ternary(k, m);
    if (g.out.empty()) throw ValidationError("--out is required for combine");
    write_bsm_file(g.out, A);
    std::cout << "wrote " << g.out << "\nm = " << A.rows() << ", n = " << A.cols()
              << ", coherence < 1/" << (k - 1) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic compressed-sensing matrix toolkit"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--seed", g.seed, "RNG seed; fully determines all randomness");
    app.add_option("--out", g.out, "output path");
    app.add_option("--backend", g.backend, "correlation backend: naive|dft");
    app.add_option("--mode", g.mode, "recovery mode: pure_mp|ls_refine");
    app.add_option("--format", g.format, "report format: text|csv");

    unsigned m_tilde = 0;
    int i_opt = -1, k_opt = -1;
    std::string primpoly, in_path, matrix_path, samples_path, mtilde_list, b_range = "1..8";
    uint64_t sample = 0, gersh_trials = 200, trials = 200;
    uint32_t gersh_k = 0, k_max = 0, sparsity = 0, dev_p = 0, dev_r = 0;
    double tol = 1e-10;
    unsigned count_a = 0, tables_i = 3;

    CLI::App* construct = app.add_subcommand("construct", "build a +/-1 matrix, write BSM");
    construct->add_option("--mtilde", m_tilde)->required();
    construct->add_option("--i", i_opt);
    construct->add_option("--k", k_opt);
    construct->add_option("--primpoly", primpoly, "primitive polynomial (hex mask or monomials)");

    CLI::App* analyze = app.add_subcommand("analyze", "coherence / RIP report for a BSM file");
    analyze->add_option("--in", in_path)->required();
    analyze->add_option("--sample", sample, "sampled pairs (0 = full Gram)");
    analyze->add_option("--gersh-k", gersh_k);
    analyze->add_option("--gersh-trials", gersh_trials, "eigenvalue spot-check trials (0 = off)");

    CLI::App* recover = app.add_subcommand("recover", "matching pursuit on a sample vector");
    recover->add_option("--matrix", matrix_path)->required();
    recover->add_option("--samples", samples_path)->required();
    recover->add_option("--kmax", k_max);
    recover->add_option("--tol", tol);

    CLI::App* simulate = app.add_subcommand("simulate", "seeded sparse-recovery trials");
    simulate->add_option("--matrix", matrix_path);
    simulate->add_option("--mtilde", m_tilde);
    simulate->add_option("--i", i_opt);
    simulate->add_option("--kcode", k_opt, "RIP order used to derive i");
    simulate->add_option("--k", sparsity, "signal sparsity")->required();
    simulate->add_option("--trials", trials);

    CLI::App* tables = app.add_subcommand("tables", "parity-check polynomial table rows");
    tables->add_option("--i", tables_i);
    tables->add_option("--mtilde", mtilde_list)->required();

    CLI::App* count = app.add_subcommand("count", "kappa/tau spacing counts");
    count->add_option("--a", count_a)->required();
    count->add_option("--b", b_range, "length or lo..hi range");

    CLI::App* devore = app.add_subcommand("devore", "binary polynomial-graph matrix, write BSM");
    devore->add_option("--p", dev_p)->required();
    devore->add_option("--r", dev_r)->required();

    CLI::App* combine = app.add_subcommand("combine", "ternary combined matrix, write BSM");
    combine->add_option("--p", dev_p);
    combine->add_option("--mtilde", m_tilde);
    combine->add_option("--k", sparsity, "target RIP order")->required();

    // global flags may come after the subcommand
    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (construct->parsed()) return cmd_construct(m_tilde, i_opt, k_opt, primpoly, g);
        if (analyze->parsed()) return cmd_analyze(in_path, sample, gersh_k, gersh_trials, g);
        if (recover->parsed()) return cmd_recover(matrix_path, samples_path, k_max, tol, g);
        if (simulate->parsed())
            return cmd_simulate(matrix_path, m_tilde, i_opt, k_opt, sparsity, trials, g);
        if (tables->parsed()) return cmd_tables(tables_i, mtilde_list, g);
        if (count->parsed()) return cmd_count(count_a, b_range, g);
        if (devore->parsed()) return cmd_devore(dev_p, dev_r, g);
        if (combine->parsed()) return cmd_combine(dev_p, m_tilde, sparsity, g);
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
