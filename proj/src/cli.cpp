#include "graphlim/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "graphlim/characters.hpp"
#include "graphlim/definetti.hpp"
#include "graphlim/graphons.hpp"
#include "graphlim/homomorphisms.hpp"
#include "graphlim/mobius.hpp"

namespace graphlim::cli {

namespace {

std::string g12(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", v == 0.0 ? 0.0 : v);
    return buffer;
}

GraphDistribution load_distribution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open distribution file: " + path);
    return read_distribution(in);
}

MobiusParams load_mobius(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open Mobius parameter file: " + path);
    return read_mobius(in);
}

StepGraphon load_graphon(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open graphon file: " + path);
    return read_graphon(in);
}

// Largest class size usable in a reflection basis: pairwise unions must stay
// within the n-node range of a functional built from a distribution.
int default_basis_max(int n) { return std::min(3, n / 2); }

std::vector<UnlabeledGraph> reflection_basis(int basis_max) {
    return classes_up_to(basis_max);
}

struct Args {
    std::string graph_a, graph_b, file, base_file, theta_file;
    int n = 0;
    int m = 2;
    int basis_max = -1;
    std::int64_t trials = 100000;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    double lambda = 0.0;
    bool lambda_set = false;
};

int dispatch(CLI::App& app, const Args& a, std::ostream& out) {
    if (app.got_subcommand("enumerate")) {
        for (const auto& g : enumerate_labeled(a.n)) out << g.encode() << '\n';
        return 0;
    }
    if (app.got_subcommand("canon")) {
        out << canonical_form(LabeledGraph::parse(a.graph_a)).encode() << '\n';
        return 0;
    }
    if (app.got_subcommand("classes")) {
        for (const auto& cls : isomorphism_classes(a.n))
            out << cls.canon.encode() << ' ' << cls.class_size << '\n';
        return 0;
    }
    if (app.got_subcommand("union")) {
        const auto u = to_unlabeled(LabeledGraph::parse(a.graph_a));
        const auto v = to_unlabeled(LabeledGraph::parse(a.graph_b));
        const auto joint = disjoint_union(u, v);
        out << joint.canon.encode() << ' ' << joint.class_size << '\n';
        return 0;
    }
    if (app.got_subcommand("hom")) {
        out << hom_count(LabeledGraph::parse(a.graph_a), LabeledGraph::parse(a.graph_b)) << '\n';
        return 0;
    }
    if (app.got_subcommand("inj")) {
        out << inj_count(LabeledGraph::parse(a.graph_a), LabeledGraph::parse(a.graph_b)) << '\n';
        return 0;
    }
    if (app.got_subcommand("density")) {
        const auto report =
            densities(LabeledGraph::parse(a.graph_a), LabeledGraph::parse(a.graph_b));
        out << "hom " << report.hom << '\n';
        out << "inj " << report.inj << '\n';
        out << "t_hom " << report.t_hom.to_string() << '\n';
        out << "t_inj " << (report.t_inj_defined ? report.t_inj.to_string() : "undefined") << '\n';
        out << "gap_bound " << report.gap_bound.to_string() << '\n';
        return 0;
    }
    if (app.got_subcommand("gap")) {
        const auto gap = sampling_gap(a.m, LabeledGraph::parse(a.graph_a));
        out << "sup " << gap.sup_gap.to_string() << '\n';
        out << "envelope " << gap.envelope.to_string() << '\n';
        out << "loose " << gap.loose_envelope.to_string() << '\n';
        return 0;
    }
    if (app.got_subcommand("mobius-z")) {
        write_mobius(out, z_from_p(load_distribution(a.file)));
        return 0;
    }
    if (app.got_subcommand("mobius-p")) {
        const auto p = p_from_z(load_mobius(a.file));
        for (std::uint32_t mask = 0; mask < p.mass.size(); ++mask)
            out << LabeledGraph::from_mask(p.n, mask).encode() << ' ' << g12(p.mass[mask])
                << '\n';
        return 0;
    }
    if (app.got_subcommand("validate-z")) {
        const auto verdict = is_valid_mobius(load_mobius(a.file), a.tol);
        if (verdict.valid) {
            out << "valid\n";
            return 0;
        }
        out << "invalid " << verdict.witness->encode() << ' ' << g12(verdict.witness_mass)
            << '\n';
        return 1;
    }
    if (app.got_subcommand("exchangeable")) {
        const bool ok = is_exchangeable(load_distribution(a.file), a.tol);
        out << (ok ? "exchangeable" : "not exchangeable") << '\n';
        return ok ? 0 : 1;
    }
    if (app.got_subcommand("psd-check")) {
        const auto p = load_distribution(a.file);
        const int basis_max = a.basis_max >= 0 ? a.basis_max : default_basis_max(p.n);
        if (2 * basis_max > p.n)
            throw DomainError("psd-check: basis classes up to " + std::to_string(basis_max) +
                              " nodes need a distribution on at least " +
                              std::to_string(2 * basis_max) + " nodes");
        const auto basis = reflection_basis(basis_max);
        const auto phi = functional_from_distribution(p);
        const auto matrix = reflection_matrix(phi, basis);
        out << "basis";
        for (const auto& cls : basis) out << ' ' << cls.canon.encode();
        out << '\n';
        for (const auto& row : matrix) {
            for (std::size_t j = 0; j < row.size(); ++j)
                out << (j ? " " : "") << std::setw(18) << g12(row[j]);
            out << '\n';
        }
        const auto spectrum = symmetric_eigenvalues(matrix);
        out << "spectrum";
        for (double ev : spectrum) out << ' ' << g12(ev);
        out << '\n';
        const auto verdict = is_psd(matrix, a.tol);
        out << (verdict.psd ? "psd" : "not psd") << " min_eigenvalue "
            << g12(verdict.min_eigenvalue) << '\n';
        return verdict.psd ? 0 : 1;
    }
    if (app.got_subcommand("dissociated")) {
        const auto p = load_distribution(a.file);
        const auto z = functional_from_distribution(p);
        const auto verdict = check_dissociated(z, a.tol);
        if (verdict.passes) {
            out << "dissociated worst_violation " << g12(verdict.worst_violation) << '\n';
            return 0;
        }
        out << "not dissociated worst_violation " << g12(verdict.worst_violation) << " at "
            << verdict.worst_left.canon.encode() << " + " << verdict.worst_right.canon.encode()
            << '\n';
        return 1;
    }
    if (app.got_subcommand("gexp")) {
        SymmetricFunctional theta;
        if (!a.theta_file.empty()) {
            std::ifstream in(a.theta_file);
            if (!in) throw DomainError("cannot open theta file: " + a.theta_file);
            theta.n_max = a.n;
            std::string encoding;
            double value = 0.0;
            while (in >> encoding >> value)
                theta.set(to_unlabeled(LabeledGraph::parse(encoding)), value);
        } else if (a.lambda_set) {
            if (a.lambda < 0.0) throw DomainError("gexp: lambda must be nonnegative");
            theta = edge_power_functional(a.lambda, a.n);
        } else {
            throw DomainError("gexp: provide --lambda or --theta-file");
        }
        std::vector<double> base;
        if (!a.base_file.empty()) {
            std::ifstream in(a.base_file);
            if (!in) throw DomainError("cannot open base file: " + a.base_file);
            GraphDistribution raw(a.n);
            std::string encoding;
            double value = 0.0;
            while (in >> encoding >> value)
                raw.mass[LabeledGraph::parse(encoding).mask()] = value;
            base = raw.mass;
        } else {
            base.assign(std::size_t{1} << (a.n * (a.n - 1) / 2), 1.0);
        }
        write_distribution(out, gexp_mass(theta, base, a.n));
        return 0;
    }
    if (app.got_subcommand("graphon-eval")) {
        const auto w = load_graphon(a.file);
        out << g12(graphon_character(w, LabeledGraph::parse(a.graph_a))) << '\n';
        return 0;
    }
    if (app.got_subcommand("graphon-sample")) {
        const auto w = load_graphon(a.file);
        out << sample_w_random(w, a.n, a.seed).encode() << '\n';
        return 0;
    }
    if (app.got_subcommand("graphon-mc")) {
        const auto w = load_graphon(a.file);
        const auto est =
            mc_estimate_character(w, LabeledGraph::parse(a.graph_a), a.trials, a.seed);
        out << "estimate " << g12(est.estimate) << '\n';
        out << "std_error " << g12(est.std_error) << '\n';
        return 0;
    }
    if (app.got_subcommand("definetti")) {
        const auto report = definetti_report(load_distribution(a.file), a.m, a.tol);
        out << "m " << report.m << '\n';
        out << "n " << report.n << '\n';
        out << "tv_half_sum " << g12(report.tv_half_sum) << '\n';
        out << "tv_two_sup " << g12(report.tv_two_sup) << '\n';
        out << "r_bound " << g12(report.r_bound) << '\n';
        out << "loose_bound " << g12(report.loose_bound) << '\n';
        return 0;
    }
    return 2; // no subcommand; unreachable with require_subcommand
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"harmonic analysis of exchangeable random graphs at brute-force scale",
                 "graphlim"};
    app.set_help_flag("-h,--help", "print usage");
    app.require_subcommand(1);

    Args a;
    std::string output_path;
    app.add_option("--output", output_path, "write standard output to this file instead");

    auto* enumerate = app.add_subcommand("enumerate", "all labeled graphs on [n]");
    enumerate->add_option("n", a.n)->required();
    auto* canon = app.add_subcommand("canon", "canonical form of a graph");
    canon->add_option("graph", a.graph_a)->required();
    auto* classes = app.add_subcommand("classes", "isomorphism classes on [n] with class sizes");
    classes->add_option("n", a.n)->required();
    auto* unite = app.add_subcommand("union", "node-disjoint union, canonicalized");
    unite->add_option("left", a.graph_a)->required();
    unite->add_option("right", a.graph_b)->required();
    auto* hom = app.add_subcommand("hom", "homomorphism count hom(F, G)");
    hom->add_option("F", a.graph_a)->required();
    hom->add_option("G", a.graph_b)->required();
    auto* inj = app.add_subcommand("inj", "injective homomorphism count inj(F, G)");
    inj->add_option("F", a.graph_a)->required();
    inj->add_option("G", a.graph_b)->required();
    auto* density = app.add_subcommand("density", "exact densities of F in G");
    density->add_option("F", a.graph_a)->required();
    density->add_option("G", a.graph_b)->required();
    auto* gap = app.add_subcommand("gap", "with- vs without-replacement sampling gap");
    gap->add_option("G", a.graph_a)->required();
    gap->add_option("--m", a.m, "sample node count")->required();
    auto* mobius_z = app.add_subcommand("mobius-z", "Mobius parameters of a distribution file");
    mobius_z->add_option("file", a.file)->required();
    auto* mobius_p = app.add_subcommand("mobius-p", "invert a Mobius parameter file");
    mobius_p->add_option("file", a.file)->required();
    auto* validate_z = app.add_subcommand("validate-z", "check a Mobius parameter file for validity");
    validate_z->add_option("file", a.file)->required();
    validate_z->add_option("--tol", a.tol);
    auto* exch = app.add_subcommand("exchangeable", "check a distribution file for exchangeability");
    exch->add_option("file", a.file)->required();
    exch->add_option("--tol", a.tol);
    auto* psd = app.add_subcommand("psd-check", "reflection matrix and spectrum of a distribution");
    psd->add_option("file", a.file)->required();
    psd->add_option("--tol", a.tol);
    psd->add_option("--basis-max", a.basis_max, "largest class size in the basis");
    auto* dissoc = app.add_subcommand("dissociated", "check Mobius parameters for dissociation");
    dissoc->add_option("file", a.file)->required();
    dissoc->add_option("--tol", a.tol);
    auto* gexp = app.add_subcommand("gexp", "generalized exponential family mass function");
    gexp->add_option("n", a.n)->required();
    gexp->add_option("--lambda", a.lambda, "theta([G]) = lambda^edges")
        ->each([&a](const std::string&) { a.lambda_set = true; });
    gexp->add_option("--theta-file", a.theta_file, "class-value lines for theta");
    gexp->add_option("--base-file", a.base_file, "graph-value lines for the base weights");
    auto* geval = app.add_subcommand("graphon-eval", "exact step-graphon character at F");
    geval->add_option("file", a.file)->required();
    geval->add_option("F", a.graph_a)->required();
    auto* gsample = app.add_subcommand("graphon-sample", "draw a W-random graph");
    gsample->add_option("file", a.file)->required();
    gsample->add_option("n", a.n)->required();
    gsample->add_option("--seed", a.seed);
    auto* gmc = app.add_subcommand("graphon-mc", "Monte Carlo estimate of the character");
    gmc->add_option("file", a.file)->required();
    gmc->add_option("F", a.graph_a)->required();
    gmc->add_option("--trials", a.trials);
    gmc->add_option("--seed", a.seed);
    auto* definetti = app.add_subcommand("definetti", "marginal vs smoothed marginal report");
    definetti->add_option("file", a.file)->required();
    definetti->add_option("--m", a.m, "marginal node count")->required();
    definetti->add_option("--tol", a.tol);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n' << app.help();
        return 2;
    }

    std::ostringstream text;
    int status = 1;
    try {
        status = dispatch(app, a, text);
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return 1;
    }
    if (!output_path.empty()) {
        std::ofstream file(output_path);
        if (!file) {
            err << "cannot open output file: " << output_path << '\n';
            return 1;
        }
        file << text.str();
    } else {
        out << text.str();
    }
    return status;
}

} // namespace graphlim::cli
