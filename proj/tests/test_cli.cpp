#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "graphlim/cli.hpp"
#include "graphlim/graphons.hpp"
#include "graphlim/mobius.hpp"

using namespace graphlim;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string& contents) {
        static int counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("graphlim_cli_test_" + std::to_string(++counter) + ".txt");
        std::ofstream(path_) << contents;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string str() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

std::string serialize(const GraphDistribution& p) {
    std::ostringstream s;
    write_distribution(s, p);
    return s.str();
}

} // namespace

TEST_CASE("counting commands") {
    CHECK(invoke({"hom", "3:111", "3:111"}).out == "6\n");
    CHECK(invoke({"inj", "2:1", "3:111"}).out == "6\n");

    const auto density = invoke({"density", "2:1", "3:111"});
    CHECK(density.status == 0);
    CHECK(density.out.find("t_hom 2/3\n") != std::string::npos);
    CHECK(density.out.find("t_inj 1\n") != std::string::npos);
    CHECK(density.out.find("gap_bound 1/3\n") != std::string::npos);

    const auto gap = invoke({"gap", "3:111", "--m", "2"});
    CHECK(gap.out == "sup 1/3\nenvelope 1/3\nloose 1/3\n");
}

TEST_CASE("graph structure commands") {
    CHECK(invoke({"enumerate", "2"}).out == "2:0\n2:1\n");
    CHECK(invoke({"canon", "3:001"}).out == "3:100\n");
    CHECK(invoke({"union", "2:1", "2:1"}).out == "4:001100 3\n");

    const auto classes = invoke({"classes", "3"});
    CHECK(classes.out == "3:000 1\n3:100 3\n3:110 3\n3:111 1\n");
}

TEST_CASE("exit codes") {
    CHECK(invoke({"bogus"}).status == 2);
    CHECK(invoke({}).status == 2);
    CHECK(invoke({"hom", "3:111"}).status == 2);
    CHECK(invoke({"hom", "3:11", "3:111"}).status == 1);   // malformed encoding
    CHECK(invoke({"enumerate", "9"}).status == 1);         // capacity
    CHECK(invoke({"--help"}).status == 0);
}

TEST_CASE("mobius commands round trip through files") {
    const auto p = GraphDistribution::erdos_renyi(3, 0.25);
    TempFile dist(serialize(p));

    const auto z_out = invoke({"mobius-z", dist.str()});
    CHECK(z_out.status == 0);
    TempFile z_file(z_out.out);

    const auto p_out = invoke({"mobius-p", z_file.str()});
    CHECK(p_out.status == 0);
    std::istringstream back_in(p_out.out);
    const auto back = read_distribution(back_in);
    for (std::uint32_t mask = 0; mask < p.mass.size(); ++mask)
        CHECK(back.at(mask) == doctest::Approx(p.at(mask)).epsilon(1e-11));

    CHECK(invoke({"validate-z", z_file.str()}).status == 0);
    CHECK(invoke({"validate-z", z_file.str()}).out == "valid\n");

    // An infeasible Z: all single edges certain, larger graphs impossible.
    TempFile bad_z("3:000 1\n3:100 1\n3:010 1\n3:001 1\n");
    const auto bad = invoke({"validate-z", bad_z.str()});
    CHECK(bad.status == 1);
    CHECK(bad.out.rfind("invalid", 0) == 0);
}

TEST_CASE("verdict commands") {
    TempFile exchangeable_file(serialize(GraphDistribution::erdos_renyi(3, 0.6)));
    const auto yes = invoke({"exchangeable", exchangeable_file.str()});
    CHECK(yes.status == 0);
    CHECK(yes.out == "exchangeable\n");

    TempFile point_file("3:100 1\n");
    const auto no = invoke({"exchangeable", point_file.str()});
    CHECK(no.status == 1);
    CHECK(no.out == "not exchangeable\n");

    TempFile er6(serialize(GraphDistribution::erdos_renyi(6, 0.5)));
    const auto psd = invoke({"psd-check", er6.str()});
    CHECK(psd.status == 0);
    CHECK(psd.out.find("\npsd min_eigenvalue ") != std::string::npos);
    CHECK(psd.out.find("basis 0: 1: 2:0 2:1") != std::string::npos);

    // Uniform on the single-edge class of [4] is exchangeable but not the
    // marginal of any larger exchangeable law; its reflection matrix is
    // indefinite and the command must say so through its exit code.
    std::string single_edge_lines;
    for (const char* enc : {"4:100000", "4:010000", "4:001000",
                            "4:000100", "4:000010", "4:000001"})
        single_edge_lines += std::string(enc) + " 0.16666666666666666\n";
    TempFile single_edge(single_edge_lines);
    const auto not_psd = invoke({"psd-check", single_edge.str()});
    CHECK(not_psd.status == 1);
    CHECK(not_psd.out.find("\nnot psd min_eigenvalue ") != std::string::npos);

    CHECK(invoke({"dissociated", er6.str()}).status == 0);

    // Two-component mixture is not dissociated.
    auto mixture = GraphDistribution::erdos_renyi(4, 0.2);
    const auto other = GraphDistribution::erdos_renyi(4, 0.8);
    for (std::uint32_t mask = 0; mask < mixture.mass.size(); ++mask)
        mixture.at(mask) = 0.5 * mixture.at(mask) + 0.5 * other.at(mask);
    TempFile mixture_file(serialize(mixture));
    const auto dissoc = invoke({"dissociated", mixture_file.str()});
    CHECK(dissoc.status == 1);
    CHECK(dissoc.out.rfind("not dissociated", 0) == 0);
}

TEST_CASE("gexp command") {
    const auto uniform = invoke({"gexp", "2", "--lambda", "1"});
    CHECK(uniform.status == 0);
    CHECK(uniform.out == "2:0 0.5\n2:1 0.5\n");

    CHECK(invoke({"gexp", "2"}).status == 1);  // neither --lambda nor --theta-file
}

TEST_CASE("graphon commands") {
    std::ostringstream w_text;
    write_graphon(w_text, step_graphon_from_graph(LabeledGraph::complete(2)));
    TempFile w_file(w_text.str());

    CHECK(invoke({"graphon-eval", w_file.str(), "2:1"}).out == "0.5\n");

    const auto sampled = invoke({"graphon-sample", w_file.str(), "8", "--seed", "5"});
    CHECK(sampled.status == 0);
    CHECK(sampled.out == invoke({"graphon-sample", w_file.str(), "8", "--seed", "5"}).out);
    CHECK(sampled.out.rfind("8:", 0) == 0);

    const auto mc = invoke({"graphon-mc", w_file.str(), "2:1", "--trials", "5000", "--seed", "3"});
    CHECK(mc.status == 0);
    std::istringstream mc_lines(mc.out);
    std::string label;
    double estimate = 0.0, std_error = 0.0;
    mc_lines >> label >> estimate;
    CHECK(label == "estimate");
    mc_lines >> label >> std_error;
    CHECK(label == "std_error");
    CHECK(std::abs(estimate - 0.5) <= 4 * std_error);  // 0/1 kernel: binomial mean 1/2
    // Byte-identical on identical argv.
    CHECK(mc.out == invoke({"graphon-mc", w_file.str(), "2:1", "--trials", "5000", "--seed", "3"}).out);
}

TEST_CASE("definetti command") {
    TempFile er(serialize(GraphDistribution::erdos_renyi(4, 0.5)));
    const auto report = invoke({"definetti", er.str(), "--m", "2"});
    CHECK(report.status == 0);
    CHECK(report.out ==
          "m 2\nn 4\ntv_half_sum 0.125\ntv_two_sup 0.25\nr_bound 0.25\nloose_bound 0.5\n");

    TempFile point("3:100 1\n");
    CHECK(invoke({"definetti", point.str(), "--m", "2"}).status == 1);
}

TEST_CASE("output redirection") {
    const auto path = std::filesystem::temp_directory_path() / "graphlim_cli_redirect.txt";
    const auto run = invoke({"--output", path.string(), "enumerate", "2"});
    CHECK(run.status == 0);
    CHECK(run.out.empty());
    std::ifstream in(path);
    std::stringstream content;
    content << in.rdbuf();
    CHECK(content.str() == "2:0\n2:1\n");
    std::filesystem::remove(path);
}
