// Batch front end: parse a presentation document, dispatch one analysis,
// print a structured report. Exit codes: 0 = analysis completed (whatever the
// mathematical verdict), 1 = input error, 2 = resource cap exceeded.
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nkz/io.hpp"

namespace {

std::string load_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw nkz::InvalidInput("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis toolkit for graded algebras with a single homogeneous relation"};
    app.require_subcommand(1);

    nkz::JobSpec job;
    std::string input_path, second_path;

    auto add_common = [&](CLI::App* cmd, bool with_input = true) {
        if (with_input)
            cmd->add_option("input", input_path, "presentation document (JSON), or - for stdin")
                ->required();
        cmd->add_option("--max-degree", job.limits.max_degree, "degree cap for exact computations");
        cmd->add_option("--probe-limit", job.probe_limit, "homological probe depth");
        cmd->add_option("--lattice-cap", job.lattice_cap, "sublattice element cap");
        cmd->add_option("--seed", job.seed, "seed for randomized spot checks");
        cmd->add_option("--format", job.format, "report format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--tolerance", job.tolerance, "root-modulus tolerance (numeric GK mode)");
    };

    add_common(app.add_subcommand("check-koszul", "Koszulity criterion and global dimension"));
    auto* dist = app.add_subcommand("distributivity", "generated sublattices and triple checks");
    add_common(dist);
    dist->add_option("--m-max", job.m_max, "largest tensor degree to test (default N+2)");
    auto* hilb = app.add_subcommand("hilbert", "Hilbert series expansion and cross-checks");
    add_common(hilb);
    hilb->add_option("--degree", job.series_degree, "series truncation degree");
    add_common(app.add_subcommand("classify", "quadratic / antisymmetric classification"));
    auto* mono = app.add_subcommand("monomial", "single-monomial analysis and word counts");
    add_common(mono);
    mono->add_option("--degree", job.series_degree, "word-count truncation degree");
    add_common(app.add_subcommand("pbw", "PBW deformation conditions"));
    auto* census = app.add_subcommand("census", "count Koszul monomial sets of a given size");
    add_common(census, false);
    census->add_option("--n", job.census_n, "generator count")->required();
    census->add_option("--N", job.census_N, "relation degree")->required();
    census->add_option("--p", job.census_p, "set size")->required();
    auto* fp = app.add_subcommand("free-product", "free product of two presentations");
    add_common(fp);
    fp->add_option("second", second_path, "second presentation document")->required();
    auto* all = app.add_subcommand("report-all", "every applicable analysis in one report");
    add_common(all);
    all->add_option("--degree", job.series_degree, "series truncation degree");
    all->add_option("--m-max", job.m_max, "largest tensor degree for distributivity");

    CLI11_PARSE(app, argc, argv);
    job.command = app.get_subcommands().front()->get_name();

    try {
        if (job.command != "census") job.input_text = load_input(input_path);
        if (job.command == "free-product") job.second_input_text = load_input(second_path);
        const nkz::Report report = nkz::run_job(job);
        std::cout << report.render(job.format);
        return 0;
    } catch (const nkz::ResourceLimit& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 2;
    } catch (const nkz::InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
