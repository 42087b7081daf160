// Command-line front end: one subcommand per public operation, plain-text
// key-value output, byte-deterministic for fixed inputs.
//
// Exit codes: 0 affirmative/success, 1 negative result, 2 usage/input error.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "exgroup/families.hpp"
#include "exgroup/io.hpp"
#include "exgroup/sts.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

struct Options {
    int threads = 1;
    bool stamp = false;
};

int run_witness(const Options& opt, int p, const std::string& dump_dir, std::ostream& out) {
    try {
        const exg::WitnessCertificate cert = exg::exclusive_witness(p, opt.threads);
        exg::render_certificate(out, cert);
        if (!dump_dir.empty()) {
            namespace fs = std::filesystem;
            fs::create_directories(dump_dir);
            const exg::ClaphamSystem cs = exg::clapham_sts(p);
            std::ofstream g(fs::path(dump_dir) / "group.txt");
            exg::write_group(g, cs.frob.group);
            std::ofstream s(fs::path(dump_dir) / "set.txt");
            exg::write_subset(s, cert.pds.set);
            std::ofstream part(fs::path(dump_dir) / "partition.txt");
            exg::write_partition(part, cert.partition);
            std::ofstream sts(fs::path(dump_dir) / "sts.txt");
            exg::write_sts(sts, cs.sts);
            std::ofstream graph(fs::path(dump_dir) / "graph.txt");
            exg::write_graph(graph, exg::block_graph(cs.sts));
        }
        return cert.fully_established() ? 0 : 1;
    } catch (const exg::StageFailure& e) {
        out << "FAILED at stage " << e.stage() << ": " << e.detail() << "\n";
        return 1;
    }
}

int run_sts(const Options&, int p, std::ostream& out) {
    const exg::ClaphamSystem cs = exg::clapham_sts(p);
    exg::write_sts(out, cs.sts);
    return 0;
}

int run_check_pds(const Options& opt, const std::string& groupfile, const std::string& setfile,
                  std::ostream& out) {
    const exg::Group g = exg::read_group_file(groupfile);
    const exg::GroupSubset x = exg::read_subset_file(setfile, g.n);
    const exg::PdsCheck check = exg::check_regular_pds(g, x, opt.threads);
    if (check.ok()) {
        exg::render_pds_certificate(out, *check.certificate);
        return 0;
    }
    out << "FAIL " << exg::pds_status_name(check.status);
    if (!check.detail.empty()) out << " " << check.detail;
    out << "\n";
    return 1;
}

int run_pds_search(const Options& opt, const std::string& groupfile, std::optional<int> k,
                   std::optional<int> limit, int max_bits, std::ostream& out) {
    const exg::Group g = exg::read_group_file(groupfile);
    exg::PdsSearchOptions sopt;
    sopt.size_filter = k;
    sopt.limit = limit;
    sopt.max_free_bits = max_bits;
    sopt.threads = opt.threads;
    const auto found = exg::search_regular_pds(g, sopt);
    for (const auto& cert : found) exg::render_pds_certificate(out, cert);
    out << "found " << found.size() << "\n";
    return found.empty() ? 1 : 0;
}

int run_closure(const Options& opt, const std::string& groupfile, const std::string& seedsfile,
                std::ostream& out) {
    const exg::Group g = exg::read_group_file(groupfile);
    const auto seeds = exg::read_seeds_file(seedsfile, g.n);
    const exg::SchurRing ring = exg::schurian_closure(g, seeds, opt.threads);
    exg::render_schur_report(out, ring);
    return 0;
}

int run_schur_check(const Options& opt, const std::string& groupfile,
                    const std::string& partitionfile, std::ostream& out) {
    const exg::Group g = exg::read_group_file(groupfile);
    const exg::GoodPartition p = exg::read_partition_file(partitionfile, g);
    const exg::SchurCheck check = exg::is_schur_ring(g, p, opt.threads);
    if (check.ok) {
        exg::render_schur_report(out, check.ring);
        return 0;
    }
    const auto& w = check.witness;
    out << "FAIL not_a_schur_ring classes " << w.i << " * " << w.j << " give coefficient "
        << w.c1 << " on element " << w.g1 << " but " << w.c2 << " on element " << w.g2
        << " of class " << w.cls << "\n";
    return 1;
}

int run_primitive(const Options& opt, const std::string& groupfile,
                  const std::string& partitionfile, std::ostream& out) {
    const exg::Group g = exg::read_group_file(groupfile);
    const exg::GoodPartition p = exg::read_partition_file(partitionfile, g);
    const exg::SchurCheck check = exg::is_schur_ring(g, p, opt.threads);
    if (!check.ok) {
        out << "FAIL not_a_schur_ring\n";
        return 1;
    }
    const exg::Primitivity prim = exg::is_primitive(check.ring, g);
    out << "primitive " << (prim.primitive ? "true" : "false") << "\n";
    if (!prim.primitive) {
        out << "witness_subgroup ";
        exg::write_subset(out, *prim.witness);
    }
    return prim.primitive ? 0 : 1;
}

int run_orbital(const Options&, const std::string& permfile, const std::string& groupfile,
                std::ostream& out) {
    const exg::Group g = exg::read_group_file(groupfile);
    const exg::PermutationSet perms = exg::read_permutation_set_file(permfile);
    std::vector<int> labeling(size_t(perms.degree));
    for (int i = 0; i < perms.degree; ++i) labeling[size_t(i)] = i; // points are elements
    try {
        const exg::SchurRing ring = exg::orbital_schur_ring(perms, labeling, g);
        exg::render_schur_report(out, ring);
        return 0;
    } catch (const exg::Error& e) {
        if (e.code() != exg::errc::not_a_schur_ring) throw;
        out << "FAIL " << e.what() << "\n";
        return 1;
    }
}

int run_srg(const Options& opt, const std::string& graphfile, std::ostream& out) {
    const exg::Graph graph = exg::read_graph_file(graphfile);
    const exg::SrgCheck check = exg::srg_parameters(graph, opt.threads);
    exg::render_srg(out, check);
    return check.ok() ? 0 : 1;
}

int run_arith(const Options&, int p, std::ostream& out) {
    const exg::ObstructionReport report = exg::obstruction_report(p);
    exg::render_obstruction_report(out, report);
    return report.verdict == exg::ArithVerdict::arithmetic_pass ? 0 : 1;
}

int run_enumerate(const Options&, const std::string& groupfile, std::ostream& out) {
    const exg::Group g = exg::read_group_file(groupfile);
    const auto rings = exg::enumerate_schur_rings(g);
    for (size_t i = 0; i < rings.size(); ++i) {
        out << "ring " << (i + 1) << " rank " << rings[i].rank() << " class_sizes";
        for (int s : rings[i].partition.class_sizes()) out << ' ' << s;
        out << "\n";
        exg::write_partition(out, rings[i].partition);
        out << "\n";
    }
    out << "count " << rings.size() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exg: Schur rings, partial difference sets and exclusive-group certificates"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kVersion);

    Options opt;
    app.add_option("--threads", opt.threads, "worker threads (output is identical for any value)")
        ->default_val(1);
    app.add_flag("--stamp", opt.stamp, "append a provenance stamp after the certified output");

    int p = 0;
    std::string groupfile, secondfile, dump_dir;
    std::optional<int> k_filter, limit;
    int max_bits = 30;

    auto* witness = app.add_subcommand("witness", "full exclusive-group certificate for a prime");
    witness->add_option("p", p, "prime, 7 mod 12")->required();
    witness->add_option("--dump-dir", dump_dir, "write group/set/partition/sts/graph files here");

    auto* sts = app.add_subcommand("sts", "Steiner triple system from the orbit construction");
    sts->add_option("p", p, "prime, 7 mod 12")->required();

    auto* checkpds = app.add_subcommand("check-pds", "verify a regular partial difference set");
    checkpds->add_option("groupfile", groupfile)->required();
    checkpds->add_option("setfile", secondfile)->required();

    auto* search = app.add_subcommand("pds-search", "exhaustive regular-PDS search");
    search->add_option("groupfile", groupfile)->required();
    search->add_option("--k", k_filter, "only sets of this size");
    search->add_option("--limit", limit, "truncate the sorted result list");
    search->add_option("--max-bits", max_bits, "free-choice guard (involutions + inverse pairs)");

    auto* closure = app.add_subcommand("closure", "coarsest Schur ring containing the seed sets");
    closure->add_option("groupfile", groupfile)->required();
    closure->add_option("seedsfile", secondfile)->required();

    auto* schurcheck = app.add_subcommand("schur-check", "test the Schur-ring condition");
    schurcheck->add_option("groupfile", groupfile)->required();
    schurcheck->add_option("partitionfile", secondfile)->required();

    auto* primitive = app.add_subcommand("primitive", "primitivity of a Schur ring");
    primitive->add_option("groupfile", groupfile)->required();
    primitive->add_option("partitionfile", secondfile)->required();

    auto* orbital = app.add_subcommand(
        "orbital",
        "Schur ring from stabilizer orbits (points are identified with group elements, so "
        "the base point must be the identity's index)");
    orbital->add_option("permfile", secondfile)->required();
    orbital->add_option("groupfile", groupfile)->required();

    auto* srg = app.add_subcommand("srg", "strongly-regular parameters of a graph");
    srg->add_option("graphfile", groupfile)->required();

    auto* arith = app.add_subcommand("arith", "arithmetic obstruction report for a prime");
    arith->add_option("p", p, "prime, 7 mod 12")->required();

    auto* enumerate = app.add_subcommand("enumerate", "all Schur rings over a small group");
    enumerate->add_option("groupfile", groupfile)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::ostringstream out;
    int code = 2;
    try {
        if (witness->parsed()) code = run_witness(opt, p, dump_dir, out);
        else if (sts->parsed()) code = run_sts(opt, p, out);
        else if (checkpds->parsed()) code = run_check_pds(opt, groupfile, secondfile, out);
        else if (search->parsed()) code = run_pds_search(opt, groupfile, k_filter, limit, max_bits, out);
        else if (closure->parsed()) code = run_closure(opt, groupfile, secondfile, out);
        else if (schurcheck->parsed()) code = run_schur_check(opt, groupfile, secondfile, out);
        else if (primitive->parsed()) code = run_primitive(opt, groupfile, secondfile, out);
        else if (orbital->parsed()) code = run_orbital(opt, secondfile, groupfile, out);
        else if (srg->parsed()) code = run_srg(opt, groupfile, out);
        else if (arith->parsed()) code = run_arith(opt, p, out);
        else if (enumerate->parsed()) code = run_enumerate(opt, groupfile, out);
    } catch (const exg::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cout << out.str();
    if (opt.stamp) {
        const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
        char buf[32];
        std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&now));
        std::cout << "stamp exg " << kVersion << " " << buf << "\n";
    }
    return code;
}
