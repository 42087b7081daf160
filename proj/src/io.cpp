#include "exgroup/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace exg {

namespace {

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    require(bool(in), errc::io_error, "cannot open " + path);
    return in;
}

/// Strips '#' comments; returns false at end of input.
bool next_content_line(std::istream& in, std::string& line, bool skip_blank = true) {
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (!skip_blank) return true;
        if (line.find_first_not_of(" \t\r\n") != std::string::npos) return true;
    }
    return false;
}

std::vector<int> parse_ints(const std::string& line, const std::string& what) {
    std::vector<int> out;
    std::istringstream ss(line);
    long long v;
    while (ss >> v) {
        require(v >= 0 && v <= (1LL << 30), errc::io_error, what + ": index out of range");
        out.push_back(int(v));
    }
    std::string tail;
    require(!(ss.clear(), ss >> tail), errc::io_error, what + ": trailing junk '" + tail + "'");
    return out;
}

} // namespace

Group read_group(std::istream& in, ValidateOptions opts) {
    std::string line;
    require(next_content_line(in, line), errc::io_error, "group file: missing header");
    std::istringstream head(line);
    std::string tag;
    long long n = 0;
    require(bool(head >> tag >> n) && tag == "group" && n >= 1 && n <= 10000, errc::io_error,
            "group file: header must be 'group <n>'");
    std::vector<std::int32_t> table;
    table.reserve(size_t(n) * size_t(n));
    for (long long r = 0; r < n; ++r) {
        require(next_content_line(in, line), errc::io_error, "group file: missing row");
        const auto row = parse_ints(line, "group file row " + std::to_string(r));
        require(row.size() == size_t(n), errc::io_error,
                "group file: row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                    " entries, expected " + std::to_string(n));
        for (int v : row) table.push_back(std::int32_t(v));
    }
    try {
        return group_from_cayley_table(int(n), std::move(table), opts);
    } catch (const Error& e) {
        throw Error(e.code(), std::string("group file: ") + e.what());
    }
}

Group read_group_file(const std::string& path, ValidateOptions opts) {
    auto in = open_input(path);
    return read_group(in, opts);
}

void write_group(std::ostream& out, const Group& g) {
    out << "group " << g.n << "\n";
    for (int a = 0; a < g.n; ++a) {
        for (int b = 0; b < g.n; ++b) {
            if (b) out << ' ';
            out << g.mul(a, b);
        }
        out << "\n";
    }
}

GroupSubset read_subset(std::istream& in, int parent_order) {
    GroupSubset s(parent_order);
    std::string line;
    while (next_content_line(in, line)) {
        for (int v : parse_ints(line, "subset file")) {
            require(v < parent_order, errc::io_error, "subset file: index out of range");
            s.insert(v);
        }
    }
    return s;
}

GroupSubset read_subset_file(const std::string& path, int parent_order) {
    auto in = open_input(path);
    return read_subset(in, parent_order);
}

void write_subset(std::ostream& out, const GroupSubset& s) {
    bool first = true;
    for (int v : s.elements()) {
        if (!first) out << ' ';
        out << v;
        first = false;
    }
    out << "\n";
}

std::vector<GroupSubset> read_seeds(std::istream& in, int parent_order) {
    std::vector<GroupSubset> out;
    std::string line;
    while (next_content_line(in, line)) {
        const auto vals = parse_ints(line, "seeds file");
        if (vals.empty()) continue;
        GroupSubset s(parent_order);
        for (int v : vals) {
            require(v < parent_order, errc::io_error, "seeds file: index out of range");
            s.insert(v);
        }
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<GroupSubset> read_seeds_file(const std::string& path, int parent_order) {
    auto in = open_input(path);
    return read_seeds(in, parent_order);
}

GoodPartition read_partition(std::istream& in, const Group& g) {
    std::vector<std::vector<int>> classes;
    std::string line;
    while (next_content_line(in, line)) {
        auto vals = parse_ints(line, "partition file");
        if (vals.empty()) continue;
        for (int v : vals)
            require(v < g.n, errc::io_error, "partition file: index out of range");
        classes.push_back(std::move(vals));
    }
    return make_good_partition(g, std::move(classes));
}

GoodPartition read_partition_file(const std::string& path, const Group& g) {
    auto in = open_input(path);
    return read_partition(in, g);
}

void write_partition(std::ostream& out, const GoodPartition& p) {
    for (const auto& cls : p.classes) {
        for (size_t i = 0; i < cls.size(); ++i) {
            if (i) out << ' ';
            out << cls[i];
        }
        out << "\n";
    }
}

Graph read_graph(std::istream& in) {
    std::string line;
    require(next_content_line(in, line), errc::io_error, "graph file: missing header");
    std::istringstream head(line);
    std::string tag;
    long long v = 0, e = 0;
    require(bool(head >> tag >> v >> e) && tag == "graph" && v >= 0 && e >= 0, errc::io_error,
            "graph file: header must be 'graph <v> <e>'");
    Graph graph{int(v)};
    for (long long i = 0; i < e; ++i) {
        require(next_content_line(in, line), errc::io_error, "graph file: missing edge line");
        const auto pair = parse_ints(line, "graph file edge " + std::to_string(i));
        require(pair.size() == 2, errc::io_error, "graph file: edge line needs two endpoints");
        require(pair[0] < v && pair[1] < v, errc::io_error, "graph file: endpoint out of range");
        require(pair[0] != pair[1], errc::io_error, "graph file: loops are not allowed");
        graph.add_edge(pair[0], pair[1]);
    }
    return graph;
}

Graph read_graph_file(const std::string& path) {
    auto in = open_input(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& graph) {
    out << "graph " << graph.vertex_count() << ' ' << graph.edge_count() << "\n";
    for (int a = 0; a < graph.vertex_count(); ++a)
        for (int b = a + 1; b < graph.vertex_count(); ++b)
            if (graph.adjacent(a, b)) out << a << ' ' << b << "\n";
}

PermutationSet read_permutation_set(std::istream& in) {
    std::string line;
    require(next_content_line(in, line), errc::io_error, "perm file: missing header");
    std::istringstream head(line);
    std::string tag;
    long long degree = 0, gens = 0, base = 0;
    require(bool(head >> tag >> degree >> gens >> base) && tag == "perm" && degree >= 1 &&
                gens >= 0 && base >= 0 && base < degree,
            errc::io_error, "perm file: header must be 'perm <degree> <#gens> <base_point>'");
    PermutationSet out;
    out.degree = int(degree);
    out.base_point = int(base);
    for (long long i = 0; i < gens; ++i) {
        require(next_content_line(in, line), errc::io_error, "perm file: missing generator line");
        auto images = parse_ints(line, "perm file generator " + std::to_string(i));
        require(images.size() == size_t(degree), errc::io_error,
                "perm file: generator " + std::to_string(i) + " has wrong degree");
        out.generators.push_back(std::move(images));
    }
    return out;
}

PermutationSet read_permutation_set_file(const std::string& path) {
    auto in = open_input(path);
    return read_permutation_set(in);
}

void write_sts(std::ostream& out, const SteinerTripleSystem& s) {
    out << "sts " << s.points << ' ' << s.blocks.size() << "\n";
    for (const auto& blk : s.blocks) out << blk[0] << ' ' << blk[1] << ' ' << blk[2] << "\n";
}

void render_schur_report(std::ostream& out, const SchurRing& ring) {
    const int r = ring.rank();
    out << "rank " << r << "\n";
    out << "class_sizes";
    for (int s : ring.partition.class_sizes()) out << ' ' << s;
    out << "\n";
    out << "classes\n";
    write_partition(out, ring.partition);
    out << "structure_constants\n";
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            out << i << ' ' << j << " :";
            for (int k = 0; k < r; ++k) out << ' ' << ring.c(i, j, k);
            out << "\n";
        }
}

void render_pds_certificate(std::ostream& out, const PdsCertificate& cert) {
    out << "PDS v=" << cert.v << " k=" << cert.k << " lambda=" << cert.lambda
        << " mu=" << cert.mu << " generates=" << (cert.generates ? "true" : "false") << "\n";
    out << "set ";
    write_subset(out, cert.set);
}

void render_srg(std::ostream& out, const SrgCheck& check) {
    if (check.ok()) {
        out << "srg v=" << check.params.v << " k=" << check.params.k
            << " lambda=" << check.params.lambda << " mu=" << check.params.mu << "\n";
    } else if (check.degenerate()) {
        out << "FAIL degenerate " << check.detail << "\n";
    } else {
        out << "FAIL not_srg " << check.detail;
        if (check.witness_a >= 0)
            out << " (witness pair " << check.witness_a << ' ' << check.witness_b << ")";
        out << "\n";
    }
}

namespace {

const char* classification_note =
    "note the full B-group conclusion additionally relies on the O'Nan-Scott theorem and the "
    "classification of regular subgroups of primitive almost simple groups, which this toolkit "
    "does not reprove";

} // namespace

void render_obstruction_report(std::ostream& out, const ObstructionReport& report) {
    out << "p " << report.p << "\n";
    out << "n " << report.n << "\n";
    out << "claim_ok " << (report.claim_ok ? "true" : "false") << "\n";
    if (!report.claim_ok) out << "claim_reason " << report.claim_reason << "\n";
    out << "qq_ok " << (report.qq_ok ? "true" : "false") << "\n";
    if (!report.qq_ok) out << "offending_q " << report.offending_q << "\n";
    out << "sporadic_ok " << (report.sporadic_ok ? "true" : "false") << "\n";
    if (!report.sporadic_ok) out << "sporadic_degree " << report.n << "\n";
    out << "verdict " << arith_verdict_name(report.verdict) << "\n";
    out << classification_note << "\n";
}

void render_certificate(std::ostream& out, const WitnessCertificate& cert) {
    out << "GROUP\n";
    out << "p " << cert.p << "\n";
    out << "order " << cert.group_order << "\n";
    out << "family " << cert.group_name << "\n";
    out << "STS\n";
    out << "points " << cert.sts_points << "\n";
    out << "blocks " << cert.sts_blocks << "\n";
    out << "x " << cert.x << "\n";
    out << "GRAPH\n";
    out << "v " << cert.srg.v << "\n";
    out << "k " << cert.srg.k << "\n";
    out << "lambda " << cert.srg.lambda << "\n";
    out << "mu " << cert.srg.mu << "\n";
    out << "PDS\n";
    out << "size " << cert.pds.k << "\n";
    out << "lambda " << cert.pds.lambda << "\n";
    out << "mu " << cert.pds.mu << "\n";
    out << "inverse_closed " << (cert.pds.inverse_closed ? "true" : "false") << "\n";
    out << "generates " << (cert.pds.generates ? "true" : "false") << "\n";
    out << "set ";
    write_subset(out, cert.pds.set);
    out << "SCHUR\n";
    out << "rank " << cert.schur_rank << "\n";
    out << "class_sizes";
    for (int s : cert.schur_class_sizes) out << ' ' << s;
    out << "\n";
    out << "primitive " << (cert.primitive ? "true" : "false") << "\n";
    out << "ARITH\n";
    render_obstruction_report(out, cert.arith);
    out << "VERDICT\n";
    out << "non_bs " << cert.non_bs << "\n";
    out << "b_side " << cert.b_side << "\n";
}

} // namespace exg
