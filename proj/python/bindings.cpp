// Python bindings for the main operations.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "exgroup/families.hpp"
#include "exgroup/io.hpp"
#include "exgroup/sts.hpp"

namespace py = pybind11;
using namespace exg;

namespace {

GroupSubset subset_from_list(const Group& g, const std::vector<int>& elements) {
    return GroupSubset(g.n, elements);
}

std::vector<std::vector<int>> classes_of(const GoodPartition& p) { return p.classes; }

std::string certificate_text(const WitnessCertificate& cert) {
    std::ostringstream out;
    render_certificate(out, cert);
    return out.str();
}

std::string ring_report(const SchurRing& ring) {
    std::ostringstream out;
    render_schur_report(out, ring);
    return out.str();
}

void register_exceptions(py::module_& m) {
    static py::exception<Error> exc(m, "ExgError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            exc(e.what());
        }
    });
}

} // namespace

PYBIND11_MODULE(_exgroup, m) {
    m.doc() = "Schur rings, partial difference sets, Steiner triple systems and "
              "exclusive-group certificates over finite groups";

    register_exceptions(m);

    py::class_<Group>(m, "Group")
        .def_readonly("order", &Group::n)
        .def_readonly("identity", &Group::identity)
        .def("mul", &Group::mul)
        .def("inverse", [](const Group& g, int a) { return g.inv.at(size_t(a)); })
        .def("table", [](const Group& g) {
            std::vector<std::vector<int>> rows(size_t(g.n), std::vector<int>(size_t(g.n)));
            for (int a = 0; a < g.n; ++a)
                for (int b = 0; b < g.n; ++b) rows[size_t(a)][size_t(b)] = g.mul(a, b);
            return rows;
        })
        .def("__repr__", [](const Group& g) {
            return "<Group of order " + std::to_string(g.n) + ">";
        });

    py::class_<FrobeniusGroup>(m, "FrobeniusGroup")
        .def_readonly("group", &FrobeniusGroup::group)
        .def_property_readonly("p", [](const FrobeniusGroup& f) { return f.spec.p; })
        .def_property_readonly("d", [](const FrobeniusGroup& f) { return f.spec.d; })
        .def("point_image", &FrobeniusGroup::point_image);

    py::class_<GoodPartition>(m, "Partition")
        .def_property_readonly("rank", &GoodPartition::rank)
        .def_property_readonly("classes", &classes_of)
        .def_property_readonly("class_sizes", &GoodPartition::class_sizes);

    py::class_<SchurRing>(m, "SchurRing")
        .def_readonly("partition", &SchurRing::partition)
        .def_property_readonly("rank", &SchurRing::rank)
        .def("c", &SchurRing::c)
        .def("report", &ring_report);

    py::class_<SchurRingWitness>(m, "SchurRingWitness")
        .def_readonly("i", &SchurRingWitness::i)
        .def_readonly("j", &SchurRingWitness::j)
        .def_readonly("cls", &SchurRingWitness::cls)
        .def_readonly("g1", &SchurRingWitness::g1)
        .def_readonly("g2", &SchurRingWitness::g2);

    py::class_<SchurCheck>(m, "SchurCheck")
        .def_readonly("ok", &SchurCheck::ok)
        .def_readonly("ring", &SchurCheck::ring)
        .def_readonly("witness", &SchurCheck::witness);

    py::class_<SrgParameters>(m, "SrgParameters")
        .def_readonly("v", &SrgParameters::v)
        .def_readonly("k", &SrgParameters::k)
        .def_readonly("lam", &SrgParameters::lambda)
        .def_readonly("mu", &SrgParameters::mu)
        .def("__iter__", [](const SrgParameters& p) {
            return py::iter(py::make_tuple(p.v, p.k, p.lambda, p.mu));
        });

    py::class_<Graph>(m, "Graph")
        .def_property_readonly("vertex_count", &Graph::vertex_count)
        .def("adjacent", &Graph::adjacent)
        .def("degree", &Graph::degree)
        .def_property_readonly("edge_count", &Graph::edge_count);

    py::class_<SrgCheck>(m, "SrgCheck")
        .def_property_readonly("status",
                               [](const SrgCheck& c) { return srg_status_name(c.status); })
        .def_property_readonly("ok", &SrgCheck::ok)
        .def_readonly("params", &SrgCheck::params)
        .def_readonly("detail", &SrgCheck::detail);

    py::class_<PdsCertificate>(m, "PdsCertificate")
        .def_readonly("v", &PdsCertificate::v)
        .def_readonly("k", &PdsCertificate::k)
        .def_readonly("lam", &PdsCertificate::lambda)
        .def_readonly("mu", &PdsCertificate::mu)
        .def_readonly("generates", &PdsCertificate::generates)
        .def_property_readonly("set",
                               [](const PdsCertificate& c) { return c.set.elements(); });

    py::class_<PdsCheck>(m, "PdsCheck")
        .def_property_readonly("status", [](const PdsCheck& c) { return pds_status_name(c.status); })
        .def_property_readonly("ok", &PdsCheck::ok)
        .def_property_readonly("certificate",
                               [](const PdsCheck& c) { return c.certificate; })
        .def_readonly("detail", &PdsCheck::detail);

    py::class_<SteinerTripleSystem>(m, "SteinerTripleSystem")
        .def_readonly("points", &SteinerTripleSystem::points)
        .def_property_readonly("blocks", [](const SteinerTripleSystem& s) {
            std::vector<std::vector<int>> out;
            for (const auto& b : s.blocks) out.push_back({b[0], b[1], b[2]});
            return out;
        });

    py::class_<ClaphamSystem>(m, "ClaphamSystem")
        .def_property_readonly("group", [](const ClaphamSystem& c) { return c.frob.group; })
        .def_readonly("sts", &ClaphamSystem::sts)
        .def_readonly("x", &ClaphamSystem::x)
        .def_readonly("base_block", &ClaphamSystem::base_block);

    py::class_<ObstructionReport>(m, "ObstructionReport")
        .def_readonly("p", &ObstructionReport::p)
        .def_readonly("n", &ObstructionReport::n)
        .def_readonly("claim_ok", &ObstructionReport::claim_ok)
        .def_readonly("qq_ok", &ObstructionReport::qq_ok)
        .def_readonly("sporadic_ok", &ObstructionReport::sporadic_ok)
        .def_property_readonly("verdict", [](const ObstructionReport& r) {
            return arith_verdict_name(r.verdict);
        });

    py::class_<WitnessCertificate>(m, "WitnessCertificate")
        .def_readonly("p", &WitnessCertificate::p)
        .def_readonly("group_order", &WitnessCertificate::group_order)
        .def_readonly("sts_blocks", &WitnessCertificate::sts_blocks)
        .def_readonly("x", &WitnessCertificate::x)
        .def_readonly("srg", &WitnessCertificate::srg)
        .def_readonly("pds", &WitnessCertificate::pds)
        .def_readonly("schur_rank", &WitnessCertificate::schur_rank)
        .def_readonly("schur_class_sizes", &WitnessCertificate::schur_class_sizes)
        .def_readonly("primitive", &WitnessCertificate::primitive)
        .def_readonly("arith", &WitnessCertificate::arith)
        .def_readonly("non_bs", &WitnessCertificate::non_bs)
        .def_readonly("b_side", &WitnessCertificate::b_side)
        .def("fully_established", &WitnessCertificate::fully_established)
        .def("text", &certificate_text);

    // group construction
    m.def("group_from_cayley_table",
          [](const std::vector<std::vector<int>>& rows) { return group_from_cayley_table(rows); });
    m.def("load_group", [](const std::string& path) { return read_group_file(path); });
    m.def("cyclic_group", &cyclic_group);
    m.def("dihedral_group", &dihedral_group);
    m.def("elementary_abelian_group", &elementary_abelian_group);
    m.def("quaternion_group", &quaternion_group);
    m.def("alternating_group_4", &alternating_group_4);
    m.def("direct_product", &direct_product);
    m.def("semidirect_cyclic", &semidirect_cyclic);
    m.def("frobenius_subgroup_of_agl",
          [](int p, int d) { return frobenius_subgroup_of_agl(p, d); });

    m.def("generated_subgroup", [](const Group& g, const std::vector<int>& s) {
        return generated_subgroup(g, subset_from_list(g, s)).elements();
    });
    m.def("is_subgroup", [](const Group& g, const std::vector<int>& h) {
        return is_subgroup(g, subset_from_list(g, h));
    });

    // schur
    m.def("trivial_partition", &trivial_partition);
    m.def("make_partition", [](const Group& g, std::vector<std::vector<int>> classes) {
        return make_good_partition(g, std::move(classes));
    });
    m.def("is_schur_ring",
          [](const Group& g, const GoodPartition& p, int threads) {
              return is_schur_ring(g, p, threads);
          },
          py::arg("group"), py::arg("partition"), py::arg("threads") = 1);
    m.def("schurian_closure",
          [](const Group& g, const std::vector<std::vector<int>>& seeds, int threads) {
              std::vector<GroupSubset> sets;
              for (const auto& s : seeds) sets.push_back(subset_from_list(g, s));
              return schurian_closure(g, sets, threads);
          },
          py::arg("group"), py::arg("seeds"), py::arg("threads") = 1);
    m.def("is_primitive", [](const SchurRing& ring, const Group& g) {
        const Primitivity prim = is_primitive(ring, g);
        return py::make_tuple(prim.primitive,
                              prim.witness ? py::cast(prim.witness->elements()) : py::none());
    });
    m.def("orbital_schur_ring",
          [](int degree, const std::vector<std::vector<int>>& generators, int base_point,
             const std::vector<int>& labeling, const Group& g) {
              return orbital_schur_ring(PermutationSet{degree, generators, base_point}, labeling,
                                        g);
          });
    m.def("enumerate_schur_rings", &enumerate_schur_rings);

    // graphs and partial difference sets
    m.def("cayley_graph", [](const Group& g, const std::vector<int>& x) {
        return cayley_graph(g, subset_from_list(g, x));
    });
    m.def("srg_parameters", &srg_parameters, py::arg("graph"), py::arg("threads") = 1);
    m.def("check_regular_pds",
          [](const Group& g, const std::vector<int>& x, int threads) {
              return check_regular_pds(g, subset_from_list(g, x), threads);
          },
          py::arg("group"), py::arg("set"), py::arg("threads") = 1);
    m.def("search_regular_pds",
          [](const Group& g, std::optional<int> k, std::optional<int> limit, int threads) {
              PdsSearchOptions opts;
              opts.size_filter = k;
              opts.limit = limit;
              opts.threads = threads;
              return search_regular_pds(g, opts);
          },
          py::arg("group"), py::arg("k") = py::none(), py::arg("limit") = py::none(),
          py::arg("threads") = 1);

    // Steiner triple systems and the witness pipeline
    m.def("clapham_sts", &clapham_sts);
    m.def("block_graph", &block_graph);
    m.def("exclusive_witness", &exclusive_witness, py::arg("p"), py::arg("threads") = 1);

    // arithmetic obstructions
    m.def("is_prime", &is_prime);
    m.def("is_prime_power", &is_prime_power);
    m.def("is_perfect_power", &is_perfect_power);
    m.def("order_claim_check", [](long long p) {
        const ClaimResult r = order_claim_check(p);
        return py::make_tuple(r.ok, r.n, r.reason);
    });
    m.def("qq_halves_exclusion", [](long long n) {
        const QqResult r = qq_halves_exclusion(n);
        return py::make_tuple(r.ok, r.offending_q);
    });
    m.def("sporadic_exclusion", &sporadic_exclusion);
    m.def("product_non_b_predicate", &product_non_b_predicate);
    m.def("obstruction_report", &obstruction_report);
}
