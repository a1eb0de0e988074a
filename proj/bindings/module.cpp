#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "synckit/congruence.hpp"
#include "synckit/harness.hpp"
#include "synckit/letters.hpp"
#include "synckit/sync.hpp"

namespace py = pybind11;
using namespace synckit;

namespace {

py::dict claim_result_dict(const ClaimResult& r) {
    py::dict out;
    out["hypotheses_hold"] = r.hypotheses_hold;
    out["conclusion_holds"] = r.conclusion_holds;
    out["violated"] = r.violated;
    return out;
}

py::dict sweep_report_dict(const SweepReport& report) {
    py::dict out;
    out["n"] = report.n;
    out["k"] = report.k;
    out["mode"] = report.sampled ? "sample" : "exhaustive";
    out["seed"] = report.seed;
    out["total"] = report.total;
    out["primitive"] = report.primitive_count;
    out["synchronizing"] = report.synchronizing_count;
    out["permutation_primitive"] = report.permutation_primitive_count;
    py::dict violations;
    for (size_t i = 0; i < report.claims.size(); ++i)
        violations[py::str(claim_name(report.claims[i]))] = report.violations[i];
    out["violations"] = violations;
    py::list counterexamples;
    for (size_t i = 0; i < report.claims.size(); ++i) {
        if (!report.first_counterexample[i]) continue;
        py::dict c;
        c["claim"] = claim_name(report.claims[i]);
        c["index"] = report.first_counterexample[i]->index;
        c["dfa"] = report.first_counterexample[i]->certificate;
        counterexamples.append(c);
    }
    out["counterexamples"] = counterexamples;
    out["wall_seconds"] = report.wall_seconds;
    out["text"] = report.to_text();
    return out;
}

std::vector<Claim> claims_from_names(const std::vector<std::string>& names) {
    std::vector<Claim> out;
    for (const std::string& name : names) {
        std::optional<Claim> c = claim_from_name(name);
        if (!c) throw std::invalid_argument("unknown claim '" + name + "'");
        out.push_back(*c);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Synchronization and primitivity analysis of complete DFAs";
    m.attr("__version__") = "0.1.0";
    m.attr("DEFAULT_SUBSET_CAP") = kDefaultSubsetCap;

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

    py::class_<Automaton>(m, "Automaton")
        .def(py::init<int, int, std::vector<State>, std::vector<std::string>>(), py::arg("n"),
             py::arg("k"), py::arg("delta"), py::arg("letter_names") = std::vector<std::string>{})
        .def_property_readonly("n", &Automaton::states)
        .def_property_readonly("k", &Automaton::letters)
        .def_property_readonly("table", [](const Automaton& a) { return a.table(); })
        .def_property_readonly("letter_names",
                               [](const Automaton& a) { return a.letter_names(); })
        .def("step", &Automaton::step, py::arg("q"), py::arg("a"))
        .def("apply", &Automaton::apply, py::arg("q"), py::arg("word"))
        .def("__eq__", [](const Automaton& a, const Automaton& b) { return a == b; })
        .def("__repr__", [](const Automaton& a) {
            return "Automaton(n=" + std::to_string(a.states()) +
                   ", k=" + std::to_string(a.letters()) + ")";
        });

    py::class_<Partition>(m, "Partition")
        .def_static("equality", &Partition::equality, py::arg("n"))
        .def_static("universal", &Partition::universal, py::arg("n"))
        .def_static("from_blocks", &Partition::from_blocks, py::arg("n"), py::arg("blocks"))
        .def_property_readonly("n", &Partition::size)
        .def("blocks", &Partition::blocks)
        .def("block_count", &Partition::block_count)
        .def("representative", &Partition::representative, py::arg("q"))
        .def("same_block", &Partition::same_block, py::arg("p"), py::arg("q"))
        .def("is_equality", &Partition::is_equality)
        .def("is_universal", &Partition::is_universal)
        .def("meet", &Partition::meet, py::arg("other"))
        .def("__eq__", [](const Partition& a, const Partition& b) { return a == b; })
        .def("__str__", &Partition::to_string)
        .def("__repr__", [](const Partition& p) { return "Partition(" + p.to_string() + ")"; });

    py::class_<ClusterDecomposition>(m, "ClusterDecomposition")
        .def_readonly("letter", &ClusterDecomposition::letter)
        .def_readonly("cluster_of", &ClusterDecomposition::cluster_of)
        .def_readonly("cycle_states", &ClusterDecomposition::cycle_states)
        .def_readonly("height_of", &ClusterDecomposition::height_of)
        .def_readonly("root_of", &ClusterDecomposition::root_of)
        .def("cluster_count", &ClusterDecomposition::cluster_count)
        .def("max_height", &ClusterDecomposition::max_height);

    py::class_<PrimitivityVerdict>(m, "PrimitivityVerdict")
        .def_readonly("primitive", &PrimitivityVerdict::primitive)
        .def_readonly("witness", &PrimitivityVerdict::witness)
        .def("__bool__", [](const PrimitivityVerdict& v) { return v.primitive; });

    py::enum_<PermutationPrimitivity>(m, "PermutationPrimitivity")
        .value("PRIMITIVE", PermutationPrimitivity::primitive)
        .value("NOT_PRIMITIVE", PermutationPrimitivity::not_primitive)
        .value("NO_PERMUTATION_LETTERS", PermutationPrimitivity::no_permutation_letters);

    py::class_<SyncResult>(m, "SyncResult")
        .def_readonly("synchronizing", &SyncResult::synchronizing)
        .def_readonly("reset_word", &SyncResult::reset_word)
        .def_readonly("threshold", &SyncResult::threshold)
        .def("__bool__", [](const SyncResult& r) { return r.synchronizing; });

    py::class_<Dichotomy> dichotomy_class(m, "Dichotomy");
    py::enum_<Dichotomy::Kind>(dichotomy_class, "Kind")
        .value("STRONGLY_CONNECTED", Dichotomy::Kind::strongly_connected)
        .value("SYNCHRONIZING_WITH_SINK", Dichotomy::Kind::synchronizing_with_sink);
    dichotomy_class.def_readonly("kind", &Dichotomy::kind)
        .def_readonly("reset_word", &Dichotomy::reset_word)
        .def_readonly("sink", &Dichotomy::sink);

    py::class_<AutomatonEnumeration>(m, "AutomatonEnumeration")
        .def(py::init<int, int, bool>(), py::arg("n"), py::arg("k"),
             py::arg("override_guard") = false)
        .def_property_readonly("total", &AutomatonEnumeration::total)
        .def("at", &AutomatonEnumeration::at, py::arg("index"))
        .def("__len__", &AutomatonEnumeration::total)
        .def("__getitem__", &AutomatonEnumeration::at);

    m.def("parse_automaton", [](const std::string& text) { return parse_automaton(text); },
          py::arg("text"));
    m.def("serialize_automaton", &serialize_automaton, py::arg("aut"));
    m.def("to_dot", &to_dot, py::arg("aut"));
    m.def("render_word", &render_word, py::arg("aut"), py::arg("word"));

    m.def("image", &image, py::arg("aut"), py::arg("states"), py::arg("word"));
    m.def("rank_and_defect", &rank_and_defect, py::arg("aut"), py::arg("word"));
    m.def("word_rank", &word_rank, py::arg("aut"), py::arg("word"));
    m.def("permutation_letters", &permutation_letters, py::arg("aut"));
    m.def("reduct", &reduct, py::arg("aut"), py::arg("letters"));
    m.def("is_strongly_connected", &is_strongly_connected, py::arg("aut"));

    m.def("cluster_decomposition", &cluster_decomposition, py::arg("aut"), py::arg("letter"));
    m.def("is_unimodal", &is_unimodal, py::arg("aut"), py::arg("letter"));
    m.def("kernel_partition", &kernel_partition, py::arg("aut"), py::arg("letter"));
    m.def("kernel_type", &kernel_type, py::arg("aut"), py::arg("letter"));
    m.def("is_semiconstant", &is_semiconstant, py::arg("aut"), py::arg("letter"));

    m.def("is_congruence", &is_congruence, py::arg("aut"), py::arg("partition"));
    m.def("principal_congruence", &principal_congruence, py::arg("aut"), py::arg("q"),
          py::arg("r"));
    m.def("is_primitive", &is_primitive, py::arg("aut"));
    m.def("is_permutation_primitive", &is_permutation_primitive, py::arg("aut"));
    m.def("orbit_closure", &orbit_closure, py::arg("aut"), py::arg("q"));
    m.def("invariant_set_congruence", &invariant_set_congruence, py::arg("aut"), py::arg("s"));

    m.def("is_synchronizing", &is_synchronizing, py::arg("aut"));
    m.def("shortest_reset_word", &shortest_reset_word, py::arg("aut"),
          py::arg("cap") = kDefaultSubsetCap);
    m.def("greedy_reset_word", &greedy_reset_word, py::arg("aut"));
    m.def("stability_relation", &stability_relation, py::arg("aut"));
    m.def("minimal_word_rank", &minimal_word_rank, py::arg("aut"),
          py::arg("cap") = kDefaultSubsetCap);
    m.def("has_word_of_rank", &has_word_of_rank, py::arg("aut"), py::arg("rank"),
          py::arg("cap") = kDefaultSubsetCap);
    m.def("dichotomy", &dichotomy, py::arg("aut"));

    m.def("fixture", &fixture, py::arg("name"));
    m.def("fixture_names", [] { return fixture_names(); });
    m.def("cerny", &cerny, py::arg("n"));
    m.def("random_automaton", &random_automaton, py::arg("n"), py::arg("k"), py::arg("seed"));
    m.def("sample_seed", &sample_seed, py::arg("seed"), py::arg("index"));
    m.def("claim_names", [] {
        std::vector<std::string> names;
        for (Claim c : all_claims()) names.push_back(claim_name(c));
        return names;
    });
    m.def(
        "check_claims",
        [](const Automaton& aut, const std::vector<std::string>& claims, int cap) {
            ClaimReport report = check_claims(aut, claims_from_names(claims), cap);
            py::dict results;
            for (const auto& [claim, result] : report.results)
                results[py::str(claim_name(claim))] = claim_result_dict(result);
            py::dict out;
            out["results"] = results;
            out["any_violated"] = report.any_violated;
            out["certificate"] = report.certificate;
            return out;
        },
        py::arg("aut"), py::arg("claims") = std::vector<std::string>{},
        py::arg("cap") = kDefaultSubsetCap);
    m.def(
        "sweep",
        [](int n, int k, const std::vector<std::string>& claims, int workers,
           std::optional<std::uint64_t> sample, std::uint64_t seed, bool force) {
            SweepOptions options;
            options.n = n;
            options.k = k;
            options.claims = claims_from_names(claims);
            options.workers = workers;
            options.sample_count = sample;
            options.seed = seed;
            options.override_guard = force;
            return sweep_report_dict(sweep(options));
        },
        py::arg("n"), py::arg("k"), py::arg("claims") = std::vector<std::string>{},
        py::arg("workers") = 1, py::arg("sample") = std::nullopt, py::arg("seed") = 0,
        py::arg("force") = false);
}
