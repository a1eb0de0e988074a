// synckit command-line tool: analysis of complete DFAs in the `dfa v1`
// format, plus exhaustive sweeps hunting for counterexamples to the
// synchronization laws the library implements.
//
// Exit codes: 0 success (or claim holds), 1 negative decision or
// counterexample found, 2 usage, input, or capacity error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "synckit/congruence.hpp"
#include "synckit/harness.hpp"
#include "synckit/letters.hpp"
#include "synckit/sync.hpp"

using json = nlohmann::ordered_json;
using namespace synckit;

namespace {

Automaton load_automaton(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return parse_automaton(buffer.str());
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_automaton(buffer.str());
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
    out << text;
}

Word parse_word_arg(const std::string& arg) {
    Word w;
    std::string token;
    std::istringstream in(arg);
    while (std::getline(in, token, ',')) {
        if (token.empty()) continue;
        try {
            size_t used = 0;
            int letter = std::stoi(token, &used);
            if (used != token.size()) throw std::invalid_argument("");
            w.push_back(letter);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed word: bad letter index '" + token + "'");
        }
    }
    return w;
}

json json_blocks(const Partition& p) {
    json out = json::array();
    for (const StateSet& block : p.blocks()) out.push_back(block);
    return out;
}

json json_word(const Automaton& aut, const Word& w) {
    return json{{"letters", w}, {"rendered", render_word(aut, w)}};
}

std::string join_ints(const std::vector<int>& values, const char* sep) {
    std::string out;
    for (size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

struct LetterSummary {
    int rank;
    int defect;
    bool permutation;
    std::vector<int> type;
    int clusters;
    int max_height;
    bool unimodal;
    bool semiconstant;
};

LetterSummary summarize_letter(const Automaton& aut, Letter a) {
    LetterSummary s;
    s.type = kernel_type(aut, a);
    s.rank = static_cast<int>(s.type.size());
    s.defect = aut.states() - s.rank;
    s.permutation = s.defect == 0;
    ClusterDecomposition d = cluster_decomposition(aut, a);
    s.clusters = d.cluster_count();
    s.max_height = d.max_height();
    s.unimodal = is_unimodal(aut, a);
    s.semiconstant = is_semiconstant(aut, a);
    return s;
}

int run_analyze(const std::string& path, bool as_json, bool exact, int cap,
                const std::optional<std::string>& apply_arg) {
    Automaton aut = load_automaton(path);
    const int n = aut.states();

    PrimitivityVerdict prim = is_primitive(aut);
    PermutationPrimitivity pp = is_permutation_primitive(aut);
    bool connected = is_strongly_connected(aut);
    bool sync = is_synchronizing(aut);
    Partition sigma = stability_relation(aut);

    std::optional<std::pair<int, Word>> min_rank;
    if (n <= cap) min_rank = minimal_word_rank(aut, cap);
    std::optional<SyncResult> exact_result;
    if (exact) exact_result = shortest_reset_word(aut, cap);
    std::optional<SyncResult> greedy;
    if (sync) greedy = greedy_reset_word(aut);

    std::optional<Word> applied;
    if (apply_arg) {
        applied = parse_word_arg(*apply_arg);
        aut.check_word(*applied);
    }

    if (as_json) {
        json record;
        record["format"] = "synckit-analysis-v1";
        record["states"] = n;
        record["letters"] = aut.letters();
        record["letter_names"] = aut.letter_names();
        record["per_letter"] = json::array();
        for (Letter a = 0; a < aut.letters(); ++a) {
            LetterSummary s = summarize_letter(aut, a);
            record["per_letter"].push_back(json{{"name", aut.letter_name(a)},
                                                {"rank", s.rank},
                                                {"defect", s.defect},
                                                {"permutation", s.permutation},
                                                {"kernel_type", s.type},
                                                {"clusters", s.clusters},
                                                {"max_height", s.max_height},
                                                {"unimodal", s.unimodal},
                                                {"semiconstant", s.semiconstant}});
        }
        record["strongly_connected"] = connected;
        record["primitive"] = prim.primitive;
        record["primitivity_witness"] = prim.witness ? json_blocks(*prim.witness) : json();
        record["permutation_primitive"] = pp == PermutationPrimitivity::primitive ? "true"
                                          : pp == PermutationPrimitivity::not_primitive
                                              ? "false"
                                              : "undefined";
        record["synchronizing"] = sync;
        record["stability"] = json_blocks(sigma);
        record["stability_universal"] = sigma.is_universal();
        record["stability_equality"] = sigma.is_equality();
        record["minimal_word_rank"] = min_rank ? json(min_rank->first) : json();
        record["minimal_rank_word"] = min_rank ? json_word(aut, min_rank->second) : json();
        record["reset_threshold"] =
            exact_result && exact_result->threshold ? json(*exact_result->threshold) : json();
        record["reset_word"] = exact_result && exact_result->reset_word
                                   ? json_word(aut, *exact_result->reset_word)
                                   : json();
        record["greedy_reset_word"] =
            greedy && greedy->reset_word ? json_word(aut, *greedy->reset_word) : json();
        if (applied) {
            StateSet all(n);
            for (int q = 0; q < n; ++q) all[q] = q;
            StateSet img = image(aut, all, *applied);
            record["applied"] = json{{"word", json_word(aut, *applied)},
                                     {"image", img},
                                     {"rank", static_cast<int>(img.size())},
                                     {"defect", n - static_cast<int>(img.size())}};
        } else {
            record["applied"] = json();
        }
        std::cout << record.dump(2) << "\n";
        return 0;
    }

    std::cout << "states: " << n << "\n";
    std::cout << "letters: " << aut.letters() << "\n";
    for (Letter a = 0; a < aut.letters(); ++a) {
        LetterSummary s = summarize_letter(aut, a);
        std::cout << "letter " << aut.letter_name(a) << ": rank " << s.rank << ", defect "
                  << s.defect << ", kernel type (" << join_ints(s.type, ",") << "), clusters "
                  << s.clusters << ", max height " << s.max_height;
        if (s.permutation) std::cout << ", permutation";
        if (s.unimodal) std::cout << ", unimodal";
        if (s.semiconstant) std::cout << ", semiconstant";
        std::cout << "\n";
    }
    std::cout << "strongly connected: " << (connected ? "true" : "false") << "\n";
    std::cout << "primitive: " << (prim.primitive ? "true" : "false") << "\n";
    if (prim.witness) std::cout << "primitivity witness: " << prim.witness->to_string() << "\n";
    std::cout << "permutation-primitive: " << to_string(pp) << "\n";
    std::cout << "synchronizing: " << (sync ? "true" : "false") << "\n";
    std::cout << "stability: " << sigma.to_string();
    if (sigma.is_universal()) std::cout << " (universal)";
    else if (sigma.is_equality()) std::cout << " (equality)";
    std::cout << "\n";
    if (min_rank) {
        std::cout << "minimal word rank: " << min_rank->first
                  << " (witness: " << render_word(aut, min_rank->second) << ")\n";
    } else {
        std::cout << "minimal word rank: skipped (" << n << " states exceed cap " << cap << ")\n";
    }
    if (exact_result) {
        if (exact_result->threshold) {
            std::cout << "reset threshold: " << *exact_result->threshold << "\n";
            std::cout << "reset word: " << render_word(aut, *exact_result->reset_word) << "\n";
        } else {
            std::cout << "reset threshold: none (not synchronizing)\n";
        }
    }
    if (greedy && greedy->reset_word) {
        std::cout << "greedy reset word: " << render_word(aut, *greedy->reset_word)
                  << " (length " << greedy->reset_word->size() << ")\n";
    }
    if (applied) {
        StateSet all(n);
        for (int q = 0; q < n; ++q) all[q] = q;
        StateSet img = image(aut, all, *applied);
        std::cout << "applied word: " << render_word(aut, *applied) << "\n";
        std::cout << "image: {";
        for (size_t i = 0; i < img.size(); ++i) std::cout << (i ? " " : "") << img[i];
        std::cout << "}\n";
        std::cout << "rank: " << img.size() << ", defect: " << n - img.size() << "\n";
    }
    return 0;
}

int run_letters(const std::string& path, bool as_json) {
    Automaton aut = load_automaton(path);
    if (as_json) {
        json record;
        record["format"] = "synckit-letters-v1";
        record["letters"] = json::array();
        for (Letter a = 0; a < aut.letters(); ++a) {
            LetterSummary s = summarize_letter(aut, a);
            record["letters"].push_back(json{{"name", aut.letter_name(a)},
                                             {"rank", s.rank},
                                             {"defect", s.defect},
                                             {"permutation", s.permutation},
                                             {"kernel_type", s.type},
                                             {"clusters", s.clusters},
                                             {"max_height", s.max_height},
                                             {"unimodal", s.unimodal},
                                             {"semiconstant", s.semiconstant}});
        }
        std::cout << record.dump(2) << "\n";
        return 0;
    }
    for (Letter a = 0; a < aut.letters(); ++a) {
        LetterSummary s = summarize_letter(aut, a);
        std::cout << aut.letter_name(a) << ": rank " << s.rank << ", defect " << s.defect
                  << ", kernel type (" << join_ints(s.type, ",") << "), clusters " << s.clusters
                  << ", max height " << s.max_height;
        if (s.permutation) std::cout << ", permutation";
        if (s.unimodal) std::cout << ", unimodal";
        if (s.semiconstant) std::cout << ", semiconstant";
        std::cout << "\n";
    }
    return 0;
}

int run_sync(const std::string& path, bool exact, bool greedy, int cap, bool as_json) {
    Automaton aut = load_automaton(path);
    bool sync = is_synchronizing(aut);
    std::optional<SyncResult> result;
    if (exact) result = shortest_reset_word(aut, cap);
    else if (greedy) result = greedy_reset_word(aut);

    if (as_json) {
        json record;
        record["format"] = "synckit-sync-v1";
        record["synchronizing"] = sync;
        record["threshold"] =
            result && result->threshold ? json(*result->threshold) : json();
        record["reset_word"] =
            result && result->reset_word ? json_word(aut, *result->reset_word) : json();
        record["method"] = exact ? "exact" : greedy ? "greedy" : "decision";
        std::cout << record.dump(2) << "\n";
    } else {
        std::cout << "synchronizing: " << (sync ? "true" : "false") << "\n";
        if (result && result->threshold) std::cout << "threshold: " << *result->threshold << "\n";
        if (result && result->reset_word) {
            std::cout << (exact ? "reset word: " : "greedy reset word: ")
                      << render_word(aut, *result->reset_word) << " (length "
                      << result->reset_word->size() << ")\n";
        }
    }
    return sync ? 0 : 1;
}

int run_stability(const std::string& path, bool as_json) {
    Automaton aut = load_automaton(path);
    Partition sigma = stability_relation(aut);
    if (as_json) {
        json record;
        record["format"] = "synckit-stability-v1";
        record["stability"] = json_blocks(sigma);
        record["universal"] = sigma.is_universal();
        record["equality"] = sigma.is_equality();
        std::cout << record.dump(2) << "\n";
    } else {
        std::cout << "stability: " << sigma.to_string() << "\n";
        std::cout << "universal: " << (sigma.is_universal() ? "true" : "false") << "\n";
        std::cout << "equality: " << (sigma.is_equality() ? "true" : "false") << "\n";
    }
    return 0;
}

int run_primitive(const std::string& path, bool permutation, bool as_json) {
    Automaton aut = load_automaton(path);
    if (permutation) {
        PermutationPrimitivity pp = is_permutation_primitive(aut);
        if (as_json) {
            json record;
            record["format"] = "synckit-primitive-v1";
            record["permutation_primitive"] = pp == PermutationPrimitivity::primitive ? "true"
                                              : pp == PermutationPrimitivity::not_primitive
                                                  ? "false"
                                                  : "undefined";
            std::cout << record.dump(2) << "\n";
        } else {
            std::cout << "permutation-primitive: " << to_string(pp) << "\n";
        }
        return pp == PermutationPrimitivity::not_primitive ? 1 : 0;
    }
    PrimitivityVerdict verdict = is_primitive(aut);
    if (as_json) {
        json record;
        record["format"] = "synckit-primitive-v1";
        record["primitive"] = verdict.primitive;
        record["witness"] = verdict.witness ? json_blocks(*verdict.witness) : json();
        std::cout << record.dump(2) << "\n";
    } else {
        std::cout << "primitive: " << (verdict.primitive ? "true" : "false") << "\n";
        if (verdict.witness) std::cout << "witness: " << verdict.witness->to_string() << "\n";
    }
    return verdict.primitive ? 0 : 1;
}

int run_sweep(const SweepOptions& options, bool as_json, bool timing) {
    SweepReport report = sweep(options);
    if (as_json) {
        json record;
        record["format"] = "synckit-sweep-v1";
        record["n"] = report.n;
        record["k"] = report.k;
        record["mode"] = report.sampled ? "sample" : "exhaustive";
        if (report.sampled) record["seed"] = report.seed;
        record["total"] = report.total;
        record["primitive"] = report.primitive_count;
        record["synchronizing"] = report.synchronizing_count;
        record["permutation_primitive"] = report.permutation_primitive_count;
        record["violations"] = json::object();
        for (size_t i = 0; i < report.claims.size(); ++i)
            record["violations"][claim_name(report.claims[i])] = report.violations[i];
        record["counterexamples"] = json::array();
        for (size_t i = 0; i < report.claims.size(); ++i)
            if (report.first_counterexample[i])
                record["counterexamples"].push_back(
                    json{{"claim", claim_name(report.claims[i])},
                         {"index", report.first_counterexample[i]->index},
                         {"dfa", report.first_counterexample[i]->certificate}});
        if (timing) record["wall_seconds"] = report.wall_seconds;
        std::cout << record.dump(2) << "\n";
    } else {
        std::cout << report.to_text();
        if (timing) std::cerr << "wall: " << report.wall_seconds << "s\n";
    }
    return report.any_violated() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analysis toolkit for synchronization and primitivity of complete DFAs"};
    app.require_subcommand(1);

    std::string path;
    std::string out_path;
    bool as_json = false;
    bool exact = false;
    bool greedy = false;
    bool timing = false;
    bool permutation = false;
    int cap = kDefaultSubsetCap;
    std::optional<std::string> apply_arg;

    auto* analyze = app.add_subcommand("analyze", "full analysis record of one automaton");
    analyze->add_option("file", path, "dfa v1 file, or - for stdin")->required();
    analyze->add_flag("--json", as_json, "machine-readable output");
    analyze->add_flag("--exact", exact, "include the exact reset threshold");
    analyze->add_option("--cap", cap, "state cap for subset searches (default 20)");
    analyze->add_option("--apply", apply_arg,
                        "apply a word (comma-separated letter indices) and report its image");

    auto* letters = app.add_subcommand("letters", "per-letter structure of one automaton");
    letters->add_option("file", path, "dfa v1 file, or - for stdin")->required();
    letters->add_flag("--json", as_json, "machine-readable output");

    auto* sync = app.add_subcommand("sync", "synchronizability and reset words");
    sync->add_option("file", path, "dfa v1 file, or - for stdin")->required();
    auto* exact_flag = sync->add_flag("--exact", exact, "shortest reset word (subset search)");
    sync->add_flag("--greedy", greedy, "greedy reset word (polynomial)")->excludes(exact_flag);
    sync->add_option("--cap", cap, "state cap for subset searches (default 20)");
    sync->add_flag("--json", as_json, "machine-readable output");

    auto* stability = app.add_subcommand("stability", "stability relation of one automaton");
    stability->add_option("file", path, "dfa v1 file, or - for stdin")->required();
    stability->add_flag("--json", as_json, "machine-readable output");

    auto* primitive = app.add_subcommand("primitive", "primitivity verdict and witness");
    primitive->add_option("file", path, "dfa v1 file, or - for stdin")->required();
    primitive->add_flag("--permutation", permutation,
                        "decide primitivity of the permutation-letter reduct instead");
    primitive->add_flag("--json", as_json, "machine-readable output");

    auto* sweep_cmd = app.add_subcommand("sweep", "check claims over many automata");
    int sweep_n = 0;
    int sweep_k = 0;
    int workers = 1;
    std::string claim_list;
    std::optional<std::uint64_t> sample;
    std::uint64_t seed = 0;
    bool force = false;
    sweep_cmd->add_option("--states", sweep_n, "state count")->required();
    sweep_cmd->add_option("--letters", sweep_k, "letter count")->required();
    sweep_cmd->add_option("--claim", claim_list, "comma-separated claim names (default: all)");
    sweep_cmd->add_option("--workers", workers, "parallel workers (default 1)");
    sweep_cmd->add_option("--sample", sample, "check this many seeded random automata instead");
    sweep_cmd->add_option("--seed", seed, "sample seed (default 0)");
    sweep_cmd->add_flag("--force", force, "override the enumeration guard");
    sweep_cmd->add_flag("--json", as_json, "machine-readable output");
    sweep_cmd->add_flag("--timing", timing, "report wall time");

    auto* fixture_cmd = app.add_subcommand("fixture", "emit a named example automaton");
    std::string fixture_name;
    fixture_cmd->add_option("name", fixture_name, "one of: " + [] {
                               std::string names;
                               for (const std::string& n : fixture_names()) {
                                   if (!names.empty()) names += ", ";
                                   names += n;
                               }
                               return names;
                           }())
        ->required();
    fixture_cmd->add_option("--out", out_path, "write to a file instead of stdout");

    auto* cerny_cmd = app.add_subcommand("cerny", "emit the n-state Cerny automaton");
    int cerny_n = 0;
    cerny_cmd->add_option("n", cerny_n, "state count (>= 2)")->required();
    cerny_cmd->add_option("--out", out_path, "write to a file instead of stdout");

    auto* dot = app.add_subcommand("dot", "DOT rendering of one automaton");
    dot->add_option("file", path, "dfa v1 file, or - for stdin")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze) return run_analyze(path, as_json, exact, cap, apply_arg);
        if (*letters) return run_letters(path, as_json);
        if (*sync) return run_sync(path, exact, greedy, cap, as_json);
        if (*stability) return run_stability(path, as_json);
        if (*primitive) return run_primitive(path, permutation, as_json);
        if (*sweep_cmd) {
            SweepOptions options;
            options.n = sweep_n;
            options.k = sweep_k;
            options.workers = workers;
            options.sample_count = sample;
            options.seed = seed;
            options.override_guard = force;
            if (!claim_list.empty()) {
                std::istringstream in(claim_list);
                std::string token;
                while (std::getline(in, token, ',')) {
                    if (token.empty()) continue;
                    std::optional<Claim> claim = claim_from_name(token);
                    if (!claim) {
                        std::string known;
                        for (Claim c : all_claims()) {
                            if (!known.empty()) known += ", ";
                            known += claim_name(c);
                        }
                        throw std::invalid_argument("unknown claim '" + token +
                                                    "'; known claims: " + known);
                    }
                    options.claims.push_back(*claim);
                }
            }
            return run_sweep(options, as_json, timing);
        }
        if (*fixture_cmd) {
            write_output(serialize_automaton(fixture(fixture_name)), out_path);
            return 0;
        }
        if (*cerny_cmd) {
            write_output(serialize_automaton(cerny(cerny_n)), out_path);
            return 0;
        }
        if (*dot) {
            std::cout << to_dot(load_automaton(path));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
