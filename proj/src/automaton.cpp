#include "synckit/automaton.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>

namespace synckit {

ParseError::ParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

Automaton::Automaton(int n, int k, std::vector<State> delta,
                     std::vector<std::string> letter_names)
    : n_(n), k_(k), delta_(std::move(delta)), letter_names_(std::move(letter_names)) {
    if (n_ < 1) throw std::invalid_argument("automaton: state count must be positive");
    if (k_ < 1) throw std::invalid_argument("automaton: letter count must be positive");
    if (delta_.size() != static_cast<size_t>(n_) * k_)
        throw std::invalid_argument("automaton: transition table has " +
                                    std::to_string(delta_.size()) + " entries, expected " +
                                    std::to_string(static_cast<size_t>(n_) * k_));
    for (State q : delta_) {
        if (q < 0 || q >= n_)
            throw std::invalid_argument("automaton: transition target " + std::to_string(q) +
                                        " out of range [0, " + std::to_string(n_) + ")");
    }
    if (letter_names_.empty()) {
        letter_names_.reserve(k_);
        for (int a = 0; a < k_; ++a) letter_names_.push_back("a" + std::to_string(a));
    } else if (letter_names_.size() != static_cast<size_t>(k_)) {
        throw std::invalid_argument("automaton: expected " + std::to_string(k_) +
                                    " letter names, got " + std::to_string(letter_names_.size()));
    }
}

State Automaton::apply(State q, const Word& w) const {
    for (Letter a : w) q = step(q, a);
    return q;
}

void Automaton::check_letter(Letter a) const {
    if (a < 0 || a >= k_)
        throw std::invalid_argument("letter index " + std::to_string(a) + " out of range [0, " +
                                    std::to_string(k_) + ")");
}

void Automaton::check_word(const Word& w) const {
    for (Letter a : w) {
        if (a < 0 || a >= k_)
            throw std::invalid_argument("malformed word: letter index " + std::to_string(a) +
                                        " out of range [0, " + std::to_string(k_) + ")");
    }
}

Partition Partition::equality(int n) {
    std::vector<State> rep(n);
    for (int q = 0; q < n; ++q) rep[q] = q;
    return Partition(std::move(rep));
}

Partition Partition::universal(int n) {
    return Partition(std::vector<State>(n, 0));
}

Partition Partition::from_representatives(std::vector<State> rep) {
    const int n = static_cast<int>(rep.size());
    std::vector<State> least(n, -1);
    for (int q = 0; q < n; ++q) {
        State r = rep[q];
        if (r < 0 || r >= n || rep[r] != r)
            throw std::invalid_argument("partition: inconsistent representative map");
        if (least[r] < 0) least[r] = q;  // ascending scan, so first hit is the minimum
    }
    for (int q = 0; q < n; ++q) rep[q] = least[rep[q]];
    return Partition(std::move(rep));
}

Partition Partition::from_blocks(int n, const std::vector<StateSet>& blocks) {
    std::vector<State> rep(n, -1);
    for (const StateSet& block : blocks) {
        if (block.empty()) throw std::invalid_argument("partition: empty block");
        State least = *std::min_element(block.begin(), block.end());
        for (State q : block) {
            if (q < 0 || q >= n)
                throw std::invalid_argument("partition: state " + std::to_string(q) +
                                            " out of range [0, " + std::to_string(n) + ")");
            if (rep[q] != -1)
                throw std::invalid_argument("partition: state " + std::to_string(q) +
                                            " appears in two blocks");
            rep[q] = least;
        }
    }
    for (int q = 0; q < n; ++q)
        if (rep[q] == -1)
            throw std::invalid_argument("partition: state " + std::to_string(q) +
                                        " not covered by any block");
    return Partition(std::move(rep));
}

int Partition::block_count() const {
    int count = 0;
    for (int q = 0; q < size(); ++q)
        if (rep_[q] == q) ++count;
    return count;
}

std::vector<StateSet> Partition::blocks() const {
    const int n = size();
    std::vector<int> slot(n, -1);
    std::vector<StateSet> out;
    for (int q = 0; q < n; ++q) {
        State r = rep_[q];
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(out.size());
            out.emplace_back();
        }
        out[slot[r]].push_back(q);
    }
    return out;
}

bool Partition::is_equality() const {
    for (int q = 0; q < size(); ++q)
        if (rep_[q] != q) return false;
    return true;
}

bool Partition::is_universal() const {
    for (int q = 0; q < size(); ++q)
        if (rep_[q] != 0) return false;
    return true;
}

Partition Partition::meet(const Partition& other) const {
    if (size() != other.size())
        throw std::invalid_argument("partition meet: size mismatch");
    const int n = size();
    std::unordered_map<std::uint64_t, State> first;
    first.reserve(n);
    std::vector<State> rep(n);
    for (int q = 0; q < n; ++q) {
        std::uint64_t key =
            static_cast<std::uint64_t>(rep_[q]) * static_cast<std::uint64_t>(n) + other.rep_[q];
        auto [it, inserted] = first.try_emplace(key, q);
        rep[q] = it->second;
    }
    return Partition(std::move(rep));
}

std::string Partition::to_string() const {
    std::string out;
    for (const StateSet& block : blocks()) {
        out += '{';
        for (size_t i = 0; i < block.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(block[i]);
        }
        out += '}';
    }
    return out;
}

StateSet image(const Automaton& aut, const StateSet& set, const Word& w) {
    if (set.empty()) throw std::invalid_argument("image: empty state set");
    aut.check_word(w);
    std::vector<char> mark(aut.states(), 0);
    for (State q : set) {
        if (q < 0 || q >= aut.states())
            throw std::invalid_argument("image: state " + std::to_string(q) +
                                        " out of range [0, " + std::to_string(aut.states()) + ")");
        mark[aut.apply(q, w)] = 1;
    }
    StateSet out;
    for (State q = 0; q < aut.states(); ++q)
        if (mark[q]) out.push_back(q);
    return out;
}

std::pair<int, int> rank_and_defect(const Automaton& aut, const Word& w) {
    aut.check_word(w);
    std::vector<char> mark(aut.states(), 0);
    int rank = 0;
    for (State q = 0; q < aut.states(); ++q) {
        State p = aut.apply(q, w);
        if (!mark[p]) {
            mark[p] = 1;
            ++rank;
        }
    }
    return {rank, aut.states() - rank};
}

int word_rank(const Automaton& aut, const Word& w) {
    return rank_and_defect(aut, w).first;
}

std::vector<Letter> permutation_letters(const Automaton& aut) {
    std::vector<Letter> out;
    std::vector<char> seen(aut.states());
    for (Letter a = 0; a < aut.letters(); ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        bool bijective = true;
        for (State target : aut.row(a)) {
            if (seen[target]) {
                bijective = false;
                break;
            }
            seen[target] = 1;
        }
        if (bijective) out.push_back(a);
    }
    return out;
}

Automaton reduct(const Automaton& aut, const std::vector<Letter>& letters) {
    if (letters.empty()) throw std::invalid_argument("reduct: empty letter set");
    std::vector<Letter> kept(letters);
    std::sort(kept.begin(), kept.end());
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
    for (Letter a : kept) aut.check_letter(a);

    std::vector<State> delta;
    delta.reserve(kept.size() * aut.states());
    std::vector<std::string> names;
    names.reserve(kept.size());
    for (Letter a : kept) {
        auto row = aut.row(a);
        delta.insert(delta.end(), row.begin(), row.end());
        names.push_back(aut.letter_name(a));
    }
    return Automaton(aut.states(), static_cast<int>(kept.size()), std::move(delta),
                     std::move(names));
}

bool is_strongly_connected(const Automaton& aut) {
    const int n = aut.states();
    // Everything reachable from state 0 and state 0 reachable from
    // everything implies mutual reachability of all states.
    auto covers_all = [&](bool reversed) {
        std::vector<std::vector<State>> radj;
        if (reversed) {
            radj.assign(n, {});
            for (Letter a = 0; a < aut.letters(); ++a)
                for (State q = 0; q < n; ++q) radj[aut.step(q, a)].push_back(q);
        }
        std::vector<char> seen(n, 0);
        std::vector<State> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            State q = stack.back();
            stack.pop_back();
            auto visit = [&](State p) {
                if (!seen[p]) {
                    seen[p] = 1;
                    ++count;
                    stack.push_back(p);
                }
            };
            if (reversed) {
                for (State p : radj[q]) visit(p);
            } else {
                for (Letter a = 0; a < aut.letters(); ++a) visit(aut.step(q, a));
            }
        }
        return count == n;
    };
    return covers_all(false) && covers_all(true);
}

namespace {

struct Line {
    int number = 0;
    std::string_view text;
};

// Significant lines only: blank and '#'-prefixed lines are skipped.
std::vector<Line> significant_lines(std::string_view text, int& line_count) {
    std::vector<Line> out;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            if (pos == text.size()) break;
            end = text.size();
        }
        ++number;
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        if (line[first] == '#') continue;
        out.push_back({number, line});
    }
    line_count = number;
    return out;
}

std::vector<std::string_view> tokens_of(std::string_view line) {
    std::vector<std::string_view> out;
    size_t pos = 0;
    while (pos < line.size()) {
        size_t start = line.find_first_not_of(" \t\r", pos);
        if (start == std::string_view::npos) break;
        size_t end = line.find_first_of(" \t\r", start);
        if (end == std::string_view::npos) end = line.size();
        out.push_back(line.substr(start, end - start));
        pos = end;
    }
    return out;
}

long long parse_int(std::string_view token, int line, const std::string& where) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, where + ": invalid integer '" + std::string(token) + "'");
    return value;
}

}  // namespace

Automaton parse_automaton(std::string_view text) {
    int line_count = 0;
    std::vector<Line> lines = significant_lines(text, line_count);
    if (lines.empty()) throw ParseError(1, "missing 'dfa <n> <k>' header");

    const Line& header = lines[0];
    std::vector<std::string_view> head = tokens_of(header.text);
    if (head.empty() || head[0] != "dfa")
        throw ParseError(header.number, "expected 'dfa <n> <k>' header");
    if (head.size() != 3)
        throw ParseError(header.number, "header: expected 'dfa <n> <k>', got " +
                                            std::to_string(head.size() - 1) + " field(s)");
    long long n = parse_int(head[1], header.number, "header");
    long long k = parse_int(head[2], header.number, "header");
    if (n < 1) throw ParseError(header.number, "header: state count must be positive");
    if (k < 1) throw ParseError(header.number, "header: letter count must be positive");
    if (n * k > 100'000'000)
        throw ParseError(header.number, "header: table of " + std::to_string(n * k) +
                                            " entries exceeds the input guard");

    std::vector<State> delta;
    delta.reserve(static_cast<size_t>(n) * k);
    for (long long row = 0; row < k; ++row) {
        size_t idx = static_cast<size_t>(row) + 1;
        if (idx >= lines.size())
            throw ParseError(line_count + 1, "expected " + std::to_string(k) + " rows, found " +
                                                 std::to_string(row));
        const Line& line = lines[idx];
        std::vector<std::string_view> entries = tokens_of(line.text);
        if (entries.size() != static_cast<size_t>(n))
            throw ParseError(line.number, "row " + std::to_string(row + 1) + ": expected " +
                                              std::to_string(n) + " entries, got " +
                                              std::to_string(entries.size()));
        for (size_t col = 0; col < entries.size(); ++col) {
            long long value = parse_int(entries[col], line.number,
                                        "row " + std::to_string(row + 1) + ", column " +
                                            std::to_string(col + 1));
            if (value < 0 || value >= n)
                throw ParseError(line.number, "row " + std::to_string(row + 1) + ", column " +
                                                  std::to_string(col + 1) + ": state " +
                                                  std::to_string(value) + " out of range [0, " +
                                                  std::to_string(n) + ")");
            delta.push_back(static_cast<State>(value));
        }
    }
    if (lines.size() > static_cast<size_t>(k) + 1)
        throw ParseError(lines[k + 1].number,
                         "unexpected content after " + std::to_string(k) + " rows");
    return Automaton(static_cast<int>(n), static_cast<int>(k), std::move(delta));
}

std::string serialize_automaton(const Automaton& aut) {
    std::string out = "dfa " + std::to_string(aut.states()) + " " + std::to_string(aut.letters()) +
                      "\n";
    for (Letter a = 0; a < aut.letters(); ++a) {
        auto row = aut.row(a);
        for (int q = 0; q < aut.states(); ++q) {
            if (q) out += ' ';
            out += std::to_string(row[q]);
        }
        out += '\n';
    }
    return out;
}

std::string to_dot(const Automaton& aut) {
    std::ostringstream out;
    out << "digraph dfa {\n";
    out << "  rankdir=LR;\n";
    out << "  node [shape=circle];\n";
    for (State q = 0; q < aut.states(); ++q) out << "  " << q << ";\n";
    std::vector<std::string> label(aut.states());
    for (State q = 0; q < aut.states(); ++q) {
        for (std::string& s : label) s.clear();
        for (Letter a = 0; a < aut.letters(); ++a) {
            std::string& s = label[aut.step(q, a)];
            if (!s.empty()) s += ',';
            s += aut.letter_name(a);
        }
        for (State p = 0; p < aut.states(); ++p)
            if (!label[p].empty())
                out << "  " << q << " -> " << p << " [label=\"" << label[p] << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::string render_word(const Automaton& aut, const Word& w) {
    if (w.empty()) return "ε";
    aut.check_word(w);
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += aut.letter_name(w[i]);
    }
    return out;
}

}  // namespace synckit
