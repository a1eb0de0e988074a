#include "synckit/automaton.hpp"

#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "synckit/harness.hpp"

using namespace synckit;

TEST_CASE("automaton construction validates its table") {
    CHECK_THROWS_AS(Automaton(0, 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(Automaton(2, 0, {}), std::invalid_argument);
    CHECK_THROWS_AS(Automaton(2, 1, {0}), std::invalid_argument);
    CHECK_THROWS_AS(Automaton(2, 1, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Automaton(2, 1, {0, -1}), std::invalid_argument);
    Automaton aut(2, 1, {1, 0});
    CHECK(aut.letter_name(0) == "a0");
    CHECK(aut.step(0, 0) == 1);
}

TEST_CASE("dfa v1 parses and serializes bit-exactly") {
    Automaton swap2 = parse_automaton("dfa 2 1\n1 0\n");
    CHECK(swap2.states() == 2);
    CHECK(swap2.letters() == 1);
    CHECK(swap2.table() == std::vector<State>{1, 0});

    CHECK(serialize_automaton(fixture("fig2-left")) == "dfa 5 2\n1 0 3 3 0\n0 2 3 4 1\n");

    // Comments and blank lines are ignored; missing final newline is fine.
    Automaton commented = parse_automaton("# header comment\n\ndfa 3 2\n1 2 2\n# rows\n0 0 2");
    CHECK(commented == fixture("sink3"));
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const char* text) {
        try {
            parse_automaton(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("") == 1);
    CHECK(line_of("nonsense 2 1\n1 0\n") == 1);
    CHECK(line_of("dfa 2\n1 0\n") == 1);
    CHECK(line_of("dfa 0 1\n\n") == 1);
    CHECK(line_of("dfa 2 1\n1 x\n") == 2);
    CHECK(line_of("dfa 2 1\n1 0 1\n") == 2);
    CHECK(line_of("dfa 2 2\n1 0\n") == 3);   // missing row reported past the end
    CHECK(line_of("dfa 2 1\n1 0\n0 0\n") == 3);
    CHECK(line_of("# lead\ndfa 2 1\n2 0\n") == 3);

    try {
        parse_automaton("dfa 2 1\n2 0\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("row 1, column 1") != std::string::npos);
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }
}

TEST_CASE("image follows the word action") {
    Automaton cluster = fixture("fig1-cluster");
    StateSet all(15);
    for (int q = 0; q < 15; ++q) all[q] = q;

    // One application of the letter, recomputed edge by edge.
    std::set<State> expected;
    for (State q = 0; q < 15; ++q) expected.insert(cluster.step(q, 0));
    CHECK(image(cluster, all, {0}) == StateSet(expected.begin(), expected.end()));
    CHECK(image(cluster, all, {0}) == StateSet{0, 1, 2, 3, 5, 9, 10, 11});

    CHECK(image(cluster, all, {}) == all);

    Automaton left = fixture("fig2-left");
    CHECK(image(left, {0, 1, 2, 3, 4}, {0}) == StateSet{0, 1, 3});

    CHECK_THROWS_AS(image(left, {}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(image(left, {0}, {2}), std::invalid_argument);
    CHECK_THROWS_AS(image(left, {5}, {0}), std::invalid_argument);
}

TEST_CASE("rank and defect") {
    Automaton left = fixture("fig2-left");
    CHECK(rank_and_defect(left, {0}) == std::pair{3, 2});
    CHECK(rank_and_defect(left, {}) == std::pair{5, 0});
    CHECK(rank_and_defect(fixture("fig3"), {0}) == std::pair{3, 6});
}

TEST_CASE("permutation letters are exactly the bijective rows") {
    CHECK(permutation_letters(fixture("fig2-left")) == std::vector<Letter>{1});
    CHECK(permutation_letters(fixture("fig3")) == std::vector<Letter>{1, 2, 3});

    Automaton identities(3, 2, {0, 1, 2, 0, 1, 2});
    CHECK(permutation_letters(identities) == std::vector<Letter>{0, 1});

    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Automaton aut = random_automaton(6, 3, seed);
        std::vector<Letter> expected;
        for (Letter a = 0; a < aut.letters(); ++a)
            if (oracles::bijective_row_oracle(aut, a)) expected.push_back(a);
        CHECK(permutation_letters(aut) == expected);

        // Permutation letters are exactly the letters of defect 0.
        std::vector<Letter> perms = permutation_letters(aut);
        for (Letter a = 0; a < aut.letters(); ++a) {
            bool listed = std::find(perms.begin(), perms.end(), a) != perms.end();
            CHECK(listed == (rank_and_defect(aut, {a}).second == 0));
        }
    }
}

TEST_CASE("reduct restricts and renumbers letters") {
    Automaton left = fixture("fig2-left");
    Automaton b_only = reduct(left, {1});
    CHECK(b_only.letters() == 1);
    CHECK(b_only.table() == std::vector<State>{0, 2, 3, 4, 1});
    CHECK(b_only.letter_name(0) == "b");

    CHECK(reduct(left, {0, 1}) == left);
    CHECK_THROWS_AS(reduct(left, {}), std::invalid_argument);
    CHECK_THROWS_AS(reduct(left, {2}), std::invalid_argument);

    Automaton grid_perms = reduct(fixture("fig3"), {1, 2, 3});
    CHECK(grid_perms.letters() == 3);
    CHECK(permutation_letters(grid_perms) == std::vector<Letter>{0, 1, 2});
}

TEST_CASE("strong connectivity") {
    CHECK(is_strongly_connected(Automaton(1, 1, {0})));
    CHECK_FALSE(is_strongly_connected(fixture("sink3")));
    CHECK(is_strongly_connected(fixture("fig2-left")));

    AutomatonEnumeration enumeration(3, 2);
    for (std::uint64_t i = 0; i < enumeration.total(); ++i) {
        Automaton aut = enumeration.at(i);
        CHECK(is_strongly_connected(aut) == oracles::strongly_connected_oracle(aut));
    }
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Automaton aut = random_automaton(7, 2, seed);
        CHECK(is_strongly_connected(aut) == oracles::strongly_connected_oracle(aut));
    }
}

TEST_CASE("dot export is deterministic and total") {
    Automaton loop(1, 1, {0});
    std::string dot = to_dot(loop);
    CHECK(dot.find("0 -> 0 [label=\"a0\"];") != std::string::npos);

    // Every (state, letter) pair appears; omitted-edge states get explicit
    // self-loops, merged per target.
    std::string grid = to_dot(fixture("fig3"));
    CHECK(grid.find("0 -> 0 [label=\"a,c,e\"];") != std::string::npos);
    CHECK(grid.find("4 -> 4 [label=\"a,e\"];") != std::string::npos);
    CHECK(grid == to_dot(fixture("fig3")));

    std::string left = to_dot(fixture("fig2-left"));
    CHECK(left.find("0 -> 1 [label=\"a\"];") != std::string::npos);
    CHECK(left.find("0 -> 0 [label=\"b\"];") != std::string::npos);
    CHECK(left.find("digraph") == 0);
}

TEST_CASE("word rendering uses letter names") {
    Automaton left = fixture("fig2-left");
    CHECK(render_word(left, {}) == "ε");
    CHECK(render_word(left, {0, 1, 0}) == "a b a");
    CHECK_THROWS_AS(render_word(left, {7}), std::invalid_argument);
}

TEST_CASE("property: image composes over concatenation") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Automaton aut = random_automaton(6, 3, seed);
        Automaton scratch = random_automaton(6, 3, seed + 1000);
        Word u, v;
        for (int i = 0; i < 4; ++i) {
            u.push_back(static_cast<Letter>(scratch.step(i % 6, 0) % 3));
            v.push_back(static_cast<Letter>(scratch.step((i + 2) % 6, 1) % 3));
        }
        StateSet set{0, static_cast<State>(1 + seed % 5)};
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        Word uv = u;
        uv.insert(uv.end(), v.begin(), v.end());
        CHECK(image(aut, set, uv) == image(aut, image(aut, set, u), v));
    }
}

TEST_CASE("property: rank is monotone under concatenation") {
    AutomatonEnumeration enumeration(3, 2);
    for (std::uint64_t i = 0; i < enumeration.total(); ++i) {
        Automaton aut = enumeration.at(i);
        oracles::for_each_word(2, 4, [&](const Word& w) {
            auto [rank, defect] = rank_and_defect(aut, w);
            CHECK(rank + defect == 3);
            for (size_t cut = 0; cut <= w.size(); ++cut) {
                Word u(w.begin(), w.begin() + cut);
                Word v(w.begin() + cut, w.end());
                CHECK(rank <= std::min(word_rank(aut, u), word_rank(aut, v)));
            }
        });
    }
}

TEST_CASE("property: a defect-1 word contains a defect-1 letter") {
    for (int n = 1; n <= 4; ++n) {
        AutomatonEnumeration enumeration(n, 2);
        for (std::uint64_t i = 0; i < enumeration.total(); ++i) {
            Automaton aut = enumeration.at(i);
            std::vector<char> letter_defect1(2, 0);
            for (Letter a = 0; a < 2; ++a)
                letter_defect1[a] = rank_and_defect(aut, {a}).second == 1;
            oracles::for_each_word(2, 6, [&](const Word& w) {
                if (rank_and_defect(aut, w).second != 1) return;
                bool found = false;
                for (Letter a : w) found = found || letter_defect1[a];
                CHECK(found);
            });
        }
    }
}

TEST_CASE("partition basics") {
    Partition eq = Partition::equality(3);
    Partition univ = Partition::universal(3);
    CHECK(eq.is_equality());
    CHECK_FALSE(eq.is_universal());
    CHECK(univ.is_universal());
    CHECK(eq.block_count() == 3);
    CHECK(univ.block_count() == 1);
    CHECK(univ.to_string() == "{0 1 2}");

    Partition two = Partition::from_blocks(3, {{2, 1}, {0}});
    CHECK(two.to_string() == "{0}{1 2}");
    CHECK(two.same_block(1, 2));
    CHECK_FALSE(two.same_block(0, 1));
    CHECK(two.representative(2) == 1);

    CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::from_blocks(3, {{0, 1, 2}, {}}), std::invalid_argument);

    Partition meet = two.meet(Partition::from_blocks(3, {{0, 1}, {2}}));
    CHECK(meet.is_equality());
    CHECK(two.meet(univ) == two);
    CHECK(Partition::universal(1).is_equality());  // they coincide on one state
}
