#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "slicedepth/word.hpp"

using namespace slicedepth;

namespace {

std::vector<Int> ints(std::initializer_list<long long> xs) {
    return std::vector<Int>(xs.begin(), xs.end());
}

std::vector<OEWord> all_words_up_to(std::size_t max_len) {
    std::vector<OEWord> out;
    for (std::size_t len = 0; len <= max_len; ++len) {
        for (unsigned long mask = 0; mask < (1ul << len); ++mask) {
            OEWord w;
            for (std::size_t i = 0; i < len; ++i) w += (mask >> i) & 1 ? 'E' : 'O';
            out.push_back(std::move(w));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("build_word maps mod-4 residues to O/E by position parity") {
    CHECK(build_word(ints({4, 4})) == "");
    CHECK(build_word(ints({4, 2, 4, 2})) == "EE");
    CHECK(build_word(ints({2, 4})) == "O");
    CHECK(build_word(ints({2, 2})) == "OE");
    // negative coefficients reduce into {0, 2} as well: -2 -> 2, -4 -> 0
    CHECK(build_word(ints({-2, 2})) == "OE");
    CHECK(build_word(ints({4, -2})) == "E");
    CHECK(build_word(ints({-4, -4})) == "");
}

TEST_CASE("build_word rejects links and odd coefficients") {
    CHECK_THROWS_AS(build_word(ints({2})), OddLengthError);
    CHECK_THROWS_AS(build_word(ints({2, 4, 2})), OddLengthError);
    CHECK_THROWS_AS(build_word(ints({2, 3})), NotEvenError);
    CHECK_THROWS_AS(build_word(ints({2, 0})), Error);
}

TEST_CASE("build_word output length and letter provenance") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long long> dist(-10, 10);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t m = 2 * (1 + trial % 5);
        std::vector<Int> coeffs;
        long long odd_pos_twos = 0, even_pos_twos = 0;
        for (std::size_t i = 0; i < m; ++i) {
            long long v = 2 * dist(rng);
            if (v == 0) v = 2;
            coeffs.push_back(Int(v));
            if (((v % 4) + 4) % 4 == 2) ++(i % 2 == 0 ? odd_pos_twos : even_pos_twos);
        }
        OEWord w = build_word(coeffs);
        CHECK(w.size() <= m);
        // O letters come only from odd 1-based positions, E only from even
        CHECK(std::count(w.begin(), w.end(), 'O') == odd_pos_twos);
        CHECK(std::count(w.begin(), w.end(), 'E') == even_pos_twos);
    }
}

TEST_CASE("reduces decides the three-rule reduction") {
    CHECK(reduces("").accepted);
    CHECK(reduces("E").accepted);
    CHECK(reduces("O").accepted);
    CHECK_FALSE(reduces("OE").accepted);
    CHECK(reduces("EEO").accepted);
    CHECK_FALSE(reduces("EOE").accepted);
    CHECK(reduces("OOE").accepted);
    CHECK(reduces("EO").accepted);
    CHECK_FALSE(reduces("OEOEOE").accepted);
    CHECK_THROWS_AS(reduces("OX"), Error);
}

TEST_CASE("witnesses replay from the input word to an accepting word") {
    for (const OEWord& w : {OEWord(""), OEWord("E"), OEWord("EEO"), OEWord("OOE"),
                            OEWord("EEEE"), OEWord("OEEO")}) {
        ReductionResult r = reduces(w);
        REQUIRE(r.accepted);
        REQUIRE(r.witness.has_value());
        CHECK(replay_witness(w, *r.witness));
        CHECK(r.witness->steps.size() <= w.size());
    }
    // a forged witness must not replay
    ReductionWitness forged{{{Rule::PairEE, 0, "O"}}};
    CHECK_FALSE(replay_witness("OE", forged));
}

TEST_CASE("normal_forms returns every reachable irreducible word") {
    CHECK(normal_forms("EEO") == std::set<OEWord>{"O"});
    CHECK(normal_forms("OE") == std::set<OEWord>{"OE"});
    CHECK(normal_forms("") == std::set<OEWord>{""});
    CHECK(normal_forms("O") == std::set<OEWord>{"O"});
    // both orders explored: EOE -> OE (stuck), and no other rule applies
    CHECK(normal_forms("EOE") == std::set<OEWord>{"OE"});
}

TEST_CASE("oracle agreement on all words of length <= 10") {
    for (const OEWord& w : all_words_up_to(10)) {
        ReductionResult r = reduces(w);
        std::set<OEWord> nf = normal_forms(w);
        bool oracle = nf.count("") > 0 || nf.count("O") > 0;
        CHECK(r.accepted == oracle);
        if (r.accepted) {
            REQUIRE(r.witness.has_value());
            CHECK(replay_witness(w, *r.witness));
        }
    }
}

TEST_CASE("one-directional preservation: a successor's acceptance lifts back") {
    for (const OEWord& w : all_words_up_to(9)) {
        bool w_accepted = reduces(w).accepted;
        for (const ReductionStep& s : successors(w)) {
            if (reduces(s.word_after).accepted) CHECK(w_accepted);
        }
    }
}

TEST_CASE("acceptance is invariant across calls") {
    CHECK(reduces("OEE").accepted == reduces("OEE").accepted);
    CHECK(normal_forms("OEE") == normal_forms("OEE"));
}
