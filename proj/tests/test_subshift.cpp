#include <doctest.h>

#include <cmath>

#include "holedyn/parallel.hpp"
#include "oracles.hpp"

using namespace holedyn;

namespace {
LexPair P(const char* a, const char* b) { return LexPair::parse(a, b); }
EpSeq S(const char* lit) { return EpSeq::parse(lit); }
}  // namespace

TEST_CASE("window automaton examples") {
    Dfa g = build_automaton(P("|110", "|001")).dfa;
    CHECK_FALSE(g.accepts("111"));
    CHECK_FALSE(g.accepts("000"));
    CHECK(g.accepts("110110"));
    Dfa c = build_automaton(P("|10", "|01")).dfa;
    CHECK(count_paths(c, 3) == 2);
    Dfa z = build_automaton(P("|1100", "|0011")).dfa;
    CHECK(z.accepts("0110"));
    CHECK_FALSE(z.accepts("1101"));
    CHECK_THROWS_AS(build_automaton(P("110|10", "|001")), Error);
    CHECK_THROWS_AS(build_automaton(P("|10", "|0011")), Error);
}

TEST_CASE("automata agree with window checking") {
    for (const LexPair& p : periodic_lw_pairs(4)) {
        Dfa w = build_automaton(p).dfa, g = build_language_dfa(p);
        for (std::size_t n = 0; n <= 8; ++n)
            for (const Word& x : oracle::all_words(n)) {
                bool ok = oracle::window_admissible(p, x);
                CHECK(w.accepts(x) == ok);
                CHECK(g.accepts(x) == ok);
            }
    }
}

TEST_CASE("general automaton on eventually periodic pairs") {
    for (const LexPair& p : {P("110|10", "|001"), P("1|10", "0|01"), P("10|100", "00|010"), P("|1", "|0")}) {
        REQUIRE(in_lw(p));
        Dfa g = build_language_dfa(p);
        for (std::size_t n = 1; n <= 9; ++n)
            CHECK(words_of_length(g, n) == oracle::extendable_words(p, n, 12));
    }
}

TEST_CASE("forbidden factors") {
    CHECK(forbidden_factors(P("|110", "|001")) == std::vector<Word>{"000", "111"});
    auto f = forbidden_factors(P("|1100", "|0011"));
    std::sort(f.begin(), f.end());
    CHECK(f == std::vector<Word>{"000", "0010", "1101", "111"});
    CHECK(forbidden_factors(P("|10", "|01")) == std::vector<Word>{"00", "11"});
    for (const LexPair& p : periodic_lw_pairs(4)) {
        auto ff = forbidden_factors(p);
        Dfa d = build_automaton(p).dfa;
        for (std::size_t n = 0; n <= 10; ++n)
            for (const Word& x : oracle::all_words(n)) {
                bool avoids = true;
                for (const Word& bad : ff) avoids = avoids && x.find(bad) == Word::npos;
                CHECK(avoids == d.accepts(x));
            }
    }
}

TEST_CASE("word counts") {
    CHECK(count_words(P("|110", "|001"), 3).value == 6);
    CHECK(count_words(P("|1100", "|0011"), 5).value == 10);
    for (const LexPair& p : periodic_lw_pairs(4)) {
        CHECK(count_words(p, 1).value == 2);
        for (std::size_t m = 1; m <= 6; ++m)
            for (std::size_t n = 1; n <= 6; ++n)
                CHECK(count_words(p, m + n).value <= count_words(p, m).value * count_words(p, n).value);
    }
    WordCount w = count_words(P("110|10", "|001"), 8);
    CHECK(w.value == oracle::extendable_words(P("110|10", "|001"), 8, 12).size());
}

TEST_CASE("entropy") {
    EntropyReport g = entropy(P("|110", "|001"));
    REQUIRE(g.h);
    CHECK(std::abs(*g.h - std::log2((1 + std::sqrt(5.0)) / 2)) < 1e-9);
    CHECK(*g.dim_h == *g.h);
    CHECK(g.sft);
    CHECK(*entropy(P("|1100", "|0011")).h == 0);
    CHECK(std::abs(*entropy(P("|1", "|0")).h - 1) < 1e-12);
    // slope of log2 |B_n| against the spectral value
    double slope = (std::log2(count_words(P("|110", "|001"), 48).value.get_d()) -
                    std::log2(count_words(P("|110", "|001"), 24).value.get_d())) / 24;
    CHECK(std::abs(slope - *g.h) < 1e-3);
    EntropyReport ne = entropy(P("110|10", "|001"));
    CHECK_FALSE(ne.h);
    CHECK(ne.lower <= ne.upper + 1e-12);
    CHECK_FALSE(ne.sft);
}

TEST_CASE("entropy is mirror symmetric") {
    for (const LexPair& p : periodic_lw_pairs(5)) {
        LexPair m = mirror_swap(p);
        CHECK(*entropy(p).h == doctest::Approx(*entropy(m).h).epsilon(1e-12));
    }
}

TEST_CASE("run-length bounds from alpha") {
    for (unsigned n = 3; n <= 5; ++n) {
        // alpha in ((1^{n-2}0)^inf, (1^{n-1}0)^inf]
        EpSeq a = EpSeq::periodic(std::string(n - 1, '1') + "0");
        LexPair p{a, EpSeq::periodic("0" + std::string(n - 1, '1'))};
        if (!in_lw(p)) p.beta = EpSeq::periodic("01");
        REQUIRE(in_lw(p));
        Dfa d = build_automaton(p).dfa;
        for (const Word& x : oracle::all_words(n + 2))
            if (x.find(std::string(n, '1')) != Word::npos) CHECK_FALSE(d.accepts(x));
        LexPair m = mirror_swap(p);
        Dfa e = build_automaton(m).dfa;
        for (const Word& x : oracle::all_words(n + 2))
            if (x.find(std::string(n, '0')) != Word::npos) CHECK_FALSE(e.accepts(x));
    }
}

TEST_CASE("point membership") {
    LexPair g = P("|110", "|001");
    CHECK(point_in(g, S("|10")));
    CHECK_FALSE(point_in(g, S("|1")));
    for (const LexPair& p : periodic_lw_pairs(4)) {
        CHECK(point_in(p, p.alpha));
        CHECK(point_in(p, p.beta));
        for (std::size_t n = 1; n <= 5; ++n)
            for (const Word& w : oracle::all_words(n)) CHECK(point_in(p, EpSeq::periodic(w)) == oracle::point_in(p, EpSeq::periodic(w)));
    }
}

TEST_CASE("sft flag and language comparison") {
    CHECK(is_sft(P("|110", "|001")));
    CHECK_FALSE(is_sft(P("110|10", "|001")));
    LexPair p = P("|1101", "|0010");
    CHECK(same_language_upto(p, p, 12));
    CHECK(same_language_upto(p, normalize(p), 12));
    CHECK_FALSE(same_language_upto(P("|110", "|001"), P("|10", "|01"), 2));
}

TEST_CASE("spectral radius corner cases") {
    Dfa cyc;
    cyc.next = {{1, -1}, {-1, 0}};
    CHECK(spectral_radius(cyc) == 1.0);
    Dfa full;
    full.next = {{0, 0}};
    CHECK(spectral_radius(full) == doctest::Approx(2.0).epsilon(1e-10));
    int k = 0;
    auto ids = scc_ids(cyc, k);
    CHECK(k == 1);
    CHECK(ids[0] == ids[1]);
}
