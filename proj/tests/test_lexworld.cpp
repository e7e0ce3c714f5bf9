#include <doctest.h>

#include <random>

#include "holedyn/parallel.hpp"
#include "oracles.hpp"

using namespace holedyn;

namespace {
EpSeq S(const char* lit) { return EpSeq::parse(lit); }
LexPair P(const char* a, const char* b) { return LexPair::parse(a, b); }
Q R(const char* t) { return parse_rational(t); }

// Parry / co-Parry periodic and eventually periodic sequences with short descriptions
std::vector<EpSeq> corpus(char first, bool parry) {
    std::vector<EpSeq> out;
    for (std::size_t lp = 0; lp <= 2; ++lp)
        for (std::size_t lq = 1; lq <= 6 - lp; ++lq)
            for (const Word& w : oracle::all_words(lp + lq)) {
                if (w[0] != first) continue;
                EpSeq s(w.substr(0, lp), w.substr(lp));
                if (!parry || (first == '1' ? is_parry(s) : is_coparry(s))) out.push_back(s);
            }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}
}  // namespace

TEST_CASE("Parry tests") {
    CHECK(is_parry(S("|110")));
    CHECK_FALSE(is_parry(S("|1101")));
    CHECK(is_parry(S("|1")));
    CHECK(is_coparry(S("|001")));
    CHECK_FALSE(is_coparry(S("|0010")));
    CHECK(is_coparry(S("|0")));
}

TEST_CASE("varsigma") {
    CHECK(varsigma(S("|110")) == S("|110"));
    CHECK(varsigma(S("|1101")) == S("|110"));
    CHECK(varsigma(S("|1")) == S("|1"));
    CHECK(varsigma_prime(S("|0010")) == S("|001"));
    CHECK(varsigma_prime(S("|001")) == S("|001"));
    CHECK(varsigma_prime(S("|0")) == S("|0"));
    for (const EpSeq& x : corpus('1', false)) {
        EpSeq v = varsigma(x);
        CHECK(lex_leq(v, x));
        CHECK(is_parry(v));
    }
}

TEST_CASE("varsigma plateau") {
    std::mt19937 rng(5);
    for (const char* lit : {"|110", "|1100", "|11010", "|1110"}) {
        EpSeq a = S(lit);
        REQUIRE(is_parry(a));
        const Word per = a.per();
        EpSeq top(per, "1");  // a_1..a_n 1^inf
        for (int i = 0; i < 100; ++i) {
            // random y with a <= y <= top: keep the first n symbols, random tail not exceeding a
            Word tail;
            for (int k = 0; k < 6; ++k) tail.push_back(std::uniform_int_distribution<int>(0, 1)(rng) ? '1' : '0');
            EpSeq y(per + tail, "1" + tail.substr(0, 2) + "0");
            if (lex_less(y, a) || lex_less(top, y)) continue;
            CHECK(varsigma(y) == a);
        }
        // just below a and above top the value changes
        EpSeq below = varsigma(EpSeq(per.substr(0, per.size() - 1) + "0", "0"));
        CHECK(below != a);
        Word up = per;
        up.back() = '1';
        if (lex_less(top, EpSeq(up, "10"))) CHECK(varsigma(EpSeq(up, "10")) != a);
    }
}

TEST_CASE("classification") {
    CHECK(classify(P("|1100", "|0011")).kind == PairClass::InLW);
    PairClass r = classify(P("|10", "|0011"));
    CHECK(r.kind == PairClass::RightExtremal);
    CHECK(r.M == 2);
    PairClass l = classify(P("|1100", "|01"));
    CHECK(l.kind == PairClass::LeftExtremal);
    CHECK(l.N == 2);
    CHECK(classify(P("|1101", "|001")).kind == PairClass::NotParryPair);
}

TEST_CASE("extremal maps") {
    CHECK(xi(P("|10", "|0011"), classify(P("|10", "|0011"))) == P("|10", "|01"));
    CHECK(xi_prime(P("|1100", "|01"), classify(P("|1100", "|01"))) == P("|10", "|01"));
    LexPair q = P("|110", "|010111");
    PairClass c = classify(q);
    CHECK(c.M == 3);
    CHECK(xi(q, c) == P("|110", "|011"));
    CHECK_THROWS_AS(xi(P("|1100", "|0011"), PairClass{PairClass::RightExtremal, 1, 0}), Error);
}

TEST_CASE("two-sided extremal pair from a rational hole") {
    // search holes with denominators <= 60 for a two-sided pair with M, N >= 2
    std::optional<LexPair> found;
    for (long d = 3; d <= 60 && !found; ++d)
        for (long i = d / 4 + 1; 4 * i < 2 * d && !found; ++i)
            for (long j = d / 2 + 1; 4 * j < 3 * d && !found; ++j) {
                Hole h{Q(i, d), Q(j, d)};
                h.a.canonicalize();
                h.b.canonicalize();
                if (validate_hole(h) != HoleClass::CentredCandidate) continue;
                LexPair p = hole_to_pair(h);
                PairClass c = classify(p);
                if (c.kind == PairClass::TwoSidedExtremal && c.M >= 2 && c.N >= 2) found = p;
            }
    REQUIRE(found);
    PairClass c = classify(*found);
    LexPair i = iota(*found, c);
    CHECK(classify(i).kind == PairClass::InLW);
    CHECK(i.periodic());
    CHECK(normalize(*found) == i);
    CHECK(same_language_upto(*found, i, 12));
}

TEST_CASE("iota formula") {
    // alpha=(11010)^inf has N=3 against beta=(00101)^inf, beta has M=4 against alpha
    LexPair p = P("|11010", "|00101");
    PairClass c = classify(p);
    if (c.kind == PairClass::TwoSidedExtremal) {
        LexPair i = iota(p, c);
        if (c.N == 3) CHECK(i.alpha == S("|110"));
        if (c.M == 4) CHECK(i.beta == S("|0011"));
    }
    CHECK(iota(p, PairClass{PairClass::TwoSidedExtremal, 4, 3}) == P("|110", "|0011"));
    CHECK_THROWS_AS(iota(p, PairClass{PairClass::TwoSidedExtremal, 1, 3}), Error);
}

TEST_CASE("normalize") {
    CHECK(normalize(P("|1100", "|0011")) == P("|1100", "|0011"));
    CHECK(normalize(P("|1101", "|0010")) == P("|110", "|001"));
    CHECK(normalize(P("|10", "|0011")) == P("|10", "|01"));
}

TEST_CASE("normalize: idempotent, lands in LW, preserves the language") {
    auto as = corpus('1', true), bs = corpus('0', true);
    std::size_t extremal = 0;
    for (const EpSeq& a : as)
        for (const EpSeq& b : bs) {
            LexPair p{a, b};
            PairClass c = classify(p);
            if (c.kind == PairClass::InLW) continue;
            LexPair n;
            try {
                n = normalize(p);
            } catch (const Error& e) {
                // every degenerate pair in this corpus has an empty subshift
                CHECK(e.code() == Errc::DegenerateExtremal);
                CHECK_THROWS_AS(build_language_dfa(p), Error);
                continue;
            }
            CHECK(in_lw(n));
            CHECK(normalize(n) == n);
            if (a.purely_periodic() && b.purely_periodic() && extremal < 80) {
                ++extremal;
                CHECK(same_language_upto(p, n, 12));
            }
        }
    CHECK(extremal >= 50);
}

TEST_CASE("mirror swap mirrors the class") {
    auto as = corpus('1', true), bs = corpus('0', true);
    for (const EpSeq& a : as)
        for (const EpSeq& b : bs) {
            LexPair p{a, b};
            PairClass c = classify(p), m = classify(mirror_swap(p));
            switch (c.kind) {
                case PairClass::RightExtremal: CHECK(m.kind == PairClass::LeftExtremal); CHECK(m.N == c.M); break;
                case PairClass::LeftExtremal: CHECK(m.kind == PairClass::RightExtremal); CHECK(m.M == c.N); break;
                default: CHECK(m.kind == c.kind);
            }
        }
}

TEST_CASE("staircase") {
    auto s = staircase_sample({R("2/3"), R("13/15"), R("4/5")});
    CHECK(s[0].second == R("2/3"));
    CHECK(s[1].second == R("6/7"));
    CHECK(s[2].second == R("4/5"));
    std::vector<Q> xs;
    for (long i = 0; i <= 240; ++i) {
        Q x = Q(1, 2) + Q(i, 480);
        x.canonicalize();
        xs.push_back(x);
    }
    auto t = staircase_sample(xs);
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i - 1].second <= t[i].second);
    CHECK_THROWS_AS(staircase_sample({R("1/3")}), Error);
}

TEST_CASE("periodic approximations") {
    LexPair p = P("110|10", "|001");
    REQUIRE(in_lw(p));
    auto ap = periodic_approximations(p, 2);
    REQUIRE(ap.size() == 2);
    CHECK(ap[0].alpha == S("|1100"));
    CHECK(ap[1].alpha == S("|110100"));
    LexPair q = P("|110", "|001");
    auto cq = periodic_approximations(q, 3);
    CHECK(cq.size() == 3);
    for (const auto& x : cq) CHECK(x == q);
    LexPair r = P("|110", "0|01");
    REQUIRE(in_lw(r));
    auto ar = periodic_approximations(r, 1);
    REQUIRE(ar.size() == 1);
    CHECK(ar[0].beta.purely_periodic());
    CHECK(lex_leq(r.beta, ar[0].beta));
    for (const LexPair& base : {p, r, P("1|10", "0|01")}) {
        if (!in_lw(base)) continue;
        auto xs = periodic_approximations(base, 5);
        for (std::size_t i = 0; i < xs.size(); ++i) {
            CHECK(in_lw(xs[i]));
            CHECK(xs[i].periodic());
            CHECK(lex_leq(xs[i].alpha, base.alpha));
            CHECK(lex_leq(base.beta, xs[i].beta));
            if (i > 0) {
                CHECK(lex_leq(xs[i - 1].alpha, xs[i].alpha));
                CHECK(lex_leq(xs[i].beta, xs[i - 1].beta));
            }
        }
    }
    CHECK_THROWS_AS(periodic_approximations(P("|10", "|0011"), 1), Error);
}
