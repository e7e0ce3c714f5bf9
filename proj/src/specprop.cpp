#include "holedyn/specprop.hpp"

#include <set>
#include <string>
#include <tuple>

namespace holedyn {

const char* to_string(SpecReport::Verdict v) {
    switch (v) {
        case SpecReport::HasSpecification: return "HasSpecification";
        case SpecReport::NoSpecification: return "NoSpecification";
        case SpecReport::Unknown: return "Unknown";
    }
    return "?";
}

namespace {

using Set = std::vector<char>;

Set step(const Dfa& d, const Set& s) {
    Set out(d.size(), 0);
    for (std::size_t t = 0; t < d.size(); ++t)
        if (s[t])
            for (int x : d.next[t])
                if (x >= 0) out[static_cast<std::size_t>(x)] = 1;
    return out;
}

bool meets(const Set& a, const Set& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return true;
    return false;
}

// predecessor sets: {s : s.c in T} for every T and symbol c
std::set<Set> pull_back(const Dfa& d, const std::set<Set>& level) {
    std::set<Set> nxt;
    for (const Set& t : level)
        for (int c = 0; c < 2; ++c) {
            Set r(d.size(), 0);
            bool any = false;
            for (std::size_t s = 0; s < d.size(); ++s) {
                int x = d.next[s][static_cast<std::size_t>(c)];
                if (x >= 0 && t[static_cast<std::size_t>(x)]) r[s] = any = true;
            }
            if (any) nxt.insert(std::move(r));
        }
    return nxt;
}

// B_n seen through the automaton: end states of words, and reader sets of words
struct Level {
    Set ends;
    std::set<Set> readers;  // includes sets missing the start state
    bool operator<(const Level& o) const { return std::tie(ends, readers) < std::tie(o.ends, o.readers); }
};

Level first_level(const Dfa& d) {
    Level l{Set(d.size(), 0), {Set(d.size(), 1)}};
    l.ends[static_cast<std::size_t>(d.start)] = 1;
    return l;
}

Level next_level(const Dfa& d, const Level& l) { return Level{step(d, l.ends), pull_back(d, l.readers)}; }

std::size_t bridge_length(const Dfa& d, const Level& l, std::size_t n, bool at_most) {
    std::vector<const Set*> targets;
    for (const Set& t : l.readers)
        if (t[static_cast<std::size_t>(d.start)]) targets.push_back(&t);
    std::vector<Set> reach;
    for (std::size_t s = 0; s < d.size(); ++s)
        if (l.ends[s]) {
            Set r(d.size(), 0);
            r[s] = 1;
            reach.push_back(std::move(r));
        }
    std::set<std::vector<Set>> seen;
    for (std::size_t k = 0;; ++k) {
        bool ok = true;
        for (const Set& r : reach) {
            for (const Set* t : targets)
                if (!meets(r, *t)) {
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) return k;
        if (!seen.insert(reach).second)
            throw Error(Errc::NotTransitive, "no uniform bridge length for n=" + std::to_string(n));
        for (Set& r : reach) {
            Set nx = step(d, r);
            if (at_most)
                for (std::size_t i = 0; i < r.size(); ++i) r[i] = r[i] || nx[i];
            else
                r = std::move(nx);
        }
    }
}

}  // namespace

std::size_t m_n(const Dfa& d, std::size_t n, bool at_most) {
    if (!automaton_transitive(d)) throw Error(Errc::NotTransitive, "presentation is not transitive");
    Level l = first_level(d);
    for (std::size_t i = 0; i < n; ++i) l = next_level(d, l);
    return bridge_length(d, l, n, at_most);
}

std::size_t m_n(const LexPair& p, std::size_t n, bool at_most) { return m_n(presentation(p), n, at_most); }

SpecReport spec_report(const LexPair& p, const SpecOptions& opt) {
    SpecReport rep;
    Dfa d = presentation(p);
    if (!automaton_transitive(d)) {
        rep.verdict = SpecReport::NoSpecification;
        return rep;
    }
    // (ends, readers) determines m_n and everything after it, so a repeat pins down the limit
    std::map<Level, std::size_t> seen;
    Level l = next_level(d, first_level(d));
    try {
        for (std::size_t n = 1; n <= opt.nmax; ++n, l = next_level(d, l)) {
            rep.m_values[n] = bridge_length(d, l, n, opt.at_most);
            auto [it, fresh] = seen.emplace(l, n);
            if (fresh) continue;
            std::size_t m = rep.m_values[n];
            bool constant = true;
            for (std::size_t j = it->second; j < n; ++j) constant = constant && rep.m_values[j] == m;
            if (constant) {
                rep.spec_number = m;
                rep.exact = true;
            }
            break;
        }
    } catch (const Error& e) {
        if (e.code() != Errc::NotTransitive) throw;
        rep.verdict = SpecReport::NoSpecification;
        return rep;
    }
    if (!rep.spec_number && rep.m_values.size() >= opt.window && rep.m_values.size() == opt.nmax) {
        auto it = rep.m_values.rbegin();
        std::size_t m = it->second, run = 0;
        for (; it != rep.m_values.rend() && it->second == m; ++it) ++run;
        if (run >= opt.window) rep.spec_number = m;
    }
    rep.verdict = rep.spec_number ? SpecReport::HasSpecification : SpecReport::Unknown;
    return rep;
}

std::size_t spec_number(const LexPair& p, const SpecOptions& opt) {
    SpecReport r = spec_report(p, opt);
    if (r.verdict == SpecReport::NoSpecification) throw Error(Errc::NotTransitive, p.str());
    if (!r.spec_number) throw Error(Errc::NonStabilized, "nmax=" + std::to_string(opt.nmax));
    return *r.spec_number;
}

LexPair pair_from_assoc(const WordPair& w) {
    return LexPair{shift(EpSeq::periodic(w.first), 1), shift(EpSeq::periodic(w.second), 1)};
}

namespace {

bool inf_less(const Word& x, const Word& y) { return lex_less(EpSeq::periodic(x), EpSeq::periodic(y)); }

void check_word(const Word& w, char first) {
    if (w.empty() || !is_binary(w) || w[0] != first)
        throw Error(Errc::PreconditionViolation, "bad block word '" + w + "'");
}

void check_chain(const WordPair& cur, const std::vector<WordPair>& primes, std::size_t i) {
    const auto& [om, nu] = cur;
    const auto& [omp, nup] = primes[i];
    check_word(omp, '0');
    check_word(nup, '1');
    const std::string at = " at stage " + std::to_string(i + 1);
    if (!inf_less(omp, om)) throw Error(Errc::PreconditionViolation, "omega'^inf < omega^inf fails" + at);
    if (!inf_less(nu, nup)) throw Error(Errc::PreconditionViolation, "nu^inf < nu'^inf fails" + at);
    if (i > 0) {
        if (!inf_less(omp, primes[i - 1].first))
            throw Error(Errc::PreconditionViolation, "omega' chain not decreasing" + at);
        if (!inf_less(primes[i - 1].second, nup))
            throw Error(Errc::PreconditionViolation, "nu' chain not increasing" + at);
    }
}

template <class Next>
std::vector<LexPair> build_family(const WordPair& seed, const std::vector<WordPair>& primes, std::size_t k, Next next) {
    check_word(seed.first, '0');
    check_word(seed.second, '1');
    if (primes.size() < k) throw Error(Errc::PreconditionViolation, "need one prime per stage");
    std::vector<LexPair> out;
    WordPair cur = seed;
    for (std::size_t i = 0; i < k; ++i) {
        check_chain(cur, primes, i);
        cur = next(cur, i);
        LexPair p = pair_from_assoc(cur);
        RenormVerdict v = detect_renorm(p);
        if (!in_lw(p) || v.kind != RenormVerdict::Essential)
            throw Error(Errc::NotEssential, "stage " + std::to_string(i + 1) + " " + p.str());
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

std::vector<LexPair> build_spec_family(const WordPair& seed, const std::vector<WordPair>& primes, std::size_t k) {
    return build_family(seed, primes, k, [&](const WordPair& c, std::size_t i) {
        return WordPair{c.first + primes[i].second, c.second + primes[i].first};
    });
}

std::vector<LexPair> build_nospec_family(const WordPair& seed, const std::vector<WordPair>& primes,
                                         const std::vector<std::pair<unsigned, unsigned>>& exponents,
                                         std::size_t k) {
    if (exponents.size() < k) throw Error(Errc::PreconditionViolation, "need one exponent pair per stage");
    for (std::size_t i = 0; i < k; ++i)
        if (exponents[i].first < 2 || exponents[i].second < 2)
            throw Error(Errc::PreconditionViolation, "exponents must be >= 2");
    return build_family(seed, primes, k, [&](const WordPair& c, std::size_t i) {
        return WordPair{c.first + power(c.second, exponents[i].first) + primes[i].second,
                        c.second + power(c.first, exponents[i].second) + primes[i].first};
    });
}

FamilyStage analyze_stage(const LexPair& p, const SpecOptions& opt) {
    FamilyStage st{p, {}, spec_report(p, opt)};
    RenormVerdict v = detect_renorm(p);
    if (v.kind == RenormVerdict::Essential && !v.omega.empty()) st.bridge = bridge_words(p, v);
    return st;
}

SpecReport::Verdict spec_verdict(const std::vector<FamilyStage>& stages) {
    if (stages.empty()) return SpecReport::Unknown;
    if (stages.size() == 1) return stages[0].report.spec_number ? SpecReport::HasSpecification : SpecReport::Unknown;
    auto bridge = [](const FamilyStage& s) { return s.bridge.p1 + "|" + s.bridge.p2; };
    const FamilyStage& last = stages.back();
    const FamilyStage& prev = stages[stages.size() - 2];
    if (last.bridge.verified && prev.bridge.verified && bridge(last) == bridge(prev)) return SpecReport::HasSpecification;
    for (std::size_t i = 0; i + 1 < stages.size(); ++i) {
        const FamilyStage& a = stages[i];
        const FamilyStage& b = stages[i + 1];
        std::size_t la = a.bridge.p1.size() + a.bridge.p2.size(), lb = b.bridge.p1.size() + b.bridge.p2.size();
        if (!a.bridge.verified || !b.bridge.verified || la >= lb) return SpecReport::Unknown;
        if (!a.report.spec_number || !b.report.spec_number) return SpecReport::Unknown;
        if (*a.report.spec_number >= *b.report.spec_number || la >= *b.report.spec_number) return SpecReport::Unknown;
    }
    return SpecReport::NoSpecification;
}

}  // namespace holedyn
