#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "holedyn/renorm.hpp"

namespace holedyn {

struct SpecOptions {
    std::size_t nmax = 64;
    std::size_t window = 5;  // fallback when no recurrence is seen by nmax
    bool at_most = false;  // bridges of length <= k instead of exactly k
};

// Least bridge length for B_n x B_n; throws NotTransitive when none exists.
std::size_t m_n(const Dfa& d, std::size_t n, bool at_most = false);
std::size_t m_n(const LexPair& p, std::size_t n, bool at_most = false);

std::size_t spec_number(const LexPair& p, const SpecOptions& opt = {});

struct SpecEvidence {
    std::size_t stage = 0;
    std::size_t bridge_length = 0;  // length of p1 p2
    std::optional<std::size_t> spec_number;
};

struct SpecReport {
    enum Verdict { HasSpecification, NoSpecification, Unknown };
    std::map<std::size_t, std::size_t> m_values;
    std::optional<std::size_t> spec_number;
    bool exact = false;  // limit certified by a recurrence rather than the window
    Verdict verdict = Unknown;
    std::vector<SpecEvidence> evidence;
};
const char* to_string(SpecReport::Verdict v);

// m_n for n = 1.. until stabilised or nmax; never throws NonStabilized.
SpecReport spec_report(const LexPair& p, const SpecOptions& opt = {});

using WordPair = std::pair<Word, Word>;

LexPair pair_from_assoc(const WordPair& w);

// Stages after the seed; the seed itself is not included.
std::vector<LexPair> build_spec_family(const WordPair& seed, const std::vector<WordPair>& primes, std::size_t k);
std::vector<LexPair> build_nospec_family(const WordPair& seed, const std::vector<WordPair>& primes,
                                         const std::vector<std::pair<unsigned, unsigned>>& exponents,
                                         std::size_t k);

struct FamilyStage {
    LexPair pair;
    BridgePair bridge;
    SpecReport report;
};
FamilyStage analyze_stage(const LexPair& p, const SpecOptions& opt = {});

SpecReport::Verdict spec_verdict(const std::vector<FamilyStage>& stages);

}  // namespace holedyn
