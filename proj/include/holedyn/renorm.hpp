#pragma once

#include <optional>
#include <string>
#include <utility>

#include "holedyn/subshift.hpp"

namespace holedyn {

// Block decomposition of a sequence over {omega, nu}: '0' marks omega, '1' marks nu.
// The block stream is prefix (loop)^inf.
struct BlockParse {
    std::string prefix;
    std::string loop;
    EpSeq stream() const { return EpSeq(prefix, loop); }
};
std::optional<BlockParse> parse_blocks(const EpSeq& s, const Word& omega, const Word& nu);

// Conditions on a candidate pair of renormalisation words (without the parse).
bool admissible_renorm_words(const Word& omega, const Word& nu);

struct RenormVerdict {
    enum Kind { Essential, Renormalizable, InfiniteRenorm, Inconclusive };
    enum class Tail { None, OmegaNuInf, NuOmegaInf };
    enum class Side { Alpha, Beta };

    Kind kind = Inconclusive;
    Word omega, nu;  // renormalisation words, or the associated pair when Essential
    bool trivial = false;
    Tail tail = Tail::None;
    BlockParse alpha_blocks, beta_blocks;
    Word finite_word;
    Side side = Side::Alpha;
    std::size_t cap = 0;
};
const char* to_string(RenormVerdict::Kind k);
const char* to_string(RenormVerdict::Tail t);

std::size_t default_renorm_cap(const LexPair& p);
// Checks a single candidate (omega, nu); fills a Renormalizable verdict on success.
std::optional<RenormVerdict> try_renorm_candidate(const LexPair& p, const Word& omega, const Word& nu);
// Candidate lengths (l_omega, l_nu) in search order: by total, then l_omega.
std::vector<std::pair<std::size_t, std::size_t>> renorm_candidates(std::size_t cap);
std::optional<RenormVerdict> infinite_renorm(const LexPair& p);
// cap == 0 selects the default cap
RenormVerdict detect_renorm(const LexPair& p, std::size_t cap = 0);

LexPair renorm_operator(const LexPair& p, const Word& omega, const Word& nu);
bool two_word_membership(const Word& omega, const Word& nu, const EpSeq& x);

std::pair<Word, Word> sturmian_words(const Q& r);

struct FareyInfo {
    bool neighbours = false;
    Q mediant;
};
FareyInfo farey(const Q& r1, const Q& r2);

double renewal_entropy(unsigned l1, unsigned l2);

struct BridgePair {
    Word p1, p2;
    bool verified = false;  // p1p2, p2p1 admissible and (p1p2)^inf in the subshift
};
BridgePair bridge_words(const LexPair& p, const RenormVerdict& v);

struct TransitivityVerdict {
    enum Kind { Transitive, NotTransitive, Unknown };
    enum class Reason { NonRenormalizable, BalancedTail, Essential, Empirical, Renormalizable, InfiniteRenorm, ZeroBlock, None };
    Kind kind = Unknown;
    Reason reason = Reason::None;
    std::optional<std::pair<Word, Word>> witness;
    bool witness_verified = false;
    std::size_t cap = 0;
    RenormVerdict renorm;
};
const char* to_string(TransitivityVerdict::Kind k);
const char* to_string(TransitivityVerdict::Reason r);

TransitivityVerdict transitivity(const LexPair& p, std::size_t cap = 0);
bool brute_force_transitive(const LexPair& p, std::size_t n, std::size_t kmax);

// Exact: every sink component of the presentation reads the whole language.
bool automaton_transitive(const Dfa& d);
// True when u w v is admissible for no word w at all.
bool bridgeless(const Dfa& d, const Word& u, const Word& v);
// First pair (u,v) in B_n x B_n, n = 1..nmax, with no bridge of any length.
std::optional<std::pair<Word, Word>> find_bridgeless_pair(const Dfa& d, std::size_t nmax);

}  // namespace holedyn
