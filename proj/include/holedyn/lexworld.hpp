#pragma once

#include <string>
#include <utility>
#include <vector>

#include "holedyn/circle.hpp"
#include "holedyn/words.hpp"

namespace holedyn {

struct LexPair {
    EpSeq alpha;  // starts with 1
    EpSeq beta;   // starts with 0

    bool operator==(const LexPair&) const = default;
    auto operator<=>(const LexPair&) const = default;

    static LexPair parse(std::string_view alpha_lit, std::string_view beta_lit);
    std::string str() const { return "(" + alpha.str() + ", " + beta.str() + ")"; }
    bool periodic() const { return alpha.purely_periodic() && beta.purely_periodic(); }
};

// (mirror beta, mirror alpha)
LexPair mirror_swap(const LexPair& p);

bool is_parry(const EpSeq& x);
bool is_coparry(const EpSeq& x);
EpSeq varsigma(const EpSeq& x);
EpSeq varsigma_prime(const EpSeq& x);

struct PairClass {
    enum Kind { InLW, TwoSidedExtremal, RightExtremal, LeftExtremal, NotParryPair };
    Kind kind = InLW;
    std::size_t M = 0;  // min m>=1 with sigma^m(beta) > alpha
    std::size_t N = 0;  // min n>=1 with sigma^n(alpha) < beta
    bool operator==(const PairClass&) const = default;
};
const char* to_string(PairClass::Kind k);
std::string to_string(const PairClass& c);

PairClass classify(const LexPair& p);
bool in_lw(const LexPair& p);

LexPair iota(const LexPair& p, const PairClass& c);
LexPair xi(const LexPair& p, const PairClass& c);
LexPair xi_prime(const LexPair& p, const PairClass& c);
LexPair normalize(const LexPair& p);

std::vector<std::pair<Q, Q>> staircase_sample(const std::vector<Q>& xs);

std::vector<LexPair> periodic_approximations(const LexPair& p, std::size_t k);

}  // namespace holedyn
