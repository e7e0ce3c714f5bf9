#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "holedyn/lexworld.hpp"

namespace holedyn {

// Deterministic automaton over {0,1}; every state lies on an infinite path.
// next[s][c] == -1 means the symbol is rejected.
struct Dfa {
    std::vector<std::array<int, 2>> next;
    int start = 0;

    std::size_t size() const { return next.size(); }
    // state reached after reading w from `from`, or -1
    int run(std::string_view w, int from) const;
    int run(std::string_view w) const { return run(w, start); }
    bool accepts(std::string_view w) const { return run(w) >= 0; }
};

// KMP-style window automaton of a purely periodic LW pair; label (i,j) per state.
struct WindowAutomaton {
    Dfa dfa;
    std::vector<std::pair<int, int>> labels;
};

WindowAutomaton build_automaton(const LexPair& p);
// Tied-suffix automaton, valid for any eventually periodic pair (LW or not).
Dfa build_language_dfa(const LexPair& p);
// Window automaton when p is periodic and in LW, tied-suffix automaton otherwise.
Dfa presentation(const LexPair& p);

// Prune states that do not lie on an infinite forward path; renumbers states.
Dfa prune(const std::vector<std::array<int, 2>>& next, int start);

mpz_class count_paths(const Dfa& d, std::size_t n);
std::vector<Word> words_of_length(const Dfa& d, std::size_t n);

struct SpectralOptions {
    double tol = 1e-10;
    std::size_t max_iter = 100000;
};
double spectral_radius(const Dfa& d, const SpectralOptions& opt = {});
// strongly connected components, component id per state
std::vector<int> scc_ids(const Dfa& d, int& count);

std::vector<Word> forbidden_factors(const LexPair& p);

struct WordCount {
    mpz_class value;
    bool exact = true;
};
WordCount count_words(const LexPair& p, std::size_t n);

struct EntropyReport {
    std::optional<double> h;
    double lower = 0;
    double upper = 0;
    std::optional<double> dim_h;
    bool sft = false;
    std::size_t states = 0;
};
EntropyReport entropy(const LexPair& p, const SpectralOptions& opt = {});

bool is_sft(const LexPair& p);
bool point_in(const LexPair& p, const EpSeq& x);
bool same_language_upto(const LexPair& p1, const LexPair& p2, std::size_t n);

}  // namespace holedyn
