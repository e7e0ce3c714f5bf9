#pragma once

#include <functional>
#include <vector>

#include "holedyn/specprop.hpp"

namespace holedyn {

enum class Exec { Serial, Parallel };

// Runs f(0..n-1); with Exec::Parallel the indices are spread over OpenMP threads.
// If any call throws, the exception of the smallest failing index is rethrown.
void for_each_index(std::size_t n, const std::function<void(std::size_t)>& f, Exec exec);

int worker_threads();

std::vector<unsigned> bad_periods(const Hole& h, unsigned nmax, Exec exec);

// Same verdict as detect_renorm; candidates are tested concurrently, smallest success wins.
RenormVerdict detect_renorm(const LexPair& p, std::size_t cap, Exec exec);

std::vector<TransitivityVerdict> transitivity_batch(const std::vector<LexPair>& pairs, std::size_t cap, Exec exec);
std::vector<EntropyReport> entropy_batch(const std::vector<LexPair>& pairs, Exec exec);
std::vector<FamilyStage> analyze_stages(const std::vector<LexPair>& pairs, const SpecOptions& opt, Exec exec);

// Every purely periodic pair in LW with both least periods <= qmax, sorted.
std::vector<LexPair> periodic_lw_pairs(std::size_t qmax);

}  // namespace holedyn
