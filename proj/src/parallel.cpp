#include "holedyn/parallel.hpp"

#include <algorithm>
#include <exception>
#include <optional>

#include <omp.h>

namespace holedyn {

int worker_threads() { return omp_get_max_threads(); }

void for_each_index(std::size_t n, const std::function<void(std::size_t)>& f, Exec exec) {
    std::vector<std::exception_ptr> errors(n);
    const auto total = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic) if (exec == Exec::Parallel)
    for (long long i = 0; i < total; ++i) {
        try {
            f(static_cast<std::size_t>(i));
        } catch (...) {
            errors[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

std::vector<unsigned> bad_periods(const Hole& h, unsigned nmax, Exec exec) {
    if (exec == Exec::Serial) return bad_periods(h, nmax);
    std::vector<unsigned> out;
    for (unsigned n = 3; n <= nmax; ++n) {
        const std::vector<Word> necklaces = primitive_necklaces(n);
        std::vector<char> hit(necklaces.size(), 0);
        for_each_index(necklaces.size(), [&](std::size_t i) {
            for (std::size_t k = 0; k < n && !hit[i]; ++k) {
                Q x = periodic_point(rotate(necklaces[i], k));
                hit[i] = h.a < x && x < h.b;
            }
        }, exec);
        if (std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; })) out.push_back(n);
    }
    return out;
}

RenormVerdict detect_renorm(const LexPair& p, std::size_t cap, Exec exec) {
    if (exec == Exec::Serial) return detect_renorm(p, cap);
    if (cap == 0) cap = default_renorm_cap(p);
    const EpSeq a0 = p.alpha.prepend("0"), b1 = p.beta.prepend("1");
    const auto cands = renorm_candidates(cap);
    // ordered batches, so an early success skips the longer candidates as the serial loop does
    const std::size_t batch = 4 * static_cast<std::size_t>(worker_threads());
    for (std::size_t lo = 0; lo < cands.size(); lo += batch) {
        const std::size_t n = std::min(batch, cands.size() - lo);
        std::vector<std::optional<RenormVerdict>> found(n);
        for_each_index(n, [&](std::size_t i) {
            found[i] = try_renorm_candidate(p, a0.prefix(cands[lo + i].first), b1.prefix(cands[lo + i].second));
        }, exec);
        for (auto& f : found)
            if (f) {
                f->cap = cap;
                return *f;
            }
    }
    // cap 2 admits no finite candidate; only the infinite and essential checks remain
    RenormVerdict v = detect_renorm(p, 2);
    v.cap = cap;
    return v;
}

std::vector<TransitivityVerdict> transitivity_batch(const std::vector<LexPair>& pairs, std::size_t cap, Exec exec) {
    std::vector<TransitivityVerdict> out(pairs.size());
    for_each_index(pairs.size(), [&](std::size_t i) { out[i] = transitivity(pairs[i], cap); }, exec);
    return out;
}

std::vector<EntropyReport> entropy_batch(const std::vector<LexPair>& pairs, Exec exec) {
    std::vector<EntropyReport> out(pairs.size());
    for_each_index(pairs.size(), [&](std::size_t i) { out[i] = entropy(pairs[i]); }, exec);
    return out;
}

std::vector<FamilyStage> analyze_stages(const std::vector<LexPair>& pairs, const SpecOptions& opt, Exec exec) {
    std::vector<std::optional<FamilyStage>> tmp(pairs.size());
    for_each_index(pairs.size(), [&](std::size_t i) { tmp[i] = analyze_stage(pairs[i], opt); }, exec);
    std::vector<FamilyStage> out;
    out.reserve(tmp.size());
    for (auto& t : tmp) out.push_back(std::move(*t));
    return out;
}

std::vector<LexPair> periodic_lw_pairs(std::size_t qmax) {
    std::vector<EpSeq> alphas, betas;
    for (unsigned q = 1; q <= qmax; ++q)
        for (const Word& w : primitive_necklaces(q)) {
            auto e = cyclic_extremes(w);
            if (e.max[0] == '1') alphas.push_back(EpSeq::periodic(e.max));
            if (e.min[0] == '0') betas.push_back(EpSeq::periodic(e.min));
        }
    std::vector<LexPair> out;
    for (const EpSeq& a : alphas)
        for (const EpSeq& b : betas) {
            LexPair p{a, b};
            if (in_lw(p)) out.push_back(p);
        }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace holedyn
