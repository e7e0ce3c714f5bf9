#include "holedyn/lexworld.hpp"

namespace holedyn {

LexPair LexPair::parse(std::string_view a, std::string_view b) {
    LexPair p{EpSeq::parse(a), EpSeq::parse(b)};
    if (p.alpha.at(0) != '1' || p.beta.at(0) != '0')
        throw Error(Errc::InvalidLiteral, "alpha must start with 1 and beta with 0");
    return p;
}

LexPair mirror_swap(const LexPair& p) { return LexPair{mirror(p.beta), mirror(p.alpha)}; }

bool is_parry(const EpSeq& x) {
    if (x.at(0) != '1') return false;
    for (std::size_t n = 1; n <= x.orbit_bound(); ++n)
        if (compare(shift(x, n), x) == Ordering::Greater) return false;
    return true;
}

bool is_coparry(const EpSeq& x) { return x.at(0) == '0' && is_parry(mirror(x)); }

EpSeq varsigma(const EpSeq& x) {
    if (x.at(0) != '1') throw Error(Errc::InvalidLiteral, "varsigma needs a sequence starting with 1");
    for (std::size_t n = 1; n <= x.orbit_bound(); ++n) {
        if (compare(shift(x, n), x) == Ordering::Greater) return EpSeq::periodic(x.prefix(n - 1) + "0");
    }
    return x;
}

EpSeq varsigma_prime(const EpSeq& x) {
    if (x.at(0) != '0') throw Error(Errc::InvalidLiteral, "varsigma' needs a sequence starting with 0");
    return mirror(varsigma(mirror(x)));
}

const char* to_string(PairClass::Kind k) {
    switch (k) {
        case PairClass::InLW: return "InLW";
        case PairClass::TwoSidedExtremal: return "TwoSidedExtremal";
        case PairClass::RightExtremal: return "RightExtremal";
        case PairClass::LeftExtremal: return "LeftExtremal";
        case PairClass::NotParryPair: return "NotParryPair";
    }
    return "?";
}

std::string to_string(const PairClass& c) {
    std::string s = to_string(c.kind);
    switch (c.kind) {
        case PairClass::TwoSidedExtremal:
            return s + "{M=" + std::to_string(c.M) + ",N=" + std::to_string(c.N) + "}";
        case PairClass::RightExtremal: return s + "{M=" + std::to_string(c.M) + "}";
        case PairClass::LeftExtremal: return s + "{N=" + std::to_string(c.N) + "}";
        default: return s;
    }
}

PairClass classify(const LexPair& p) {
    PairClass c;
    if (!is_parry(p.alpha) || !is_coparry(p.beta)) {
        c.kind = PairClass::NotParryPair;
        return c;
    }
    for (std::size_t m = 1; m <= p.beta.orbit_bound() && !c.M; ++m)
        if (compare(shift(p.beta, m), p.alpha) == Ordering::Greater) c.M = m;
    for (std::size_t n = 1; n <= p.alpha.orbit_bound() && !c.N; ++n)
        if (compare(shift(p.alpha, n), p.beta) == Ordering::Less) c.N = n;
    if (c.M && c.N) c.kind = PairClass::TwoSidedExtremal;
    else if (c.M) c.kind = PairClass::RightExtremal;
    else if (c.N) c.kind = PairClass::LeftExtremal;
    else c.kind = PairClass::InLW;
    return c;
}

bool in_lw(const LexPair& p) { return classify(p).kind == PairClass::InLW; }

namespace {

EpSeq cut_alpha(const EpSeq& a, std::size_t n) {
    if (n < 2) throw Error(Errc::DegenerateExtremal, "N = 1 for alpha " + a.str());
    return EpSeq::periodic(a.prefix(n - 1) + "0");
}

EpSeq cut_beta(const EpSeq& b, std::size_t m) {
    if (m < 2) throw Error(Errc::DegenerateExtremal, "M = 1 for beta " + b.str());
    return EpSeq::periodic(b.prefix(m - 1) + "1");
}

}  // namespace

LexPair iota(const LexPair& p, const PairClass& c) {
    if (c.kind != PairClass::TwoSidedExtremal) throw Error(Errc::PreconditionViolation, "iota needs a two sided pair");
    return LexPair{cut_alpha(p.alpha, c.N), cut_beta(p.beta, c.M)};
}

LexPair xi(const LexPair& p, const PairClass& c) {
    if (c.kind != PairClass::RightExtremal) throw Error(Errc::PreconditionViolation, "xi needs a right extremal pair");
    return LexPair{p.alpha, cut_beta(p.beta, c.M)};
}

LexPair xi_prime(const LexPair& p, const PairClass& c) {
    if (c.kind != PairClass::LeftExtremal) throw Error(Errc::PreconditionViolation, "xi' needs a left extremal pair");
    return LexPair{cut_alpha(p.alpha, c.N), p.beta};
}

LexPair normalize(const LexPair& p) {
    LexPair q = p;
    PairClass c = classify(q);
    if (c.kind == PairClass::NotParryPair) {
        q = LexPair{varsigma(q.alpha), varsigma_prime(q.beta)};
        c = classify(q);
    }
    // one application of I can leave another extremal pair, e.g. (|11000,|001011) -> (|10,|0011)
    for (int step = 0; c.kind != PairClass::InLW; ++step) {
        if (step == 64) throw Error(Errc::DegenerateExtremal, "normalisation did not settle for " + p.str());
        switch (c.kind) {
            case PairClass::TwoSidedExtremal: q = iota(q, c); break;
            case PairClass::RightExtremal: q = xi(q, c); break;
            case PairClass::LeftExtremal: q = xi_prime(q, c); break;
            default: throw Error(Errc::DegenerateExtremal, "not a Parry pair after normalisation: " + q.str());
        }
        c = classify(q);
    }
    return q;
}

std::vector<std::pair<Q, Q>> staircase_sample(const std::vector<Q>& xs) {
    std::vector<std::pair<Q, Q>> out;
    out.reserve(xs.size());
    for (const Q& x : xs) {
        if (x < Q(1, 2) || x > 1) throw Error(Errc::InvalidLiteral, "staircase sample outside [1/2,1]");
        out.emplace_back(x, from_binary(varsigma(to_binary(x, Prefer::Upper))));
    }
    return out;
}

namespace {

// Truncations (x_1..x_{i-1} c)^inf at positions i > longest run of c with x_i = c.
std::vector<EpSeq> truncations(const EpSeq& x, char c, std::size_t want) {
    std::vector<EpSeq> out;
    if (x.purely_periodic()) return out;
    RunStats rs = run_stats(x);
    auto run = c == '1' ? rs.max_one_run : rs.max_zero_run;
    if (!run) return out;
    const char other = c == '1' ? '0' : '1';
    const std::size_t limit = *run + x.orbit_bound() + x.per().size() * (want + 2);
    for (std::size_t i = *run + 1; i <= limit && out.size() < want; ++i)
        if (x.at(i - 1) == c) out.push_back(EpSeq::periodic(x.prefix(i - 1) + other));
    return out;
}

}  // namespace

std::vector<LexPair> periodic_approximations(const LexPair& p, std::size_t k) {
    if (!in_lw(p)) throw Error(Errc::NotInLW, "approximations need an LW pair");
    std::vector<LexPair> out;
    if (p.periodic()) {
        out.assign(k, p);
        return out;
    }
    const std::size_t want = 2 * k + 16;
    auto as = truncations(p.alpha, '1', want);
    auto bs = truncations(p.beta, '0', want);
    const std::size_t n = std::max(p.alpha.purely_periodic() ? 0 : as.size(),
                                   p.beta.purely_periodic() ? 0 : bs.size());
    for (std::size_t m = 0; m < n && out.size() < k; ++m) {
        const EpSeq* a = p.alpha.purely_periodic() ? &p.alpha : (m < as.size() ? &as[m] : nullptr);
        const EpSeq* b = p.beta.purely_periodic() ? &p.beta : (m < bs.size() ? &bs[m] : nullptr);
        if (!a || !b) break;
        LexPair q{*a, *b};
        if (in_lw(q)) out.push_back(std::move(q));
    }
    return out;
}

}  // namespace holedyn
