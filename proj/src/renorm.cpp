#include "holedyn/renorm.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace holedyn {

const char* to_string(RenormVerdict::Kind k) {
    switch (k) {
        case RenormVerdict::Essential: return "Essential";
        case RenormVerdict::Renormalizable: return "Renormalizable";
        case RenormVerdict::InfiniteRenorm: return "InfiniteRenorm";
        case RenormVerdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

const char* to_string(RenormVerdict::Tail t) {
    switch (t) {
        case RenormVerdict::Tail::None: return "None";
        case RenormVerdict::Tail::OmegaNuInf: return "OmegaNuInf";
        case RenormVerdict::Tail::NuOmegaInf: return "NuOmegaInf";
    }
    return "?";
}

const char* to_string(TransitivityVerdict::Kind k) {
    switch (k) {
        case TransitivityVerdict::Transitive: return "Transitive";
        case TransitivityVerdict::NotTransitive: return "NotTransitive";
        case TransitivityVerdict::Unknown: return "Unknown";
    }
    return "?";
}

const char* to_string(TransitivityVerdict::Reason r) {
    using R = TransitivityVerdict::Reason;
    switch (r) {
        case R::NonRenormalizable: return "NonRenormalizable";
        case R::BalancedTail: return "BalancedTail";
        case R::Essential: return "Essential";
        case R::Empirical: return "Empirical";
        case R::Renormalizable: return "Renormalizable";
        case R::InfiniteRenorm: return "InfiniteRenorm";
        case R::ZeroBlock: return "ZeroBlock";
        case R::None: return "None";
    }
    return "?";
}

std::optional<BlockParse> parse_blocks(const EpSeq& s, const Word& omega, const Word& nu) {
    std::map<std::size_t, std::size_t> seen;  // normalized position -> block index
    std::string blocks;
    std::size_t pos = 0;
    while (true) {
        std::size_t np = s.normalize_index(pos);
        if (auto it = seen.find(np); it != seen.end())
            return BlockParse{blocks.substr(0, it->second), blocks.substr(it->second)};
        seen.emplace(np, blocks.size());
        const Word& w = s.at(pos) == '0' ? omega : nu;
        if (w.empty() || w[0] != s.at(pos)) return std::nullopt;
        for (std::size_t k = 0; k < w.size(); ++k)
            if (s.at(pos + k) != w[k]) return std::nullopt;
        blocks.push_back(&w == &omega ? '0' : '1');
        pos += w.size();
    }
}

bool admissible_renorm_words(const Word& omega, const Word& nu) {
    if (omega.empty() || nu.empty() || omega.size() + nu.size() < 3) return false;
    if (omega[0] != '0' || nu[0] != '1') return false;
    auto eo = cyclic_extremes(omega), en = cyclic_extremes(nu);
    if (omega != *eo.zero_max || nu != *en.one_min) return false;
    if (!en.zero_max || !eo.one_min) return false;
    // equality only when omega and nu are rotations of one word
    if (*en.zero_max == omega && *eo.one_min == nu) return true;
    return lex_less(EpSeq::periodic(*en.zero_max), EpSeq::periodic(omega)) &&
           lex_less(EpSeq::periodic(nu), EpSeq::periodic(*eo.one_min));
}

std::size_t default_renorm_cap(const LexPair& p) { return 2 * (p.alpha.orbit_bound() + p.beta.orbit_bound()); }

std::vector<std::pair<std::size_t, std::size_t>> renorm_candidates(std::size_t cap) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t total = 3; total <= cap; ++total)
        for (std::size_t lo = 1; lo < total; ++lo) out.emplace_back(lo, total - lo);
    return out;
}

std::optional<RenormVerdict> try_renorm_candidate(const LexPair& p, const Word& omega, const Word& nu) {
    if (!admissible_renorm_words(omega, nu)) return std::nullopt;
    const EpSeq a0 = p.alpha.prepend("0"), b1 = p.beta.prepend("1");
    auto pa = parse_blocks(a0, omega, nu);
    if (!pa) return std::nullopt;
    auto pb = parse_blocks(b1, omega, nu);
    if (!pb) return std::nullopt;
    // leading pattern: 0alpha = omega nu ..., 1beta = nu omega ...
    EpSeq sa = pa->stream(), sb = pb->stream();
    if (sa.at(0) != '0' || sa.at(1) != '1' || sb.at(0) != '1' || sb.at(1) != '0') return std::nullopt;
    RenormVerdict v;
    v.kind = RenormVerdict::Renormalizable;
    v.omega = omega;
    v.nu = nu;
    v.trivial = omega.size() + nu.size() == 3;
    v.alpha_blocks = *pa;
    v.beta_blocks = *pb;
    bool ta = a0 == EpSeq(omega, nu), tb = b1 == EpSeq(nu, omega);
    v.tail = (ta && tb) ? RenormVerdict::Tail::OmegaNuInf
             : (ta || tb) ? RenormVerdict::Tail::NuOmegaInf
                          : RenormVerdict::Tail::None;
    return v;
}

std::optional<RenormVerdict> infinite_renorm(const LexPair& p) {
    const EpSeq a0 = p.alpha.prepend("0"), b1 = p.beta.prepend("1");
    // a single periodic orbit of period 2 is the degenerate cyclic pair ((10)^inf,(01)^inf)
    if (p.periodic() && a0.purely_periodic() && a0.per().size() < 3) return std::nullopt;
    RenormVerdict v;
    v.kind = RenormVerdict::InfiniteRenorm;
    for (std::size_t k = 1; k <= a0.orbit_bound(); ++k) {
        if (shift(a0, k) != b1) continue;
        Word w = a0.prefix(k);
        if (w == zero_max(w)) {
            v.finite_word = w;
            v.side = RenormVerdict::Side::Alpha;
            return v;
        }
    }
    for (std::size_t k = 1; k <= b1.orbit_bound(); ++k) {
        if (shift(b1, k) != a0) continue;
        Word w = b1.prefix(k);
        if (w == one_min(w)) {
            v.finite_word = w;
            v.side = RenormVerdict::Side::Beta;
            return v;
        }
    }
    return std::nullopt;
}

RenormVerdict detect_renorm(const LexPair& p, std::size_t cap) {
    if (cap == 0) cap = default_renorm_cap(p);
    const EpSeq a0 = p.alpha.prepend("0"), b1 = p.beta.prepend("1");
    for (auto [lo, ln] : renorm_candidates(cap)) {
        if (auto v = try_renorm_candidate(p, a0.prefix(lo), b1.prefix(ln))) {
            v->cap = cap;
            return *v;
        }
    }
    if (auto v = infinite_renorm(p)) {
        v->cap = cap;
        return *v;
    }
    RenormVerdict v;
    v.cap = cap;
    if (p.periodic()) {
        v.kind = RenormVerdict::Essential;
        if (a0.purely_periodic() && b1.purely_periodic()) {
            v.omega = a0.per();
            v.nu = b1.per();
        }
    } else {
        v.kind = RenormVerdict::Inconclusive;
    }
    return v;
}

LexPair renorm_operator(const LexPair& p, const Word& omega, const Word& nu) {
    auto pa = parse_blocks(p.alpha.prepend("0"), omega, nu);
    auto pb = parse_blocks(p.beta.prepend("1"), omega, nu);
    if (!pa || !pb) throw Error(Errc::ParseFailure, p.str() + " over {" + omega + "," + nu + "}");
    return LexPair{shift(pa->stream(), 1), shift(pb->stream(), 1)};
}

bool two_word_membership(const Word& omega, const Word& nu, const EpSeq& x) {
    if (omega.empty() || nu.empty()) throw Error(Errc::InvalidLiteral, "empty block word");
    const std::array<const Word*, 2> blocks{&omega, &nu};
    auto matches = [&](std::size_t pos, std::string_view w) {
        for (std::size_t k = 0; k < w.size(); ++k)
            if (x.at(pos + k) != w[k]) return false;
        return true;
    };
    // 0 unvisited, 1 on stack, 2 infinite parse exists, 3 none
    std::map<std::size_t, int> mark;
    auto infinite = [&](auto&& self, std::size_t pos) -> bool {
        std::size_t np = x.normalize_index(pos);
        int& m = mark[np];
        if (m == 1 || m == 2) return true;
        if (m == 3) return false;
        m = 1;
        bool ok = false;
        for (const Word* b : blocks)
            if (!ok && matches(np, *b)) ok = self(self, np + b->size());
        mark[np] = ok ? 2 : 3;
        return ok;
    };
    for (const Word* b : blocks)
        for (std::size_t n = 0; n < b->size(); ++n) {
            std::string_view tail = std::string_view(*b).substr(n);
            if (matches(0, tail) && infinite(infinite, tail.size())) return true;
        }
    return false;
}

std::pair<Word, Word> sturmian_words(const Q& r) {
    if (r <= 0 || r >= 1) throw Error(Errc::InvalidRatio, to_string(r));
    const mpz_class p = r.get_num(), q = r.get_den();
    Word w;
    for (mpz_class k = 0; k < q; ++k) {
        mpz_class a = ((k + 1) * p) / q, b = (k * p) / q;
        w.push_back(a - b == 1 ? '1' : '0');
    }
    auto e = cyclic_extremes(w);
    return {*e.zero_max, *e.one_min};
}

FareyInfo farey(const Q& r1, const Q& r2) {
    FareyInfo f;
    f.neighbours = r1.get_num() * r2.get_den() - r2.get_num() * r1.get_den() == 1;
    f.mediant = Q(r1.get_num() + r2.get_num(), r1.get_den() + r2.get_den());
    f.mediant.canonicalize();
    return f;
}

double renewal_entropy(unsigned l1, unsigned l2) {
    if (l1 == 0 || l2 == 0) throw Error(Errc::PreconditionViolation, "renewal lengths must be positive");
    auto f = [&](double lam) { return std::pow(lam, -static_cast<double>(l1)) + std::pow(lam, -static_cast<double>(l2)) - 1.0; };
    double lo = 1.0, hi = 2.0;
    while (hi - lo > 1e-12) {
        double mid = 0.5 * (lo + hi);
        (f(mid) > 0 ? lo : hi) = mid;
    }
    return std::log2(0.5 * (lo + hi));
}

BridgePair bridge_words(const LexPair& p, const RenormVerdict& v) {
    if (v.kind != RenormVerdict::Essential) throw Error(Errc::NotEssential, to_string(v.kind));
    if (v.omega.empty() || v.nu.empty()) throw Error(Errc::NotEssential, "no associated pair for " + p.str());
    Split sa = factor_split(v.omega), sb = factor_split(v.nu);
    BridgePair b;
    b.p1 = lex_less(EpSeq::periodic(sa.u), EpSeq::periodic(sb.u)) ? sb.u : sa.u;
    b.p2 = lex_less(EpSeq::periodic(sb.v), EpSeq::periodic(sa.v)) ? sb.v : sa.v;
    Dfa d = presentation(p);
    b.verified = d.accepts(b.p1 + b.p2) && d.accepts(b.p2 + b.p1) && point_in(p, EpSeq::periodic(b.p1 + b.p2));
    return b;
}

namespace {

std::vector<char> reachable(const Dfa& d, int from, std::size_t max_len) {
    std::vector<char> seen(d.size(), 0);
    std::vector<int> frontier{from};
    seen[static_cast<std::size_t>(from)] = 1;
    for (std::size_t step = 0; step < max_len && !frontier.empty(); ++step) {
        std::vector<int> nxt;
        for (int s : frontier)
            for (int t : d.next[static_cast<std::size_t>(s)])
                if (t >= 0 && !seen[static_cast<std::size_t>(t)]) {
                    seen[static_cast<std::size_t>(t)] = 1;
                    nxt.push_back(t);
                }
        frontier = std::move(nxt);
    }
    return seen;
}

std::vector<char> readers(const Dfa& d, const Word& v) {
    std::vector<char> r(d.size(), 0);
    for (std::size_t t = 0; t < d.size(); ++t) r[t] = d.run(v, static_cast<int>(t)) >= 0;
    return r;
}

bool meets(const std::vector<char>& a, const std::vector<char>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) return true;
    return false;
}

// all pairs in B_n x B_n bridged within max_len steps
std::optional<std::pair<Word, Word>> unbridged(const Dfa& d, std::size_t n, std::size_t max_len) {
    auto words = words_of_length(d, n);
    std::map<int, std::vector<char>> reach;
    std::vector<std::vector<char>> read;
    read.reserve(words.size());
    for (const Word& v : words) read.push_back(readers(d, v));
    for (const Word& u : words) {
        int s = d.run(u);
        auto it = reach.find(s);
        if (it == reach.end()) it = reach.emplace(s, reachable(d, s, max_len)).first;
        for (std::size_t k = 0; k < words.size(); ++k)
            if (!meets(it->second, read[k])) return std::make_pair(u, words[k]);
    }
    return std::nullopt;
}

}  // namespace

bool bridgeless(const Dfa& d, const Word& u, const Word& v) {
    int s = d.run(u);
    if (s < 0 || !d.accepts(v)) return false;
    return !meets(reachable(d, s, d.size()), readers(d, v));
}

std::optional<std::pair<Word, Word>> find_bridgeless_pair(const Dfa& d, std::size_t nmax) {
    for (std::size_t n = 1; n <= nmax; ++n)
        if (auto w = unbridged(d, n, d.size())) return w;
    return std::nullopt;
}

bool automaton_transitive(const Dfa& d) {
    int ncomp = 0;
    std::vector<int> comp = scc_ids(d, ncomp);
    std::vector<char> sink(static_cast<std::size_t>(ncomp), 1);
    for (std::size_t s = 0; s < d.size(); ++s)
        for (int t : d.next[s])
            if (t >= 0 && comp[static_cast<std::size_t>(t)] != comp[s]) sink[static_cast<std::size_t>(comp[s])] = 0;
    for (int c = 0; c < ncomp; ++c) {
        if (!sink[static_cast<std::size_t>(c)]) continue;
        // every word read from start must be readable from some state of the sink
        using Node = std::pair<int, std::vector<char>>;
        std::vector<char> init(d.size(), 0);
        for (std::size_t s = 0; s < d.size(); ++s) init[s] = comp[s] == c;
        std::set<Node> seen{{d.start, init}};
        std::vector<Node> stack{{d.start, init}};
        while (!stack.empty()) {
            Node cur = std::move(stack.back());
            stack.pop_back();
            for (int sym = 0; sym < 2; ++sym) {
                int x = d.next[static_cast<std::size_t>(cur.first)][static_cast<std::size_t>(sym)];
                if (x < 0) continue;
                std::vector<char> nxt(d.size(), 0);
                bool any = false;
                for (std::size_t t = 0; t < d.size(); ++t) {
                    if (!cur.second[t]) continue;
                    int y = d.next[t][static_cast<std::size_t>(sym)];
                    if (y >= 0) {
                        nxt[static_cast<std::size_t>(y)] = 1;
                        any = true;
                    }
                }
                if (!any) return false;
                Node node{x, std::move(nxt)};
                if (seen.insert(node).second) stack.push_back(std::move(node));
            }
        }
    }
    return true;
}

bool brute_force_transitive(const LexPair& p, std::size_t n, std::size_t kmax) {
    return !unbridged(build_language_dfa(p), n, kmax).has_value();
}

namespace {

bool zero_block(const LexPair& p) {
    RunStats rs = run_stats(p.alpha);
    if (!rs.max_zero_run) return false;
    for (std::size_t n = *rs.max_zero_run + 1; n <= p.beta.orbit_bound(); ++n) {
        if (p.beta.at(n - 1) != '0') return false;
        if (shift(p.beta, n) == p.alpha) return true;
    }
    return false;
}

}  // namespace

TransitivityVerdict transitivity(const LexPair& p, std::size_t cap) {
    using TV = TransitivityVerdict;
    using R = TV::Reason;
    TV t;
    t.cap = cap == 0 ? default_renorm_cap(p) : cap;
    const std::size_t search_n = p.alpha.orbit_bound() + p.beta.orbit_bound();
    Dfa d = presentation(p);
    auto not_transitive = [&](R reason, std::optional<std::pair<Word, Word>> w) {
        t.kind = TV::NotTransitive;
        t.reason = reason;
        if (w && bridgeless(d, w->first, w->second)) {
            t.witness = w;
        } else {
            t.witness = find_bridgeless_pair(d, search_n);
        }
        t.witness_verified = t.witness.has_value();
        return t;
    };
    auto empirical = [&](R reason_if_not) {
        if (automaton_transitive(d)) {
            t.kind = TV::Transitive;
            t.reason = R::Empirical;
            return t;
        }
        return not_transitive(reason_if_not, std::nullopt);
    };

    if (zero_block(p)) return not_transitive(R::ZeroBlock, std::nullopt);
    t.renorm = detect_renorm(p, t.cap);
    const RenormVerdict& v = t.renorm;
    switch (v.kind) {
        case RenormVerdict::InfiniteRenorm:
            if (p.periodic()) return empirical(R::InfiniteRenorm);
            return not_transitive(R::InfiniteRenorm, std::nullopt);
        case RenormVerdict::Essential:
            t.kind = TV::Transitive;
            t.reason = R::Essential;
            return t;
        case RenormVerdict::Inconclusive:
            t.kind = TV::Transitive;
            t.reason = R::NonRenormalizable;
            return t;
        case RenormVerdict::Renormalizable: break;
    }
    const std::size_t len = v.omega.size() + v.nu.size();
    if (v.tail == RenormVerdict::Tail::OmegaNuInf && v.omega.size() == v.nu.size()) {
        BalanceStats bo = balance_stats(v.omega), bn = balance_stats(v.nu);
        if (bo.cyclically_balanced && bn.cyclically_balanced && bo.one_ratio == bn.one_ratio) {
            t.kind = TV::Transitive;
            t.reason = R::BalancedTail;
            return t;
        }
    }
    if (len > 4) {
        std::optional<std::pair<Word, Word>> w;
        EpSeq blocks = v.alpha_blocks.stream();
        std::size_t n1 = 0;
        while (n1 < blocks.orbit_bound() + 1 && blocks.at(1 + n1) == '1') ++n1;
        if (n1 <= blocks.orbit_bound()) w = std::make_pair(v.omega + "1", power(v.nu, n1 + 1));
        return not_transitive(R::Renormalizable, w);
    }
    return empirical(R::Renormalizable);
}

}  // namespace holedyn
