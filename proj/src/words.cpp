#include "holedyn/words.hpp"

#include <algorithm>
#include <numeric>

namespace holedyn {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::InvalidLiteral: return "InvalidLiteral";
        case Errc::ConstantWord: return "ConstantWord";
        case Errc::InvalidInterval: return "InvalidInterval";
        case Errc::NotInS: return "NotInS";
        case Errc::DegenerateExtremal: return "DegenerateExtremal";
        case Errc::NotPeriodic: return "NotPeriodic";
        case Errc::NotInLW: return "NotInLW";
        case Errc::InvalidRatio: return "InvalidRatio";
        case Errc::ParseFailure: return "ParseFailure";
        case Errc::NotEssential: return "NotEssential";
        case Errc::NotTransitive: return "NotTransitive";
        case Errc::NonStabilized: return "NonStabilized";
        case Errc::PreconditionViolation: return "PreconditionViolation";
    }
    return "Unknown";
}

bool is_binary(std::string_view w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

Word mirror(std::string_view w) {
    Word r(w);
    for (char& c : r) c = c == '0' ? '1' : '0';
    return r;
}

Word power(std::string_view w, std::size_t k) {
    Word r;
    r.reserve(w.size() * k);
    for (std::size_t i = 0; i < k; ++i) r += w;
    return r;
}

Word rotate(std::string_view w, std::size_t k) {
    if (w.empty()) return Word();
    k %= w.size();
    return Word(w.substr(k)) + Word(w.substr(0, k));
}

Word primitive_root(std::string_view w) {
    const std::size_t n = w.size();
    for (std::size_t d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        if (w.substr(d) == w.substr(0, n - d)) return Word(w.substr(0, d));
    }
    return Word(w);
}

EpSeq::EpSeq(std::string_view pre, std::string_view per) : pre_(pre), per_(per) {
    if (per_.empty()) throw Error(Errc::InvalidLiteral, "empty period");
    if (!is_binary(pre_) || !is_binary(per_)) throw Error(Errc::InvalidLiteral, "non-binary symbol");
    per_ = primitive_root(per_);
    while (!pre_.empty() && pre_.back() == per_.back()) {
        pre_.pop_back();
        per_ = per_.back() + per_.substr(0, per_.size() - 1);
    }
}

EpSeq EpSeq::parse(std::string_view lit) {
    auto bar = lit.find('|');
    if (bar == std::string_view::npos || lit.find('|', bar + 1) != std::string_view::npos)
        throw Error(Errc::InvalidLiteral, "expected pre|per in '" + std::string(lit) + "'");
    auto pre = lit.substr(0, bar), per = lit.substr(bar + 1);
    if (per.empty() || !is_binary(pre) || !is_binary(per))
        throw Error(Errc::InvalidLiteral, "bad sequence literal '" + std::string(lit) + "'");
    return EpSeq(pre, per);
}

Word EpSeq::prefix(std::size_t n) const {
    Word r(n, '0');
    for (std::size_t i = 0; i < n; ++i) r[i] = at(i);
    return r;
}

Ordering compare(const EpSeq& x, const EpSeq& y) {
    if (x == y) return Ordering::Equal;
    const std::size_t bound = std::max(x.pre().size(), y.pre().size()) +
                              std::lcm(x.per().size(), y.per().size());
    for (std::size_t i = 0; i < bound; ++i) {
        char a = x.at(i), b = y.at(i);
        if (a != b) return a < b ? Ordering::Less : Ordering::Greater;
    }
    return Ordering::Equal;  // unreachable for distinct canonical forms
}

EpSeq shift(const EpSeq& x, std::size_t n) {
    if (n < x.pre().size()) return EpSeq(std::string_view(x.pre()).substr(n), x.per());
    return EpSeq::periodic(rotate(x.per(), (n - x.pre().size()) % x.per().size()));
}

std::vector<EpSeq> distinct_shifts(const EpSeq& x) {
    std::vector<EpSeq> out;
    for (std::size_t n = 0; n < x.orbit_bound(); ++n) {
        EpSeq s = shift(x, n);
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
    }
    return out;
}

EpSeq mirror(const EpSeq& x) { return EpSeq(mirror(x.pre()), mirror(x.per())); }

CyclicExtremes cyclic_extremes(std::string_view w) {
    if (w.empty()) throw Error(Errc::InvalidLiteral, "empty word");
    CyclicExtremes r;
    r.max = r.min = Word(w);
    for (std::size_t k = 0; k < w.size(); ++k) {
        Word rot = rotate(w, k);
        r.max = std::max(r.max, rot);
        r.min = std::min(r.min, rot);
        if (rot[0] == '0' && (!r.zero_max || rot > *r.zero_max)) r.zero_max = rot;
        if (rot[0] == '1' && (!r.one_min || rot < *r.one_min)) r.one_min = rot;
    }
    return r;
}

Word zero_max(std::string_view w) {
    auto e = cyclic_extremes(w);
    if (!e.zero_max) throw Error(Errc::ConstantWord, "no rotation of " + std::string(w) + " starts with 0");
    return *e.zero_max;
}

Word one_min(std::string_view w) {
    auto e = cyclic_extremes(w);
    if (!e.one_min) throw Error(Errc::ConstantWord, "no rotation of " + std::string(w) + " starts with 1");
    return *e.one_min;
}

Split factor_split(std::string_view w) {
    auto e = cyclic_extremes(w);
    if (!e.zero_max || !e.one_min) throw Error(Errc::ConstantWord, "constant word " + std::string(w));
    const Word& z = *e.zero_max;
    for (std::size_t n = 1; n < z.size(); ++n) {
        if (rotate(z, n) == *e.one_min) return {z.substr(0, n), z.substr(n)};
    }
    throw Error(Errc::ConstantWord, "no split for " + std::string(w));
}

bool is_balanced(std::string_view w) {
    const std::size_t n = w.size();
    std::vector<std::size_t> pref(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) pref[i + 1] = pref[i] + (w[i] == '1');
    for (std::size_t len = 1; len < n; ++len) {
        std::size_t lo = n, hi = 0;
        for (std::size_t i = 0; i + len <= n; ++i) {
            std::size_t c = pref[i + len] - pref[i];
            lo = std::min(lo, c);
            hi = std::max(hi, c);
        }
        if (hi - lo > 1) return false;
    }
    return true;
}

BalanceStats balance_stats(std::string_view w) {
    if (w.empty()) throw Error(Errc::InvalidLiteral, "empty word");
    BalanceStats s;
    s.ones = static_cast<std::size_t>(std::count(w.begin(), w.end(), '1'));
    s.one_ratio = mpq_class(static_cast<unsigned long>(s.ones), static_cast<unsigned long>(w.size()));
    s.one_ratio.canonicalize();
    s.balanced = is_balanced(w);
    s.cyclically_balanced = is_balanced(power(w, 2));
    return s;
}

RunStats run_stats(const EpSeq& x) {
    RunStats r;
    const Word& per = x.per();
    bool all0 = per.find('1') == Word::npos, all1 = per.find('0') == Word::npos;
    // pre + two periods contains every maximal run of a non-constant tail
    Word s = x.pre() + per + per;
    std::size_t best0 = 0, best1 = 0, cur = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        cur = (i > 0 && s[i] == s[i - 1]) ? cur + 1 : 1;
        (s[i] == '0' ? best0 : best1) = std::max(s[i] == '0' ? best0 : best1, cur);
    }
    if (!all0) r.max_zero_run = best0;
    if (!all1) r.max_one_run = best1;
    return r;
}

}  // namespace holedyn
