#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "holedyn/error.hpp"

namespace holedyn {

// Finite binary word, symbols are the characters '0' and '1'.
using Word = std::string;

bool is_binary(std::string_view w);
Word mirror(std::string_view w);
Word power(std::string_view w, std::size_t k);
Word rotate(std::string_view w, std::size_t k);
// Smallest root u with w = u^k.
Word primitive_root(std::string_view w);

enum class Ordering { Less, Equal, Greater };

// Eventually periodic sequence pre (per)^inf, always held in canonical form:
// primitive period and shortest preperiod.
class EpSeq {
public:
    EpSeq() : per_("0") {}
    EpSeq(std::string_view pre, std::string_view per);

    static EpSeq periodic(std::string_view per) { return EpSeq("", per); }
    // "pre|per"
    static EpSeq parse(std::string_view literal);

    const Word& pre() const { return pre_; }
    const Word& per() const { return per_; }
    bool purely_periodic() const { return pre_.empty(); }
    // pre + per: every distinct shift is sigma^n for n below this.
    std::size_t orbit_bound() const { return pre_.size() + per_.size(); }

    char at(std::size_t i) const {
        return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
    }
    Word prefix(std::size_t n) const;
    // Index reduced to [0, pre+per).
    std::size_t normalize_index(std::size_t i) const {
        return i < pre_.size() ? i : pre_.size() + (i - pre_.size()) % per_.size();
    }

    std::string str() const { return pre_ + "|" + per_; }
    EpSeq prepend(std::string_view w) const { return EpSeq(std::string(w) + pre_, per_); }

    bool operator==(const EpSeq& o) const = default;
    auto operator<=>(const EpSeq& o) const = default;  // structural, for containers only

private:
    Word pre_;
    Word per_;
};

Ordering compare(const EpSeq& x, const EpSeq& y);
inline bool lex_less(const EpSeq& x, const EpSeq& y) { return compare(x, y) == Ordering::Less; }
inline bool lex_leq(const EpSeq& x, const EpSeq& y) { return compare(x, y) != Ordering::Greater; }

EpSeq shift(const EpSeq& x, std::size_t n);
// sigma^n(x) for n = 0 .. orbit_bound()-1, duplicates removed, in order of first appearance.
std::vector<EpSeq> distinct_shifts(const EpSeq& x);
EpSeq mirror(const EpSeq& x);

struct CyclicExtremes {
    Word max;
    Word min;
    std::optional<Word> zero_max;
    std::optional<Word> one_min;
};

CyclicExtremes cyclic_extremes(std::string_view w);
Word zero_max(std::string_view w);  // throws ConstantWord on 1^n
Word one_min(std::string_view w);   // throws ConstantWord on 0^n

struct Split {
    Word u;
    Word v;
    bool operator==(const Split&) const = default;
};
Split factor_split(std::string_view w);

struct BalanceStats {
    std::size_t ones = 0;
    mpq_class one_ratio;
    bool balanced = false;
    bool cyclically_balanced = false;
};
bool is_balanced(std::string_view w);
BalanceStats balance_stats(std::string_view w);

// nullopt means unbounded.
struct RunStats {
    std::optional<std::size_t> max_zero_run;
    std::optional<std::size_t> max_one_run;
};
RunStats run_stats(const EpSeq& x);

}  // namespace holedyn
