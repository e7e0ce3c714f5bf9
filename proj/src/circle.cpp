#include "holedyn/circle.hpp"

#include <algorithm>
#include <map>

#include "holedyn/lexworld.hpp"

namespace holedyn {

Q parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty() || s.find_first_not_of("0123456789/-") != std::string::npos)
        throw Error(Errc::InvalidLiteral, "bad rational '" + s + "'");
    Q q;
    if (q.set_str(s, 10) != 0) throw Error(Errc::InvalidLiteral, "bad rational '" + s + "'");
    if (q.get_den() == 0) throw Error(Errc::InvalidLiteral, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const Q& q) { return q.get_str(); }

const char* to_string(HoleClass c) {
    switch (c) {
        case HoleClass::TrivialExceptional: return "TrivialExceptional";
        case HoleClass::CentredCandidate: return "CentredCandidate";
        case HoleClass::OutsideStudiedRectangle: return "OutsideStudiedRectangle";
    }
    return "?";
}

namespace {

mpz_class bits_value(std::string_view w) {
    mpz_class v = 0;
    for (char c : w) {
        v <<= 1;
        if (c == '1') v += 1;
    }
    return v;
}

mpz_class pow2(std::size_t n) {
    mpz_class r = 1;
    r <<= n;
    return r;
}

Q circle_dist(const Q& x, const Q& y) {
    Q d = abs(x - y);
    Q e = 1 - d;
    return d < e ? d : e;
}

}  // namespace

Q from_binary(const EpSeq& s) {
    const std::size_t p = s.pre().size(), q = s.per().size();
    Q tail(bits_value(s.per()), pow2(q) - 1);
    Q v = (Q(bits_value(s.pre())) + tail) / Q(pow2(p));
    v.canonicalize();
    return v;
}

EpSeq to_binary(const Q& x, Prefer prefer) {
    if (x < 0 || x > 1) throw Error(Errc::InvalidLiteral, "point outside [0,1]: " + to_string(x));
    if (x == 1) return EpSeq::periodic("1");
    const mpz_class den = x.get_den();
    mpz_class r = x.get_num();
    std::map<mpz_class, std::size_t> seen;
    Word digits;
    while (!seen.count(r)) {
        seen.emplace(r, digits.size());
        r *= 2;
        if (r >= den) {
            digits.push_back('1');
            r -= den;
        } else {
            digits.push_back('0');
        }
    }
    const std::size_t start = seen.at(r);
    Word pre = digits.substr(0, start), per = digits.substr(start);
    if (r == 0 && prefer == Prefer::Lower) {
        // dyadic: a_1..a_k 1 0^inf  ->  a_1..a_k 0 1^inf
        auto last = pre.find_last_of('1');
        if (last != Word::npos) {
            pre = pre.substr(0, last) + "0";
            per = "1";
        }
    }
    return EpSeq(pre, per);
}

HoleClass validate_hole(const Hole& h) {
    if (h.a >= h.b) throw Error(Errc::InvalidInterval, "a >= b");
    const Q q1(1, 4), q2(1, 2), q3(3, 4);
    if ((h.a < q1 && h.b > q2) || (h.a < q2 && h.b > q3)) return HoleClass::TrivialExceptional;
    if (q1 < h.a && h.a < q2 && q2 < h.b && h.b < q3) return HoleClass::CentredCandidate;
    return HoleClass::OutsideStudiedRectangle;
}

LexPair hole_to_pair(const Hole& h) {
    HoleClass c = validate_hole(h);
    if (c != HoleClass::CentredCandidate)
        throw Error(Errc::InvalidInterval, std::string("hole class ") + to_string(c));
    return LexPair{to_binary(2 * h.a, Prefer::Upper), to_binary(2 * h.b - 1, Prefer::Lower)};
}

Hole mirror_hole(const Hole& h) { return Hole{1 - h.b, 1 - h.a}; }

Q double_mod1(const Q& x) {
    Q y = 2 * x;
    if (y >= 1) y -= 1;
    return y;
}

Orbit orbit(const Q& x) {
    std::vector<Q> pts;
    std::map<Q, std::size_t> seen;
    Q y = x;
    while (!seen.count(y)) {
        seen.emplace(y, pts.size());
        pts.push_back(y);
        y = double_mod1(y);
    }
    std::size_t start = seen.at(y);
    Orbit o;
    o.preorbit.assign(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(start));
    o.cycle.assign(pts.begin() + static_cast<std::ptrdiff_t>(start), pts.end());
    return o;
}

namespace {

std::optional<std::size_t> landing(const Q& x, const Hole& h) {
    Orbit o = orbit(x);
    std::size_t total = o.preorbit.size() + o.cycle.size();
    Q y = x;
    for (std::size_t j = 1; j <= total; ++j) {
        y = double_mod1(y);
        if (h.a < y && y < h.b) return j;
    }
    return std::nullopt;
}

}  // namespace

SMembership s_membership(const Hole& h) { return SMembership{landing(h.a, h), landing(h.b, h)}; }

Q stability_radius(const Hole& h) {
    SMembership s = s_membership(h);
    if (!s.in_s()) throw Error(Errc::NotInS, "hole endpoints never land in the hole");
    const Q half(1, 2);
    Q best = 1;
    auto scan = [&](const Q& x, std::size_t land) {
        Q y = x;
        Q scale = 1;
        for (std::size_t j = 0; j <= land; ++j) {
            for (const Q* t : {&h.a, &h.b, static_cast<const Q*>(nullptr)}) {
                if (j == 0 && t && *t == x) continue;
                Q d = t ? circle_dist(y, *t) : std::min(circle_dist(y, Q(0)), circle_dist(y, half));
                best = std::min(best, Q(d / scale));
            }
            y = double_mod1(y);
            scale *= 2;
        }
    };
    scan(h.a, *s.n);
    scan(h.b, *s.m);
    if (best == 0) throw Error(Errc::NotInS, "endpoint orbit meets a hole endpoint or a digit boundary");
    Q eps = best / 2;
    eps.canonicalize();
    return eps;
}

std::vector<Word> primitive_necklaces(unsigned n) {
    // Lyndon words of length n via the FKM generator
    std::vector<Word> out;
    if (n == 0) return out;
    std::vector<int> a(n + 1, 0);
    std::size_t t = 1;
    // iterative prenecklace enumeration
    auto emit = [&](std::size_t p) {
        if (p == n) {
            Word w(n, '0');
            for (std::size_t i = 1; i <= n; ++i) w[i - 1] = static_cast<char>('0' + a[i]);
            out.push_back(std::move(w));
        }
    };
    a[0] = 0;
    std::size_t p = 1;
    emit(p);  // 0^n only when n == 1
    while (true) {
        t = n;
        while (t > 0 && a[t] == 1) --t;
        if (t == 0) break;
        a[t] += 1;
        p = t;
        for (std::size_t i = t + 1; i <= n; ++i) a[i] = a[i - p];
        emit(p);
    }
    return out;
}

Q periodic_point(std::string_view w) {
    Q v(bits_value(w), pow2(w.size()) - 1);
    v.canonicalize();
    if (v == 1) v = 0;
    return v;
}

std::vector<unsigned> bad_periods(const Hole& h, unsigned nmax) {
    std::vector<unsigned> out;
    for (unsigned n = 3; n <= nmax; ++n) {
        bool all_hit = true;
        for (const Word& w : primitive_necklaces(n)) {
            bool hit = false;
            for (std::size_t k = 0; k < n && !hit; ++k) {
                Q x = periodic_point(rotate(w, k));
                hit = h.a < x && x < h.b;
            }
            if (!hit) {
                all_hit = false;
                break;
            }
        }
        if (all_hit) out.push_back(n);
    }
    return out;
}

}  // namespace holedyn
