#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "holedyn/words.hpp"

namespace holedyn {

// Reduced rational; points of the circle live in [0,1).
using Q = mpq_class;

Q parse_rational(std::string_view text);  // "p/q" or "p"
std::string to_string(const Q& q);

struct Hole {
    Q a;
    Q b;
};

enum class HoleClass { TrivialExceptional, CentredCandidate, OutsideStudiedRectangle };
const char* to_string(HoleClass c);

enum class Prefer { Upper, Lower };

// Exact value of the binary expansion; 1^inf evaluates to 1.
Q from_binary(const EpSeq& s);
// Expansion of x in [0,1]. Dyadic x: Upper ends 10^inf, Lower ends 01^inf. x = 1 gives 1^inf.
EpSeq to_binary(const Q& x, Prefer prefer);

HoleClass validate_hole(const Hole& h);

struct LexPair;
LexPair hole_to_pair(const Hole& h);
Hole mirror_hole(const Hole& h);

Q double_mod1(const Q& x);

struct Orbit {
    std::vector<Q> preorbit;
    std::vector<Q> cycle;
};
Orbit orbit(const Q& x);

struct SMembership {
    std::optional<std::size_t> n;
    std::optional<std::size_t> m;
    bool in_s() const { return n && m; }
};
SMembership s_membership(const Hole& h);

Q stability_radius(const Hole& h);

std::vector<unsigned> bad_periods(const Hole& h, unsigned nmax);

// Primitive binary necklaces of length n, each as its smallest rotation.
std::vector<Word> primitive_necklaces(unsigned n);
// Point k/(2^n-1) for the periodic word w of length n.
Q periodic_point(std::string_view w);

}  // namespace holedyn
