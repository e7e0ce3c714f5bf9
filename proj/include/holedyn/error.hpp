#pragma once

#include <stdexcept>
#include <string>

namespace holedyn {

enum class Errc {
    InvalidLiteral,
    ConstantWord,
    InvalidInterval,
    NotInS,
    DegenerateExtremal,
    NotPeriodic,
    NotInLW,
    InvalidRatio,
    ParseFailure,
    NotEssential,
    NotTransitive,
    NonStabilized,
    PreconditionViolation,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code_(c) {}
    Errc code() const { return code_; }

private:
    Errc code_;
};

}  // namespace holedyn
