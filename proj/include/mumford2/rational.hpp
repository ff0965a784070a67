#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <stdexcept>
#include <string>

namespace mumford2 {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Value of log|x| in Q ∪ {−∞}; disengaged means −∞ (only for the zero
// element). std::optional's ordering puts nullopt below every finite value,
// which is exactly the ordering we need.
using LogAbs = std::optional<Rat>;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};

struct PrecisionError : Error {
    using Error::Error;
};

inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int rat_floor(const Rat& x) {
    return floor_div(numerator(x), denominator(x));
}

// Fractional part in [0, 1).
inline Rat rat_frac(const Rat& x) {
    return x - Rat(rat_floor(x));
}

inline std::string format_rat(const Rat& x) {
    return x.str();
}

Rat parse_rat(const std::string& text);

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

inline std::string format_log(const LogAbs& v) {
    return v ? format_rat(*v) : std::string("-inf");
}

inline Rat log_finite(const LogAbs& v, const char* what = "log value") {
    if (!v) throw Error(std::string(what) + " is -infinity (zero element)");
    return *v;
}

inline LogAbs log_add(const LogAbs& a, const LogAbs& b) {
    if (!a || !b) return std::nullopt;
    return *a + *b;
}

}  // namespace mumford2
