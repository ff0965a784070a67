#pragma once

#include <utility>
#include <vector>

#include "mumford2/rational.hpp"

namespace mumford2 {

// Working precision for series inversion, in exponent units past the leading
// exponent. Settable once at startup (CLI/env); reads are lock-free.
Rat default_precision();
void set_default_precision(const Rat& p);

/// Element of K: a finite sum of terms c·t^e with rational c ≠ 0 and rational
/// exponents in strictly increasing order, known exactly below `trunc_order`
/// (engaged) or everywhere (disengaged). log|x| = −(least exponent).
class Puiseux {
  public:
    using Term = std::pair<Rat, Rat>;  // (exponent, coefficient)

    Puiseux() = default;

    static Puiseux zero() { return Puiseux(); }
    static Puiseux one() { return monomial(1, 0); }
    static Puiseux t() { return monomial(1, 1); }
    static Puiseux monomial(const Rat& coeff, const Rat& exp);
    static Puiseux from_rational(const Rat& c) { return monomial(c, 0); }
    static Puiseux from_terms(std::vector<Term> terms,
                              std::optional<Rat> trunc_order = std::nullopt);

    const std::vector<Term>& terms() const { return terms_; }
    const std::optional<Rat>& trunc_order() const { return trunc_; }
    bool is_exact() const { return !trunc_.has_value(); }

    /// True only for the exact zero. A term-free truncated value is an
    /// unresolved "O(t^T)" and is neither provably zero nor nonzero.
    bool is_zero() const { return terms_.empty() && is_exact(); }
    bool is_one() const;

    /// Throws PrecisionError for a term-free truncated value.
    LogAbs log_abs() const;

    Puiseux neg() const;
    Puiseux add(const Puiseux& other) const;
    Puiseux sub(const Puiseux& other) const { return add(other.neg()); }
    Puiseux mul(const Puiseux& other) const;

    /// Geometric-series inverse, exact for monomials, otherwise known to
    /// `rel_precision` exponent units past the leading exponent.
    Puiseux inv(std::optional<Rat> rel_precision = std::nullopt) const;
    Puiseux div(const Puiseux& other) const { return mul(other.inv()); }

    bool operator==(const Puiseux& other) const = default;

  private:
    std::vector<Term> terms_;
    std::optional<Rat> trunc_;

    void drop_beyond_trunc();
};

inline Puiseux operator+(const Puiseux& a, const Puiseux& b) { return a.add(b); }
inline Puiseux operator-(const Puiseux& a, const Puiseux& b) { return a.sub(b); }
inline Puiseux operator*(const Puiseux& a, const Puiseux& b) { return a.mul(b); }
inline Puiseux operator/(const Puiseux& a, const Puiseux& b) { return a.div(b); }
inline Puiseux operator-(const Puiseux& a) { return a.neg(); }

inline LogAbs log_abs(const Puiseux& x) { return x.log_abs(); }

/// log|x| for x that must be nonzero (e.g. a difference of distinct points).
inline Rat log_abs_finite(const Puiseux& x) {
    return log_finite(x.log_abs(), "log|x|");
}

/// Decides log|x| < bound (or <= for strict = false) even when every stored
/// term of a truncated x cancelled: then log|x| is at most minus the
/// truncation order. Throws PrecisionError only when genuinely undecidable.
inline bool log_abs_within(const Puiseux& x, const Rat& bound, bool strict) {
    if (!x.terms().empty()) {
        Rat v = -x.terms().front().first;
        return strict ? v < bound : v <= bound;
    }
    if (x.is_exact()) return true;  // exact zero: log = -inf
    Rat cap = -*x.trunc_order();
    if (strict ? cap < bound : cap <= bound) return true;
    throw PrecisionError("comparison undecidable at current precision");
}

// Grammar: expression = ['-'] term (('+'|'-') term)*;
// term = coeff '*' tpart | tpart | coeff; tpart = 't' ['^' exponent];
// exponent = ['-'] digits | '(' rational ')'. Whitespace insignificant.
Puiseux parse_puiseux(const std::string& text);
std::string format_puiseux(const Puiseux& x);

}  // namespace mumford2
