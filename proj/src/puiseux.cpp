#include "mumford2/puiseux.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <mutex>
#include <sstream>

namespace mumford2 {

namespace {
std::mutex g_prec_mutex;
Rat g_precision = 32;
}  // namespace

Rat default_precision() {
    std::lock_guard lock(g_prec_mutex);
    return g_precision;
}

void set_default_precision(const Rat& p) {
    if (p <= 0) throw Error("precision must be positive");
    std::lock_guard lock(g_prec_mutex);
    g_precision = p;
}

Rat parse_rat(const std::string& text) {
    std::size_t i = 0;
    auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    skip();
    std::size_t start = i;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || !std::isdigit(static_cast<unsigned char>(text[i - 1])))
        throw ParseError("expected rational number", start);
    Int num(text.substr(start, i - start));
    Int den = 1;
    skip();
    if (i < text.size() && text[i] == '/') {
        ++i;
        skip();
        std::size_t dstart = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == dstart) throw ParseError("expected denominator", dstart);
        den = Int(text.substr(dstart, i - dstart));
        if (den == 0) throw ParseError("zero denominator", dstart);
    }
    skip();
    if (i != text.size()) throw ParseError("trailing characters in rational", i);
    return Rat(num, den);
}

Puiseux Puiseux::monomial(const Rat& coeff, const Rat& exp) {
    Puiseux r;
    if (coeff != 0) r.terms_.push_back({exp, coeff});
    return r;
}

Puiseux Puiseux::from_terms(std::vector<Term> terms, std::optional<Rat> trunc_order) {
    std::map<Rat, Rat> acc;
    for (auto& [e, c] : terms) acc[e] += c;
    Puiseux r;
    r.trunc_ = std::move(trunc_order);
    for (auto& [e, c] : acc)
        if (c != 0) r.terms_.push_back({e, c});
    r.drop_beyond_trunc();
    return r;
}

void Puiseux::drop_beyond_trunc() {
    if (!trunc_) return;
    std::erase_if(terms_, [&](const Term& t) { return t.first >= *trunc_; });
}

bool Puiseux::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1 &&
           is_exact();
}

LogAbs Puiseux::log_abs() const {
    if (terms_.empty()) {
        if (!is_exact())
            throw PrecisionError(
                "log|x| of a value cancelled below its truncation order");
        return std::nullopt;
    }
    return -terms_.front().first;
}

Puiseux Puiseux::neg() const {
    Puiseux r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

Puiseux Puiseux::add(const Puiseux& other) const {
    std::vector<Term> merged(terms_);
    merged.insert(merged.end(), other.terms_.begin(), other.terms_.end());
    std::optional<Rat> trunc = trunc_;
    if (other.trunc_ && (!trunc || *other.trunc_ < *trunc)) trunc = other.trunc_;
    return from_terms(std::move(merged), trunc);
}

Puiseux Puiseux::mul(const Puiseux& other) const {
    if (is_zero() || other.is_zero()) return zero();
    // Leading exponent; for a term-free truncated value nothing is known
    // below the truncation order, so that order is the best lower bound.
    auto lead = [](const Puiseux& x) -> Rat {
        return x.terms_.empty() ? *x.trunc_ : x.terms_.front().first;
    };
    std::optional<Rat> trunc;
    auto consider = [&](const Rat& cand) {
        if (!trunc || cand < *trunc) trunc = cand;
    };
    if (trunc_) consider(*trunc_ + lead(other));
    if (other.trunc_) consider(*other.trunc_ + lead(*this));
    std::vector<Term> prod;
    prod.reserve(terms_.size() * other.terms_.size());
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) prod.push_back({e1 + e2, c1 * c2});
    return from_terms(std::move(prod), trunc);
}

Puiseux Puiseux::inv(std::optional<Rat> rel_precision) const {
    if (is_zero()) throw Error("division by zero");
    if (terms_.empty())
        throw PrecisionError("inversion of a value cancelled below truncation");
    const Rat e = terms_.front().first;
    const Rat c = terms_.front().second;
    if (terms_.size() == 1 && is_exact()) return monomial(Rat(1) / c, -e);

    Rat rel = rel_precision ? *rel_precision : default_precision();
    if (trunc_) rel = std::min(rel, Rat(*trunc_ - e));
    // x = c t^e (1 + u), u with positive leading exponent; invert the bracket
    // by Newton iteration y <- y(2 - (1+u)y), doubling the valid window each
    // step, mod t^rel.
    // Exact polynomial arithmetic with explicit clipping; operand truncation
    // metadata would otherwise cap the product below the doubled window.
    auto clip = [](const Puiseux& x, const Rat& bound) {
        std::vector<Term> kept;
        for (const auto& tm : x.terms())
            if (tm.first < bound) kept.push_back(tm);
        return from_terms(std::move(kept), std::nullopt);
    };
    Puiseux u;
    {
        std::vector<Term> ut;
        for (std::size_t k = 1; k < terms_.size(); ++k)
            if (terms_[k].first - e < rel)
                ut.push_back({terms_[k].first - e, terms_[k].second / c});
        u = from_terms(std::move(ut), std::nullopt);
    }
    Puiseux bracket = one();
    if (!u.terms().empty()) {
        const Puiseux two = from_rational(2);
        Rat prec = u.terms().front().first;
        while (prec < rel) {
            Rat target = std::min(rel, Rat(2 * prec));
            Puiseux ut = clip(u, target);
            bracket = clip(bracket.mul(two.sub(one().add(ut).mul(bracket))),
                           target);
            prec = target;
        }
    }
    Puiseux result = bracket.mul(monomial(Rat(1) / c, -e));
    // Known exactly mod t^(rel - e) regardless of how the product truncated.
    return from_terms(result.terms(), rel - e);
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t i = 0;

    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }

    Int integer() {
        skip();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) throw ParseError("expected digits", start);
        return Int(s.substr(start, i - start));
    }

    Rat rational(bool allow_sign) {
        skip();
        bool negative = false;
        if (allow_sign && (peek() == '-' || peek() == '+')) negative = s[i++] == '-';
        Int num = integer();
        Int den = 1;
        if (eat('/')) {
            std::size_t at = i;
            den = integer();
            if (den == 0) throw ParseError("zero denominator", at);
        }
        Rat r(num, den);
        return negative ? -r : r;
    }

    // [coeff '*'] 't' ['^' exponent] | coeff
    Puiseux term() {
        skip();
        Rat coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = rational(false);
            have_coeff = true;
        }
        if (have_coeff && !eat('*')) {
            if (peek() == 't')
                throw ParseError("expected '*' between coefficient and t", i);
            return Puiseux::from_rational(coeff);
        }
        if (!eat('t')) {
            if (have_coeff) throw ParseError("expected 't' after '*'", i);
            throw ParseError("expected term", i);
        }
        Rat exp = 1;
        if (eat('^')) {
            if (eat('(')) {
                exp = rational(true);
                if (!eat(')')) throw ParseError("expected ')'", i);
            } else {
                bool negative = eat('-');
                std::size_t at = i;
                Int n = integer();
                (void)at;
                exp = Rat(negative ? -n : n);
            }
        }
        return Puiseux::monomial(coeff, exp);
    }

    Puiseux expression() {
        bool negative = eat('-');
        Puiseux acc = term();
        if (negative) acc = acc.neg();
        while (true) {
            skip();
            if (i >= s.size()) break;
            if (eat('+'))
                acc = acc.add(term());
            else if (eat('-'))
                acc = acc.sub(term());
            else
                throw ParseError("expected '+' or '-'", i);
        }
        return acc;
    }
};

std::string format_exp(const Rat& e) {
    if (is_integer(e)) return "t^" + format_rat(e);
    return "t^(" + format_rat(e) + ")";
}

}  // namespace

Puiseux parse_puiseux(const std::string& text) {
    Parser p{text};
    p.skip();
    if (p.i >= text.size()) throw ParseError("empty input", 0);
    return p.expression();
}

std::string format_puiseux(const Puiseux& x) {
    if (x.terms().empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : x.terms()) {
        Rat mag = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (e == 0) {
            out << format_rat(mag);
        } else {
            if (mag != 1) out << format_rat(mag) << "*";
            if (e == 1)
                out << "t";
            else
                out << format_exp(e);
        }
    }
    return out.str();
}

}  // namespace mumford2
