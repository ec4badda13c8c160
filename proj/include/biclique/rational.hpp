#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <compare>
#include <string>

#include "biclique/errors.hpp"

namespace biclique {

using Int = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator). All arithmetic in the library is exact; nothing is ever
/// rounded to floating point.
using Rational = boost::multiprecision::mpq_rational;

/// Edge weight that is either an exact rational or the symbolic +infinity
/// used by the minimum-problem certificates. Infinity compares greater than
/// every finite value and absorbs addition. It is a tag, not a big number,
/// so no magnitude choice can break exactness.
class ExtendedWeight {
public:
    ExtendedWeight() : infinite_(false), value_(0) {}
    ExtendedWeight(const Rational& v) : infinite_(false), value_(v) {}  // NOLINT: implicit by design
    ExtendedWeight(long v) : infinite_(false), value_(v) {}             // NOLINT
    ExtendedWeight(int v) : infinite_(false), value_(v) {}              // NOLINT

    static ExtendedWeight infinity() {
        ExtendedWeight w;
        w.infinite_ = true;
        return w;
    }

    bool is_infinite() const { return infinite_; }
    bool is_finite() const { return !infinite_; }

    /// Finite value; calling this on infinity is a programming error.
    const Rational& value() const {
        if (infinite_) throw ParameterError("value() called on infinite weight");
        return value_;
    }

    ExtendedWeight& operator+=(const ExtendedWeight& rhs) {
        if (rhs.infinite_) infinite_ = true;
        if (!infinite_) value_ += rhs.value_;
        return *this;
    }
    friend ExtendedWeight operator+(ExtendedWeight lhs, const ExtendedWeight& rhs) {
        lhs += rhs;
        return lhs;
    }

    friend bool operator==(const ExtendedWeight& a, const ExtendedWeight& b) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        return a.value_ == b.value_;
    }
    friend bool operator!=(const ExtendedWeight& a, const ExtendedWeight& b) { return !(a == b); }
    friend bool operator<(const ExtendedWeight& a, const ExtendedWeight& b) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator>(const ExtendedWeight& a, const ExtendedWeight& b) { return b < a; }
    friend bool operator<=(const ExtendedWeight& a, const ExtendedWeight& b) { return !(b < a); }
    friend bool operator>=(const ExtendedWeight& a, const ExtendedWeight& b) { return !(a < b); }

    /// Canonical text form: "p/q", "p", or "inf".
    std::string str() const { return infinite_ ? "inf" : value_.str(); }

private:
    bool infinite_;
    Rational value_;
};

/// Parse "p/q", "p", or "inf". Construction goes through exact division so
/// the result is always in lowest terms regardless of the input form.
inline ExtendedWeight parse_extended_weight(const std::string& text) {
    if (text == "inf" || text == "+inf" || text == "infinity") return ExtendedWeight::infinity();
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return ExtendedWeight(Rational(Int(text)));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw InstanceError("zero denominator in weight '" + text + "'");
        return ExtendedWeight(Rational(num) / Rational(den));
    } catch (const std::runtime_error&) {
        throw InstanceError("cannot parse weight '" + text + "'");
    }
}

inline Rational parse_rational(const std::string& text) {
    ExtendedWeight w = parse_extended_weight(text);
    if (w.is_infinite()) throw InstanceError("finite rational required, got '" + text + "'");
    return w.value();
}

}  // namespace biclique
