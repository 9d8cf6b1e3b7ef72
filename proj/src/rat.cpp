/* Apache License, Version 2.0 */
#include "polylink/rat.hpp"

#include <cctype>
#include <ostream>

#include "polylink/errors.hpp"

namespace polylink {

Rat::Rat(long num, long den) {
    if (den == 0) throw PreconditionViolated("Rat: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw PreconditionViolated("Rat: division by zero");
    q_ /= o.q_;
    return *this;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat Rat::parse(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw ParseError(0, "empty scalar");

    if (auto slash = s.find('/'); slash != std::string::npos) {
        std::string ns = s.substr(0, slash), ds = s.substr(slash + 1);
        std::string nd = (!ns.empty() && (ns[0] == '-' || ns[0] == '+')) ? ns.substr(1) : ns;
        std::string dd = (!ds.empty() && (ds[0] == '-' || ds[0] == '+')) ? ds.substr(1) : ds;
        if (!all_digits(nd) || !all_digits(dd))
            throw ParseError(0, "bad rational '" + s + "'");
        mpq_class q;
        if (q.set_str(s, 10) != 0) throw ParseError(0, "bad rational '" + s + "'");
        if (q.get_den() == 0) throw ParseError(0, "zero denominator in '" + s + "'");
        q.canonicalize();
        return Rat(q);
    }

    // Decimal or plain integer: shift the point out, denominator 10^k.
    bool neg = false;
    std::string_view rest = s;
    if (rest[0] == '+' || rest[0] == '-') {
        neg = rest[0] == '-';
        rest.remove_prefix(1);
    }
    std::string digits;
    std::size_t frac_digits = 0;
    bool seen_point = false, seen_digit = false;
    for (char c : rest) {
        if (c == '.') {
            if (seen_point) throw ParseError(0, "bad decimal '" + s + "'");
            seen_point = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_point) ++frac_digits;
        } else {
            throw ParseError(0, "bad scalar '" + s + "'");
        }
    }
    if (!seen_digit) throw ParseError(0, "bad scalar '" + s + "'");
    mpz_class num(digits, 10);
    if (neg) num = -num;
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_digits);
    mpq_class q(num, den);
    q.canonicalize();
    return Rat(q);
}

std::string Rat::str() const {
    if (den() == 1) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace polylink
