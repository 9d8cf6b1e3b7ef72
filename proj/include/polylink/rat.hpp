/* Apache License, Version 2.0 */
#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>

namespace polylink {

// Exact rational scalar; the carrier for every coordinate in the library.
// Always canonical (gcd(|num|, den) = 1, den > 0). No operation rounds.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(static_cast<signed long>(n)) {}
    Rat(long num, long den);
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Accepts "p/q" with integer p, q (q != 0) and finite decimals
    /// ("2", "-0.125", ".5"); both convert exactly. Throws ParseError.
    static Rat parse(std::string_view text);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    Rat abs() const { return Rat(mpq_class(::abs(q_))); }
    bool is_zero() const { return sign() == 0; }

    double to_double() const { return q_.get_d(); }
    /// Exact text form: "p" or "p/q".
    std::string str() const;

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r);

private:
    mpq_class q_;
};

inline const Rat& min(const Rat& a, const Rat& b) { return b < a ? b : a; }
inline const Rat& max(const Rat& a, const Rat& b) { return a < b ? b : a; }

}  // namespace polylink
