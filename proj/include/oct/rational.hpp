#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace oct {

// Exact rational number on 64-bit numerator/denominator, always normalized:
// gcd(|num|, den) == 1 and den > 0. Arithmetic goes through __int128 and
// throws std::overflow_error if a normalized result does not fit back into
// 64 bits. Weights in this project are tiny (|num| <= 100, den <= 5), so the
// limit is never reached in practice, but it is checked, not assumed.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(long long value) : num_(value) {}
    Rational(long long num, long long den) { assign(num, den); }

    long long num() const { return num_; }
    long long den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_positive() const { return num_ > 0; }
    bool is_negative() const { return num_ < 0; }

    // Accepts "7", "-7", "3/2", "-3/4" and decimal forms like "0.35".
    static Rational parse(std::string_view text);

    // Always "num/den", e.g. "4/1"; parses back exactly.
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    Rational& operator+=(const Rational& o) {
        if (den_ == 1 && o.den_ == 1) {  // fast path for integer weights
            long long s;
            if (__builtin_add_overflow(num_, o.num_, &s)) throw overflow();
            num_ = s;
            return *this;
        }
        assign(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
        return *this;
    }
    Rational& operator-=(const Rational& o) { return *this += Rational(-o.num_, o.den_); }
    Rational& operator*=(const Rational& o) {
        assign(i128(num_) * o.num_, i128(den_) * o.den_);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;  // both normalized
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.num_ << '/' << r.den_;
    }

private:
    using i128 = __int128;

    static std::overflow_error overflow() {
        return std::overflow_error("rational arithmetic overflowed 64 bits");
    }

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void assign(i128 num, i128 den) {
        if (den == 0) throw std::invalid_argument("rational with zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        if (num == 0) {
            num_ = 0;
            den_ = 1;
            return;
        }
        i128 g = gcd128(num, den);
        num /= g;
        den /= g;
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (num < lo || num > hi || den > hi) throw overflow();
        num_ = static_cast<long long>(num);
        den_ = static_cast<long long>(den);
    }

    long long num_ = 0;
    long long den_ = 1;
};

inline Rational Rational::parse(std::string_view text) {
    auto bad = [&] {
        return std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    };
    if (text.empty()) throw bad();
    std::size_t pos = 0;
    bool neg = false;
    if (text[pos] == '-' || text[pos] == '+') {
        neg = text[pos] == '-';
        ++pos;
    }
    auto digits = [&](long long& out) {
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') throw bad();
        i128 v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            v = v * 10 + (text[pos] - '0');
            if (v > INT64_MAX) throw overflow();
            ++pos;
        }
        out = static_cast<long long>(v);
    };
    long long whole = 0;
    digits(whole);
    if (pos == text.size()) return Rational(neg ? -whole : whole);
    if (text[pos] == '/') {
        ++pos;
        long long den = 0;
        digits(den);
        if (pos != text.size()) throw bad();
        return Rational(neg ? -whole : whole, den);
    }
    if (text[pos] == '.') {
        ++pos;
        i128 num = whole, den = 1;
        if (pos >= text.size()) throw bad();
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            num = num * 10 + (text[pos] - '0');
            den *= 10;
            if (num > INT64_MAX || den > INT64_MAX) throw overflow();
            ++pos;
        }
        if (pos != text.size()) throw bad();
        return Rational(neg ? -static_cast<long long>(num) : static_cast<long long>(num),
                        static_cast<long long>(den));
    }
    throw bad();
}

}  // namespace oct

template <>
struct std::hash<oct::Rational> {
    std::size_t operator()(const oct::Rational& r) const noexcept {
        std::uint64_t h = static_cast<std::uint64_t>(r.num()) * 0x9e3779b97f4a7c15ULL;
        h ^= static_cast<std::uint64_t>(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};
