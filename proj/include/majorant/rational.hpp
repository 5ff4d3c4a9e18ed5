#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace majorant {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational, the scalar every decision procedure
/// runs on. Always stored in lowest terms with a positive denominator.
/// Arithmetic never rounds; division by zero throws.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : v_(n) {}  // NOLINT: implicit by design, mirrors int literals
    Rational(const BigInt& n) : v_(n) {}
    Rational(long long num, long long den) : v_(Backend(num) / den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
    }
    Rational(const BigInt& num, const BigInt& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = Backend(num) / Backend(den);
    }

    /// Parses "p/q" or "p" (optionally signed). Decimal notation is rejected.
    static Rational parse(std::string_view text);

    [[nodiscard]] BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    [[nodiscard]] BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    [[nodiscard]] bool is_zero() const { return v_.is_zero(); }
    [[nodiscard]] int sign() const { return v_.sign(); }

    /// "p/q" when q != 1, plain integer string otherwise.
    [[nodiscard]] std::string str() const { return v_.str(); }

    [[nodiscard]] double to_double() const { return v_.convert_to<double>(); }

    /// Largest integer <= *this.
    [[nodiscard]] BigInt floor() const {
        BigInt q = numerator() / denominator();
        if (numerator() < 0 && q * denominator() != numerator()) --q;
        return q;
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(-v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = a.v_.compare(b.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }

private:
    using Backend = boost::multiprecision::number<
        boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
        boost::multiprecision::et_off>;

    explicit Rational(Backend v) : v_(std::move(v)) {}

    Backend v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// r^k for integer k (k < 0 requires r != 0).
inline Rational pow(const Rational& r, long long k) {
    if (k < 0) return Rational(1) / pow(r, -k);
    Rational acc(1), base = r;
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

inline Rational Rational::parse(std::string_view text) {
    const auto bad = [&](const char* why) {
        throw std::invalid_argument("Rational::parse(\"" + std::string(text) + "\"): " + why);
    };
    if (text.empty()) bad("empty string");
    std::size_t pos = 0;
    bool neg = false;
    if (text[pos] == '+' || text[pos] == '-') {
        neg = text[pos] == '-';
        ++pos;
    }
    const auto digits = [&](std::size_t from, std::size_t to) -> BigInt {
        if (from == to) bad("missing digits");
        BigInt acc = 0;
        for (std::size_t i = from; i < to; ++i) {
            if (text[i] < '0' || text[i] > '9') bad("only integers and p/q fractions are accepted");
            acc = acc * 10 + (text[i] - '0');
        }
        return acc;
    };
    const std::size_t slash = text.find('/', pos);
    BigInt num, den = 1;
    if (slash == std::string_view::npos) {
        num = digits(pos, text.size());
    } else {
        num = digits(pos, slash);
        den = digits(slash + 1, text.size());
        if (den == 0) bad("zero denominator");
    }
    if (neg) num = -num;
    return {num, den};
}

}  // namespace majorant

namespace Eigen {

template <>
struct NumTraits<majorant::Rational> {
    using Real = majorant::Rational;
    using NonInteger = majorant::Rational;
    using Literal = majorant::Rational;
    using Nested = majorant::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60,
    };
    static majorant::Rational epsilon() { return {}; }
    static majorant::Rational dummy_precision() { return {}; }
    static majorant::Rational highest() { return {}; }
    static majorant::Rational lowest() { return {}; }
    static int digits10() { return 0; }
};

}  // namespace Eigen
