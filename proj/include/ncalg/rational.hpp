#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace ncalg {

// Arbitrary-precision rational scalar. Always kept in lowest terms with a
// positive denominator; the default value is 0 (= 0/1).
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rat(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    // Accepts "p", "-p" or "p/q" with arbitrary-precision decimal digits.
    static Rat from_string(std::string_view s);

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat abs() const { return raw(mpq_class(::abs(v_))); }

    std::string str() const {
        return is_integer() ? v_.get_num().get_str() : v_.get_str();
    }

    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o) {
        if (o.is_zero()) throw std::domain_error("Rat: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rat operator+(const Rat& a, const Rat& b) { return raw(mpq_class(a.v_ + b.v_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return raw(mpq_class(a.v_ - b.v_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return raw(mpq_class(a.v_ * b.v_)); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        return raw(mpq_class(a.v_ / b.v_));
    }
    friend Rat operator-(const Rat& a) { return raw(mpq_class(-a.v_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    // GMP arithmetic on canonical operands yields canonical results, so
    // internal results skip the extra canonicalize pass.
    static Rat raw(mpq_class v) {
        Rat r;
        r.v_ = std::move(v);
        return r;
    }

    mpq_class v_;
};

inline Rat Rat::from_string(std::string_view s) {
    auto parse_int = [&](std::string_view t) {
        std::string_view digits = t;
        bool neg = false;
        if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
            neg = digits[0] == '-';
            digits.remove_prefix(1);
        }
        if (digits.empty())
            throw std::invalid_argument("Rat: bad rational literal '" + std::string(s) + "'");
        for (char c : digits)
            if (c < '0' || c > '9')
                throw std::invalid_argument("Rat: bad rational literal '" + std::string(s) + "'");
        mpz_class z{std::string(digits), 10};  // base 0 would reject "069" as octal
        return neg ? mpz_class(-z) : z;
    };
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return raw(mpq_class(parse_int(s), 1));
    mpz_class den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::domain_error("Rat: zero denominator in '" + std::string(s) + "'");
    mpq_class v(parse_int(s.substr(0, slash)), den);
    v.canonicalize();
    return raw(std::move(v));
}

}  // namespace ncalg
