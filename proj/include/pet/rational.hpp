#ifndef PET_RATIONAL_HPP
#define PET_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace pet {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational with unbounded integer numerator/denominator.
// Always stored reduced with denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        reduce();
    }
    Rational(long long n, long long d) : Rational(BigInt(n), BigInt(d)) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return Rational(-num_, den_, already_reduced{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        BigInt lhs = a.num_ * b.den_;
        BigInt rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // "p/q", or just "p" for integers.
    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    // "a+b/c" for values above 1, e.g. 50/21 -> "2+8/21".
    std::string mixed_str() const {
        if (den_ == 1) return num_.str();
        if (num_ > den_) {
            BigInt whole = num_ / den_;
            BigInt rest = num_ % den_;
            return whole.str() + "+" + rest.str() + "/" + den_.str();
        }
        return str();
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

private:
    struct already_reduced {};
    Rational(BigInt n, BigInt d, already_reduced) : num_(std::move(n)), den_(std::move(d)) {}

    void reduce() {
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_;
    BigInt den_;
};

inline Rational rat_max(const Rational& a, const Rational& b) { return a < b ? b : a; }
inline Rational rat_min(const Rational& a, const Rational& b) { return b < a ? b : a; }

}  // namespace pet

#endif
