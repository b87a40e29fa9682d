#pragma once

#include <stdexcept>
#include <string>

namespace navlab {

/// Exact number of the form (r + s*sqrt(D))/2 with integers r, s, D.
/// Canonical form: square factors of D are folded into s; a perfect-square
/// radicand collapses to a rational (s = 0, D = 0). Negative D denotes
/// i*sqrt(|D|) with the principal branch. All arithmetic is exact; mixing
/// two genuinely irrational values with different radicands is a domain
/// error (sums leave the quadratic field).
class QuadraticValue {
public:
    QuadraticValue() = default;

    static QuadraticValue integer(long long v) { return QuadraticValue(2 * v, 0, 0); }

    /// (r + s*sqrt(D))/2
    static QuadraticValue half(long long r, long long s, long long D) {
        return QuadraticValue(r, s, D);
    }

    /// sqrt(D) itself.
    static QuadraticValue sqrt_of(long long D) { return QuadraticValue(0, 2, D); }

    long long r() const { return r_; }
    long long s() const { return s_; }
    long long radicand() const { return rad_; }

    bool is_rational() const { return s_ == 0; }
    bool is_zero() const { return r_ == 0 && s_ == 0; }

    long long integer_value() const {
        if (s_ != 0 || r_ % 2 != 0)
            throw std::domain_error("QuadraticValue: not a rational integer");
        return r_ / 2;
    }

    /// Complex conjugate: flips the irrational part when D < 0.
    QuadraticValue conj() const {
        return rad_ < 0 ? QuadraticValue(r_, -s_, rad_) : *this;
    }

    QuadraticValue operator-() const { return QuadraticValue(-r_, -s_, rad_); }

    friend QuadraticValue operator+(const QuadraticValue& a, const QuadraticValue& b) {
        return QuadraticValue(a.r_ + b.r_, a.s_ + b.s_, common_radicand(a, b));
    }
    friend QuadraticValue operator-(const QuadraticValue& a, const QuadraticValue& b) {
        return a + (-b);
    }
    friend QuadraticValue operator*(const QuadraticValue& a, const QuadraticValue& b) {
        const long long d = common_radicand(a, b);
        const long long nr = a.r_ * b.r_ + a.s_ * b.s_ * d;
        const long long ns = a.r_ * b.s_ + a.s_ * b.r_;
        if (nr % 2 != 0 || ns % 2 != 0)
            throw std::logic_error("QuadraticValue: product left the half-integer ring");
        return QuadraticValue(nr / 2, ns / 2, d);
    }

    bool operator==(const QuadraticValue&) const = default;

    /// "(r+s√D)/2" with the coefficient 1 omitted; rationals print plainly.
    std::string str() const {
        if (s_ == 0) {
            if (r_ % 2 == 0) return std::to_string(r_ / 2);
            return std::to_string(r_) + "/2";
        }
        std::string out = "(" + std::to_string(r_);
        out += s_ < 0 ? "-" : "+";
        long long mag = s_ < 0 ? -s_ : s_;
        if (mag != 1) out += std::to_string(mag);
        out += "√" + std::to_string(rad_) + ")/2";
        return out;
    }

private:
    QuadraticValue(long long r, long long s, long long rad) : r_(r), s_(s), rad_(rad) {
        canonicalize();
    }

    static long long common_radicand(const QuadraticValue& a, const QuadraticValue& b) {
        if (a.s_ != 0 && b.s_ != 0 && a.rad_ != b.rad_)
            throw std::domain_error("QuadraticValue: incompatible radicands");
        return a.s_ != 0 ? a.rad_ : b.rad_;
    }

    void canonicalize() {
        if (s_ == 0 || rad_ == 0) {
            if (rad_ == 0 && s_ != 0)
                r_ += 0;  // s*sqrt(0) contributes nothing
            s_ = 0;
            rad_ = 0;
            return;
        }
        long long m = rad_ < 0 ? -rad_ : rad_;
        for (long long d = 2; d * d <= m; ++d)
            while (m % (d * d) == 0) {
                m /= d * d;
                s_ *= d;
            }
        rad_ = rad_ < 0 ? -m : m;
        if (rad_ == 1) {
            r_ += s_;
            s_ = 0;
            rad_ = 0;
        }
    }

    long long r_ = 0, s_ = 0, rad_ = 0;
};

}  // namespace navlab
