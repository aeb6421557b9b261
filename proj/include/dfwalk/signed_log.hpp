// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <numbers>

namespace dfwalk {

/// Real number stored as sign * exp(log_magnitude).
///
/// Covers magnitudes far outside double range; all index computations that
/// can overflow run in this representation. log_magnitude is meaningless
/// (and kept at -inf) when sign == 0.
class SignedLogValue {
public:
    constexpr SignedLogValue() = default;

    static constexpr SignedLogValue zero() { return {}; }

    static SignedLogValue from_log(int sign, double log_magnitude) {
        SignedLogValue v;
        if (sign == 0 || log_magnitude == -std::numeric_limits<double>::infinity()) {
            return v;
        }
        v.sign_ = sign > 0 ? 1 : -1;
        v.log_ = log_magnitude;
        return v;
    }

    static SignedLogValue from_double(double x) {
        if (x == 0.0) {
            return {};
        }
        return from_log(x > 0.0 ? 1 : -1, std::log(std::abs(x)));
    }

    constexpr int sign() const noexcept { return sign_; }
    constexpr double log_magnitude() const noexcept { return log_; }
    constexpr bool is_zero() const noexcept { return sign_ == 0; }

    /// Linear value; +-inf when the magnitude exceeds double range.
    double to_double() const { return sign_ == 0 ? 0.0 : sign_ * std::exp(log_); }

    double log10_magnitude() const { return log_ / std::numbers::ln10; }

    bool is_finite_as_double() const {
        return sign_ == 0 || log_ < std::log(std::numeric_limits<double>::max());
    }

    SignedLogValue operator-() const {
        SignedLogValue v = *this;
        v.sign_ = -v.sign_;
        return v;
    }

    friend SignedLogValue operator*(SignedLogValue a, SignedLogValue b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        return from_log(a.sign_ * b.sign_, a.log_ + b.log_);
    }

    friend SignedLogValue operator/(SignedLogValue a, SignedLogValue b) {
        return a * SignedLogValue::from_log(b.sign_, -b.log_);
    }

    friend SignedLogValue operator+(SignedLogValue a, SignedLogValue b);
    friend SignedLogValue operator-(SignedLogValue a, SignedLogValue b) { return a + (-b); }

    SignedLogValue& operator+=(SignedLogValue b) { return *this = *this + b; }
    SignedLogValue& operator*=(SignedLogValue b) { return *this = *this * b; }

    friend std::partial_ordering operator<=>(SignedLogValue a, SignedLogValue b) {
        if (a.sign_ != b.sign_) {
            return a.sign_ <=> b.sign_;
        }
        if (a.sign_ == 0) {
            return std::partial_ordering::equivalent;
        }
        return a.sign_ > 0 ? (a.log_ <=> b.log_) : (b.log_ <=> a.log_);
    }

    friend bool operator==(SignedLogValue a, SignedLogValue b) {
        return a.sign_ == b.sign_ && (a.sign_ == 0 || a.log_ == b.log_);
    }

private:
    int sign_ = 0;
    double log_ = -std::numeric_limits<double>::infinity();
};

/// Streaming signed log-sum-exp. Positive and negative contributions are
/// accumulated separately, each relative to its running maximum, and combined
/// once at the end.
class SignedLogSum {
public:
    void add(SignedLogValue v) {
        if (v.is_zero()) {
            return;
        }
        (v.sign() > 0 ? pos_ : neg_).add(v.log_magnitude());
    }

    void add_log(int sign, double log_magnitude) { add(SignedLogValue::from_log(sign, log_magnitude)); }

    SignedLogValue result() const {
        const double p = pos_.log();
        const double n = neg_.log();
        constexpr double ninf = -std::numeric_limits<double>::infinity();
        if (n == ninf) {
            return SignedLogValue::from_log(1, p);
        }
        if (p == ninf) {
            return SignedLogValue::from_log(-1, n);
        }
        if (p == n) {
            return SignedLogValue::zero();
        }
        if (p > n) {
            return SignedLogValue::from_log(1, p + std::log1p(-std::exp(n - p)));
        }
        return SignedLogValue::from_log(-1, n + std::log1p(-std::exp(p - n)));
    }

    /// log of the sum of absolute values seen so far.
    double log_abs_total() const {
        const double p = pos_.log();
        const double n = neg_.log();
        if (p == -std::numeric_limits<double>::infinity()) {
            return n;
        }
        if (n == -std::numeric_limits<double>::infinity()) {
            return p;
        }
        const double m = std::max(p, n);
        return m + std::log(std::exp(p - m) + std::exp(n - m));
    }

private:
    struct OneSided {
        double max = -std::numeric_limits<double>::infinity();
        double scaled = 0.0;  // sum of exp(x - max)

        void add(double x) {
            if (x <= max) {
                scaled += std::exp(x - max);
            } else {
                scaled = scaled * std::exp(max - x) + 1.0;
                max = x;
            }
        }

        double log() const {
            return scaled == 0.0 ? -std::numeric_limits<double>::infinity() : max + std::log(scaled);
        }
    };

    OneSided pos_;
    OneSided neg_;
};

inline SignedLogValue operator+(SignedLogValue a, SignedLogValue b) {
    SignedLogSum s;
    s.add(a);
    s.add(b);
    return s.result();
}

} // namespace dfwalk
