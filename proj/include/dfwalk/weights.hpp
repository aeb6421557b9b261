// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <string>
#include <string_view>
#include <type_traits>
#include <variant>

#include "errors.hpp"
#include "signed_log.hpp"
#include "special.hpp"

namespace dfwalk {

/// Scale of the tanh surrogate for erf, sqrt(pi) * ln 2. With this value
/// the integral of erf(x) - tanh(kTanhScale * x) over [0, inf) vanishes.
inline constexpr double kTanhScale = 1.2285713894277761007;

/// Walk weight c_k = 1/k!
struct Factorial {
    friend bool operator==(Factorial, Factorial) = default;
};

/// Walk weight c_k = 1/k!!
struct DoubleFactorial {
    friend bool operator==(DoubleFactorial, DoubleFactorial) = default;
};

/// Walk weight c_k = alpha^k (Katz).
struct Geometric {
    double alpha = 0.0;
    friend bool operator==(Geometric, Geometric) = default;
};

/// Walk weight c_k = 1/(k - t)! for k >= t and 0 below t.
struct ShiftedFactorial {
    unsigned t = 0;
    friend bool operator==(ShiftedFactorial, ShiftedFactorial) = default;
};

using WeightScheme = std::variant<Factorial, DoubleFactorial, Geometric, ShiftedFactorial>;

/// Closed form of the double-factorial matrix function: erf (exact) or the
/// tanh surrogate.
enum class DfForm { tanh, erf };

/// ln k! for k >= 0.
inline double log_factorial(long k) {
    return std::lgamma(static_cast<double>(k) + 1.0);
}

/// k!! for k >= -1, as a log-magnitude value. Uses (2m)!! = 2^m m! and
/// (2m+1)!! = (2m+1)! / (2^m m!).
inline SignedLogValue double_factorial(long k) {
    if (k < -1) {
        throw DomainError("double factorial needs k >= -1, got " + std::to_string(k));
    }
    if (k <= 0) {
        return SignedLogValue::from_log(1, 0.0);
    }
    const long m = k / 2;
    const double log_two_m = static_cast<double>(m) * std::numbers::ln2;
    if (k % 2 == 0) {
        return SignedLogValue::from_log(1, log_two_m + log_factorial(m));
    }
    return SignedLogValue::from_log(1, log_factorial(k) - log_two_m - log_factorial(m));
}

/// c_k for the given scheme (k >= 0). Zero below the shift for
/// ShiftedFactorial.
inline SignedLogValue coefficient(const WeightScheme& scheme, long k) {
    return std::visit(
        [k](const auto& s) -> SignedLogValue {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, Factorial>) {
                return SignedLogValue::from_log(1, -log_factorial(k));
            } else if constexpr (std::is_same_v<S, DoubleFactorial>) {
                return SignedLogValue::from_log(1, -double_factorial(k).log_magnitude());
            } else if constexpr (std::is_same_v<S, Geometric>) {
                if (!(s.alpha > 0.0)) {
                    throw DomainError("geometric weight needs alpha > 0");
                }
                return SignedLogValue::from_log(1, static_cast<double>(k) * std::log(s.alpha));
            } else {
                if (k < static_cast<long>(s.t)) {
                    return SignedLogValue::zero();
                }
                return SignedLogValue::from_log(1, -log_factorial(k - static_cast<long>(s.t)));
            }
        },
        scheme);
}

/// f(x) = sum_k c_k (beta x)^k for one eigenvalue x, in log form.
///
/// Factorial: e^{beta x}. DoubleFactorial: [1 + sqrt(pi/2) g(beta x / sqrt 2)]
/// e^{(beta x)^2 / 2} with g = erf or tanh(kTanhScale * .). Geometric:
/// 1 / (1 - alpha beta x), which needs alpha beta x < 1. ShiftedFactorial:
/// (beta x)^t e^{beta x}.
inline SignedLogValue spectral_weight(const WeightScheme& scheme, double x, double beta,
                                      DfForm form = DfForm::tanh) {
    const double y = beta * x;
    return std::visit(
        [&](const auto& s) -> SignedLogValue {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, Factorial>) {
                return SignedLogValue::from_log(1, y);
            } else if constexpr (std::is_same_v<S, DoubleFactorial>) {
                const double z = y / std::numbers::sqrt2;
                const double g = form == DfForm::erf ? erf_scalar(z) : std::tanh(kTanhScale * z);
                const double bracket = 1.0 + std::sqrt(std::numbers::pi / 2.0) * g;
                return SignedLogValue::from_double(bracket) * SignedLogValue::from_log(1, 0.5 * y * y);
            } else if constexpr (std::is_same_v<S, Geometric>) {
                const double d = 1.0 - s.alpha * y;
                if (!(d > 0.0)) {
                    throw DomainError("geometric series diverges: alpha * beta * lambda >= 1");
                }
                return SignedLogValue::from_log(1, -std::log(d));
            } else {
                if (s.t == 0) {
                    return SignedLogValue::from_log(1, y);
                }
                if (y == 0.0) {
                    return SignedLogValue::zero();
                }
                const int sign = (y < 0.0 && s.t % 2 == 1) ? -1 : 1;
                return SignedLogValue::from_log(sign, static_cast<double>(s.t) * std::log(std::abs(y)) + y);
            }
        },
        scheme);
}

inline std::string to_string(const WeightScheme& scheme) {
    return std::visit(
        [](const auto& s) -> std::string {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, Factorial>) {
                return "exp";
            } else if constexpr (std::is_same_v<S, DoubleFactorial>) {
                return "df";
            } else if constexpr (std::is_same_v<S, Geometric>) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "katz:%.17g", s.alpha);
                return buf;
            } else {
                return "shifted:" + std::to_string(s.t);
            }
        },
        scheme);
}

/// Parses "exp" | "factorial", "df" | "double-factorial", "katz:<alpha>" |
/// "geometric:<alpha>", "shifted:<t>".
inline WeightScheme parse_scheme(std::string_view text) {
    if (text == "exp" || text == "factorial") {
        return Factorial{};
    }
    if (text == "df" || text == "double-factorial") {
        return DoubleFactorial{};
    }
    const auto colon = text.find(':');
    if (colon != std::string_view::npos) {
        const std::string_view kind = text.substr(0, colon);
        const std::string arg(text.substr(colon + 1));
        char* end = nullptr;
        if (kind == "katz" || kind == "geometric") {
            const double alpha = std::strtod(arg.c_str(), &end);
            if (!arg.empty() && *end == '\0' && alpha > 0.0) {
                return Geometric{alpha};
            }
        } else if (kind == "shifted") {
            const long t = std::strtol(arg.c_str(), &end, 10);
            if (!arg.empty() && *end == '\0' && t >= 0) {
                return ShiftedFactorial{static_cast<unsigned>(t)};
            }
        }
    }
    throw DomainError("unknown weight scheme '" + std::string(text) +
                      "' (expected exp, df, katz:<alpha>, shifted:<t>)");
}

} // namespace dfwalk
