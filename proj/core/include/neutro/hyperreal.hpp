#pragma once

#include <compare>
#include <string>

namespace neutro {

// A non-standard scalar r + k*eps, truncated after the first infinitesimal
// order. Covers 0^- = (0, -1), 1^+ = (1, +1) and every plain real (r, 0).
//
// Ordering is lexicographic on (standard, coeff): the standard part dominates
// and the coefficient decides between values in the same monad.
class NonStdValue {
public:
    constexpr NonStdValue() noexcept = default;

    // Implicit on purpose: a plain real is a non-standard value with no
    // infinitesimal part.
    NonStdValue(double standard); // NOLINT(google-explicit-constructor)
    NonStdValue(double standard, double coeff);

    static NonStdValue zero_minus() { return {0.0, -1.0}; }
    static NonStdValue one_plus() { return {1.0, 1.0}; }

    [[nodiscard]] double standard() const noexcept { return standard_; }
    [[nodiscard]] double coeff() const noexcept { return coeff_; }
    [[nodiscard]] bool is_standard() const noexcept { return coeff_ == 0.0; }

    friend bool operator==(const NonStdValue &, const NonStdValue &) = default;
    friend std::strong_ordering operator<=>(const NonStdValue &a,
                                            const NonStdValue &b) noexcept;

private:
    double standard_ = 0.0;
    double coeff_ = 0.0;
};

[[nodiscard]] NonStdValue operator+(const NonStdValue &a, const NonStdValue &b);
[[nodiscard]] NonStdValue operator-(const NonStdValue &a, const NonStdValue &b);

// Product truncated to first order. When the first-order term cancels while
// both factors carry an infinitesimal, the sign of the eps^2 term is kept in
// the eps slot so that e.g. 0^- * 0^- stays strictly above 0.
[[nodiscard]] NonStdValue operator*(const NonStdValue &a, const NonStdValue &b);

// Throws neutro::Error("division by zero scalar") when k == 0.
[[nodiscard]] NonStdValue div_scalar(const NonStdValue &a, double k);

[[nodiscard]] inline std::strong_ordering compare(const NonStdValue &a,
                                                  const NonStdValue &b) noexcept {
    return a <=> b;
}

// Replaces anything below 0^- with 0^- and anything above 1^+ with 1^+.
// The boundary values themselves pass through.
[[nodiscard]] NonStdValue clamp_unit(const NonStdValue &a);

[[nodiscard]] bool approx_equal(const NonStdValue &a, const NonStdValue &b,
                                double tol = 1e-12) noexcept;

// Shortest decimal text that parses back to the same double.
[[nodiscard]] std::string format_real(double x);

// Canonical text: "0.5", "0^-", "1^+", "0.7^+". Coefficients other than
// +-1 carry their magnitude after the marker: "0.5^+0.5", "1^+2".
[[nodiscard]] std::string to_string(const NonStdValue &v);

// "(0.5)^+0.5" style, for diagnostics only.
[[nodiscard]] std::string to_debug_string(const NonStdValue &v);

} // namespace neutro
