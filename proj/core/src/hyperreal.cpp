#include "neutro/hyperreal.hpp"

#include "neutro/error.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace neutro {

namespace {

// Folds -0.0 into +0.0 so that equal values also serialize identically.
double normalize_zero(double x) { return x + 0.0; }

std::strong_ordering order_of(double a, double b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

} // namespace

NonStdValue::NonStdValue(double standard) : NonStdValue(standard, 0.0) {}

NonStdValue::NonStdValue(double standard, double coeff)
    : standard_(normalize_zero(standard)), coeff_(normalize_zero(coeff)) {
    if (!std::isfinite(standard) || !std::isfinite(coeff)) {
        throw Error("non-finite value");
    }
}

std::strong_ordering operator<=>(const NonStdValue &a,
                                 const NonStdValue &b) noexcept {
    if (auto c = order_of(a.standard_, b.standard_); c != 0) return c;
    return order_of(a.coeff_, b.coeff_);
}

NonStdValue operator+(const NonStdValue &a, const NonStdValue &b) {
    return {a.standard() + b.standard(), a.coeff() + b.coeff()};
}

NonStdValue operator-(const NonStdValue &a, const NonStdValue &b) {
    return {a.standard() - b.standard(), a.coeff() - b.coeff()};
}

NonStdValue operator*(const NonStdValue &a, const NonStdValue &b) {
    const double first_order =
        a.standard() * b.coeff() + b.standard() * a.coeff();
    const double second_order = a.coeff() * b.coeff();
    const double coeff =
        (first_order == 0.0 && second_order != 0.0) ? second_order : first_order;
    return {a.standard() * b.standard(), coeff};
}

NonStdValue div_scalar(const NonStdValue &a, double k) {
    if (k == 0.0) throw Error("division by zero scalar");
    return {a.standard() / k, a.coeff() / k};
}

NonStdValue clamp_unit(const NonStdValue &a) {
    static const NonStdValue lower = NonStdValue::zero_minus();
    static const NonStdValue upper = NonStdValue::one_plus();
    if (a < lower) return lower;
    if (a > upper) return upper;
    return a;
}

bool approx_equal(const NonStdValue &a, const NonStdValue &b,
                  double tol) noexcept {
    return std::fabs(a.standard() - b.standard()) <= tol &&
           std::fabs(a.coeff() - b.coeff()) <= tol;
}

std::string format_real(double x) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    if (ec != std::errc{}) return "nan";
    return {buf.data(), end};
}

std::string to_string(const NonStdValue &v) {
    std::string out = format_real(v.standard());
    if (v.coeff() == 0.0) return out;
    out += v.coeff() > 0 ? "^+" : "^-";
    const double magnitude = std::fabs(v.coeff());
    if (magnitude != 1.0) out += format_real(magnitude);
    return out;
}

std::string to_debug_string(const NonStdValue &v) {
    if (v.coeff() == 0.0) return format_real(v.standard());
    return "(" + format_real(v.standard()) + ")" + (v.coeff() > 0 ? "^+" : "^-") +
           format_real(std::fabs(v.coeff()));
}

} // namespace neutro
