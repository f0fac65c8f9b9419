#include "neutro/taxonomy.hpp"

#include <array>
#include <cmath>

namespace neutro {

namespace {

constexpr std::array<std::string_view, label_count> label_names{
    "classical",      "fuzzy",       "ifs_consistent", "intuitionistic_incomplete",
    "paraconsistent", "faillibilist", "dialetheist",   "paradoxist",
    "pseudoparadoxist", "tautological",
};

constexpr std::array<std::string_view, flag_count> flag_names{
    "overincluded", "overindeterminate", "overexcluded",
    "undertrue",    "underindeterminate", "underfalse",
};

// Standard parts are snapped to a 1e-12 grid before any comparison so that
// 0.1 + 0.2 + 0.7 counts as exactly 1.
double snap(double x) { return std::round(x * 1e12) / 1e12; }

NonStdValue snap(const NonStdValue &v) { return {snap(v.standard()), v.coeff()}; }

const NonStdValue zero{0.0};
const NonStdValue one{1.0};

void add_flags(Classification &c, const NonStdValue &t_hi, const NonStdValue &i_hi,
               const NonStdValue &f_hi, const NonStdValue &t_lo, const NonStdValue &i_lo,
               const NonStdValue &f_lo) {
    if (t_hi > one) c.add(Flag::overincluded);
    if (i_hi > one) c.add(Flag::overindeterminate);
    if (f_hi > one) c.add(Flag::overexcluded);
    if (t_lo < zero) c.add(Flag::undertrue);
    if (i_lo < zero) c.add(Flag::underindeterminate);
    if (f_lo < zero) c.add(Flag::underfalse);
}

bool within_standard_unit(const IntervalUnion &s) {
    return snap(s.inf()) >= zero && snap(s.sup()) <= one;
}

} // namespace

std::string_view name(Label l) noexcept { return label_names[static_cast<std::size_t>(l)]; }
std::string_view name(Flag f) noexcept { return flag_names[static_cast<std::size_t>(f)]; }

std::vector<Label> Classification::labels() const {
    std::vector<Label> out;
    for (std::size_t k = 0; k < label_count; ++k) {
        if (labels_.test(k)) out.push_back(static_cast<Label>(k));
    }
    return out;
}

std::vector<Flag> Classification::flags() const {
    std::vector<Flag> out;
    for (std::size_t k = 0; k < flag_count; ++k) {
        if (flags_.test(k)) out.push_back(static_cast<Flag>(k));
    }
    return out;
}

Classification classify_point(const NonStdValue &t_raw, const NonStdValue &i_raw,
                              const NonStdValue &f_raw) {
    const auto t = snap(t_raw);
    const auto i = snap(i_raw);
    const auto f = snap(f_raw);
    const double n = snap(t.standard() + i.standard() + f.standard());
    const double tf = snap(t.standard() + f.standard());
    const bool t_binary = t == zero || t == one;
    const bool f_binary = f == zero || f == one;

    Classification c;
    if (n == 1.0 && i == zero && t_binary && f_binary) c.add(Label::classical);
    if (n == 1.0 && i == zero) c.add(Label::fuzzy);
    if (n == 1.0 && zero <= i && i < one) c.add(Label::ifs_consistent);
    if (n < 1.0) c.add(Label::intuitionistic_incomplete);
    if (n > 1.0) c.add(Label::paraconsistent);
    if (i > zero) c.add(Label::faillibilist);
    if (t == one && f == one && i == zero) c.add(Label::dialetheist);
    if (t == one && f == one) c.add(Label::paradoxist);
    if (zero < i && i < one && tf > 1.0) c.add(Label::pseudoparadoxist);
    if (i < zero || t > one) c.add(Label::tautological);
    add_flags(c, t, i, f, t, i, f);
    return c;
}

Classification classify_triple(const NeutroTriple &x) {
    if (x.is_point()) {
        return classify_point(x.truth().inf(), x.indeterminacy().inf(), x.falsity().inf());
    }
    const double n_sup = snap(n_bounds(x).n_sup.standard());
    const bool in_unit = within_standard_unit(x.truth()) &&
                         within_standard_unit(x.indeterminacy()) &&
                         within_standard_unit(x.falsity());

    Classification c;
    if (n_sup > 1.0) c.add(Label::paraconsistent);
    if (n_sup < 1.0) c.add(Label::intuitionistic_incomplete);
    if (n_sup == 1.0 && in_unit) c.add(Label::ifs_consistent);
    if (snap(x.indeterminacy().sup()) > zero) c.add(Label::faillibilist);
    add_flags(c, snap(x.truth().sup()), snap(x.indeterminacy().sup()),
              snap(x.falsity().sup()), snap(x.truth().inf()),
              snap(x.indeterminacy().inf()), snap(x.falsity().inf()));
    return c;
}

bool is_ifs_representable(const NeutroTriple &x) {
    for (const auto *c : {&x.truth(), &x.indeterminacy(), &x.falsity()}) {
        for (const auto &p : c->parts()) {
            if (!p.lo.is_standard() || !p.hi.is_standard()) return false;
        }
        if (!within_standard_unit(*c)) return false;
    }
    if (x.is_point() && snap(x.indeterminacy().inf()) >= one) return false;
    return snap(n_bounds(x).n_sup.standard()) == 1.0;
}

std::string to_string(const Classification &c) {
    std::string out;
    for (auto l : c.labels()) {
        if (!out.empty()) out += ", ";
        out += name(l);
    }
    if (out.empty()) out = "none";
    const auto flags = c.flags();
    if (!flags.empty()) {
        out += " [";
        for (std::size_t k = 0; k < flags.size(); ++k) {
            if (k) out += ", ";
            out += name(flags[k]);
        }
        out += "]";
    }
    return out;
}

} // namespace neutro
