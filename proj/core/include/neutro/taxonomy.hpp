#pragma once

#include "neutro/neutroset.hpp"

#include <bitset>
#include <string>
#include <string_view>
#include <vector>

namespace neutro {

// Declaration order is the rendering order.
enum class Label : unsigned {
    classical,
    fuzzy,
    ifs_consistent,
    intuitionistic_incomplete,
    paraconsistent,
    faillibilist,
    dialetheist,
    paradoxist,
    pseudoparadoxist,
    tautological,
};
inline constexpr std::size_t label_count = 10;

enum class Flag : unsigned {
    overincluded,       // t > 1
    overindeterminate,  // i > 1
    overexcluded,       // f > 1
    undertrue,          // t < 0
    underindeterminate, // i < 0
    underfalse,         // f < 0
};
inline constexpr std::size_t flag_count = 6;

[[nodiscard]] std::string_view name(Label l) noexcept;
[[nodiscard]] std::string_view name(Flag f) noexcept;

// Labels overlap freely; a triple may be fuzzy, ifs_consistent and
// classical at once.
class Classification {
public:
    void add(Label l) { labels_.set(static_cast<std::size_t>(l)); }
    void add(Flag f) { flags_.set(static_cast<std::size_t>(f)); }

    [[nodiscard]] bool has(Label l) const { return labels_.test(static_cast<std::size_t>(l)); }
    [[nodiscard]] bool has(Flag f) const { return flags_.test(static_cast<std::size_t>(f)); }

    [[nodiscard]] std::vector<Label> labels() const;
    [[nodiscard]] std::vector<Flag> flags() const;

    friend bool operator==(const Classification &, const Classification &) = default;

private:
    std::bitset<label_count> labels_;
    std::bitset<flag_count> flags_;
};

[[nodiscard]] Classification classify_point(const NonStdValue &t, const NonStdValue &i,
                                            const NonStdValue &f);

// Singleton triples go through classify_point; anything else is classified
// by its bounds (n_sup against 1, sup I, and the component extremes).
[[nodiscard]] Classification classify_triple(const NeutroTriple &x);

// Standard endpoints in [0, 1] with sup T + sup I + sup F = 1 (and i < 1 for
// point triples).
[[nodiscard]] bool is_ifs_representable(const NeutroTriple &x);

// "intuitionistic_incomplete, faillibilist" or
// "paraconsistent, tautological [overincluded]"; "none" when no label holds.
[[nodiscard]] std::string to_string(const Classification &c);

} // namespace neutro
