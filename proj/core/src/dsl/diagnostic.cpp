#include "neutro/dsl/diagnostic.hpp"

namespace neutro::dsl {

std::string render(const Diagnostic &d, std::string_view file) {
    return std::string(file) + ":" + std::to_string(d.line) + ":" + std::to_string(d.column) +
           ": " + d.message;
}

} // namespace neutro::dsl
