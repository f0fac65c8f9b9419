#include "neutro/dsl/format.hpp"

namespace neutro::dsl {

std::string format(const IntervalUnion &s) {
    std::string out;
    if (s.parts().size() > 1 && s.all_points()) {
        out = "{";
        for (std::size_t k = 0; k < s.parts().size(); ++k) {
            if (k) out += ",";
            out += to_string(s.parts()[k].lo);
        }
        return out + "}";
    }
    for (std::size_t k = 0; k < s.parts().size(); ++k) {
        const auto &p = s.parts()[k];
        if (k) out += "|";
        if (p.is_point()) {
            out += to_string(p.lo);
        } else {
            out += "[" + to_string(p.lo) + "," + to_string(p.hi) + "]";
        }
    }
    return out;
}

std::string format(const NeutroTriple &x) {
    return "(" + format(x.truth()) + ", " + format(x.indeterminacy()) + ", " +
           format(x.falsity()) + ")";
}

std::string format(const NeutroSet &s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.universe().size(); ++k) {
        const auto &name = s.universe()[k];
        if (k) out += ", ";
        out += name + ": " + format(s.at(name));
    }
    return out + "}";
}

std::string format(const Classification &c) { return to_string(c); }

std::string format(bool b) { return b ? "true" : "false"; }

namespace {

int precedence(const Expr &e) {
    if (const auto *b = std::get_if<BinaryExpr>(&e.node)) {
        switch (b->op) {
        case BinaryOp::unite:
        case BinaryOp::difference: return 1;
        case BinaryOp::intersect: return 2;
        case BinaryOp::cartesian: return 3;
        }
    }
    return 4;
}

std::string_view symbol(BinaryOp op) {
    switch (op) {
    case BinaryOp::intersect: return " & ";
    case BinaryOp::unite: return " | ";
    case BinaryOp::difference: return " \\ ";
    case BinaryOp::cartesian: return " x ";
    }
    return " ? ";
}

std::string operand(const Expr &e, int min_precedence) {
    auto text = format(e);
    return precedence(e) < min_precedence ? "(" + text + ")" : text;
}

} // namespace

std::string format(const Expr &e) {
    return std::visit(
        [&](const auto &node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, NameRef>) {
                return node.name;
            } else if constexpr (std::is_same_v<T, ComplementExpr>) {
                return "complement(" + format(*node.operand) + ")";
            } else {
                // Left-associative: the right operand needs strictly higher precedence.
                const int p = precedence(e);
                return operand(*node.lhs, p) + std::string(symbol(node.op)) +
                       operand(*node.rhs, p + 1);
            }
        },
        e.node);
}

} // namespace neutro::dsl
