#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "latgb/errors.hpp"

namespace latgb {

enum class OrderKind { lex, grevlex, block };

// Total, multiplicative well-order on monomials.  `block` compares the first
// `block_split` variables by lex and breaks ties by grevlex on the rest; it
// is the elimination order used when projecting away auxiliary variables.
struct MonomialOrder {
    OrderKind kind = OrderKind::grevlex;
    int block_split = 0;  // meaningful only for block

    static MonomialOrder lex() { return {OrderKind::lex, 0}; }
    static MonomialOrder grevlex() { return {OrderKind::grevlex, 0}; }
    static MonomialOrder block(int split) { return {OrderKind::block, split}; }

    bool operator==(const MonomialOrder&) const = default;
};

std::string to_string(const MonomialOrder& order);

// Exponent vector of x^alpha.  The built-in comparison is a plain
// lexicographic storage order for containers, not the monomial order.
struct Monomial {
    std::vector<std::int64_t> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<std::int64_t> e) : exponents(std::move(e)) {}

    static Monomial one(int nvars) {
        return Monomial(std::vector<std::int64_t>(static_cast<std::size_t>(nvars), 0));
    }

    int nvars() const { return static_cast<int>(exponents.size()); }
    std::int64_t degree() const;
    bool is_one() const;

    auto operator<=>(const Monomial&) const = default;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
// a / b; throws precondition_error unless b divides a.
Monomial mono_div(const Monomial& a, const Monomial& b);
// Does a divide b?
bool mono_divides(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
bool mono_coprime(const Monomial& a, const Monomial& b);

std::strong_ordering cmp_monomials(const Monomial& a, const Monomial& b,
                                   const MonomialOrder& order);

// The ambient ring Z[x_1..x_n]: variable names plus the active order.
// Variables are listed from largest to smallest under the order.
struct RingContext {
    std::vector<std::string> variables;
    MonomialOrder order;

    explicit RingContext(std::vector<std::string> vars,
                         MonomialOrder ord = MonomialOrder::grevlex());

    int nvars() const { return static_cast<int>(variables.size()); }
    // Index of a variable name, or -1 when unknown.
    int variable_index(const std::string& name) const;
};

}  // namespace latgb
