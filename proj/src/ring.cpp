#include "latgb/ring.hpp"

#include <algorithm>
#include <set>

namespace latgb {

std::string to_string(const MonomialOrder& order) {
    switch (order.kind) {
        case OrderKind::lex:
            return "lex";
        case OrderKind::grevlex:
            return "grevlex";
        case OrderKind::block:
            return "block(" + std::to_string(order.block_split) + ")";
    }
    return "?";
}

std::int64_t Monomial::degree() const {
    std::int64_t d = 0;
    for (auto e : exponents) d += e;
    return d;
}

bool Monomial::is_one() const {
    return std::all_of(exponents.begin(), exponents.end(),
                       [](std::int64_t e) { return e == 0; });
}

static void check_arity(const Monomial& a, const Monomial& b, const char* who) {
    if (a.nvars() != b.nvars())
        throw precondition_error(std::string(who) + ": arity mismatch");
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    check_arity(a, b, "mono_mul");
    Monomial r = a;
    for (int i = 0; i < b.nvars(); ++i) r.exponents[i] += b.exponents[i];
    return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
    check_arity(a, b, "mono_div");
    Monomial r = a;
    for (int i = 0; i < b.nvars(); ++i) {
        r.exponents[i] -= b.exponents[i];
        if (r.exponents[i] < 0)
            throw precondition_error("mono_div: not divisible");
    }
    return r;
}

bool mono_divides(const Monomial& a, const Monomial& b) {
    check_arity(a, b, "mono_divides");
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exponents[i] > b.exponents[i]) return false;
    return true;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    check_arity(a, b, "mono_lcm");
    Monomial r = a;
    for (int i = 0; i < b.nvars(); ++i)
        r.exponents[i] = std::max(r.exponents[i], b.exponents[i]);
    return r;
}

bool mono_coprime(const Monomial& a, const Monomial& b) {
    check_arity(a, b, "mono_coprime");
    for (int i = 0; i < a.nvars(); ++i)
        if (a.exponents[i] > 0 && b.exponents[i] > 0) return false;
    return true;
}

// grevlex: higher total degree wins; on ties the monomial with the smaller
// exponent at the last differing position is the larger one.
static std::strong_ordering cmp_grevlex_range(const Monomial& a, const Monomial& b,
                                              int lo, int hi) {
    std::int64_t da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
        da += a.exponents[i];
        db += b.exponents[i];
    }
    if (da != db) return da <=> db;
    for (int i = hi - 1; i >= lo; --i) {
        if (a.exponents[i] != b.exponents[i])
            return a.exponents[i] < b.exponents[i] ? std::strong_ordering::greater
                                                   : std::strong_ordering::less;
    }
    return std::strong_ordering::equal;
}

static std::strong_ordering cmp_lex_range(const Monomial& a, const Monomial& b,
                                          int lo, int hi) {
    for (int i = lo; i < hi; ++i)
        if (a.exponents[i] != b.exponents[i]) return a.exponents[i] <=> b.exponents[i];
    return std::strong_ordering::equal;
}

std::strong_ordering cmp_monomials(const Monomial& a, const Monomial& b,
                                   const MonomialOrder& order) {
    check_arity(a, b, "cmp_monomials");
    const int n = a.nvars();
    switch (order.kind) {
        case OrderKind::lex:
            return cmp_lex_range(a, b, 0, n);
        case OrderKind::grevlex:
            return cmp_grevlex_range(a, b, 0, n);
        case OrderKind::block: {
            const int s = order.block_split;
            if (s < 1 || s >= n)
                throw precondition_error("cmp_monomials: bad block split");
            auto c = cmp_lex_range(a, b, 0, s);
            if (c != std::strong_ordering::equal) return c;
            return cmp_grevlex_range(a, b, s, n);
        }
    }
    throw precondition_error("cmp_monomials: bad order kind");
}

RingContext::RingContext(std::vector<std::string> vars, MonomialOrder ord)
    : variables(std::move(vars)), order(ord) {
    if (variables.empty())
        throw precondition_error("RingContext: need at least one variable");
    std::set<std::string> seen;
    for (const auto& v : variables) {
        if (v.empty()) throw precondition_error("RingContext: empty variable name");
        if (!seen.insert(v).second)
            throw precondition_error("RingContext: duplicate variable '" + v + "'");
    }
    if (order.kind == OrderKind::block &&
        (order.block_split < 1 || order.block_split >= nvars()))
        throw precondition_error("RingContext: block split out of range");
}

int RingContext::variable_index(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
        if (variables[static_cast<std::size_t>(i)] == name) return i;
    return -1;
}

}  // namespace latgb
