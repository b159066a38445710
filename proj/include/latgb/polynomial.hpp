#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "latgb/bigint.hpp"
#include "latgb/ring.hpp"

namespace latgb {

// Sparse polynomial over Z.  Terms are keyed by exponent vector and never
// carry zero coefficients.  Ring arithmetic is order-independent; anything
// that involves leading terms takes the order explicitly.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Int>;

    explicit Polynomial(int nvars) : nvars_(nvars) {
        if (nvars < 1) throw precondition_error("Polynomial: nvars must be >= 1");
    }

    static Polynomial zero(int nvars) { return Polynomial(nvars); }
    static Polynomial constant(int nvars, const Int& c);
    static Polynomial term(const Monomial& m, const Int& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const TermMap& terms() const { return terms_; }
    // Coefficient of x^m (zero when the term is absent).
    const Int& coeff(const Monomial& m) const;

    // Adds c * x^m, dropping the term if the sum cancels.
    void add_term(const Monomial& m, const Int& c);

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);
    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    // f * c * x^m
    Polynomial mul_term(const Monomial& m, const Int& c) const;

    bool operator==(const Polynomial&) const = default;

    std::pair<Monomial, Int> leading_term(const MonomialOrder& order) const;
    Monomial leading_monomial(const MonomialOrder& order) const;
    Int leading_coeff(const MonomialOrder& order) const;

    std::vector<std::pair<Monomial, Int>> terms_descending(const MonomialOrder& order) const;

    // Canonical text form: terms descending under ctx.order, explicit '*' and
    // '^', coefficient 1 omitted, "a - b" spelling for negative coefficients.
    std::string to_string(const RingContext& ctx) const;

private:
    int nvars_;
    TermMap terms_;
};

// Deterministic total order on polynomials of one ring: leading monomial
// first, then term count, then the descending term lists elementwise.
// Used to pin basis orderings; zero sorts first.
std::strong_ordering compare_polynomials(const Polynomial& a, const Polynomial& b,
                                         const MonomialOrder& order);

}  // namespace latgb
