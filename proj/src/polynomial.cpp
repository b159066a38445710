#include "latgb/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace latgb {

static const Int kZero = 0;

Polynomial Polynomial::constant(int nvars, const Int& c) {
    Polynomial f(nvars);
    f.add_term(Monomial::one(nvars), c);
    return f;
}

Polynomial Polynomial::term(const Monomial& m, const Int& c) {
    Polynomial f(m.nvars());
    f.add_term(m, c);
    return f;
}

const Int& Polynomial::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? kZero : it->second;
}

void Polynomial::add_term(const Monomial& m, const Int& c) {
    if (m.nvars() != nvars_) throw precondition_error("add_term: arity mismatch");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
    if (g.nvars_ != nvars_) throw precondition_error("operator+=: arity mismatch");
    for (const auto& [m, c] : g.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
    if (g.nvars_ != nvars_) throw precondition_error("operator-=: arity mismatch");
    for (const auto& [m, c] : g.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    if (f.nvars_ != g.nvars_) throw precondition_error("operator*: arity mismatch");
    Polynomial r(f.nvars_);
    for (const auto& [mf, cf] : f.terms_)
        for (const auto& [mg, cg] : g.terms_) r.add_term(mono_mul(mf, mg), cf * cg);
    return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Int& c) const {
    if (m.nvars() != nvars_) throw precondition_error("mul_term: arity mismatch");
    Polynomial r(nvars_);
    if (sgn(c) == 0) return r;
    for (const auto& [mf, cf] : terms_) r.terms_.emplace(mono_mul(mf, m), cf * c);
    return r;
}

std::pair<Monomial, Int> Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty())
        throw precondition_error("leading_term: zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (cmp_monomials(it->first, best->first, order) == std::strong_ordering::greater)
            best = it;
    return {best->first, best->second};
}

Monomial Polynomial::leading_monomial(const MonomialOrder& order) const {
    return leading_term(order).first;
}

Int Polynomial::leading_coeff(const MonomialOrder& order) const {
    return leading_term(order).second;
}

std::vector<std::pair<Monomial, Int>> Polynomial::terms_descending(
    const MonomialOrder& order) const {
    std::vector<std::pair<Monomial, Int>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [&](const auto& a, const auto& b) {
        return cmp_monomials(a.first, b.first, order) == std::strong_ordering::greater;
    });
    return v;
}

std::string Polynomial::to_string(const RingContext& ctx) const {
    if (ctx.nvars() != nvars_) throw precondition_error("to_string: arity mismatch");
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_descending(ctx.order)) {
        const bool neg = sgn(c) < 0;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        Int a = abs(c);
        if (m.is_one()) {
            out << a.get_str();
        } else {
            bool need_star = false;
            if (a != 1) {
                out << a.get_str();
                need_star = true;
            }
            for (int i = 0; i < nvars_; ++i) {
                const auto e = m.exponents[static_cast<std::size_t>(i)];
                if (e == 0) continue;
                if (need_star) out << "*";
                out << ctx.variables[static_cast<std::size_t>(i)];
                if (e > 1) out << "^" << e;
                need_star = true;
            }
        }
    }
    return out.str();
}

std::strong_ordering compare_polynomials(const Polynomial& a, const Polynomial& b,
                                         const MonomialOrder& order) {
    if (a.is_zero() || b.is_zero())
        return a.term_count() <=> b.term_count();
    auto ta = a.terms_descending(order);
    auto tb = b.terms_descending(order);
    const std::size_t n = std::min(ta.size(), tb.size());
    for (std::size_t i = 0; i < n; ++i) {
        auto c = cmp_monomials(ta[i].first, tb[i].first, order);
        if (c != std::strong_ordering::equal) return c;
        if (ta[i].second != tb[i].second)
            return ta[i].second < tb[i].second ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
    }
    return ta.size() <=> tb.size();
}

}  // namespace latgb
