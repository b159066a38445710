#include "latgb/quotient.hpp"

#include <algorithm>
#include <map>

#include "latgb/errors.hpp"

namespace latgb {

namespace {

void require_short_reduced(const GroebnerBasis& G, const char* who) {
    if (!G.short_reduced)
        throw precondition_error(std::string(who) + ": requires a short-reduced basis");
}

// Index of the variable when m is a pure power of one variable; -1 for 1
// and for mixed monomials.
int pure_power_variable(const Monomial& m) {
    int var = -1;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m.exponents[static_cast<std::size_t>(i)] == 0) continue;
        if (var >= 0) return -1;
        var = i;
    }
    return var;
}

constexpr std::int64_t kEnumerationGuard = 1000000;

}  // namespace

bool is_finitely_generated(const GroebnerBasis& G) {
    require_short_reduced(G, "is_finitely_generated");
    const int n = G.arity();
    std::vector<bool> bounded(static_cast<std::size_t>(n), false);
    for (const auto& g : G.elements) {
        auto [m, c] = g.leading_term(G.order);
        if (c != 1) continue;
        if (m.is_one()) return true;  // unit ideal: the quotient is trivial
        const int v = pure_power_variable(m);
        if (v >= 0) bounded[static_cast<std::size_t>(v)] = true;
    }
    return std::all_of(bounded.begin(), bounded.end(), [](bool b) { return b; });
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& G) {
    require_short_reduced(G, "standard_monomials");
    if (!is_monic(G))
        throw precondition_error("standard_monomials: basis is not monic");
    if (!is_finitely_generated(G))
        throw infinite_rank_error("standard_monomials: infinitely many standard monomials");
    const int n = G.arity();

    // Bounding box from the minimal monic pure powers of each variable.
    std::vector<std::int64_t> bound(static_cast<std::size_t>(n), -1);
    for (const auto& g : G.elements) {
        const Monomial m = g.leading_monomial(G.order);
        if (m.is_one()) return {};  // unit ideal
        const int v = pure_power_variable(m);
        if (v < 0) continue;
        const auto e = m.exponents[static_cast<std::size_t>(v)];
        auto& b = bound[static_cast<std::size_t>(v)];
        if (b < 0 || e < b) b = e;
    }
    std::int64_t box = 1;
    for (auto b : bound) {
        box *= b;  // b >= 1: a monic pure power exists for every variable
        if (box > kEnumerationGuard)
            throw resource_error("standard_monomials: enumeration too large");
    }

    std::vector<Monomial> lms;
    for (const auto& g : G.elements) lms.push_back(g.leading_monomial(G.order));

    std::vector<Monomial> out;
    Monomial cur = Monomial::one(n);
    while (true) {
        bool divisible = std::any_of(lms.begin(), lms.end(), [&](const Monomial& m) {
            return mono_divides(m, cur);
        });
        if (!divisible) out.push_back(cur);
        // Odometer over the box [0, bound_v) per variable.
        int k = n - 1;
        for (; k >= 0; --k) {
            auto& e = cur.exponents[static_cast<std::size_t>(k)];
            if (e + 1 < bound[static_cast<std::size_t>(k)]) {
                ++e;
                break;
            }
            e = 0;
        }
        if (k < 0) break;
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return cmp_monomials(a, b, G.order) == std::strong_ordering::less;
    });
    return out;
}

bool is_free(const GroebnerBasis& G) {
    require_short_reduced(G, "is_free");
    if (!is_monic(G)) return false;
    if (!is_finitely_generated(G))
        throw infinite_rank_error("is_free: free of infinite rank");
    return true;
}

QuotientStructure quotient_structure(const GroebnerBasis& G) {
    require_short_reduced(G, "quotient_structure");
    QuotientStructure Q;
    Q.finitely_generated = is_finitely_generated(G);
    const bool monic = is_monic(G);
    Q.free_module = monic && Q.finitely_generated;
    if (Q.free_module) {
        Q.basis_monomials = standard_monomials(G);
        Q.rank = static_cast<std::int64_t>(Q.basis_monomials.size());
    }
    if (!monic) {
        for (const auto& g : G.elements) {
            if (g.leading_coeff(G.order) == 1) continue;
            Q.coeff_ideals.push_back(leading_coeff_ideal(G, g.leading_monomial(G.order)));
        }
    }
    return Q;
}

VecZ phi_vector(const Polynomial& f, const QuotientStructure& Q,
                const GroebnerBasis& G) {
    if (!Q.free_module)
        throw precondition_error("phi_vector: quotient is not free of finite rank");
    if (f.nvars() != G.arity())
        throw precondition_error("phi_vector: arity mismatch");
    std::map<Monomial, Eigen::Index> where;
    for (Eigen::Index i = 0; i < static_cast<Eigen::Index>(Q.basis_monomials.size()); ++i)
        where.emplace(Q.basis_monomials[static_cast<std::size_t>(i)], i);
    const Polynomial r = normal_form(f, G);
    VecZ v = VecZ::Zero(static_cast<Eigen::Index>(Q.basis_monomials.size()));
    for (const auto& [m, c] : r.terms()) {
        auto it = where.find(m);
        if (it == where.end())
            throw std::logic_error("phi_vector: residue leaves the monomial basis");
        v(it->second) = c;
    }
    return v;
}

}  // namespace latgb
