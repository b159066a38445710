#include "latgb/lattice_ideal.hpp"

#include <algorithm>

#include "latgb/errors.hpp"

namespace latgb {

using Eigen::Index;

IntegerLattice saturate(const IntegerLattice& L) {
    if (L.rank() == 0) return L;
    const SmithDecomposition S = smith_decompose(L.basis);
    // The first `rank` rows of V^-1 span the rational span of the basis
    // intersected with the integer points.
    return make_lattice(L.ambient_dim, S.Vinv.topRows(static_cast<Index>(S.rank)));
}

bool is_saturated(const IntegerLattice& L) {
    if (L.rank() == 0) return true;
    const SNFResult s = smith_normal_form(L.basis);
    return std::all_of(s.invariant_factors.begin(), s.invariant_factors.end(),
                       [](const Int& d) { return d == 1; });
}

LatticeIdealSpec lattice_ideal_generators(const IntegerLattice& L,
                                          const RingContext& ctx) {
    if (L.ambient_dim != ctx.nvars())
        throw precondition_error(
            "lattice_ideal_generators: ambient dimension does not match ring");
    LatticeIdealSpec spec;
    spec.lattice = L;
    const int n = ctx.nvars();
    for (Index i = 0; i < L.basis.rows(); ++i) {
        Monomial plus = Monomial::one(n);
        Monomial minus = Monomial::one(n);
        for (Index j = 0; j < L.basis.cols(); ++j) {
            const Int& e = L.basis(i, j);
            if (sgn(e) > 0)
                plus.exponents[static_cast<std::size_t>(j)] = to_int64(e);
            else if (sgn(e) < 0)
                minus.exponents[static_cast<std::size_t>(j)] = to_int64(-e);
        }
        Polynomial b = Polynomial::term(plus, 1);
        b.add_term(minus, -1);
        spec.generators.push_back(std::move(b));
    }
    return spec;
}

namespace {

// A variable name not present in ctx, for the elimination block.
std::string fresh_variable_name(const RingContext& ctx) {
    std::string name = "w";
    while (ctx.variable_index(name) >= 0) name += "_";
    return name;
}

// Insert a zero exponent for the auxiliary variable at position 0.
Polynomial lift_to_aux(const Polynomial& f) {
    Polynomial out(f.nvars() + 1);
    for (const auto& [m, c] : f.terms()) {
        std::vector<std::int64_t> e;
        e.reserve(m.exponents.size() + 1);
        e.push_back(0);
        e.insert(e.end(), m.exponents.begin(), m.exponents.end());
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

Polynomial drop_aux(const Polynomial& f) {
    Polynomial out(f.nvars() - 1);
    for (const auto& [m, c] : f.terms()) {
        std::vector<std::int64_t> e(m.exponents.begin() + 1, m.exponents.end());
        out.add_term(Monomial(std::move(e)), c);
    }
    return out;
}

}  // namespace

GroebnerBasis toric_generators(const IntegerLattice& L, const RingContext& ctx,
                               const BuchbergerOptions& opt) {
    if (L.ambient_dim != ctx.nvars())
        throw precondition_error("toric_generators: ambient dimension does not match ring");
    if (L.rank() == 0) {
        GroebnerBasis empty;
        empty.order = ctx.order;
        empty.strong = empty.reduced = empty.short_reduced = true;
        return empty;
    }
    const LatticeIdealSpec spec = lattice_ideal_generators(saturate(L), ctx);

    // Eliminate an auxiliary variable w from <binomials, 1 - w*x_1...x_n>;
    // what survives in the x-block generates the saturation of the binomial
    // ideal by the product of all variables.
    std::vector<std::string> aux_vars;
    aux_vars.push_back(fresh_variable_name(ctx));
    aux_vars.insert(aux_vars.end(), ctx.variables.begin(), ctx.variables.end());
    const RingContext aux_ctx(aux_vars, MonomialOrder::block(1));

    std::vector<Polynomial> lifted;
    for (const auto& g : spec.generators) lifted.push_back(lift_to_aux(g));
    Polynomial sat_gen = Polynomial::constant(ctx.nvars() + 1, 1);
    sat_gen.add_term(
        Monomial(std::vector<std::int64_t>(static_cast<std::size_t>(ctx.nvars()) + 1, 1)),
        -1);
    lifted.push_back(std::move(sat_gen));

    const GroebnerBasis aux_gb = short_reduce(buchberger(lifted, aux_ctx, opt));

    std::vector<Polynomial> projected;
    for (const auto& g : aux_gb.elements) {
        const bool has_aux =
            std::any_of(g.terms().begin(), g.terms().end(),
                        [](const auto& t) { return t.first.exponents[0] != 0; });
        if (!has_aux) projected.push_back(drop_aux(g));
    }
    if (projected.empty())
        throw std::logic_error("toric_generators: elimination lost the ideal");
    return short_reduce(buchberger(projected, ctx, opt));
}

}  // namespace latgb
