#include "latgb/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "latgb/errors.hpp"

namespace latgb {

namespace {

// Strict "greater" comparator; makes std::map iterate leading term first.
struct OrderDesc {
    MonomialOrder order;
    bool operator()(const Monomial& a, const Monomial& b) const {
        return cmp_monomials(a, b, order) == std::strong_ordering::greater;
    }
};

Polynomial sign_normalized(const Polynomial& f, const MonomialOrder& order) {
    return sgn(f.leading_coeff(order)) < 0 ? -f : f;
}

void check_element_arity(const GroebnerBasis& G) {
    const int n = G.arity();
    for (const auto& g : G.elements)
        if (g.nvars() != n)
            throw precondition_error("basis elements have mixed arity");
}

}  // namespace

int GroebnerBasis::arity() const {
    if (elements.empty())
        throw precondition_error("arity: empty basis");
    return elements.front().nvars();
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
    if (G.elements.empty())
        throw precondition_error("normal_form: empty basis");
    check_element_arity(G);
    if (f.nvars() != G.arity())
        throw precondition_error("normal_form: arity mismatch");

    struct Reducer {
        Monomial lm;
        Int lc;
    };
    std::vector<Reducer> lts;
    lts.reserve(G.elements.size());
    for (const auto& g : G.elements) {
        if (g.is_zero())
            throw precondition_error("normal_form: zero basis element");
        auto [m, c] = g.leading_term(G.order);
        lts.push_back({std::move(m), std::move(c)});
    }

    std::map<Monomial, Int, OrderDesc> work{OrderDesc{G.order}};
    for (const auto& [m, c] : f.terms()) work.emplace(m, c);

    Polynomial rem(f.nvars());
    Int q, r;
    while (!work.empty()) {
        const Monomial mono = work.begin()->first;
        const Int coeff = work.begin()->second;
        bool rewrote = false;
        for (std::size_t i = 0; i < lts.size(); ++i) {
            if (!mono_divides(lts[i].lm, mono)) continue;
            euclid_divmod(coeff, lts[i].lc, q, r);
            if (sgn(q) == 0) continue;
            // work -= q * (mono / lm_i) * g_i
            const Monomial cof = mono_div(mono, lts[i].lm);
            for (const auto& [tm, tc] : G.elements[i].terms()) {
                const Monomial key = mono_mul(tm, cof);
                auto [it, inserted] = work.try_emplace(key, 0);
                it->second -= q * tc;
                if (sgn(it->second) == 0) work.erase(it);
            }
            rewrote = true;
            break;
        }
        if (!rewrote) {
            rem.add_term(mono, coeff);
            work.erase(work.begin());
        }
    }
    return rem;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero())
        throw precondition_error("s_polynomial: zero input");
    auto [mf, cf] = f.leading_term(order);
    auto [mg, cg] = g.leading_term(order);
    const Monomial L = mono_lcm(mf, mg);
    const Int ell = lcm_int(cf, cg);
    return f.mul_term(mono_div(L, mf), ell / cf) -
           g.mul_term(mono_div(L, mg), ell / cg);
}

Polynomial g_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrder& order) {
    if (f.is_zero() || g.is_zero())
        throw precondition_error("g_polynomial: zero input");
    auto [mf, cf] = f.leading_term(order);
    auto [mg, cg] = g.leading_term(order);
    const Monomial L = mono_lcm(mf, mg);
    Int d, u, v;
    ext_gcd(cf, cg, d, u, v);
    return f.mul_term(mono_div(L, mf), u) + g.mul_term(mono_div(L, mg), v);
}

namespace {

struct PairEntry {
    Monomial lcm;
    int i, j;
};

struct PairCmp {
    MonomialOrder order;
    bool operator()(const PairEntry& a, const PairEntry& b) const {
        auto c = cmp_monomials(a.lcm, b.lcm, order);
        if (c != std::strong_ordering::equal)
            return c == std::strong_ordering::less;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const RingContext& ctx,
                         const BuchbergerOptions& opt) {
    GroebnerBasis G;
    G.order = ctx.order;
    for (const auto& f : gens) {
        if (f.is_zero()) continue;
        if (f.nvars() != ctx.nvars())
            throw precondition_error("buchberger: generator arity mismatch");
        Polynomial g = sign_normalized(f, G.order);
        if (std::find(G.elements.begin(), G.elements.end(), g) == G.elements.end())
            G.elements.push_back(std::move(g));
    }
    if (G.elements.empty())
        throw precondition_error("buchberger: no nonzero generators");

    std::vector<Monomial> lms;
    std::vector<Int> lcs;
    for (const auto& g : G.elements) {
        auto [m, c] = g.leading_term(G.order);
        lms.push_back(std::move(m));
        lcs.push_back(std::move(c));
    }

    std::set<PairEntry, PairCmp> queue{PairCmp{G.order}};
    auto push_pairs_for = [&](int k) {
        for (int i = 0; i < k; ++i)
            queue.insert({mono_lcm(lms[static_cast<std::size_t>(i)],
                                   lms[static_cast<std::size_t>(k)]),
                          i, k});
    };
    for (int k = 1; k < static_cast<int>(G.elements.size()); ++k) push_pairs_for(k);

    auto add_element = [&](Polynomial h) {
        h = sign_normalized(h, G.order);
        auto [m, c] = h.leading_term(G.order);
        G.elements.push_back(std::move(h));
        lms.push_back(std::move(m));
        lcs.push_back(std::move(c));
        push_pairs_for(static_cast<int>(G.elements.size()) - 1);
    };

    std::int64_t steps = 0;
    while (!queue.empty()) {
        const PairEntry p = *queue.begin();
        queue.erase(queue.begin());
        if (++steps > opt.max_steps)
            throw resource_error("buchberger: pair limit exceeded");
        const auto i = static_cast<std::size_t>(p.i);
        const auto j = static_cast<std::size_t>(p.j);

        // The lcm-combination reduces to zero for free when both the leading
        // monomials and the leading coefficients are coprime.
        if (!(mono_coprime(lms[i], lms[j]) && gcd_int(lcs[i], lcs[j]) == 1)) {
            Polynomial h =
                normal_form(s_polynomial(G.elements[i], G.elements[j], G.order), G);
            if (!h.is_zero()) add_element(std::move(h));
        }
        // The gcd-combination is a monomial multiple of one element when
        // either leading coefficient divides the other.
        if (!(divides_int(lcs[i], lcs[j]) || divides_int(lcs[j], lcs[i]))) {
            Polynomial h =
                normal_form(g_polynomial(G.elements[i], G.elements[j], G.order), G);
            if (!h.is_zero()) add_element(std::move(h));
        }
    }

    std::sort(G.elements.begin(), G.elements.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return compare_polynomials(a, b, G.order) == std::strong_ordering::less;
              });
    G.strong = true;
    return G;
}

namespace {

// lt(a) strongly reducible by lt(b): monomial divides and coefficient divides.
bool lt_strongly_divides(const Monomial& mb, const Int& cb, const Monomial& ma,
                         const Int& ca) {
    return mono_divides(mb, ma) && divides_int(cb, ca);
}

}  // namespace

GroebnerBasis inter_reduce(const GroebnerBasis& G) {
    if (!G.strong)
        throw precondition_error("inter_reduce: requires a strong basis");
    if (G.elements.empty())
        throw precondition_error("inter_reduce: empty basis");
    check_element_arity(G);
    const MonomialOrder& order = G.order;

    // Sign-normalize and deduplicate.
    std::vector<Polynomial> elems;
    for (const auto& g : G.elements) {
        if (g.is_zero()) continue;
        Polynomial h = sign_normalized(g, order);
        if (std::find(elems.begin(), elems.end(), h) == elems.end())
            elems.push_back(std::move(h));
    }
    if (elems.empty())
        throw precondition_error("inter_reduce: all elements zero");

    // Ascending sort by (leading monomial, leading coefficient) puts every
    // potential coverer before what it covers — divisibility implies <= on
    // monomials and on positive coefficients — so one greedy pass computes
    // a minimal basis deterministically.
    std::sort(elems.begin(), elems.end(), [&](const Polynomial& a, const Polynomial& b) {
        auto [ma, ca] = a.leading_term(order);
        auto [mb, cb] = b.leading_term(order);
        auto c = cmp_monomials(ma, mb, order);
        if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
        if (ca != cb) return ca < cb;
        return compare_polynomials(a, b, order) == std::strong_ordering::less;
    });
    std::vector<Polynomial> kept;
    for (const auto& cand : elems) {
        auto [cm, cc] = cand.leading_term(order);
        bool covered = false;
        for (const auto& k : kept) {
            auto [km, kc] = k.leading_term(order);
            if (lt_strongly_divides(km, kc, cm, cc)) {
                covered = true;
                break;
            }
        }
        if (!covered) kept.push_back(cand);
    }

    // Tail-reduce to a fixpoint.  Leading terms never change, so membership
    // of the generated ideal and minimality are preserved throughout.
    GroebnerBasis R;
    R.order = order;
    R.elements = std::move(kept);
    for (int round = 0;; ++round) {
        if (round > 1000)
            throw std::logic_error("inter_reduce: tail reduction did not stabilize");
        bool changed = false;
        for (std::size_t i = 0; i < R.elements.size(); ++i) {
            auto [m, c] = R.elements[i].leading_term(order);
            Polynomial tail = R.elements[i];
            tail.add_term(m, -c);
            if (tail.is_zero()) continue;
            Polynomial nf = normal_form(tail, R);
            if (nf != tail) {
                Polynomial repl = Polynomial::term(m, c);
                repl += nf;
                R.elements[i] = std::move(repl);
                changed = true;
            }
        }
        if (!changed) break;
    }

    std::sort(R.elements.begin(), R.elements.end(),
              [&](const Polynomial& a, const Polynomial& b) {
                  return compare_polynomials(a, b, order) == std::strong_ordering::less;
              });
    R.strong = true;
    R.reduced = true;
    return R;
}

GroebnerBasis short_reduce(const GroebnerBasis& G) {
    GroebnerBasis R = G.reduced ? G : inter_reduce(G);
    const MonomialOrder& order = R.order;

    // Certify: distinct leading monomials, and for each one the gcd of all
    // applicable leading coefficients is attained by a single element.
    std::set<Monomial> seen;
    for (const auto& g : R.elements) {
        auto [m, c] = g.leading_term(order);
        if (sgn(c) <= 0)
            throw std::logic_error("short_reduce: non-positive leading coefficient");
        if (!seen.insert(m).second)
            throw std::logic_error("short_reduce: duplicate leading monomial");
    }
    for (const auto& g : R.elements) {
        const Monomial m = g.leading_monomial(order);
        LeadingCoeffIdeal lci = leading_coeff_ideal(R, m);
        bool attained = false;
        for (int idx : lci.divisor_indices)
            if (R.elements[static_cast<std::size_t>(idx)].leading_coeff(order) ==
                lci.generator) {
                attained = true;
                break;
            }
        if (!attained)
            throw std::logic_error("short_reduce: coefficient gcd not attained");
    }
    R.short_reduced = true;
    return R;
}

bool is_monic(const GroebnerBasis& G) {
    if (!G.short_reduced)
        throw precondition_error("is_monic: requires a short-reduced basis");
    for (const auto& g : G.elements)
        if (g.leading_coeff(G.order) != 1) return false;
    return true;
}

LeadingCoeffIdeal leading_coeff_ideal(const GroebnerBasis& G, const Monomial& m) {
    if (G.elements.empty())
        throw precondition_error("leading_coeff_ideal: empty basis");
    if (m.nvars() != G.arity())
        throw precondition_error("leading_coeff_ideal: arity mismatch");
    LeadingCoeffIdeal out;
    out.monomial = m;
    out.generator = 0;
    for (int i = 0; i < static_cast<int>(G.elements.size()); ++i) {
        auto [gm, gc] = G.elements[static_cast<std::size_t>(i)].leading_term(G.order);
        if (!mono_divides(gm, m)) continue;
        out.divisor_indices.push_back(i);
        out.generator = gcd_int(out.generator, gc);
    }
    return out;
}

bool verify_strong(const GroebnerBasis& G) {
    if (G.elements.empty())
        throw precondition_error("verify_strong: empty basis");
    for (std::size_t i = 0; i < G.elements.size(); ++i) {
        for (std::size_t j = i + 1; j < G.elements.size(); ++j) {
            Polynomial s = s_polynomial(G.elements[i], G.elements[j], G.order);
            if (!s.is_zero() && !normal_form(s, G).is_zero()) return false;
            Polynomial g = g_polynomial(G.elements[i], G.elements[j], G.order);
            if (!g.is_zero() && !normal_form(g, G).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace latgb
