// latgb: Groebner bases over Z, quotient freeness, lattice embeddings,
// cyclic-shift checks, lattice ideals and saturation, from the shell.
//
// Exit codes: 0 ok, 1 unparseable input or bad invocation, 2 precondition
// violated by the mathematical content, 3 resource guard tripped.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "latgb/errors.hpp"
#include "latgb/groebner.hpp"
#include "latgb/lattice.hpp"
#include "latgb/lattice_ideal.hpp"
#include "latgb/parse.hpp"
#include "latgb/quotient.hpp"
#include "latgb/serialize.hpp"
#include "latgb/snf.hpp"
#include "latgb/tensor.hpp"

using namespace latgb;

namespace {

struct Options {
    std::string file;
    std::string order_override;  // "", "lex", "grevlex"
    bool json_only = false;
    std::string out_path;
    std::int64_t max_steps = 200000;
    std::vector<std::string> ideal_texts;
    std::string lattice_text;
};

RingContext ring_of(const ProblemFile& pf, const Options& o) {
    MonomialOrder ord = pf.order;
    if (o.order_override == "lex") ord = MonomialOrder::lex();
    if (o.order_override == "grevlex") ord = MonomialOrder::grevlex();
    return RingContext(pf.variables, ord);
}

BuchbergerOptions steps(const Options& o) { return {o.max_steps}; }

// --lattice accepts either a bare JSON array of rows or the emitted
// {"ambient_dim", "basis"} document.
IntegerLattice parse_lattice_arg(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("bad lattice JSON: ") + e.what(), 1, 1);
    }
    if (j.is_object()) return lattice_from_json(j);
    if (!j.is_array() || j.empty())
        throw parse_error("lattice must be a nonempty array of rows", 1, 1);
    const Json& first = j.front();
    if (!first.is_array() || first.empty())
        throw parse_error("lattice rows must be nonempty arrays", 1, 1);
    const auto cols = static_cast<Eigen::Index>(first.size());
    MatZ m(static_cast<Eigen::Index>(j.size()), cols);
    Eigen::Index r = 0;
    for (const auto& row : j) {
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
            throw parse_error("lattice rows must all have the same width", 1, 1);
        Eigen::Index c = 0;
        for (const auto& cell : row) m(r, c++) = int_from_json(cell);
        ++r;
    }
    return make_lattice(cols, m);
}

std::vector<Polynomial> parse_ideal_args(const Options& o, const RingContext& ctx) {
    std::vector<Polynomial> out;
    for (const auto& text : o.ideal_texts) out.push_back(parse_polynomial(text, ctx));
    return out;
}

std::string mono_str(const Monomial& m, const RingContext& ctx) {
    return Polynomial::term(m, 1).to_string(ctx);
}

std::string row_str(const MatZ& m, Eigen::Index i) {
    std::ostringstream s;
    s << "[";
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        if (j) s << ", ";
        s << m(i, j).get_str();
    }
    s << "]";
    return s.str();
}

void emit(const Json& doc, const std::string& text, const Options& o) {
    if (!o.json_only && !text.empty()) std::cout << text;
    const std::string payload = doc.dump(2) + "\n";
    std::cout << payload;
    if (!o.out_path.empty()) write_text_file(o.out_path, payload);
}

GroebnerBasis basis_of(const ProblemFile& pf, const RingContext& ctx, const Options& o) {
    return short_reduce(buchberger(pf.generators, ctx, steps(o)));
}

constexpr const char* kNotFree =
    "quotient is not a free module of finite rank: no ideal of this residue "
    "ring is an integer lattice";

int run_gb(const Options& o) {
    const ProblemFile pf = load_problem_file(o.file);
    const RingContext ctx = ring_of(pf, o);
    const GroebnerBasis G = basis_of(pf, ctx, o);
    Json doc;
    doc["variables"] = ctx.variables;
    doc["order"] = to_string(ctx.order);
    doc["basis"] = basis_strings(G, ctx);
    doc["monic"] = is_monic(G);
    std::ostringstream text;
    text << "short reduced basis (" << G.elements.size() << " element(s)):\n";
    for (const auto& g : G.elements) text << "  " << g.to_string(ctx) << "\n";
    emit(doc, text.str(), o);
    return 0;
}

int run_free(const Options& o) {
    const ProblemFile pf = load_problem_file(o.file);
    const RingContext ctx = ring_of(pf, o);
    const GroebnerBasis G = basis_of(pf, ctx, o);
    const bool free_rank = is_free(G);  // infinite rank refuses loudly
    const QuotientStructure Q = quotient_structure(G);
    Json doc;
    doc["free"] = free_rank;
    std::ostringstream text;
    if (free_rank) {
        doc["rank"] = Q.rank;
        Json basis = Json::array();
        for (const auto& m : Q.basis_monomials) basis.push_back(mono_str(m, ctx));
        doc["basis_monomials"] = std::move(basis);
        text << "free of rank " << Q.rank << "\nbasis monomials:";
        for (const auto& m : Q.basis_monomials) text << " " << mono_str(m, ctx);
        text << "\n";
    } else {
        const LeadingCoeffIdeal& w = Q.coeff_ideals.front();
        Json witness;
        witness["monomial"] = mono_str(w.monomial, ctx);
        witness["leading_coefficient"] = json_int(w.generator);
        doc["witness"] = std::move(witness);
        text << "not free: leading coefficient " << w.generator.get_str()
             << " at monomial " << mono_str(w.monomial, ctx) << "\n";
    }
    emit(doc, text.str(), o);
    return 0;
}

int run_embed(const Options& o) {
    const ProblemFile pf = load_problem_file(o.file);
    const RingContext ctx = ring_of(pf, o);
    const GroebnerBasis G = basis_of(pf, ctx, o);
    const std::vector<Polynomial> ideal = parse_ideal_args(o, ctx);
    const QuotientStructure Q = quotient_structure(G);
    if (!Q.free_module) throw precondition_error(kNotFree);
    const IntegerLattice L = embed_ideal(ideal, G, Q);
    Json doc;
    doc["lattice"] = lattice_to_json(L);
    doc["rank"] = L.rank();
    doc["full_rank"] = is_full_rank(L);
    if (is_full_rank(L)) doc["det"] = json_int(lattice_det(L));
    std::ostringstream text;
    text << "lattice in Z^" << L.ambient_dim << ", rank " << L.rank() << ":\n";
    for (Eigen::Index i = 0; i < L.basis.rows(); ++i)
        text << "  " << row_str(L.basis, i) << "\n";
    if (is_full_rank(L))
        text << "full rank, determinant " << lattice_det(L).get_str() << "\n";
    else
        text << "not full rank\n";
    emit(doc, text.str(), o);
    return 0;
}

int run_cyclic_check(const Options& o) {
    const ProblemFile pf = load_problem_file(o.file);
    const RingContext ctx = ring_of(pf, o);
    if (!pf.shape)
        throw precondition_error("cyclic-check: the problem file declares no shape");
    const TensorShape shape(*pf.shape);
    IntegerLattice L{1, MatZ(0, 1)};
    if (!o.lattice_text.empty()) {
        L = parse_lattice_arg(o.lattice_text);
    } else {
        const GroebnerBasis G = basis_of(pf, ctx, o);
        const QuotientStructure Q = quotient_structure(G);
        if (!Q.free_module) throw precondition_error(kNotFree);
        const auto perm = basis_to_tensor_permutation(Q.basis_monomials, shape);
        const IntegerLattice E = embed_ideal(parse_ideal_args(o, ctx), G, Q);
        L = lattice_to_tensor_coordinates(E, perm);
    }
    const auto violation = find_cyclic_violation(L, shape);
    Json doc;
    doc["shape"] = *pf.shape;
    doc["lattice"] = lattice_to_json(L);
    doc["cyclic"] = !violation.has_value();
    std::ostringstream text;
    if (violation) {
        Json w;
        w["row"] = violation->row;
        w["axis"] = violation->axis;
        doc["witness"] = std::move(w);
        text << "not cyclic: shifting basis row " << violation->row << " along axis "
             << violation->axis << " leaves the lattice\n";
    } else {
        text << "cyclic: closed under every axis shift\n";
    }
    emit(doc, text.str(), o);
    return 0;
}

int run_lattice_ideal(const Options& o) {
    const IntegerLattice L = parse_lattice_arg(o.lattice_text);
    RingContext ctx = [&] {
        if (!o.file.empty()) return ring_of(load_problem_file(o.file), o);
        std::vector<std::string> names;
        for (std::int64_t k = 1; k <= L.ambient_dim; ++k)
            names.push_back("x" + std::to_string(k));
        const MonomialOrder ord = o.order_override == "lex" ? MonomialOrder::lex()
                                                            : MonomialOrder::grevlex();
        return RingContext(names, ord);
    }();
    const LatticeIdealSpec spec = lattice_ideal_generators(L, ctx);
    const GroebnerBasis toric = toric_generators(L, ctx, steps(o));
    Json doc;
    doc["lattice"] = lattice_to_json(L);
    doc["saturated"] = is_saturated(L);
    Json bins = Json::array();
    for (const auto& b : spec.generators) bins.push_back(b.to_string(ctx));
    doc["binomial_generators"] = std::move(bins);
    doc["toric_basis"] = basis_strings(toric, ctx);
    std::ostringstream text;
    text << (is_saturated(L) ? "saturated lattice\n" : "unsaturated lattice\n");
    text << "binomial generators:";
    for (const auto& b : spec.generators) text << " " << b.to_string(ctx);
    text << "\ntoric basis:";
    for (const auto& g : toric.elements) text << " " << g.to_string(ctx);
    text << "\n";
    emit(doc, text.str(), o);
    return 0;
}

int run_sat(const Options& o) {
    const IntegerLattice L = parse_lattice_arg(o.lattice_text);
    Json doc;
    doc["lattice"] = lattice_to_json(L);
    Json factors = Json::array();
    if (L.rank() > 0)
        for (const auto& d : smith_normal_form(L.basis).invariant_factors)
            factors.push_back(json_int(d));
    doc["invariant_factors"] = std::move(factors);
    doc["saturated"] = is_saturated(L);
    const IntegerLattice S = saturate(L);
    doc["saturation"] = lattice_to_json(S);
    std::ostringstream text;
    text << (is_saturated(L) ? "saturated\n" : "unsaturated\n");
    text << "saturation basis:\n";
    for (Eigen::Index i = 0; i < S.basis.rows(); ++i)
        text << "  " << row_str(S.basis, i) << "\n";
    emit(doc, text.str(), o);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ideal lattices in integer polynomial quotient rings"};
    app.require_subcommand(1);
    Options o;

    const auto add_common = [&](CLI::App* sub, bool with_file, bool file_required) {
        if (with_file) {
            auto* f = sub->add_option("file", o.file, "problem file (ring/gen/shape lines)");
            if (file_required) f->required();
        }
        sub->add_option("--order", o.order_override, "override the file's monomial order")
            ->check(CLI::IsMember({"lex", "grevlex"}));
        sub->add_flag("--json", o.json_only, "suppress the text report, print JSON only");
        sub->add_option("--out", o.out_path, "also write the JSON document to this path");
        sub->add_option("--max-steps", o.max_steps, "completion step guard")
            ->check(CLI::PositiveNumber);
    };

    auto* gb = app.add_subcommand("gb", "short reduced Groebner basis of the ideal");
    add_common(gb, true, true);

    auto* fr = app.add_subcommand("free", "is the quotient a free Z-module, and of what rank");
    add_common(fr, true, true);

    auto* em = app.add_subcommand("embed", "lattice image of an ideal of the quotient");
    add_common(em, true, true);
    em->add_option("--ideal", o.ideal_texts, "generator of the ideal to embed (repeatable)")
        ->required();

    auto* cy = app.add_subcommand("cyclic-check",
                                  "is the lattice closed under every axis shift");
    add_common(cy, true, true);
    auto* cy_lat = cy->add_option("--lattice", o.lattice_text,
                                  "lattice in tensor coordinates, as JSON rows");
    auto* cy_ideal = cy->add_option("--ideal", o.ideal_texts,
                                    "embed this ideal of the file's quotient instead (repeatable)");
    cy_lat->excludes(cy_ideal);

    auto* li = app.add_subcommand("lattice-ideal",
                                  "binomial generators and toric basis of a lattice");
    add_common(li, true, false);
    li->add_option("--lattice", o.lattice_text, "lattice as JSON rows")->required();

    auto* sa = app.add_subcommand("sat", "invariant factors and saturation of a lattice");
    add_common(sa, false, false);
    sa->add_option("--lattice", o.lattice_text, "lattice as JSON rows")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (gb->parsed()) return run_gb(o);
        if (fr->parsed()) return run_free(o);
        if (em->parsed()) return run_embed(o);
        if (cy->parsed()) {
            if (o.lattice_text.empty() && o.ideal_texts.empty()) {
                std::cerr << "error: cyclic-check needs --lattice or --ideal\n";
                return 1;
            }
            return run_cyclic_check(o);
        }
        if (li->parsed()) return run_lattice_ideal(o);
        if (sa->parsed()) return run_sat(o);
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const resource_error& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
