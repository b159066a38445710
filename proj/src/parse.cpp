#include "latgb/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "latgb/errors.hpp"

namespace latgb {

namespace {

constexpr std::int64_t kMaxExponent = 2147483647;  // 2^31 - 1

// Single-line cursor; column is 1-based for error messages.
class Cursor {
public:
    Cursor(const std::string& text, int line, int column_offset)
        : text_(text), line_(line), offset_(column_offset) {}

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
    }
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }
    char take() { return text_[pos_++]; }
    int column() const { return static_cast<int>(pos_) + 1 + offset_; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw parse_error(msg, line_, column());
    }
    [[noreturn]] void fail_at(const std::string& msg, int col) const {
        throw parse_error(msg, line_, col);
    }

    // Unsigned decimal literal as an exact integer.
    Int integer() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits.push_back(take());
        return Int(digits, 10);
    }

    std::string name() {
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected name");
        std::string s;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
            s.push_back(take());
        return s;
    }

private:
    const std::string& text_;
    int line_;
    int offset_;
    std::size_t pos_ = 0;
};

// varpow := name ['^' posint]; accumulates into the exponent vector.
void parse_varpow(Cursor& cur, const RingContext& ctx, Monomial& mono) {
    const int name_col = cur.column();
    const std::string var = cur.name();
    const int idx = ctx.variable_index(var);
    if (idx < 0) cur.fail_at("unknown variable '" + var + "'", name_col);
    std::int64_t exp = 1;
    cur.skip_ws();
    if (cur.peek() == '^') {
        cur.take();
        cur.skip_ws();
        const int exp_col = cur.column();
        if (!std::isdigit(static_cast<unsigned char>(cur.peek())))
            cur.fail("expected exponent");
        Int e = cur.integer();
        if (sgn(e) == 0) cur.fail_at("exponent must be positive", exp_col);
        if (e > kMaxExponent) cur.fail_at("exponent overflow", exp_col);
        exp = to_int64(e);
    }
    auto& slot = mono.exponents[static_cast<std::size_t>(idx)];
    slot += exp;
    if (slot > kMaxExponent) cur.fail("exponent overflow");
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingContext& ctx, int line) {
    Cursor cur(text, line, 0);
    Polynomial f(ctx.nvars());
    cur.skip_ws();
    if (cur.eof()) cur.fail("empty polynomial");
    bool first = true;
    while (true) {
        cur.skip_ws();
        if (cur.eof()) {
            if (first) cur.fail("expected term");
            break;
        }
        int sign = 1;
        if (cur.peek() == '+' || cur.peek() == '-') {
            if (cur.take() == '-') sign = -1;
            cur.skip_ws();
        } else if (!first) {
            cur.fail("expected '+' or '-'");
        }
        // term := integer ['*' varpow ...] | varpow ['*' varpow ...]
        Int coeff = 1;
        Monomial mono = Monomial::one(ctx.nvars());
        bool saw_factor = false;
        if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
            coeff = cur.integer();
            saw_factor = true;
            cur.skip_ws();
            while (cur.peek() == '*') {
                cur.take();
                cur.skip_ws();
                parse_varpow(cur, ctx, mono);
                cur.skip_ws();
            }
        } else if (std::isalpha(static_cast<unsigned char>(cur.peek()))) {
            parse_varpow(cur, ctx, mono);
            saw_factor = true;
            cur.skip_ws();
            while (cur.peek() == '*') {
                cur.take();
                cur.skip_ws();
                parse_varpow(cur, ctx, mono);
                cur.skip_ws();
            }
        }
        if (!saw_factor) cur.fail("expected term");
        f.add_term(mono, sign * coeff);
        first = false;
        cur.skip_ws();
        if (cur.eof()) break;
        if (cur.peek() != '+' && cur.peek() != '-') cur.fail("unexpected character");
    }
    return f;
}

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) out.push_back(trim(item));
    if (!s.empty() && s.back() == ',') out.push_back("");
    return out;
}

}  // namespace

ProblemFile parse_problem_file(const std::string& text) {
    ProblemFile pf;
    pf.order = MonomialOrder::grevlex();
    bool have_ring = false;
    bool have_shape = false;
    std::optional<RingContext> ctx;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    std::vector<std::pair<int, std::string>> gen_lines;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(strip_comment(raw));
        if (blank(line)) continue;
        std::istringstream ls(line);
        std::string directive;
        ls >> directive;
        std::string rest = trim(line.substr(directive.size()));
        if (directive == "ring") {
            if (have_ring) throw parse_error("duplicate ring declaration", lineno, 1);
            std::string vars_part = rest;
            auto opos = rest.find(" order ");
            if (opos != std::string::npos) {
                vars_part = trim(rest.substr(0, opos));
                std::string oname = trim(rest.substr(opos + 7));
                if (oname == "lex")
                    pf.order = MonomialOrder::lex();
                else if (oname == "grevlex")
                    pf.order = MonomialOrder::grevlex();
                else
                    throw parse_error("unknown order '" + oname + "'", lineno, 1);
            }
            for (const auto& v : split_commas(vars_part)) {
                if (v.empty()) throw parse_error("empty variable name", lineno, 1);
                pf.variables.push_back(v);
            }
            try {
                ctx.emplace(pf.variables, pf.order);
            } catch (const precondition_error& e) {
                throw parse_error(e.what(), lineno, 1);
            }
            have_ring = true;
        } else if (directive == "gen") {
            if (!have_ring)
                throw parse_error("gen before ring declaration", lineno, 1);
            gen_lines.emplace_back(lineno, rest);
        } else if (directive == "shape") {
            if (!have_ring)
                throw parse_error("shape before ring declaration", lineno, 1);
            if (have_shape) throw parse_error("duplicate shape declaration", lineno, 1);
            std::vector<std::int64_t> radices;
            for (const auto& item : split_commas(rest)) {
                if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
                    throw parse_error("bad shape entry '" + item + "'", lineno, 1);
                std::int64_t r = std::stoll(item);
                if (r < 1) throw parse_error("shape entries must be >= 1", lineno, 1);
                radices.push_back(r);
            }
            if (radices.empty()) throw parse_error("empty shape", lineno, 1);
            pf.shape = std::move(radices);
            have_shape = true;
        } else {
            throw parse_error("unknown directive '" + directive + "'", lineno, 1);
        }
    }
    if (!have_ring) throw parse_error("missing ring declaration", lineno == 0 ? 1 : lineno, 1);
    for (const auto& [ln, src] : gen_lines) {
        Polynomial g = parse_polynomial(src, *ctx, ln);
        if (g.is_zero()) throw parse_error("zero generator", ln, 1);
        pf.generators.push_back(std::move(g));
    }
    if (pf.shape && static_cast<int>(pf.shape->size()) != ctx->nvars())
        throw parse_error("shape arity does not match ring", lineno, 1);
    return pf;
}

ProblemFile load_problem_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file '" + path + "'", 1, 1);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_problem_file(buf.str());
}

}  // namespace latgb
