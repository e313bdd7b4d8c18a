// Copyright (c) 2026 The twohilb authors
// Licensed under the Apache License, Version 2.0.

#include "twohilb/dsl.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "twohilb/generators.hpp"

namespace twohilb {
namespace dsl {

namespace {

struct Lexer {
    const std::string& text;
    size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_consume(c))
            throw DslError(std::string("expected '") + c + "'", pos);
    }

    bool try_keyword(const std::string& kw) {
        skip_ws();
        if (text.compare(pos, kw.size(), kw) != 0) return false;
        size_t end = pos + kw.size();
        if (end < text.size() &&
            (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
            return false;
        pos = end;
        return true;
    }

    std::string identifier() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        if (pos == start) throw DslError("expected an identifier", pos);
        return text.substr(start, pos - start);
    }

    int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw DslError("expected an integer", pos);
        return std::stoi(text.substr(start, pos - start));
    }

    double real() {
        skip_ws();
        size_t start = pos;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
        bool digits = false;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            ++pos;
            digits = true;
        }
        if (pos < text.size() && text[pos] == '.') {
            ++pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                ++pos;
                digits = true;
            }
        }
        if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
            size_t mark = pos;
            ++pos;
            if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
            bool exp_digits = false;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                ++pos;
                exp_digits = true;
            }
            if (!exp_digits) pos = mark;
        }
        if (!digits) throw DslError("expected a number", pos);
        return std::stod(text.substr(start, pos - start));
    }
};

struct Parser {
    Lexer lex;

    explicit Parser(const std::string& text) : lex(text) {}

    ExprPtr make(Expr e) { return std::make_unique<Expr>(std::move(e)); }

    Complex scalar() {
        lex.skip_ws();
        size_t start = lex.pos;
        if (lex.try_keyword("1/sqrt")) {
            lex.expect('(');
            int k = lex.integer();
            lex.expect(')');
            if (k <= 0) throw DslError("1/sqrt argument must be positive", start);
            return Complex(1.0 / std::sqrt(static_cast<double>(k)), 0.0);
        }
        double re = lex.real();
        lex.skip_ws();
        if (lex.pos < lex.text.size() && (lex.text[lex.pos] == '+' || lex.text[lex.pos] == '-')) {
            size_t mark = lex.pos;
            double im = lex.real();
            if (lex.try_consume('i')) return Complex(re, im);
            lex.pos = mark;
        }
        if (lex.try_consume('i')) return Complex(0.0, re);
        return Complex(re, 0.0);
    }

    ComplexMatrix matrix_literal() {
        size_t start = lex.pos;
        lex.expect('[');
        std::vector<std::vector<Complex>> rows;
        do {
            lex.expect('[');
            std::vector<Complex> row;
            do {
                row.push_back(scalar());
            } while (lex.try_consume(','));
            lex.expect(']');
            rows.push_back(std::move(row));
        } while (lex.try_consume(','));
        lex.expect(']');
        const size_t cols = rows.front().size();
        std::vector<Complex> flat;
        for (const auto& r : rows) {
            if (r.size() != cols) throw DslError("ragged matrix literal", start);
            flat.insert(flat.end(), r.begin(), r.end());
        }
        return ComplexMatrix(static_cast<int>(rows.size()), static_cast<int>(cols),
                             std::move(flat));
    }

    std::vector<int> int_args(int count) {
        lex.expect('(');
        std::vector<int> args;
        for (int k = 0; k < count; ++k) {
            if (k) lex.expect(',');
            args.push_back(lex.integer());
        }
        lex.expect(')');
        return args;
    }

    ExprPtr hterm() {
        lex.skip_ws();
        size_t start = lex.pos;
        if (lex.try_consume('(')) {
            ExprPtr e = expr();
            lex.expect(')');
            return e;
        }
        if (lex.try_keyword("dag")) {
            lex.expect('(');
            ExprPtr inner = expr();
            lex.expect(')');
            return make({Dagger{std::move(inner)}, start});
        }
        if (lex.try_keyword("scale")) {
            lex.expect('(');
            Complex c = scalar();
            lex.expect(',');
            ExprPtr inner = expr();
            lex.expect(')');
            return make({Scale{c, std::move(inner)}, start});
        }
        if (lex.try_keyword("Id")) {
            lex.expect('(');
            ExprPtr inner = expr();
            lex.expect(')');
            return make({IdOf{std::move(inner)}, start});
        }
        if (lex.try_keyword("Meas")) {
            lex.expect('(');
            std::string name = lex.identifier();
            lex.expect(')');
            return make({MeasCall{std::move(name)}, start});
        }
        if (lex.try_keyword("CPhase")) {
            lex.expect('(');
            ComplexMatrix phases = matrix_literal();
            lex.expect(')');
            return make({CPhaseCall{std::move(phases)}, start});
        }
        std::string name = lex.identifier();
        static const std::map<std::string, int> arity = {
            {"WL", 1},     {"WR", 1},     {"Q", 1},      {"Copy", 1}, {"Compare", 1},
            {"Create", 1}, {"Delete", 1}, {"Bell", 1},   {"MBell", 0}, {"UBell", 0}};
        auto it = arity.find(name);
        if (it == arity.end()) throw DslError("unknown generator '" + name + "'", start);
        std::vector<int> args;
        if (it->second > 0) args = int_args(it->second);
        return make({GeneratorCall{std::move(name), std::move(args)}, start});
    }

    ExprPtr vterm() {
        size_t start = lex.pos;
        ExprPtr left = hterm();
        while (lex.try_keyword("o")) {
            ExprPtr right = hterm();
            left = make({HComp{std::move(left), std::move(right)}, start});
        }
        return left;
    }

    ExprPtr expr() {
        size_t start = lex.pos;
        ExprPtr first = vterm();
        if (!lex.try_consume('.')) return first;
        ExprPtr rest = expr();  // right-associative; the upper factor is written first
        return make({VComp{std::move(first), std::move(rest)}, start});
    }

    ExprPtr parse_all() {
        ExprPtr e = expr();
        if (!lex.eof()) throw DslError("trailing input", lex.pos);
        return e;
    }
};

std::string format_scalar(Complex c) {
    std::ostringstream os;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", c.real());
    os << buf;
    if (c.imag() != 0.0) {
        std::snprintf(buf, sizeof buf, "%.17g", std::abs(c.imag()));
        os << (c.imag() > 0 ? "+" : "-") << buf << "i";
    }
    return os.str();
}

const OneCell& expect_one_cell(const Value& v, size_t pos, const char* what) {
    if (const OneCell* c = std::get_if<OneCell>(&v)) return *c;
    throw DslError(std::string(what) + " expects a 1-cell expression", pos);
}

TwoCell as_two_cell(Value v) {
    if (TwoCell* c = std::get_if<TwoCell>(&v)) return std::move(*c);
    // A bare 1-cell used where a 2-cell is needed stands for its identity.
    return identity_2(std::get<OneCell>(v));
}

Value eval_generator(const GeneratorCall& g, size_t pos) {
    auto arg = [&](size_t k) { return g.args[k]; };
    try {
        if (g.name == "WL") return witness_left(arg(0));
        if (g.name == "WR") return witness_right(arg(0));
        if (g.name == "Q") return OneCell::scalar(arg(0));
        if (g.name == "Copy") return copy_cell(arg(0));
        if (g.name == "Compare") return compare_cell(arg(0));
        if (g.name == "Create") return create_cell(arg(0));
        if (g.name == "Delete") return delete_cell(arg(0));
        if (g.name == "Bell") return bell_state(arg(0));
        if (g.name == "MBell") return bell_measurement();
        if (g.name == "UBell") return bell_corrections();
    } catch (const std::invalid_argument& e) {
        throw DslError(std::string(g.name) + ": " + e.what(), pos);
    }
    throw DslError("unknown generator '" + g.name + "'", pos);
}

OrthonormalBasis named_basis(const std::string& name, size_t pos) {
    if (name == "pm2") return OrthonormalBasis::plus_minus();
    if (name == "bell4") return OrthonormalBasis::bell();
    auto suffix_dim = [&](const std::string& prefix) -> int {
        if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0)
            return 0;
        for (size_t i = prefix.size(); i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return 0;
        return std::stoi(name.substr(prefix.size()));
    };
    if (int d = suffix_dim("comp")) return OrthonormalBasis::computational(d);
    if (int d = suffix_dim("fourier")) return OrthonormalBasis::fourier(d);
    throw DslError("unknown measurement basis '" + name + "'", pos);
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).parse_all(); }

std::string print(const Expr& e) {
    struct Visitor {
        std::string operator()(const GeneratorCall& g) const {
            std::string s = g.name;
            if (!g.args.empty()) {
                s += "(";
                for (size_t k = 0; k < g.args.size(); ++k)
                    s += (k ? "," : "") + std::to_string(g.args[k]);
                s += ")";
            }
            return s;
        }
        std::string operator()(const IdOf& n) const { return "Id(" + print(*n.inner) + ")"; }
        std::string operator()(const HComp& n) const {
            return "(" + print(*n.left) + " o " + print(*n.right) + ")";
        }
        std::string operator()(const VComp& n) const {
            return "(" + print(*n.upper) + " . " + print(*n.lower) + ")";
        }
        std::string operator()(const Dagger& n) const { return "dag(" + print(*n.inner) + ")"; }
        std::string operator()(const Scale& n) const {
            return "scale(" + format_scalar(n.factor) + ", " + print(*n.inner) + ")";
        }
        std::string operator()(const MeasCall& n) const { return "Meas(" + n.basis + ")"; }
        std::string operator()(const CPhaseCall& n) const {
            std::string s = "CPhase([";
            for (int i = 0; i < n.phases.rows(); ++i) {
                s += (i ? ",[" : "[");
                for (int j = 0; j < n.phases.cols(); ++j)
                    s += (j ? "," : "") + format_scalar(n.phases(i, j));
                s += "]";
            }
            return s + "])";
        }
    };
    return std::visit(Visitor{}, e.node);
}

Value evaluate(const Expr& e) {
    struct Visitor {
        size_t pos;
        Value operator()(const GeneratorCall& g) const { return eval_generator(g, pos); }
        Value operator()(const IdOf& n) const {
            Value inner = evaluate(*n.inner);
            return identity_2(expect_one_cell(inner, n.inner->position, "Id"));
        }
        Value operator()(const HComp& n) const {
            Value left = evaluate(*n.left);
            Value right = evaluate(*n.right);
            try {
                if (std::holds_alternative<OneCell>(left) &&
                    std::holds_alternative<OneCell>(right))
                    return hcomp1(std::get<OneCell>(left), std::get<OneCell>(right));
                return hcomp2(as_two_cell(std::move(left)),
                              as_two_cell(std::move(right)));
            } catch (const TypeError& err) {
                throw DslError(err.what(), pos);
            }
        }
        Value operator()(const VComp& n) const {
            Value upper = evaluate(*n.upper);
            Value lower = evaluate(*n.lower);
            try {
                return vcomp(as_two_cell(std::move(upper)),
                             as_two_cell(std::move(lower)));
            } catch (const TypeError& err) {
                throw DslError(err.what(), pos);
            }
        }
        Value operator()(const Dagger& n) const {
            Value inner = evaluate(*n.inner);
            if (std::holds_alternative<OneCell>(inner))
                return adjoint1(std::get<OneCell>(inner));
            return dagger2(std::get<TwoCell>(inner));
        }
        Value operator()(const Scale& n) const {
            Value inner = evaluate(*n.inner);
            return scalar_mul(n.factor, as_two_cell(std::move(inner)));
        }
        Value operator()(const MeasCall& n) const {
            return nondegenerate_measurement(named_basis(n.basis, pos));
        }
        Value operator()(const CPhaseCall& n) const {
            try {
                return controlled_phase(n.phases);
            } catch (const std::invalid_argument& err) {
                throw DslError(err.what(), pos);
            }
        }
    };
    return std::visit(Visitor{e.position}, e.node);
}

}  // namespace dsl
}  // namespace twohilb
