#include "spinhurwitz/tqft.hpp"

#include <cctype>

#include "spinhurwitz/errors.hpp"

namespace spinhurwitz {

ExprPtr make_atom(CobordismAtom atom) {
    return std::make_shared<CobordismExpr>(CobordismExpr{atom, 1, 1});
}
ExprPtr make_tensor(ExprPtr left, ExprPtr right) {
    return std::make_shared<CobordismExpr>(
        CobordismExpr{TensorNode{std::move(left), std::move(right)}, 1, 1});
}
ExprPtr make_compose(ExprPtr first, ExprPtr second) {
    return std::make_shared<CobordismExpr>(
        CobordismExpr{ComposeNode{std::move(first), std::move(second)}, 1, 1});
}

namespace {

struct Lexer {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1, column = 1;

    void advance() {
        if (pos < text.size() && text[pos] == '\n') {
            ++line;
            column = 0;
        }
        ++pos;
        ++column;
    }
    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) advance();
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& message) { throw parse_error(message, line, column); }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }
    bool accept(char c) {
        if (peek() == c) {
            advance();
            return true;
        }
        return false;
    }
    int integer() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected an integer");
        int v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            advance();
        }
        return v;
    }
    std::string word() {
        skip_ws();
        std::string w;
        while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos]))) {
            w += text[pos];
            advance();
        }
        return w;
    }
};

struct Parser {
    Lexer lex;

    ExprPtr located(std::variant<CobordismAtom, TensorNode, ComposeNode> node, int line,
                    int column) {
        return std::make_shared<CobordismExpr>(CobordismExpr{std::move(node), line, column});
    }

    ExprPtr parse() {
        ExprPtr e = expr();
        if (!lex.eof()) lex.fail("unexpected trailing input");
        return e;
    }

    ExprPtr expr() {
        ExprPtr left = term();
        while (lex.peek() == ';') {
            int line = lex.line, column = lex.column;
            lex.advance();
            ExprPtr right = term();
            left = located(ComposeNode{left, right}, line, column);
        }
        return left;
    }

    ExprPtr term() {
        ExprPtr left = factor();
        while (lex.peek() == '|') {
            int line = lex.line, column = lex.column;
            lex.advance();
            ExprPtr right = factor();
            left = located(TensorNode{left, right}, line, column);
        }
        return left;
    }

    ExprPtr factor() {
        if (lex.peek() == '(') {
            lex.advance();
            ExprPtr inner = expr();
            lex.expect(')');
            return inner;
        }
        return atom();
    }

    ExprPtr atom() {
        lex.skip_ws();
        int line = lex.line, column = lex.column;
        std::string name = lex.word();
        if (name.empty()) lex.fail("expected a cobordism atom");
        CobordismAtom a;
        if (name == "D") {
            lex.expect('(');
            a.inputs = lex.integer();
            lex.expect(',');
            a.outputs = lex.integer();
            lex.expect(',');
            a.genus = lex.integer();
            lex.expect(',');
            char p = lex.peek();
            if (p != '+' && p != '-') lex.fail("expected parity '+' or '-'");
            lex.advance();
            a.parity = p == '+' ? Parity::even : Parity::odd;
            lex.expect(')');
        } else if (name == "cap") {
            a = {0, 1, 0, Parity::even};
        } else if (name == "cup") {
            a = {1, 0, 0, Parity::even};
        } else if (name == "pant") {
            a = {2, 1, 0, Parity::even};
        } else if (name == "copant") {
            a = {1, 2, 0, Parity::even};
        } else if (name == "handle") {
            a = {1, 1, 1, Parity::even};
        } else if (name == "twist") {
            a = {1, 1, 0, Parity::odd};
        } else {
            throw parse_error("unknown atom '" + name + "'", line, column);
        }
        return located(a, line, column);
    }
};

int power(int base, int exp) {
    int r = 1;
    while (exp--) r *= base;
    return r;
}

void unpack_tuple(int index, int arity, int m, std::vector<int>& out) {
    out.assign(arity, 0);
    for (int i = arity - 1; i >= 0; --i) {
        out[i] = index % m;
        index /= m;
    }
}

std::string atom_text(const CobordismAtom& a) {
    return "D(" + std::to_string(a.inputs) + "," + std::to_string(a.outputs) + "," +
           std::to_string(a.genus) + "," + to_string(a.parity) + ")";
}

}  // namespace

ExprPtr parse_cobordism(const std::string& text) {
    Parser parser{Lexer{text}};
    return parser.parse();
}

std::string to_string(const ExprPtr& expr) {
    if (const auto* atom = std::get_if<CobordismAtom>(&expr->node)) return atom_text(*atom);
    if (const auto* tensor = std::get_if<TensorNode>(&expr->node))
        return "(" + to_string(tensor->left) + " | " + to_string(tensor->right) + ")";
    const auto& comp = std::get<ComposeNode>(expr->node);
    return "(" + to_string(comp.first) + " ; " + to_string(comp.second) + ")";
}

LinearMap evaluate_atom(const CobordismAtom& atom, const SpinSpectrum& spectrum) {
    if (atom.inputs < 0 || atom.outputs < 0 || atom.genus < 0)
        throw invalid_input_error("evaluate_atom: arities and genus must be non-negative");
    const int m = static_cast<int>(spectrum.basis.size());
    LinearMap map;
    map.d = spectrum.d;
    map.m = m;
    map.in_arity = atom.inputs;
    map.out_arity = atom.outputs;
    const int rows = power(m, atom.outputs);
    const int cols = power(m, atom.inputs);
    map.matrix.resize(rows, cols);

    std::vector<int> in_tuple, out_tuple;
    for (int col = 0; col < cols; ++col) {
        unpack_tuple(col, atom.inputs, m, in_tuple);
        for (int row = 0; row < rows; ++row) {
            unpack_tuple(row, atom.outputs, m, out_tuple);
            std::vector<Partition> profile_set;
            profile_set.reserve(atom.inputs + atom.outputs);
            Rational theta_weight(1);
            for (int idx : in_tuple) profile_set.push_back(spectrum.basis[idx]);
            for (int idx : out_tuple) {
                profile_set.push_back(spectrum.basis[idx]);
                theta_weight *= Rational(spectrum.theta_values[idx]);
            }
            HurwitzQuery q{spectrum.d, atom.genus, atom.parity,
                           ProfileList(spectrum.d, std::move(profile_set)),
                           /*allow_formal=*/true};
            map.matrix(row, col) = theta_weight * normalized_value(q, spectrum).normalized;
        }
    }
    return map;
}

LinearMap evaluate_expr(const ExprPtr& expr, const SpinSpectrum& spectrum) {
    if (const auto* atom = std::get_if<CobordismAtom>(&expr->node))
        return evaluate_atom(*atom, spectrum);
    if (const auto* tensor = std::get_if<TensorNode>(&expr->node)) {
        LinearMap left = evaluate_expr(tensor->left, spectrum);
        LinearMap right = evaluate_expr(tensor->right, spectrum);
        LinearMap out;
        out.d = left.d;
        out.m = left.m;
        out.in_arity = left.in_arity + right.in_arity;
        out.out_arity = left.out_arity + right.out_arity;
        // Kronecker product; the first factor's circles are most significant
        out.matrix.resize(left.matrix.rows() * right.matrix.rows(),
                          left.matrix.cols() * right.matrix.cols());
        for (int ra = 0; ra < left.matrix.rows(); ++ra)
            for (int ca = 0; ca < left.matrix.cols(); ++ca)
                for (int rb = 0; rb < right.matrix.rows(); ++rb)
                    for (int cb = 0; cb < right.matrix.cols(); ++cb)
                        out.matrix(ra * right.matrix.rows() + rb,
                                   ca * right.matrix.cols() + cb) =
                            left.matrix(ra, ca) * right.matrix(rb, cb);
        return out;
    }
    const auto& comp = std::get<ComposeNode>(expr->node);
    LinearMap first = evaluate_expr(comp.first, spectrum);
    LinearMap second = evaluate_expr(comp.second, spectrum);
    if (first.out_arity != second.in_arity)
        throw invalid_input_error(
            "composition arity mismatch at line " + std::to_string(expr->line) + ", column " +
            std::to_string(expr->column) + ": left side has " + std::to_string(first.out_arity) +
            " output circle(s), right side expects " + std::to_string(second.in_arity));
    LinearMap out;
    out.d = first.d;
    out.m = first.m;
    out.in_arity = first.in_arity;
    out.out_arity = second.out_arity;
    out.matrix = second.matrix * first.matrix;  // diagrammatic order
    return out;
}

FrobeniusData make_frobenius(const ClassAlgebra& algebra, const SpinSpectrum& spectrum) {
    FrobeniusData data;
    data.d = algebra.d;
    data.m = algebra.size();
    data.mult.reserve(data.m);
    for (int a = 0; a < data.m; ++a) {
        MatrixXq mat(data.m, data.m);
        for (int g = 0; g < data.m; ++g)
            for (int b = 0; b < data.m; ++b) mat(g, b) = Rational(algebra.mult[a](g, b));
        data.mult.push_back(std::move(mat));
    }
    data.unit = evaluate_atom({0, 1, 0, Parity::even}, spectrum).matrix.col(0);
    data.counit = evaluate_atom({1, 0, 0, Parity::even}, spectrum).matrix.row(0).transpose();
    data.genus_adding = evaluate_atom({1, 1, 1, Parity::even}, spectrum).matrix;
    data.parity_involution = evaluate_atom({1, 1, 0, Parity::odd}, spectrum).matrix;
    return data;
}

Rational closed_value(int genus, Parity parity, const SpinSpectrum& spectrum) {
    if (genus < 0) throw invalid_input_error("closed_value: genus must be >= 0");
    LinearMap state = evaluate_atom({0, 1, 0, Parity::even}, spectrum);  // U
    LinearMap handle = evaluate_atom({1, 1, 1, Parity::even}, spectrum);  // G
    VectorXq v = state.matrix.col(0);
    for (int i = 0; i < genus; ++i) v = handle.matrix * v;
    if (parity == Parity::odd) {
        LinearMap twist = evaluate_atom({1, 1, 0, Parity::odd}, spectrum);  // A
        v = twist.matrix * v;
    }
    LinearMap counit = evaluate_atom({1, 0, 0, Parity::even}, spectrum);  // T
    return (counit.matrix * v)(0, 0);
}

}  // namespace spinhurwitz
