#include "hilbstab/cyclelang.hpp"

#include <cctype>

#include "hilbstab/errors.hpp"

namespace hilbstab {

namespace {

constexpr long max_exponent = 10000;

enum class TokKind { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, Comma, End };

struct Token {
    TokKind kind;
    Rational number;
    std::string text;
    int column; // 1-based
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    // Column guaranteed to lie inside the input (errors at the very end point
    // at the last character).
    [[noreturn]] void fail(const std::string& what, int column) const {
        int len = static_cast<int>(text_.size());
        int clamped = column;
        if (len > 0 && clamped > len) clamped = len;
        if (clamped < 1) clamped = 1;
        throw parse_error(what, clamped);
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        int col = static_cast<int>(pos_) + 1;
        if (pos_ >= text_.size()) {
            tok_ = {TokKind::End, 0, "", col};
            return;
        }
        char c = text_[pos_];
        switch (c) {
        case '+': tok_ = {TokKind::Plus, 0, "+", col}; ++pos_; return;
        case '-': tok_ = {TokKind::Minus, 0, "-", col}; ++pos_; return;
        case '*': tok_ = {TokKind::Star, 0, "*", col}; ++pos_; return;
        case '^': tok_ = {TokKind::Caret, 0, "^", col}; ++pos_; return;
        case '(': tok_ = {TokKind::LParen, 0, "(", col}; ++pos_; return;
        case ')': tok_ = {TokKind::RParen, 0, ")", col}; ++pos_; return;
        case ',': tok_ = {TokKind::Comma, 0, ",", col}; ++pos_; return;
        default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            Int num(text_.substr(start, pos_ - start));
            Int den = 1;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                size_t dstart = pos_ + 1;
                size_t p = dstart;
                while (p < text_.size() && std::isdigit(static_cast<unsigned char>(text_[p])))
                    ++p;
                if (p == dstart)
                    fail("expected digits after '/'", static_cast<int>(dstart) + 1);
                den = Int(text_.substr(dstart, p - dstart));
                if (den == 0)
                    fail("zero denominator", static_cast<int>(dstart) + 1);
                pos_ = p;
            }
            tok_ = {TokKind::Number, Rational(num, den), "", col};
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            tok_ = {TokKind::Ident, 0, text_.substr(start, pos_ - start), col};
            return;
        }
        fail(std::string("unexpected character '") + c + "'", col);
    }

    const std::string& text_;
    size_t pos_ = 0;
    Token tok_{TokKind::End, 0, "", 1};
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    Node parse_all() {
        Node n = parse_expr(false);
        const Token& t = lex_.peek();
        if (t.kind != TokKind::End)
            lex_.fail("unexpected trailing input", t.column);
        return n;
    }

private:
    // surface=true parses the sexpr stratum.
    Node parse_expr(bool surface) {
        Node left = parse_term(surface);
        while (true) {
            const Token& t = lex_.peek();
            if (t.kind != TokKind::Plus && t.kind != TokKind::Minus) break;
            Token op = lex_.take();
            Node right = parse_term(surface);
            Node n;
            n.kind = op.kind == TokKind::Plus ? NodeKind::Add : NodeKind::Sub;
            n.column = op.column;
            n.kids.push_back(std::move(left));
            n.kids.push_back(std::move(right));
            left = std::move(n);
        }
        return left;
    }

    Node parse_term(bool surface) {
        bool negated = false;
        int neg_col = 1;
        if (lex_.peek().kind == TokKind::Minus) {
            Token m = lex_.take();
            negated = true;
            neg_col = m.column;
        }
        Node prod = parse_factor(surface);
        while (lex_.peek().kind == TokKind::Star) {
            Token op = lex_.take();
            Node right = parse_factor(surface);
            Node n;
            n.kind = NodeKind::Mul;
            n.column = op.column;
            n.kids.push_back(std::move(prod));
            n.kids.push_back(std::move(right));
            prod = std::move(n);
        }
        if (!negated) return prod;
        Node n;
        n.kind = NodeKind::Neg;
        n.column = neg_col;
        n.kids.push_back(std::move(prod));
        return n;
    }

    Node parse_factor(bool surface) {
        Node base = parse_atom(surface);
        if (lex_.peek().kind != TokKind::Caret) return base;
        Token caret = lex_.take();
        const Token& t = lex_.peek();
        if (t.kind != TokKind::Number || !is_integer(t.number) || t.number < 0)
            lex_.fail("exponent must be a nonnegative integer", t.column);
        Token e = lex_.take();
        if (e.number > max_exponent)
            lex_.fail("exponent too large", e.column);
        Node n;
        n.kind = NodeKind::Pow;
        n.column = caret.column;
        n.exponent = static_cast<long>(numerator(e.number));
        n.kids.push_back(std::move(base));
        return n;
    }

    Node parse_atom(bool surface) {
        const Token& t = lex_.peek();
        switch (t.kind) {
        case TokKind::Number: {
            Token num = lex_.take();
            Node n;
            n.kind = NodeKind::Number;
            n.value = num.number;
            n.column = num.column;
            return n;
        }
        case TokKind::LParen: {
            lex_.take();
            Node inner = parse_expr(surface);
            expect(TokKind::RParen, "expected ')'");
            return inner;
        }
        case TokKind::Ident:
            return parse_ident_atom(surface);
        default:
            lex_.fail("expected a value", t.column);
        }
    }

    Node parse_ident_atom(bool surface) {
        Token id = lex_.take();
        const std::string& w = id.text;
        if (w == "N") {
            Node n;
            n.kind = NodeKind::SymbolN;
            n.column = id.column;
            return n;
        }
        if (w == "box" || w == "exc" || w == "diag" || w == "D") {
            if (surface)
                lex_.fail("blow-up constructor in surface-class position", id.column);
            if (w == "D") {
                Node n;
                n.kind = NodeKind::ClassD;
                n.column = id.column;
                return n;
            }
            Node n;
            n.kind = w == "box" ? NodeKind::Box : (w == "exc" ? NodeKind::Exc : NodeKind::Diag);
            n.column = id.column;
            expect(TokKind::LParen, "expected '(' after " + w);
            n.kids.push_back(parse_expr(true));
            if (w == "box") {
                expect(TokKind::Comma, "expected ',' between box arguments");
                n.kids.push_back(parse_expr(true));
            }
            expect(TokKind::RParen, "expected ')'");
            return n;
        }
        if (w == "pt") {
            if (!surface)
                lex_.fail("'pt' is a surface class; wrap it in box/exc/diag", id.column);
            Node n;
            n.kind = NodeKind::PointPt;
            n.column = id.column;
            return n;
        }
        // Any other identifier is a divisor name, legal on the surface level only.
        if (!surface)
            lex_.fail("divisor name '" + w + "' must appear inside box/exc/diag", id.column);
        Node n;
        n.kind = NodeKind::Divisor;
        n.name = w;
        n.column = id.column;
        return n;
    }

    void expect(TokKind kind, const std::string& what) {
        const Token& t = lex_.peek();
        if (t.kind != kind) lex_.fail(what, t.column);
        lex_.take();
    }

    Lexer lex_;
};

CycleX resolve_divisor(const std::string& name, int column, const SurfaceData& s) {
    if (name.size() >= 2 && name[0] == 'e'
        && name.find_first_not_of("0123456789", 1) == std::string::npos) {
        long idx = name.size() <= 7 ? std::stol(name.substr(1)) : -1;
        if (idx < 1 || idx > s.rho)
            throw input_error("basis class " + name + " exceeds Picard rank "
                              + std::to_string(s.rho) + " (column "
                              + std::to_string(column) + ")");
        return CycleX::divisor_class(to_polyvec(s.basis_vector(static_cast<int>(idx) - 1)));
    }
    auto it = s.divisors.find(name);
    if (it == s.divisors.end())
        throw input_error("unknown divisor name '" + name + "' (column "
                          + std::to_string(column) + ")");
    return CycleX::divisor_class(it->second);
}

CycleX eval_surface(const Node& n, const SurfaceData& s) {
    switch (n.kind) {
    case NodeKind::Number:
        return Poly{n.value} * CycleX::unit(s.rho);
    case NodeKind::SymbolN:
        return Poly::variable() * CycleX::unit(s.rho);
    case NodeKind::PointPt:
        return CycleX::point(s.rho);
    case NodeKind::Divisor:
        return resolve_divisor(n.name, n.column, s);
    case NodeKind::Neg:
        return -eval_surface(n.kids[0], s);
    case NodeKind::Add:
        return eval_surface(n.kids[0], s) + eval_surface(n.kids[1], s);
    case NodeKind::Sub:
        return eval_surface(n.kids[0], s) - eval_surface(n.kids[1], s);
    case NodeKind::Mul:
        return mul_x(eval_surface(n.kids[0], s), eval_surface(n.kids[1], s), s);
    case NodeKind::Pow: {
        CycleX base = eval_surface(n.kids[0], s);
        CycleX acc = CycleX::unit(s.rho);
        for (long i = 0; i < n.exponent; ++i) {
            acc = mul_x(acc, base, s);
            if (acc.is_zero()) break;
        }
        return acc;
    }
    default:
        throw std::logic_error("blow-up node reached surface evaluation");
    }
}

CycleBlowup eval_blowup(const Node& n, const SurfaceData& s) {
    switch (n.kind) {
    case NodeKind::Number:
        return Poly{n.value} * CycleBlowup::unit(s.rho);
    case NodeKind::SymbolN:
        return Poly::variable() * CycleBlowup::unit(s.rho);
    case NodeKind::ClassD:
        return exceptional_class(s);
    case NodeKind::Box:
        return CycleBlowup::from_kunneth(
            box_product(eval_surface(n.kids[0], s), eval_surface(n.kids[1], s), s));
    case NodeKind::Exc:
        return CycleBlowup::from_exc(eval_surface(n.kids[0], s));
    case NodeKind::Diag:
        return CycleBlowup::from_diag(eval_surface(n.kids[0], s));
    case NodeKind::Neg:
        return -eval_blowup(n.kids[0], s);
    case NodeKind::Add:
        return eval_blowup(n.kids[0], s) + eval_blowup(n.kids[1], s);
    case NodeKind::Sub:
        return eval_blowup(n.kids[0], s) - eval_blowup(n.kids[1], s);
    case NodeKind::Mul:
        return mul_blowup(eval_blowup(n.kids[0], s), eval_blowup(n.kids[1], s), s);
    case NodeKind::Pow: {
        CycleBlowup base = eval_blowup(n.kids[0], s);
        CycleBlowup acc = CycleBlowup::unit(s.rho);
        for (long i = 0; i < n.exponent; ++i) {
            acc = mul_blowup(acc, base, s);
            if (acc.is_zero()) break;
        }
        return acc;
    }
    default:
        throw std::logic_error("surface node reached blow-up evaluation");
    }
}

} // namespace

Expr parse(const std::string& text) {
    Parser p(text);
    return Expr{p.parse_all()};
}

CycleBlowup eval(const Expr& e, const SurfaceData& s) {
    return eval_blowup(e.root, s);
}

std::string format(const CycleBlowup& c, const SurfaceData& s) {
    return format_cycle(c, s);
}

} // namespace hilbstab
