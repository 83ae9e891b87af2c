#include "gapbound/expression.hpp"

#include <cctype>
#include <cstdlib>

#include "gapbound/error.hpp"

namespace gapbound {

namespace {

constexpr long kMaxExponent = 100000;

enum class Tok { Number, Var, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::size_t pos;
    BigRational value;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') {
            std::string digits;
            std::size_t frac = 0;
            bool dot = false;
            while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || (s[i] == '.' && !dot))) {
                if (s[i] == '.') {
                    dot = true;
                } else {
                    digits += s[i];
                    if (dot) ++frac;
                }
                ++i;
            }
            if (digits.empty()) throw SyntaxError(start, "malformed number");
            BigInt den;
            mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
            out.push_back({Tok::Number, start, BigRational(BigInt(digits), den)});
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            std::string_view word = s.substr(start, i - start);
            if (word != "t") throw SyntaxError(start, "unknown identifier '" + std::string(word) + "' (the variable is t)");
            out.push_back({Tok::Var, start, {}});
            continue;
        }
        Tok kind;
        switch (ch) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '/': kind = Tok::Slash; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            default: throw SyntaxError(start, std::string("unexpected character '") + ch + "'");
        }
        out.push_back({kind, start, {}});
        ++i;
    }
    out.push_back({Tok::End, s.size(), {}});
    return out;
}

// Binding powers.
constexpr int kAdditive = 10;
constexpr int kMultiplicative = 20;
constexpr int kUnary = 30;
constexpr int kPower = 40;

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

    Expr parse() {
        Expr e = expression(0);
        if (peek().kind != Tok::End) throw SyntaxError(peek().pos, "unexpected token after expression");
        return e;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    const Token& next() { return toks_[pos_++]; }

    static int infix_power(Tok t) {
        switch (t) {
            case Tok::Plus:
            case Tok::Minus: return kAdditive;
            case Tok::Star:
            case Tok::Slash: return kMultiplicative;
            case Tok::Caret: return kPower;
            default: return -1;
        }
    }

    Expr expression(int min_power) {
        Expr lhs = prefix();
        while (true) {
            const Token& op = peek();
            int power = infix_power(op.kind);
            if (power < 0) {
                if (op.kind == Tok::Number || op.kind == Tok::Var || op.kind == Tok::LParen)
                    throw SyntaxError(op.pos, "missing operator (implicit multiplication is not supported)");
                break;
            }
            if (power <= min_power) break;
            next();
            if (op.kind == Tok::Caret) {
                lhs = power_node(std::move(lhs));
                continue;
            }
            Expr rhs = expression(power);
            Expr node;
            node.position = lhs.position;
            switch (op.kind) {
                case Tok::Plus: node.kind = Expr::Kind::Add; break;
                case Tok::Minus: node.kind = Expr::Kind::Sub; break;
                case Tok::Star: node.kind = Expr::Kind::Mul; break;
                default: node.kind = Expr::Kind::Div; break;
            }
            node.operands.push_back(std::move(lhs));
            node.operands.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    Expr power_node(Expr base) {
        const std::size_t exp_pos = peek().pos;
        // Right associative: the exponent may itself contain ^.
        Expr exponent = expression(kPower - 1);
        RationalFunction value = evaluate(exponent);
        if (!value.is_constant() || !(value.is_zero() || value.num().leading_coefficient().is_integer()))
            throw SyntaxError(exp_pos, "exponent must be an integer", ErrorKind::NonIntegerExponent);
        BigInt e = value.is_zero() ? BigInt(0) : value.num().leading_coefficient().numerator();
        if (abs(e) > kMaxExponent) throw SyntaxError(exp_pos, "exponent too large");
        Expr node;
        node.kind = Expr::Kind::Pow;
        node.position = base.position;
        node.exponent = e.get_si();
        node.operands.push_back(std::move(base));
        return node;
    }

    Expr prefix() {
        const Token& tok = next();
        Expr node;
        node.position = tok.pos;
        switch (tok.kind) {
            case Tok::Number:
                node.kind = Expr::Kind::Constant;
                node.value = tok.value;
                return node;
            case Tok::Var:
                node.kind = Expr::Kind::Variable;
                return node;
            case Tok::Minus:
                node.kind = Expr::Kind::Negate;
                node.operands.push_back(expression(kUnary));
                return node;
            case Tok::Plus:
                return expression(kUnary);
            case Tok::LParen: {
                Expr inner = expression(0);
                if (peek().kind != Tok::RParen) throw SyntaxError(peek().pos, "expected ')'");
                next();
                return inner;
            }
            case Tok::End:
                throw SyntaxError(tok.pos, "unexpected end of input");
            default:
                throw SyntaxError(tok.pos, "unexpected token");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

}  // namespace

Expr parse_expression(std::string_view text) { return Parser(tokenize(text)).parse(); }

RationalFunction evaluate(const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::Constant: return RationalFunction(e.value);
        case Expr::Kind::Variable: return RationalFunction::variable();
        case Expr::Kind::Negate: return -evaluate(e.operands[0]);
        case Expr::Kind::Add: return evaluate(e.operands[0]) + evaluate(e.operands[1]);
        case Expr::Kind::Sub: return evaluate(e.operands[0]) - evaluate(e.operands[1]);
        case Expr::Kind::Mul: return evaluate(e.operands[0]) * evaluate(e.operands[1]);
        case Expr::Kind::Div: {
            RationalFunction den = evaluate(e.operands[1]);
            if (den.is_zero())
                throw Error(ErrorKind::DivideByZeroPolynomial,
                            "division by zero at position " + std::to_string(e.operands[1].position));
            return evaluate(e.operands[0]) / den;
        }
        case Expr::Kind::Pow: {
            RationalFunction base = evaluate(e.operands[0]);
            if (base.is_zero() && e.exponent < 0)
                throw Error(ErrorKind::DivideByZeroPolynomial,
                            "negative power of zero at position " + std::to_string(e.position));
            return base.pow(e.exponent);
        }
    }
    return {};
}

RationalFunction parse_rational_function(std::string_view text) { return evaluate(parse_expression(text)); }

BigRational parse_rational_constant(std::string_view text) {
    RationalFunction r = parse_rational_function(text);
    if (!r.is_constant()) throw SyntaxError(0, "expected a rational constant, got '" + std::string(text) + "'");
    return r.is_zero() ? BigRational() : r.num().leading_coefficient();
}

}  // namespace gapbound
