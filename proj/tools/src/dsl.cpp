#include "pnslab/cli/dsl.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace pnslab::cli {

SyntaxError::SyntaxError(std::size_t position, const std::string& message)
    : RingError(ErrorCode::SyntaxError, "position " + std::to_string(position) + ": " + message),
      position_(position) {}

bool operator==(const RingExpr& a, const RingExpr& b) {
    return a.kind == b.kind && a.value == b.value && a.children == b.children && a.literal == b.literal;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RingExpr expression() {
        skip();
        auto begin = pos_;
        auto left = term();
        while (peek() == 'x') {
            ++pos_;
            auto right = term();
            RingExpr product;
            product.kind = RingExpr::Kind::Product;
            product.children = {std::move(left), std::move(right)};
            product.span = {begin, pos_};
            left = std::move(product);
        }
        return left;
    }

    Literal literal() {
        char c = peek();
        if (c == '[') {
            ++pos_;
            std::vector<std::vector<Literal>> rows;
            do {
                expect('[');
                std::vector<Literal> row;
                do row.push_back(literal());
                while (accept(','));
                expect(']');
                rows.push_back(std::move(row));
            } while (accept(','));
            expect(']');
            return Literal::matrix(std::move(rows));
        }
        if (c == '(') {
            ++pos_;
            auto left = literal();
            expect(',');
            auto right = literal();
            expect(')');
            return Literal::tuple(std::move(left), std::move(right));
        }
        return Literal::integer(signed_integer());
    }

    void finish() {
        if (peek() != '\0') fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }

private:
    RingExpr term() {
        skip();
        auto begin = pos_;
        RingExpr e;
        if (accept_word("corner")) {
            expect('(');
            e.kind = RingExpr::Kind::Corner;
            e.children.push_back(expression());
            expect(',');
            e.literal = literal();
            expect(')');
        } else if (accept_word("Z")) {
            expect('(');
            e.kind = RingExpr::Kind::Zn;
            e.value = unsigned_integer();
            expect(')');
        } else if (accept_word("M") || accept_word("T")) {
            e.kind = text_[begin] == 'M' ? RingExpr::Kind::Matrix : RingExpr::Kind::UpperTriangular;
            expect('(');
            e.value = unsigned_integer();
            expect(',');
            e.children.push_back(expression());
            expect(')');
        } else if (accept('(')) {
            auto inner = expression();
            expect(')');
            inner.span = {begin, pos_};
            return inner;
        } else {
            fail(peek() == '\0' ? "unexpected end of input" : "expected a ring term");
        }
        e.span = {begin, pos_};
        return e;
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'" +
                 (pos_ < text_.size() ? std::string(", found '") + text_[pos_] + "'" : ", found end of input"));
    }
    // Keywords are followed by '(' so "Z(2)xZ(9)" splits unambiguously.
    bool accept_word(std::string_view w) {
        skip();
        if (text_.substr(pos_, w.size()) != w) return false;
        auto after = pos_ + w.size();
        while (after < text_.size() && std::isspace(static_cast<unsigned char>(text_[after]))) ++after;
        if (after >= text_.size() || text_[after] != '(') return false;
        pos_ += w.size();
        return true;
    }
    std::uint64_t unsigned_integer() {
        skip();
        auto begin = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (begin == pos_) fail("expected an integer");
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + begin, text_.data() + pos_, v);
        if (ec != std::errc()) {
            pos_ = begin;
            fail("integer out of range");
        }
        return v;
    }
    std::int64_t signed_integer() {
        skip();
        bool negative = accept('-');
        auto at = pos_;
        auto v = unsigned_integer();
        if (v > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
            pos_ = at;
            fail("integer out of range");
        }
        return negative ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
    }
    [[noreturn]] void fail(const std::string& message) { throw SyntaxError(pos_, message); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

RingExpr parse_ring_expr(std::string_view text) {
    Parser p(text);
    auto e = p.expression();
    p.finish();
    return e;
}

Literal parse_literal(std::string_view text) {
    Parser p(text);
    auto lit = p.literal();
    p.finish();
    return lit;
}

std::string print(const RingExpr& e) {
    using K = RingExpr::Kind;
    switch (e.kind) {
    case K::Zn: return "Z(" + std::to_string(e.value) + ")";
    case K::Matrix: return "M(" + std::to_string(e.value) + "," + print(e.children.at(0)) + ")";
    case K::UpperTriangular: return "T(" + std::to_string(e.value) + "," + print(e.children.at(0)) + ")";
    case K::Corner: return "corner(" + print(e.children.at(0)) + "," + to_string(e.literal) + ")";
    case K::Product: {
        const auto& right = e.children.at(1);
        auto r = print(right);
        if (right.kind == K::Product) r = "(" + r + ")";
        return print(e.children.at(0)) + " x " + r;
    }
    }
    return {};
}

RingDescriptor to_descriptor(const RingExpr& e) {
    using K = RingExpr::Kind;
    auto narrow = [&](std::uint64_t v) {
        if (v > std::numeric_limits<std::uint32_t>::max())
            throw SyntaxError(e.span.begin, "matrix size out of range");
        return static_cast<std::uint32_t>(v);
    };
    switch (e.kind) {
    case K::Zn: return RingDescriptor::zn(e.value);
    case K::Matrix: return RingDescriptor::matrix(narrow(e.value), to_descriptor(e.children.at(0)));
    case K::UpperTriangular: return RingDescriptor::upper_triangular(narrow(e.value), to_descriptor(e.children.at(0)));
    case K::Product: return RingDescriptor::product(to_descriptor(e.children.at(0)), to_descriptor(e.children.at(1)));
    case K::Corner: return RingDescriptor::corner(to_descriptor(e.children.at(0)), e.literal);
    }
    throw RingError(ErrorCode::InvalidArgument, "unknown ring expression");
}

RingExpr from_descriptor(const RingDescriptor& d) {
    using K = RingExpr::Kind;
    RingExpr e;
    e.kind = d.kind();
    switch (d.kind()) {
    case K::Zn: e.value = d.modulus(); break;
    case K::Matrix:
    case K::UpperTriangular:
        e.value = d.size();
        e.children.push_back(from_descriptor(d.base()));
        break;
    case K::Product:
        e.children.push_back(from_descriptor(d.left()));
        e.children.push_back(from_descriptor(d.right()));
        break;
    case K::Corner:
        e.children.push_back(from_descriptor(d.base()));
        e.literal = d.idempotent();
        break;
    }
    return e;
}

Element parse_element(std::string_view text, const FiniteRing& ring) { return ring.encode(parse_literal(text)); }

std::vector<RingDescriptor> parse_corpus(std::string_view text) {
    std::vector<RingDescriptor> out;
    std::size_t line_start = 0, line_no = 1;
    while (line_start <= text.size()) {
        auto end = text.find('\n', line_start);
        if (end == std::string_view::npos) end = text.size();
        auto line = text.substr(line_start, end - line_start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
        if (!blank) {
            try {
                out.push_back(to_descriptor(parse_ring_expr(line)));
            } catch (const SyntaxError& e) {
                throw SyntaxError(line_start + e.position(), "line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        line_start = end + 1;
        ++line_no;
    }
    return out;
}

} // namespace pnslab::cli
