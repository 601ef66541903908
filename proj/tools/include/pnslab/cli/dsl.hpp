#pragma once

// Ring expression language:
//   expr := term ("x" term)*                      products are left-associative
//   term := "Z(" int ")" | "M(" int "," expr ")" | "T(" int "," expr ")"
//         | "corner(" expr "," literal ")" | "(" expr ")"
//   literal := int | "[" row ("," row)* "]" | "(" literal "," literal ")"
//   row := "[" literal ("," literal)* "]"
// Whitespace is ignored between tokens.

#include "pnslab/ring.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace pnslab::cli {

struct Span {
    std::size_t begin = 0;
    std::size_t end = 0;
};

class SyntaxError : public RingError {
public:
    SyntaxError(std::size_t position, const std::string& message);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

struct RingExpr {
    using Kind = RingDescriptor::Kind;

    Kind kind = Kind::Zn;
    std::uint64_t value = 0;        // modulus (Zn) or size (Matrix, UpperTriangular)
    std::vector<RingExpr> children; // base, or left and right
    Literal literal;                // Corner idempotent
    Span span;

    // Structural equality; spans are ignored.
    friend bool operator==(const RingExpr& a, const RingExpr& b);
};

RingExpr parse_ring_expr(std::string_view text);
std::string print(const RingExpr& expr);
RingDescriptor to_descriptor(const RingExpr& expr);
RingExpr from_descriptor(const RingDescriptor& d);

Literal parse_literal(std::string_view text);
// Parses a literal and encodes it in the ring (ShapeMismatch, OutOfRange,
// NotUpperTriangular from the ring's codec).
Element parse_element(std::string_view text, const FiniteRing& ring);

// Newline-separated ring expressions; '#' starts a comment.
std::vector<RingDescriptor> parse_corpus(std::string_view text);

} // namespace pnslab::cli
