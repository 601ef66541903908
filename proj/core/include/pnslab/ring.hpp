#pragma once

// Finite unital rings built compositionally from Z/n, matrix rings, upper
// triangular matrix rings, direct products and corner rings.
//
// Every ring enumerates its elements as indices 0..order-1 in the
// lexicographic order of their structural literal (mixed radix). Index 0 is
// always the zero element.

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace pnslab {

enum class ErrorCode {
    OrderCapExceeded,
    NotIdempotent,
    AxiomViolation,
    ShapeMismatch,
    OutOfRange,
    NotAUnit,
    NotCommutative,
    NotUpperTriangular,
    MultipleSpectralIdempotents,
    UnitFailure,
    SyntaxError,
    InvalidArgument,
};

const char* to_string(ErrorCode code);

class RingError : public std::runtime_error {
public:
    RingError(ErrorCode code, const std::string& what);

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Structured value of an element: a residue, a matrix of literals, or a pair.
struct Literal {
    enum class Kind { Integer, Matrix, Tuple };

    Kind kind = Kind::Integer;
    std::int64_t value = 0;
    std::vector<std::vector<Literal>> rows;
    std::vector<Literal> parts;

    static Literal integer(std::int64_t v);
    static Literal matrix(std::vector<std::vector<Literal>> rows);
    static Literal tuple(Literal left, Literal right);

    friend bool operator==(const Literal&, const Literal&) = default;
};

// "5", "[[0,1],[0,0]]", "(2,3)", nested as needed.
std::string to_string(const Literal& lit);

class RingDescriptor {
public:
    enum class Kind { Zn, Matrix, UpperTriangular, Product, Corner };

    static RingDescriptor zn(std::uint64_t modulus);
    static RingDescriptor matrix(std::uint32_t k, RingDescriptor base);
    static RingDescriptor upper_triangular(std::uint32_t k, RingDescriptor base);
    static RingDescriptor product(RingDescriptor left, RingDescriptor right);
    static RingDescriptor corner(RingDescriptor base, Literal idempotent);

    Kind kind() const;
    std::uint64_t modulus() const;      // Zn
    std::uint32_t size() const;         // Matrix, UpperTriangular
    const RingDescriptor& base() const; // Matrix, UpperTriangular, Corner
    const RingDescriptor& left() const; // Product
    const RingDescriptor& right() const;
    const Literal& idempotent() const;  // Corner

    // DSL form, e.g. "M(2,Z(2)) x Z(9)".
    std::string to_string() const;

    friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);

private:
    struct Node;
    explicit RingDescriptor(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

struct Element {
    std::uint32_t index = 0;

    friend auto operator<=>(const Element&, const Element&) = default;
};

// Sorted, duplicate-free set of elements with O(1) membership.
class ElementSet {
public:
    ElementSet() = default;
    ElementSet(std::uint32_t universe, std::vector<Element> members);

    bool contains(Element e) const { return e.index < mask_.size() && mask_[e.index] != 0; }
    std::span<const Element> members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool subset_of(const ElementSet& other) const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    friend bool operator==(const ElementSet& a, const ElementSet& b) { return a.members_ == b.members_; }

private:
    std::vector<Element> members_;
    std::vector<std::uint8_t> mask_;
};

struct PowerTrajectory {
    Element base;
    std::uint32_t tail = 1;   // exponent of the first power that re-occurs
    std::uint32_t period = 1;
    std::vector<Element> powers; // a^1 .. a^(tail+period-1)

    // a^k for any k >= 1, read off the cycle.
    Element power(std::uint64_t k) const;
};

struct BuildOptions {
    enum class Validation { Auto, Force, Skip };

    std::uint64_t order_cap = 65536;
    bool allow_over_cap = false;
    Validation validation = Validation::Auto;
    std::uint64_t validation_cap = 256;
};

namespace detail {
struct RingImpl;
struct RingAccess;
}

class FiniteRing {
public:
    const RingDescriptor& descriptor() const;
    std::uint32_t order() const;

    Element zero() const { return Element{0}; }
    Element one() const;

    Element add(Element a, Element b) const;
    Element sub(Element a, Element b) const;
    Element neg(Element a) const;
    Element mul(Element a, Element b) const;
    Element pow(Element a, std::uint64_t k) const; // a^0 = 1
    Element from_int(std::int64_t v) const;        // v * 1

    bool commutes(Element a, Element b) const { return mul(a, b) == mul(b, a); }
    bool is_commutative() const;

    // Index <-> literal; encode throws ShapeMismatch / OutOfRange / NotUpperTriangular.
    Element encode(const Literal& lit) const;
    Literal decode(Element e) const;
    Element at(std::uint64_t index) const; // OutOfRange when index >= order
    std::string format(Element e) const { return to_string(decode(e)); }

    std::vector<Element> elements() const;

    friend bool operator==(const FiniteRing& a, const FiniteRing& b) { return a.impl_ == b.impl_; }

private:
    friend struct detail::RingAccess;
    explicit FiniteRing(std::shared_ptr<const detail::RingImpl> impl);
    std::shared_ptr<const detail::RingImpl> impl_;
};

// Order of the ring a descriptor describes, computed without building it
// (corners are bounded by their base). Saturates at UINT64_MAX.
std::uint64_t descriptor_order_bound(const RingDescriptor& d);

FiniteRing build_ring(const RingDescriptor& descriptor, const BuildOptions& options = {});

PowerTrajectory power_trajectory(const FiniteRing& ring, Element a);

// Exhaustive check of the ring axioms; throws AxiomViolation on failure.
void validate_ring_axioms(const FiniteRing& ring);

} // namespace pnslab
