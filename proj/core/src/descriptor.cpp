#include "pnslab/ring.hpp"

#include <limits>
#include <sstream>

namespace pnslab {

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::NotIdempotent: return "NotIdempotent";
    case ErrorCode::AxiomViolation: return "AxiomViolation";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::NotUpperTriangular: return "NotUpperTriangular";
    case ErrorCode::MultipleSpectralIdempotents: return "MultipleSpectralIdempotents";
    case ErrorCode::UnitFailure: return "UnitFailure";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

RingError::RingError(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(pnslab::to_string(code)) + ": " + what), code_(code) {}

Literal Literal::integer(std::int64_t v) {
    Literal l;
    l.kind = Kind::Integer;
    l.value = v;
    return l;
}

Literal Literal::matrix(std::vector<std::vector<Literal>> rows) {
    Literal l;
    l.kind = Kind::Matrix;
    l.rows = std::move(rows);
    return l;
}

Literal Literal::tuple(Literal left, Literal right) {
    Literal l;
    l.kind = Kind::Tuple;
    l.parts.push_back(std::move(left));
    l.parts.push_back(std::move(right));
    return l;
}

std::string to_string(const Literal& lit) {
    switch (lit.kind) {
    case Literal::Kind::Integer:
        return std::to_string(lit.value);
    case Literal::Kind::Matrix: {
        std::string out = "[";
        for (std::size_t r = 0; r < lit.rows.size(); ++r) {
            if (r) out += ",";
            out += "[";
            for (std::size_t c = 0; c < lit.rows[r].size(); ++c) {
                if (c) out += ",";
                out += to_string(lit.rows[r][c]);
            }
            out += "]";
        }
        return out + "]";
    }
    case Literal::Kind::Tuple: {
        std::string out = "(";
        for (std::size_t i = 0; i < lit.parts.size(); ++i) {
            if (i) out += ",";
            out += to_string(lit.parts[i]);
        }
        return out + ")";
    }
    }
    return {};
}

struct RingDescriptor::Node {
    Kind kind = Kind::Zn;
    std::uint64_t modulus = 0;
    std::uint32_t k = 0;
    std::vector<RingDescriptor> children;
    Literal idempotent;
};

RingDescriptor::RingDescriptor(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

RingDescriptor RingDescriptor::zn(std::uint64_t modulus) {
    if (modulus < 2) throw RingError(ErrorCode::InvalidArgument, "Z(n) requires n >= 2");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Zn;
    n->modulus = modulus;
    return RingDescriptor(std::move(n));
}

RingDescriptor RingDescriptor::matrix(std::uint32_t k, RingDescriptor base) {
    if (k < 1) throw RingError(ErrorCode::InvalidArgument, "M(k, R) requires k >= 1");
    auto n = std::make_shared<Node>();
    n->kind = Kind::Matrix;
    n->k = k;
    n->children.push_back(std::move(base));
    return RingDescriptor(std::move(n));
}

RingDescriptor RingDescriptor::upper_triangular(std::uint32_t k, RingDescriptor base) {
    if (k < 1) throw RingError(ErrorCode::InvalidArgument, "T(k, R) requires k >= 1");
    auto n = std::make_shared<Node>();
    n->kind = Kind::UpperTriangular;
    n->k = k;
    n->children.push_back(std::move(base));
    return RingDescriptor(std::move(n));
}

RingDescriptor RingDescriptor::product(RingDescriptor left, RingDescriptor right) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Product;
    n->children.push_back(std::move(left));
    n->children.push_back(std::move(right));
    return RingDescriptor(std::move(n));
}

RingDescriptor RingDescriptor::corner(RingDescriptor base, Literal idempotent) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Corner;
    n->children.push_back(std::move(base));
    n->idempotent = std::move(idempotent);
    return RingDescriptor(std::move(n));
}

RingDescriptor::Kind RingDescriptor::kind() const { return node_->kind; }
std::uint64_t RingDescriptor::modulus() const { return node_->modulus; }
std::uint32_t RingDescriptor::size() const { return node_->k; }
const RingDescriptor& RingDescriptor::base() const { return node_->children.at(0); }
const RingDescriptor& RingDescriptor::left() const { return node_->children.at(0); }
const RingDescriptor& RingDescriptor::right() const { return node_->children.at(1); }
const Literal& RingDescriptor::idempotent() const { return node_->idempotent; }

std::string RingDescriptor::to_string() const {
    switch (kind()) {
    case Kind::Zn:
        return "Z(" + std::to_string(modulus()) + ")";
    case Kind::Matrix:
        return "M(" + std::to_string(size()) + "," + base().to_string() + ")";
    case Kind::UpperTriangular:
        return "T(" + std::to_string(size()) + "," + base().to_string() + ")";
    case Kind::Product: {
        // "x" is left-associative, so only a product on the right needs parentheses.
        std::string rhs = right().to_string();
        if (right().kind() == Kind::Product) rhs = "(" + rhs + ")";
        return left().to_string() + " x " + rhs;
    }
    case Kind::Corner:
        return "corner(" + base().to_string() + "," + pnslab::to_string(idempotent()) + ")";
    }
    return {};
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
    if (a.node_ == b.node_) return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    return x.kind == y.kind && x.modulus == y.modulus && x.k == y.k && x.idempotent == y.idempotent &&
           x.children == y.children;
}

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
    return a * b;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) r = sat_mul(r, base);
    return r;
}

} // namespace

std::uint64_t descriptor_order_bound(const RingDescriptor& d) {
    switch (d.kind()) {
    case RingDescriptor::Kind::Zn:
        return d.modulus();
    case RingDescriptor::Kind::Matrix:
        return sat_pow(descriptor_order_bound(d.base()), std::uint64_t{d.size()} * d.size());
    case RingDescriptor::Kind::UpperTriangular:
        return sat_pow(descriptor_order_bound(d.base()), std::uint64_t{d.size()} * (d.size() + 1) / 2);
    case RingDescriptor::Kind::Product:
        return sat_mul(descriptor_order_bound(d.left()), descriptor_order_bound(d.right()));
    case RingDescriptor::Kind::Corner:
        return descriptor_order_bound(d.base());
    }
    return 0;
}

} // namespace pnslab
