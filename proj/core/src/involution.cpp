#include "pnslab/analysis.hpp"

#include <functional>

namespace pnslab {

const char* to_string(InvolutionKind kind) {
    switch (kind) {
    case InvolutionKind::Identity: return "identity";
    case InvolutionKind::Transpose: return "transpose";
    case InvolutionKind::Componentwise: return "componentwise";
    }
    return "unknown";
}

std::optional<InvolutionKind> parse_involution_kind(std::string_view name) {
    for (auto k : {InvolutionKind::Identity, InvolutionKind::Transpose, InvolutionKind::Componentwise})
        if (name == to_string(k)) return k;
    return std::nullopt;
}

namespace {

using LiteralMap = std::function<Literal(const Literal&)>;

bool descriptor_commutative(const RingDescriptor& d) {
    BuildOptions opt;
    opt.validation = BuildOptions::Validation::Skip;
    return build_ring(d, opt).is_commutative();
}

struct LiteralInvolution {
    LiteralMap map;
    std::string label;
};

LiteralInvolution literal_involution(const RingDescriptor& d, InvolutionKind kind) {
    switch (kind) {
    case InvolutionKind::Identity:
        if (!descriptor_commutative(d))
            throw RingError(ErrorCode::NotCommutative, "identity is an involution only on commutative rings; " +
                                                           d.to_string() + " is not commutative");
        return {[](const Literal& x) { return x; }, "identity"};
    case InvolutionKind::Transpose: {
        bool upper = d.kind() == RingDescriptor::Kind::UpperTriangular;
        if (d.kind() != RingDescriptor::Kind::Matrix && !upper)
            throw RingError(ErrorCode::InvalidArgument, "transpose needs a matrix or triangular ring, got " + d.to_string());
        if (!descriptor_commutative(d.base()))
            throw RingError(ErrorCode::NotCommutative,
                            "transpose is anti-multiplicative only over a commutative base; " + d.base().to_string() +
                                " is not commutative");
        std::size_t k = d.size();
        return {[k, upper](const Literal& x) {
                    auto rows = x.rows;
                    for (std::size_t r = 0; r < k; ++r)
                        for (std::size_t c = 0; c < k; ++c)
                            rows[r][c] = upper ? x.rows[k - 1 - c][k - 1 - r] : x.rows[c][r];
                    return Literal::matrix(std::move(rows));
                },
                "transpose"};
    }
    case InvolutionKind::Componentwise: {
        if (d.kind() != RingDescriptor::Kind::Product)
            throw RingError(ErrorCode::InvalidArgument, "componentwise needs a product ring, got " + d.to_string());
        auto lk = default_involution_kind(d.left());
        auto rk = default_involution_kind(d.right());
        if (!lk || !rk)
            throw RingError(ErrorCode::NotCommutative, "a factor of " + d.to_string() + " has no default involution");
        auto l = literal_involution(d.left(), *lk);
        auto r = literal_involution(d.right(), *rk);
        return {[lm = l.map, rm = r.map](const Literal& x) { return Literal::tuple(lm(x.parts[0]), rm(x.parts[1])); },
                "componentwise(" + l.label + "," + r.label + ")"};
    }
    }
    throw RingError(ErrorCode::InvalidArgument, "unknown involution kind");
}

} // namespace

std::optional<InvolutionKind> default_involution_kind(const RingDescriptor& d) {
    if (descriptor_commutative(d)) return InvolutionKind::Identity;
    switch (d.kind()) {
    case RingDescriptor::Kind::Matrix:
    case RingDescriptor::Kind::UpperTriangular:
        if (descriptor_commutative(d.base())) return InvolutionKind::Transpose;
        return std::nullopt;
    case RingDescriptor::Kind::Product:
        if (default_involution_kind(d.left()) && default_involution_kind(d.right())) return InvolutionKind::Componentwise;
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

Involution build_involution(const FiniteRing& R, InvolutionKind kind) {
    auto li = literal_involution(R.descriptor(), kind);
    Involution inv;
    inv.kind_ = kind;
    inv.label_ = li.label;
    inv.map_.reserve(R.order());
    for (Element x : R.elements()) inv.map_.push_back(R.encode(li.map(R.decode(x))));

    auto fail = [&](const std::string& what) {
        throw RingError(ErrorCode::AxiomViolation, inv.label_ + " on " + R.descriptor().to_string() + ": " + what);
    };
    for (Element x : R.elements()) {
        if (inv(inv(x)) != x) fail("(x*)* != x for x = " + R.format(x));
        for (Element y : R.elements()) {
            if (inv(R.add(x, y)) != R.add(inv(x), inv(y))) fail("not additive");
            if (inv(R.mul(x, y)) != R.mul(inv(y), inv(x)))
                fail("(xy)* != y*x* for x = " + R.format(x) + ", y = " + R.format(y));
        }
    }
    return inv;
}

std::optional<Involution> default_involution(const FiniteRing& ring) {
    auto kind = default_involution_kind(ring.descriptor());
    if (!kind) return std::nullopt;
    return build_involution(ring, *kind);
}

ElementSet projections(const RingAnalysis& analysis, const Involution& inv) {
    std::vector<Element> out;
    for (Element p : analysis.subset(SubsetKind::Idempotents))
        if (inv(p) == p) out.push_back(p);
    return ElementSet(analysis.ring().order(), std::move(out));
}

} // namespace pnslab
