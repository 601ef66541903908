#pragma once

// Structural subsets and maps of a finite ring: units, nilpotents,
// idempotents, the Jacobson radical J(R), sqrt(J(R)), quasi-nilpotents,
// commutants, annihilators, involutions and projections.
//
// J(R) is computed from its definition (a in J iff 1 - x*a is a unit for every
// x); in a finite ring a one-sided inverse is two-sided, so that test is exact.

#include "pnslab/ring.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>

namespace pnslab {

enum class SubsetKind { Units, Nilpotents, Idempotents, JacobsonRadical, SqrtJacobson, Quasinilpotents };

inline constexpr std::array kAllSubsetKinds = {SubsetKind::Units,           SubsetKind::Nilpotents,
                                               SubsetKind::Idempotents,     SubsetKind::JacobsonRadical,
                                               SubsetKind::SqrtJacobson,    SubsetKind::Quasinilpotents};

const char* to_string(SubsetKind kind);
std::optional<SubsetKind> parse_subset_kind(std::string_view name);

// Memoizing view of a ring. All caches are filled lazily and are safe under
// concurrent readers.
class RingAnalysis {
public:
    explicit RingAnalysis(FiniteRing ring);
    RingAnalysis(const RingAnalysis&) = delete;
    RingAnalysis& operator=(const RingAnalysis&) = delete;
    ~RingAnalysis();

    const FiniteRing& ring() const { return ring_; }

    const ElementSet& subset(SubsetKind kind) const;

    bool is_unit(Element a) const { return subset(SubsetKind::Units).contains(a); }
    bool is_nilpotent(Element a) const { return subset(SubsetKind::Nilpotents).contains(a); }
    bool is_idempotent(Element a) const { return ring_.mul(a, a) == a; }
    bool in_jacobson(Element a) const { return subset(SubsetKind::JacobsonRadical).contains(a); }
    bool in_sqrt_jacobson(Element a) const { return subset(SubsetKind::SqrtJacobson).contains(a); }
    bool is_quasinilpotent(Element a) const { return subset(SubsetKind::Quasinilpotents).contains(a); }

    // Two-sided inverse; throws NotAUnit.
    Element inverse(Element u) const;

    const PowerTrajectory& trajectory(Element a) const;
    const ElementSet& commutant(Element a) const;
    const ElementSet& double_commutant(Element a) const;
    bool in_double_commutant(Element x, Element a) const { return double_commutant(a).contains(x); }

    ElementSet right_annihilator(Element a) const;
    ElementSet principal_right_ideal(Element a) const; // aR
    ElementSet principal_left_ideal(Element a) const;  // Ra
    // comm(1) = R, so comm^2(1) is the center.
    const ElementSet& center() const { return double_commutant(ring_.one()); }

    // Smallest k >= 1 with x^k in J(R), if any.
    std::optional<std::uint32_t> radical_exponent(Element x) const;
    // Smallest k >= 1 with x^k = 0, if any.
    std::optional<std::uint32_t> nilpotency_index(Element x) const;

private:
    struct Caches;

    ElementSet compute(SubsetKind kind) const;

    FiniteRing ring_;
    std::unique_ptr<Caches> caches_;
};

enum class InvolutionKind { Identity, Transpose, Componentwise };

const char* to_string(InvolutionKind kind);
std::optional<InvolutionKind> parse_involution_kind(std::string_view name);

// A validated additive, anti-multiplicative, self-inverse map on a ring.
//
// On upper triangular rings T(k, R) "transpose" reflects across the
// anti-diagonal, (a_ij) -> (a_{k+1-j, k+1-i}); the ordinary transpose leaves
// the ring.
class Involution {
public:
    InvolutionKind kind() const { return kind_; }
    const std::string& label() const { return label_; }
    Element operator()(Element x) const { return map_.at(x.index); }
    std::span<const Element> table() const { return map_; }

private:
    friend Involution build_involution(const FiniteRing&, InvolutionKind);
    InvolutionKind kind_ = InvolutionKind::Identity;
    std::string label_;
    std::vector<Element> map_;
};

// Throws NotCommutative when the construction's precondition fails
// (identity on a noncommutative ring, transpose over a noncommutative base),
// InvalidArgument when the kind does not apply to the ring's shape, and
// AxiomViolation when the resulting map is not an involution.
Involution build_involution(const FiniteRing& ring, InvolutionKind kind);

// identity for commutative rings, transpose for matrix/triangular rings over
// commutative bases, componentwise for products whose factors have defaults.
std::optional<InvolutionKind> default_involution_kind(const RingDescriptor& d);
std::optional<Involution> default_involution(const FiniteRing& ring);

// Self-adjoint idempotents.
ElementSet projections(const RingAnalysis& analysis, const Involution& inv);

} // namespace pnslab
