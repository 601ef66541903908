#include "pnslab/inverse.hpp"

#include <map>
#include <mutex>

namespace pnslab {

const char* to_string(InversePath path) { return path == InversePath::Oracle ? "oracle" : "formula"; }
const char* to_string(DrazinFlavor flavor) { return flavor == DrazinFlavor::Drazin ? "drazin" : "p-drazin"; }

Element invert_unit(const RingAnalysis& analysis, Element u) { return analysis.inverse(u); }

bool validate(const RingAnalysis& A, const PnsCertificate& c) {
    const auto& R = A.ring();
    if (c.n < 1) return false;
    auto an = R.pow(c.a, c.n);
    bool ok = R.mul(R.mul(c.x, c.a), c.x) == c.x && A.in_double_commutant(c.x, c.a) && R.mul(c.a, c.x) == c.e &&
              R.mul(c.x, c.a) == c.e && R.mul(c.e, c.e) == c.e;
    if (!ok) return false;
    auto defect = R.sub(an, c.e);
    auto k = A.radical_exponent(defect);
    if (!k || *k != c.k) return false;
    // Closed form must reproduce x.
    auto u = R.add(R.one(), defect);
    if (!A.is_unit(u)) return false;
    return R.mul(R.mul(A.inverse(u), R.pow(c.a, c.n - 1)), c.e) == c.x;
}

bool validate(const RingAnalysis& A, const DrazinCertificate& c) {
    const auto& R = A.ring();
    if (R.mul(R.mul(c.x, c.a), c.x) != c.x || !A.in_double_commutant(c.x, c.a)) return false;
    if (c.defect != R.sub(c.a, R.mul(R.mul(c.a, c.a), c.x))) return false;
    auto k = c.flavor == DrazinFlavor::Drazin ? A.nilpotency_index(c.defect) : A.radical_exponent(c.defect);
    if (!k || *k != c.k) return false;
    if (c.pseudo_polar_idempotent) {
        auto p = *c.pseudo_polar_idempotent;
        if (R.mul(p, p) != p || !A.in_double_commutant(p, c.a) || !A.is_unit(R.add(c.a, p)) ||
            !A.in_sqrt_jacobson(R.mul(c.a, p)))
            return false;
    }
    return true;
}

std::optional<Element> pseudo_polar_idempotent(const RingAnalysis& A, Element a) {
    const auto& R = A.ring();
    const auto& dc = A.double_commutant(a);
    for (Element p : A.subset(SubsetKind::Idempotents))
        if (dc.contains(p) && A.is_unit(R.add(a, p)) && A.in_sqrt_jacobson(R.mul(a, p))) return p;
    return std::nullopt;
}

namespace {

std::optional<DrazinCertificate> drazin_scan(const RingAnalysis& A, Element a, DrazinFlavor flavor) {
    const auto& R = A.ring();
    auto a2 = R.mul(a, a);
    std::optional<DrazinCertificate> found;
    std::uint32_t matches = 0;
    for (Element x : A.double_commutant(a)) {
        if (R.mul(R.mul(x, a), x) != x) continue;
        auto defect = R.sub(a, R.mul(a2, x));
        auto k = flavor == DrazinFlavor::Drazin ? A.nilpotency_index(defect) : A.radical_exponent(defect);
        if (!k) continue;
        if (++matches == 1) {
            DrazinCertificate c;
            c.a = a;
            c.x = x;
            c.flavor = flavor;
            c.defect = defect;
            c.k = *k;
            found = c;
        }
    }
    if (!found) return std::nullopt;
    found->matches = matches;
    if (flavor == DrazinFlavor::PDrazin) found->pseudo_polar_idempotent = pseudo_polar_idempotent(A, a);
    found->valid = validate(A, *found);
    return found;
}

} // namespace

std::optional<DrazinCertificate> drazin_inverse(const RingAnalysis& A, Element a) {
    return drazin_scan(A, a, DrazinFlavor::Drazin);
}

std::optional<DrazinCertificate> p_drazin_inverse(const RingAnalysis& A, Element a) {
    return drazin_scan(A, a, DrazinFlavor::PDrazin);
}

std::optional<PnsCertificate> pns_oracle(const RingAnalysis& A, Element a, std::uint32_t n) {
    if (n < 1) throw RingError(ErrorCode::InvalidArgument, "n must be >= 1");
    const auto& R = A.ring();
    auto an = R.pow(a, n);
    std::optional<PnsCertificate> found;
    std::uint32_t matches = 0;
    for (Element x : A.double_commutant(a)) {
        if (R.mul(R.mul(x, a), x) != x) continue;
        auto e = R.mul(a, x);
        if (!A.in_sqrt_jacobson(R.sub(an, e))) continue;
        if (++matches == 1) {
            PnsCertificate c;
            c.a = a;
            c.n = n;
            c.x = x;
            c.e = e;
            c.k = A.radical_exponent(R.sub(an, e)).value();
            c.path = InversePath::Oracle;
            found = c;
        }
    }
    if (!found) return std::nullopt;
    found->matches = matches;
    found->valid = validate(A, *found);
    return found;
}

std::optional<PnsCertificate> pns_formula(const RingAnalysis& A, Element a, std::uint32_t n) {
    if (n < 1) throw RingError(ErrorCode::InvalidArgument, "n must be >= 1");
    const auto& R = A.ring();
    auto an = R.pow(a, n);
    const auto& dc = A.double_commutant(a);
    std::vector<Element> candidates;
    for (Element e : A.subset(SubsetKind::Idempotents))
        if (dc.contains(e) && A.in_sqrt_jacobson(R.sub(an, e))) candidates.push_back(e);
    if (candidates.empty()) return std::nullopt;
    if (candidates.size() > 1)
        throw RingError(ErrorCode::MultipleSpectralIdempotents,
                        std::to_string(candidates.size()) + " spectral idempotents for a = " + R.format(a) +
                            ", n = " + std::to_string(n));
    auto e = candidates.front();
    auto u = R.add(R.one(), R.sub(an, e));
    if (!A.is_unit(u))
        throw RingError(ErrorCode::UnitFailure, "1 + a^n - e = " + R.format(u) + " is not a unit for a = " + R.format(a));
    PnsCertificate c;
    c.a = a;
    c.n = n;
    c.e = e;
    c.x = R.mul(R.mul(A.inverse(u), R.pow(a, n - 1)), e);
    c.k = A.radical_exponent(R.sub(an, e)).value();
    c.path = InversePath::Formula;
    c.unit = u;
    c.matches = 1;
    c.valid = validate(A, c);
    return c;
}

namespace {

std::optional<Element> projection_route(const RingAnalysis& A, const Involution& inv, Element a, std::uint32_t n) {
    const auto& R = A.ring();
    auto an = R.pow(a, n);
    const auto& dc = A.double_commutant(a);
    for (Element p : projections(A, inv))
        if (dc.contains(p) && A.in_sqrt_jacobson(R.sub(an, p))) return p;
    return std::nullopt;
}

} // namespace

StarRoutes star_routes(const RingAnalysis& A, const Involution& inv, Element a, std::uint32_t n) {
    StarRoutes r;
    if (auto c = pns_oracle(A, a, n)) r.by_definition = inv(c->e) == c->e;
    r.by_projection = projection_route(A, inv, a, n).has_value();
    return r;
}

std::optional<StarPnsCertificate> pns_star(const RingAnalysis& A, const Involution& inv, Element a, std::uint32_t n) {
    auto pns = pns_oracle(A, a, n);
    auto p = projection_route(A, inv, a, n);
    bool by_definition = pns && inv(pns->e) == pns->e;
    if (!by_definition) return std::nullopt;
    StarPnsCertificate c;
    c.pns = *pns;
    c.involution = inv.label();
    c.spectral_adjoint = inv(pns->e);
    c.projection = p;
    c.routes_agree = p.has_value() && *p == pns->e;
    return c;
}

PnsSpectrum pns_spectrum(const RingAnalysis& A, Element a, std::uint32_t max_n) {
    if (max_n < 1) throw RingError(ErrorCode::InvalidArgument, "max n must be >= 1");
    PnsSpectrum s;
    s.a = a;
    s.max_n = max_n;
    for (std::uint32_t n = 1; n <= max_n; ++n)
        if (pns_formula(A, a, n)) s.exponents.push_back(n);
    return s;
}

struct PnsTable::State {
    std::mutex mutex;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::optional<Element>> inverses;
};

PnsTable::PnsTable(const RingAnalysis& analysis) : analysis_(analysis), state_(std::make_unique<State>()) {}
PnsTable::~PnsTable() = default;

std::optional<Element> PnsTable::inverse(Element a, std::uint32_t n) const {
    auto key = std::make_pair(a.index, n);
    {
        std::lock_guard lock(state_->mutex);
        if (auto it = state_->inverses.find(key); it != state_->inverses.end()) return it->second;
    }
    std::optional<Element> x;
    if (auto c = pns_oracle(analysis_, a, n)) x = c->x;
    std::lock_guard lock(state_->mutex);
    state_->inverses.emplace(key, x);
    return x;
}

std::optional<Element> PnsTable::spectral_idempotent(Element a, std::uint32_t n) const {
    auto x = inverse(a, n);
    if (!x) return std::nullopt;
    return analysis_.ring().mul(a, *x);
}

} // namespace pnslab
