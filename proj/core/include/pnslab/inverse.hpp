#pragma once

// Drazin, p-Drazin, pseudo n-strong Drazin (pns) and pns-*-Drazin inverses.
//
// Every inverse comes with a certificate that can be re-checked
// independently. The pns inverse has two routes:
//   oracle  - exhaustive scan of x in comm^2(a) for xax = x, a^n - ax in sqrt(J)
//   formula - find the idempotent e in comm^2(a) with a^n - e in sqrt(J), then
//             x = (1 + a^n - e)^{-1} a^{n-1} e   (with a^0 = 1)
// Absence of an inverse is a normal return value.

#include "pnslab/analysis.hpp"

#include <optional>
#include <vector>

namespace pnslab {

enum class InversePath { Oracle, Formula };
const char* to_string(InversePath path);

struct PnsCertificate {
    Element a;
    std::uint32_t n = 1;
    Element x;          // a^pns
    Element e;          // spectral idempotent a*x
    std::uint32_t k = 1; // minimal k with (a^n - e)^k in J(R)
    InversePath path = InversePath::Oracle;
    // Oracle: number of x satisfying the definition. Formula: number of
    // candidate spectral idempotents. Exactly 1 whenever a certificate exists.
    std::uint32_t matches = 1;
    std::optional<Element> unit; // formula: 1 + a^n - e
    bool valid = false;          // result of validate() at construction
};

enum class DrazinFlavor { Drazin, PDrazin };
const char* to_string(DrazinFlavor flavor);

struct DrazinCertificate {
    Element a;
    Element x;
    DrazinFlavor flavor = DrazinFlavor::Drazin;
    Element defect;      // a - a^2 x
    std::uint32_t k = 1; // defect^k = 0 (Drazin) or defect^k in J(R) (p-Drazin)
    std::optional<Element> pseudo_polar_idempotent; // p in comm^2(a), a+p unit, ap in sqrt(J)
    std::uint32_t matches = 1;
    bool valid = false;
};

struct StarPnsCertificate {
    PnsCertificate pns;
    std::string involution;
    Element spectral_adjoint;         // (ax)*
    std::optional<Element> projection; // projection p in comm^2(a) with a^n - p in sqrt(J)
    bool routes_agree = true;
};

// Both characterizations of pns-*-invertibility, evaluated independently.
struct StarRoutes {
    bool by_definition = false; // pns inverse exists and (ax)* = ax
    bool by_projection = false; // a projection p in comm^2(a) has a^n - p in sqrt(J)
};

Element invert_unit(const RingAnalysis& analysis, Element u);

std::optional<DrazinCertificate> drazin_inverse(const RingAnalysis& analysis, Element a);
std::optional<DrazinCertificate> p_drazin_inverse(const RingAnalysis& analysis, Element a);
std::optional<Element> pseudo_polar_idempotent(const RingAnalysis& analysis, Element a);

std::optional<PnsCertificate> pns_oracle(const RingAnalysis& analysis, Element a, std::uint32_t n);
// Throws MultipleSpectralIdempotents or UnitFailure when the closed form's
// preconditions are contradicted by the ring.
std::optional<PnsCertificate> pns_formula(const RingAnalysis& analysis, Element a, std::uint32_t n);

std::optional<StarPnsCertificate> pns_star(const RingAnalysis& analysis, const Involution& inv, Element a,
                                           std::uint32_t n);
StarRoutes star_routes(const RingAnalysis& analysis, const Involution& inv, Element a, std::uint32_t n);

struct PnsSpectrum {
    Element a;
    std::uint32_t max_n = 1;
    std::vector<std::uint32_t> exponents; // n in 1..max_n admitting a pns inverse
    std::optional<std::uint32_t> minimal() const {
        if (exponents.empty()) return std::nullopt;
        return exponents.front();
    }
};

PnsSpectrum pns_spectrum(const RingAnalysis& analysis, Element a, std::uint32_t max_n);

bool validate(const RingAnalysis& analysis, const PnsCertificate& cert);
bool validate(const RingAnalysis& analysis, const DrazinCertificate& cert);

// Memoized oracle results for sweeps over many (a, n).
class PnsTable {
public:
    explicit PnsTable(const RingAnalysis& analysis);
    PnsTable(const PnsTable&) = delete;
    PnsTable& operator=(const PnsTable&) = delete;
    ~PnsTable();

    const RingAnalysis& analysis() const { return analysis_; }
    std::optional<Element> inverse(Element a, std::uint32_t n) const;
    std::optional<Element> spectral_idempotent(Element a, std::uint32_t n) const;
    bool invertible(Element a, std::uint32_t n) const { return inverse(a, n).has_value(); }

private:
    struct State;
    const RingAnalysis& analysis_;
    std::unique_ptr<State> state_;
};

} // namespace pnslab
