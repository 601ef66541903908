#pragma once

// Exhaustive and sampled sweeps that machine-check statements about pns
// inverses on a finite ring. Each statement has a stable identifier (see
// kTheoremIds); every sweep produces a TheoremReport.

#include "pnslab/inverse.hpp"
#include "pnslab/report.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string_view>

namespace pnslab {

struct SweepOptions {
    std::uint32_t n_min = 1;
    std::uint32_t n_max = 4;
    std::optional<InvolutionKind> involution; // default involution of the ring when empty
    std::uint64_t seed = 0x5eed2024;
    std::uint64_t full_pair_cap = 256;   // pair sweeps are exhaustive up to this order
    std::uint64_t full_triple_cap = 16;  // triple sweeps are exhaustive up to this order
    std::uint64_t sample_target = 10000; // hypothesis-satisfying triples drawn above the cap
    std::uint32_t triangular_k = 2;      // Prop-Tn: build T(k, R) for k = 1..triangular_k
    std::uint32_t matrix_k = 2;          // Prop-Mn: build M(matrix_k, R)
    std::uint32_t power_m = 2;           // Prop-Mn: a - a^m nilpotent for all a
    std::uint64_t order_cap = 65536;     // for derived rings (corners, T_k, M_k)
};

// A ring with its analysis caches and memoized pns oracle.
class RingLab {
public:
    explicit RingLab(FiniteRing ring);
    RingLab(const RingLab&) = delete;
    RingLab& operator=(const RingLab&) = delete;
    ~RingLab();

    const FiniteRing& ring() const { return ring_; }
    const RingAnalysis& analysis() const { return analysis_; }
    const PnsTable& pns() const { return pns_; }

    const ElementSet& right_ideal(Element a) const;
    const ElementSet& right_annihilator(Element a) const;

    // pns-*-Drazin inverse through the memoized oracle.
    std::optional<Element> star_inverse(const Involution& inv, Element a, std::uint32_t n) const;

private:
    struct Memo;
    FiniteRing ring_;
    RingAnalysis analysis_;
    PnsTable pns_;
    std::unique_ptr<Memo> memo_;
};

inline constexpr std::array<std::string_view, 20> kTheoremIds = {
    "Lem-1-1",  "Lem-1-2",   "Thm-1234",  "Cor-1111",    "Cor-Pi01", "Thm-1-3", "Cor-1-4",
    "Cor-1-5",  "Prop-1-10", "Ex-3-3",    "Lem-3-1",     "Lem-3-2",  "Thm-525-1", "Thm-525-2",
    "Thm-2-2",  "Prop-qnil", "Prop-corner", "Prop-Tn",   "Prop-Mn",  "Matrix-field"};

bool is_theorem_id(std::string_view id);

// ---- single-tuple checks ---------------------------------------------------

// The seven equivalent conditions for a^Pi = b^Pi (a pns-invertible at n).
struct SpectralConditions {
    std::array<bool, 7> holds{};
    bool all_equal() const;
};
SpectralConditions evaluate_spectral_conditions(const RingLab& lab, Element a, Element b, std::uint32_t n);

TheoremReport check_spectral_equality(const RingLab& lab, Element a, Element b, std::uint32_t n);
TheoremReport check_pns_characterizations(const RingLab& lab, Element a, std::uint32_t n);
TheoremReport cline_transfer(const RingLab& lab, Element a, Element b, Element c, std::uint32_t n);
TheoremReport jacobson_transfer(const RingLab& lab, Element a, Element b, Element c, std::uint32_t n);
TheoremReport star_transfers(const RingLab& lab, const Involution& inv, Element a, Element b, Element c,
                             std::uint32_t n);

// ---- sweeps ----------------------------------------------------------------

TheoremReport sweep_path_agreement(const RingLab& lab, const SweepOptions& opt);  // Lem-1-1
TheoremReport sweep_radical_rules(const RingLab& lab, const SweepOptions& opt);   // Lem-1-2
TheoremReport sweep_spectral_equality(const RingLab& lab, const SweepOptions& opt); // Thm-1234
TheoremReport sweep_idempotent_characterization(const RingLab& lab, const SweepOptions& opt); // Cor-1111
TheoremReport sweep_trivial_spectra(const RingLab& lab, const SweepOptions& opt); // Cor-Pi01
// Thm-1-3, Cor-1-4, Cor-1-5 in that order.
std::array<TheoremReport, 3> sweep_characterizations(const RingLab& lab, const SweepOptions& opt);
TheoremReport sweep_star_routes(const RingLab& lab, const SweepOptions& opt);      // Prop-1-10
TheoremReport sweep_star_examples(const RingLab& lab, const SweepOptions& opt);    // Ex-3-3
// Lem-3-1 and Lem-3-2 over triples with aba = aca.
std::array<TheoremReport, 2> sweep_transfers(const RingLab& lab, const SweepOptions& opt);
// Thm-525-1 and Thm-525-2 over triples with aba = ba^2 = a^2c = aca.
std::array<TheoremReport, 2> sweep_star_transfers(const RingLab& lab, const SweepOptions& opt);
// sqrt(J) = nilpotents and every element p-Drazin invertible (matrix rings over fields).
TheoremReport sweep_matrix_field(const RingLab& lab, const SweepOptions& opt);

// Dispatch by identifier; includes the structural statements of classify.hpp.
TheoremReport run_theorem(std::string_view id, const RingLab& lab, const SweepOptions& opt);

// ---- triple enumeration ----------------------------------------------------

enum class TripleHypothesis {
    Cline, // aba = aca
    Star,  // aba = ba^2 = a^2c = aca
};

struct TripleStats {
    std::uint64_t population = 0; // hypothesis-satisfying triples in the ring
    std::uint64_t visited = 0;
    bool sampled = false;
};

// Visits hypothesis-satisfying triples in lexicographic index order:
// all of them when order <= full_triple_cap, otherwise a deterministic
// stratified sample (one stratum per a) of at least sample_target triples.
TripleStats for_each_triple(const RingLab& lab, TripleHypothesis hyp, const SweepOptions& opt,
                            const std::function<void(Element, Element, Element)>& visit);

} // namespace pnslab
