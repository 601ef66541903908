#pragma once

// Ring-level properties computed independently from their definitions, and
// structural statements relating them.

#include "pnslab/lab.hpp"

#include <string>
#include <vector>

namespace pnslab {

struct ClassificationFlag {
    bool value = false;
    // An element witnessing the verdict: a counterexample when false, a
    // representative (if any) when true.
    std::optional<Element> witness;
    std::string detail;
};

struct RingClassification {
    ClassificationFlag periodic;             // a^m = a^n, m > n >= 1, for every a
    ClassificationFlag strongly_pi_regular;  // a^n in a^(n+1)R and Ra^(n+1) for some n
    ClassificationFlag pseudo_pi_polar;      // every a pns-invertible for some n (per element)
    ClassificationFlag pseudo_pi_polar_uniform; // one common n for every a
    ClassificationFlag pi_uu;                // u^n - 1 nilpotent for every unit u
    ClassificationFlag jacobson_nil;         // J(R) consists of nilpotents
    ClassificationFlag pseudo_polar;         // every a has a pseudo-polar idempotent
    ClassificationFlag local;                // non-units closed under addition
    ClassificationFlag special_local;        // local and u^n in 1 + J(R) for every unit u
    std::uint32_t uniform_n = 0;             // exponent tried for the uniform variant
};

RingClassification classify(const RingLab& lab);

// Named flags in a fixed order, for reports and printing.
std::vector<std::pair<std::string, const ClassificationFlag*>> flag_list(const RingClassification& c);

TheoremReport check_periodic_characterization(const RingLab& lab, const SweepOptions& opt); // Thm-2-2
TheoremReport check_qnil_equality(const RingLab& lab, const SweepOptions& opt);             // Prop-qnil
TheoremReport check_corner_closure(const RingLab& lab, const SweepOptions& opt);            // Prop-corner
TheoremReport check_triangular_rings(const RingLab& lab, const SweepOptions& opt);          // Prop-Tn
TheoremReport check_matrix_rings(const RingLab& lab, const SweepOptions& opt);              // Prop-Mn

// The five structural statements above, in that order.
std::vector<TheoremReport> structural_props(const RingLab& lab, const SweepOptions& opt);

// Looks for a pseudo pi-polar pi-UU ring that is not strongly pi-regular.
TheoremReport conjecture_search(const std::vector<RingDescriptor>& corpus, const SweepOptions& opt = {});

} // namespace pnslab
