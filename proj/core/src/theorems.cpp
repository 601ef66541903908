#include "pnslab/classify.hpp"

namespace pnslab {

TheoremReport run_theorem(std::string_view id, const RingLab& lab, const SweepOptions& opt) {
    auto tag = [&](TheoremReport r) {
        if (opt.involution && !r.parameters.count("involution")) r.parameters["involution"] = to_string(*opt.involution);
        return r;
    };
    if (id == "Lem-1-1") return tag(sweep_path_agreement(lab, opt));
    if (id == "Lem-1-2") return tag(sweep_radical_rules(lab, opt));
    if (id == "Thm-1234") return tag(sweep_spectral_equality(lab, opt));
    if (id == "Cor-1111") return tag(sweep_idempotent_characterization(lab, opt));
    if (id == "Cor-Pi01") return tag(sweep_trivial_spectra(lab, opt));
    if (id == "Thm-1-3") return tag(std::move(sweep_characterizations(lab, opt)[0]));
    if (id == "Cor-1-4") return tag(std::move(sweep_characterizations(lab, opt)[1]));
    if (id == "Cor-1-5") return tag(std::move(sweep_characterizations(lab, opt)[2]));
    if (id == "Prop-1-10") return tag(sweep_star_routes(lab, opt));
    if (id == "Ex-3-3") return tag(sweep_star_examples(lab, opt));
    if (id == "Lem-3-1") return tag(std::move(sweep_transfers(lab, opt)[0]));
    if (id == "Lem-3-2") return tag(std::move(sweep_transfers(lab, opt)[1]));
    if (id == "Thm-525-1") return tag(std::move(sweep_star_transfers(lab, opt)[0]));
    if (id == "Thm-525-2") return tag(std::move(sweep_star_transfers(lab, opt)[1]));
    if (id == "Thm-2-2") return check_periodic_characterization(lab, opt);
    if (id == "Prop-qnil") return check_qnil_equality(lab, opt);
    if (id == "Prop-corner") return check_corner_closure(lab, opt);
    if (id == "Prop-Tn") return check_triangular_rings(lab, opt);
    if (id == "Prop-Mn") return check_matrix_rings(lab, opt);
    if (id == "Matrix-field") return tag(sweep_matrix_field(lab, opt));
    throw RingError(ErrorCode::InvalidArgument, "unknown theorem id '" + std::string(id) + "'");
}

} // namespace pnslab
