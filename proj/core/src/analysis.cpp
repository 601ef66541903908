#include "pnslab/analysis.hpp"

#include <limits>

namespace pnslab {

const char* to_string(SubsetKind kind) {
    switch (kind) {
    case SubsetKind::Units: return "units";
    case SubsetKind::Nilpotents: return "nilpotents";
    case SubsetKind::Idempotents: return "idempotents";
    case SubsetKind::JacobsonRadical: return "jacobson_radical";
    case SubsetKind::SqrtJacobson: return "sqrt_jacobson";
    case SubsetKind::Quasinilpotents: return "quasinilpotents";
    }
    return "unknown";
}

std::optional<SubsetKind> parse_subset_kind(std::string_view name) {
    for (auto k : kAllSubsetKinds)
        if (name == to_string(k)) return k;
    return std::nullopt;
}

namespace {
constexpr std::uint32_t kNoInverse = std::numeric_limits<std::uint32_t>::max();
}

struct RingAnalysis::Caches {
    explicit Caches(std::uint32_t order)
        : trajectories(order), commutants(order), double_commutants(order) {}

    std::array<std::once_flag, kAllSubsetKinds.size()> subset_once;
    std::array<ElementSet, kAllSubsetKinds.size()> subsets;

    std::once_flag inverse_once;
    std::vector<std::uint32_t> inverse_of;

    std::mutex mutex;
    std::vector<std::unique_ptr<PowerTrajectory>> trajectories;
    std::vector<std::unique_ptr<ElementSet>> commutants;
    std::vector<std::unique_ptr<ElementSet>> double_commutants;
};

RingAnalysis::RingAnalysis(FiniteRing ring)
    : ring_(std::move(ring)), caches_(std::make_unique<Caches>(ring_.order())) {}

RingAnalysis::~RingAnalysis() = default;

const ElementSet& RingAnalysis::subset(SubsetKind kind) const {
    auto i = static_cast<std::size_t>(kind);
    std::call_once(caches_->subset_once[i], [&] { caches_->subsets[i] = compute(kind); });
    return caches_->subsets[i];
}

Element RingAnalysis::inverse(Element u) const {
    std::call_once(caches_->inverse_once, [&] {
        const auto& R = ring_;
        std::vector<std::uint32_t> inv(R.order(), kNoInverse);
        for (Element a : R.elements()) {
            if (inv[a.index] != kNoInverse) continue;
            for (Element b : R.elements())
                if (R.mul(a, b) == R.one() && R.mul(b, a) == R.one()) {
                    inv[a.index] = b.index;
                    inv[b.index] = a.index;
                    break;
                }
        }
        caches_->inverse_of = std::move(inv);
    });
    auto v = caches_->inverse_of.at(u.index);
    if (v == kNoInverse) throw RingError(ErrorCode::NotAUnit, ring_.format(u) + " is not a unit");
    return Element{v};
}

ElementSet RingAnalysis::compute(SubsetKind kind) const {
    const auto& R = ring_;
    std::vector<Element> out;
    switch (kind) {
    case SubsetKind::Units:
        inverse(R.one()); // fills the inverse table
        for (Element a : R.elements())
            if (caches_->inverse_of[a.index] != kNoInverse) out.push_back(a);
        break;
    case SubsetKind::Nilpotents:
        for (Element a : R.elements())
            if (nilpotency_index(a)) out.push_back(a);
        break;
    case SubsetKind::Idempotents:
        for (Element a : R.elements())
            if (is_idempotent(a)) out.push_back(a);
        break;
    case SubsetKind::JacobsonRadical: {
        const auto& units = subset(SubsetKind::Units);
        for (Element a : R.elements()) {
            bool in = true;
            for (Element x : R.elements())
                if (!units.contains(R.sub(R.one(), R.mul(x, a)))) {
                    in = false;
                    break;
                }
            if (in) out.push_back(a);
        }
        break;
    }
    case SubsetKind::SqrtJacobson:
        // Powers cycle, so scanning the trajectory covers every a^k.
        for (Element a : R.elements())
            if (radical_exponent(a)) out.push_back(a);
        break;
    case SubsetKind::Quasinilpotents: {
        const auto& units = subset(SubsetKind::Units);
        for (Element a : R.elements()) {
            bool in = true;
            for (Element x : commutant(a))
                if (!units.contains(R.sub(R.one(), R.mul(a, x)))) {
                    in = false;
                    break;
                }
            if (in) out.push_back(a);
        }
        break;
    }
    }
    return ElementSet(R.order(), std::move(out));
}

const PowerTrajectory& RingAnalysis::trajectory(Element a) const {
    std::lock_guard lock(caches_->mutex);
    auto& slot = caches_->trajectories.at(a.index);
    if (!slot) slot = std::make_unique<PowerTrajectory>(power_trajectory(ring_, a));
    return *slot;
}

const ElementSet& RingAnalysis::commutant(Element a) const {
    {
        std::lock_guard lock(caches_->mutex);
        if (auto& slot = caches_->commutants.at(a.index)) return *slot;
    }
    std::vector<Element> out;
    for (Element x : ring_.elements())
        if (ring_.commutes(a, x)) out.push_back(x);
    auto set = std::make_unique<ElementSet>(ring_.order(), std::move(out));
    std::lock_guard lock(caches_->mutex);
    auto& slot = caches_->commutants[a.index];
    if (!slot) slot = std::move(set);
    return *slot;
}

const ElementSet& RingAnalysis::double_commutant(Element a) const {
    {
        std::lock_guard lock(caches_->mutex);
        if (auto& slot = caches_->double_commutants.at(a.index)) return *slot;
    }
    // a lies in comm(a), so comm^2(a) is contained in comm(a).
    const auto& comm = commutant(a);
    std::vector<Element> out;
    for (Element x : comm) {
        bool in = true;
        for (Element y : comm)
            if (!ring_.commutes(x, y)) {
                in = false;
                break;
            }
        if (in) out.push_back(x);
    }
    auto set = std::make_unique<ElementSet>(ring_.order(), std::move(out));
    std::lock_guard lock(caches_->mutex);
    auto& slot = caches_->double_commutants[a.index];
    if (!slot) slot = std::move(set);
    return *slot;
}

ElementSet RingAnalysis::right_annihilator(Element a) const {
    std::vector<Element> out;
    for (Element x : ring_.elements())
        if (ring_.mul(a, x) == ring_.zero()) out.push_back(x);
    return ElementSet(ring_.order(), std::move(out));
}

ElementSet RingAnalysis::principal_right_ideal(Element a) const {
    std::vector<Element> out;
    for (Element x : ring_.elements()) out.push_back(ring_.mul(a, x));
    return ElementSet(ring_.order(), std::move(out));
}

ElementSet RingAnalysis::principal_left_ideal(Element a) const {
    std::vector<Element> out;
    for (Element x : ring_.elements()) out.push_back(ring_.mul(x, a));
    return ElementSet(ring_.order(), std::move(out));
}

std::optional<std::uint32_t> RingAnalysis::radical_exponent(Element x) const {
    const auto& J = subset(SubsetKind::JacobsonRadical);
    const auto& t = trajectory(x);
    for (std::uint32_t k = 1; k <= t.powers.size(); ++k)
        if (J.contains(t.powers[k - 1])) return k;
    return std::nullopt;
}

std::optional<std::uint32_t> RingAnalysis::nilpotency_index(Element x) const {
    const auto& t = trajectory(x);
    for (std::uint32_t k = 1; k <= t.powers.size(); ++k)
        if (t.powers[k - 1] == ring_.zero()) return k;
    return std::nullopt;
}

} // namespace pnslab
