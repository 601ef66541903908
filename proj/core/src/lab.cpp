#include "pnslab/lab.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <random>

namespace pnslab {

struct RingLab::Memo {
    explicit Memo(std::uint32_t order) : right_ideals(order), annihilators(order) {}
    std::mutex mutex;
    std::vector<std::unique_ptr<ElementSet>> right_ideals;
    std::vector<std::unique_ptr<ElementSet>> annihilators;
};

RingLab::RingLab(FiniteRing ring)
    : ring_(std::move(ring)), analysis_(ring_), pns_(analysis_), memo_(std::make_unique<Memo>(ring_.order())) {}

RingLab::~RingLab() = default;

const ElementSet& RingLab::right_ideal(Element a) const {
    std::lock_guard lock(memo_->mutex);
    auto& slot = memo_->right_ideals.at(a.index);
    if (!slot) slot = std::make_unique<ElementSet>(analysis_.principal_right_ideal(a));
    return *slot;
}

const ElementSet& RingLab::right_annihilator(Element a) const {
    std::lock_guard lock(memo_->mutex);
    auto& slot = memo_->annihilators.at(a.index);
    if (!slot) slot = std::make_unique<ElementSet>(analysis_.right_annihilator(a));
    return *slot;
}

std::optional<Element> RingLab::star_inverse(const Involution& inv, Element a, std::uint32_t n) const {
    auto x = pns_.inverse(a, n);
    if (!x) return std::nullopt;
    auto e = ring_.mul(a, *x);
    if (inv(e) != e) return std::nullopt;
    return x;
}

bool is_theorem_id(std::string_view id) {
    return std::find(kTheoremIds.begin(), kTheoremIds.end(), id) != kTheoremIds.end();
}

bool SpectralConditions::all_equal() const {
    return std::all_of(holds.begin(), holds.end(), [&](bool b) { return b == holds[0]; });
}

namespace {

// Fisher-Yates with a fixed engine so samples are identical across platforms.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, std::mt19937_64& rng) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rng() % i]);
}

constexpr std::uint32_t kNoKey = std::numeric_limits<std::uint32_t>::max();

} // namespace

TripleStats for_each_triple(const RingLab& lab, TripleHypothesis hyp, const SweepOptions& opt,
                            const std::function<void(Element, Element, Element)>& visit) {
    const auto& R = lab.ring();
    const auto all = R.elements();

    // aba = aca (Cline) pairs b and c through the common value aba; the star
    // hypothesis additionally needs aba = ba^2 on the b side and a^2c = aca on
    // the c side.
    auto key_b = [&](Element a, Element b) {
        auto aba = R.mul(R.mul(a, b), a);
        if (hyp == TripleHypothesis::Star && aba != R.mul(b, R.mul(a, a))) return kNoKey;
        return aba.index;
    };
    auto key_c = [&](Element a, Element c) {
        auto aca = R.mul(R.mul(a, c), a);
        if (hyp == TripleHypothesis::Star && aca != R.mul(R.mul(a, a), c)) return kNoKey;
        return aca.index;
    };

    // (b, c) pairs meeting the hypothesis for a fixed a, grouped by key.
    auto stratum = [&](Element a) {
        std::map<std::uint32_t, std::vector<Element>> bs, cs;
        for (Element x : all) {
            if (auto k = key_b(a, x); k != kNoKey) bs[k].push_back(x);
            if (auto k = key_c(a, x); k != kNoKey) cs[k].push_back(x);
        }
        std::vector<std::pair<Element, Element>> pairs;
        for (const auto& [k, b_list] : bs) {
            auto it = cs.find(k);
            if (it == cs.end()) continue;
            for (Element b : b_list)
                for (Element c : it->second) pairs.emplace_back(b, c);
        }
        std::sort(pairs.begin(), pairs.end());
        return pairs;
    };

    TripleStats stats;
    if (R.order() <= opt.full_triple_cap) {
        for (Element a : all)
            for (auto [b, c] : stratum(a)) {
                ++stats.population;
                ++stats.visited;
                visit(a, b, c);
            }
        return stats;
    }

    // Stratified sample: shuffle each stratum deterministically, then take
    // elements round-robin across strata until the target is reached.
    stats.sampled = true;
    std::vector<std::vector<std::pair<Element, Element>>> strata;
    for (Element a : all) {
        auto pairs = stratum(a);
        stats.population += pairs.size();
        std::mt19937_64 rng(opt.seed ^ (0x9e3779b97f4a7c15ULL * (a.index + 1)));
        deterministic_shuffle(pairs, rng);
        strata.push_back(std::move(pairs));
    }
    std::vector<std::size_t> take(strata.size(), 0);
    std::uint64_t chosen = 0;
    for (std::size_t round = 0; chosen < opt.sample_target; ++round) {
        bool progressed = false;
        for (std::size_t s = 0; s < strata.size() && chosen < opt.sample_target; ++s)
            if (round < strata[s].size()) {
                ++take[s];
                ++chosen;
                progressed = true;
            }
        if (!progressed) break;
    }
    for (std::size_t s = 0; s < strata.size(); ++s) {
        std::vector<std::pair<Element, Element>> picked(strata[s].begin(), strata[s].begin() + take[s]);
        std::sort(picked.begin(), picked.end());
        for (auto [b, c] : picked) {
            ++stats.visited;
            visit(Element{static_cast<std::uint32_t>(s)}, b, c);
        }
    }
    return stats;
}

} // namespace pnslab
