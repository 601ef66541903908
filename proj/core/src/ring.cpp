#include "pnslab/ring.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <unordered_map>

namespace pnslab {

ElementSet::ElementSet(std::uint32_t universe, std::vector<Element> members)
    : members_(std::move(members)), mask_(universe, 0) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    for (Element e : members_) {
        if (e.index >= universe) throw RingError(ErrorCode::OutOfRange, "element outside ring");
        mask_[e.index] = 1;
    }
}

bool ElementSet::subset_of(const ElementSet& other) const {
    return std::all_of(members_.begin(), members_.end(), [&](Element e) { return other.contains(e); });
}

Element PowerTrajectory::power(std::uint64_t k) const {
    if (k == 0) throw RingError(ErrorCode::InvalidArgument, "trajectory starts at a^1");
    if (k < tail + period) return powers[k - 1];
    std::uint64_t offset = (k - tail) % period;
    return powers[tail - 1 + offset];
}

namespace detail {
namespace {

// Structural arithmetic on element indices. Children are fully built rings.
class Node {
public:
    virtual ~Node() = default;
    virtual std::uint32_t order() const = 0;
    virtual std::uint32_t one() const = 0;
    virtual std::uint32_t add(std::uint32_t a, std::uint32_t b) const = 0;
    virtual std::uint32_t mul(std::uint32_t a, std::uint32_t b) const = 0;
    virtual std::uint32_t neg(std::uint32_t a) const = 0;
    virtual std::uint32_t encode(const Literal& lit) const = 0;
    virtual Literal decode(std::uint32_t a) const = 0;
};

class ZnNode final : public Node {
public:
    explicit ZnNode(std::uint64_t modulus) : n_(modulus) {}

    std::uint32_t order() const override { return static_cast<std::uint32_t>(n_); }
    std::uint32_t one() const override { return 1; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
        return static_cast<std::uint32_t>((std::uint64_t{a} + b) % n_);
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
        return static_cast<std::uint32_t>((std::uint64_t{a} * b) % n_);
    }
    std::uint32_t neg(std::uint32_t a) const override { return static_cast<std::uint32_t>((n_ - a) % n_); }

    std::uint32_t encode(const Literal& lit) const override {
        if (lit.kind != Literal::Kind::Integer)
            throw RingError(ErrorCode::ShapeMismatch, "Z(" + std::to_string(n_) + ") expects an integer, got " + to_string(lit));
        auto n = static_cast<std::int64_t>(n_);
        auto r = lit.value % n;
        if (r < 0) r += n;
        return static_cast<std::uint32_t>(r);
    }
    Literal decode(std::uint32_t a) const override { return Literal::integer(a); }

private:
    std::uint64_t n_;
};

class MatrixNode final : public Node {
public:
    MatrixNode(std::uint32_t k, FiniteRing base, bool upper) : k_(k), upper_(upper), base_(std::move(base)) {
        for (std::uint32_t r = 0; r < k_; ++r)
            for (std::uint32_t c = 0; c < k_; ++c)
                if (!upper_ || r <= c) positions_.push_back(r * k_ + c);
        std::uint64_t order = 1;
        for (std::size_t i = 0; i < positions_.size(); ++i) order *= base_.order();
        order_ = static_cast<std::uint32_t>(order);
        std::vector<std::uint32_t> id(k_ * k_, 0);
        for (std::uint32_t i = 0; i < k_; ++i) id[i * k_ + i] = base_.one().index;
        one_ = pack(id);
    }

    std::uint32_t order() const override { return order_; }
    std::uint32_t one() const override { return one_; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
        auto x = unpack(a);
        auto y = unpack(b);
        for (auto p : positions_) x[p] = base_.add(Element{x[p]}, Element{y[p]}).index;
        return pack(x);
    }

    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
        auto x = unpack(a);
        auto y = unpack(b);
        std::vector<std::uint32_t> z(k_ * k_, 0);
        for (auto p : positions_) {
            std::uint32_t r = p / k_, c = p % k_;
            Element acc = base_.zero();
            // Upper triangular products only see t in [r, c].
            std::uint32_t lo = upper_ ? r : 0, hi = upper_ ? c + 1 : k_;
            for (std::uint32_t t = lo; t < hi; ++t)
                acc = base_.add(acc, base_.mul(Element{x[r * k_ + t]}, Element{y[t * k_ + c]}));
            z[p] = acc.index;
        }
        return pack(z);
    }

    std::uint32_t neg(std::uint32_t a) const override {
        auto x = unpack(a);
        for (auto p : positions_) x[p] = base_.neg(Element{x[p]}).index;
        return pack(x);
    }

    std::uint32_t encode(const Literal& lit) const override {
        if (lit.kind != Literal::Kind::Matrix || lit.rows.size() != k_)
            throw RingError(ErrorCode::ShapeMismatch, "expected a " + std::to_string(k_) + "x" + std::to_string(k_) +
                                                          " matrix literal, got " + to_string(lit));
        std::vector<std::uint32_t> x(k_ * k_, 0);
        for (std::uint32_t r = 0; r < k_; ++r) {
            if (lit.rows[r].size() != k_)
                throw RingError(ErrorCode::ShapeMismatch, "matrix row " + std::to_string(r) + " has wrong length");
            for (std::uint32_t c = 0; c < k_; ++c) {
                auto v = base_.encode(lit.rows[r][c]).index;
                if (upper_ && r > c && v != 0)
                    throw RingError(ErrorCode::NotUpperTriangular,
                                    "entry (" + std::to_string(r) + "," + std::to_string(c) + ") below the diagonal is nonzero");
                x[r * k_ + c] = v;
            }
        }
        return pack(x);
    }

    Literal decode(std::uint32_t a) const override {
        auto x = unpack(a);
        std::vector<std::vector<Literal>> rows(k_);
        for (std::uint32_t r = 0; r < k_; ++r)
            for (std::uint32_t c = 0; c < k_; ++c) rows[r].push_back(base_.decode(Element{x[r * k_ + c]}));
        return Literal::matrix(std::move(rows));
    }

private:
    // Mixed radix: the first stored position is the most significant digit.
    std::vector<std::uint32_t> unpack(std::uint32_t a) const {
        std::vector<std::uint32_t> x(k_ * k_, 0);
        std::uint32_t b = base_.order();
        for (auto it = positions_.rbegin(); it != positions_.rend(); ++it) {
            x[*it] = a % b;
            a /= b;
        }
        return x;
    }

    std::uint32_t pack(const std::vector<std::uint32_t>& x) const {
        std::uint64_t v = 0;
        for (auto p : positions_) v = v * base_.order() + x[p];
        return static_cast<std::uint32_t>(v);
    }

    std::uint32_t k_;
    bool upper_;
    FiniteRing base_;
    std::vector<std::uint32_t> positions_;
    std::uint32_t order_ = 0;
    std::uint32_t one_ = 0;
};

class ProductNode final : public Node {
public:
    ProductNode(FiniteRing left, FiniteRing right) : l_(std::move(left)), r_(std::move(right)) {}

    std::uint32_t order() const override { return l_.order() * r_.order(); }
    std::uint32_t one() const override { return join(l_.one(), r_.one()); }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const override {
        return join(l_.add(lhs(a), lhs(b)), r_.add(rhs(a), rhs(b)));
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override {
        return join(l_.mul(lhs(a), lhs(b)), r_.mul(rhs(a), rhs(b)));
    }
    std::uint32_t neg(std::uint32_t a) const override { return join(l_.neg(lhs(a)), r_.neg(rhs(a))); }

    std::uint32_t encode(const Literal& lit) const override {
        if (lit.kind != Literal::Kind::Tuple || lit.parts.size() != 2)
            throw RingError(ErrorCode::ShapeMismatch, "expected a pair literal (u,v), got " + to_string(lit));
        return join(l_.encode(lit.parts[0]), r_.encode(lit.parts[1]));
    }
    Literal decode(std::uint32_t a) const override { return Literal::tuple(l_.decode(lhs(a)), r_.decode(rhs(a))); }

private:
    Element lhs(std::uint32_t a) const { return Element{a / r_.order()}; }
    Element rhs(std::uint32_t a) const { return Element{a % r_.order()}; }
    std::uint32_t join(Element a, Element b) const { return a.index * r_.order() + b.index; }

    FiniteRing l_, r_;
};

class CornerNode final : public Node {
public:
    CornerNode(FiniteRing base, Element e) : base_(std::move(base)), position_(base_.order(), kAbsent) {
        std::vector<std::uint32_t> carrier;
        for (Element x : base_.elements()) carrier.push_back(base_.mul(base_.mul(e, x), e).index);
        std::sort(carrier.begin(), carrier.end());
        carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
        carrier_ = std::move(carrier);
        for (std::uint32_t i = 0; i < carrier_.size(); ++i) position_[carrier_[i]] = i;
        one_ = position_[e.index];
    }

    std::uint32_t order() const override { return static_cast<std::uint32_t>(carrier_.size()); }
    std::uint32_t one() const override { return one_; }
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const override { return back(base_.add(up(a), up(b))); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const override { return back(base_.mul(up(a), up(b))); }
    std::uint32_t neg(std::uint32_t a) const override { return back(base_.neg(up(a))); }

    std::uint32_t encode(const Literal& lit) const override {
        auto x = base_.encode(lit);
        auto p = position_[x.index];
        if (p == kAbsent) throw RingError(ErrorCode::OutOfRange, to_string(lit) + " is not in the corner ring");
        return p;
    }
    Literal decode(std::uint32_t a) const override { return base_.decode(up(a)); }

private:
    static constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

    Element up(std::uint32_t a) const { return Element{carrier_[a]}; }
    std::uint32_t back(Element x) const {
        auto p = position_[x.index];
        if (p == kAbsent) throw RingError(ErrorCode::AxiomViolation, "corner ring not closed");
        return p;
    }

    FiniteRing base_;
    std::vector<std::uint32_t> carrier_;
    std::vector<std::uint32_t> position_;
    std::uint32_t one_ = 0;
};

} // namespace

// Rings up to this order memoize their add/mul/neg results in flat tables.
constexpr std::uint32_t kTableCap = 1024;

struct RingImpl {
    RingDescriptor descriptor;
    std::unique_ptr<Node> node;
    std::uint32_t order = 0;
    std::uint32_t one = 0;
    std::vector<std::uint32_t> add_table, mul_table, neg_table;

    mutable std::once_flag commutative_once;
    mutable bool commutative = false;

    RingImpl(RingDescriptor d, std::unique_ptr<Node> n) : descriptor(std::move(d)), node(std::move(n)) {
        order = node->order();
        one = node->one();
        if (order <= kTableCap) {
            add_table.resize(std::size_t{order} * order);
            mul_table.resize(std::size_t{order} * order);
            neg_table.resize(order);
            for (std::uint32_t a = 0; a < order; ++a) {
                neg_table[a] = node->neg(a);
                for (std::uint32_t b = 0; b < order; ++b) {
                    add_table[std::size_t{a} * order + b] = node->add(a, b);
                    mul_table[std::size_t{a} * order + b] = node->mul(a, b);
                }
            }
        }
    }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
        return add_table.empty() ? node->add(a, b) : add_table[std::size_t{a} * order + b];
    }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
        return mul_table.empty() ? node->mul(a, b) : mul_table[std::size_t{a} * order + b];
    }
    std::uint32_t neg(std::uint32_t a) const { return neg_table.empty() ? node->neg(a) : neg_table[a]; }
};

struct RingAccess {
    static FiniteRing make(std::shared_ptr<const RingImpl> impl) { return FiniteRing(std::move(impl)); }
};

} // namespace detail

FiniteRing::FiniteRing(std::shared_ptr<const detail::RingImpl> impl) : impl_(std::move(impl)) {}

const RingDescriptor& FiniteRing::descriptor() const { return impl_->descriptor; }
std::uint32_t FiniteRing::order() const { return impl_->order; }
Element FiniteRing::one() const { return Element{impl_->one}; }
Element FiniteRing::add(Element a, Element b) const { return Element{impl_->add(a.index, b.index)}; }
Element FiniteRing::neg(Element a) const { return Element{impl_->neg(a.index)}; }
Element FiniteRing::sub(Element a, Element b) const { return add(a, neg(b)); }
Element FiniteRing::mul(Element a, Element b) const { return Element{impl_->mul(a.index, b.index)}; }

Element FiniteRing::pow(Element a, std::uint64_t k) const {
    Element result = one();
    Element base = a;
    while (k) {
        if (k & 1) result = mul(result, base);
        k >>= 1;
        if (k) base = mul(base, base);
    }
    return result;
}

Element FiniteRing::from_int(std::int64_t v) const {
    Element unit = v < 0 ? neg(one()) : one();
    std::uint64_t m = v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1 : static_cast<std::uint64_t>(v);
    // double-and-add
    Element result = zero();
    Element step = unit;
    while (m) {
        if (m & 1) result = add(result, step);
        m >>= 1;
        if (m) step = add(step, step);
    }
    return result;
}

bool FiniteRing::is_commutative() const {
    std::call_once(impl_->commutative_once, [this] {
        bool comm = true;
        for (std::uint32_t a = 0; a < order() && comm; ++a)
            for (std::uint32_t b = a + 1; b < order(); ++b)
                if (!commutes(Element{a}, Element{b})) {
                    comm = false;
                    break;
                }
        impl_->commutative = comm;
    });
    return impl_->commutative;
}

Element FiniteRing::encode(const Literal& lit) const { return Element{impl_->node->encode(lit)}; }
Literal FiniteRing::decode(Element e) const { return impl_->node->decode(at(e.index).index); }

Element FiniteRing::at(std::uint64_t index) const {
    if (index >= order())
        throw RingError(ErrorCode::OutOfRange,
                        "index " + std::to_string(index) + " outside ring of order " + std::to_string(order()));
    return Element{static_cast<std::uint32_t>(index)};
}

std::vector<Element> FiniteRing::elements() const {
    std::vector<Element> all(order());
    for (std::uint32_t i = 0; i < order(); ++i) all[i] = Element{i};
    return all;
}

void validate_ring_axioms(const FiniteRing& R) {
    auto fail = [&](const std::string& what) {
        throw RingError(ErrorCode::AxiomViolation, R.descriptor().to_string() + ": " + what);
    };
    const auto all = R.elements();
    if (R.order() > 1 && R.one() == R.zero()) fail("1 = 0");
    for (Element a : all) {
        if (R.add(a, R.zero()) != a) fail("0 is not additively neutral for " + R.format(a));
        if (R.add(a, R.neg(a)) != R.zero()) fail("a + (-a) != 0 for " + R.format(a));
        if (R.mul(a, R.one()) != a || R.mul(R.one(), a) != a) fail("1 is not neutral for " + R.format(a));
        for (Element b : all) {
            if (R.add(a, b) != R.add(b, a)) fail("addition not commutative");
            auto ab = R.mul(a, b);
            auto apb = R.add(a, b);
            for (Element c : all) {
                if (R.add(apb, c) != R.add(a, R.add(b, c))) fail("addition not associative");
                if (R.mul(ab, c) != R.mul(a, R.mul(b, c))) fail("multiplication not associative");
                if (R.mul(c, apb) != R.add(R.mul(c, a), R.mul(c, b))) fail("left distributivity fails");
                if (R.mul(apb, c) != R.add(R.mul(a, c), R.mul(b, c))) fail("right distributivity fails");
            }
        }
    }
}

namespace {

FiniteRing build_checked(const RingDescriptor& d, const BuildOptions& opt);

std::unique_ptr<detail::Node> make_node(const RingDescriptor& d, const BuildOptions& opt) {
    // Children are built without axiom validation; the whole ring is validated once.
    BuildOptions child = opt;
    child.validation = BuildOptions::Validation::Skip;
    switch (d.kind()) {
    case RingDescriptor::Kind::Zn:
        return std::make_unique<detail::ZnNode>(d.modulus());
    case RingDescriptor::Kind::Matrix:
        return std::make_unique<detail::MatrixNode>(d.size(), build_checked(d.base(), child), false);
    case RingDescriptor::Kind::UpperTriangular:
        return std::make_unique<detail::MatrixNode>(d.size(), build_checked(d.base(), child), true);
    case RingDescriptor::Kind::Product:
        return std::make_unique<detail::ProductNode>(build_checked(d.left(), child), build_checked(d.right(), child));
    case RingDescriptor::Kind::Corner: {
        auto base = build_checked(d.base(), child);
        auto e = base.encode(d.idempotent());
        if (base.mul(e, e) != e)
            throw RingError(ErrorCode::NotIdempotent,
                            to_string(d.idempotent()) + " is not idempotent in " + d.base().to_string());
        return std::make_unique<detail::CornerNode>(std::move(base), e);
    }
    }
    throw RingError(ErrorCode::InvalidArgument, "unknown descriptor kind");
}

FiniteRing build_checked(const RingDescriptor& d, const BuildOptions& opt) {
    auto bound = descriptor_order_bound(d);
    std::uint64_t hard_limit = std::numeric_limits<std::uint32_t>::max();
    if ((bound > opt.order_cap && !opt.allow_over_cap) || bound > hard_limit)
        throw RingError(ErrorCode::OrderCapExceeded, d.to_string() + " has order " + std::to_string(bound) +
                                                         " above the cap " + std::to_string(opt.order_cap));
    auto impl = std::make_shared<detail::RingImpl>(d, make_node(d, opt));
    return detail::RingAccess::make(std::move(impl));
}

} // namespace

FiniteRing build_ring(const RingDescriptor& descriptor, const BuildOptions& options) {
    auto ring = build_checked(descriptor, options);
    bool validate = options.validation == BuildOptions::Validation::Force ||
                    (options.validation == BuildOptions::Validation::Auto && ring.order() <= options.validation_cap);
    if (validate) validate_ring_axioms(ring);
    return ring;
}

PowerTrajectory power_trajectory(const FiniteRing& ring, Element a) {
    PowerTrajectory t;
    t.base = a;
    std::unordered_map<std::uint32_t, std::uint32_t> seen; // element -> exponent
    Element p = a;
    for (std::uint32_t k = 1;; ++k) {
        auto [it, fresh] = seen.emplace(p.index, k);
        if (!fresh) {
            t.tail = it->second;
            t.period = k - it->second;
            return t;
        }
        t.powers.push_back(p);
        p = ring.mul(p, a);
    }
}

} // namespace pnslab
