#include "regula/perm_group.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "regula/error.hpp"
#include "regula/numbers.hpp"

namespace regula {

PermGroup::PermGroup(std::size_t degree) : degree_(degree) {
    if (degree == 0) throw InvalidArgument("permutation groups need degree >= 1");
    generators_.push_back(Permutation(degree));
}

PermGroup PermGroup::build(std::vector<Permutation> generators) {
    if (generators.empty()) throw InvalidArgument("empty generator set");
    const std::size_t n = generators.front().degree();
    for (const auto& g : generators) {
        if (g.degree() != n) throw DegreeMismatch("generators have different degrees");
    }
    PermGroup group(n);
    group.generators_ = std::move(generators);
    Point first = static_cast<Point>(n);
    for (const auto& g : group.generators_) first = std::min(first, g.first_moved());
    if (first < n) {
        Level lv;
        lv.base = first;
        for (const auto& g : group.generators_) {
            if (!g.is_identity()) lv.gens.push_back(g);
        }
        group.levels_.push_back(std::move(lv));
        group.rebuild_orbit(0);
        group.complete(0);
    }
    group.refresh_order();
    return group;
}

void PermGroup::rebuild_orbit(std::size_t level) {
    Level& lv = levels_[level];
    if (lv.orbit.empty()) {
        lv.position.assign(degree_, -1);
        lv.orbit.push_back(lv.base);
        lv.position[lv.base] = 0;
        lv.transversal.push_back(Permutation(degree_));
        lv.inverse_transversal.push_back(Permutation(degree_));
    }
    // Extends the existing orbit; old points are revisited only for image lookups.
    for (std::size_t i = 0; i < lv.orbit.size(); ++i) {
        const Point beta = lv.orbit[i];
        for (const auto& s : lv.gens) {
            const Point gamma = s(beta);
            if (lv.position[gamma] >= 0) continue;
            lv.position[gamma] = static_cast<std::int32_t>(lv.orbit.size());
            lv.orbit.push_back(gamma);
            Permutation u = lv.transversal[i] * s;
            lv.inverse_transversal.push_back(u.inverse());
            lv.transversal.push_back(std::move(u));
        }
    }
}

std::size_t PermGroup::sift(Permutation& g, std::size_t start) const {
    for (std::size_t l = start; l < levels_.size(); ++l) {
        const Level& lv = levels_[l];
        const std::int32_t pos = lv.position[g(lv.base)];
        if (pos < 0) return l;
        g = g * lv.inverse_transversal[static_cast<std::size_t>(pos)];
    }
    return levels_.size();
}

void PermGroup::add_strong_generator(const Permutation& h, std::size_t first_level, std::size_t stop_level) {
    if (stop_level == levels_.size()) {
        Level lv;
        lv.base = h.first_moved();
        levels_.push_back(std::move(lv));
    }
    for (std::size_t l = first_level; l <= stop_level; ++l) {
        levels_[l].gens.push_back(h);
        rebuild_orbit(l);
    }
}

void PermGroup::complete(std::size_t from_level) {
    if (levels_.empty()) return;
    std::ptrdiff_t i = static_cast<std::ptrdiff_t>(std::min(from_level, levels_.size() - 1));
    while (i >= 0) {
        const auto li = static_cast<std::size_t>(i);
        bool extended = false;
        for (std::size_t j = 0; j < levels_[li].orbit.size() && !extended; ++j) {
            for (std::size_t k = 0; k < levels_[li].gens.size(); ++k) {
                const Level& lv = levels_[li];
                const Permutation& s = lv.gens[k];
                const Point gamma = s(lv.orbit[j]);
                Permutation h = lv.transversal[j] * s * lv.inverse_transversal[static_cast<std::size_t>(lv.position[gamma])];
                if (h.is_identity()) continue;
                const std::size_t stop = sift(h, li + 1);
                if (stop == levels_.size() && h.is_identity()) continue;
                add_strong_generator(h, li + 1, stop);
                i = static_cast<std::ptrdiff_t>(stop);
                extended = true;
                break;
            }
        }
        if (!extended) --i;
    }
}

void PermGroup::refresh_order() {
    order_ = 1;
    for (const auto& lv : levels_) order_ *= lv.orbit.size();
}

std::uint64_t PermGroup::order_within(std::uint64_t cap) const {
    if (order_ > cap) {
        throw CapExceeded("group order " + order_.str() + " exceeds element cap " + std::to_string(cap));
    }
    return order_.convert_to<std::uint64_t>();
}

std::vector<Point> PermGroup::base() const {
    std::vector<Point> b;
    for (const auto& lv : levels_) b.push_back(lv.base);
    return b;
}

std::vector<std::size_t> PermGroup::orbit_lengths() const {
    std::vector<std::size_t> r;
    for (const auto& lv : levels_) r.push_back(lv.orbit.size());
    return r;
}

std::vector<Permutation> PermGroup::strong_generators() const {
    std::vector<Permutation> out;
    std::unordered_set<Permutation, PermutationHash> seen;
    for (const auto& lv : levels_) {
        for (const auto& g : lv.gens) {
            if (seen.insert(g).second) out.push_back(g);
        }
    }
    return out;
}

std::span<const Point> PermGroup::orbit(std::size_t level) const { return levels_.at(level).orbit; }

const Permutation& PermGroup::transversal_element(std::size_t level, std::size_t j) const {
    return levels_.at(level).transversal.at(j);
}

std::span<const Permutation> PermGroup::level_generators(std::size_t level) const {
    if (level >= levels_.size()) return {};
    return levels_[level].gens;
}

bool PermGroup::contains(const Permutation& g) const {
    if (g.degree() != degree_) throw DegreeMismatch("membership test with permutation of wrong degree");
    Permutation h = g;
    return sift(h, 0) == levels_.size() && h.is_identity();
}

std::int64_t PermGroup::index_of(const Permutation& g) const {
    if (g.degree() != degree_) throw DegreeMismatch("index_of with permutation of wrong degree");
    Permutation h = g;
    std::uint64_t idx = 0;
    std::uint64_t radix = 1;
    for (const auto& lv : levels_) {
        const std::int32_t pos = lv.position[h(lv.base)];
        if (pos < 0) return -1;
        idx += radix * static_cast<std::uint64_t>(pos);
        radix *= lv.orbit.size();
        h = h * lv.inverse_transversal[static_cast<std::size_t>(pos)];
    }
    if (!h.is_identity()) return -1;
    return static_cast<std::int64_t>(idx);
}

Permutation PermGroup::element_at(std::uint64_t idx) const {
    std::vector<std::size_t> digits(levels_.size());
    for (std::size_t l = 0; l < levels_.size(); ++l) {
        digits[l] = idx % levels_[l].orbit.size();
        idx /= levels_[l].orbit.size();
    }
    if (idx != 0) throw InvalidArgument("element index out of range");
    Permutation g(degree_);
    for (std::size_t l = levels_.size(); l-- > 0;) g = g * levels_[l].transversal[digits[l]];
    return g;
}

void PermGroup::for_each_element(std::uint64_t cap,
                                 const std::function<void(const Permutation&)>& visit) const {
    order_within(cap);
    const std::size_t depth = levels_.size();
    if (depth == 0) {
        visit(Permutation(degree_));
        return;
    }
    std::vector<std::size_t> digits(depth, 0);
    // prefix[l] = u_{depth-1} * ... * u_l
    std::vector<Permutation> prefix(depth + 1, Permutation(degree_));
    for (std::size_t l = depth; l-- > 0;) prefix[l] = prefix[l + 1] * levels_[l].transversal[0];
    while (true) {
        visit(prefix[0]);
        std::size_t l = 0;
        while (l < depth && ++digits[l] == levels_[l].orbit.size()) {
            digits[l] = 0;
            ++l;
        }
        if (l == depth) break;
        for (std::size_t m = l + 1; m-- > 0;) prefix[m] = prefix[m + 1] * levels_[m].transversal[digits[m]];
    }
}

std::vector<Permutation> PermGroup::elements(std::uint64_t cap) const {
    std::vector<Permutation> out;
    out.reserve(order_within(cap));
    for_each_element(cap, [&](const Permutation& g) { out.push_back(g); });
    return out;
}

Permutation PermGroup::random_element(std::mt19937_64& rng) const {
    Permutation g(degree_);
    for (std::size_t l = levels_.size(); l-- > 0;) {
        std::uniform_int_distribution<std::size_t> pick(0, levels_[l].orbit.size() - 1);
        g = g * levels_[l].transversal[pick(rng)];
    }
    return g;
}

bool PermGroup::adjoin(const Permutation& g) {
    if (contains(g)) return false;
    generators_.push_back(g);
    if (generators_.size() == 2 && generators_.front().is_identity()) generators_.erase(generators_.begin());
    if (levels_.empty()) {
        Level lv;
        lv.base = g.first_moved();
        levels_.push_back(std::move(lv));
    }
    levels_[0].gens.push_back(g);
    rebuild_orbit(0);
    complete(0);
    refresh_order();
    return true;
}

PermGroup PermGroup::with_generator(const Permutation& g) const {
    PermGroup copy = *this;
    copy.adjoin(g);
    return copy;
}

bool operator==(const PermGroup& a, const PermGroup& b) {
    if (a.degree_ != b.degree_ || a.order_ != b.order_) return false;
    return std::all_of(b.generators_.begin(), b.generators_.end(), [&](const auto& g) { return a.contains(g); });
}

PermGroup normal_closure(const PermGroup& group, const std::vector<Permutation>& seeds) {
    PermGroup closure(group.degree());
    std::vector<Permutation> pending;
    for (const auto& s : seeds) {
        if (!group.contains(s)) throw NotMember("normal closure seed " + s.to_cycle_string() + " is not in the group");
        if (closure.adjoin(s)) pending.push_back(s);
    }
    for (std::size_t i = 0; i < pending.size(); ++i) {
        for (const auto& g : group.generators()) {
            Permutation c = pending[i].conjugate_by(g);
            if (closure.adjoin(c)) pending.push_back(std::move(c));
        }
    }
    return closure;
}

bool is_subgroup(const PermGroup& group, const PermGroup& sub) {
    if (group.degree() != sub.degree()) return false;
    return std::all_of(sub.generators().begin(), sub.generators().end(),
                       [&](const auto& g) { return group.contains(g); });
}

bool is_normal(const PermGroup& group, const PermGroup& sub) {
    if (group.degree() != sub.degree()) throw DegreeMismatch("subgroup and group act on different degrees");
    if (!is_subgroup(group, sub)) return false;
    for (const auto& n : sub.generators()) {
        for (const auto& g : group.generators()) {
            if (!sub.contains(n.conjugate_by(g))) return false;
        }
    }
    return true;
}

PermGroup derived_subgroup(const PermGroup& group) {
    const auto& gens = group.generators();
    std::vector<Permutation> seeds;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gens.size(); ++j) seeds.push_back(commutator(gens[i], gens[j]));
    }
    return normal_closure(group, seeds);
}

std::vector<PermGroup> derived_series(const PermGroup& group) {
    std::vector<PermGroup> series{group};
    while (!series.back().is_trivial()) {
        PermGroup next = derived_subgroup(series.back());
        if (next.order() == series.back().order()) break;
        series.push_back(std::move(next));
    }
    return series;
}

std::vector<PermGroup> lower_central_series(const PermGroup& group) {
    std::vector<PermGroup> series{group};
    while (!series.back().is_trivial()) {
        std::vector<Permutation> seeds;
        for (const auto& x : series.back().generators()) {
            for (const auto& g : group.generators()) seeds.push_back(commutator(x, g));
        }
        PermGroup next = normal_closure(group, seeds);
        if (next.order() == series.back().order()) break;
        series.push_back(std::move(next));
    }
    return series;
}

int derived_length(const PermGroup& group) {
    auto series = derived_series(group);
    if (!series.back().is_trivial()) return -1;
    return static_cast<int>(series.size()) - 1;
}

StructureFlags structure_flags(const PermGroup& group, std::uint64_t p) {
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
    StructureFlags f;
    f.solvable = derived_series(group).back().is_trivial();
    f.nilpotent = f.solvable && lower_central_series(group).back().is_trivial();
    BigInt n = group.order();
    while (n % p == 0) n /= p;
    f.is_p_group = (n == 1);
    return f;
}

Permutation coset_canonical(const PermGroup& normal_sub, const Permutation& x) {
    Permutation h = x;
    const auto base = normal_sub.base();
    for (std::size_t l = 0; l < base.size(); ++l) {
        // The remaining freedom is an element of the level-l stabilizer applied
        // first; it can send base[l] anywhere in that level's orbit.
        const auto orbit = normal_sub.orbit(l);
        std::size_t best = 0;
        for (std::size_t j = 1; j < orbit.size(); ++j) {
            if (h(orbit[j]) < h(orbit[best])) best = j;
        }
        h = normal_sub.transversal_element(l, best) * h;
    }
    return h;
}

std::vector<Permutation> coset_representatives(const PermGroup& group, const PermGroup& normal_sub,
                                               std::uint64_t index_cap) {
    if (!is_normal(group, normal_sub)) throw NotNormal("subgroup is not normal");
    const BigInt index = group.order() / normal_sub.order();
    if (index > index_cap) {
        throw CapExceeded("index " + index.str() + " exceeds index cap " + std::to_string(index_cap));
    }
    std::vector<Permutation> reps{Permutation(group.degree())};
    std::unordered_map<Permutation, std::size_t, PermutationHash> seen;
    seen.emplace(coset_canonical(normal_sub, reps[0]), 0);
    for (std::size_t i = 0; i < reps.size(); ++i) {
        for (const auto& g : group.generators()) {
            Permutation r = reps[i] * g;
            Permutation key = coset_canonical(normal_sub, r);
            if (seen.emplace(std::move(key), reps.size()).second) reps.push_back(std::move(r));
        }
    }
    return reps;
}

PermGroup quotient(const PermGroup& group, const PermGroup& normal_sub, std::uint64_t index_cap) {
    const auto reps = coset_representatives(group, normal_sub, index_cap);
    std::unordered_map<Permutation, Point, PermutationHash> coset_of;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        coset_of.emplace(coset_canonical(normal_sub, reps[i]), static_cast<Point>(i));
    }
    std::vector<Permutation> action;
    for (const auto& g : group.generators()) {
        std::vector<Point> img(reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i) img[i] = coset_of.at(coset_canonical(normal_sub, reps[i] * g));
        action.emplace_back(std::move(img));
    }
    PermGroup q = PermGroup::build(std::move(action));
    if (q.order() * normal_sub.order() != group.order()) {
        throw Error("coset action is not faithful on G/N; order bookkeeping failed");
    }
    return q;
}

std::vector<PermGroup> intermediate_index2(const PermGroup& group, const PermGroup& normal_sub) {
    if (normal_sub.order() == 0 || group.order() % normal_sub.order() != 0 ||
        (group.order() / normal_sub.order() != 2 && group.order() / normal_sub.order() != 4)) {
        throw InvalidArgument("index must be 2 or 4");
    }
    const auto reps = coset_representatives(group, normal_sub, 4);
    if (reps.size() == 2) return {group};
    if (reps.size() != 4) throw InvalidArgument("index must be 2 or 4");
    for (std::size_t i = 1; i < reps.size(); ++i) {
        if (!normal_sub.contains(reps[i] * reps[i])) {
            throw InvalidArgument("quotient of index 4 is not elementary abelian");
        }
    }
    std::vector<PermGroup> out;
    for (std::size_t i = 1; i < reps.size(); ++i) {
        std::vector<Permutation> gens = normal_sub.generators();
        gens.push_back(reps[i]);
        PermGroup h = PermGroup::build(std::move(gens));
        if (h.order() != 2 * normal_sub.order()) throw Error("intermediate subgroup has unexpected order");
        out.push_back(std::move(h));
    }
    return out;
}

}  // namespace regula
