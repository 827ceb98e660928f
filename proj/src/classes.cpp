#include "regula/classes.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "regula/error.hpp"
#include "regula/numbers.hpp"

namespace regula {

namespace {

void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
}

/// Orbits of `actors` acting by conjugation on the elements of `domain`.
/// Calls visit(representative, orbit_size) once per orbit in index order.
template <typename Visit>
void conjugation_orbits(const PermGroup& domain, const std::vector<Permutation>& actors, std::uint64_t cap,
                        Visit visit) {
    const std::uint64_t n = domain.order_within(cap);
    std::vector<bool> seen(n, false);
    std::vector<Permutation> actor_inverses;
    actor_inverses.reserve(actors.size());
    for (const auto& s : actors) actor_inverses.push_back(s.inverse());

    std::deque<Permutation> queue;
    for (std::uint64_t idx = 0; idx < n; ++idx) {
        if (seen[idx]) continue;
        seen[idx] = true;
        Permutation rep = domain.element_at(idx);
        std::uint64_t size = 1;
        queue.push_back(rep);
        while (!queue.empty()) {
            const Permutation g = std::move(queue.front());
            queue.pop_front();
            for (std::size_t i = 0; i < actors.size(); ++i) {
                Permutation h = actor_inverses[i] * g * actors[i];
                const std::int64_t j = domain.index_of(h);
                if (j < 0) throw NotNormal("conjugate left the subgroup");
                if (!seen[static_cast<std::uint64_t>(j)]) {
                    seen[static_cast<std::uint64_t>(j)] = true;
                    ++size;
                    queue.push_back(std::move(h));
                }
            }
        }
        visit(rep, size);
    }
}

}  // namespace

ClassTable conjugacy_classes(const PermGroup& group, const Caps& caps) {
    ClassTable table;
    table.group_order = group.order_within(caps.element_cap);
    conjugation_orbits(group, group.generators(), caps.element_cap, [&](const Permutation& rep, std::uint64_t size) {
        ClassInfo info;
        info.representative = rep;
        info.element_order = rep.order();
        info.size = size;
        info.centralizer_order = table.group_order / size;
        table.classes.push_back(std::move(info));
    });
    return table;
}

ClassCounts class_counts(const ClassTable& table, std::uint64_t p) {
    require_prime(p);
    ClassCounts counts;
    counts.p = p;
    counts.k_total = table.classes.size();
    for (const auto& c : table.classes) {
        if (c.element_order % p == 0) {
            ++counts.k_singular;
        } else {
            ++counts.k_regular;
        }
    }
    return counts;
}

ClassCounts class_counts(const PermGroup& group, std::uint64_t p, const Caps& caps) {
    require_prime(p);
    return class_counts(conjugacy_classes(group, caps), p);
}

ClassCounts fused_counts(const PermGroup& group, const PermGroup& normal_sub, std::uint64_t p, const Caps& caps) {
    require_prime(p);
    if (group.degree() != normal_sub.degree()) throw DegreeMismatch("subgroup degree differs");
    if (!is_subgroup(group, normal_sub) || !is_normal(group, normal_sub)) {
        throw NotNormal("second group is not a normal subgroup of the first");
    }
    ClassCounts counts;
    counts.p = p;
    conjugation_orbits(normal_sub, group.generators(), caps.element_cap, [&](const Permutation& rep, std::uint64_t) {
        ++counts.k_total;
        if (rep.order() % p == 0) {
            ++counts.k_singular;
        } else {
            ++counts.k_regular;
        }
    });
    return counts;
}

std::uint64_t singular_element_count(const ClassTable& table, std::uint64_t p) {
    require_prime(p);
    std::uint64_t total = 0;
    for (const auto& c : table.classes) {
        if (c.element_order % p == 0) total += c.size;
    }
    return total;
}

std::uint64_t singular_element_count(const PermGroup& group, std::uint64_t p, const Caps& caps) {
    require_prime(p);
    return singular_element_count(conjugacy_classes(group, caps), p);
}

std::size_t p_element_class_count(const ClassTable& table, std::uint64_t p) {
    require_prime(p);
    std::size_t count = 0;
    for (const auto& c : table.classes) {
        std::uint64_t m = c.element_order;
        while (m % p == 0) m /= p;
        if (m == 1) ++count;
    }
    return count;
}

std::uint64_t min_centralizer_order(const ClassTable& table) {
    std::uint64_t best = table.group_order;
    for (const auto& c : table.classes) best = std::min(best, c.centralizer_order);
    return best;
}

std::vector<std::uint64_t> class_size_multiset(const ClassTable& table) {
    std::vector<std::uint64_t> sizes;
    for (const auto& c : table.classes) sizes.push_back(c.size);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

nlohmann::json to_json(const ClassTable& table, const std::string& descriptor) {
    struct Row {
        std::uint64_t order, size, centralizer;
        std::string rep;
    };
    std::vector<Row> rows;
    for (const auto& c : table.classes) {
        rows.push_back({c.element_order, c.size, c.centralizer_order, c.representative.to_cycle_string()});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return std::tie(a.order, a.size, a.rep) < std::tie(b.order, b.size, b.rep);
    });
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& r : rows) {
        classes.push_back({{"representative", r.rep},
                           {"order", r.order},
                           {"size", r.size},
                           {"centralizer_order", r.centralizer}});
    }
    return {{"group", descriptor}, {"order", table.group_order}, {"class_count", rows.size()}, {"classes", classes}};
}

}  // namespace regula
