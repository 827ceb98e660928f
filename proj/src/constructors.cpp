#include "regula/constructors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "embedded_data.hpp"
#include "regula/classes.hpp"
#include "regula/error.hpp"
#include "regula/numbers.hpp"

namespace regula {

namespace {

void check_degree(std::size_t degree) {
    const auto cap = default_caps().degree_cap;
    if (degree > cap) {
        throw CapExceeded("degree " + std::to_string(degree) + " exceeds the cap " + std::to_string(cap));
    }
}

PermGroup build_or_trivial(std::vector<Permutation> gens, std::size_t degree) {
    std::erase_if(gens, [](const Permutation& g) { return g.is_identity(); });
    if (gens.empty()) return PermGroup(degree);
    return PermGroup::build(std::move(gens));
}

Field field_of_order(std::uint64_t q) {
    const auto pp = as_prime_power(q);
    if (!pp) throw InvalidArgument(std::to_string(q) + " is not a prime power");
    return make_field(static_cast<std::uint32_t>(pp->prime), pp->exponent);
}

std::vector<Point> cycle_images(std::size_t n) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
    return img;
}

}  // namespace

PermGroup cyclic(std::size_t n) {
    if (n == 0) throw InvalidArgument("cyclic group needs n >= 1");
    check_degree(n);
    if (n == 1) return PermGroup(1);
    return PermGroup::build({Permutation(cycle_images(n))});
}

PermGroup symmetric(std::size_t n) {
    if (n == 0) throw InvalidArgument("symmetric group needs n >= 1");
    if (n > kMaxNaturalDegree) throw CapExceeded("symmetric degree above " + std::to_string(kMaxNaturalDegree));
    if (n == 1) return PermGroup(1);
    std::vector<Permutation> gens{Permutation::from_cycle_list({{0, 1}}, n)};
    if (n > 2) gens.push_back(Permutation(cycle_images(n)));
    return PermGroup::build(std::move(gens));
}

PermGroup alternating(std::size_t n) {
    if (n == 0) throw InvalidArgument("alternating group needs n >= 1");
    if (n > kMaxNaturalDegree) throw CapExceeded("alternating degree above " + std::to_string(kMaxNaturalDegree));
    if (n < 3) return PermGroup(n);
    std::vector<Permutation> gens{Permutation::from_cycle_list({{0, 1, 2}}, n)};
    if (n > 3) {
        std::vector<Point> cyc;
        for (std::size_t i = (n % 2 == 1 ? 0 : 1); i < n; ++i) cyc.push_back(static_cast<Point>(i));
        gens.push_back(Permutation::from_cycle_list({cyc}, n));
    }
    return PermGroup::build(std::move(gens));
}

PermGroup dihedral(std::size_t n) {
    if (n == 0) throw InvalidArgument("dihedral group needs n >= 1");
    check_degree(n);
    if (n == 1) return PermGroup::build({Permutation::from_cycle_list({{0, 1}}, 2)});
    if (n == 2) {
        return PermGroup::build(
            {Permutation::from_cycle_list({{0, 1}, {2, 3}}, 4), Permutation::from_cycle_list({{0, 2}, {1, 3}}, 4)});
    }
    std::vector<Point> refl(n);
    for (std::size_t i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
    return PermGroup::build({Permutation(cycle_images(n)), Permutation(refl)});
}

PermGroup direct_product(const PermGroup& g, const PermGroup& h) {
    const std::size_t d = g.degree(), e = h.degree();
    check_degree(d + e);
    std::vector<Permutation> gens;
    for (const auto& x : g.generators()) {
        std::vector<Point> img(d + e);
        for (std::size_t i = 0; i < d + e; ++i) img[i] = i < d ? x(static_cast<Point>(i)) : static_cast<Point>(i);
        gens.emplace_back(std::move(img));
    }
    for (const auto& y : h.generators()) {
        std::vector<Point> img(d + e);
        for (std::size_t i = 0; i < d + e; ++i) {
            img[i] = i < d ? static_cast<Point>(i) : static_cast<Point>(d + y(static_cast<Point>(i - d)));
        }
        gens.emplace_back(std::move(img));
    }
    return build_or_trivial(std::move(gens), d + e);
}

PermGroup wreath(const PermGroup& g, const PermGroup& p) {
    const std::size_t d = g.degree(), m = p.degree();
    check_degree(d * m);
    std::vector<Permutation> gens;
    // One copy of G per orbit of P suffices; conjugation by P moves it to the other blocks.
    std::vector<bool> covered(m, false);
    for (std::size_t b = 0; b < m; ++b) {
        if (covered[b]) continue;
        std::vector<std::size_t> stack{b};
        covered[b] = true;
        while (!stack.empty()) {
            const std::size_t c = stack.back();
            stack.pop_back();
            for (const auto& s : p.generators()) {
                const std::size_t t = s(static_cast<Point>(c));
                if (!covered[t]) {
                    covered[t] = true;
                    stack.push_back(t);
                }
            }
        }
        for (const auto& x : g.generators()) {
            std::vector<Point> img(d * m);
            for (std::size_t i = 0; i < d * m; ++i) img[i] = static_cast<Point>(i);
            for (std::size_t j = 0; j < d; ++j) img[b * d + j] = static_cast<Point>(b * d + x(static_cast<Point>(j)));
            gens.emplace_back(std::move(img));
        }
    }
    for (const auto& s : p.generators()) {
        std::vector<Point> img(d * m);
        for (std::size_t blk = 0; blk < m; ++blk) {
            for (std::size_t j = 0; j < d; ++j) img[blk * d + j] = static_cast<Point>(s(static_cast<Point>(blk)) * d + j);
        }
        gens.emplace_back(std::move(img));
    }
    return build_or_trivial(std::move(gens), d * m);
}

PermGroup sylow2_sym2l(unsigned l) {
    if (l == 0 || l > 3) throw InvalidArgument("sylow2_sym2l needs 1 <= l <= 3");
    PermGroup result = cyclic(2);
    for (unsigned i = 1; i < l; ++i) result = wreath(result, cyclic(2));
    return result;
}

PermGroup affine_semilinear(std::uint32_t p, unsigned k, bool include_galois) {
    const Field f = make_field(p, k);
    const std::size_t q = f->size();
    check_degree(q);
    std::vector<Permutation> gens;
    std::uint32_t basis = 1;
    for (unsigned t = 0; t < k; ++t, basis *= p) {
        std::vector<Point> img(q);
        for (std::uint32_t x = 0; x < q; ++x) img[x] = f->add(x, basis);
        gens.emplace_back(std::move(img));
    }
    std::vector<Point> mult(q);
    for (std::uint32_t x = 0; x < q; ++x) mult[x] = f->mul(x, f->primitive());
    gens.emplace_back(std::move(mult));
    if (include_galois && k > 1) {
        std::vector<Point> frob(q);
        for (std::uint32_t x = 0; x < q; ++x) frob[x] = f->frobenius(x);
        gens.emplace_back(std::move(frob));
    }
    return build_or_trivial(std::move(gens), q);
}

PermGroup glq_family(unsigned l, std::uint32_t q) {
    const Field f = field_of_order(q);
    if (q < 3) throw InvalidArgument("glq_family needs q >= 3");
    const PermGroup top = sylow2_sym2l(l);
    const std::size_t m = top.degree();
    std::size_t points = 1;
    for (std::size_t i = 0; i < m; ++i) {
        points *= q;
        check_degree(points);
    }
    auto decode = [&](std::size_t code) {
        std::vector<std::uint32_t> v(m);
        for (std::size_t i = 0; i < m; ++i, code /= q) v[i] = static_cast<std::uint32_t>(code % q);
        return v;
    };
    auto encode = [&](const std::vector<std::uint32_t>& v) {
        std::size_t code = 0;
        for (std::size_t i = m; i-- > 0;) code = code * q + v[i];
        return static_cast<Point>(code);
    };
    auto linear_map = [&](auto&& transform) {
        std::vector<Point> img(points);
        for (std::size_t c = 0; c < points; ++c) img[c] = encode(transform(decode(c)));
        return Permutation(std::move(img));
    };

    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < m; ++i) {
        std::uint32_t basis = 1;
        for (unsigned t = 0; t < f->degree(); ++t, basis *= f->characteristic()) {
            gens.push_back(linear_map([&](std::vector<std::uint32_t> v) {
                v[i] = f->add(v[i], basis);
                return v;
            }));
        }
    }
    gens.push_back(linear_map([&](std::vector<std::uint32_t> v) {
        v[0] = f->mul(v[0], f->primitive());
        return v;
    }));
    for (const auto& s : top.generators()) {
        gens.push_back(linear_map([&](const std::vector<std::uint32_t>& v) {
            std::vector<std::uint32_t> w(m);
            for (std::size_t i = 0; i < m; ++i) w[s(static_cast<Point>(i))] = v[i];
            return w;
        }));
    }
    return build_or_trivial(std::move(gens), points);
}

std::vector<std::vector<std::uint32_t>> projective_points(const Field& field, std::size_t n) {
    const std::uint32_t q = field->size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= q;
    std::vector<std::vector<std::uint32_t>> points;
    for (std::size_t code = 1; code < total; ++code) {
        std::vector<std::uint32_t> v(n);
        std::size_t c = code;
        for (std::size_t i = n; i-- > 0; c /= q) v[i] = static_cast<std::uint32_t>(c % q);
        const auto lead = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
        if (*lead == 1) points.push_back(std::move(v));
    }
    return points;
}

namespace {

std::size_t vector_code(const std::vector<std::uint32_t>& v, std::uint32_t q) {
    std::size_t code = 0;
    for (auto c : v) code = code * q + c;
    return code;
}

void normalize(const Field& field, std::vector<std::uint32_t>& v) {
    for (auto c : v) {
        if (c == 0) continue;
        const auto inv = field->inv(c);
        for (auto& x : v) x = field->mul(x, inv);
        return;
    }
    throw InvalidArgument("zero vector has no projective point");
}

}  // namespace

Permutation projective_action(const Field& field, std::size_t n, const std::vector<std::uint32_t>& matrix,
                              unsigned frobenius_power) {
    if (matrix.size() != n * n) throw InvalidArgument("matrix size does not match dimension");
    const auto points = projective_points(field, n);
    const std::uint32_t q = field->size();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= q;
    std::vector<std::int64_t> index(total, -1);
    for (std::size_t i = 0; i < points.size(); ++i) index[vector_code(points[i], q)] = static_cast<std::int64_t>(i);

    std::vector<Point> img(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<std::uint32_t> w(n, 0);
        for (std::size_t r = 0; r < n; ++r) {
            std::uint32_t acc = 0;
            for (std::size_t c = 0; c < n; ++c) acc = field->add(acc, field->mul(matrix[r * n + c], points[i][c]));
            w[r] = acc;
        }
        for (unsigned t = 0; t < frobenius_power; ++t) {
            for (auto& x : w) x = field->frobenius(x);
        }
        normalize(field, w);
        img[i] = static_cast<Point>(index[vector_code(w, q)]);
    }
    return Permutation(std::move(img));
}

PermGroup projective_group(ProjectiveKind kind, std::uint64_t q) {
    const std::size_t n = kind == ProjectiveKind::psl3 ? 3 : 2;
    if (n == 2 && q > 32) throw CapExceeded("two-dimensional projective groups need q <= 32");
    if (n == 3 && q > 4) throw CapExceeded("psl3 needs q <= 4");
    const Field f = field_of_order(q);
    auto identity = [&] {
        std::vector<std::uint32_t> m(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) m[i * n + i] = 1;
        return m;
    };
    std::vector<Permutation> gens;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            std::uint32_t basis = 1;
            for (unsigned t = 0; t < f->degree(); ++t, basis *= f->characteristic()) {
                auto m = identity();
                m[i * n + j] = basis;
                gens.push_back(projective_action(f, n, m));
            }
        }
    }
    if (kind == ProjectiveKind::pgl2 || kind == ProjectiveKind::pgammal2) {
        auto m = identity();
        m[0] = f->primitive();
        gens.push_back(projective_action(f, n, m));
    }
    if (kind == ProjectiveKind::pgammal2 && f->degree() > 1) gens.push_back(projective_action(f, n, identity(), 1));
    return build_or_trivial(std::move(gens), projective_points(f, n).size());
}

std::set<std::uint64_t> element_order_set(const PermGroup& group, const Caps& caps) {
    std::set<std::uint64_t> orders;
    for (const auto& c : conjugacy_classes(group, caps).classes) orders.insert(c.element_order);
    return orders;
}

std::vector<LabeledGroup> a6_extensions() {
    const PermGroup top = projective_group(ProjectiveKind::pgammal2, 9);
    const PermGroup socle = projective_group(ProjectiveKind::psl2, 9);
    std::vector<LabeledGroup> result;
    for (auto& h : intermediate_index2(top, socle)) {
        LabeledGroup lg{"", std::move(h), {}};
        lg.element_orders = element_order_set(lg.group);
        if (lg.element_orders.count(6)) {
            lg.label = "2_1";
        } else if (lg.element_orders.count(10)) {
            lg.label = "2_2";
        } else {
            lg.label = "2_3";
        }
        result.push_back(std::move(lg));
    }
    std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
    return result;
}

PermGroup a6_extension(const std::string& label) {
    for (auto& lg : a6_extensions()) {
        if (lg.label == label) return lg.group;
    }
    throw UnknownName("no A6 extension labeled " + label);
}

GeneratorData parse_generator_data(const std::string& text) {
    GeneratorData data;
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> cycle_lines;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] != '#') {
            cycle_lines.push_back(line);
            continue;
        }
        const auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t");
            const auto e = s.find_last_not_of(" \t");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(1, colon - 1));
        const std::string value = trim(line.substr(colon + 1));
        if (key == "name") {
            data.name = value;
        } else if (key == "degree") {
            data.degree = std::stoul(value);
        } else if (key == "order") {
            data.order = BigInt(value);
        } else if (key == "class_sizes") {
            std::istringstream parts(value);
            std::string item;
            while (std::getline(parts, item, ',')) data.class_sizes.push_back(std::stoull(trim(item)));
        }
    }
    if (data.name.empty() || data.degree == 0 || data.order == 0) {
        throw InvalidArgument("generator data is missing a name, degree or order header");
    }
    for (const auto& l : cycle_lines) data.generators.push_back(Permutation::from_cycles(l, data.degree));
    if (data.generators.empty()) throw InvalidArgument("generator data for " + data.name + " has no generators");
    return data;
}

std::string format_generator_data(const GeneratorData& data) {
    std::ostringstream out;
    out << "# name: " << data.name << '\n';
    out << "# degree: " << data.degree << '\n';
    out << "# order: " << data.order << '\n';
    out << "# class_sizes: ";
    for (std::size_t i = 0; i < data.class_sizes.size(); ++i) out << (i ? "," : "") << data.class_sizes[i];
    out << '\n';
    for (const auto& g : data.generators) out << g.to_cycle_string() << '\n';
    return out.str();
}

namespace {

const std::map<std::string, GeneratorData>& generator_registry() {
    static const std::map<std::string, GeneratorData> registry = [] {
        std::map<std::string, GeneratorData> m;
        for (const auto& [stem, text] : embedded::atlas_files()) {
            auto data = parse_generator_data(text);
            m.emplace(data.name, std::move(data));
        }
        return m;
    }();
    return registry;
}

}  // namespace

std::vector<std::string> generator_data_names() {
    std::vector<std::string> names;
    for (const auto& [name, data] : generator_registry()) names.push_back(name);
    return names;
}

const GeneratorData& generator_data(const std::string& name) {
    const auto& reg = generator_registry();
    const auto it = reg.find(name);
    if (it == reg.end()) throw UnknownName("no generator data named " + name);
    return it->second;
}

PermGroup from_generator_data(const GeneratorData& data) {
    PermGroup g = PermGroup::build(data.generators);
    if (g.order() != data.order) {
        std::ostringstream msg;
        msg << data.name << ": generators give order " << g.order() << ", expected " << data.order;
        throw OrderMismatch(msg.str());
    }
    return g;
}

PermGroup from_generator_data(const std::string& name) { return from_generator_data(generator_data(name)); }

}  // namespace regula
