#include "spinhurwitz/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "spinhurwitz/errors.hpp"
#include "spinhurwitz/sergeev.hpp"

namespace spinhurwitz {

Perm perm_identity(int d) {
    Perm p(d);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm perm_multiply(const Perm& a, const Perm& b) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm perm_inverse(const Perm& a) {
    Perm r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<std::uint8_t>(i);
    return r;
}

Partition cycle_type(const Perm& a) {
    std::vector<bool> seen(a.size(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        std::size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = a[j];
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.begin(), lengths.end(), std::greater<int>());
    return Partition(lengths);
}

std::vector<Perm> symmetric_class(int d, const Partition& type) {
    if (type.degree() != d) throw invalid_input_error("symmetric_class: degree mismatch");
    std::vector<Perm> out;
    Perm p = perm_identity(d);
    do {
        if (cycle_type(p) == type) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

namespace {

std::uint64_t factorial(int d) {
    std::uint64_t f = 1;
    for (int i = 2; i <= d; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

std::vector<Perm> all_permutations(int d) {
    std::vector<Perm> out;
    out.reserve(factorial(d));
    Perm p = perm_identity(d);
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

std::vector<Perm> conjugate_tuple(const std::vector<Perm>& tuple, const Perm& s,
                                  const Perm& s_inv) {
    std::vector<Perm> out;
    out.reserve(tuple.size());
    for (const Perm& g : tuple) out.push_back(perm_multiply(s, perm_multiply(g, s_inv)));
    return out;
}

void check_oracle_bounds(int d, int k) {
    if (d < 1 || d > kOracleDegreeBound)
        throw resource_limit_error("monodromy enumeration: d=" + std::to_string(d) +
                                   " exceeds bound " + std::to_string(kOracleDegreeBound));
    if (k > kOracleProfileBound)
        throw resource_limit_error("monodromy enumeration: " + std::to_string(k) +
                                   " profiles exceed bound " +
                                   std::to_string(kOracleProfileBound));
}

}  // namespace

std::vector<MonodromyOrbit> enumerate_genus0_monodromy(int d, const ProfileList& profiles) {
    check_oracle_bounds(d, profiles.count());
    if (profiles.d != d) throw invalid_input_error("enumerate_genus0_monodromy: degree mismatch");
    const int k = profiles.count();

    std::vector<std::vector<Perm>> tuples;
    if (k == 0) {
        tuples.push_back({});
    } else {
        std::vector<std::vector<Perm>> classes;
        for (int i = 0; i + 1 < k; ++i)
            classes.push_back(symmetric_class(d, profiles.profiles[i]));
        std::vector<Perm> current(k);
        // depth-first over the first k-1 classes; the last image is forced
        auto recurse = [&](auto&& self, int depth, const Perm& partial) -> void {
            if (depth == k - 1) {
                Perm last = perm_inverse(partial);
                if (cycle_type(last) == profiles.profiles[k - 1]) {
                    current[k - 1] = last;
                    tuples.push_back(current);
                }
                return;
            }
            for (const Perm& g : classes[depth]) {
                current[depth] = g;
                self(self, depth + 1, perm_multiply(partial, g));
            }
        };
        recurse(recurse, 0, perm_identity(d));
    }

    // group into conjugation orbits via canonical (lexicographically minimal) forms
    const auto group = all_permutations(d);
    std::vector<Perm> group_inv;
    group_inv.reserve(group.size());
    for (const Perm& s : group) group_inv.push_back(perm_inverse(s));

    std::map<std::vector<Perm>, std::pair<std::vector<Perm>, std::uint64_t>> orbits;
    for (const auto& tuple : tuples) {
        std::vector<Perm> canon = tuple;
        std::unordered_set<std::string> distinct;
        for (std::size_t s = 0; s < group.size(); ++s) {
            auto conj = conjugate_tuple(tuple, group[s], group_inv[s]);
            std::string key;
            for (const Perm& g : conj) key.append(g.begin(), g.end());
            distinct.insert(key);
            if (conj < canon) canon = std::move(conj);
        }
        auto it = orbits.find(canon);
        if (it == orbits.end()) orbits.emplace(canon, std::make_pair(canon, distinct.size()));
    }

    std::vector<MonodromyOrbit> out;
    const std::uint64_t order = factorial(d);
    for (auto& [canon, data] : orbits) {
        MonodromyOrbit orbit;
        orbit.representative = MonodromyTuple{d, data.first};
        orbit.orbit_size = data.second;
        orbit.aut_order = order / orbit.orbit_size;
        out.push_back(std::move(orbit));
    }
    return out;
}

Rational classical_hurwitz(int d, const ProfileList& profiles) {
    Rational sum(0);
    for (const auto& orbit : enumerate_genus0_monodromy(d, profiles))
        sum += Rational(BigInt(1), BigInt(static_cast<std::int64_t>(orbit.aut_order)));
    return sum;
}

namespace {

struct ComponentData {
    std::vector<std::pair<int, int>> degree_genus;
    int count = 0;
    int total_genus_doubled = 0;  // sum of 2 g_i
};

ComponentData component_split(const MonodromyTuple& tuple) {
    const int d = tuple.d;
    std::vector<int> parent(d);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Perm& g : tuple.images) {
        for (int i = 0; i < d; ++i) {
            int a = find(i), b = find(g[i]);
            if (a != b) parent[a] = b;
        }
    }
    std::map<int, std::vector<int>> comps;
    for (int i = 0; i < d; ++i) comps[find(i)].push_back(i);

    ComponentData out;
    for (const auto& [root, points] : comps) {
        const int deg = static_cast<int>(points.size());
        // chi = 2*deg + sum_i (cycles of g_i on this component - deg)
        int chi = 2 * deg;
        for (const Perm& g : tuple.images) {
            std::vector<bool> seen(points.size(), false);
            std::unordered_map<int, int> local;
            for (std::size_t t = 0; t < points.size(); ++t) local[points[t]] = static_cast<int>(t);
            int cycles = 0;
            for (std::size_t t = 0; t < points.size(); ++t) {
                if (seen[t]) continue;
                ++cycles;
                int j = points[t];
                while (!seen[local[j]]) {
                    seen[local[j]] = true;
                    j = g[j];
                }
            }
            chi += cycles - deg;
        }
        if (chi % 2 != 0)
            throw internal_consistency_error("component_split: odd Euler characteristic");
        int genus = (2 - chi) / 2;
        if (genus < 0) throw internal_consistency_error("component_split: negative genus");
        out.degree_genus.emplace_back(deg, genus);
        out.total_genus_doubled += 2 * genus;
        ++out.count;
    }
    return out;
}

/// Pure-type class members of B(d) or C(d) bucketed by their underlying
/// permutation, for fast fiber lookup during lift enumeration.
struct LiftClass {
    std::vector<SergeevElement> members;
    std::unordered_map<std::uint32_t, std::vector<SergeevElement>> fibers;  // key: perm rank
    std::unordered_set<std::uint32_t> member_index;
};

std::uint32_t perm_key(const SergeevElement& e) { return dense_index(e) >> (e.d + 1); }

SergeevElement forget_eps(SergeevElement e) {
    e.eps = 0;
    return e;
}

/// Conjugacy class of a pure permutation of the given type inside B(d),
/// realized as Sergeev elements with eps erased after every product.
std::vector<SergeevElement> hyperoctahedral_pure_class(int d, const Partition& type) {
    std::vector<SergeevElement> gens;
    gens.push_back(xi_generator(d, 0));
    for (int i = 0; i + 1 < d; ++i) {
        std::vector<int> t(d);
        std::iota(t.begin(), t.end(), 0);
        std::swap(t[i], t[i + 1]);
        gens.push_back(pure_permutation(d, t));
    }
    std::vector<SergeevElement> gen_inv;
    for (const auto& g : gens) gen_inv.push_back(forget_eps(inverse(g)));

    SergeevElement seed = canonical_pure(type, d);
    std::unordered_set<std::uint32_t> seen{dense_index(seed)};
    std::vector<SergeevElement> frontier{seed}, all;
    while (!frontier.empty()) {
        std::vector<SergeevElement> next;
        for (const auto& x : frontier) {
            all.push_back(x);
            for (std::size_t i = 0; i < gens.size(); ++i) {
                SergeevElement y =
                    forget_eps(multiply(gens[i], forget_eps(multiply(x, gen_inv[i]))));
                if (seen.insert(dense_index(y)).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    std::sort(all.begin(), all.end(), [](const SergeevElement& a, const SergeevElement& b) {
        return dense_index(a) < dense_index(b);
    });
    return all;
}

LiftClass build_lift_class(std::vector<SergeevElement> members) {
    LiftClass cls;
    cls.members = std::move(members);
    for (const auto& e : cls.members) {
        cls.fibers[perm_key(e)].push_back(e);
        cls.member_index.insert(dense_index(e));
    }
    return cls;
}

SergeevElement lift_pure(const Perm& p, int d) {
    std::vector<int> v(p.begin(), p.end());
    return pure_permutation(d, v);
}

/// Count tuples (x_1,...,x_k), x_i in the fiber of class_i over phi_i, with
/// x_1 ... x_k = 1.  For the Sergeev group the product must be exactly the
/// identity, not eps.  B(d) counting is the same walk with eps erased.
BigInt count_lifts(const MonodromyTuple& tuple, const std::vector<LiftClass>& classes,
                   bool erase_eps) {
    const int d = tuple.d;
    const int k = static_cast<int>(tuple.images.size());
    if (k == 0) return BigInt(1);  // only the trivial homomorphism

    std::vector<const std::vector<SergeevElement>*> fibers(k);
    for (int i = 0; i < k; ++i) {
        auto key = perm_key(lift_pure(tuple.images[i], d));
        auto it = classes[i].fibers.find(key);
        if (it == classes[i].fibers.end())
            throw internal_consistency_error("count_lifts: empty fiber over a class element");
        fibers[i] = &it->second;
    }

    std::uint64_t count = 0;
    auto recurse = [&](auto&& self, int depth, const SergeevElement& partial) -> void {
        if (depth == k - 1) {
            SergeevElement needed = inverse(partial);
            if (erase_eps) needed.eps = 0;
            if (classes[k - 1].member_index.count(dense_index(needed))) ++count;
            return;
        }
        for (const auto& x : *fibers[depth]) {
            SergeevElement next = multiply(partial, x);
            if (erase_eps) next.eps = 0;
            self(self, depth + 1, next);
        }
    };
    recurse(recurse, 0, identity_element(d));
    return BigInt(static_cast<std::int64_t>(count));
}

void check_lift_bounds(const MonodromyTuple& tuple) {
    if (tuple.d < 1 || tuple.d > kLiftDegreeBound)
        throw resource_limit_error("lift enumeration: d=" + std::to_string(tuple.d) +
                                   " exceeds bound " + std::to_string(kLiftDegreeBound));
}

}  // namespace

LiftCounts lift_counts(const MonodromyTuple& tuple) {
    check_lift_bounds(tuple);
    const int d = tuple.d;
    const int k = static_cast<int>(tuple.images.size());

    std::vector<LiftClass> sergeev_classes, hyper_classes;
    for (int i = 0; i < k; ++i) {
        Partition type = cycle_type(tuple.images[i]);
        if (!type.is_odd())
            throw invalid_input_error("lift_counts: profile " + type.to_string() + " is not odd");
        sergeev_classes.push_back(build_lift_class(pure_class(d, type).members));
        hyper_classes.push_back(build_lift_class(hyperoctahedral_pure_class(d, type)));
    }

    LiftCounts counts;
    counts.raw_sergeev = count_lifts(tuple, sergeev_classes, /*erase_eps=*/false);
    counts.raw_hyperoctahedral = count_lifts(tuple, hyper_classes, /*erase_eps=*/true);
    const BigInt b_order(static_cast<std::int64_t>(group_order(d) / 2));
    const BigInt c_order(static_cast<std::int64_t>(group_order(d)));
    counts.h_hyperoctahedral = Rational(counts.raw_hyperoctahedral, b_order);
    counts.h_sergeev = Rational(counts.raw_sergeev, c_order);
    return counts;
}

int cover_parity(const MonodromyTuple& tuple) {
    LiftCounts counts = lift_counts(tuple);
    std::vector<Partition> types;
    for (const Perm& g : tuple.images) types.push_back(cycle_type(g));
    ProfileList profiles(tuple.d, types);
    int chi = domain_euler_char(tuple.d, 0, profiles);

    Rational d_factorial(BigInt(static_cast<std::int64_t>(factorial(tuple.d))));
    Rational value = Rational::two_pow(chi / 2) * d_factorial *
                     (Rational(4) * counts.h_sergeev - counts.h_hyperoctahedral);
    if (value == Rational(1)) return +1;
    if (value == Rational(-1)) return -1;
    throw internal_consistency_error("cover_parity: 2^{chi/2} d! (4h_C - h_B) = " +
                                     value.to_string() + ", expected +1 or -1");
}

CoverDescriptor cover_descriptor(const MonodromyTuple& tuple, std::uint64_t orbit_size,
                                 std::uint64_t aut_order) {
    CoverDescriptor desc;
    desc.orbit_size = orbit_size;
    desc.aut_order = aut_order;
    ComponentData comps = component_split(tuple);
    desc.components = comps.degree_genus;
    desc.component_count = comps.count;
    desc.parity = cover_parity(tuple);
    return desc;
}

Rational spin_hurwitz_genus0_bruteforce(int d, const ProfileList& profiles) {
    if (d > kLiftDegreeBound)
        throw resource_limit_error("spin_hurwitz_genus0_bruteforce: d=" + std::to_string(d) +
                                   " exceeds bound " + std::to_string(kLiftDegreeBound));
    Rational sum(0);
    for (const auto& orbit : enumerate_genus0_monodromy(d, profiles)) {
        int parity = cover_parity(orbit.representative);
        sum += Rational(BigInt(parity), BigInt(static_cast<std::int64_t>(orbit.aut_order)));
    }
    return sum;
}

TwoTorsionReport two_torsion_check(const MonodromyTuple& tuple) {
    TwoTorsionReport report;
    ComponentData comps = component_split(tuple);
    report.component_count = comps.count;
    report.two_torsion_order = pow(BigInt(2), static_cast<unsigned>(comps.total_genus_doubled));
    report.lift_count = lift_counts(tuple).raw_hyperoctahedral;
    report.expected = pow(BigInt(2), static_cast<unsigned>(tuple.d - comps.count)) *
                      report.two_torsion_order;
    report.ok = report.lift_count == report.expected;
    return report;
}

BigInt symmetric_tuple_identity_count(int d, const std::vector<Partition>& classes) {
    if (d > kOracleDegreeBound)
        throw resource_limit_error("symmetric_tuple_identity_count: degree bound exceeded");
    if (classes.empty()) return BigInt(1);
    std::vector<std::vector<Perm>> lists;
    for (const auto& type : classes) lists.push_back(symmetric_class(d, type));
    std::uint64_t count = 0;
    auto recurse = [&](auto&& self, std::size_t depth, const Perm& partial) -> void {
        if (depth == lists.size() - 1) {
            Perm needed = perm_inverse(partial);
            if (cycle_type(needed) == classes.back() &&
                std::find(lists.back().begin(), lists.back().end(), needed) != lists.back().end())
                ++count;
            return;
        }
        for (const Perm& g : lists[depth]) self(self, depth + 1, perm_multiply(partial, g));
    };
    recurse(recurse, 0, perm_identity(d));
    return BigInt(static_cast<std::int64_t>(count));
}

BigInt hyperoctahedral_tuple_identity_count(int d, const std::vector<Partition>& classes) {
    if (d > kLiftDegreeBound)
        throw resource_limit_error("hyperoctahedral_tuple_identity_count: degree bound exceeded");
    if (classes.empty()) return BigInt(1);
    std::vector<std::vector<SergeevElement>> lists;
    for (const auto& type : classes) lists.push_back(hyperoctahedral_pure_class(d, type));
    std::unordered_set<std::uint32_t> last_members;
    for (const auto& e : lists.back()) last_members.insert(dense_index(e));

    std::uint64_t count = 0;
    auto recurse = [&](auto&& self, std::size_t depth, const SergeevElement& partial) -> void {
        if (depth == lists.size() - 1) {
            SergeevElement needed = inverse(partial);
            needed.eps = 0;
            if (last_members.count(dense_index(needed))) ++count;
            return;
        }
        for (const auto& x : lists[depth]) {
            SergeevElement next = multiply(partial, x);
            next.eps = 0;
            self(self, depth + 1, next);
        }
    };
    recurse(recurse, 0, identity_element(d));
    return BigInt(static_cast<std::int64_t>(count));
}

}  // namespace spinhurwitz
