#include "spinhurwitz/sergeev.hpp"

#include <algorithm>
#include <bit>
#include <thread>
#include <unordered_set>

#include "spinhurwitz/errors.hpp"

namespace spinhurwitz {

namespace {

constexpr std::uint32_t kFactorial[9] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};

void check_degree(int d, int cap, const char* who) {
    if (d < 1)
        throw invalid_input_error(std::string(who) + ": degree must be >= 1, got " +
                                  std::to_string(d));
    if (d > cap)
        throw resource_limit_error(std::string(who) + ": degree " + std::to_string(d) +
                                   " exceeds the supported cap " + std::to_string(cap));
}

/// Permute the support bits of v by sigma: bit i of v lands on bit sigma(i).
std::uint16_t permute_bits(const std::array<std::uint8_t, kMaxDegree>& sigma, std::uint16_t v) {
    std::uint16_t out = 0;
    while (v) {
        int i = std::countr_zero(v);
        v &= static_cast<std::uint16_t>(v - 1);
        out |= static_cast<std::uint16_t>(1u << sigma[i]);
    }
    return out;
}

/// Sign of conjugating an increasing xi-product by sigma: the parity of the
/// inversion count of (sigma(i1), sigma(i2), ...) for i1 < i2 < ... in supp(v).
int conjugation_sign(const std::array<std::uint8_t, kMaxDegree>& sigma, std::uint16_t v) {
    int images[kMaxDegree];
    int n = 0;
    while (v) {
        int i = std::countr_zero(v);
        v &= static_cast<std::uint16_t>(v - 1);
        images[n++] = sigma[i];
    }
    int inv = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (images[a] > images[b]) ++inv;
    return inv & 1;
}

/// Merge sign of xi^u * xi^w into increasing order: pairs (i in u, j in w)
/// with i > j each contribute eps; coinciding generators cancel without sign.
int merge_sign(std::uint16_t u, std::uint16_t w) {
    int s = 0;
    while (w) {
        int j = std::countr_zero(w);
        w &= static_cast<std::uint16_t>(w - 1);
        s += std::popcount(static_cast<unsigned>(u >> (j + 1)));
    }
    return s & 1;
}

std::uint32_t lehmer_rank(const SergeevElement& x) {
    std::uint32_t rank = 0;
    for (int i = 0; i < x.d; ++i) {
        int smaller_later = 0;
        for (int j = i + 1; j < x.d; ++j)
            if (x.perm[j] < x.perm[i]) ++smaller_later;
        rank += static_cast<std::uint32_t>(smaller_later) * kFactorial[x.d - 1 - i];
    }
    return rank;
}

void lehmer_unrank(int d, std::uint32_t rank, std::array<std::uint8_t, kMaxDegree>& perm) {
    std::array<std::uint8_t, kMaxDegree> pool{};
    for (int i = 0; i < d; ++i) pool[i] = static_cast<std::uint8_t>(i);
    for (int i = 0; i < d; ++i) {
        std::uint32_t f = kFactorial[d - 1 - i];
        std::uint32_t idx = rank / f;
        rank %= f;
        perm[i] = pool[idx];
        for (int j = static_cast<int>(idx); j + 1 < d - i; ++j) pool[j] = pool[j + 1];
    }
}

}  // namespace

SergeevElement identity_element(int d) {
    check_degree(d, kMaxDegree, "identity_element");
    SergeevElement e;
    e.d = static_cast<std::uint8_t>(d);
    for (int i = 0; i < d; ++i) e.perm[i] = static_cast<std::uint8_t>(i);
    return e;
}

SergeevElement epsilon_element(int d) {
    SergeevElement e = identity_element(d);
    e.eps = 1;
    return e;
}

SergeevElement xi_generator(int d, int i) {
    if (i < 0 || i >= d) throw invalid_input_error("xi_generator: index out of range");
    SergeevElement e = identity_element(d);
    e.xi = static_cast<std::uint16_t>(1u << i);
    return e;
}

SergeevElement pure_permutation(int d, const std::vector<int>& perm) {
    SergeevElement e = identity_element(d);
    if (static_cast<int>(perm.size()) != d)
        throw invalid_input_error("pure_permutation: wrong length");
    std::uint32_t seen = 0;
    for (int i = 0; i < d; ++i) {
        if (perm[i] < 0 || perm[i] >= d || (seen & (1u << perm[i])))
            throw invalid_input_error("pure_permutation: not a permutation");
        seen |= 1u << perm[i];
        e.perm[i] = static_cast<std::uint8_t>(perm[i]);
    }
    return e;
}

SergeevElement canonical_pure(const Partition& gamma, int d) {
    if (gamma.degree() != d) throw invalid_input_error("canonical_pure: degree mismatch");
    std::vector<int> perm(d);
    int base = 0;
    for (int len : gamma.parts()) {
        for (int j = 0; j < len; ++j) perm[base + j] = base + (j + 1) % len;
        base += len;
    }
    return pure_permutation(d, perm);
}

SergeevElement multiply(const SergeevElement& x, const SergeevElement& y) {
    if (x.d != y.d) throw invalid_input_error("multiply: degree mismatch");
    SergeevElement r;
    r.d = x.d;
    // x * y = eps^a xi^u s . eps^b xi^v t
    //       = eps^{a+b} xi^u (s xi^v s^{-1}) s t
    //       = eps^{a+b+conj+merge} xi^{u ^ s.v} (s t)
    std::uint16_t sv = permute_bits(x.perm, y.xi);
    int sign = (x.eps + y.eps + conjugation_sign(x.perm, y.xi) + merge_sign(x.xi, sv)) & 1;
    r.eps = static_cast<std::uint8_t>(sign);
    r.xi = x.xi ^ sv;
    for (int i = 0; i < x.d; ++i) r.perm[i] = x.perm[y.perm[i]];
    return r;
}

SergeevElement inverse(const SergeevElement& x) {
    SergeevElement y;
    y.d = x.d;
    for (int i = 0; i < x.d; ++i) y.perm[x.perm[i]] = static_cast<std::uint8_t>(i);
    // support of the xi-part transforms by sigma^{-1}
    y.xi = permute_bits(y.perm, x.xi);
    y.eps = 0;
    SergeevElement probe = multiply(x, y);
    y.eps = probe.eps;  // flipping y.eps flips the product's eps
    return y;
}

int degree_grading(const SergeevElement& x) { return std::popcount(unsigned(x.xi)) & 1; }

std::uint32_t dense_index(const SergeevElement& x) {
    return static_cast<std::uint32_t>(x.eps) + 2u * x.xi +
           (lehmer_rank(x) << (x.d + 1));
}

SergeevElement element_at(int d, std::uint32_t index) {
    check_degree(d, 8, "element_at");
    SergeevElement e;
    e.d = static_cast<std::uint8_t>(d);
    e.eps = static_cast<std::uint8_t>(index & 1);
    e.xi = static_cast<std::uint16_t>((index >> 1) & ((1u << d) - 1));
    lehmer_unrank(d, index >> (d + 1), e.perm);
    return e;
}

std::uint64_t group_order(int d) {
    std::uint64_t f = 1;
    for (int i = 2; i <= d; ++i) f *= static_cast<std::uint64_t>(i);
    return f << (d + 1);
}

namespace {

std::vector<SergeevElement> group_generators(int d) {
    std::vector<SergeevElement> gens;
    gens.push_back(epsilon_element(d));
    gens.push_back(xi_generator(d, 0));
    for (int i = 0; i + 1 < d; ++i) {
        std::vector<int> t(d);
        for (int j = 0; j < d; ++j) t[j] = j;
        std::swap(t[i], t[i + 1]);
        gens.push_back(pure_permutation(d, t));
    }
    return gens;
}

}  // namespace

std::vector<SergeevElement> enumerate_group(int d, int bound) {
    check_degree(d, 8, "enumerate_group");
    if (d > bound)
        throw resource_limit_error("enumerate_group: d=" + std::to_string(d) +
                                   " exceeds enumeration bound " + std::to_string(bound));
    const std::uint64_t expected = group_order(d);
    std::vector<bool> seen(expected, false);
    std::vector<SergeevElement> frontier{identity_element(d)}, all;
    seen[dense_index(frontier[0])] = true;
    const auto gens = group_generators(d);
    while (!frontier.empty()) {
        std::vector<SergeevElement> next;
        for (const auto& x : frontier) {
            all.push_back(x);
            for (const auto& g : gens) {
                SergeevElement y = multiply(x, g);
                std::uint32_t idx = dense_index(y);
                if (!seen[idx]) {
                    seen[idx] = true;
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    if (all.size() != expected)
        throw internal_consistency_error("enumerate_group: closure has " +
                                         std::to_string(all.size()) + " elements, expected " +
                                         std::to_string(expected));
    std::sort(all.begin(), all.end(), [](const SergeevElement& a, const SergeevElement& b) {
        return dense_index(a) < dense_index(b);
    });
    return all;
}

namespace {

/// Conjugation orbit of seed under the whole group (closure under generator
/// conjugation), as sorted dense indexes.
std::vector<std::uint32_t> conjugacy_orbit(int d, const SergeevElement& seed) {
    const auto gens = group_generators(d);
    std::vector<SergeevElement> gen_invs;
    gen_invs.reserve(gens.size());
    for (const auto& g : gens) gen_invs.push_back(inverse(g));

    std::unordered_set<std::uint32_t> seen{dense_index(seed)};
    std::vector<SergeevElement> frontier{seed};
    while (!frontier.empty()) {
        std::vector<SergeevElement> next;
        for (const auto& x : frontier) {
            for (std::size_t k = 0; k < gens.size(); ++k) {
                SergeevElement y = multiply(gens[k], multiply(x, gen_invs[k]));
                if (seen.insert(dense_index(y)).second) next.push_back(y);
            }
        }
        frontier = std::move(next);
    }
    std::vector<std::uint32_t> orbit(seen.begin(), seen.end());
    std::sort(orbit.begin(), orbit.end());
    return orbit;
}

}  // namespace

ConjClassPair pure_class(int d, const Partition& gamma) {
    check_degree(d, 8, "pure_class");
    if (gamma.degree() != d) throw invalid_input_error("pure_class: degree mismatch");
    if (!gamma.is_odd())
        throw invalid_input_error("pure_class: " + gamma.to_string() + " is not an odd partition");
    ConjClassPair out;
    out.gamma = gamma;
    auto orbit = conjugacy_orbit(d, canonical_pure(gamma, d));
    out.members.reserve(orbit.size());
    for (std::uint32_t idx : orbit) out.members.push_back(element_at(d, idx));
    out.size = out.members.size();

    BigInt expected = BigInt(static_cast<std::int64_t>(group_order(d))) / theta(gamma);
    if (BigInt(static_cast<std::int64_t>(out.size)) != expected)
        throw internal_consistency_error("pure_class: |C_" + gamma.to_string() + "| = " +
                                         std::to_string(out.size) + ", expected " +
                                         expected.to_string());
    return out;
}

ClassCensus class_census(int d, int bound) {
    check_degree(d, 8, "class_census");
    if (d > bound)
        throw resource_limit_error("class_census: d=" + std::to_string(d) +
                                   " exceeds enumeration bound " + std::to_string(bound));
    enumerate_group(d, bound);  // validates the group law / order before trusting orbits

    const std::uint64_t n = group_order(d);
    ClassCensus census;
    census.d = d;
    census.order = n;
    census.even_pairs = census.odd_pairs = census.self_paired = 0;

    std::vector<bool> assigned(n, false);
    for (std::uint32_t idx = 0; idx < n; ++idx) {
        if (assigned[idx]) continue;
        SergeevElement rep = element_at(d, idx);
        auto orbit = conjugacy_orbit(d, rep);
        for (std::uint32_t m : orbit) assigned[m] = true;

        CensusClass cls;
        cls.representative = orbit.front();
        cls.size = orbit.size();
        cls.odd_grading = degree_grading(rep) == 1;
        // eps-shift of a dense index flips the low bit
        cls.self_paired = std::binary_search(orbit.begin(), orbit.end(), idx ^ 1u);
        cls.pure_type = false;
        for (std::uint32_t m : orbit) {
            SergeevElement e = element_at(d, m);
            if (e.eps == 0 && e.xi == 0) {
                cls.pure_type = true;
                break;
            }
        }
        census.classes.push_back(cls);
        if (cls.self_paired)
            ++census.self_paired;
        else if (cls.odd_grading)
            ++census.odd_pairs;
        else
            ++census.even_pairs;
    }
    // disjoint pairs got counted once per member class
    if (census.even_pairs % 2 || census.odd_pairs % 2)
        throw internal_consistency_error("class_census: unpaired eps-partner class");
    census.even_pairs /= 2;
    census.odd_pairs /= 2;
    return census;
}

int ClassAlgebra::index_of(const Partition& gamma) const {
    for (int i = 0; i < size(); ++i)
        if (basis[i] == gamma) return i;
    return -1;
}

int ClassAlgebra::identity_index() const { return size() - 1; }  // (1^d) is reverse-lex last

namespace {

struct PackedClass {
    std::vector<SergeevElement> members;
};

void convolve_range(const std::vector<SergeevElement>& xs, std::size_t lo, std::size_t hi,
                    const std::vector<SergeevElement>& ys, std::vector<std::uint32_t>& acc) {
    for (std::size_t i = lo; i < hi; ++i) {
        const SergeevElement& x = xs[i];
        for (const SergeevElement& y : ys) {
            ++acc[dense_index(multiply(x, y))];
        }
    }
}

std::vector<std::uint32_t> convolve(const std::vector<SergeevElement>& xs,
                                    const std::vector<SergeevElement>& ys, std::uint64_t n,
                                    int jobs) {
    if (jobs <= 0) jobs = static_cast<int>(std::thread::hardware_concurrency());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, static_cast<int>(xs.size()) > 0 ? static_cast<int>(xs.size()) : 1);

    if (jobs == 1 || xs.size() * ys.size() < 1u << 20) {
        std::vector<std::uint32_t> acc(n, 0);
        convolve_range(xs, 0, xs.size(), ys, acc);
        return acc;
    }
    // data-parallel over x with per-worker counters; integer merge is
    // schedule-independent
    std::vector<std::vector<std::uint32_t>> partial(jobs);
    std::vector<std::thread> workers;
    std::size_t chunk = (xs.size() + jobs - 1) / jobs;
    for (int w = 0; w < jobs; ++w) {
        std::size_t lo = std::min(xs.size(), w * chunk);
        std::size_t hi = std::min(xs.size(), lo + chunk);
        workers.emplace_back([&, w, lo, hi] {
            partial[w].assign(n, 0);
            convolve_range(xs, lo, hi, ys, partial[w]);
        });
    }
    for (auto& t : workers) t.join();
    std::vector<std::uint32_t> acc(n, 0);
    for (int w = 0; w < jobs; ++w)
        for (std::uint64_t i = 0; i < n; ++i) acc[i] += partial[w][i];
    return acc;
}

}  // namespace

std::vector<std::uint32_t> convolve_pure_classes(int d, const Partition& alpha,
                                                 const Partition& beta, int jobs) {
    check_degree(d, 8, "convolve_pure_classes");
    ConjClassPair ca = pure_class(d, alpha);
    ConjClassPair cb = pure_class(d, beta);
    return convolve(ca.members, cb.members, group_order(d), jobs);
}

ClassAlgebra structure_constants(int d, int jobs, int bound) {
    check_degree(d, 8, "structure_constants");
    if (d > bound)
        throw resource_limit_error("structure_constants: d=" + std::to_string(d) +
                                   " exceeds convolution bound " + std::to_string(bound));
    ClassAlgebra alg;
    alg.d = d;
    alg.basis = enumerate_partitions(d, PartitionClass::odd);
    alg.order = group_order(d);
    const int m = alg.size();

    std::vector<PackedClass> classes(m);
    std::vector<std::uint32_t> rep_index(m), rep_eps_index(m);
    for (int i = 0; i < m; ++i) {
        ConjClassPair cls = pure_class(d, alg.basis[i]);
        alg.theta_values.push_back(theta(alg.basis[i]));
        alg.class_sizes.push_back(cls.size);
        rep_index[i] = dense_index(canonical_pure(alg.basis[i], d));
        rep_eps_index[i] = rep_index[i] ^ 1u;
        classes[i].members = std::move(cls.members);
    }

    alg.mult.assign(m, Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>::Zero(m, m));
    for (int a = 0; a < m; ++a) {
        for (int b = a; b < m; ++b) {
            auto acc = convolve(classes[a].members, classes[b].members, alg.order, jobs);
            for (int g = 0; g < m; ++g) {
                std::int64_t coeff = static_cast<std::int64_t>(acc[rep_index[g]]) -
                                     static_cast<std::int64_t>(acc[rep_eps_index[g]]);
                alg.mult[a](g, b) = coeff;
                alg.mult[b](g, a) = coeff;
            }
        }
    }

    // identity law a^g_{1,b} = delta_{g,b} is structural; check it now
    const int one = alg.identity_index();
    for (int g = 0; g < m; ++g)
        for (int b = 0; b < m; ++b)
            if (alg.mult[one](g, b) != (g == b ? 1 : 0))
                throw internal_consistency_error("structure_constants: identity law failed");
    return alg;
}

BigInt tuple_identity_count(int d, const std::vector<Partition>& classes, int bound) {
    check_degree(d, 8, "tuple_identity_count");
    if (d > bound)
        throw resource_limit_error("tuple_identity_count: d=" + std::to_string(d) +
                                   " exceeds enumeration bound " + std::to_string(bound));
    if (classes.empty()) return BigInt(1);  // the empty product is the identity

    const std::uint64_t n = group_order(d);
    std::vector<BigInt> dist(n);
    ConjClassPair first = pure_class(d, classes.front());
    for (const auto& x : first.members) dist[dense_index(x)] = BigInt(1);

    for (std::size_t step = 1; step < classes.size(); ++step) {
        ConjClassPair cls = pure_class(d, classes[step]);
        std::vector<BigInt> next(n);
        for (std::uint64_t i = 0; i < n; ++i) {
            if (dist[i].is_zero()) continue;
            SergeevElement x = element_at(d, static_cast<std::uint32_t>(i));
            for (const auto& y : cls.members) next[dense_index(multiply(x, y))] += dist[i];
        }
        dist = std::move(next);
    }
    return dist[dense_index(identity_element(d))];
}

}  // namespace spinhurwitz
