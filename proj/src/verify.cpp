#include "spinhurwitz/verify.hpp"

#include <map>
#include <memory>
#include <random>

#include "spinhurwitz/errors.hpp"
#include "spinhurwitz/hurwitz.hpp"
#include "spinhurwitz/linalg.hpp"
#include "spinhurwitz/oracle.hpp"
#include "spinhurwitz/tqft.hpp"

namespace spinhurwitz {

SpectrumSource computing_source(int jobs) {
    auto algebras = std::make_shared<std::map<int, ClassAlgebra>>();
    auto spectra = std::make_shared<std::map<int, SpinSpectrum>>();
    SpectrumSource source;
    source.algebra = [algebras, jobs](int d) -> const ClassAlgebra& {
        auto it = algebras->find(d);
        if (it == algebras->end()) it = algebras->emplace(d, structure_constants(d, jobs)).first;
        return it->second;
    };
    source.spectrum = [algebras, spectra, jobs](int d) -> const SpinSpectrum& {
        auto it = spectra->find(d);
        if (it == spectra->end()) {
            auto ait = algebras->find(d);
            if (ait == algebras->end())
                ait = algebras->emplace(d, structure_constants(d, jobs)).first;
            it = spectra->emplace(d, spin_spectrum(ait->second)).first;
        }
        return it->second;
    };
    return source;
}

std::vector<ProfileList> profile_multisets(int d, int max_count) {
    auto basis = enumerate_partitions(d, PartitionClass::odd);
    std::vector<ProfileList> out;
    std::vector<Partition> current;
    auto recurse = [&](auto&& self, std::size_t start) -> void {
        out.emplace_back(d, current);
        if (static_cast<int>(current.size()) == max_count) return;
        for (std::size_t i = start; i < basis.size(); ++i) {
            current.push_back(basis[i]);
            self(self, i);
            current.pop_back();
        }
    };
    recurse(recurse, 0);
    return out;
}

namespace {

void add_check(VerifyReport& report, std::string label, std::string lhs, std::string rhs) {
    bool ok = lhs == rhs;
    report.lines.push_back({std::move(label), std::move(lhs), std::move(rhs), ok});
}

void add_flag(VerifyReport& report, std::string label, bool ok, std::string detail = "") {
    report.lines.push_back(
        {std::move(label), ok ? "ok" : ("violated " + detail), "ok", ok});
}

std::string profiles_text(const ProfileList& profiles) {
    if (profiles.profiles.empty()) return "()";
    std::string s;
    for (std::size_t i = 0; i < profiles.profiles.size(); ++i) {
        if (i) s += ";";
        s += profiles.profiles[i].to_string();
    }
    return s;
}

}  // namespace

VerifyReport verify_axioms(int d_max, const SpectrumSource& source, unsigned seed) {
    VerifyReport report{"axioms", {}};
    std::mt19937 rng(seed);

    for (int d = 1; d <= std::min(d_max, 4); ++d) {
        auto group = enumerate_group(d);
        add_check(report, "d=" + std::to_string(d) + " closure order",
                  std::to_string(group.size()), std::to_string(group_order(d)));

        std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
        const SergeevElement one = identity_element(d);
        bool associative = true, inverses = true, neutral = true;
        for (int trial = 0; trial < 10000; ++trial) {
            const auto& x = group[pick(rng)];
            const auto& y = group[pick(rng)];
            const auto& z = group[pick(rng)];
            if (!(multiply(multiply(x, y), z) == multiply(x, multiply(y, z))))
                associative = false;
            if (trial % 10 == 0) {
                if (!(multiply(x, inverse(x)) == one && multiply(inverse(x), x) == one))
                    inverses = false;
                if (!(multiply(x, one) == x && multiply(one, x) == x)) neutral = false;
            }
        }
        add_flag(report, "d=" + std::to_string(d) + " associativity (10^4 samples)", associative);
        add_flag(report, "d=" + std::to_string(d) + " inverses", inverses);
        add_flag(report, "d=" + std::to_string(d) + " identity neutral", neutral);
    }

    for (int d = 1; d <= std::min(d_max, 6); ++d) {
        const ClassAlgebra& alg = source.algebra(d);
        const int m = alg.size();
        bool commutative = true, identity_law = true, associative = true;
        for (int a = 0; a < m; ++a)
            for (int g = 0; g < m; ++g)
                for (int b = 0; b < m; ++b)
                    if (alg.mult[a](g, b) != alg.mult[b](g, a)) commutative = false;
        const int one = alg.identity_index();
        for (int g = 0; g < m; ++g)
            for (int b = 0; b < m; ++b)
                if (alg.mult[one](g, b) != (g == b ? 1 : 0)) identity_law = false;
        for (int a = 0; a < m && associative; ++a)
            for (int b = 0; b < m && associative; ++b)
                for (int g = 0; g < m && associative; ++g)
                    for (int e = 0; e < m; ++e) {
                        BigInt lhs(0), rhs(0);
                        for (int t = 0; t < m; ++t) {
                            lhs += BigInt(alg.mult[a](t, b)) * BigInt(alg.mult[t](e, g));
                            rhs += BigInt(alg.mult[b](t, g)) * BigInt(alg.mult[a](e, t));
                        }
                        if (!(lhs == rhs)) {
                            associative = false;
                            break;
                        }
                    }
        std::string tag = "d=" + std::to_string(d) + " Z0+ ";
        add_flag(report, tag + "commutativity", commutative);
        add_flag(report, tag + "identity law", identity_law);
        add_flag(report, tag + "associativity", associative);
    }

    // convolution-level structure for small d: total mass, grading support,
    // class-function property of the coefficients
    for (int d = 1; d <= std::min(d_max, 5); ++d) {
        auto basis = enumerate_partitions(d, PartitionClass::odd);
        auto census = class_census(d);
        bool mass_ok = true, grading_ok = true, self_paired_ok = true;
        for (std::size_t a = 0; a < basis.size(); ++a) {
            for (std::size_t b = a; b < basis.size(); ++b) {
                auto acc = convolve_pure_classes(d, basis[a], basis[b]);
                BigInt total(0);
                for (std::uint32_t c : acc) total += BigInt(c);
                BigInt expected = (BigInt(static_cast<std::int64_t>(group_order(d))) /
                                   theta(basis[a])) *
                                  (BigInt(static_cast<std::int64_t>(group_order(d))) /
                                   theta(basis[b]));
                if (!(total == expected)) mass_ok = false;
                for (std::uint32_t idx = 0; idx < acc.size(); ++idx) {
                    if (acc[idx] &&
                        degree_grading(element_at(d, idx)) == 1)
                        grading_ok = false;
                }
                for (const auto& cls : census.classes) {
                    if (!cls.self_paired) continue;
                    if (acc[cls.representative] != acc[cls.representative ^ 1u])
                        self_paired_ok = false;
                }
            }
        }
        std::string tag = "d=" + std::to_string(d) + " convolution ";
        add_flag(report, tag + "total mass |C_a||C_b|", mass_ok);
        add_flag(report, tag + "supported on even classes", grading_ok);
        add_flag(report, tag + "self-paired classes cancel", self_paired_ok);
    }
    return report;
}

VerifyReport verify_census(int d_max) {
    VerifyReport report{"census", {}};
    for (int d = 1; d <= std::min(d_max, 10); ++d) {
        auto op = enumerate_partitions(d, PartitionClass::odd);
        auto sp = enumerate_partitions(d, PartitionClass::strict);
        add_check(report, "d=" + std::to_string(d) + " |OP| = |SP|", std::to_string(op.size()),
                  std::to_string(sp.size()));
    }
    for (int d = 1; d <= std::min(d_max, 8); ++d) {
        bool parity_ok = true;
        for (const auto& gamma : enumerate_partitions(d, PartitionClass::odd))
            if ((gamma.length() - d) % 2 != 0) parity_ok = false;
        add_flag(report, "d=" + std::to_string(d) + " len(gamma) = d mod 2 on OP", parity_ok);
    }
    for (int d = 1; d <= std::min(d_max, 4); ++d) {
        auto census = class_census(d);
        auto op = enumerate_partitions(d, PartitionClass::odd);
        auto sp_minus = enumerate_partitions(d, PartitionClass::strict_odd);
        add_check(report, "d=" + std::to_string(d) + " even pairs m",
                  std::to_string(census.even_pairs), std::to_string(op.size()));
        add_check(report, "d=" + std::to_string(d) + " odd pairs q",
                  std::to_string(census.odd_pairs), std::to_string(sp_minus.size()));
    }
    for (int d = 1; d <= std::min(d_max, 5); ++d) {
        bool sizes_ok = true;
        for (const auto& gamma : enumerate_partitions(d, PartitionClass::odd)) {
            auto cls = pure_class(d, gamma);
            BigInt expected = BigInt(static_cast<std::int64_t>(group_order(d))) / theta(gamma);
            if (!(BigInt(static_cast<std::int64_t>(cls.size)) == expected)) sizes_ok = false;
        }
        add_flag(report, "d=" + std::to_string(d) + " |C_gamma| = |C(d)|/theta_gamma", sizes_ok);
    }
    return report;
}

VerifyReport verify_orthogonality_suite(int d_max, const SpectrumSource& source) {
    VerifyReport report{"orthogonality", {}};
    for (int d = 1; d <= std::min(d_max, 6); ++d) {
        const ClassAlgebra& alg = source.algebra(d);
        const SpinSpectrum& spec = source.spectrum(d);
        auto orth = verify_orthogonality(spec);
        add_flag(report,
                 "d=" + std::to_string(d) + " character orthogonality (" +
                     std::to_string(orth.pairs_checked) + " pairs)",
                 orth.ok());

        const int m = alg.size();
        VectorXq sum = VectorXq::Zero(m);
        bool idempotent_ok = true, orthogonal_ok = true, eigen_ok = true;
        std::vector<VectorXq> idems;
        for (const auto& slot : spec.slots) idems.push_back(idempotent_vector(slot, alg));
        for (std::size_t i = 0; i < idems.size(); ++i) {
            sum += idems[i];
            VectorXq sq = algebra_product(alg, idems[i], idems[i]);
            for (int g = 0; g < m; ++g)
                if (!(sq(g) == idems[i](g))) idempotent_ok = false;
            for (std::size_t j = i + 1; j < idems.size(); ++j) {
                VectorXq prod = algebra_product(alg, idems[i], idems[j]);
                for (int g = 0; g < m; ++g)
                    if (!prod(g).is_zero()) orthogonal_ok = false;
            }
            for (int a = 0; a < m; ++a) {
                VectorXq image = VectorXq::Zero(m);
                for (int g = 0; g < m; ++g)
                    for (int b = 0; b < m; ++b)
                        image(g) += Rational(alg.mult[a](g, b)) * idems[i](b);
                for (int g = 0; g < m; ++g)
                    if (!(image(g) == spec.slots[i].f[a] * idems[i](g))) eigen_ok = false;
            }
        }
        bool complete = true;
        for (int g = 0; g < m; ++g) {
            Rational expect(g == alg.identity_index() ? 1 : 0);
            if (!(sum(g) == expect)) complete = false;
        }
        std::string tag = "d=" + std::to_string(d) + " ";
        add_flag(report, tag + "idempotents square to themselves", idempotent_ok);
        add_flag(report, tag + "distinct idempotents annihilate", orthogonal_ok);
        add_flag(report, tag + "idempotents sum to the unit", complete);
        add_flag(report, tag + "M_a e = f_a e", eigen_ok);
    }
    return report;
}

VerifyReport verify_gluing(int d_max, const SpectrumSource& source) {
    VerifyReport report{"gluing", {}};
    for (int d = 1; d <= std::min(d_max, 5); ++d) {
        const SpinSpectrum& spec = source.spectrum(d);
        auto multisets = profile_multisets(d, 3);
        int checked = 0;
        bool all_ok = true;
        std::string first_failure;

        for (int h1 = 0; h1 + 0 <= 2; ++h1) {
            for (int h2 = 0; h1 + h2 <= 2; ++h2) {
                for (Parity p1 : {Parity::even, Parity::odd}) {
                    for (Parity p2 : {Parity::even, Parity::odd}) {
                        for (const auto& a : multisets) {
                            for (const auto& b : multisets) {
                                if (a.count() + b.count() > 3) continue;
                                SeparatingSplit split{h1, p1, a, h2, p2, b};
                                auto rep = gluing_check(split, spec);
                                checked += static_cast<int>(rep.lines.size());
                                if (!rep.ok() && all_ok) {
                                    all_ok = false;
                                    first_failure = "h1=" + std::to_string(h1) +
                                                    " h2=" + std::to_string(h2) + " A=" +
                                                    profiles_text(a) + " B=" + profiles_text(b);
                                }
                            }
                        }
                    }
                }
            }
        }
        for (int h = 0; h <= 2; ++h) {
            for (Parity p : {Parity::even, Parity::odd}) {
                for (const auto& a : multisets) {
                    NonSeparatingSplit split{h, p, a};
                    auto rep = gluing_check(split, spec);
                    checked += static_cast<int>(rep.lines.size());
                    if (!rep.ok() && all_ok) {
                        all_ok = false;
                        first_failure = "non-separating h=" + std::to_string(h) +
                                        " A=" + profiles_text(a);
                    }
                }
            }
        }
        add_flag(report,
                 "d=" + std::to_string(d) + " gluing identities (" + std::to_string(checked) +
                     " identities)",
                 all_ok, first_failure);
    }
    return report;
}

VerifyReport verify_routes(int d_max, const SpectrumSource& source) {
    VerifyReport report{"routes", {}};
    for (int d = 1; d <= std::min(d_max, 5); ++d) {
        const SpinSpectrum& spec = source.spectrum(d);
        auto multisets = profile_multisets(d, 3);
        bool g_ok = true, direct_ok = true;
        std::string g_fail, direct_fail;
        int checked = 0;
        for (int h = 0; h <= 3; ++h) {
            for (Parity p : {Parity::even, Parity::odd}) {
                for (const auto& profiles : multisets) {
                    HurwitzQuery q{d, h, p, profiles, /*allow_formal=*/true};
                    HurwitzValue v = normalized_value(q, spec);
                    Rational literal = euler_form_value(q, spec);
                    ++checked;
                    if (!(literal == v.unnormalized) && g_ok) {
                        g_ok = false;
                        g_fail = "h=" + std::to_string(h) + " p=" + to_string(p) + " " +
                                 profiles_text(profiles);
                    }
                    if (h == 1 && p == Parity::odd) {
                        Rational direct = genus1_odd_value(profiles, spec);
                        if (!(direct == v.unnormalized) && direct_ok) {
                            direct_ok = false;
                            direct_fail = profiles_text(profiles);
                        }
                    }
                }
            }
        }
        add_flag(report,
                 "d=" + std::to_string(d) + " closed-formula routes agree (" +
                     std::to_string(checked) + " queries)",
                 g_ok, g_fail);
        add_flag(report, "d=" + std::to_string(d) + " genus-1 odd route agrees", direct_ok, direct_fail);
    }

    // degree-1 and degree-2 closed values
    if (d_max >= 1) {
        const SpinSpectrum& spec1 = source.spectrum(1);
        bool ok = true;
        for (int h = 0; h <= 4; ++h) {
            HurwitzQuery q{1, h, Parity::even, ProfileList(1, {}), false};
            if (!(normalized_value(q, spec1).unnormalized == Rational(1))) ok = false;
            if (h >= 1) {
                HurwitzQuery qm{1, h, Parity::odd, ProfileList(1, {}), false};
                if (!(normalized_value(qm, spec1).unnormalized == Rational(-1))) ok = false;
            }
        }
        add_flag(report, "d=1 etale values are +1 / -1", ok);
    }
    if (d_max >= 2) {
        const SpinSpectrum& spec2 = source.spectrum(2);
        bool ok = true;
        for (int h = 0; h <= 4; ++h) {
            HurwitzQuery q{2, h, Parity::even, ProfileList(2, {}), false};
            if (!(normalized_value(q, spec2).unnormalized == Rational::two_pow(h - 1))) ok = false;
        }
        add_flag(report, "d=2 etale even values are 2^{h-1}", ok);
    }
    return report;
}

namespace {

/// Random well-typed cobordism AST with the requested arities.
ExprPtr random_expr(std::mt19937& rng, int inputs, int outputs, int depth) {
    std::uniform_int_distribution<int> small(0, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    if (depth <= 0 || small(rng) == 0) {
        CobordismAtom atom{inputs, outputs, small(rng), coin(rng) ? Parity::even : Parity::odd};
        return make_atom(atom);
    }
    if (coin(rng)) {
        // split as tensor when both sides can take a share
        int li = std::uniform_int_distribution<int>(0, inputs)(rng);
        int lo = std::uniform_int_distribution<int>(0, outputs)(rng);
        return make_tensor(random_expr(rng, li, lo, depth - 1),
                           random_expr(rng, inputs - li, outputs - lo, depth - 1));
    }
    int middle = std::uniform_int_distribution<int>(0, 2)(rng);
    return make_compose(random_expr(rng, inputs, middle, depth - 1),
                        random_expr(rng, middle, outputs, depth - 1));
}

bool matrices_equal(const MatrixXq& a, const MatrixXq& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int r = 0; r < a.rows(); ++r)
        for (int c = 0; c < a.cols(); ++c)
            if (!(a(r, c) == b(r, c))) return false;
    return true;
}

/// Evaluate an expression by recursing on the node structure and combining the
/// child evaluations locally; the functor must agree with this composition.
bool functorial(const ExprPtr& expr, const SpinSpectrum& spec) {
    LinearMap whole = evaluate_expr(expr, spec);
    if (const auto* tensor = std::get_if<TensorNode>(&expr->node)) {
        LinearMap left = evaluate_expr(tensor->left, spec);
        LinearMap right = evaluate_expr(tensor->right, spec);
        MatrixXq kron(left.matrix.rows() * right.matrix.rows(),
                      left.matrix.cols() * right.matrix.cols());
        for (int ra = 0; ra < left.matrix.rows(); ++ra)
            for (int ca = 0; ca < left.matrix.cols(); ++ca)
                for (int rb = 0; rb < right.matrix.rows(); ++rb)
                    for (int cb = 0; cb < right.matrix.cols(); ++cb)
                        kron(ra * right.matrix.rows() + rb, ca * right.matrix.cols() + cb) =
                            left.matrix(ra, ca) * right.matrix(rb, cb);
        if (!matrices_equal(whole.matrix, kron)) return false;
        return functorial(tensor->left, spec) && functorial(tensor->right, spec);
    }
    if (const auto* comp = std::get_if<ComposeNode>(&expr->node)) {
        LinearMap first = evaluate_expr(comp->first, spec);
        LinearMap second = evaluate_expr(comp->second, spec);
        if (!matrices_equal(whole.matrix, second.matrix * first.matrix)) return false;
        return functorial(comp->first, spec) && functorial(comp->second, spec);
    }
    return true;
}

}  // namespace

VerifyReport verify_tqft(int d_max, const SpectrumSource& source, unsigned seed) {
    VerifyReport report{"tqft", {}};
    std::mt19937 rng(seed);
    for (int d = 1; d <= std::min(d_max, 3); ++d) {
        const ClassAlgebra& alg = source.algebra(d);
        const SpinSpectrum& spec = source.spectrum(d);
        const int m = alg.size();

        bool functorial_ok = true, roundtrip_ok = true;
        for (int trial = 0; trial < 100; ++trial) {
            std::uniform_int_distribution<int> arity(0, 2);
            ExprPtr expr = random_expr(rng, arity(rng), arity(rng), 3);
            if (!functorial(expr, spec)) functorial_ok = false;
            ExprPtr reparsed = parse_cobordism(to_string(expr));
            if (!matrices_equal(evaluate_expr(expr, spec).matrix,
                                evaluate_expr(reparsed, spec).matrix))
                roundtrip_ok = false;
        }
        std::string tag = "d=" + std::to_string(d) + " ";
        add_flag(report, tag + "functoriality on 100 random ASTs", functorial_ok);
        add_flag(report, tag + "printer/parser round trip", roundtrip_ok);

        // identity cylinder and twist involution
        LinearMap cyl = evaluate_atom({1, 1, 0, Parity::even}, spec);
        add_flag(report, tag + "identity cobordism is the identity map",
                 matrices_equal(cyl.matrix, MatrixXq::Identity(m, m)));
        LinearMap twist = evaluate_atom({1, 1, 0, Parity::odd}, spec);
        add_flag(report, tag + "twist squares to the identity",
                 matrices_equal(twist.matrix * twist.matrix, MatrixXq::Identity(m, m)));

        // genus-adding and parity operators act on idempotents as stated
        FrobeniusData frob = make_frobenius(alg, spec);
        bool g_eigen = true, a_eigen = true;
        for (std::size_t i = 0; i < spec.slots.size(); ++i) {
            VectorXq e = idempotent_vector(spec.slots[i], alg);
            VectorXq ge = frob.genus_adding * e;
            VectorXq ae = frob.parity_involution * e;
            Rational t_inv = Rational(1) / spec.slots[i].t;
            Rational a_val(spec.slots[i].sign == SignClass::plus ? 1 : -1);
            for (int g = 0; g < m; ++g) {
                if (!(ge(g) == t_inv * e(g))) g_eigen = false;
                if (!(ae(g) == a_val * e(g))) a_eigen = false;
            }
        }
        add_flag(report, tag + "G has eigenvalue 1/t on each idempotent", g_eigen);
        add_flag(report, tag + "A has eigenvalue sign on each idempotent", a_eigen);

        bool ga_commute = matrices_equal(frob.genus_adding * frob.parity_involution,
                                         frob.parity_involution * frob.genus_adding);
        add_flag(report, tag + "G and A commute", ga_commute);

        // Frobenius pairing is symmetric and nondegenerate
        MatrixXq pairing(m, m);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b) {
                Rational value(0);
                for (int g = 0; g < m; ++g)
                    value += Rational(alg.mult[a](g, b)) * frob.counit(g);
                pairing(a, b) = value;
            }
        add_flag(report, tag + "pairing symmetric",
                 matrices_equal(pairing, pairing.transpose()));
        add_flag(report, tag + "pairing nondegenerate", rank_of(pairing) == m);

        // closed surfaces through the operator factorization
        bool closed_ok = true;
        for (int h = 0; h <= 3; ++h) {
            for (Parity p : {Parity::even, Parity::odd}) {
                HurwitzQuery q{d, h, p, ProfileList(d, {}), /*allow_formal=*/true};
                if (!(closed_value(h, p, spec) == normalized_value(q, spec).normalized))
                    closed_ok = false;
            }
        }
        add_flag(report, tag + "closed values match the engine (h <= 3)", closed_ok);

        // splitting a genus/parity atom through one glued circle
        bool split_ok = true;
        for (int r = 0; r <= 1; ++r)
            for (int s = 0; s <= 1; ++s)
                for (int h1 = 0; h1 <= 1; ++h1)
                    for (int h2 = 0; h2 <= 1; ++h2)
                        for (Parity p1 : {Parity::even, Parity::odd})
                            for (Parity p2 : {Parity::even, Parity::odd}) {
                                LinearMap whole = evaluate_atom(
                                    {r, s, h1 + h2, combine(p1, p2)}, spec);
                                LinearMap first = evaluate_atom({r, 1, h1, p1}, spec);
                                LinearMap second = evaluate_atom({1, s, h2, p2}, spec);
                                if (!matrices_equal(whole.matrix,
                                                    second.matrix * first.matrix))
                                    split_ok = false;
                            }
        add_flag(report, tag + "atoms factor through one glued circle", split_ok);

        // trading a handle for a contracted circle pair
        bool trace_ok = true;
        for (int r = 0; r <= 1; ++r)
            for (int s = 0; s <= 1; ++s)
                for (int h = 0; h <= 1; ++h)
                    for (Parity p : {Parity::even, Parity::odd}) {
                        LinearMap added = evaluate_atom({r, s, h + 1, p}, spec);
                        LinearMap wide = evaluate_atom({r + 1, s + 1, h, p}, spec);
                        const int rows = static_cast<int>(added.matrix.rows());
                        const int cols = static_cast<int>(added.matrix.cols());
                        MatrixXq contracted = MatrixXq::Zero(rows, cols);
                        for (int row = 0; row < rows; ++row)
                            for (int col = 0; col < cols; ++col)
                                for (int g = 0; g < m; ++g)
                                    contracted(row, col) +=
                                        wide.matrix(row * m + g, col * m + g);
                        if (!matrices_equal(added.matrix, contracted)) trace_ok = false;
                    }
        add_flag(report, tag + "handles equal contracted circle pairs", trace_ok);
    }
    return report;
}

VerifyReport verify_oracle(int d_max, const SpectrumSource& source) {
    VerifyReport report{"oracle", {}};
    for (int d = 1; d <= std::min(d_max, 4); ++d) {
        const SpinSpectrum& spec = source.spectrum(d);
        bool agree = true, parity_ok = true, classical_ok = true;
        std::string fail;
        int covers = 0;
        for (const auto& profiles : profile_multisets(d, 3)) {
            Rational brute;
            try {
                brute = spin_hurwitz_genus0_bruteforce(d, profiles);
            } catch (const internal_consistency_error&) {
                parity_ok = false;
                continue;
            }
            HurwitzQuery q{d, 0, Parity::even, profiles, false};
            Rational closed = normalized_value(q, spec).unnormalized;
            if (!(brute == closed) && agree) {
                agree = false;
                fail = profiles_text(profiles) + " brute=" + brute.to_string() +
                       " closed=" + closed.to_string();
            }
            // classical count both through orbits and through tuple counting
            Rational classical = classical_hurwitz(d, profiles);
            BigInt raw = symmetric_tuple_identity_count(
                d, profiles.profiles);
            std::uint64_t fct = 1;
            for (int i = 2; i <= d; ++i) fct *= static_cast<std::uint64_t>(i);
            if (!(classical == Rational(raw, BigInt(static_cast<std::int64_t>(fct)))))
                classical_ok = false;
            covers += static_cast<int>(enumerate_genus0_monodromy(d, profiles).size());
        }
        std::string tag = "d=" + std::to_string(d) + " ";
        add_flag(report, tag + "brute force = closed formula (all k<=3 multisets)", agree, fail);
        add_flag(report, tag + "every cover parity is +-1 (" + std::to_string(covers) + " covers)",
                 parity_ok);
        add_flag(report, tag + "classical Hurwitz via orbits = via tuple count", classical_ok);
    }

    // weighted lift counts sum to the group-level count, both groups
    for (int d = 1; d <= std::min(d_max, 3); ++d) {
        bool sergeev_ok = true, hyper_ok = true;
        for (const auto& profiles : profile_multisets(d, 3)) {
            Rational sum_c(0), sum_b(0);
            for (const auto& orbit : enumerate_genus0_monodromy(d, profiles)) {
                LiftCounts counts = lift_counts(orbit.representative);
                Rational weight(BigInt(static_cast<std::int64_t>(orbit.orbit_size)));
                sum_c += weight * counts.h_sergeev;
                sum_b += weight * counts.h_hyperoctahedral;
            }
            BigInt c_count = tuple_identity_count(d, profiles.profiles);
            BigInt b_count = hyperoctahedral_tuple_identity_count(d, profiles.profiles);
            Rational c_expect(c_count, BigInt(static_cast<std::int64_t>(group_order(d))));
            Rational b_expect(b_count, BigInt(static_cast<std::int64_t>(group_order(d) / 2)));
            if (!(sum_c == c_expect)) sergeev_ok = false;
            if (!(sum_b == b_expect)) hyper_ok = false;
        }
        std::string tag = "d=" + std::to_string(d) + " ";
        add_flag(report, tag + "sum_phi h_C(M;phi) = h_C(M)", sergeev_ok);
        add_flag(report, tag + "sum_phi h_B(M;phi) = h_B(M)", hyper_ok);
    }
    return report;
}

VerifyReport verify_two_torsion(int d_max) {
    VerifyReport report{"lemma3", {}};
    for (int d = 1; d <= std::min(d_max, 3); ++d) {
        bool ok = true;
        int checked = 0;
        std::string fail;
        for (const auto& profiles : profile_multisets(d, 3)) {
            for (const auto& orbit : enumerate_genus0_monodromy(d, profiles)) {
                auto rep = two_torsion_check(orbit.representative);
                ++checked;
                if (!rep.ok && ok) {
                    ok = false;
                    fail = profiles_text(profiles) + " |H_B|=" + rep.lift_count.to_string() +
                           " expected " + rep.expected.to_string();
                }
            }
        }
        add_flag(report,
                 "d=" + std::to_string(d) + " two-torsion count (" + std::to_string(checked) +
                     " covers)",
                 ok, fail);
    }
    return report;
}

std::vector<VerifyReport> run_suites(const std::string& name, int d_max,
                                     const SpectrumSource& source) {
    std::vector<VerifyReport> reports;
    auto want = [&](const char* suite) { return name == "all" || name == suite; };
    if (want("axioms")) reports.push_back(verify_axioms(d_max, source));
    if (want("census")) reports.push_back(verify_census(d_max));
    if (want("orthogonality")) reports.push_back(verify_orthogonality_suite(d_max, source));
    if (want("gluing")) reports.push_back(verify_gluing(d_max, source));
    if (want("routes")) reports.push_back(verify_routes(d_max, source));
    if (want("tqft")) reports.push_back(verify_tqft(d_max, source));
    if (want("oracle")) reports.push_back(verify_oracle(d_max, source));
    if (want("lemma3")) reports.push_back(verify_two_torsion(d_max));
    if (reports.empty()) throw invalid_input_error("unknown verify suite: " + name);
    return reports;
}

}  // namespace spinhurwitz
