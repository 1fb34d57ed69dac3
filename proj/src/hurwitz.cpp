#include "spinhurwitz/hurwitz.hpp"

#include "spinhurwitz/errors.hpp"

namespace spinhurwitz {

namespace {

/// prod_i f_{alpha_i}(slot) for every slot.
std::vector<Rational> character_products(const ProfileList& profiles,
                                         const SpinSpectrum& spectrum) {
    std::vector<int> indexes;
    indexes.reserve(profiles.profiles.size());
    for (const Partition& p : profiles.profiles) {
        int idx = spectrum.index_of(p);
        if (idx < 0)
            throw invalid_input_error("profile " + p.to_string() + " is not in OP(" +
                                      std::to_string(spectrum.d) + ")");
        indexes.push_back(idx);
    }
    std::vector<Rational> out;
    out.reserve(spectrum.slots.size());
    for (const auto& slot : spectrum.slots) {
        Rational prod(1);
        for (int idx : indexes) prod *= slot.f[idx];
        out.push_back(prod);
    }
    return out;
}

void check_query(const HurwitzQuery& q, const SpinSpectrum& spectrum) {
    if (q.d != spectrum.d) throw invalid_input_error("query degree does not match spectrum");
    if (q.profiles.d != q.d) throw invalid_input_error("profile degree mismatch");
    if (q.genus < 0) throw invalid_input_error("genus must be >= 0");
    if (q.genus == 0 && q.parity == Parity::odd && !q.allow_formal)
        throw invalid_input_error(
            "(genus, parity) = (0,-) is not a geometric spin Hurwitz number; "
            "pass the formal flag to evaluate the extended value");
}

}  // namespace

HurwitzValue normalized_value(const HurwitzQuery& query, const SpinSpectrum& spectrum) {
    check_query(query, spectrum);
    const int h = query.genus;
    auto prods = character_products(query.profiles, spectrum);

    Rational plus_sum(0), minus_sum(0);
    const Rational two_shift = Rational::two_pow(1 - h);
    for (std::size_t i = 0; i < spectrum.slots.size(); ++i) {
        const auto& slot = spectrum.slots[i];
        Rational term = slot.c.pow_int(2 - 2 * h) * prods[i];
        if (slot.sign == SignClass::plus)
            plus_sum += two_shift * term;
        else
            minus_sum += term;
    }

    HurwitzValue value;
    value.normalized =
        query.parity == Parity::even ? plus_sum + minus_sum : plus_sum - minus_sum;
    value.chi_domain = domain_euler_char(query.d, h, query.profiles);
    value.chi_base = 2 - 2 * h;
    if ((value.chi_domain + value.chi_base) % 2 != 0)
        throw internal_consistency_error("normalized_value: odd normalization exponent");
    value.unnormalized =
        Rational::two_pow((value.chi_domain + value.chi_base) / 2) * value.normalized;
    value.formal = (h == 0 && query.parity == Parity::odd);
    return value;
}

Rational genus1_odd_value(const ProfileList& profiles, const SpinSpectrum& spectrum) {
    auto prods = character_products(profiles, spectrum);
    Rational plus_sum(0), minus_sum(0);
    for (std::size_t i = 0; i < spectrum.slots.size(); ++i) {
        (spectrum.slots[i].sign == SignClass::plus ? plus_sum : minus_sum) += prods[i];
    }
    int chi = domain_euler_char(spectrum.d, 1, profiles);
    return Rational::two_pow(chi / 2) * (plus_sum - minus_sum);
}

Rational euler_form_value(const HurwitzQuery& query, const SpinSpectrum& spectrum) {
    check_query(query, spectrum);
    const int chi_base = 2 - 2 * query.genus;
    auto prods = character_products(query.profiles, spectrum);

    Rational plus_sum(0), minus_sum(0);
    for (std::size_t i = 0; i < spectrum.slots.size(); ++i) {
        const auto& slot = spectrum.slots[i];
        Rational term = slot.c.pow_int(chi_base) * prods[i];
        if (slot.sign == SignClass::plus)
            plus_sum += Rational::two_pow(chi_base / 2) * term;
        else
            minus_sum += term;
    }
    Rational inner =
        query.parity == Parity::even ? plus_sum + minus_sum : plus_sum - minus_sum;
    int chi_domain = domain_euler_char(query.d, query.genus, query.profiles);
    return Rational::two_pow((chi_domain + chi_base) / 2) * inner;
}

Rational gt_invariant(int d, int genus, Parity parity, const SpinSpectrum& spectrum) {
    if (d != spectrum.d) throw invalid_input_error("gt_invariant: degree mismatch");
    if (genus < 0) throw invalid_input_error("gt_invariant: genus must be >= 0");
    if (genus == 0 && parity == Parity::odd)
        throw invalid_input_error("gt_invariant: (0,-) is not geometric");
    Rational sum(0);
    for (const auto& slot : spectrum.slots) {
        Rational term = slot.t.pow_int(1 - genus);
        bool negate = parity == Parity::odd && slot.sign == SignClass::minus;
        sum += negate ? -term : term;
    }
    int chi_base = 2 - 2 * genus;
    int chi_domain = d * chi_base;  // etale cover
    return Rational::two_pow((chi_domain + chi_base) / 2) * sum;
}

namespace {

ProfileList with_extra(const ProfileList& base, const Partition& extra, int copies) {
    std::vector<Partition> entries = base.profiles;
    for (int i = 0; i < copies; ++i) entries.push_back(extra);
    return ProfileList(base.d, std::move(entries));
}

ProfileList concat(const ProfileList& a, const ProfileList& b) {
    std::vector<Partition> entries = a.profiles;
    entries.insert(entries.end(), b.profiles.begin(), b.profiles.end());
    return ProfileList(a.d, std::move(entries));
}

HurwitzValue formal_value(int d, int genus, Parity parity, const ProfileList& profiles,
                          const SpinSpectrum& spectrum) {
    HurwitzQuery q{d, genus, parity, profiles, /*allow_formal=*/true};
    return normalized_value(q, spectrum);
}

}  // namespace

GluingReport gluing_check(const SeparatingSplit& split, const SpinSpectrum& spectrum) {
    const int d = spectrum.d;
    GluingReport report;
    const auto basis = spectrum.basis;

    const int genus = split.genus1 + split.genus2;
    const Parity parity = combine(split.parity1, split.parity2);
    ProfileList joint = concat(split.profiles1, split.profiles2);
    HurwitzValue whole = formal_value(d, genus, parity, joint, spectrum);

    Rational rhs_unnormalized(0), rhs_normalized(0);
    for (const Partition& gamma : basis) {
        HurwitzValue left =
            formal_value(d, split.genus1, split.parity1, with_extra(split.profiles1, gamma, 1),
                         spectrum);
        HurwitzValue right =
            formal_value(d, split.genus2, split.parity2, with_extra(split.profiles2, gamma, 1),
                         spectrum);
        rhs_unnormalized += Rational(z_order(gamma)) * left.unnormalized * right.unnormalized;
        rhs_normalized += Rational(theta(gamma)) * left.normalized * right.normalized;
    }

    report.lines.push_back({"separating, raw", whole.unnormalized.to_string(),
                            rhs_unnormalized.to_string(),
                            whole.unnormalized == rhs_unnormalized});
    report.lines.push_back({"separating, normalized", whole.normalized.to_string(),
                            rhs_normalized.to_string(), whole.normalized == rhs_normalized});
    return report;
}

GluingReport gluing_check(const NonSeparatingSplit& split, const SpinSpectrum& spectrum) {
    const int d = spectrum.d;
    GluingReport report;

    HurwitzValue whole =
        formal_value(d, split.genus + 1, split.parity, split.profiles, spectrum);
    Rational rhs_unnormalized(0), rhs_normalized(0);
    for (const Partition& gamma : spectrum.basis) {
        HurwitzValue piece = formal_value(d, split.genus, split.parity,
                                          with_extra(split.profiles, gamma, 2), spectrum);
        rhs_unnormalized += Rational(z_order(gamma)) * piece.unnormalized;
        rhs_normalized += Rational(theta(gamma)) * piece.normalized;
    }

    report.lines.push_back({"non-separating, raw", whole.unnormalized.to_string(),
                            rhs_unnormalized.to_string(),
                            whole.unnormalized == rhs_unnormalized});
    report.lines.push_back({"non-separating, normalized", whole.normalized.to_string(),
                            rhs_normalized.to_string(), whole.normalized == rhs_normalized});
    return report;
}

}  // namespace spinhurwitz
