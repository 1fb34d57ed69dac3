#include "spinhurwitz/partition.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>

#include "spinhurwitz/errors.hpp"

namespace spinhurwitz {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw invalid_input_error("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw invalid_input_error("Partition: parts must be weakly decreasing");
        degree_ += parts_[i];
    }
}

bool Partition::is_odd() const {
    return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 == 1; });
}

bool Partition::is_strict() const {
    for (std::size_t i = 1; i < parts_.size(); ++i) {
        if (parts_[i] >= parts_[i - 1]) return false;
    }
    return true;
}

int Partition::count(int k) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

bool canonical_before(const Partition& a, const Partition& b) {
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(), a.parts().begin(),
                                        a.parts().end());
}

namespace {

void generate(int remaining, int max_part, PartitionClass cls, std::vector<int>& prefix,
              std::vector<Partition>& out) {
    if (remaining == 0) {
        Partition p(prefix);
        switch (cls) {
            case PartitionClass::strict_even:
                if (p.length() % 2 != 0) return;
                break;
            case PartitionClass::strict_odd:
                if (p.length() % 2 != 1) return;
                break;
            default:
                break;
        }
        out.push_back(std::move(p));
        return;
    }
    // descending first part yields reverse-lexicographic order directly
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        if (cls == PartitionClass::odd && part % 2 == 0) continue;
        int next_max = part;
        if (cls != PartitionClass::all && cls != PartitionClass::odd) next_max = part - 1;
        prefix.push_back(part);
        generate(remaining - part, next_max, cls, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int d, PartitionClass cls) {
    if (d < 1) throw invalid_input_error("enumerate_partitions: d must be >= 1");
    std::vector<Partition> out;
    std::vector<int> prefix;
    generate(d, d, cls, prefix, out);
    return out;
}

BigInt z_order(const Partition& gamma) {
    BigInt z(1);
    // prod over part sizes k: k^{m_k} * m_k!
    for (int k = 1; k <= (gamma.length() ? gamma.parts().front() : 0); ++k) {
        int m = gamma.count(k);
        if (m == 0) continue;
        z *= pow(BigInt(k), static_cast<unsigned>(m));
        for (int i = 2; i <= m; ++i) z *= BigInt(i);
    }
    return z;
}

BigInt theta(const Partition& gamma) {
    return (z_order(gamma) << static_cast<unsigned>(gamma.length() + 1));
}

ProfileList::ProfileList(int degree, std::vector<Partition> entries)
    : d(degree), profiles(std::move(entries)) {
    if (d < 1) throw invalid_input_error("ProfileList: degree must be >= 1");
    for (const Partition& p : profiles) {
        if (p.degree() != d)
            throw invalid_input_error("ProfileList: profile " + p.to_string() +
                                      " is not a partition of " + std::to_string(d));
        if (!p.is_odd())
            throw invalid_input_error("ProfileList: profile " + p.to_string() +
                                      " has an even part");
    }
}

int domain_euler_char(int d, int genus, const ProfileList& profiles) {
    if (d < 1) throw invalid_input_error("domain_euler_char: d must be >= 1");
    if (genus < 0) throw invalid_input_error("domain_euler_char: genus must be >= 0");
    if (profiles.d != d) throw invalid_input_error("domain_euler_char: profile degree mismatch");
    int chi = d * (2 - 2 * genus);
    for (const Partition& p : profiles.profiles) chi += p.length() - d;
    return chi;
}

ProfileList parse_profiles(int d, const std::string& text) {
    std::vector<Partition> entries;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    while (i < text.size()) {
        if (text[i] != '(') throw invalid_input_error("profiles: expected '(' in \"" + text + "\"");
        ++i;
        std::vector<int> parts;
        skip_ws();
        while (i < text.size() && text[i] != ')') {
            int v = 0;
            bool any = false;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                v = v * 10 + (text[i] - '0');
                ++i;
                any = true;
            }
            if (!any) throw invalid_input_error("profiles: expected a part number");
            parts.push_back(v);
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                skip_ws();
            }
        }
        if (i == text.size()) throw invalid_input_error("profiles: missing ')'");
        ++i;  // ')'
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        entries.emplace_back(parts);
        skip_ws();
        if (i < text.size()) {
            if (text[i] != ';') throw invalid_input_error("profiles: expected ';' between profiles");
            ++i;
            skip_ws();
        }
    }
    return ProfileList(d, std::move(entries));
}

}  // namespace spinhurwitz
