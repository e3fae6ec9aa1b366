#include "cendiv/permutation.hpp"
#include "cendiv/errors.hpp"
#include "cendiv/factor.hpp"

#include <algorithm>
#include <cctype>

namespace cendiv {

std::int64_t CycleType::n() const {
    std::int64_t total = 0;
    for (auto part : parts) total += part;
    return total;
}

CycleType CycleType::of(std::vector<std::int64_t> parts) {
    if (parts.empty())
        throw precondition_error("cycle type must be nonempty");
    for (auto part : parts)
        if (part < 1)
            throw precondition_error("cycle type parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<std::int64_t>());
    return CycleType{std::move(parts)};
}

CycleType CycleType::parse(const std::string& text) {
    std::vector<std::int64_t> parts;
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto read_int = [&]() -> std::int64_t {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (start == pos)
            throw parse_error("cycle type: expected an integer in '" + text + "'", 1, pos + 1);
        return std::stoll(text.substr(start, pos - start));
    };
    for (;;) {
        std::int64_t part = read_int();
        std::int64_t count = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            count = read_int();
            if (count < 1)
                throw parse_error("cycle type: exponent must be positive in '" + text + "'", 1, pos);
        }
        for (std::int64_t i = 0; i < count; ++i) parts.push_back(part);
        skip_ws();
        if (pos == text.size()) break;
        if (text[pos] != ',')
            throw parse_error("cycle type: expected ',' in '" + text + "'", 1, pos + 1);
        ++pos;
    }
    return of(std::move(parts));
}

std::string CycleType::to_string() const {
    std::string out;
    std::size_t i = 0;
    while (i < parts.size()) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i]) ++j;
        if (!out.empty()) out += ",";
        out += std::to_string(parts[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

std::vector<DivisorEntry> cycle_type_divisors(const CycleType& lambda, const Field& field) {
    const std::int64_t p = field.characteristic();
    std::vector<DivisorEntry> out;
    for (std::int64_t part : lambda.parts) {
        int nu = nu_p(part, p);
        std::int64_t reduced = part;
        std::int64_t power = 1;
        for (int i = 0; i < nu; ++i) { reduced /= p; power *= p; }
        if (power > 1 << 20)
            throw capacity_error("cycle_type_divisors: p-power exponent too large");

        if (field.is_rationals()) {
            // x^reduced - 1 = prod of the cyclotomics of the divisors
            for (std::int64_t d = 1; d <= reduced; ++d)
                if (reduced % d == 0)
                    out.push_back(DivisorEntry{cyclotomic(static_cast<unsigned>(d)),
                                               static_cast<int>(power), 1});
        } else {
            std::vector<FieldElem> cs(reduced + 1, field.zero());
            cs[0] = field.from_integer(-1);
            cs[reduced] = field.one();
            Factorization fac = factor(Poly::from_coeffs(field, std::move(cs)));
            for (const auto& [base, exp] : fac.factors) {
                if (exp != 1)
                    throw internal_error("x^m - 1 with p coprime to m must be squarefree");
                out.push_back(DivisorEntry{base, static_cast<int>(power), 1});
            }
        }
    }
    return out;
}

DivisorProfile cycle_type_profile(const CycleType& lambda, const Field& field) {
    DivisorProfile prof = DivisorProfile::from_divisors(field, cycle_type_divisors(lambda, field));
    prof.permutation_origin = true;
    return prof;
}

std::pair<CycleType, CycleType> p_split(const CycleType& lambda, std::int64_t p) {
    if (p != 0 && !is_prime_i64(p))
        throw precondition_error("p_split: p must be zero or prime");
    std::vector<std::int64_t> regular, singular;
    for (std::int64_t part : lambda.parts) {
        if (p != 0 && part % p == 0)
            singular.push_back(part);
        else
            regular.push_back(part);
    }
    const std::int64_t n = lambda.n();
    auto pad = [n](std::vector<std::int64_t> parts) {
        std::int64_t have = 0;
        for (auto part : parts) have += part;
        for (std::int64_t i = have; i < n; ++i) parts.push_back(1);
        return CycleType::of(std::move(parts));
    };
    return {pad(std::move(regular)), pad(std::move(singular))};
}

bool rep_finite_perm(const CycleType& lambda, std::int64_t p) {
    if (p != 0 && !is_prime_i64(p))
        throw precondition_error("rep_finite_perm: p must be zero or prime");
    if (p == 0) return true;
    int seen = 0;
    for (std::int64_t part : lambda.parts) {
        int nu = nu_p(part, p);
        if (nu == 0) continue;
        if (seen == 0) seen = nu;
        else if (seen != nu) return false;
    }
    return true;
}

bool fixed_point_extension_equivalent(const CycleType& lambda, std::int64_t p) {
    if (p != 0 && !is_prime_i64(p))
        throw precondition_error("fixed_point_extension_equivalent: p must be zero or prime");
    if (p == 0) return true;
    for (std::int64_t part : lambda.parts)
        if (part % p != 0) return true;
    return false;
}

MatrixExact permutation_matrix(const CycleType& lambda, const Field& field) {
    std::vector<MatrixExact> blocks;
    for (std::int64_t part : lambda.parts) {
        if (part > 1024)
            throw capacity_error("permutation_matrix: part too large for the dense path");
        MatrixExact cyc(field, static_cast<int>(part));
        for (int i = 0; i < part; ++i) cyc.set(i, static_cast<int>((i + 1) % part), field.one());
        blocks.push_back(std::move(cyc));
    }
    return MatrixExact::block_diag(blocks);
}

} // namespace cendiv
