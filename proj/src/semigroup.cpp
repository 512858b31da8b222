#include "goppa/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace goppa {

namespace {

void require_coprime(int q, int s) {
    if (q < 2 || s < 1) throw std::invalid_argument("semigroup generators must satisfy q >= 2, s >= 1");
    if (std::gcd(q, s) != 1) throw std::invalid_argument("semigroup generators must be coprime");
}

}  // namespace

std::vector<int> semigroup_elements_up_to(int q, int s, int m) {
    require_coprime(q, s);
    std::vector<int> out;
    if (m < 0) return out;
    std::vector<bool> seen(static_cast<size_t>(m) + 1, false);
    for (int i = 0; i * q <= m; ++i) {
        for (int j = 0; i * q + j * s <= m; ++j) seen[static_cast<size_t>(i * q + j * s)] = true;
    }
    for (int v = 0; v <= m; ++v) {
        if (seen[static_cast<size_t>(v)]) out.push_back(v);
    }
    return out;
}

int semigroup_genus(int q, int s) {
    require_coprime(q, s);
    return (q - 1) * (s - 1) / 2;
}

std::vector<int> semigroup_gaps(int q, int s) {
    int g = semigroup_genus(q, s);
    int top = 2 * g - 1;
    std::vector<int> elements = semigroup_elements_up_to(q, s, top);
    std::vector<int> gaps;
    size_t idx = 0;
    for (int v = 0; v <= top; ++v) {
        if (idx < elements.size() && elements[idx] == v) {
            ++idx;
        } else {
            gaps.push_back(v);
        }
    }
    return gaps;
}

int riemann_roch_dim(int q, int s, int m) {
    if (m < 0) return 0;
    int g = semigroup_genus(q, s);
    if (m >= 2 * g - 1) return m + 1 - g;
    return static_cast<int>(semigroup_elements_up_to(q, s, m).size());
}

std::vector<Monomial> monomial_basis(int q, int s, int m) {
    require_coprime(q, s);
    std::vector<std::pair<int, Monomial>> entries;
    if (m >= 0) {
        // j ranges over a full residue system mod q so that every semigroup
        // element has exactly one representation i*q + j*s with i >= 0
        for (int j = 0; j <= q - 1 && j * s <= m; ++j) {
            for (int i = 0; i * q + j * s <= m; ++i) {
                entries.push_back({i * q + j * s, Monomial{i, j}});
            }
        }
    }
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Monomial> out;
    out.reserve(entries.size());
    for (const auto& entry : entries) out.push_back(entry.second);
    return out;
}

}  // namespace goppa
