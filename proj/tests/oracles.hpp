#pragma once

// Test-side oracles, independent of the implementation paths they check.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "dehn/census.hpp"
#include "dehn/diagram.hpp"
#include "dehn/group.hpp"

namespace dehn::test {

inline long long oracle_det(const std::vector<std::vector<long long>>& a) {
    const size_t n = a.size();
    if (n == 1) return a[0][0];
    long long sum = 0;
    for (size_t c = 0; c < n; ++c) {
        std::vector<std::vector<long long>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<long long> row;
            for (size_t j = 0; j < n; ++j) {
                if (j != c) row.push_back(a[i][j]);
            }
            minor.push_back(std::move(row));
        }
        const long long term = a[0][c] * oracle_det(minor);
        sum += (c % 2 == 0) ? term : -term;
    }
    return sum;
}

// Brute-force invariant factors: d_1 ... d_j = gcd of all j x j minors.
inline std::pair<std::vector<long long>, int> minor_gcd_factors(const RelationMatrix& m) {
    std::vector<long long> gcds;
    const int n = std::min(m.rows, m.cols);
    for (int size = 1; size <= n; ++size) {
        long long g = 0;
        std::vector<char> rmask(static_cast<size_t>(m.rows), 0);
        std::fill(rmask.begin(), rmask.begin() + size, 1);
        std::sort(rmask.begin(), rmask.end());
        do {
            std::vector<int> rs;
            for (int i = 0; i < m.rows; ++i) {
                if (rmask[static_cast<size_t>(i)]) rs.push_back(i);
            }
            std::vector<char> cmask(static_cast<size_t>(m.cols), 0);
            std::fill(cmask.begin(), cmask.begin() + size, 1);
            std::sort(cmask.begin(), cmask.end());
            do {
                std::vector<int> cs;
                for (int j = 0; j < m.cols; ++j) {
                    if (cmask[static_cast<size_t>(j)]) cs.push_back(j);
                }
                std::vector<std::vector<long long>> sub;
                for (int i : rs) {
                    std::vector<long long> row;
                    for (int j : cs) row.push_back(m.at(i, j));
                    sub.push_back(std::move(row));
                }
                g = std::gcd(g, oracle_det(sub));
            } while (std::next_permutation(cmask.begin(), cmask.end()));
        } while (std::next_permutation(rmask.begin(), rmask.end()));
        gcds.push_back(g);
        if (g == 0) break;
    }
    std::vector<long long> factors;
    int rank = 0;
    long long prev = 1;
    for (long long g : gcds) {
        if (g == 0) break;
        factors.push_back(g / prev);
        prev = g;
        ++rank;
    }
    return {factors, rank};
}

// Direct sum in canonical (divisibility chain) form, via prime powers.
inline AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
    AbelianGroup out;
    out.free_rank = a.free_rank + b.free_rank;

    std::map<long long, std::vector<int>> powers; // prime -> exponents
    auto absorb = [&](long long d) {
        for (long long p = 2; p * p <= d; ++p) {
            int e = 0;
            while (d % p == 0) {
                d /= p;
                ++e;
            }
            if (e > 0) powers[p].push_back(e);
        }
        if (d > 1) powers[d].push_back(1);
    };
    for (long long d : a.torsion) absorb(d);
    for (long long d : b.torsion) absorb(d);

    size_t chain_len = 0;
    for (auto& [p, es] : powers) {
        std::sort(es.begin(), es.end(), std::greater<>());
        chain_len = std::max(chain_len, es.size());
    }
    std::vector<long long> chain(chain_len, 1);
    for (const auto& [p, es] : powers) {
        for (size_t i = 0; i < es.size(); ++i) {
            long long pe = 1;
            for (int e = 0; e < es[i]; ++e) pe *= p;
            chain[i] *= pe; // position i collects the i-th largest power
        }
    }
    std::sort(chain.begin(), chain.end()); // ascending divisibility chain
    out.torsion = std::move(chain);
    return out;
}

// Generate-everything census at p = 2: all ordered raw triplet pairs, filter
// by the validators, then canonicalize and deduplicate.
inline std::vector<CanonicalPresentation> naive_census_p2(int max_pairs) {
    std::vector<CanonicalPresentation> out;
    for (int k = 1; k <= max_pairs; ++k) {
        const int curves = 2 * k;
        std::vector<std::array<CurveId, 3>> raw;
        for (CurveId a = 0; a < curves; ++a) {
            for (CurveId c = 0; c < curves; ++c) {
                for (CurveId g = 0; g < curves; ++g) raw.push_back({a, c, g});
            }
        }
        std::vector<CanonicalPresentation> found;
        for (const auto& t1 : raw) {
            for (const auto& t2 : raw) {
                HakenPresentation h;
                h.pairing = SisterPairing::standard(k);
                h.triplets = {Triplet{t1, {-1, -1, -1}}, Triplet{t2, {-1, -1, -1}}};
                if (!validate_presentation(h).pass()) continue;
                found.push_back(canonical_form(h));
            }
        }
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        out.insert(out.end(), found.begin(), found.end());
    }
    return out;
}

} // namespace dehn::test
