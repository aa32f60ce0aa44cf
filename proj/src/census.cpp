#include "dehn/census.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "dehn/errors.hpp"

namespace dehn {

namespace {

using Letters = std::array<CurveId, 3>;

Letters rotate(const Letters& l) { return {l[1], l[2], l[0]}; }

Letters reverse_letters(const Letters& l, const SisterPairing& tau) {
    return {tau.sister(l[2]), tau.sister(l[1]), tau.sister(l[0])};
}

Letters canonical_letters(Letters l, const SisterPairing& tau) {
    Letters best = l;
    Letters cur = l;
    for (int r = 0; r < 3; ++r) {
        cur = rotate(cur);
        best = std::min(best, cur);
    }
    cur = reverse_letters(l, tau);
    for (int r = 0; r < 3; ++r) {
        best = std::min(best, cur);
        cur = rotate(cur);
    }
    return best;
}

// Curve relabeling: pair permutation plus per-pair sister swap, acting on the
// standard encoding (pair q, bit b) <-> curve 2q+b.
struct Relabeling {
    std::vector<int> pair_map;
    std::vector<int> flip;

    CurveId apply(CurveId c) const {
        const int q = c / 2;
        const int b = c % 2;
        return 2 * pair_map[static_cast<size_t>(q)] + (b ^ flip[static_cast<size_t>(q)]);
    }
};

std::vector<Letters> apply_relabeling(const std::vector<Letters>& triplets, const Relabeling& rho,
                                      const SisterPairing& tau) {
    std::vector<Letters> out;
    out.reserve(triplets.size());
    for (const Letters& t : triplets) {
        out.push_back(canonical_letters({rho.apply(t[0]), rho.apply(t[1]), rho.apply(t[2])}, tau));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// True when no relabeling produces a lexicographically smaller sorted list.
bool is_minimal(const std::vector<Letters>& sorted_triplets, int pairs, const SisterPairing& tau) {
    std::vector<int> perm(static_cast<size_t>(pairs));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int flips = 0; flips < (1 << pairs); ++flips) {
            Relabeling rho;
            rho.pair_map = perm;
            rho.flip.resize(static_cast<size_t>(pairs));
            for (int q = 0; q < pairs; ++q) {
                rho.flip[static_cast<size_t>(q)] = (flips >> q) & 1;
            }
            if (apply_relabeling(sorted_triplets, rho, tau) < sorted_triplets) {
                return false;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

HakenPresentation assemble(int pairs, const std::vector<Letters>& triplets) {
    HakenPresentation h;
    h.pairing = SisterPairing::standard(pairs);
    h.triplets.reserve(triplets.size());
    for (const Letters& l : triplets) {
        h.triplets.push_back(Triplet{l, {-1, -1, -1}});
    }
    return h;
}

bool pairs_all_used(const std::vector<Letters>& triplets, int pairs) {
    std::vector<char> used(static_cast<size_t>(pairs), 0);
    for (const Letters& t : triplets) {
        for (CurveId c : t) used[static_cast<size_t>(c / 2)] = 1;
    }
    return std::all_of(used.begin(), used.end(), [](char u) { return u != 0; });
}

bool parity_ok(const HakenPresentation& h) {
    for (const auto& [pair, count] : crossing_counts(h)) {
        if (pair[0] != pair[1] && count % 2 != 0) return false;
    }
    return true;
}

struct SearchContext {
    int pairs = 0;
    int depth_target = 0;
    bool check_parity = true;
    SisterPairing tau;
    std::vector<Letters> alphabet;
    long long limit = 0;

    // Crossing pairs are indexed into a dense table; last_producer[x] is the
    // largest alphabet index whose triplet induces crossing pair x, and
    // last_toucher[q] the largest index whose letters meet sister pair q.
    std::vector<std::array<CurvePair, 3>> crossings_of;
    std::map<CurvePair, int> pair_index;
    std::vector<int> last_producer;
    std::vector<int> last_toucher;

    void prepare() {
        crossings_of.resize(alphabet.size());
        last_toucher.assign(static_cast<size_t>(pairs), -1);
        for (size_t i = 0; i < alphabet.size(); ++i) {
            const Triplet t{alphabet[i], {-1, -1, -1}};
            for (int r = 0; r < 3; ++r) {
                const CurvePair p = role_pair(t, tau, r);
                crossings_of[i][static_cast<size_t>(r)] = p;
                pair_index.emplace(p, static_cast<int>(pair_index.size()));
            }
            for (CurveId c : alphabet[i]) {
                last_toucher[static_cast<size_t>(c / 2)] =
                    std::max(last_toucher[static_cast<size_t>(c / 2)], static_cast<int>(i));
            }
        }
        last_producer.assign(pair_index.size(), -1);
        for (size_t i = 0; i < alphabet.size(); ++i) {
            for (const CurvePair& p : crossings_of[i]) {
                const int x = pair_index.at(p);
                last_producer[static_cast<size_t>(x)] =
                    std::max(last_producer[static_cast<size_t>(x)], static_cast<int>(i));
            }
        }
    }
};

struct SearchState {
    std::vector<int> crossing_count; // by pair_index
    std::vector<int> pair_uses;      // letters per sister pair
    std::vector<Letters> prefix;

    explicit SearchState(const SearchContext& ctx)
        : crossing_count(ctx.pair_index.size(), 0),
          pair_uses(static_cast<size_t>(ctx.pairs), 0) {}

    void push(const SearchContext& ctx, size_t i) {
        for (const CurvePair& p : ctx.crossings_of[i]) {
            ++crossing_count[static_cast<size_t>(ctx.pair_index.at(p))];
        }
        for (CurveId c : ctx.alphabet[i]) ++pair_uses[static_cast<size_t>(c / 2)];
        prefix.push_back(ctx.alphabet[i]);
    }

    void pop(const SearchContext& ctx, size_t i) {
        for (const CurvePair& p : ctx.crossings_of[i]) {
            --crossing_count[static_cast<size_t>(ctx.pair_index.at(p))];
        }
        for (CurveId c : ctx.alphabet[i]) --pair_uses[static_cast<size_t>(c / 2)];
        prefix.pop_back();
    }
};

void search(const SearchContext& ctx, SearchState& state, size_t min_index,
            std::vector<CanonicalPresentation>& out) {
    const int remaining = ctx.depth_target - static_cast<int>(state.prefix.size());
    if (remaining == 0) {
        if (!pairs_all_used(state.prefix, ctx.pairs)) return;
        HakenPresentation h = assemble(ctx.pairs, state.prefix);
        if (ctx.check_parity && !parity_ok(h)) return;
        if (!curve_crossing_graph(h).connected()) return;
        if (!is_minimal(state.prefix, ctx.pairs, ctx.tau)) return;
        if (static_cast<long long>(out.size()) >= ctx.limit) {
            throw resource_limit_error("census limit exceeded");
        }
        out.push_back(CanonicalPresentation{std::move(h)});
        return;
    }

    // Parity debt: every odd distinct-curve pair needs another producer at or
    // beyond min_index, and a triplet fixes at most three counts.
    if (ctx.check_parity) {
        int odd = 0;
        for (const auto& [pair, x] : ctx.pair_index) {
            if (pair[0] == pair[1]) continue;
            if (state.crossing_count[static_cast<size_t>(x)] % 2 == 0) continue;
            ++odd;
            if (ctx.last_producer[static_cast<size_t>(x)] < static_cast<int>(min_index)) return;
        }
        if (odd > 3 * remaining) return;
    }
    int unused = 0;
    for (int q = 0; q < ctx.pairs; ++q) {
        if (state.pair_uses[static_cast<size_t>(q)] > 0) continue;
        ++unused;
        if (ctx.last_toucher[static_cast<size_t>(q)] < static_cast<int>(min_index)) return;
    }
    if (unused > 3 * remaining) return;

    for (size_t i = min_index; i < ctx.alphabet.size(); ++i) {
        state.push(ctx, i);
        search(ctx, state, i, out);
        state.pop(ctx, i);
    }
}

std::vector<Letters> triplet_alphabet(int pairs, const SisterPairing& tau) {
    std::vector<Letters> out;
    const int curves = 2 * pairs;
    for (CurveId a = 0; a < curves; ++a) {
        for (CurveId c = 0; c < curves; ++c) {
            for (CurveId g = 0; g < curves; ++g) {
                const Letters l{a, c, g};
                if (canonical_letters(l, tau) == l) out.push_back(l);
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<CanonicalPresentation> enumerate_for_pairs(const CensusQuery& q, int pairs) {
    SearchContext ctx;
    ctx.pairs = pairs;
    ctx.depth_target = q.triple_points;
    ctx.check_parity = !q.ablate_parity;
    ctx.tau = SisterPairing::standard(pairs);
    ctx.alphabet = triplet_alphabet(pairs, ctx.tau);
    ctx.limit = q.limit;
    ctx.prepare();

    const int threads = std::max(1, q.threads);
    if (threads == 1 || ctx.alphabet.size() < 2) {
        std::vector<CanonicalPresentation> out;
        SearchState state(ctx);
        search(ctx, state, 0, out);
        return out;
    }

    // Partition by the first triplet; completions of distinct first triplets
    // are independent and already lexicographically ordered, so merging is a
    // concatenation in partition order.
    std::atomic<size_t> cursor{0};
    std::vector<std::vector<CanonicalPresentation>> slots(ctx.alphabet.size());
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&]() {
        try {
            while (true) {
                const size_t i = cursor.fetch_add(1);
                if (i >= ctx.alphabet.size()) return;
                std::vector<CanonicalPresentation> out;
                SearchState state(ctx);
                state.push(ctx, i);
                search(ctx, state, i, out);
                slots[i] = std::move(out);
            }
        } catch (...) {
            const std::lock_guard<std::mutex> lock(failure_mutex);
            if (!failure) failure = std::current_exception();
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    std::vector<CanonicalPresentation> out;
    for (auto& part : slots) {
        for (auto& cp : part) {
            if (static_cast<long long>(out.size()) >= q.limit) {
                throw resource_limit_error("census limit exceeded");
            }
            out.push_back(std::move(cp));
        }
    }
    return out;
}

int default_max_pairs(int triple_points) { return (2 + 3 * triple_points) / 4; }

void check_query(const CensusQuery& q) {
    if (q.triple_points < 0 || q.triple_points % 2 != 0) {
        throw precondition_error("census: triple point count must be even and non-negative");
    }
    if (q.max_pairs > default_max_pairs(q.triple_points) && !q.allow_over_bound) {
        throw precondition_error("census: max_pairs above the (2+3p)/4 bound requires override");
    }
    if (q.exact_pairs && *q.exact_pairs < 1) {
        throw precondition_error("census: exact_pairs must be positive");
    }
}

} // namespace

std::strong_ordering CanonicalPresentation::operator<=>(const CanonicalPresentation& o) const {
    if (auto c = pres.pairing.curve_count() <=> o.pres.pairing.curve_count(); c != 0) return c;
    if (auto c = pres.triplets.size() <=> o.pres.triplets.size(); c != 0) return c;
    for (size_t i = 0; i < pres.triplets.size(); ++i) {
        if (auto c = pres.triplets[i].letters <=> o.pres.triplets[i].letters; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

bool CanonicalPresentation::operator==(const CanonicalPresentation& o) const {
    return (*this <=> o) == std::strong_ordering::equal;
}

Triplet canonical_triplet(const Triplet& t, const SisterPairing& pairing) {
    return Triplet{canonical_letters(t.letters, pairing), {-1, -1, -1}};
}

CanonicalPresentation canonical_form(const HakenPresentation& h) {
    const ValidationReport report = validate_presentation(h);
    for (const Finding& f : report.findings) {
        if (f.constraint == "tau-involution" || f.constraint == "tau-fixed-point" ||
            f.constraint == "triplet-letters") {
            throw precondition_error("canonical_form: malformed pairing");
        }
    }
    const int pairs = h.pairing.pair_count();
    if (pairs > 10) {
        throw precondition_error("canonical_form: pair count too large for exact search");
    }

    // Normalize to the standard encoding: pairs ordered by smaller curve id,
    // smaller curve primary.
    std::vector<CurveId> to_standard(static_cast<size_t>(h.pairing.curve_count()), -1);
    int next_pair = 0;
    for (CurveId c = 0; c < h.pairing.curve_count(); ++c) {
        if (h.pairing.is_primary(c)) {
            to_standard[static_cast<size_t>(c)] = 2 * next_pair;
            to_standard[static_cast<size_t>(h.pairing.sister(c))] = 2 * next_pair + 1;
            ++next_pair;
        }
    }
    const SisterPairing std_tau = SisterPairing::standard(pairs);
    std::vector<Letters> triplets;
    triplets.reserve(h.triplets.size());
    for (const Triplet& t : h.triplets) {
        Letters l;
        for (int i = 0; i < 3; ++i) {
            l[static_cast<size_t>(i)] = to_standard[static_cast<size_t>(t.letters[static_cast<size_t>(i)])];
        }
        triplets.push_back(canonical_letters(l, std_tau));
    }
    std::sort(triplets.begin(), triplets.end());

    // Minimum over the full relabeling group.
    std::vector<Letters> best = triplets;
    std::vector<int> perm(static_cast<size_t>(pairs));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        for (int flips = 0; flips < (1 << pairs); ++flips) {
            Relabeling rho;
            rho.pair_map = perm;
            rho.flip.resize(static_cast<size_t>(pairs));
            for (int q = 0; q < pairs; ++q) {
                rho.flip[static_cast<size_t>(q)] = (flips >> q) & 1;
            }
            std::vector<Letters> candidate = apply_relabeling(triplets, rho, std_tau);
            if (candidate < best) best = std::move(candidate);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    return CanonicalPresentation{assemble(pairs, best)};
}

std::vector<CanonicalPresentation> enumerate_presentations(const CensusQuery& q) {
    check_query(q);
    if (q.triple_points == 0) return {};

    const int bound = default_max_pairs(q.triple_points);
    const int max_pairs = q.max_pairs < 0 ? bound : q.max_pairs;

    std::vector<CanonicalPresentation> out;
    for (int k = 1; k <= max_pairs; ++k) {
        if (q.exact_pairs && *q.exact_pairs != k) continue;
        std::vector<CanonicalPresentation> part = enumerate_for_pairs(q, k);
        for (auto& cp : part) {
            if (static_cast<long long>(out.size()) >= q.limit) {
                throw resource_limit_error("census limit exceeded");
            }
            out.push_back(std::move(cp));
        }
    }
    return out;
}

CensusResult census_h1(const CensusQuery& q) {
    CensusResult result;
    result.triple_points = q.triple_points;
    result.max_pairs = q.max_pairs < 0 ? default_max_pairs(q.triple_points) : q.max_pairs;
    result.presentations = enumerate_presentations(q);

    std::map<int, long long> counts;
    std::map<std::string, long long> histogram;
    for (const CanonicalPresentation& cp : result.presentations) {
        const int k = cp.pres.pairing.pair_count();
        ++counts[k];
        const AbelianGroup a = h1(cp.pres);
        result.homology.push_back(a);
        const std::string name = recognize(a);
        ++histogram[name];

        if (a.free_rank == 0 && a.torsion == std::vector<long long>{3, 3}) {
            result.no_z3_z3 = false;
        }
        const bool cyclic_small =
            (a.free_rank == 0 && a.torsion.empty()) ||
            (a.free_rank == 1 && a.torsion.empty()) ||
            (a.free_rank == 0 && a.torsion.size() == 1 && a.torsion[0] <= 6);
        if (k <= 2 && !cyclic_small) result.small_k_cyclic = false;
        const bool in_candidates =
            cyclic_small || (a.free_rank == 2 && a.torsion.empty()) ||
            (a.free_rank == 1 && a.torsion == std::vector<long long>{2});
        if (!in_candidates) result.candidate_list_ok = false;
        if (!bound_check(cp.pres)) result.bound_ok = false;
    }
    for (const auto& [k, n] : counts) result.counts.push_back({k, n});
    for (const auto& [name, n] : histogram) result.histogram.push_back({name, n});
    return result;
}

bool verify_lemma_no_type_I(int triple_points, int pairs, bool enforce_parity) {
    CensusQuery q;
    q.triple_points = triple_points;
    q.exact_pairs = pairs;
    q.max_pairs = pairs;
    q.allow_over_bound = true;
    q.ablate_parity = !enforce_parity;
    for (const CanonicalPresentation& cp : enumerate_presentations(q)) {
        for (const Triplet& t : cp.pres.triplets) {
            const TripletType type = classify_triplet(t, cp.pres.pairing);
            if (type == TripletType::I1 || type == TripletType::I2) return false;
        }
    }
    return true;
}

} // namespace dehn
