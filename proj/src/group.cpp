#include "dehn/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "dehn/errors.hpp"

namespace dehn {

namespace {

long long checked_add(long long a, long long b) {
    long long r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw error("integer overflow in exact arithmetic");
    return r;
}

long long checked_mul(long long a, long long b) {
    long long r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw error("integer overflow in exact arithmetic");
    return r;
}

long long checked_neg(long long a) {
    if (a == std::numeric_limits<long long>::min()) throw error("integer overflow in exact arithmetic");
    return -a;
}

} // namespace

std::array<int, 3> relator_of_triplet(const Triplet& t, const SisterPairing& pairing) {
    std::array<int, 3> word{};
    for (int i = 0; i < 3; ++i) {
        const CurveId c = t.letters[static_cast<size_t>(i)];
        const int gen = pairing.pair_of(c) + 1;
        word[static_cast<size_t>(i)] = pairing.is_primary(c) ? gen : -gen;
    }
    return word;
}

GroupPresentation presentation_from(const HakenPresentation& h) {
    if (!validate_presentation(h).pass()) {
        throw precondition_error("presentation_from: input fails validation");
    }
    GroupPresentation g;
    g.generators = h.pairing.pair_count();
    g.relators.reserve(h.triplets.size());
    for (const Triplet& t : h.triplets) {
        g.relators.push_back(relator_of_triplet(t, h.pairing));
    }
    return g;
}

RelationMatrix abelianize(const GroupPresentation& g) {
    RelationMatrix m;
    m.rows = static_cast<int>(g.relators.size());
    m.cols = g.generators;
    m.m.assign(static_cast<size_t>(m.rows),
               std::vector<long long>(static_cast<size_t>(m.cols), 0));
    for (int r = 0; r < m.rows; ++r) {
        for (int letter : g.relators[static_cast<size_t>(r)]) {
            const int gen = std::abs(letter) - 1;
            m.m[static_cast<size_t>(r)][static_cast<size_t>(gen)] += letter > 0 ? 1 : -1;
        }
    }
    return m;
}

SnfResult smith_normal_form(RelationMatrix mat) {
    auto& a = mat.m;
    const int rows = mat.rows;
    const int cols = mat.cols;
    const int steps = std::min(rows, cols);

    auto add_row = [&](int dst, int src, long long factor) {
        for (int j = 0; j < cols; ++j) {
            a[static_cast<size_t>(dst)][static_cast<size_t>(j)] =
                checked_add(a[static_cast<size_t>(dst)][static_cast<size_t>(j)],
                            checked_mul(factor, a[static_cast<size_t>(src)][static_cast<size_t>(j)]));
        }
    };
    auto add_col = [&](int dst, int src, long long factor) {
        for (int i = 0; i < rows; ++i) {
            a[static_cast<size_t>(i)][static_cast<size_t>(dst)] =
                checked_add(a[static_cast<size_t>(i)][static_cast<size_t>(dst)],
                            checked_mul(factor, a[static_cast<size_t>(i)][static_cast<size_t>(src)]));
        }
    };

    int t = 0;
    while (t < steps) {
        int pi = -1, pj = -1;
        for (int i = t; i < rows; ++i) {
            for (int j = t; j < cols; ++j) {
                const long long v = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (v != 0 &&
                    (pi < 0 || std::llabs(v) < std::llabs(a[static_cast<size_t>(pi)][static_cast<size_t>(pj)]))) {
                    pi = i;
                    pj = j;
                }
            }
        }
        if (pi < 0) break;
        std::swap(a[static_cast<size_t>(t)], a[static_cast<size_t>(pi)]);
        for (int i = 0; i < rows; ++i) {
            std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(t)],
                      a[static_cast<size_t>(i)][static_cast<size_t>(pj)]);
        }

        bool clean = false;
        while (!clean) {
            clean = true;
            const long long p = a[static_cast<size_t>(t)][static_cast<size_t>(t)];
            for (int i = t + 1; i < rows && clean; ++i) {
                const long long v = a[static_cast<size_t>(i)][static_cast<size_t>(t)];
                if (v == 0) continue;
                add_row(i, t, checked_neg(v / p));
                if (a[static_cast<size_t>(i)][static_cast<size_t>(t)] != 0) {
                    // Remainder smaller than the pivot; promote it.
                    std::swap(a[static_cast<size_t>(t)], a[static_cast<size_t>(i)]);
                    clean = false;
                }
            }
            if (!clean) continue;
            for (int j = t + 1; j < cols && clean; ++j) {
                const long long v = a[static_cast<size_t>(t)][static_cast<size_t>(j)];
                if (v == 0) continue;
                add_col(j, t, checked_neg(v / p));
                if (a[static_cast<size_t>(t)][static_cast<size_t>(j)] != 0) {
                    for (int i = 0; i < rows; ++i) {
                        std::swap(a[static_cast<size_t>(i)][static_cast<size_t>(t)],
                                  a[static_cast<size_t>(i)][static_cast<size_t>(j)]);
                    }
                    clean = false;
                }
            }
            if (!clean) continue;
            // The pivot must divide every entry of the trailing block.
            const long long q = a[static_cast<size_t>(t)][static_cast<size_t>(t)];
            for (int i = t + 1; i < rows && clean; ++i) {
                for (int j = t + 1; j < cols && clean; ++j) {
                    if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] % q != 0) {
                        add_row(t, i, 1);
                        clean = false;
                    }
                }
            }
        }
        ++t;
    }

    SnfResult result;
    for (int i = 0; i < t; ++i) {
        long long v = a[static_cast<size_t>(i)][static_cast<size_t>(i)];
        if (v < 0) v = checked_neg(v);
        result.factors.push_back(v);
    }
    result.rank = static_cast<int>(result.factors.size());
    return result;
}

AbelianGroup h1(const HakenPresentation& h) {
    const GroupPresentation g = presentation_from(h);
    const SnfResult snf = smith_normal_form(abelianize(g));
    AbelianGroup a;
    a.free_rank = g.generators - snf.rank;
    for (long long d : snf.factors) {
        if (d > 1) a.torsion.push_back(d);
    }
    return a;
}

std::string recognize(const AbelianGroup& a) {
    std::vector<std::string> parts;
    if (a.free_rank == 1) {
        parts.push_back("Z");
    } else if (a.free_rank > 1) {
        parts.push_back("Z^" + std::to_string(a.free_rank));
    }
    for (long long d : a.torsion) {
        parts.push_back("Z_" + std::to_string(d));
    }
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) {
        out += "⊕";
        out += parts[i];
    }
    return out;
}

namespace {

// Coset table on columns g0, g0^-1, g1, g1^-1, ... with union-find
// coincidence handling; HLT strategy with gap filling.
class CosetTable {
public:
    CosetTable(int generators, int max_cosets) : ngens_(generators), max_(max_cosets) {
        new_coset();
    }

    static int col(int letter) {
        const int g = std::abs(letter) - 1;
        return 2 * g + (letter > 0 ? 0 : 1);
    }
    static int inv_col(int c) { return c ^ 1; }

    int entry(int coset, int c) const {
        return table_[static_cast<size_t>(coset)][static_cast<size_t>(c)];
    }

    int find(int a) const {
        while (parent_[static_cast<size_t>(a)] != a) a = parent_[static_cast<size_t>(a)];
        return a;
    }

    bool live(int a) const { return parent_[static_cast<size_t>(a)] == a; }
    int size() const { return static_cast<int>(table_.size()); }
    int defined_total() const { return defined_; }

    bool at_cap() const { return defined_ >= max_; }

    int live_count() const {
        int n = 0;
        for (int a = 0; a < size(); ++a) {
            if (live(a)) ++n;
        }
        return n;
    }

    bool closed() const {
        for (int a = 0; a < size(); ++a) {
            if (!live(a)) continue;
            for (int c = 0; c < 2 * ngens_; ++c) {
                if (entry(a, c) < 0) return false;
            }
        }
        return true;
    }

    // Traces the relator w at coset a, defining cosets across gaps. Returns
    // false only when the definition cap is hit.
    bool scan_and_fill(int a, const std::vector<int>& w) {
        int front = find(a);
        int back = front;
        size_t i = 0;
        size_t j = w.size();
        while (true) {
            while (i < j) {
                const int nx = entry(front, col(w[i]));
                if (nx < 0) break;
                front = find(nx);
                ++i;
            }
            if (i == j) {
                if (front != back) coincide(front, back);
                return true;
            }
            while (j > i) {
                const int pv = entry(back, inv_col(col(w[j - 1])));
                if (pv < 0) break;
                back = find(pv);
                --j;
            }
            if (j == i) {
                if (front != back) coincide(front, back);
                return true;
            }
            if (j == i + 1) {
                set(front, col(w[i]), back);
                process_coincidences();
                return true;
            }
            if (at_cap()) return false;
            const int fresh = new_coset();
            set(front, col(w[i]), fresh);
            process_coincidences();
            front = find(front);
            const int nx = entry(front, col(w[i]));
            if (nx < 0) continue;
            front = find(nx);
            ++i;
            back = find(back);
        }
    }

    bool define_hole(int a, int c) {
        if (at_cap()) return false;
        const int fresh = new_coset();
        set(find(a), c, fresh);
        process_coincidences();
        return true;
    }

private:
    int new_coset() {
        table_.emplace_back(static_cast<size_t>(2 * ngens_), -1);
        parent_.push_back(static_cast<int>(parent_.size()));
        ++defined_;
        return static_cast<int>(table_.size()) - 1;
    }

    void set(int a, int c, int b) {
        a = find(a);
        b = find(b);
        const int old = entry(a, c);
        if (old >= 0 && find(old) != b) queue_.emplace_back(find(old), b);
        table_[static_cast<size_t>(a)][static_cast<size_t>(c)] = b;
        const int back = entry(b, inv_col(c));
        if (back >= 0 && find(back) != a) queue_.emplace_back(find(back), a);
        table_[static_cast<size_t>(b)][static_cast<size_t>(inv_col(c))] = a;
    }

    void coincide(int a, int b) {
        queue_.emplace_back(a, b);
        process_coincidences();
    }

    void process_coincidences() {
        while (!queue_.empty()) {
            auto [x, y] = queue_.back();
            queue_.pop_back();
            x = find(x);
            y = find(y);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            parent_[static_cast<size_t>(y)] = x;
            for (int c = 0; c < 2 * ngens_; ++c) {
                const int img = table_[static_cast<size_t>(y)][static_cast<size_t>(c)];
                if (img < 0) continue;
                const int target = find(img);
                const int cur = table_[static_cast<size_t>(x)][static_cast<size_t>(c)];
                if (cur >= 0) {
                    if (find(cur) != target) queue_.emplace_back(find(cur), target);
                } else {
                    table_[static_cast<size_t>(x)][static_cast<size_t>(c)] = target;
                    const int back = table_[static_cast<size_t>(target)][static_cast<size_t>(inv_col(c))];
                    if (back < 0) {
                        table_[static_cast<size_t>(target)][static_cast<size_t>(inv_col(c))] = x;
                    } else if (find(back) != x) {
                        queue_.emplace_back(find(back), x);
                    }
                }
            }
        }
    }

    int ngens_;
    int max_;
    int defined_ = 0;
    std::vector<std::vector<int>> table_;
    std::vector<int> parent_;
    std::vector<std::pair<int, int>> queue_;
};

} // namespace

CosetResult coset_enumeration(const GroupPresentation& g, int max_cosets) {
    CosetResult result;
    if (g.generators == 0) {
        result.closed = true;
        result.order = 1;
        result.cosets_used = 1;
        return result;
    }

    std::vector<std::vector<int>> words;
    words.reserve(g.relators.size());
    for (const auto& rel : g.relators) {
        words.emplace_back(rel.begin(), rel.end());
    }

    CosetTable table(g.generators, max_cosets);
    while (!table.closed()) {
        bool advanced = false;
        for (int a = 0; a < table.size(); ++a) {
            if (!table.live(a)) continue;
            for (const auto& w : words) {
                if (!table.live(a)) break;
                if (!table.scan_and_fill(a, w)) return result;
            }
            if (!table.live(a)) continue;
            for (int c = 0; c < 2 * g.generators; ++c) {
                if (!table.live(a)) break;
                if (table.entry(table.find(a), c) < 0) {
                    if (!table.define_hole(a, c)) return result;
                    advanced = true;
                }
            }
        }
        // A sweep completes every row it visits, so a sweep without
        // definitions means the table just closed.
        if (!advanced) break;
    }
    if (!table.closed()) return result;

    result.closed = true;
    result.order = table.live_count();
    result.cosets_used = table.defined_total();
    return result;
}

} // namespace dehn
