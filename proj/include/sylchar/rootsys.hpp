#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sylchar {

// Subset of positive roots as a fixed-width bit mask (root indices 0..N-1,
// N <= 120 for rank <= 8).
struct RootSet {
    std::uint64_t lo = 0, hi = 0;

    static RootSet empty() { return {}; }
    static RootSet full(int n) {
        RootSet s;
        for (int i = 0; i < n; ++i) s.add(i);
        return s;
    }
    void add(int i) { (i < 64 ? lo : hi) |= 1ULL << (i & 63); }
    void remove(int i) { (i < 64 ? lo : hi) &= ~(1ULL << (i & 63)); }
    bool contains(int i) const { return ((i < 64 ? lo : hi) >> (i & 63)) & 1; }
    bool empty_set() const { return lo == 0 && hi == 0; }
    int count() const { return __builtin_popcountll(lo) + __builtin_popcountll(hi); }

    friend RootSet operator|(RootSet a, RootSet b) { return {a.lo | b.lo, a.hi | b.hi}; }
    friend RootSet operator&(RootSet a, RootSet b) { return {a.lo & b.lo, a.hi & b.hi}; }
    // set difference
    friend RootSet operator-(RootSet a, RootSet b) { return {a.lo & ~b.lo, a.hi & ~b.hi}; }
    friend bool operator==(RootSet a, RootSet b) { return a.lo == b.lo && a.hi == b.hi; }
    friend bool operator!=(RootSet a, RootSet b) { return !(a == b); }
    bool subset_of(RootSet o) const { return (lo & ~o.lo) == 0 && (hi & ~o.hi) == 0; }
    friend bool operator<(RootSet a, RootSet b) {
        return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo;
    }

    template <class F>
    void for_each(F&& f) const {
        std::uint64_t w = lo;
        while (w) { int i = __builtin_ctzll(w); w &= w - 1; f(i); }
        w = hi;
        while (w) { int i = __builtin_ctzll(w); w &= w - 1; f(i + 64); }
    }
    std::vector<int> elements() const {
        std::vector<int> v;
        for_each([&](int i) { v.push_back(i); });
        return v;
    }
};

enum class Series : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

inline Series series_from_char(char c) {
    switch (c) {
        case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
            return (Series)c;
    }
    throw std::invalid_argument(std::string("unknown series '") + c + "'");
}

// Positive roots of a simple root system, enumerated compatibly with the
// standard partial order: by height, ties broken by descending
// lexicographic comparison of the coefficient vectors (Bourbaki simple-root
// numbering).  An explicit enumeration override may replace the default
// order with any other linear extension.
class RootSystem {
public:
    RootSystem(Series series, int rank,
               const std::vector<int>& enumeration_override = {})
        : series_(series), rank_(rank) {
        validate_type();
        auto cartan = cartan_matrix(series, rank);
        generate_roots(cartan);
        sort_default();
        if (!enumeration_override.empty()) apply_override(enumeration_override);
        build_tables();
    }

    Series series() const { return series_; }
    int rank() const { return rank_; }
    int size() const { return (int)roots_.size(); }  // N = |Phi+|
    const std::vector<std::vector<int>>& roots() const { return roots_; }
    const std::vector<int>& root(int i) const { return roots_[i]; }
    int height(int i) const { return heights_[i]; }
    int highest_root() const { return size() - 1; }

    // index of alpha_i + alpha_j if it is a positive root
    std::optional<int> root_sum(int i, int j) const {
        int k = sum_[i][j];
        return k < 0 ? std::nullopt : std::optional<int>(k);
    }
    // alpha_i <= alpha_j in the standard order
    bool leq(int i, int j) const { return leq_[i].contains(j); }

    // all sums i*a + j*b (i,j >= 1) that are positive roots, as (i, j, index)
    struct SumTerm { int i, j, target; };
    std::vector<SumTerm> all_sums(int a, int b) const {
        std::vector<SumTerm> out;
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j) {
                std::vector<int> v(rank_);
                bool over = false;
                for (int k = 0; k < rank_; ++k) {
                    v[k] = i * roots_[a][k] + j * roots_[b][k];
                    if (v[k] > 6) over = true;
                }
                if (over) continue;
                auto it = index_.find(key_of(v));
                if (it != index_.end()) out.push_back({i, j, it->second});
            }
        std::sort(out.begin(), out.end(), [&](const SumTerm& x, const SumTerm& y) {
            return heights_[x.target] < heights_[y.target];
        });
        return out;
    }

    // ---- poset / quattern combinatorics -------------------------------

    // all antichains (pairwise incomparable subsets), in lexicographic
    // order on index sets; includes the empty set
    std::vector<RootSet> antichains() const {
        std::vector<RootSet> out;
        std::vector<int> cur;
        antichain_rec(0, cur, out);
        return out;
    }
    std::uint64_t antichain_count() const {
        std::uint64_t n = 0;
        count_rec(0, RootSet{}, n);
        return n;
    }

    // K_Sigma = { beta | beta <= gamma for no gamma in Sigma }
    RootSet k_sigma(RootSet sigma) const {
        RootSet k;
        for (int b = 0; b < size(); ++b) {
            bool below = false;
            sigma.for_each([&](int g) { if (leq(b, g)) below = true; });
            if (!below) k.add(b);
        }
        return k;
    }
    // maximal elements of Phi+ \ K (recovers Sigma from K_Sigma)
    RootSet sigma_of_normal(RootSet k) const {
        RootSet comp = RootSet::full(size()) - k;
        RootSet sig;
        comp.for_each([&](int b) {
            bool maximal = true;
            comp.for_each([&](int c) { if (c != b && leq(b, c)) maximal = false; });
            if (maximal) sig.add(b);
        });
        return sig;
    }
    bool is_antichain(RootSet s) const {
        bool ok = true;
        s.for_each([&](int a) {
            s.for_each([&](int b) { if (a != b && leq(a, b)) ok = false; });
        });
        return ok;
    }

    bool is_closed(RootSet p) const {
        bool ok = true;
        p.for_each([&](int a) {
            p.for_each([&](int b) {
                auto s = root_sum(a, b);
                if (s && !p.contains(*s)) ok = false;
            });
        });
        return ok;
    }
    bool is_normal_in(RootSet k, RootSet p) const {
        if (!k.subset_of(p)) return false;
        bool ok = true;
        k.for_each([&](int d) {
            p.for_each([&](int a) {
                auto s = root_sum(d, a);
                if (s && !k.contains(*s)) ok = false;
            });
        });
        return ok;
    }

    // Z(S) = { g in S | g + a not in S for all a in S }
    RootSet center_zs(RootSet s) const {
        RootSet z;
        s.for_each([&](int g) {
            bool central = true;
            s.for_each([&](int a) {
                auto t = root_sum(g, a);
                if (t && s.contains(*t)) central = false;
            });
            if (central) z.add(g);
        });
        return z;
    }
    // D(S) = { g in Z(S) | a + b != g for all a, b in S }
    RootSet d_s(RootSet s) const {
        RootSet z = center_zs(s), d;
        z.for_each([&](int g) {
            bool is_sum = false;
            s.for_each([&](int a) {
                s.for_each([&](int b) {
                    auto t = root_sum(a, b);
                    if (t && *t == g) is_sum = true;
                });
            });
            if (!is_sum) d.add(g);
        });
        return d;
    }

    // permutation mapping this system's default enumeration to the order the
    // paper's tool used: simple roots relabelled with `perm`, roots re-sorted
    // by (height, descending lex).  Returned as new_index -> default_index.
    std::vector<int> paper_order_permutation(const std::vector<int>& simple_perm) const {
        struct Item { std::vector<int> v; int orig; };
        std::vector<Item> items;
        for (int i = 0; i < size(); ++i) {
            std::vector<int> v(rank_);
            for (int k = 0; k < rank_; ++k) v[k] = roots_[i][simple_perm[k]];
            items.push_back({std::move(v), i});
        }
        std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
            int ha = 0, hb = 0;
            for (int x : a.v) ha += x;
            for (int x : b.v) hb += x;
            if (ha != hb) return ha < hb;
            return a.v > b.v;  // descending lex
        });
        std::vector<int> perm(size());
        for (int i = 0; i < size(); ++i) perm[i] = items[i].orig;
        return perm;
    }

    std::string type_name() const {
        return std::string(1, (char)series_) + std::to_string(rank_);
    }

    static std::vector<std::vector<int>> cartan_matrix(Series series, int n) {
        std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
        for (int i = 0; i < n; ++i) a[i][i] = 2;
        auto link = [&](int i, int j, int aij = -1, int aji = -1) {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        switch (series_switch(series)) {
            case 'A':
                for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
                break;
            case 'B':  // alpha_n short
                for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
                link(n - 2, n - 1, -2, -1);
                break;
            case 'C':  // alpha_n long
                for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
                link(n - 2, n - 1, -1, -2);
                break;
            case 'D':
                for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
                link(n - 3, n - 1);
                break;
            case 'E': {
                // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to 4
                std::vector<int> chain = {0, 2, 3, 4, 5, 6, 7};
                chain.resize(n - 1);
                for (std::size_t i = 0; i + 1 < chain.size(); ++i) link(chain[i], chain[i + 1]);
                link(1, 3);
                break;
            }
            case 'F':
                link(0, 1);
                link(1, 2, -2, -1);
                link(2, 3);
                break;
            case 'G':  // alpha_1 short
                link(0, 1, -1, -3);
                break;
        }
        return a;
    }

    // relative half square lengths, short root normalized to 1
    static std::vector<int> length_vector(Series series, int n) {
        switch (series_switch(series)) {
            case 'B': { std::vector<int> d(n, 2); d[n - 1] = 1; return d; }
            case 'C': { std::vector<int> d(n, 1); d[n - 1] = 2; return d; }
            case 'F': return {2, 2, 1, 1};
            case 'G': return {1, 3};
            default: return std::vector<int>(n, 1);
        }
    }

private:
    static char series_switch(Series s) { return (char)s; }

    void validate_type() {
        int n = rank_;
        bool ok = false;
        switch ((char)series_) {
            case 'A': ok = n >= 1; break;
            case 'B': ok = n >= 2; break;
            case 'C': ok = n >= 3; break;
            case 'D': ok = n >= 4; break;
            case 'E': ok = n >= 6 && n <= 8; break;
            case 'F': ok = n == 4; break;
            case 'G': ok = n == 2; break;
        }
        if (!ok || n > 8)
            throw std::invalid_argument("invalid type " + std::string(1, (char)series_) +
                                        std::to_string(n) + " (supported: A1..A8, B2..B8, C3..C8, "
                                        "D4..D8, E6..E8, F4, G2)");
    }

    static std::uint64_t key_of(const std::vector<int>& v) {
        std::uint64_t k = 0;
        for (int c : v) k = (k << 6) | (unsigned)(c & 63);
        return k;
    }

    void generate_roots(const std::vector<std::vector<int>>& a) {
        int n = rank_;
        std::vector<std::vector<int>> frontier;
        for (int i = 0; i < n; ++i) {
            std::vector<int> v(n, 0);
            v[i] = 1;
            roots_.push_back(v);
            index_[key_of(v)] = 0;  // placeholder, rebuilt after sorting
            frontier.push_back(v);
        }
        auto in_system = [&](const std::vector<int>& v) {
            return index_.count(key_of(v)) != 0;
        };
        auto pairing = [&](const std::vector<int>& beta, int j) {
            int s = 0;
            for (int i = 0; i < n; ++i) s += beta[i] * a[i][j];
            return s;
        };
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& beta : frontier) {
                for (int j = 0; j < n; ++j) {
                    // root string: q = p - <beta, alpha_j^vee>
                    int p = 0;
                    std::vector<int> cur = beta;
                    while (true) {
                        cur[j] -= 1;
                        if (cur[j] < 0 || !in_system(cur)) break;
                        ++p;
                    }
                    if (p - pairing(beta, j) >= 1) {
                        std::vector<int> nb = beta;
                        nb[j] += 1;
                        if (!in_system(nb)) {
                            index_[key_of(nb)] = 0;
                            roots_.push_back(nb);
                            next.push_back(nb);
                        }
                    }
                }
            }
            frontier = std::move(next);
        }
    }

    void sort_default() {
        std::sort(roots_.begin(), roots_.end(), [](const auto& x, const auto& y) {
            int hx = 0, hy = 0;
            for (int c : x) hx += c;
            for (int c : y) hy += c;
            if (hx != hy) return hx < hy;
            return x > y;  // descending lex within a height
        });
    }

    void apply_override(const std::vector<int>& perm) {
        if ((int)perm.size() != (int)roots_.size())
            throw std::invalid_argument("enumeration override has wrong length");
        std::vector<std::vector<int>> reordered(roots_.size());
        std::vector<bool> seen(roots_.size(), false);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            int src = perm[i];
            if (src < 0 || src >= (int)roots_.size() || seen[src])
                throw std::invalid_argument("enumeration override is not a permutation");
            seen[src] = true;
            reordered[i] = roots_[src];
        }
        roots_ = std::move(reordered);
        // must remain a linear extension of the root order
        for (std::size_t i = 0; i < roots_.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                if (coord_leq(roots_[i], roots_[j]))
                    throw std::invalid_argument(
                        "enumeration override violates height compatibility");
    }

    static bool coord_leq(const std::vector<int>& a, const std::vector<int>& b) {
        for (std::size_t k = 0; k < a.size(); ++k)
            if (a[k] > b[k]) return false;
        return true;
    }

    void build_tables() {
        int n = size();
        index_.clear();
        for (int i = 0; i < n; ++i) index_[key_of(roots_[i])] = i;
        heights_.resize(n);
        for (int i = 0; i < n; ++i) {
            int h = 0;
            for (int c : roots_[i]) h += c;
            heights_[i] = h;
        }
        sum_.assign(n, std::vector<int>(n, -1));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                std::vector<int> v(rank_);
                for (int k = 0; k < rank_; ++k) v[k] = roots_[i][k] + roots_[j][k];
                auto it = index_.find(key_of(v));
                if (it != index_.end()) sum_[i][j] = it->second;
            }
        leq_.assign(n, RootSet{});
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (coord_leq(roots_[i], roots_[j])) leq_[i].add(j);
    }

    void antichain_rec(int start, std::vector<int>& cur, std::vector<RootSet>& out) const {
        RootSet s;
        for (int i : cur) s.add(i);
        out.push_back(s);
        for (int i = start; i < size(); ++i) {
            bool ok = true;
            for (int j : cur)
                if (leq(i, j) || leq(j, i)) { ok = false; break; }
            if (ok) {
                cur.push_back(i);
                antichain_rec(i + 1, cur, out);
                cur.pop_back();
            }
        }
    }
    void count_rec(int start, RootSet cur, std::uint64_t& n) const {
        ++n;
        for (int i = start; i < size(); ++i) {
            bool ok = true;
            cur.for_each([&](int j) { if (leq(i, j) || leq(j, i)) ok = false; });
            if (ok) {
                RootSet next = cur;
                next.add(i);
                count_rec(i + 1, next, n);
            }
        }
    }

    Series series_;
    int rank_;
    std::vector<std::vector<int>> roots_;
    std::vector<int> heights_;
    std::vector<std::vector<int>> sum_;
    std::vector<RootSet> leq_;
    std::map<std::uint64_t, int> index_;
};

} // namespace sylchar
