#pragma once

#include "qschur/abacus.hpp"

#include <map>
#include <set>

namespace qschur {

/// Induced e-sequence s(lambda)_r: for every bead of positive weight at
/// position a with weight w, contribute (a, a-e, ..., a-(w-1)e); the union is
/// sorted weakly decreasing. Length equals the e-weight.
inline std::vector<int> induced_e_sequence(const Partition& lam, int e, int r) {
    auto A = AbacusDisplay::from_partition(lam, e, r);
    std::vector<int> seq;
    for (int p : A.beta()) {
        int wt = 0;
        for (int q = p % e; q < p; q += e)
            if (!A.occupied(q)) ++wt;
        for (int k = 0; k < wt; ++k) seq.push_back(p - k * e);
    }
    std::sort(seq.begin(), seq.end(), std::greater<>());
    return seq;
}

/// Product order: same core and weight, and s(lambda)_r <= s(mu)_r
/// componentwise at a common (canonical) bead count.
inline bool product_leq(const Partition& lam, const Partition& mu, int e) {
    if (lam.size() != mu.size()) return false;
    auto cw1 = e_core_and_weight(lam, e);
    auto cw2 = e_core_and_weight(mu, e);
    if (cw1.core != cw2.core || cw1.weight != cw2.weight) return false;
    int r = canonical_beads(std::max(lam.length(), mu.length()), e, cw1.weight);
    auto s1 = induced_e_sequence(lam, e, r);
    auto s2 = induced_e_sequence(mu, e, r);
    for (std::size_t i = 0; i < s1.size(); ++i)
        if (s1[i] > s2[i]) return false;
    return true;
}

/// One Jantzen move lambda -> tau: a bead at position a moves up i rows to the
/// vacant a-ie, then (in the intermediate sigma) a bead at b-ie moves down to
/// the vacant b, with a < b.
struct JantzenMove {
    int a = 0, b = 0, i = 0;
    int l_up = 0;   // occupied positions strictly between a-ie and a in lambda
    int l_down = 0; // occupied positions strictly between b-ie and b in tau
};

/// All single Jantzen moves out of lambda, grouped by the resulting tau.
/// Both half-moves shift a bead by i rows, so i never exceeds the e-weight.
inline std::map<Partition, std::vector<JantzenMove>> jantzen_successors(const Partition& lam,
                                                                        int e, int r = -1) {
    int w = e_weight(lam, e);
    if (r < 0) r = canonical_beads(lam.length(), e, w);
    auto A = AbacusDisplay::from_partition(lam, e, r);
    int top = A.max_position() + w * e + 1;
    std::vector<char> occ(top + 2, 0);
    for (int p : A.beta()) occ[p] = 1;
    std::vector<int> prefix(top + 2, 0); // occupied positions < q
    for (int q = 0; q <= top; ++q) prefix[q + 1] = prefix[q] + occ[q];
    auto between = [&](int lo, int hi) { return prefix[hi] - prefix[lo + 1]; };

    auto to_partition = [&]() {
        std::vector<int> parts;
        parts.reserve(r);
        int seen = 0;
        for (int q = top; q >= 0 && seen < r; --q)
            if (occ[q]) {
                ++seen;
                int part = q - (r - seen);
                if (part > 0) parts.push_back(part);
            }
        return Partition(std::move(parts));
    };

    std::map<Partition, std::vector<JantzenMove>> out;
    std::vector<int> beta(A.beta().begin(), A.beta().end());
    for (int a : beta) {
        for (int i = 1; i <= w && a - i * e >= 0; ++i) {
            if (occ[a - i * e]) continue;
            int l_up = between(a - i * e, a);
            // sigma = lambda with a -> a-ie
            occ[a] = 0;
            occ[a - i * e] = 1;
            for (int bm = 0; bm + i * e <= top; ++bm) {
                if (!occ[bm]) continue;
                int b = bm + i * e;
                if (b <= a || occ[b]) continue;
                occ[bm] = 0;
                occ[b] = 1;
                int l_down = 0;
                for (int q = bm + 1; q < b; ++q) l_down += occ[q];
                out[to_partition()].push_back({a, b, i, l_up, l_down});
                occ[b] = 0;
                occ[bm] = 1;
            }
            occ[a - i * e] = 0;
            occ[a] = 1;
        }
    }
    return out;
}

/// Jantzen order as the reachability closure of single moves. Memoised per
/// (lambda, e); blocks at this scale hold at most a few hundred partitions.
class JantzenOrder {
public:
    explicit JantzenOrder(int e) : e_(e) { require_e(e); }

    const std::set<Partition>& above(const Partition& lam) {
        auto it = reach_.find(lam);
        if (it != reach_.end()) return it->second;
        int w = e_weight(lam, e_);
        int r = canonical_beads(lam.length() + 2 * e_ * w, e_, w);
        std::set<Partition> seen{lam};
        std::vector<Partition> frontier{lam};
        while (!frontier.empty()) {
            Partition x = frontier.back();
            frontier.pop_back();
            for (auto& [tau, moves] : jantzen_successors(x, e_, r))
                if (seen.insert(tau).second) frontier.push_back(tau);
        }
        return reach_.emplace(lam, std::move(seen)).first->second;
    }

    bool leq(const Partition& lam, const Partition& mu) {
        if (lam == mu) return true;
        if (lam.size() != mu.size()) return false;
        return above(lam).count(mu) > 0;
    }

private:
    int e_;
    std::map<Partition, std::set<Partition>> reach_;
};

inline bool jantzen_leq(const Partition& lam, const Partition& mu, int e) {
    JantzenOrder ord(e);
    return ord.leq(lam, mu);
}

} // namespace qschur
