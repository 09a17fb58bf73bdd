#pragma once

#include "qschur/abacus.hpp"
#include "qschur/notation.hpp"

#include <deque>
#include <map>
#include <optional>

namespace qschur {

/// Labels a block of the q-Schur algebra / Hecke algebra: e, core, weight,
/// plus the runner bead counts at the canonical bead number.
struct BlockDescriptor {
    int e = 2;
    Partition core;
    int weight = 0;
    std::vector<int> bead_counts;

    int n() const { return core.size() + e * weight; }
    int canonical_r() const {
        int l_max = core.length() + e * weight; // longest partition in the block
        return ((l_max + e + e - 1) / e) * e;   // multiple of e, position 0 occupied
    }
    friend bool operator==(const BlockDescriptor& a, const BlockDescriptor& b) {
        return a.e == b.e && a.core == b.core && a.weight == b.weight;
    }
    friend auto operator<=>(const BlockDescriptor& a, const BlockDescriptor& b) {
        return std::tie(a.e, a.core, a.weight) <=> std::tie(b.e, b.core, b.weight);
    }
};

inline std::vector<int> bead_counts_at(const Partition& core, int e, int r) {
    auto A = AbacusDisplay::from_partition(core, e, r);
    std::vector<int> counts(e, 0);
    for (int p : A.beta()) counts[p % e] += 1;
    return counts;
}

inline BlockDescriptor make_block(Partition core, int weight, int e) {
    BlockDescriptor b;
    b.e = e;
    b.core = std::move(core);
    b.weight = weight;
    b.bead_counts = bead_counts_at(b.core, e, b.canonical_r());
    return b;
}

inline BlockDescriptor block_of(const Partition& lam, int e) {
    auto cw = e_core_and_weight(lam, e);
    return make_block(cw.core, cw.weight, e);
}

/// Block from a label "<4^2,6>": the label's bead counts determine the core.
inline BlockDescriptor block_from_label(const std::string& label, int weight) {
    auto counts = parse_block_label(label);
    int e = static_cast<int>(counts.size());
    require_e(e);
    std::set<int> beta;
    for (int i = 0; i < e; ++i)
        for (int k = 0; k < counts[i]; ++k) beta.insert(k * e + i);
    Partition core = AbacusDisplay(e, std::move(beta)).to_partition();
    return make_block(std::move(core), weight, e);
}

/// All partitions with the given core and weight, in descending
/// lexicographic order (every e-tuple of quotient partitions of total size w).
inline std::vector<Partition> enumerate_block(const BlockDescriptor& B) {
    int e = B.e, r = B.canonical_r();
    auto counts = bead_counts_at(B.core, e, r);
    std::vector<Partition> out;
    std::vector<Partition> quot(e);
    auto rec = [&](auto&& self, int i, int rem) -> void {
        if (i == e) {
            if (rem == 0) {
                RunnerNotation rn{quot, counts};
                out.push_back(from_quotient(rn, e));
            }
            return;
        }
        for (int k = 0; k <= rem; ++k)
            for (const auto& p : partitions_of(k)) {
                quot[i] = p;
                self(self, i + 1, rem - k);
            }
        quot[i] = Partition{};
    };
    rec(rec, 0, B.weight);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// Runner notation of a partition relative to its block's canonical display.
inline RunnerNotation block_notation(const Partition& lam, const BlockDescriptor& B) {
    return e_quotient(lam, B.e, B.canonical_r());
}

/// A [w:k]-pair of blocks: lower.core is upper.core minus its k removable
/// nodes of residue `residue` (all on runner `runner` of the upper display).
struct WkPair {
    BlockDescriptor lower; // A
    BlockDescriptor upper; // B
    int k = 0;
    int residue = 0;
    int runner = 0;
    bool scopes() const { return upper.weight <= k; }
};

/// All pairs with B as the upper block.
inline std::vector<WkPair> detect_wk_pairs(const BlockDescriptor& B) {
    int e = B.e, r = B.canonical_r();
    auto A = AbacusDisplay::from_partition(B.core, e, r);
    auto counts = bead_counts_at(B.core, e, r);
    std::vector<WkPair> out;
    for (int i = 0; i < e; ++i) {
        int k = (i > 0) ? counts[i] - counts[i - 1] : counts[0] - counts[e - 1] - 1;
        if (k < 1) continue;
        int j = A.residue_of_runner(i);
        std::set<int> beta = A.beta();
        for (int p : removable_positions(A, j)) {
            beta.erase(p);
            beta.insert(p - 1);
        }
        Partition coreA = AbacusDisplay(e, std::move(beta)).to_partition();
        out.push_back({make_block(coreA, B.weight, e), B, k, j, i});
    }
    return out;
}

/// All pairs with B as the lower block (inductions out of B).
inline std::vector<WkPair> detect_up_pairs(const BlockDescriptor& B) {
    int e = B.e, r = B.canonical_r();
    auto A = AbacusDisplay::from_partition(B.core, e, r);
    auto counts = bead_counts_at(B.core, e, r);
    std::vector<WkPair> out;
    for (int i = 0; i < e; ++i) {
        int k = (i > 0) ? counts[i - 1] - counts[i] : counts[e - 1] + 1 - counts[0];
        if (k < 1) continue;
        int j = A.residue_of_runner(i);
        std::set<int> beta = A.beta();
        for (int p : addable_positions(A, j)) {
            beta.erase(p - 1);
            beta.insert(p);
        }
        Partition coreC = AbacusDisplay(e, std::move(beta)).to_partition();
        out.push_back({B, make_block(coreC, B.weight, e), k, j, i});
    }
    return out;
}

/// Exceptional test. In the lower block: exceptional iff some j-normal node
/// exists; in the upper block: exceptional iff some j-conormal node exists.
inline bool is_exceptional(const Partition& lam, const WkPair& pair) {
    int e = pair.upper.e;
    auto cw = e_core_and_weight(lam, e);
    if (cw.core == pair.lower.core && cw.weight == pair.lower.weight)
        return epsilon(lam, e, pair.residue, pair.lower.canonical_r()) > 0;
    if (cw.core == pair.upper.core && cw.weight == pair.upper.weight)
        return phi(lam, e, pair.residue, pair.upper.canonical_r()) > 0;
    throw partition_not_in_pair("partition lies in neither block of the pair");
}

/// Rouquier condition on the bead counts: b_i - b_j >= w or b_j - b_i >= w-1
/// for all i < j (invariant under the choice of canonical bead number).
inline bool is_rouquier(const BlockDescriptor& B) {
    const auto& b = B.bead_counts;
    int e = B.e, w = B.weight;
    for (int i = 0; i < e; ++i)
        for (int j = i + 1; j < e; ++j)
            if (!(b[i] - b[j] >= w || b[j] - b[i] >= w - 1)) return false;
    return true;
}

/// F._j: when phi_j - eps_j = k > 0, adds the k lowest j-conormal nodes.
inline Partition dot_F(const Partition& mu, int e, int j) {
    int w = e_weight(mu, e);
    int r = canonical_beads(mu.length(), e, w);
    int k = phi(mu, e, j, r) - epsilon(mu, e, j, r);
    if (k <= 0) throw dot_f_undefined("phi_j - eps_j must be positive");
    return add_conormal(mu, e, j, k, r);
}

inline Partition dot_F_down(const Partition& mu, int e, int j, int m) {
    Partition cur = mu;
    for (int s = 0; s < m; ++s) cur = dot_F(cur, e, mod(j - s, e));
    return cur;
}

inline Partition dot_F_up(const Partition& mu, int e, int j, int m) {
    Partition cur = mu;
    for (int s = 0; s < m; ++s) cur = dot_F(cur, e, mod(j + s, e));
    return cur;
}

struct InductionResult {
    Partition final;
    bool semisimple = true;
};

/// Apply F. along the residue list (first entry applied first); semisimple
/// iff at every step the input has no j-normal node (so its simple module
/// induces semisimply across that step's [w:k]-pair).
inline InductionResult semisimple_induction(const Partition& lam, int e,
                                            const std::vector<int>& residues) {
    Partition cur = lam;
    bool ss = true;
    for (int j : residues) {
        int w = e_weight(cur, e);
        int r = canonical_beads(cur.length(), e, w);
        if (epsilon(cur, e, j, r) > 0) ss = false;
        cur = dot_F(cur, e, j);
    }
    return {cur, ss};
}

/// Bounded breadth-first search for a residue list carrying lam semisimply
/// into a Rouquier block. Absence within the budget proves nothing.
inline std::optional<std::vector<int>> find_rouquier_path(const Partition& lam, int e,
                                                          int depth_budget = -1) {
    if (depth_budget < 0) depth_budget = 8 * e;
    struct State {
        Partition p;
        std::vector<int> path;
    };
    auto rouq = [&](const Partition& p) { return is_rouquier(block_of(p, e)); };
    if (rouq(lam)) return std::vector<int>{};
    std::set<Partition> seen{lam};
    std::deque<State> q{{lam, {}}};
    while (!q.empty()) {
        auto [p, path] = q.front();
        q.pop_front();
        if (static_cast<int>(path.size()) >= depth_budget) continue;
        int w = e_weight(p, e);
        int r = canonical_beads(p.length(), e, w);
        for (int j = 0; j < e; ++j) {
            int eps = epsilon(p, e, j, r), ph = phi(p, e, j, r);
            if (eps != 0 || ph <= eps) continue; // not a semisimple F. step
            Partition nxt = add_conormal(p, e, j, ph - eps, r);
            if (!seen.insert(nxt).second) continue;
            auto npath = path;
            npath.push_back(j);
            if (rouq(nxt)) return npath;
            q.push_back({nxt, std::move(npath)});
        }
    }
    return std::nullopt;
}

/// Branching of Weyl-module classes: all ways to add (induce) or remove
/// (restrict) k residue-j nodes, each with multiplicity k!.
inline long long factorial_ll(int k) {
    long long f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

inline std::vector<std::pair<Partition, long long>> induce_weyl(const Partition& lam, int e,
                                                                int j, int k) {
    int w = e_weight(lam, e);
    int r = canonical_beads(lam.length(), e, w + k);
    auto A = AbacusDisplay::from_partition(lam, e, r);
    auto adds = addable_positions(A, j);
    std::vector<std::pair<Partition, long long>> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t from, int need) -> void {
        if (need == 0) {
            std::set<int> beta = A.beta();
            for (int p : pick) {
                beta.erase(p - 1);
                beta.insert(p);
            }
            out.emplace_back(AbacusDisplay(e, std::move(beta)).to_partition(), factorial_ll(k));
            return;
        }
        for (std::size_t t = from; t < adds.size(); ++t) {
            pick.push_back(adds[t]);
            self(self, t + 1, need - 1);
            pick.pop_back();
        }
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

inline std::vector<std::pair<Partition, long long>> restrict_weyl(const Partition& lam, int e,
                                                                  int j, int k) {
    int w = e_weight(lam, e);
    int r = canonical_beads(lam.length(), e, w + k);
    auto A = AbacusDisplay::from_partition(lam, e, r);
    auto rems = removable_positions(A, j);
    std::vector<std::pair<Partition, long long>> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, std::size_t from, int need) -> void {
        if (need == 0) {
            std::set<int> beta = A.beta();
            for (int p : pick) {
                beta.erase(p);
                beta.insert(p - 1);
            }
            out.emplace_back(AbacusDisplay(e, std::move(beta)).to_partition(), factorial_ll(k));
            return;
        }
        for (std::size_t t = from; t < rems.size(); ++t) {
            pick.push_back(rems[t]);
            self(self, t + 1, need - 1);
            pick.pop_back();
        }
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

/// Branching of simple-module classes, following the six-case rule.
struct SimpleBranch {
    enum Kind { Zero, Exact, SocleOnly } kind = Zero;
    Partition target;         // F~^k or E~^k image when kind != Zero
    long long multiplicity = 0; // k!
};

inline SimpleBranch induce_simple(const Partition& lam, int e, int j, int k) {
    int w = e_weight(lam, e);
    int r = canonical_beads(lam.length(), e, w + k);
    int ph = phi(lam, e, j, r);
    if (ph < k) return {SimpleBranch::Zero, {}, 0};
    auto kind = (ph == k) ? SimpleBranch::Exact : SimpleBranch::SocleOnly;
    return {kind, add_conormal(lam, e, j, k, r), factorial_ll(k)};
}

inline SimpleBranch restrict_simple(const Partition& lam, int e, int j, int k) {
    int w = e_weight(lam, e);
    int r = canonical_beads(lam.length(), e, w + k);
    int eps = epsilon(lam, e, j, r);
    if (eps < k) return {SimpleBranch::Zero, {}, 0};
    auto kind = (eps == k) ? SimpleBranch::Exact : SimpleBranch::SocleOnly;
    return {kind, remove_normal(lam, e, j, k, r), factorial_ll(k)};
}

} // namespace qschur
