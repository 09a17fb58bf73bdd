#pragma once

#include "qschur/abacus.hpp"
#include "qschur/vpoly.hpp"

#include <map>
#include <mutex>

namespace qschur {

/// Element of the level-1 Fock space: finitely supported Partition -> VPoly.
using FockVector = std::map<Partition, VPoly>;

struct YoungNode {
    int row = 0, col = 0; // 1-based
};

inline int node_residue(int row, int col, int e) { return mod(col - row, e); }

inline std::vector<YoungNode> addable_young_nodes(const Partition& lam, int e, int j) {
    std::vector<YoungNode> out;
    for (int i = 1; i <= lam.length() + 1; ++i) {
        int col = lam.part(i) + 1;
        if (i == 1 || lam.part(i - 1) >= col)
            if (node_residue(i, col, e) == j) out.push_back({i, col});
    }
    return out;
}

inline std::vector<YoungNode> removable_young_nodes(const Partition& lam, int e, int j) {
    std::vector<YoungNode> out;
    for (int i = 1; i <= lam.length(); ++i) {
        int col = lam.part(i);
        if (lam.part(i + 1) < col)
            if (node_residue(i, col, e) == j) out.push_back({i, col});
    }
    return out;
}

inline Partition with_node_added(const Partition& lam, const YoungNode& nd) {
    std::vector<int> parts = lam.parts();
    if (nd.row - 1 < static_cast<int>(parts.size())) parts[nd.row - 1] += 1;
    else parts.push_back(1);
    return Partition(std::move(parts));
}

/// Chevalley action f_j on the Fock space:
///   f_j|lambda> = sum_nu v^{N(lambda,nu)} |nu>,
/// nu running over lambda plus one residue-j node. N counts addable minus
/// removable j-nodes strictly below the added node, "below" on the abacus,
/// which is the same as strictly earlier rows of the Young diagram.
inline FockVector f_action(const FockVector& x, int j, int e) {
    require_e(e);
    FockVector out;
    for (const auto& [lam, coef] : x) {
        auto adds = addable_young_nodes(lam, e, j);
        auto rems = removable_young_nodes(lam, e, j);
        for (const auto& a : adds) {
            int N = 0;
            for (const auto& b : adds)
                if (b.row < a.row) ++N;
            for (const auto& b : rems)
                if (b.row < a.row) --N;
            Partition nu = with_node_added(lam, a);
            auto [it, fresh] = out.try_emplace(nu, VPoly{});
            it->second += coef.shifted(N);
            if (it->second.is_zero()) out.erase(it);
        }
    }
    return out;
}

/// Divided power f_j^{(a)} = f_j^a / [a]!; the division must be exact.
inline FockVector divided_power(FockVector x, int j, int a, int e) {
    if (a < 1) throw precondition_violated("divided power needs a >= 1");
    for (int k = 0; k < a; ++k) x = f_action(x, j, e);
    VPoly qf = quantum_factorial(a);
    FockVector out;
    for (auto& [lam, c] : x) out.emplace(lam, c.div_exact(qf));
    return out;
}

/// Ladder L_k = {(row, col) : row + (e-1)(col-1) = k}; all nodes of a ladder
/// share one residue. Returns (residue, multiplicity) over the nonempty
/// ladders of mu in increasing k. Applying divided powers in this order to
/// |empty> yields the first approximation A(mu).
inline std::vector<std::pair<int, int>> ladder_sequence(const Partition& mu, int e) {
    require_e(e);
    if (!is_e_regular(mu, e)) throw not_e_regular("ladder sequence needs an e-regular index");
    std::map<int, std::pair<int, int>> ladders; // k -> (residue, count)
    for (int i = 1; i <= mu.length(); ++i) {
        for (int col = 1; col <= mu.part(i); ++col) {
            int k = i + (e - 1) * (col - 1);
            int res = node_residue(i, col, e);
            auto [it, fresh] = ladders.try_emplace(k, std::make_pair(res, 0));
            if (it->second.first != res)
                throw error("ladder residue mismatch (internal)");
            it->second.second += 1;
        }
    }
    std::vector<std::pair<int, int>> seq;
    for (auto& [k, rc] : ladders) seq.push_back(rc);
    return seq;
}

namespace detail {

// Beta sets as fixed-width bit masks: the engine behind the ladder chain.
// All intermediate partitions have size at most n, so r = n+1 beads keep
// position 0 occupied and every position below 2n+2.
template <int Words>
struct BetaMask {
    std::array<std::uint64_t, Words> w{};
    bool test(int p) const { return (w[p >> 6] >> (p & 63)) & 1ull; }
    void set(int p) { w[p >> 6] |= (1ull << (p & 63)); }
    void reset(int p) { w[p >> 6] &= ~(1ull << (p & 63)); }
    friend bool operator==(const BetaMask&, const BetaMask&) = default;
};

template <int Words>
struct BetaMaskHash {
    std::size_t operator()(const BetaMask<Words>& m) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ull;
        for (auto x : m.w) {
            h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h *= 0xff51afd7ed558ccdull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// f_j on mask vectors displayed with r beads on e runners, top position cap.
template <int Words>
void mask_f_action(std::vector<std::pair<BetaMask<Words>, VPoly>>& vec, int j, int e, int r,
                   int top) {
    std::unordered_map<BetaMask<Words>, VPoly, BetaMaskHash<Words>> out;
    out.reserve(vec.size() * 2);
    int i = mod(j + r, e);
    for (auto& [m, coef] : vec) {
        // scan runner i downward so the exponent counters accumulate the
        // addable/removable nodes sitting strictly below (larger positions)
        int addable_below = 0, removable_below = 0;
        int start = i + ((top - i) / e) * e;
        for (int q = start; q >= std::max(i, 1); q -= e) {
            bool occ = m.test(q), pred = m.test(q - 1);
            if (occ && !pred) {
                ++removable_below;
            } else if (!occ && pred) {
                BetaMask<Words> nm = m;
                nm.reset(q - 1);
                nm.set(q);
                auto [it, fresh] = out.try_emplace(nm, VPoly{});
                it->second.add_shifted(coef, addable_below - removable_below, 1);
                if (it->second.is_zero()) out.erase(it);
                ++addable_below;
            }
        }
        // position 0 (residue of runner 0) is never addable: its predecessor
        // is deemed occupied, and with r > |mu| beads it is in fact occupied.
    }
    vec.assign(out.begin(), out.end());
}

template <int Words>
FockVector ladder_chain(const Partition& mu, int e) {
    int n = mu.size();
    int r = n + 1;
    int top = 2 * n + 2;
    BetaMask<Words> vac;
    for (int p = 0; p < r; ++p) vac.set(p);
    std::vector<std::pair<BetaMask<Words>, VPoly>> vec{{vac, VPoly::one()}};
    for (auto [res, a] : ladder_sequence(mu, e)) {
        for (int k = 0; k < a; ++k) mask_f_action(vec, res, e, r, top);
        if (a > 1) {
            VPoly qf = quantum_factorial(a);
            for (auto& [m, c] : vec) c = c.div_exact(qf);
        }
    }
    FockVector out;
    for (auto& [m, c] : vec) {
        std::set<int> beta;
        for (int p = 0; p <= top; ++p)
            if (m.test(p)) beta.insert(p);
        out.emplace(AbacusDisplay(e, std::move(beta)).to_partition(), std::move(c));
    }
    return out;
}

} // namespace detail

inline FockVector first_approximation(const Partition& mu, int e) {
    int bits = 2 * mu.size() + 3;
    if (bits <= 256) return detail::ladder_chain<4>(mu, e);
    if (bits <= 512) return detail::ladder_chain<8>(mu, e);
    if (bits <= 1024) return detail::ladder_chain<16>(mu, e);
    throw precondition_violated("partition too large for the mask engine");
}

/// Canonical bases G(mu) with memoisation per (e, mu). The memo table is
/// internally synchronized, so contexts may be shared across threads.
class FockContext {
public:
    /// G(mu): coefficient 1 at mu, coefficients in vN[v] elsewhere, support
    /// inside the dominance interval below mu. Computed by the triangular
    /// bar-symmetric correction of the ladder first approximation.
    const FockVector& canonical_basis(const Partition& mu, int e) {
        require_e(e);
        if (!is_e_regular(mu, e)) throw not_e_regular("canonical basis needs e-regular mu");
        Key key{e, mu};
        {
            std::lock_guard lock(m_);
            auto it = memo_.find(key);
            if (it != memo_.end()) return it->second;
        }
        FockVector vec = first_approximation(mu, e);
        if (!(vec.count(mu) && vec.at(mu) == VPoly::one()))
            throw non_positive_coefficient("first approximation is not unitriangular at mu");
        while (true) {
            // dominance-maximal lambda != mu whose coefficient leaves vZ[v];
            // ties broken by descending lexicographic order.
            std::vector<Partition> bad;
            for (const auto& [lam, c] : vec)
                if (lam != mu && !c.in_positive_v()) bad.push_back(lam);
            if (bad.empty()) break;
            Partition pick;
            bool have = false;
            for (const auto& cand : bad) {
                bool maximal = true;
                for (const auto& other : bad)
                    if (other != cand && dominates(other, cand)) { maximal = false; break; }
                if (maximal && (!have || pick < cand)) { pick = cand; have = true; }
            }
            const VPoly& alpha = vec.at(pick);
            // bar-symmetric completion gamma: bar(gamma) = gamma, gamma - alpha in vZ[v]
            VPoly gamma;
            for (auto [d, c] : alpha.coeffs()) {
                if (d < 0) gamma += VPoly::monomial(c, d) + VPoly::monomial(c, -d);
                else if (d == 0) gamma += VPoly::monomial(c, 0);
            }
            const FockVector& g = canonical_basis(pick, e);
            for (const auto& [lam, c] : g) {
                auto [it, fresh] = vec.try_emplace(lam, VPoly{});
                it->second -= gamma * c;
                if (it->second.is_zero()) vec.erase(it);
            }
        }
        for (const auto& [lam, c] : vec)
            if (lam != mu && !(c.in_positive_v() && c.nonneg_coeffs()))
                throw non_positive_coefficient("canonical basis coefficient outside vN[v]");
        std::lock_guard lock(m_);
        return memo_.try_emplace(key, std::move(vec)).first->second;
    }

    /// v-decomposition number d^e_{lambda,mu}(v). Zero across blocks; for
    /// e-singular mu, empty runners are inserted jointly until the column
    /// index becomes regular.
    VPoly v_decomposition(Partition lam, Partition mu, int e) {
        if (lam.size() != mu.size()) return VPoly::zero();
        if (e_core(lam, e) != e_core(mu, e)) return VPoly::zero();
        while (!is_e_regular(mu, e)) {
            auto up = insert_empty_runner({lam, mu}, e);
            lam = up[0];
            mu = up[1];
            ++e;
        }
        const FockVector& g = canonical_basis(mu, e);
        auto it = g.find(lam);
        return it == g.end() ? VPoly::zero() : it->second;
    }

    /// One column of v-decomposition numbers over a fixed list of rows
    /// (all in one block); faster than per-entry calls for singular mu.
    std::vector<VPoly> column(const std::vector<Partition>& rows, Partition mu, int e) {
        std::vector<Partition> idx = rows;
        while (!is_e_regular(mu, e)) {
            std::vector<Partition> all = idx;
            all.push_back(mu);
            auto up = insert_empty_runner(all, e);
            mu = up.back();
            up.pop_back();
            idx = std::move(up);
            ++e;
        }
        const FockVector& g = canonical_basis(mu, e);
        std::vector<VPoly> out;
        out.reserve(idx.size());
        for (const auto& lam : idx) {
            auto it = g.find(lam);
            out.push_back(it == g.end() ? VPoly::zero() : it->second);
        }
        return out;
    }

private:
    struct Key {
        int e;
        Partition mu;
        friend auto operator<=>(const Key&, const Key&) = default;
    };
    std::map<Key, FockVector> memo_;
    std::mutex m_;
};

/// Shared process-wide context (canonical bases are immutable once built).
inline FockContext& fock_context() {
    static FockContext ctx;
    return ctx;
}

inline VPoly v_decomposition(const Partition& lam, const Partition& mu, int e) {
    return fock_context().v_decomposition(lam, mu, e);
}

/// Runner Removal (full runner): if some runner is fully occupied below every
/// gap in both displays, delete it from both and return the reduced pair.
struct ReducedPair {
    Partition lam, mu;
    int e = 0;
    int runner = -1;
};

inline std::optional<ReducedPair> full_runner_delete(const Partition& lam, const Partition& mu,
                                                     int e) {
    if (e < 3) return std::nullopt;
    int w = std::max(e_weight(lam, e), e_weight(mu, e));
    int r = canonical_beads(std::max(lam.length(), mu.length()), e, w);
    auto A = AbacusDisplay::from_partition(lam, e, r);
    auto B = AbacusDisplay::from_partition(mu, e, r);
    for (int i = 0; i < e; ++i) {
        if (runner_full_eligible(A, i) && runner_full_eligible(B, i)) {
            return ReducedPair{delete_runner(A, i, RunnerKind::Full),
                               delete_runner(B, i, RunnerKind::Full), e - 1, i};
        }
    }
    return std::nullopt;
}

inline ReducedPair full_runner_delete_check(const Partition& lam, const Partition& mu, int e) {
    auto red = full_runner_delete(lam, mu, e);
    if (!red) throw no_eligible_runner("no common full runner");
    return *red;
}

} // namespace qschur
