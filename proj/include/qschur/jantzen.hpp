#pragma once

#include "qschur/blocks.hpp"
#include "qschur/fock.hpp"
#include "qschur/orders.hpp"

#include <limits>

namespace qschur {

/// Coefficient field, identified by its characteristic.
struct FieldSpec {
    int p = 0; // 0 or a prime
    bool valid() const {
        if (p == 0) return true;
        if (p < 2) return false;
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0) return false;
        return true;
    }
    int valuation(int x) const { // v_p; v_0 = 0
        if (p == 0) return 0;
        int v = 0;
        while (x % p == 0) { x /= p; ++v; }
        return v;
    }
};

/// J_F(lambda, tau): signed sum over all single Jantzen moves lambda -> tau of
/// (-1)^{l_up + l_down + 1} (1 + v_p(h)).
inline int js_coefficient(const Partition& lam, const Partition& tau, int e,
                          const FieldSpec& field, int r = -1) {
    if (lam.size() != tau.size()) return 0;
    auto succ = jantzen_successors(lam, e, r);
    auto it = succ.find(tau);
    if (it == succ.end()) return 0;
    int J = 0;
    for (const auto& m : it->second) {
        int sign = ((m.l_up + m.l_down + 1) % 2 == 0) ? 1 : -1;
        J += sign * (1 + field.valuation(m.i));
    }
    return J;
}

/// Either a known decomposition number or an honest interval.
struct SolverCell {
    long long lo = 0;
    long long hi = std::numeric_limits<long long>::max();
    bool determined() const { return lo == hi; }
    long long value() const { return lo; }
    static SolverCell known(long long v) { return {v, v}; }
    friend bool operator==(const SolverCell&, const SolverCell&) = default;
};

/// Decomposition-number solver over an arbitrary field.
///
/// The engine works on adjustment columns: for a block B and column index mu
/// it pins entries adj_{nu,mu} of the adjustment matrix, and decomposition
/// numbers follow from [W^lam : L^mu]_F = sum_nu d_C(lam,nu) adj_{nu,mu}.
/// The rules are the ones the weight 3/4 analysis is built from, each an
/// established theorem:
///   - adj_{mu,mu} = 1, and adj_{nu,mu} = 0 unless nu <=_J mu;
///   - eps_j(nu) < eps_j(mu) for some j forces adj_{nu,mu} = 0, and
///     eps_j(nu) = eps_j(mu) = k > 0 transports the entry to the pair
///     (E~_j^k nu, E~_j^k mu) in a smaller symmetric-group rank;
///   - row removal (nu_1 = mu_1) and column removal (l(nu) = l(mu));
///   - whole blocks with identity adjustment: weight at most 1, weight 2 when
///     p >= 3, Rouquier blocks when p > w;
///   - columns indexed by e-regular mu in blocks of weight at most 4 when
///     p >= 5 (identity Hecke adjustment pushed through the Schur functor);
///   - the Jantzen-Schaper recursion with interval arithmetic: a zero bound
///     forces a zero, a bound of at most one is exact;
///   - d_{nu,mu}(v) in {0, v} with vanishing intermediate adjustment entries
///     forces adj_{nu,mu} = 0 when w < p.
/// Entries none of these reach are reported Unknown, never guessed.
class DecompositionSolver {
public:
    DecompositionSolver(int e, FieldSpec field, FockContext& fock = fock_context())
        : e_(e), field_(field), fock_(fock) {
        require_e(e);
        if (!field.valid()) throw precondition_violated("characteristic must be 0 or prime");
    }

    int e() const { return e_; }
    const FieldSpec& field() const { return field_; }

    /// Decomposition number [W^lam : L^mu] over the field, or an interval.
    SolverCell cell(const Partition& lam, const Partition& mu) {
        if (lam == mu) return SolverCell::known(1);
        if (lam.size() != mu.size()) return SolverCell::known(0);
        auto cw1 = e_core_and_weight(lam, e_);
        auto cw2 = e_core_and_weight(mu, e_);
        if (cw1.core != cw2.core || cw1.weight != cw2.weight) return SolverCell::known(0);
        BlockData& bd = block_data(make_block(cw1.core, cw1.weight, e_));
        auto it = bd.index.find(lam);
        if (it == bd.index.end()) throw error("partition missing from its block (internal)");
        return decomposition_column(bd, mu)[it->second];
    }

    /// Adjustment entry adj_{lam,mu}, or an unknown cell.
    SolverCell adjustment(const Partition& lam, const Partition& mu) {
        if (lam == mu) return SolverCell::known(1);
        if (lam.size() != mu.size()) return SolverCell::known(0);
        auto cw1 = e_core_and_weight(lam, e_);
        auto cw2 = e_core_and_weight(mu, e_);
        if (cw1.core != cw2.core || cw1.weight != cw2.weight) return SolverCell::known(0);
        BlockData& bd = block_data(make_block(cw1.core, cw1.weight, e_));
        auto it = bd.index.find(lam);
        if (it == bd.index.end()) throw error("partition missing from its block (internal)");
        return adj_column(bd, mu)[it->second];
    }

    /// Whole decomposition matrix of a block (columns in descending lex).
    std::vector<std::vector<SolverCell>> solve(const BlockDescriptor& B) {
        std::vector<std::vector<SolverCell>> out;
        auto parts = block_data(B).parts; // copy: the memo tables may grow
        for (const auto& mu : parts) out.push_back(decomposition_column(block_data(B), mu));
        return out;
    }

    const std::vector<Partition>& block_partitions(const BlockDescriptor& B) {
        return block_data(B).parts;
    }

private:
    static constexpr long long kInf = std::numeric_limits<long long>::max();

    struct BlockData {
        BlockDescriptor desc;
        std::vector<Partition> parts; // descending lex
        std::map<Partition, int> index;
        std::vector<std::vector<std::pair<int, int>>> J; // row -> [(successor, J)]
        std::vector<std::vector<std::uint64_t>> above;   // Jantzen order closure
        std::size_t words = 0;
        bool leq(int i, int j) const { return (above[i][j / 64] >> (j % 64)) & 1ull; }
    };

    using BlockKey = std::pair<Partition, int>;
    using ColKey = std::pair<BlockKey, Partition>;

    int e_;
    FieldSpec field_;
    FockContext& fock_;
    std::map<BlockKey, BlockData> blocks_;
    std::map<ColKey, std::vector<SolverCell>> adj_cols_;
    std::set<ColKey> in_progress_;

    BlockData& block_data(const BlockDescriptor& B) {
        BlockKey key{B.core, B.weight};
        auto it = blocks_.find(key);
        if (it != blocks_.end()) return it->second;
        BlockData bd;
        bd.desc = B;
        bd.parts = enumerate_block(B);
        const std::size_t n = bd.parts.size();
        for (std::size_t i = 0; i < n; ++i) bd.index.emplace(bd.parts[i], static_cast<int>(i));
        bd.J.resize(n);
        std::vector<std::vector<int>> succ(n);
        int r = B.canonical_r();
        for (std::size_t i = 0; i < n; ++i) {
            std::map<int, int> row;
            for (auto& [tau, moves] : jantzen_successors(bd.parts[i], e_, r)) {
                int c = 0;
                for (const auto& m : moves)
                    c += (((m.l_up + m.l_down + 1) % 2 == 0) ? 1 : -1) *
                         (1 + field_.valuation(m.i));
                auto jt = bd.index.find(tau);
                if (jt == bd.index.end())
                    throw error("Jantzen move escaped the block (internal)");
                succ[i].push_back(jt->second);
                if (c != 0) row.emplace(jt->second, c);
            }
            bd.J[i].assign(row.begin(), row.end());
        }
        bd.words = (n + 63) / 64;
        bd.above.assign(n, std::vector<std::uint64_t>(bd.words, 0));
        // successors dominate, hence precede in descending lex: ascending pass
        for (std::size_t i = 0; i < n; ++i) {
            bd.above[i][i / 64] |= (1ull << (i % 64));
            for (int t : succ[i]) {
                if (static_cast<std::size_t>(t) >= i)
                    throw error("Jantzen successor does not precede its source (internal)");
                for (std::size_t wd = 0; wd < bd.words; ++wd)
                    bd.above[i][wd] |= bd.above[t][wd];
            }
        }
        return blocks_.emplace(key, std::move(bd)).first->second;
    }

    bool identity_block(const BlockDescriptor& B) const {
        int p = field_.p, w = B.weight;
        if (p == 0) return true;
        if (w <= 1) return true;                  // weight 0/1: field-independent
        if (w == 2 && p >= 3) return true;        // weight-2 adjustment is the identity
        if (p > w && is_rouquier(B)) return true; // Rouquier blocks, w < p
        return false;
    }

    bool identity_column(const BlockDescriptor& B, const Partition& mu) const {
        // identity Hecke adjustment for w <= 4, p >= 5, through e-regular columns
        return identity_block(B) ||
               (B.weight <= 4 && field_.p >= 5 && is_e_regular(mu, e_));
    }

    /// adj_{lam,mu} when some closed form applies, without recursion.
    std::optional<long long> shallow_adj(const Partition& lam, const Partition& mu) {
        if (lam == mu) return 1;
        if (lam.size() != mu.size()) return 0;
        auto cw1 = e_core_and_weight(lam, e_);
        auto cw2 = e_core_and_weight(mu, e_);
        if (cw1.core != cw2.core || cw1.weight != cw2.weight) return 0;
        if (identity_column(make_block(cw1.core, cw1.weight, e_), mu)) return 0; // lam != mu
        return std::nullopt;
    }

    std::optional<long long> determined_adj(const Partition& lam, const Partition& mu) {
        auto s = shallow_adj(lam, mu);
        if (s) return s;
        ColKey key{{e_core(lam, e_), e_weight(lam, e_)}, mu};
        if (in_progress_.count(key)) return std::nullopt;
        SolverCell c = adjustment(lam, mu);
        if (c.determined()) return c.value();
        return std::nullopt;
    }

    /// Normal-node transport: eps_j(nu) < eps_j(mu) kills the entry;
    /// eps_j(nu) = eps_j(mu) = k > 0 moves it k ranks down.
    std::optional<long long> lowerable_adj(const BlockDescriptor& B, const Partition& nu,
                                           const Partition& mu) {
        int r = B.canonical_r();
        for (int j = 0; j < e_; ++j) {
            int em = epsilon(mu, e_, j, r);
            if (em == 0) continue;
            int en = epsilon(nu, e_, j, r);
            if (en < em) return 0;
            if (en == em) {
                auto v = determined_adj(remove_normal(nu, e_, j, em, r),
                                        remove_normal(mu, e_, j, em, r));
                if (v) return v;
            }
        }
        return std::nullopt;
    }

    std::optional<long long> removal_adj(const Partition& nu, const Partition& mu) {
        if (nu.is_empty() || mu.is_empty()) return std::nullopt;
        if (nu.parts()[0] == mu.parts()[0]) {
            auto v = determined_adj(row_removal(nu), row_removal(mu));
            if (v) return v;
        }
        if (nu.length() == mu.length()) {
            auto v = determined_adj(column_removal(nu), column_removal(mu));
            if (v) return v;
        }
        return std::nullopt;
    }

    /// Bounded joint semisimple induction at the adjustment level: while both
    /// partitions stay non-exceptional the entry is carried upward; the walk
    /// stops at a block or column with identity adjustment or at a removal.
    std::optional<long long> up_search_adj(const BlockDescriptor& B, const Partition& nu,
                                           const Partition& mu) {
        int budget = 4 * e_;
        struct State {
            Partition l, m;
            BlockDescriptor blk;
        };
        std::set<std::pair<Partition, Partition>> seen{{nu, mu}};
        std::vector<State> frontier{{nu, mu, B}};
        for (int depth = 0; depth < budget && !frontier.empty(); ++depth) {
            std::vector<State> next;
            for (auto& st : frontier) {
                if (depth > 0) {
                    auto s = shallow_adj(st.l, st.m);
                    if (s) return s;
                    auto v = removal_adj(st.l, st.m);
                    if (v) return v;
                }
                int r = st.blk.canonical_r();
                for (const auto& pair : detect_up_pairs(st.blk)) {
                    int j = pair.residue, k = pair.k;
                    int el = epsilon(st.l, e_, j, r), em = epsilon(st.m, e_, j, r);
                    if (el == 0 && em == 0) {
                        // phi_j = k for both: carry along F~_j^k
                        Partition l2 = add_conormal(st.l, e_, j, k, r);
                        Partition m2 = add_conormal(st.m, e_, j, k, r);
                        if (seen.insert({l2, m2}).second)
                            next.push_back({std::move(l2), std::move(m2), pair.upper});
                    }
                }
            }
            frontier = std::move(next);
        }
        return std::nullopt;
    }

    const std::vector<SolverCell>& adj_column(BlockData& bd, const Partition& mu) {
        ColKey key{{bd.desc.core, bd.desc.weight}, mu};
        auto it = adj_cols_.find(key);
        if (it != adj_cols_.end()) return it->second;
        const std::size_t n = bd.parts.size();
        const int jm = bd.index.at(mu);
        std::vector<SolverCell> adj(n);
        if (identity_column(bd.desc, mu)) {
            for (std::size_t i = 0; i < n; ++i)
                adj[i] = SolverCell::known(static_cast<int>(i) == jm ? 1 : 0);
            return adj_cols_.emplace(key, std::move(adj)).first->second;
        }
        in_progress_.insert(key);

        // d_C column of the block (v-polynomials, for the 0-or-v rule and for
        // assembling decomposition numbers from adjustment entries)
        std::vector<VPoly> dC = fock_.column(bd.parts, mu, e_);

        for (std::size_t i = 0; i < n; ++i) {
            if (static_cast<int>(i) == jm) adj[i] = SolverCell::known(1);
            else if (!bd.leq(static_cast<int>(i), jm)) adj[i] = SolverCell::known(0);
        }

        // char-0 values d_C(tau, sigma)(1), fetched by whole columns on demand
        std::map<int, std::vector<long long>> d0_col; // sigma index -> column at v=1
        auto d0 = [&](int t, int s) -> long long {
            if (s == jm) return dC[t].at_one();
            auto itc = d0_col.find(s);
            if (itc == d0_col.end()) {
                auto col = fock_.column(bd.parts, bd.parts[s], e_);
                std::vector<long long> v(n);
                for (std::size_t i2 = 0; i2 < n; ++i2) v[i2] = col[i2].at_one();
                itc = d0_col.emplace(s, std::move(v)).first;
            }
            return itc->second[t];
        };

        // W_F(tau) interval from the adjustment entries above tau
        auto wf = [&](int t) {
            SolverCell out{0, 0};
            for (std::size_t s = 0; s < n; ++s) {
                int si = static_cast<int>(s);
                if (si != t && !bd.leq(t, si)) continue;
                if (!bd.leq(si, jm) && si != jm) continue;
                long long d = (si == t) ? 1 : d0(t, si);
                if (d == 0) continue;
                const SolverCell& a = adj[s];
                out.lo += d * a.lo;
                out.hi = (out.hi == kInf || a.hi == kInf) ? kInf : out.hi + d * a.hi;
            }
            return out;
        };

        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < n; ++i) {
                SolverCell& c = adj[i];
                if (c.determined()) continue;
                const Partition& nu = bd.parts[i];
                std::optional<long long> v;
                // Jantzen-Schaper: bound W_F(nu) by the recursion, then peel
                // the known part of the column sum off it.
                {
                    long long blo = 0, bhi = 0;
                    bool lo_open = false;
                    for (auto [t, j] : bd.J[i]) {
                        SolverCell tc = wf(t);
                        if (j > 0) {
                            blo += j * tc.lo;
                            bhi = (tc.hi == kInf || bhi == kInf) ? kInf : bhi + j * tc.hi;
                        } else {
                            if (tc.hi == kInf) lo_open = true;
                            else blo += j * tc.hi;
                            bhi = (bhi == kInf) ? kInf : bhi + j * tc.lo;
                        }
                    }
                    // rest = W_F(nu) - adj[nu] (all other terms of the column sum)
                    SolverCell rest{0, 0};
                    for (std::size_t s = 0; s < n && rest.hi != kInf; ++s) {
                        int si = static_cast<int>(s);
                        if (si == static_cast<int>(i)) continue;
                        if (!bd.leq(static_cast<int>(i), si)) continue;
                        if (!bd.leq(si, jm) && si != jm) continue;
                        long long d = d0(static_cast<int>(i), si);
                        if (d == 0) continue;
                        const SolverCell& a = adj[s];
                        rest.lo += d * a.lo;
                        rest.hi = (a.hi == kInf) ? kInf : rest.hi + d * a.hi;
                    }
                    if (bhi == 0) {
                        // B_F = 0 forces W_F = 0, so the whole column sum dies
                        v = 0;
                    } else if (bhi != kInf && !lo_open && blo == bhi && bhi <= 1 &&
                               rest.determined()) {
                        v = bhi - rest.value(); // W_F = B_F <= 1 exactly
                    } else if (bhi != kInf && rest.lo != kInf) {
                        // W_F <= B_F gives adj <= B_F - rest.lo; with adj >= 0
                        // a vanishing gap pins the entry
                        if (bhi - rest.lo <= 0) v = 0;
                    }
                }
                if (!v) v = lowerable_adj(bd.desc, nu, mu);
                if (!v) v = removal_adj(nu, mu);
                if (!v && field_.p > bd.desc.weight) {
                    // d in {0, v} and vanishing intermediate entries
                    const VPoly& d = dC[i];
                    bool small = d.is_zero() || d == VPoly::monomial(1, 1);
                    if (small) {
                        bool mids_zero = true;
                        for (std::size_t s = 0; s < n && mids_zero; ++s) {
                            int si = static_cast<int>(s);
                            if (si == static_cast<int>(i) || si == jm) continue;
                            if (!bd.leq(static_cast<int>(i), si) || !bd.leq(si, jm)) continue;
                            if (!(adj[s].determined() && adj[s].value() == 0)) mids_zero = false;
                        }
                        if (mids_zero) v = 0;
                    }
                }
                if (v) {
                    c = SolverCell::known(*v);
                    changed = true;
                }
            }
        }
        // bounded semisimple induction for the stragglers
        for (std::size_t i = 0; i < n; ++i) {
            if (adj[i].determined()) continue;
            auto v = up_search_adj(bd.desc, bd.parts[i], mu);
            if (v) adj[i] = SolverCell::known(*v);
        }
        in_progress_.erase(key);
        return adj_cols_.emplace(key, std::move(adj)).first->second;
    }

    std::vector<SolverCell> decomposition_column(BlockData& bd, const Partition& mu) {
        const std::size_t n = bd.parts.size();
        const int jm = bd.index.at(mu);
        const auto adj = adj_column(bd, mu); // copy; fock columns may reallocate
        std::vector<VPoly> dC = fock_.column(bd.parts, mu, e_);
        // assemble W_F = sum_sigma d_C(.,sigma) adj[sigma]
        std::map<int, std::vector<long long>> d0_col;
        auto d0 = [&](int t, int s) -> long long {
            if (s == jm) return dC[t].at_one();
            auto itc = d0_col.find(s);
            if (itc == d0_col.end()) {
                auto col = fock_.column(bd.parts, bd.parts[s], e_);
                std::vector<long long> v(n);
                for (std::size_t i2 = 0; i2 < n; ++i2) v[i2] = col[i2].at_one();
                itc = d0_col.emplace(s, std::move(v)).first;
            }
            return itc->second[t];
        };
        std::vector<SolverCell> out(n);
        for (std::size_t i = 0; i < n; ++i) {
            SolverCell acc{0, 0};
            for (std::size_t s = 0; s < n; ++s) {
                int si = static_cast<int>(s);
                if (si != static_cast<int>(i) && !bd.leq(static_cast<int>(i), si)) continue;
                if (!bd.leq(si, jm) && si != jm) continue;
                long long d = (si == static_cast<int>(i)) ? 1 : d0(static_cast<int>(i), si);
                if (d == 0) continue;
                acc.lo += d * adj[s].lo;
                acc.hi = (acc.hi == kInf || adj[s].hi == kInf) ? kInf : acc.hi + d * adj[s].hi;
            }
            out[i] = acc.determined() ? SolverCell::known(acc.lo) : acc;
        }
        return out;
    }
};

/// B_F(lambda, mu) over the complex numbers, from the char-0 matrix.
inline long long js_bound_C(const Partition& lam, const Partition& mu, int e,
                            FockContext& fock = fock_context()) {
    if (lam.size() != mu.size()) return 0;
    long long B = 0;
    int w = std::max(e_weight(lam, e), e_weight(mu, e));
    int r = canonical_beads(std::max(lam.length(), mu.length()), e, w);
    for (auto& [tau, moves] : jantzen_successors(lam, e, r)) {
        int J = 0;
        for (const auto& m : moves)
            J += (((m.l_up + m.l_down + 1) % 2 == 0) ? 1 : -1);
        if (J != 0) B += static_cast<long long>(J) * fock.v_decomposition(tau, mu, e).at_one();
    }
    return B;
}

struct DerivativeMismatch {
    Partition lam, mu;
    long long derivative = 0;
    long long bound = 0;
};

/// Checks (d/dv d^e_{lambda,mu})(1) = B_C(lambda,mu) over a whole block.
inline std::vector<DerivativeMismatch> derivative_check(const BlockDescriptor& B,
                                                        FockContext& fock = fock_context()) {
    std::vector<DerivativeMismatch> bad;
    auto parts = enumerate_block(B);
    int r = B.canonical_r();
    // at v = 1 the whole char-0 matrix of the block, column by column
    std::vector<std::vector<VPoly>> cols;
    for (const auto& mu : parts) cols.push_back(fock.column(parts, mu, B.e));
    std::map<Partition, int> index;
    for (std::size_t i = 0; i < parts.size(); ++i) index.emplace(parts[i], static_cast<int>(i));
    for (std::size_t i = 0; i < parts.size(); ++i) {
        std::vector<std::pair<int, int>> Jrow;
        for (auto& [tau, moves] : jantzen_successors(parts[i], B.e, r)) {
            int J = 0;
            for (const auto& m : moves)
                J += (((m.l_up + m.l_down + 1) % 2 == 0) ? 1 : -1);
            if (J != 0) Jrow.emplace_back(index.at(tau), J);
        }
        for (std::size_t j = 0; j < parts.size(); ++j) {
            long long d1 = cols[j][i].derivative_at_one();
            long long bc = 0;
            for (auto [t, J] : Jrow) bc += static_cast<long long>(J) * cols[j][t].at_one();
            if (d1 != bc) bad.push_back({parts[i], parts[j], d1, bc});
        }
    }
    return bad;
}

} // namespace qschur
