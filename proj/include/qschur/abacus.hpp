#pragma once

#include "qschur/partition.hpp"

#include <map>
#include <optional>
#include <set>
#include <utility>

namespace qschur {

// Abacus positions: position p sits on runner p mod e, row p / e.
// Residue convention, fixed once for the whole library:
//   residue(position p) = (p - r) mod e,  equivalently node (row,col) -> (col - row) mod e.
// "Position 0 has an occupied preceding position".

/// Abacus display with e runners and r beads (the set beta of occupied positions).
class AbacusDisplay {
public:
    AbacusDisplay(int e, std::set<int> beta) : e_(e), beta_(std::move(beta)) {
        require_e(e_);
        for (int p : beta_)
            if (p < 0) throw precondition_violated("negative bead position");
    }

    static AbacusDisplay from_partition(const Partition& lambda, int e, int r) {
        require_e(e);
        if (r < lambda.length()) throw too_few_beads("need r >= l(lambda)");
        std::set<int> beta;
        for (int i = 1; i <= r; ++i) beta.insert(lambda.part(i) + r - i);
        return AbacusDisplay(e, std::move(beta));
    }

    int e() const { return e_; }
    int beads() const { return static_cast<int>(beta_.size()); }
    const std::set<int>& beta() const { return beta_; }
    bool occupied(int p) const { return p >= 0 && beta_.count(p) > 0; }
    int max_position() const { return beta_.empty() ? -1 : *beta_.rbegin(); }
    int residue_of_position(int p) const { return mod(p - beads(), e_); }
    int residue_of_runner(int i) const { return mod(i - beads(), e_); }
    /// Runner holding the residue-j nodes.
    int runner_of_residue(int j) const { return mod(j + beads(), e_); }

    Partition to_partition() const {
        int r = beads();
        std::vector<int> parts;
        int i = 1;
        for (auto it = beta_.rbegin(); it != beta_.rend(); ++it, ++i) {
            int part = *it - (r - i);
            if (part < 0) throw precondition_violated("invalid beta set");
            parts.push_back(part);
        }
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        return Partition(std::move(parts));
    }

    AbacusDisplay with_bead_moved(int from, int to) const {
        std::set<int> b = beta_;
        if (!b.erase(from) || !b.insert(to).second)
            throw precondition_violated("illegal bead move");
        return AbacusDisplay(e_, std::move(b));
    }

    std::vector<int> runner_rows(int i) const {
        std::vector<int> rows;
        for (int p : beta_)
            if (p % e_ == i) rows.push_back(p / e_);
        return rows;
    }

    /// Plain-text dump, rows of 'b'/'-', for debugging.
    std::string dump() const {
        int rows = max_position() / e_ + 1;
        std::string s;
        for (int m = 0; m < rows; ++m) {
            for (int i = 0; i < e_; ++i) s += occupied(m * e_ + i) ? 'b' : '-';
            s += '\n';
        }
        return s;
    }

private:
    int e_;
    std::set<int> beta_;
};

/// Bead count used for signature and block bookkeeping: a multiple of e,
/// at least l + e*w + e, so that residue labels are stable across a block
/// and position 0 is occupied.
inline int canonical_beads(int length, int e, int weight) {
    int base = length + e * weight + e;
    return ((base + e - 1) / e) * e;
}

namespace detail {
inline int default_r(const Partition& lambda, int e) {
    return canonical_beads(lambda.length(), e, lambda.size() / e + 1);
}
} // namespace detail

struct CoreWeight {
    Partition core;
    int weight = 0;
};

inline CoreWeight e_core_and_weight(const Partition& lambda, int e) {
    require_e(e);
    int r = detail::default_r(lambda, e);
    auto A = AbacusDisplay::from_partition(lambda, e, r);
    std::set<int> core_beta;
    int weight = 0;
    for (int i = 0; i < e; ++i) {
        auto rows = A.runner_rows(i);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            weight += rows[k] - static_cast<int>(k);
            core_beta.insert(static_cast<int>(k) * e + i);
        }
    }
    return {AbacusDisplay(e, std::move(core_beta)).to_partition(), weight};
}

inline Partition e_core(const Partition& lambda, int e) { return e_core_and_weight(lambda, e).core; }
inline int e_weight(const Partition& lambda, int e) { return e_core_and_weight(lambda, e).weight; }

/// (-1)^t over any maximal e-hook stripping; the parity of t is well defined.
inline int relative_e_sign(const Partition& lambda, int e) {
    require_e(e);
    int r = detail::default_r(lambda, e);
    std::set<int> beta = AbacusDisplay::from_partition(lambda, e, r).beta();
    long t = 0;
    bool moved = true;
    while (moved) {
        moved = false;
        for (auto it = beta.rbegin(); it != beta.rend(); ++it) {
            int p = *it;
            if (p - e >= 0 && !beta.count(p - e)) {
                for (int q = p - e + 1; q < p; ++q)
                    if (beta.count(q)) ++t;
                beta.erase(p);
                beta.insert(p - e);
                moved = true;
                break;
            }
        }
    }
    return (t % 2 == 0) ? +1 : -1;
}

/// Runner notation data: per-runner quotient partitions and bead counts.
struct RunnerNotation {
    std::vector<Partition> quotient; // lambda(0), ..., lambda(e-1)
    std::vector<int> bead_counts;    // b_0, ..., b_{e-1}
};

inline RunnerNotation e_quotient(const Partition& lambda, int e, int r) {
    auto A = AbacusDisplay::from_partition(lambda, e, r);
    RunnerNotation out;
    out.quotient.resize(e);
    out.bead_counts.resize(e);
    for (int i = 0; i < e; ++i) {
        auto rows = A.runner_rows(i); // ascending
        int b = static_cast<int>(rows.size());
        out.bead_counts[i] = b;
        std::set<int> single(rows.begin(), rows.end());
        out.quotient[i] = AbacusDisplay(2, std::set<int>()).to_partition(); // placeholder
        // single-runner display read as an abacus with one runner: part_k = row_k - (b-k)
        std::vector<int> parts;
        int k = 1;
        for (auto it = single.rbegin(); it != single.rend(); ++it, ++k)
            parts.push_back(*it - (b - k));
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
        out.quotient[i] = Partition(std::move(parts));
    }
    return out;
}

/// Rebuild the partition from runner notation.
inline Partition from_quotient(const RunnerNotation& rn, int e) {
    std::set<int> beta;
    for (int i = 0; i < e; ++i) {
        int b = rn.bead_counts[i];
        const Partition& q = rn.quotient[i];
        if (b < q.length()) throw too_few_beads("runner bead count below quotient length");
        for (int k = 1; k <= b; ++k) {
            int row = q.part(k) + b - k;
            beta.insert(row * e + i);
        }
    }
    return AbacusDisplay(e, std::move(beta)).to_partition();
}

/// Occupied positions of residue j whose preceding position is vacant.
inline std::vector<int> removable_positions(const AbacusDisplay& A, int j) {
    int i = A.runner_of_residue(j);
    std::vector<int> out;
    for (int p : A.beta())
        if (p % A.e() == i && p > 0 && !A.occupied(p - 1)) out.push_back(p);
    return out;
}

/// Vacant positions of residue j whose preceding position is occupied.
inline std::vector<int> addable_positions(const AbacusDisplay& A, int j) {
    int i = A.runner_of_residue(j);
    std::vector<int> out;
    int top = A.max_position() + 2 * A.e();
    for (int p = i; p <= top; p += A.e())
        if (!A.occupied(p) && (p == 0 || A.occupied(p - 1))) out.push_back(p);
    return out;
}

struct Signature {
    // (sign, position), positions ascending; sign '-' removable, '+' addable.
    std::vector<std::pair<char, int>> signs;
    // after iterated "-+" cancellation:
    std::vector<int> normal;   // surviving '-' positions, ascending
    std::vector<int> conormal; // surviving '+' positions, ascending
};

/// j-signature read from the top row downwards, with iterated "-+" cancellation.
inline Signature j_signature(const AbacusDisplay& A, int j) {
    Signature sig;
    int e = A.e();
    int i = A.runner_of_residue(j);
    int top = A.max_position() + 2 * e;
    for (int p = i; p <= top; p += e) {
        bool has = A.occupied(p);
        bool pred = (p == 0) ? true : A.occupied(p - 1);
        if (has && !pred) sig.signs.emplace_back('-', p);
        else if (!has && pred) sig.signs.emplace_back('+', p);
    }
    // '-' opens, '+' closes; unmatched signs survive.
    std::vector<int> stack;
    for (auto [s, p] : sig.signs) {
        if (s == '-') {
            stack.push_back(p);
        } else if (!stack.empty()) {
            stack.pop_back();
        } else {
            sig.conormal.push_back(p);
        }
    }
    sig.normal = std::move(stack);
    return sig;
}

inline int epsilon(const Partition& lambda, int e, int j, int r = -1) {
    if (r < 0) r = detail::default_r(lambda, e);
    return static_cast<int>(j_signature(AbacusDisplay::from_partition(lambda, e, r), j).normal.size());
}

inline int phi(const Partition& lambda, int e, int j, int r = -1) {
    if (r < 0) r = detail::default_r(lambda, e);
    return static_cast<int>(j_signature(AbacusDisplay::from_partition(lambda, e, r), j).conormal.size());
}

/// E~_j^t: remove the t highest j-normal nodes (smallest positions).
inline Partition remove_normal(const Partition& lambda, int e, int j, int t, int r = -1) {
    if (r < 0) r = detail::default_r(lambda, e);
    auto A = AbacusDisplay::from_partition(lambda, e, r);
    auto sig = j_signature(A, j);
    if (t > static_cast<int>(sig.normal.size()))
        throw not_enough_normal_nodes("t exceeds epsilon_j");
    std::set<int> beta = A.beta();
    for (int k = 0; k < t; ++k) {
        int p = sig.normal[k];
        beta.erase(p);
        beta.insert(p - 1);
    }
    return AbacusDisplay(e, std::move(beta)).to_partition();
}

/// F~_j^t: add the t lowest j-conormal nodes (largest positions).
inline Partition add_conormal(const Partition& lambda, int e, int j, int t, int r = -1) {
    if (r < 0) r = detail::default_r(lambda, e);
    auto A = AbacusDisplay::from_partition(lambda, e, r);
    auto sig = j_signature(A, j);
    if (t > static_cast<int>(sig.conormal.size()))
        throw not_enough_conormal_nodes("t exceeds phi_j");
    std::set<int> beta = A.beta();
    for (int k = 0; k < t; ++k) {
        int p = sig.conormal[sig.conormal.size() - 1 - static_cast<std::size_t>(k)];
        beta.erase(p - 1);
        beta.insert(p);
    }
    return AbacusDisplay(e, std::move(beta)).to_partition();
}

enum class RunnerKind { Empty, Full };

/// Append an empty runner on the right of every display, jointly for a family of
/// partitions from one block. Bead count is rebased to a multiple of e+1 first.
/// Returns the partitions read off the (e+1)-runner displays.
inline std::vector<Partition> insert_empty_runner(const std::vector<Partition>& lams, int e) {
    require_e(e);
    int maxl = 0;
    for (const auto& l : lams) maxl = std::max(maxl, l.length());
    int r = ((maxl + e) / (e + 1) + 1) * (e + 1);
    std::vector<Partition> out;
    out.reserve(lams.size());
    for (const auto& lam : lams) {
        auto A = AbacusDisplay::from_partition(lam, e, r);
        std::set<int> nb;
        for (int p : A.beta()) nb.insert((p / e) * (e + 1) + (p % e));
        out.push_back(AbacusDisplay(e + 1, std::move(nb)).to_partition());
    }
    return out;
}

/// True iff the last bead on runner i occurs before every unoccupied space.
inline bool runner_empty_eligible(const AbacusDisplay& A, int i) {
    int e = A.e();
    int last_bead = -1;
    for (int p : A.beta())
        if (p % e == i) last_bead = p;
    if (last_bead < 0) return true; // no beads at all
    // first unoccupied space anywhere on the abacus
    int first_gap = 0;
    while (A.occupied(first_gap)) ++first_gap;
    return last_bead < first_gap;
}

/// True iff the first unoccupied space on runner i occurs after every bead.
inline bool runner_full_eligible(const AbacusDisplay& A, int i) {
    int e = A.e();
    int first_gap_on_i = i;
    while (A.occupied(first_gap_on_i)) first_gap_on_i += e;
    return first_gap_on_i > A.max_position();
}

/// Delete runner i (and its beads) from the display; positions renumber onto
/// e-1 runners. The runner must satisfy the respective eligibility condition.
inline Partition delete_runner(const AbacusDisplay& A, int i, RunnerKind kind) {
    int e = A.e();
    if (e < 3) throw precondition_violated("runner deletion needs e >= 3");
    bool ok = (kind == RunnerKind::Empty) ? runner_empty_eligible(A, i) : runner_full_eligible(A, i);
    if (!ok) throw precondition_violated("runner fails the deletion precondition");
    std::set<int> nb;
    for (int p : A.beta()) {
        int m = p / e, ri = p % e;
        if (ri == i) continue;
        nb.insert(m * (e - 1) + (ri > i ? ri - 1 : ri));
    }
    return AbacusDisplay(e - 1, std::move(nb)).to_partition();
}

} // namespace qschur
