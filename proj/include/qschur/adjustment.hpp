#pragma once

#include "qschur/jantzen.hpp"

namespace qschur {

/// Entry of an adjustment matrix with provenance.
struct AdjustmentEntry {
    long long value = 0;
    bool determined = false;
};

/// The unitriangular matrix A with D_F = D_C * A for one block. Columns whose
/// decomposition column the solver pinned completely are Determined; the rest
/// stay Unknown, never guessed.
struct AdjustmentMatrix {
    BlockDescriptor block;
    std::vector<Partition> parts; // descending lex; rows and columns
    std::vector<std::vector<AdjustmentEntry>> entries; // [row][col]

    const AdjustmentEntry& at(std::size_t i, std::size_t j) const { return entries[i][j]; }

    /// Restrict rows and columns to e-regular partitions (the Hecke matrix).
    AdjustmentMatrix hecke_submatrix() const {
        AdjustmentMatrix H;
        H.block = block;
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (is_e_regular(parts[i], block.e)) {
                keep.push_back(i);
                H.parts.push_back(parts[i]);
            }
        for (std::size_t i : keep) {
            std::vector<AdjustmentEntry> row;
            for (std::size_t j : keep) row.push_back(entries[i][j]);
            H.entries.push_back(std::move(row));
        }
        return H;
    }
};

/// Solve D_F = D_C * A column by column: wherever the solver determined a full
/// decomposition column, unitriangular back-substitution yields that column
/// of A exactly. Asserts the theorem's constraints on every determined entry.
inline AdjustmentMatrix adjustment_matrix(const BlockDescriptor& B, const FieldSpec& field,
                                          FockContext& fock = fock_context()) {
    DecompositionSolver solver(B.e, field, fock);
    AdjustmentMatrix A;
    A.block = B;
    A.parts = solver.block_partitions(B);
    const std::size_t n = A.parts.size();
    auto D = solver.solve(B); // D[col][row], columns in descending lex

    // char-0 matrix, also column-major
    std::vector<std::vector<long long>> D0(n, std::vector<long long>(n, 0));
    for (std::size_t j = 0; j < n; ++j) {
        auto col = fock.column(A.parts, A.parts[j], B.e);
        for (std::size_t i = 0; i < n; ++i) D0[j][i] = col[i].at_one();
    }

    JantzenOrder order(B.e);
    A.entries.assign(n, std::vector<AdjustmentEntry>(n));
    for (std::size_t j = 0; j < n; ++j) {
        bool full = true;
        for (std::size_t i = 0; i < n; ++i) full &= D[j][i].determined();
        if (!full) continue;
        // back-substitute: D[j][i] = sum_{k<=i} D0[k][i] * a[k], D0[i][i] = 1
        std::vector<long long> a(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            long long s = D[j][i].value();
            for (std::size_t k = 0; k < i; ++k)
                if (D0[k][i] != 0 && a[k] != 0) s -= D0[k][i] * a[k];
            a[i] = s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (a[i] < 0)
                throw non_integral_solution("negative adjustment entry (inconsistent solve)");
            if (i == j && a[i] != 1)
                throw non_integral_solution("adjustment diagonal is not 1");
            if (a[i] != 0 && !order.leq(A.parts[i], A.parts[j]))
                throw non_integral_solution("adjustment entry outside the Jantzen order");
            A.entries[i][j] = {a[i], true};
        }
    }
    return A;
}

} // namespace qschur
