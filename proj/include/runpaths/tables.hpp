#pragma once

/**
 * Count tables built by pure recurrence, independently of the closed forms.
 *
 * Grids carry explicit index offsets so cells can be addressed in the natural
 * (n, m) coordinates, including negative m for the extended s-table. Cells a
 * table genuinely does not define (odd-parity points of the Dyck grids) are
 * absent, never zero.
 */

#include <optional>
#include <string>
#include <vector>

#include "runpaths/exact.hpp"

namespace runpaths::tables {

enum class TableKind { S, T, TPrime, P, Q, Euler, DyckDown, DyckUp };

std::string kind_name(TableKind kind);

struct CountTable {
    TableKind kind;
    int r = 0;
    std::optional<long> alpha;  // Q only
    long n_min = 0;             // column coordinate of cells[.][0]
    long m_min = 0;             // row coordinate of cells[0][.]
    // cells[row][col], row-major in ascending m
    std::vector<std::vector<std::optional<Int>>> cells;

    long n_max() const { return n_min + static_cast<long>(cells.empty() ? 0 : cells[0].size()) - 1; }
    long m_max() const { return m_min + static_cast<long>(cells.size()) - 1; }
    bool contains(long n, long m) const;
    const std::optional<Int>& at(long n, long m) const;
};

// s_n(m) = s_{n-1}(m) + s_n(m-1) - s_{n-r}(m-1), anchored at s_0 = 1 and
// s_n(n-1) = 0, extended to all requested m (negative rows included).
CountTable build_s_table(long n_max, long m_min, long m_max, int r);

// t_n(m) = sum_{i=max(n, m+1-r)}^{m} t_{n-1}(i), with t_0 = 1 on 0..r-1.
CountTable build_t_table(long n_max, long m_max, int r);

// Same with the diagonal (and everything below) set to zero.
CountTable build_tprime_table(long n_max, long m_max, int r);

// Rotated table: row recurrence p_n(m) = sum_{j<r} p_{n-j}(m-1) inside the
// staircase, polynomial extension below it. Requires r >= 3.
CountTable build_p_table(long n_max, long m_max, int r);

// Sheffer table with q_n = Euler column for n <= alpha and root line
// q_n(n-alpha-1) = 0 beyond, filled by the same difference recurrence as p.
CountTable build_q_table(long n_max, long m_max, long alpha, int r);

// Euler coefficient grid binom(x, k)_r for x = 0..x_max, k = 0..k_max
// (presentation helper; rows come from euler_row).
CountTable build_euler_table(long x_max, long k_max, int r);

}  // namespace runpaths::tables
