#include "runpaths/tables.hpp"

#include <algorithm>

#include "runpaths/euler.hpp"

namespace runpaths::tables {

std::string kind_name(TableKind kind) {
    switch (kind) {
        case TableKind::S: return "s";
        case TableKind::T: return "t";
        case TableKind::TPrime: return "tprime";
        case TableKind::P: return "p";
        case TableKind::Q: return "q";
        case TableKind::Euler: return "euler";
        case TableKind::DyckDown: return "dyck-down";
        case TableKind::DyckUp: return "dyck-up";
    }
    return "?";
}

bool CountTable::contains(long n, long m) const {
    return m >= m_min && m <= m_max() && n >= n_min && n <= n_max();
}

const std::optional<Int>& CountTable::at(long n, long m) const {
    if (!contains(n, m)) throw std::out_of_range("CountTable::at: cell outside the grid");
    return cells[static_cast<size_t>(m - m_min)][static_cast<size_t>(n - n_min)];
}

namespace {

void require_run_bound(int r, int minimum, const char* who) {
    if (r < minimum)
        throw std::invalid_argument(std::string(who) + ": r must be >= " +
                                    std::to_string(minimum));
}

// dense working grid over columns 0..n_max, rows lo..hi
struct Grid {
    long lo, hi;
    std::vector<std::vector<Int>> cols;  // cols[n][m - lo]

    Grid(long n_max, long lo_, long hi_)
        : lo(lo_), hi(hi_),
          cols(static_cast<size_t>(n_max) + 1,
               std::vector<Int>(static_cast<size_t>(hi_ - lo_) + 1, Int(0))) {}

    Int& at(long n, long m) { return cols[static_cast<size_t>(n)][static_cast<size_t>(m - lo)]; }

    // out-of-range columns read as zero
    Int get(long n, long m) const {
        if (n < 0 || n >= static_cast<long>(cols.size())) return Int(0);
        if (m < lo || m > hi) throw std::out_of_range("Grid::get: row outside working range");
        return cols[static_cast<size_t>(n)][static_cast<size_t>(m - lo)];
    }
};

CountTable crop(const Grid& grid, TableKind kind, int r, long n_max, long m_min, long m_max) {
    CountTable table;
    table.kind = kind;
    table.r = r;
    table.n_min = 0;
    table.m_min = m_min;
    table.cells.resize(static_cast<size_t>(m_max - m_min) + 1);
    for (long m = m_min; m <= m_max; ++m) {
        auto& row = table.cells[static_cast<size_t>(m - m_min)];
        row.reserve(static_cast<size_t>(n_max) + 1);
        for (long n = 0; n <= n_max; ++n) row.emplace_back(grid.get(n, m));
    }
    return table;
}

}  // namespace

CountTable build_s_table(long n_max, long m_min, long m_max, int r) {
    require_run_bound(r, 2, "build_s_table");
    if (n_max < 0 || m_min > m_max) throw std::invalid_argument("build_s_table: bad bounds");

    // Work over enough rows that every column can be anchored at its zero
    // s_n(n-1) and filled in both directions.
    long lo = std::min(m_min, 0L);
    long hi = std::max(m_max, n_max);
    Grid grid(n_max, lo, hi);

    for (long m = lo; m <= hi; ++m) grid.at(0, m) = 1;
    for (long n = 1; n <= n_max; ++n) {
        long anchor = n - 1;  // s_n(n-1) = 0
        for (long m = anchor + 1; m <= hi; ++m)
            grid.at(n, m) = grid.get(n - 1, m) + grid.get(n, m - 1) - grid.get(n - r, m - 1);
        for (long m = anchor - 1; m >= lo; --m)
            grid.at(n, m) = grid.get(n, m + 1) - grid.get(n - 1, m + 1) + grid.get(n - r, m);
    }
    return crop(grid, TableKind::S, r, n_max, m_min, m_max);
}

CountTable build_t_table(long n_max, long m_max, int r) {
    require_run_bound(r, 2, "build_t_table");
    if (n_max < 0 || m_max < 0) throw std::invalid_argument("build_t_table: bad bounds");

    Grid grid(n_max, 0, m_max);
    for (long m = 0; m <= std::min<long>(m_max, r - 1); ++m) grid.at(0, m) = 1;
    for (long n = 1; n <= n_max; ++n) {
        for (long m = n; m <= m_max; ++m) {
            Int sum(0);
            for (long i = std::max(n, m + 1 - r); i <= m; ++i) sum += grid.get(n - 1, i);
            grid.at(n, m) = sum;
        }
    }
    return crop(grid, TableKind::T, r, n_max, 0, m_max);
}

CountTable build_tprime_table(long n_max, long m_max, int r) {
    CountTable table = build_t_table(n_max, m_max, r);
    table.kind = TableKind::TPrime;
    for (long m = table.m_min; m <= table.m_max(); ++m)
        for (long n = m; n <= table.n_max(); ++n)
            table.cells[static_cast<size_t>(m - table.m_min)][static_cast<size_t>(n)] = Int(0);
    return table;
}

CountTable build_p_table(long n_max, long m_max, int r) {
    require_run_bound(r, 3, "build_p_table");
    if (n_max < 0 || m_max < 0) throw std::invalid_argument("build_p_table: bad bounds");

    const long c = r - 2;
    // enough rows that every column has its combinatorial anchor
    long hi = std::max(m_max, (n_max + c - 1) / c);
    Grid grid(n_max, 0, hi);

    // combinatorial region row by row; row m holds columns 0..c(m+1), the top
    // c of which are the staircase zeros
    grid.at(0, 0) = 1;
    for (long m = 1; m <= hi; ++m) {
        long top = std::min(n_max, c * (m + 1));
        for (long n = 0; n <= std::min(top, c * m); ++n) {
            Int sum(0);
            for (long j = 0; j < r; ++j) {
                long k = n - j;
                if (k >= 0 && k <= c * m) sum += grid.get(k, m - 1);
            }
            grid.at(n, m) = sum;
        }
        // staircase zeros already hold their default value 0
    }

    // polynomial extension below the staircase, column by column
    for (long n = 1; n <= n_max; ++n) {
        long anchor_row = (n + c - 1) / c - 1;  // smallest m with n <= c(m+1)
        for (long m = anchor_row - 1; m >= 0; --m)
            grid.at(n, m) = grid.get(n, m + 1) - grid.get(n - 1, m + 1) + grid.get(n - r, m);
    }
    return crop(grid, TableKind::P, r, n_max, 0, m_max);
}

CountTable build_q_table(long n_max, long m_max, long alpha, int r) {
    require_run_bound(r, 2, "build_q_table");
    if (n_max < 0 || m_max < 0 || alpha < 0)
        throw std::invalid_argument("build_q_table: bad bounds");

    long hi = std::max(m_max, n_max - alpha - 1);
    Grid grid(n_max, 0, hi);
    for (long m = 0; m <= hi; ++m) grid.at(0, m) = 1;
    for (long n = 1; n <= n_max; ++n) {
        // roots: q_n(0) = 0 for n <= alpha, q_n(n-alpha-1) = 0 beyond
        long anchor = (n <= alpha) ? 0 : n - alpha - 1;
        grid.at(n, anchor) = 0;
        for (long m = anchor + 1; m <= hi; ++m)
            grid.at(n, m) = grid.get(n, m - 1) + grid.get(n - 1, m) - grid.get(n - r, m - 1);
        for (long m = anchor - 1; m >= 0; --m)
            grid.at(n, m) = grid.get(n, m + 1) - grid.get(n - 1, m + 1) + grid.get(n - r, m);
    }
    CountTable table = crop(grid, TableKind::Q, r, n_max, 0, m_max);
    table.alpha = alpha;
    return table;
}

CountTable build_euler_table(long x_max, long k_max, int r) {
    if (x_max < 0 || k_max < 0) throw std::invalid_argument("build_euler_table: bad bounds");
    CountTable table;
    table.kind = TableKind::Euler;
    table.r = r;
    table.n_min = 0;
    table.m_min = 0;
    table.cells.resize(static_cast<size_t>(x_max) + 1);
    for (long x = 0; x <= x_max; ++x) {
        std::vector<Int> row = euler::euler_row(x, r, k_max);
        auto& cells_row = table.cells[static_cast<size_t>(x)];
        cells_row.reserve(row.size());
        for (Int& v : row) cells_row.emplace_back(std::move(v));
    }
    return table;
}

}  // namespace runpaths::tables
