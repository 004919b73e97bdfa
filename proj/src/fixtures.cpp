#include "runpaths/fixtures.hpp"

#include <map>
#include <sstream>

#include "runpaths/euler.hpp"
#include "runpaths/paths.hpp"

namespace runpaths::fixtures {

namespace {

using tables::CountTable;
using tables::TableKind;

// Rows are written top-down exactly as printed (highest m first); "." marks a
// cell the table leaves blank (odd-parity points of the Dyck grids).

// Dyck paths to (n, m) avoiding uuuu; columns n = 0..13, rows m = 7..0.
constexpr const char* kDyckUpR4 = R"(
.  .  .  .  .  .  .  .  .  .  .  1  .  10
.  .  .  .  .  .  .  .  .  .  3  .  19 .
.  .  .  .  .  .  .  1  .  6  .  28 .  112
.  .  .  .  .  .  2  .  9  .  33 .  116 .
.  .  .  1  .  3  .  10 .  32 .  101 . 321
.  .  1  .  3  .  8  .  23 .  68 .  205 .
.  1  .  2  .  5  .  13 .  36 .  104 . 309
1  .  1  .  2  .  5  .  13 .  36 .  104 .
)";

// Dyck paths to (n, m) avoiding dddd; columns n = 0..13, rows m = 7..0.
// The published m = 5 row is typeset one column short; values sit on the
// parity-consistent cells n = 5, 7, 9, 11, 13 as in every other row.
constexpr const char* kDyckDownR4 = R"(
.  .  .  .  .  .  .  1  .  8  .  44 .  208
.  .  .  .  .  .  1  .  7  .  35 .  154 .
.  .  .  .  .  1  .  6  .  27 .  110 . 423
.  .  .  .  1  .  5  .  20 .  75 .  270 .
.  .  .  1  .  4  .  14 .  48 .  161 . 536
.  .  1  .  3  .  9  .  28 .  87 .  273 .
.  1  .  2  .  5  .  14 .  40 .  118 . 357
1  .  1  .  2  .  5  .  13 .  36 .  104 .
)";

// s_n(m) for r = 4 with polynomial extension; columns n = 0..8, rows m = 7..-1.
constexpr const char* kSR4 = R"(
1  7  27  75  161  273  357  309  0
1  6  20  48  87   118  104  0    -222
1  5  14  28  40   36   0    -76  -182
1  4  9   14  13   0    -27  -62  -93
1  3  5   5   0    -10  -22  -30  -31
1  2  2   0   -4   -8   -10  -8   -5
1  1  0   -2  -3   -3   -2   0    0
1  0  -1  -2  0    0    0    0    0
1  -1 -1  -1  3    -1   -1   -1   3
)";

// t_n(m) for r = 4; columns n = 0..8, rows m = 9..0. The printed diagonal is
// parenthesized (zeroed in t'); the bottom rows trail off into the zeros
// stated by the definition.
constexpr const char* kTR4 = R"(
0  0  1   19  112  397  1027  1966  2905
0  0  3   28  116  321  630   939   939
0  0  6   33  101  205  309   309   0
0  1  9   32  68   104  104   0     0
0  2  10  23  36   36   0     0     0
0  3  8   13  13   0    0     0     0
1  3  5   5   0    0    0     0     0
1  2  2   0   0    0    0     0     0
1  1  0   0   0    0    0     0     0
1  0  0   0   0    0    0     0     0
)";

// p_n(m) for r = 4 with extension below the staircase; n = 0..8, m = 8..0.
constexpr const char* kPR4 = R"(
1  8  36  119  315  699  1338  2246  3344
1  7  28  83   197  391  667   991   1295
1  6  21  55   115  200  297   379   419
1  5  15  34   61   90   112   116   101
1  4  10  19   28   33   32    23    13
1  3  6   9    10   8    5     0     0
1  2  3   3    2    0    0     -2    2
1  1  1   0    0    -1   1     -2    4
1  0  0   -1   1    -1   2     -4    7
)";

// q_n(m; 2) for r = 4; n = 0..8, m = 6..0.
constexpr const char* kQR4A2 = R"(
1  6  21  56  120  214  320  386  321
1  5  15  35  65   99   121  101  0
1  4  10  20  31   38   32   0    -70
1  3  6   10  12   10   0    -22  -58
1  2  3   4   3    0    -7   -18  -33
1  1  1   1   0    -2   -6   -10  -15
1  0  0   0   0    -2   -4   -4   -5
)";

// Euler coefficients binom(x, k)_4; k = 0..8, x = 8..0. Row x = 4 is the
// published erratum row (see header).
constexpr const char* kEulerR4 = R"(
1  8  36  120  322  728  1428  2472  3823
1  7  28  84   203  413  728   1128  1554
1  6  21  56   120  216  336   456   546
1  5  15  35   65   101  135   155   155
1  4  10  20   31   40   31    20    10
1  3  6   10   12   12   10    6     3
1  2  3   4    3    2    1     0     0
1  1  1   1    0    0    0     0     0
1  0  0   0    0    0    0     0     0
)";

CountTable parse_fixture(const char* text, TableKind kind, int r, long n_min, long m_top,
                         std::optional<long> alpha = std::nullopt) {
    std::istringstream in(text);
    std::vector<std::vector<std::optional<Int>>> rows_top_down;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream cells(line);
        std::vector<std::optional<Int>> row;
        std::string token;
        while (cells >> token) {
            if (token == ".")
                row.emplace_back(std::nullopt);
            else
                row.emplace_back(Int(token));
        }
        if (!row.empty()) rows_top_down.push_back(std::move(row));
    }
    if (rows_top_down.empty()) throw std::logic_error("empty fixture block");
    for (const auto& row : rows_top_down)
        if (row.size() != rows_top_down.front().size())
            throw std::logic_error("ragged fixture block");
    CountTable table;
    table.kind = kind;
    table.r = r;
    table.alpha = alpha;
    table.n_min = n_min;
    table.m_min = m_top - static_cast<long>(rows_top_down.size()) + 1;
    table.cells.assign(rows_top_down.rbegin(), rows_top_down.rend());
    return table;
}

struct FixtureSet {
    std::vector<std::string> names;
    std::map<std::string, CountTable> tables;
};

const FixtureSet& fixture_set() {
    static const FixtureSet set = [] {
        FixtureSet s;
        auto add = [&s](const std::string& name, CountTable table) {
            s.names.push_back(name);
            s.tables.emplace(name, std::move(table));
        };
        add("dyck-up-r4", parse_fixture(kDyckUpR4, TableKind::DyckUp, 4, 0, 7));
        add("dyck-down-r4", parse_fixture(kDyckDownR4, TableKind::DyckDown, 4, 0, 7));
        add("s-r4", parse_fixture(kSR4, TableKind::S, 4, 0, 7));
        add("t-r4", parse_fixture(kTR4, TableKind::T, 4, 0, 9));
        add("p-r4", parse_fixture(kPR4, TableKind::P, 4, 0, 8));
        add("q-r4-a2", parse_fixture(kQR4A2, TableKind::Q, 4, 0, 6, 2));
        add("euler-r4", parse_fixture(kEulerR4, TableKind::Euler, 4, 0, 8));
        return s;
    }();
    return set;
}

// The print leaves a cell blank when no admissible path reaches it: odd
// parity, y > x, or beyond the wedge the run bound allows (at most r-1 steps
// of the restricted kind per run).
bool dyck_cell_reachable(TableKind kind, long x, long y, int r) {
    if ((x + y) % 2 != 0 || y > x) return false;
    long east = (x - y) / 2, north = (x + y) / 2;
    if (kind == TableKind::DyckUp) return north <= (static_cast<long>(r) - 1) * (east + 1);
    return east <= (static_cast<long>(r) - 1) * (north + 1);
}

CountTable compute_dyck_grid(TableKind kind, long n_max, long m_max, int r) {
    CountTable table;
    table.kind = kind;
    table.r = r;
    table.n_min = 0;
    table.m_min = 0;
    for (long m = 0; m <= m_max; ++m) {
        std::vector<std::optional<Int>> row;
        for (long n = 0; n <= n_max; ++n) {
            if (!dyck_cell_reachable(kind, n, m, r)) {
                row.emplace_back(std::nullopt);
                continue;
            }
            row.emplace_back(kind == TableKind::DyckUp ? paths::dyck_avoid_up(n, m, r)
                                                       : paths::dyck_avoid_down(n, m, r));
        }
        table.cells.push_back(std::move(row));
    }
    return table;
}

}  // namespace

const std::vector<std::string>& fixture_names() { return fixture_set().names; }

const tables::CountTable& printed(const std::string& name) {
    const auto& set = fixture_set();
    auto it = set.tables.find(name);
    if (it == set.tables.end())
        throw std::invalid_argument("no printed fixture named '" + name + "'");
    return it->second;
}

bool erratum_whitelisted(const std::string& name, long n, long m) {
    return name == "euler-r4" && m == 4 && n >= 6 && n <= 8;
}

tables::CountTable compute_counterpart(const std::string& name) {
    const tables::CountTable& ref = printed(name);
    if (name == "dyck-up-r4")
        return compute_dyck_grid(TableKind::DyckUp, ref.n_max(), ref.m_max(), ref.r);
    if (name == "dyck-down-r4")
        return compute_dyck_grid(TableKind::DyckDown, ref.n_max(), ref.m_max(), ref.r);
    if (name == "s-r4") return tables::build_s_table(ref.n_max(), ref.m_min, ref.m_max(), ref.r);
    if (name == "t-r4") return tables::build_t_table(ref.n_max(), ref.m_max(), ref.r);
    if (name == "p-r4") return tables::build_p_table(ref.n_max(), ref.m_max(), ref.r);
    if (name == "q-r4-a2")
        return tables::build_q_table(ref.n_max(), ref.m_max(), *ref.alpha, ref.r);
    if (name == "euler-r4") return tables::build_euler_table(ref.m_max(), ref.n_max(), ref.r);
    throw std::invalid_argument("no computed counterpart for '" + name + "'");
}

std::vector<Diff> diff_all() {
    std::vector<Diff> diffs;
    for (const std::string& name : fixture_names()) {
        const tables::CountTable& ref = printed(name);
        tables::CountTable computed = compute_counterpart(name);
        for (long m = ref.m_min; m <= ref.m_max(); ++m) {
            for (long n = ref.n_min; n <= ref.n_max(); ++n) {
                const auto& a = ref.at(n, m);
                const auto& b = computed.at(n, m);
                if (a == b) continue;
                diffs.push_back({name, n, m, a, b, erratum_whitelisted(name, n, m)});
            }
        }
    }
    return diffs;
}

CheckReport check_table_reproduction() {
    CheckReport rep;
    rep.name = "table-reproduction";
    long cells = 0;
    for (const std::string& name : fixture_names()) {
        const tables::CountTable& ref = printed(name);
        cells += (ref.m_max() - ref.m_min + 1) * (ref.n_max() - ref.n_min + 1);
    }
    rep.checks_run = cells;

    long whitelisted_seen = 0;
    for (const Diff& d : diff_all()) {
        std::ostringstream where;
        where << d.table << " n=" << d.n << " m=" << d.m;
        auto show = [](const std::optional<Int>& v) {
            return v ? v->get_str() : std::string("absent");
        };
        if (d.whitelisted) {
            ++whitelisted_seen;
            rep.notes.push_back("whitelisted erratum at " + where.str() + ": printed " +
                                show(d.printed) + ", computed " + show(d.computed));
        } else {
            rep.fail("printed table mismatch", where.str(),
                     "printed=" + show(d.printed) + " computed=" + show(d.computed));
        }
    }
    // the three erratum cells must genuinely differ from the recomputation
    if (whitelisted_seen != 3)
        rep.fail("erratum whitelist", "euler-r4 row x=4",
                 "expected 3 whitelisted diffs, saw " + std::to_string(whitelisted_seen));
    return rep;
}

}  // namespace runpaths::fixtures
