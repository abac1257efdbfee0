// wheel.hpp
// The six-column arrangement of the integers >= 2 under division by 6.
//
//   row 1:   2   3   4   5   6   7      columns  A B C D E F
//   row 2:   8   9  10  11  12  13
//   row x:   base + 6*(x-1)             base = 2..7 per column
//
// Each column is a residue class mod 6 (A->2, B->3, C->4, D->5, E->0,
// F->1). Even numbers land in A, C, E; everything in B above 3 is a
// multiple of 3; every prime >= 5 lands in D or F. The table is never
// materialized, columns and rows are plain arithmetic on the value.

#pragma once

#include <cstdint>

namespace goldbach {

enum class Column { A, B, C, D, E, F };

// Row-1 entry of the column (2..7).
constexpr uint64_t column_base(Column c) { return 2 + static_cast<uint64_t>(c); }

// Residue mod 6 shared by every integer in the column.
constexpr uint64_t column_residue(Column c) { return column_base(c) % 6; }

constexpr char column_name(Column c) { return "ABCDEF"[static_cast<int>(c)]; }

struct ColumnPosition {
    Column column;
    uint64_t row;    // x >= 1
    uint64_t value;  // column_base(column) + 6 * (row - 1)
};

// n mod 6. Rejects n < 2 (the table has no row for 0 or 1).
uint64_t residue_of(uint64_t n);

// The unique column whose residue equals n mod 6. Rejects n < 2.
Column column_of(uint64_t n);

// Column and row of n; inverse of value_at. Rejects n < 2.
ColumnPosition position_of(uint64_t n);

// column_base + 6*(row-1). Rejects row 0 and values past 64 bits.
uint64_t value_at(Column column, uint64_t row);

// True iff n sits in Column B and is composite, i.e. n > 3 (then 3 | n).
// Rejects n outside Column B.
bool is_column_b_composite(uint64_t n);

}  // namespace goldbach
