#include "goldbach/wheel.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace goldbach {

namespace {

void require_tabled(uint64_t n) {
    if (n < 2) {
        throw std::invalid_argument("no column for " + std::to_string(n) +
                                    ": the table starts at 2");
    }
}

}  // namespace

uint64_t residue_of(uint64_t n) {
    require_tabled(n);
    return n % 6;
}

Column column_of(uint64_t n) {
    require_tabled(n);
    // residue 0 1 2 3 4 5  ->  E F A B C D
    static constexpr Column kByResidue[6] = {Column::E, Column::F, Column::A,
                                             Column::B, Column::C, Column::D};
    return kByResidue[n % 6];
}

ColumnPosition position_of(uint64_t n) {
    const Column c = column_of(n);
    return {c, (n - column_base(c)) / 6 + 1, n};
}

uint64_t value_at(Column column, uint64_t row) {
    if (row < 1) throw std::invalid_argument("row index starts at 1");
    const uint64_t base = column_base(column);
    if (row - 1 > (std::numeric_limits<uint64_t>::max() - base) / 6)
        throw std::overflow_error("column value exceeds 64 bits");
    return base + 6 * (row - 1);
}

bool is_column_b_composite(uint64_t n) {
    if (column_of(n) != Column::B)
        throw std::invalid_argument(std::to_string(n) + " is not in Column B");
    return n > 3;
}

}  // namespace goldbach
