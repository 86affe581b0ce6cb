#ifndef D0Q_TABLE1_HPP
#define D0Q_TABLE1_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "d0q/rational.hpp"

namespace d0q {

// One verified family row: 2*N*R as a rational function num(t)/den(t) of the
// family parameter, coefficients low to high.
struct TableRow {
    int N;
    int k;
    std::vector<long> num;
    std::vector<long> den;
};

inline const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows{
        {3, 1, {0, -1}, {1}},
        {4, 1, {-2}, {1}},
        {5, 1, {-3, 1}, {1}},
        {5, 2, {-1, -3}, {1}},
        {6, 1, {-4}, {1}},
        {7, 1, {-3, -3, 1}, {1}},
        {7, 2, {1, 1, -5}, {1}},
        {7, 3, {5, -9, 3}, {1}},
        {8, 1, {2, -8}, {0, 1}},
        {8, 3, {6, -8}, {0, 1}},
        {9, 1, {-5, 0, -3, 1}, {1}},
        {9, 2, {-1, 0, 3, -7}, {1}},
        {9, 4, {7, -18, 15, -5}, {1}},
        {10, 1, {-4, -4}, {1}},
        {10, 3, {8, -12}, {1}},
        {12, 1, {-10, 36, -48, 24}, {1, -3, 3, -1}},
        {12, 5, {-2, 12, -24, 24}, {1, -3, 3, -1}},
    };
    return rows;
}

inline Rational eval_int_poly(const std::vector<long>& c, const Rational& t) {
    Rational acc(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
    return acc;
}

// Expected R for the (N,k) row at parameter t.
inline Rational expected_R(const TableRow& row, const Rational& t) {
    Rational den = eval_int_poly(row.den, t);
    if (den == 0) throw std::domain_error("expected_R: denominator vanishes");
    return eval_int_poly(row.num, t) / den / (2 * row.N);
}

inline const TableRow& table_row(int N, int k) {
    for (const auto& r : table_rows())
        if (r.N == N && r.k == k) return r;
    throw std::invalid_argument("table_row: no row for N=" + std::to_string(N) +
                                " k=" + std::to_string(k));
}

// FNV-1a over the canonical serialization; guards against accidental edits.
inline std::uint64_t table_checksum() {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&](long v) {
        for (int i = 0; i < 8; ++i) {
            h ^= static_cast<std::uint64_t>(v >> (8 * i)) & 0xffu;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& r : table_rows()) {
        mix(r.N);
        mix(r.k);
        mix(static_cast<long>(r.num.size()));
        for (long c : r.num) mix(c);
        mix(static_cast<long>(r.den.size()));
        for (long c : r.den) mix(c);
    }
    return h;
}

} // namespace d0q

#endif
