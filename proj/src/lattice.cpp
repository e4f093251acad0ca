// SPDX-License-Identifier: MIT
#include "cubmcf/lattice.hpp"

#include <algorithm>

namespace cubmcf {

namespace {
void axpy(IntVec3& y, const Int& q, const IntVec3& x) {
    for (int i = 0; i < 3; ++i) y[i] -= q * x[i];
}
bool is_zero(const IntVec3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }
}  // namespace

std::vector<IntVec3> hermite_form(std::vector<IntVec3> rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(), is_zero), rows.end());
    std::size_t r = 0;
    for (int col = 0; col < 3 && r < rows.size(); ++col) {
        for (;;) {
            std::size_t best = rows.size();
            for (std::size_t t = r; t < rows.size(); ++t)
                if (rows[t][col] != 0 && (best == rows.size() || abs(rows[t][col]) < abs(rows[best][col]))) best = t;
            if (best == rows.size()) break;
            std::swap(rows[r], rows[best]);
            bool done = true;
            for (std::size_t t = r + 1; t < rows.size(); ++t) {
                if (rows[t][col] == 0) continue;
                axpy(rows[t], floor_div(rows[t][col], rows[r][col]), rows[r]);
                if (rows[t][col] != 0) done = false;
            }
            if (done) break;
        }
        if (rows[r][col] == 0) continue;
        if (rows[r][col] < 0)
            for (auto& v : rows[r]) v = -v;
        for (std::size_t t = 0; t < r; ++t) axpy(rows[t], floor_div(rows[t][col], rows[r][col]), rows[r]);
        ++r;
    }
    rows.resize(r);
    return rows;
}

bool lattice_contains(const std::vector<IntVec3>& hnf, IntVec3 v) {
    for (const auto& row : hnf) {
        int col = 0;
        while (row[col] == 0) ++col;
        if (!mpz_divisible_p(v[col].get_mpz_t(), row[col].get_mpz_t())) return false;
        axpy(v, v[col] / row[col], row);
    }
    return is_zero(v);
}

}  // namespace cubmcf
