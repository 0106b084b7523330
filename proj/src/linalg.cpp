#include "wicksos/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace wicksos {

std::optional<std::vector<GaussRat>> solve_exact(
    std::vector<std::vector<GaussRat>> a, std::vector<GaussRat> b) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (!a[i][c].is_zero()) {
                sel = i;
                break;
            }
        }
        if (sel == rows) continue;
        std::swap(a[sel], a[r]);
        std::swap(b[sel], b[r]);
        GaussRat inv = GaussRat(1) / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            GaussRat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<GaussRat> x(cols);
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

namespace {

/// Reduce [A | b] to an independent set of rows; returns false on an
/// inconsistent system (0 = nonzero row).
bool reduce_rows(std::vector<std::vector<Rat>>& a, std::vector<Rat>& b) {
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::vector<Rat>> ra;
    std::vector<Rat> rb;
    std::vector<std::size_t> piv;  // pivot column of each kept row
    for (std::size_t i = 0; i < rows; ++i) {
        std::vector<Rat> row = a[i];
        Rat rhs = b[i];
        for (std::size_t k = 0; k < ra.size(); ++k) {
            const Rat& f = row[piv[k]];
            if (f.is_zero()) continue;
            Rat factor = f;  // kept rows are normalized at their pivot
            for (std::size_t j = 0; j < cols; ++j) row[j] -= factor * ra[k][j];
            rhs -= factor * rb[k];
        }
        std::size_t pc = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (!row[j].is_zero()) {
                pc = j;
                break;
            }
        }
        if (pc == cols) {
            if (!rhs.is_zero()) return false;
            continue;
        }
        Rat inv = Rat(1) / row[pc];
        for (std::size_t j = 0; j < cols; ++j) row[j] *= inv;
        rhs *= inv;
        ra.push_back(std::move(row));
        rb.push_back(std::move(rhs));
        piv.push_back(pc);
    }
    a = std::move(ra);
    b = std::move(rb);
    return true;
}

}  // namespace

std::optional<std::vector<Rat>> solve_nonnegative(
    std::vector<std::vector<Rat>> a, std::vector<Rat> b) {
    std::size_t cols = a.empty() ? 0 : a[0].size();
    if (!reduce_rows(a, b)) return std::nullopt;
    std::size_t rows = a.size();
    if (rows == 0) return std::vector<Rat>(cols);  // 0 = 0 only

    for (std::size_t i = 0; i < rows; ++i) {
        if (b[i] < Rat(0)) {
            for (auto& v : a[i]) v = -v;
            b[i] = -b[i];
        }
    }

    // Phase-I simplex tableau: columns [structural | artificial], one
    // artificial per row; minimize the sum of artificials with Bland's rule.
    std::size_t total = cols + rows;
    std::vector<std::vector<Rat>> t(rows, std::vector<Rat>(total));
    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
        t[i][cols + i] = Rat(1);
        basis[i] = cols + i;
    }
    // reduced costs: cost(art) = 1, others 0; start basis = artificials
    std::vector<Rat> red(total);
    Rat obj(0);
    for (std::size_t j = 0; j < total; ++j) {
        Rat colsum(0);
        for (std::size_t i = 0; i < rows; ++i) colsum += t[i][j];
        red[j] = (j >= cols ? Rat(1) : Rat(0)) - colsum;
    }
    for (std::size_t i = 0; i < rows; ++i) obj += b[i];

    while (true) {
        std::size_t enter = total;
        for (std::size_t j = 0; j < total; ++j) {
            if (red[j] < Rat(0)) {
                enter = j;
                break;
            }
        }
        if (enter == total) break;
        std::size_t leave = rows;
        Rat best;
        for (std::size_t i = 0; i < rows; ++i) {
            if (!(t[i][enter] > Rat(0))) continue;
            Rat ratio = b[i] / t[i][enter];
            if (leave == rows || ratio < best ||
                (ratio == best && basis[i] < basis[leave])) {
                leave = i;
                best = ratio;
            }
        }
        if (leave == rows)
            throw std::logic_error("solve_nonnegative: unbounded Phase-I objective");
        Rat pin = Rat(1) / t[leave][enter];
        for (std::size_t j = 0; j < total; ++j) t[leave][j] *= pin;
        b[leave] *= pin;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter].is_zero()) continue;
            Rat f = t[i][enter];
            for (std::size_t j = 0; j < total; ++j) t[i][j] -= f * t[leave][j];
            b[i] -= f * b[leave];
        }
        Rat rf = red[enter];
        for (std::size_t j = 0; j < total; ++j) red[j] -= rf * t[leave][j];
        obj += rf * b[leave];
        basis[leave] = enter;
    }

    if (!obj.is_zero()) return std::nullopt;
    std::vector<Rat> x(cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (basis[i] < cols) x[basis[i]] = b[i];
        // a basic artificial at value zero is harmless
    }
    return x;
}

}  // namespace wicksos
