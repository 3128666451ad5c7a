#include "axial/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace axial {

namespace {

using Entry = std::pair<std::size_t, mpz_class>;
using IntRow = std::vector<Entry>;  // sorted by column, no zeros

mpz_class entry_at(const IntRow& row, std::size_t col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != row.end() && it->first == col) return it->second;
    return 0;
}

void remove_content(IntRow& row) {
    if (row.empty()) return;
    mpz_class g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g > 1)
        for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// row := p * row - a * pivot_row, then strip the content.
void eliminate(IntRow& row, const IntRow& pivot_row, const mpz_class& p, const mpz_class& a) {
    IntRow out;
    out.reserve(row.size() + pivot_row.size());
    auto i = row.begin();
    auto j = pivot_row.begin();
    while (i != row.end() || j != pivot_row.end()) {
        if (j == pivot_row.end() || (i != row.end() && i->first < j->first)) {
            out.emplace_back(i->first, p * i->second);
            ++i;
        } else if (i == row.end() || j->first < i->first) {
            out.emplace_back(j->first, -a * j->second);
            ++j;
        } else {
            mpz_class v = p * i->second - a * j->second;
            if (v != 0) out.emplace_back(i->first, std::move(v));
            ++i;
            ++j;
        }
    }
    remove_content(out);
    row = std::move(out);
}

}  // namespace

Reduction reduce(const std::vector<SparseVector>& columns, std::size_t rows,
                 const std::vector<SparseVector>& rhs) {
    Reduction red;
    red.rows = rows;
    red.cols = columns.size();
    const std::size_t ncols = columns.size();

    // Gather rational rows, then clear denominators row by row.
    std::vector<std::vector<std::pair<std::size_t, Rational>>> qrows(rows);
    auto scatter = [&](const SparseVector& col, std::size_t c) {
        for (const auto& [r, v] : col) {
            if (r >= rows) throw std::out_of_range("reduce: row index out of range");
            if (sgn(v) != 0) qrows[r].emplace_back(c, v);
        }
    };
    for (std::size_t c = 0; c < ncols; ++c) scatter(columns[c], c);
    for (std::size_t c = 0; c < rhs.size(); ++c) scatter(rhs[c], ncols + c);

    std::vector<IntRow> work;
    work.reserve(rows);
    for (auto& qr : qrows) {
        if (qr.empty()) continue;
        std::sort(qr.begin(), qr.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        mpz_class l = 1;
        for (const auto& [c, v] : qr) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
        IntRow row;
        row.reserve(qr.size());
        for (const auto& [c, v] : qr) row.emplace_back(c, mpz_class(l / v.get_den()) * v.get_num());
        remove_content(row);
        work.push_back(std::move(row));
    }

    // Gauss-Jordan, column by column.
    std::vector<bool> used(work.size(), false);
    for (std::size_t col = 0; col < ncols; ++col) {
        std::size_t best = work.size();
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (used[i] || work[i].empty() || work[i].front().first != col) continue;
            if (best == work.size() || work[i].size() < work[best].size()) best = i;
        }
        if (best == work.size()) continue;
        used[best] = true;
        const IntRow& prow = work[best];
        const mpz_class p = prow.front().second;
        for (std::size_t i = 0; i < work.size(); ++i) {
            if (i == best) continue;
            mpz_class a = entry_at(work[i], col);
            if (a == 0) continue;
            eliminate(work[i], prow, p, a);
        }
        red.pivot_columns.push_back(col);
    }
    // Collect pivot rows in column order; everything else is zero on [0, ncols).
    std::vector<const IntRow*> pivot_rows;
    std::vector<const IntRow*> zero_rows;
    for (std::size_t i = 0; i < work.size(); ++i) {
        if (work[i].empty()) continue;
        if (used[i]) pivot_rows.push_back(&work[i]);
        else zero_rows.push_back(&work[i]);
    }
    std::sort(pivot_rows.begin(), pivot_rows.end(),
              [](const IntRow* a, const IntRow* b) { return a->front().first < b->front().first; });
    red.rank = pivot_rows.size();

    std::vector<bool> is_pivot(ncols, false);
    for (auto c : red.pivot_columns) is_pivot[c] = true;

    for (std::size_t f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        DenseVector v(ncols, Rational(0));
        v[f] = 1;
        for (const IntRow* row : pivot_rows) {
            mpz_class a = entry_at(*row, f);
            if (a == 0) continue;
            Rational q(-a, row->front().second);
            q.canonicalize();
            v[row->front().first] = q;
        }
        red.nullspace.push_back(std::move(v));
    }

    for (std::size_t s = 0; s < rhs.size(); ++s) {
        const std::size_t col = ncols + s;
        bool consistent = true;
        for (const IntRow* row : zero_rows)
            if (entry_at(*row, col) != 0) {
                consistent = false;
                break;
            }
        DenseVector x(ncols, Rational(0));
        for (const IntRow* row : pivot_rows) {
            mpz_class b = entry_at(*row, col);
            if (b == 0) continue;
            Rational q(b, row->front().second);
            q.canonicalize();
            x[row->front().first] = q;
        }
        red.solutions.push_back({std::move(x), consistent});
    }
    return red;
}

std::size_t rank_of(const std::vector<SparseVector>& columns, std::size_t rows) {
    return reduce(columns, rows).rank;
}

SparseVector apply(const std::vector<SparseVector>& columns, const DenseVector& x) {
    if (x.size() != columns.size()) throw std::invalid_argument("apply: size mismatch");
    SparseVector out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (sgn(x[c]) == 0) continue;
        for (const auto& [r, v] : columns[c]) {
            Rational& slot = out[r];
            slot += v * x[c];
            if (sgn(slot) == 0) out.erase(r);
        }
    }
    return out;
}

}  // namespace axial
