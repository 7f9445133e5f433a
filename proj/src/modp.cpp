#include "quatorder/modp.hpp"

#include <stdexcept>

namespace quatorder::modp {

std::int64_t inv(std::int64_t a, std::int64_t p)
{
    a = reduce(a, p);
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1)
        throw std::domain_error("not invertible mod p");
    return reduce(t, p);
}

std::vector<Vec> rref(std::vector<Vec> rows, std::int64_t p)
{
    if (rows.empty())
        return rows;
    std::size_t n = rows[0].size();
    std::size_t r = 0;
    for (auto& row : rows)
        for (auto& x : row)
            x = reduce(x, p);
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < rows.size() && rows[piv][c] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[r]);
        std::int64_t f = inv(rows[r][c], p);
        for (auto& x : rows[r])
            x = (x * f) % p;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || rows[k][c] == 0)
                continue;
            std::int64_t g = rows[k][c];
            for (std::size_t j = 0; j < n; ++j)
                rows[k][j] = reduce(rows[k][j] - g * rows[r][j], p);
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

std::size_t rank(std::vector<Vec> const& rows, std::int64_t p) { return rref(rows, p).size(); }

bool in_span(std::vector<Vec> const& rref_basis, Vec const& v, std::int64_t p)
{
    Vec w = v;
    for (auto& x : w)
        x = reduce(x, p);
    for (auto const& b : rref_basis) {
        std::size_t c = 0;
        while (c < b.size() && b[c] == 0)
            ++c;
        if (c == b.size() || w[c] == 0)
            continue;
        std::int64_t g = w[c];
        for (std::size_t j = 0; j < w.size(); ++j)
            w[j] = reduce(w[j] - g * b[j], p);
    }
    for (auto x : w)
        if (x != 0)
            return false;
    return true;
}

std::vector<Vec> left_kernel(std::vector<Vec> const& m, std::size_t r, std::int64_t p)
{
    /* Row-reduce [M | I]; rows whose M-part vanishes give the kernel. */
    std::size_t n = r == 0 ? 0 : m[0].size();
    std::vector<Vec> aug(r, Vec(n + r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = reduce(m[i][j], p);
        aug[i][n + i] = 1;
    }
    std::size_t row = 0;
    for (std::size_t c = 0; c < n && row < r; ++c) {
        std::size_t piv = row;
        while (piv < r && aug[piv][c] == 0)
            ++piv;
        if (piv == r)
            continue;
        std::swap(aug[piv], aug[row]);
        std::int64_t f = inv(aug[row][c], p);
        for (auto& x : aug[row])
            x = (x * f) % p;
        for (std::size_t k = 0; k < r; ++k) {
            if (k == row || aug[k][c] == 0)
                continue;
            std::int64_t g = aug[k][c];
            for (std::size_t j = 0; j < n + r; ++j)
                aug[k][j] = reduce(aug[k][j] - g * aug[row][j], p);
        }
        ++row;
    }
    std::vector<Vec> out;
    for (std::size_t i = row; i < r; ++i)
        out.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(n), aug[i].end());
    return rref(out, p);
}

Vec solve_coords(std::vector<Vec> const& basis, Vec const& v, std::int64_t p)
{
    std::size_t n = basis.size();
    /* Solve c * B = v via the transpose system. */
    std::vector<Vec> aug(n, Vec(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = reduce(basis[j][i], p);
        aug[i][n] = reduce(v[i], p);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && aug[piv][c] == 0)
            ++piv;
        if (piv == n)
            throw std::domain_error("singular basis mod p");
        std::swap(aug[piv], aug[c]);
        std::int64_t f = inv(aug[c][c], p);
        for (auto& x : aug[c])
            x = (x * f) % p;
        for (std::size_t k = 0; k < n; ++k) {
            if (k == c || aug[k][c] == 0)
                continue;
            std::int64_t g = aug[k][c];
            for (std::size_t j = 0; j <= n; ++j)
                aug[k][j] = reduce(aug[k][j] - g * aug[c][j], p);
        }
    }
    Vec out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = aug[i][n];
    return out;
}

std::vector<Vec> projective_points(std::size_t n, std::int64_t p)
{
    std::vector<Vec> out;
    for (std::size_t lead = 0; lead < n; ++lead) {
        std::size_t tail = n - lead - 1;
        std::int64_t count = 1;
        for (std::size_t k = 0; k < tail; ++k)
            count *= p;
        for (std::int64_t idx = 0; idx < count; ++idx) {
            Vec v(n, 0);
            v[lead] = 1;
            std::int64_t t = idx;
            for (std::size_t k = 0; k < tail; ++k) {
                v[lead + 1 + k] = t % p;
                t /= p;
            }
            out.push_back(v);
        }
    }
    return out;
}

std::vector<std::vector<Vec>> all_subspaces(std::size_t n, std::int64_t p)
{
    /* Enumerate RREF matrices by pivot pattern. */
    std::vector<std::vector<Vec>> out;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<std::size_t> pivots;
        for (std::size_t c = 0; c < n; ++c)
            if (mask & (1u << c))
                pivots.push_back(c);
        /* free positions: row i, column c > pivot_i with c not a pivot */
        std::vector<std::pair<std::size_t, std::size_t>> free;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (std::size_t c = pivots[i] + 1; c < n; ++c)
                if (!(mask & (1u << c)))
                    free.emplace_back(i, c);
        std::int64_t count = 1;
        for (std::size_t k = 0; k < free.size(); ++k)
            count *= p;
        for (std::int64_t idx = 0; idx < count; ++idx) {
            std::vector<Vec> rows(pivots.size(), Vec(n, 0));
            for (std::size_t i = 0; i < pivots.size(); ++i)
                rows[i][pivots[i]] = 1;
            std::int64_t t = idx;
            for (auto const& [i, c] : free) {
                rows[i][c] = t % p;
                t /= p;
            }
            out.push_back(rows);
        }
    }
    return out;
}

}  // namespace quatorder::modp
