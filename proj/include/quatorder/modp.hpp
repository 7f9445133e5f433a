#ifndef QUATORDER_MODP_HPP
#define QUATORDER_MODP_HPP

#include <cstdint>
#include <vector>

namespace quatorder::modp {

using Vec = std::vector<std::int64_t>;

inline std::int64_t reduce(std::int64_t x, std::int64_t p)
{
    x %= p;
    return x < 0 ? x + p : x;
}

std::int64_t inv(std::int64_t a, std::int64_t p);

/* Reduced row echelon form of the span; zero rows dropped.  Canonical. */
std::vector<Vec> rref(std::vector<Vec> rows, std::int64_t p);
std::size_t rank(std::vector<Vec> const& rows, std::int64_t p);
bool in_span(std::vector<Vec> const& rref_basis, Vec const& v, std::int64_t p);
/* Basis of {c : c * M = 0} for an r x n matrix M given by rows. */
std::vector<Vec> left_kernel(std::vector<Vec> const& m, std::size_t r, std::int64_t p);
/* Coordinates of v in terms of an arbitrary basis (square, invertible). */
Vec solve_coords(std::vector<Vec> const& basis, Vec const& v, std::int64_t p);

/* All subspaces of F_p^n, each returned in RREF. */
std::vector<std::vector<Vec>> all_subspaces(std::size_t n, std::int64_t p);
/* Representatives of the projective points of F_p^n (first nonzero entry 1). */
std::vector<Vec> projective_points(std::size_t n, std::int64_t p);

}  // namespace quatorder::modp

#endif
