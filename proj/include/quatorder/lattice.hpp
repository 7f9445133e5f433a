#ifndef QUATORDER_LATTICE_HPP
#define QUATORDER_LATTICE_HPP

#include "quatorder/algebra.hpp"
#include "quatorder/arith.hpp"

#include <array>
#include <compare>
#include <functional>
#include <optional>
#include <vector>

namespace quatorder {

/*
 * Full-rank lattice in Q^4 (coordinates over 1, i, j, k), stored in canonical
 * form: the minimal positive d with d*L integral, together with the row-style
 * HNF of d*L.  Structural equality is lattice equality.
 */
class Lattice4 {
  public:
    /* Throws RankDeficient if the rows span less than rank 4. */
    static Lattice4 from_rows(std::vector<QuatElement> const& rows);
    static Lattice4 standard();

    Integer const& denominator() const { return denom_; }
    IntMat const& hnf() const { return hnf_; }
    std::array<QuatElement, 4> const& basis() const { return basis_; }
    RatMat basis_matrix() const;

    /* Determinant of the basis matrix; positive. */
    Rational det() const;
    /* Coordinates with respect to basis(). */
    std::array<Rational, 4> coords(QuatElement const& x) const;
    bool contains(QuatElement const& x) const;
    bool contains(Lattice4 const& other) const;
    Lattice4 scaled(Rational const& s) const;

    bool operator==(Lattice4 const& o) const { return denom_ == o.denom_ && hnf_ == o.hnf_; }
    std::strong_ordering operator<=>(Lattice4 const& o) const;

  private:
    Lattice4() = default;
    Integer denom_;
    IntMat hnf_;
    std::array<QuatElement, 4> basis_;
};

Lattice4 canonicalize(std::vector<QuatElement> const& rows);
Lattice4 lattice_sum(Lattice4 const& L, Lattice4 const& M);
Lattice4 lattice_intersect(Lattice4 const& L, Lattice4 const& M);
Lattice4 lattice_mul(Lattice4 const& L, Lattice4 const& M, QuatAlgebra const& A);
Lattice4 conj_lattice(Lattice4 const& L, QuatAlgebra const& A);
Lattice4 left_multiply(QuatElement const& alpha, Lattice4 const& L, QuatAlgebra const& A);
Lattice4 right_multiply(Lattice4 const& L, QuatElement const& alpha, QuatAlgebra const& A);
/* {x : trd(x conj(y)) in Z for all y in L} */
Lattice4 dual_lattice(Lattice4 const& L, QuatAlgebra const& A);
/* Positive generator of the fractional ideal spanned by {nrd(x) : x in L}. */
Rational norm_generator(Lattice4 const& L, QuatAlgebra const& A);
/* det(L) / det(M); equals |M / L| when L is contained in M. */
Rational index(Lattice4 const& L, Lattice4 const& M);

/* {x : x L in L}, {x : L x in L}, and the two-sided version. */
Lattice4 left_stabilizer(Lattice4 const& L, QuatAlgebra const& A);
Lattice4 right_stabilizer(Lattice4 const& L, QuatAlgebra const& A);
Lattice4 two_sided_stabilizer(Lattice4 const& L, QuatAlgebra const& A);

/* Entries trd(b_i conj(b_j)); nrd(sum x_i b_i) = x G x^T / 2. */
using GramMatrix = RatMat;
GramMatrix gram_matrix(std::vector<QuatElement> const& basis, QuatAlgebra const& A);
GramMatrix gram_matrix(Lattice4 const& L, QuatAlgebra const& A);

struct LllResult {
    GramMatrix gram;
    /* Unimodular, rows are the reduced basis in terms of the input basis:
     * gram == U * input * U^T. */
    IntMat transform;
};
LllResult lll_reduce(GramMatrix const& gram);

/* Half the Gram form, x G x^T / 2. */
Rational form_value(GramMatrix const& gram, std::vector<Integer> const& x);

/*
 * Exact Fincke-Pohst enumeration of all integer vectors x with
 * x G x^T / 2 <= bound (or == bound when `exact`), G positive definite.
 * Coordinates refer to the input basis.  Results are ordered
 * lexicographically from the last coordinate to the first.
 */
std::vector<std::vector<Integer>> form_vectors(GramMatrix const& gram, Rational const& bound, bool exact);
/* Number of vectors with each value 0..bound in steps of `step`. */
std::vector<std::size_t> theta_counts(GramMatrix const& gram, Rational const& step, int terms);

/* Integral U with U G U^T == H for positive definite G, H of equal size,
 * by backtracking over vectors of G with the diagonal values of H. */
std::optional<IntMat> form_isometry(GramMatrix const& G, GramMatrix const& H);

/* Lattice vectors of reduced norm exactly t. */
std::vector<QuatElement> short_vectors(Lattice4 const& L, QuatAlgebra const& A, Rational const& t);
std::vector<QuatElement> short_vectors(std::vector<QuatElement> const& basis, QuatAlgebra const& A, Rational const& t);

/* Integer basis (as rows) of {x in Z^n : x . v = 0}. */
IntMat integer_kernel(std::vector<Integer> const& v);

}  // namespace quatorder

#endif
