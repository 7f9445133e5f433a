#ifndef QUATORDER_ARITH_HPP
#define QUATORDER_ARITH_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace quatorder {

using Integer = mpz_class;
/* mpq_class keeps values in lowest terms with positive denominator as long
 * as every constructor from a raw numerator/denominator pair goes through
 * make_rational(). */
using Rational = mpq_class;

Rational make_rational(Integer const& num, Integer const& den);
Rational parse_rational(std::string const& text);
std::string to_string(Rational const& q);
std::string to_string(Integer const& n);

Integer floor_div(Integer const& a, Integer const& b);
Integer floor_of(Rational const& q);
Integer ceil_of(Rational const& q);
Integer isqrt_floor(Integer const& n);
bool is_square(Integer const& n, Integer* root = nullptr);

/* gcd of the fractional ideal generated by a list of rationals; zero entries
 * are ignored, all-zero input yields 0. */
Rational rational_gcd(std::vector<Rational> const& values);

bool is_prime(std::int64_t n);
std::int64_t next_prime(std::int64_t n);
/* Trial division; fine for the sizes seen here. */
std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n);
std::vector<std::int64_t> prime_divisors(Integer const& n);
int valuation(Integer n, std::int64_t p);
std::int64_t to_i64(Integer const& n);

/* Reduce a rational with denominator prime to m into [0, m). */
std::int64_t mod_residue(Rational const& q, std::int64_t m);
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

/* Dense row-major matrix used for small exact linear algebra. */
template <typename T>
class Mat {
  public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Mat identity(std::size_t n)
    {
        Mat m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    T const& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    bool operator==(Mat const& o) const
    {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

    Mat transpose() const
    {
        Mat t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMat = Mat<Integer>;
using RatMat = Mat<Rational>;

template <typename T>
Mat<T> operator*(Mat<T> const& a, Mat<T> const& b)
{
    Mat<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

RatMat to_rational(IntMat const& m);
Rational determinant(RatMat m);
/* Throws RankDeficient when singular. */
RatMat inverse(RatMat const& m);
/* Basis of the rational right kernel {x : m x = 0}, as columns of the result. */
RatMat kernel(RatMat const& m);

/* Row-style Hermite normal form: returns the nonzero rows of the echelon form
 * (positive pivots, entries above each pivot reduced into [0, pivot)). */
IntMat hermite_normal_form(IntMat const& m);

}  // namespace quatorder

#endif
