#ifndef QUATORDER_ALGEBRA_HPP
#define QUATORDER_ALGEBRA_HPP

#include "quatorder/arith.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace quatorder {

/* t + x i + y j + z k */
struct QuatElement {
    std::array<Rational, 4> c{};

    QuatElement() = default;
    QuatElement(Rational t, Rational x, Rational y, Rational z) : c{std::move(t), std::move(x), std::move(y), std::move(z)} {}
    static QuatElement scalar(Rational const& s) { return QuatElement(s, 0, 0, 0); }

    Rational const& operator[](std::size_t i) const { return c[i]; }
    Rational& operator[](std::size_t i) { return c[i]; }

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
    bool operator==(QuatElement const& o) const { return c == o.c; }
};

QuatElement operator+(QuatElement const& u, QuatElement const& v);
QuatElement operator-(QuatElement const& u, QuatElement const& v);
QuatElement operator-(QuatElement const& u);
QuatElement operator*(Rational const& s, QuatElement const& u);
std::string to_string(QuatElement const& u);

/* Place at which a Hilbert symbol is evaluated; 0 encodes the real place. */
using Place = std::int64_t;
constexpr Place infinite_place = 0;

int hilbert_symbol(Rational const& a, Rational const& b, Place p);

/* The algebra (a, b | Q) with i^2 = a, j^2 = b, ij = -ji = k. */
class QuatAlgebra {
  public:
    QuatAlgebra(Rational a, Rational b);
    /* Same as the constructor, but rejects indefinite algebras. */
    static QuatAlgebra definite(Rational a, Rational b);

    Rational const& a() const { return a_; }
    Rational const& b() const { return b_; }
    bool is_definite() const { return a_ < 0 && b_ < 0; }

    /* Finite ramified primes in increasing order. */
    std::vector<std::int64_t> const& ramified_primes() const { return ramified_; }
    std::int64_t discriminant() const { return disc_; }

    QuatElement mul(QuatElement const& u, QuatElement const& v) const;
    QuatElement conj(QuatElement const& u) const;
    Rational trd(QuatElement const& u) const;
    Rational nrd(QuatElement const& u) const;
    /* trd(u * conj(v)), the bilinear form attached to nrd. */
    Rational trace_pairing(QuatElement const& u, QuatElement const& v) const;
    QuatElement inverse(QuatElement const& u) const;

    bool operator==(QuatAlgebra const& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(QuatAlgebra const& o) const { return !(*this == o); }

  private:
    Rational a_, b_;
    std::vector<std::int64_t> ramified_;
    std::int64_t disc_ = 1;
};

/* Finite ramified set computed from Hilbert symbols at 2 and at every prime
 * dividing a numerator or denominator of a or b. */
std::vector<std::int64_t> ramified_primes(Rational const& a, Rational const& b);

/* A definite algebra with the given (squarefree, odd number of primes)
 * discriminant, found by a small deterministic search over (a, b). */
QuatAlgebra algebra_with_discriminant(std::int64_t D);

}  // namespace quatorder

#endif
