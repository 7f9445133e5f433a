#ifndef QUATORDER_IDEALS_HPP
#define QUATORDER_IDEALS_HPP

#include "quatorder/order.hpp"

#include <memory>
#include <optional>
#include <vector>

namespace quatorder {

/* A right fractional ideal of a fixed order; the left order is computed lazily. */
class RightIdeal {
  public:
    /* Throws IncompatibleProduct if L is not stable under right multiplication by O. */
    RightIdeal(Order const& O, Lattice4 const& L);

    Lattice4 const& lattice() const;
    Order const& right_order() const;
    Order const& left_order() const;
    Rational const& norm() const;

    bool operator==(RightIdeal const& o) const { return lattice() == o.lattice() && right_order() == o.right_order(); }

    struct State;

  private:
    std::shared_ptr<State> s_;
};

Order left_order(RightIdeal const& I);
/* Full right stabilizer {x : I x in I}. */
Order right_order_check(RightIdeal const& I);
Rational nrd_ideal(RightIdeal const& I);
bool is_locally_principal(RightIdeal const& I);

RightIdeal principal_ideal(Order const& O, QuatElement const& alpha);
RightIdeal ideal_mul(RightIdeal const& I, RightIdeal const& J);
/* conj(I)/nrd(I), a right ideal of O_L(I). */
RightIdeal ideal_inverse(RightIdeal const& I);

struct IdealIsomorphism {
    bool isomorphic = false;
    /* I = alpha J */
    std::optional<QuatElement> alpha;
};
IdealIsomorphism ideal_isomorphism(RightIdeal const& I, RightIdeal const& J);
bool ideal_isomorphic(RightIdeal const& I, RightIdeal const& J);

/* Sub-ideals J of I with I/J of order p^2 and nrd(J) = p nrd(I). */
std::vector<RightIdeal> ideal_neighbors(RightIdeal const& I, std::int64_t p);
/* Throws PrimeDividesDiscriminant if p | N. */
std::vector<RightIdeal> prime_neighbors(Order const& O, std::int64_t p);

struct ClassSet {
    Order order;
    std::vector<RightIdeal> representatives;
    std::vector<std::int64_t> unit_indices;
    Rational mass;
    /* neighbor primes that were used */
    std::vector<std::int64_t> primes;
};

/* Memoized per order; safe to call concurrently. */
std::shared_ptr<const ClassSet> class_set(Order const& O);
ClassSet compute_class_set(Order const& O);

/* An isomorphic ideal whose norm is coprime to the level. */
RightIdeal normalize_coprime(RightIdeal const& I);

/* I O' as a right ideal of O'; throws NotASuperorder unless O is inside O'. */
RightIdeal extend_ideal(RightIdeal const& I, Order const& Op);

struct TypeNumber {
    std::size_t count = 0;
    std::vector<Order> representatives;
    /* for each class, the index of its left order's type */
    std::vector<std::size_t> type_of_class;
};
TypeNumber type_number(Order const& O);

}  // namespace quatorder

#endif
