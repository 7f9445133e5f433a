#ifndef QUATORDER_TESTS_ORDERS_FIXTURE_HPP
#define QUATORDER_TESTS_ORDERS_FIXTURE_HPP

#include "quatorder/order.hpp"

namespace fixture {

using namespace quatorder;

inline QuatElement q(Rational t, Rational x, Rational y, Rational z) { return QuatElement(t, x, y, z); }

inline const Rational half(1, 2);

inline QuatAlgebra B2() { return QuatAlgebra(-1, -1); }
inline QuatAlgebra B3() { return QuatAlgebra(-3, -1); }

inline Order hurwitz()
{
    return Order::from_basis(B2(), {q(1, 0, 0, 0), q(0, 1, 0, 0), q(0, 0, 1, 0), q(half, half, half, half)});
}
inline Order lipschitz()
{
    return Order::from_basis(B2(), {q(1, 0, 0, 0), q(0, 1, 0, 0), q(0, 0, 1, 0), q(0, 0, 0, 1)});
}
inline Order non_gorenstein()
{
    return Order::from_basis(B2(), {q(1, 0, 0, 0), q(0, 2, 0, 0), q(0, 0, 2, 0), q(0, 0, 0, 2)});
}
inline Order parks()
{
    return Order::from_basis(B3(), {q(1, 0, 0, 0), q(half, Rational(3, 2), 0, 0), q(0, 0, 3, 0), q(0, 0, Rational(3, 2), half)});
}
inline Order maximal3()
{
    return Order::from_basis(B3(), {q(1, 0, 0, 0), q(half, half, 0, 0), q(0, 0, 1, 0), q(0, 0, half, half)});
}
/* Hurwitz intersected with its conjugate by 1+i+j; level 6. */
inline Order eichler6()
{
    Order H = hurwitz();
    return Order::from_lattice(B2(), lattice_intersect(H.lattice(), conjugate_order(H, q(1, 1, 1, 0)).lattice()));
}

}  // namespace fixture

#endif
