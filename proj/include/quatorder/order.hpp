#ifndef QUATORDER_ORDER_HPP
#define QUATORDER_ORDER_HPP

#include "quatorder/algebra.hpp"
#include "quatorder/error.hpp"
#include "quatorder/lattice.hpp"
#include "quatorder/modp.hpp"

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace quatorder {

enum class EichlerSymbol { Star, One, Zero, MinusOne };

/* "*", "1", "0", "-1" */
std::string symbol_string(EichlerSymbol s);

enum class OrderLabel {
    Maximal,
    Hereditary,
    Eichler,
    ResiduallyInert,
    ResiduallyQuadratic,
    Bass,
    Gorenstein,
    NonGorenstein,
};

std::string label_string(OrderLabel l);
std::optional<OrderLabel> parse_label(std::string const& s);

/* Raised by order_from_basis; x*y is the product that escapes the lattice. */
class NotAnOrderError : public QuatError {
  public:
    NotAnOrderError(QuatElement x, QuatElement y, std::string const& what)
        : QuatError(ErrorCode::NotAnOrder, what), x_(std::move(x)), y_(std::move(y))
    {
    }
    QuatElement const& x() const { return x_; }
    QuatElement const& y() const { return y_; }

  private:
    QuatElement x_, y_;
};

using Structure = std::array<std::array<std::array<Integer, 4>, 4>, 4>;

/*
 * An order in a quaternion algebra over Q.  Immutable; copies share the lazily
 * filled invariant cache, which is guarded internally.
 */
class Order {
  public:
    static Order from_basis(QuatAlgebra const& A, std::vector<QuatElement> const& rows);
    static Order from_lattice(QuatAlgebra const& A, Lattice4 const& L);

    QuatAlgebra const& algebra() const;
    Lattice4 const& lattice() const;
    std::array<QuatElement, 4> const& basis() const { return lattice().basis(); }
    /* b_i b_j = sum_k c[i][j][k] b_k over basis(). */
    Structure const& structure() const;
    /* nrd(sum x_i b_i) = sum_{i<=j} q[i][j] x_i x_j */
    std::array<std::array<Integer, 4>, 4> const& norm_form() const;
    std::array<Integer, 4> const& traces() const;

    Integer const& reduced_discriminant() const;
    std::int64_t level() const;  // N as a machine integer
    std::vector<std::int64_t> const& level_primes() const;
    std::int64_t unit_index() const;
    EichlerSymbol symbol(std::int64_t p) const;
    bool gorenstein() const;
    bool bass() const;
    bool eichler() const;

    std::array<Integer, 4> coords(QuatElement const& x) const;

    bool operator==(Order const& o) const;
    bool operator!=(Order const& o) const { return !(*this == o); }

    struct State;

  private:
    explicit Order(std::shared_ptr<State> s) : s_(std::move(s)) {}
    std::shared_ptr<State> s_;
};

Order order_from_basis(QuatAlgebra const& A, std::vector<QuatElement> const& rows);
Integer reduced_discriminant(Order const& O);
std::int64_t unit_index(Order const& O);

/* Multiplication and reduced norm in O / mO, in coordinates over basis(). */
class ResidueRing {
  public:
    ResidueRing(Order const& O, std::int64_t m);
    std::int64_t modulus() const { return m_; }
    modp::Vec mul(modp::Vec const& x, modp::Vec const& y) const;
    std::int64_t nrd(modp::Vec const& x) const;
    std::int64_t trd(modp::Vec const& x) const;
    modp::Vec one() const { return one_; }

  private:
    std::int64_t m_;
    std::int64_t c_[4][4][4];
    std::int64_t q_[4][4];
    std::int64_t t_[4];
    modp::Vec one_;
};

/* Jacobson radical of O/pO as an RREF basis in coordinates over basis(). */
std::vector<modp::Vec> radical_mod_p(Order const& O, std::int64_t p);
std::vector<modp::Vec> radical_mod_p_bruteforce(Order const& O, std::int64_t p);
std::vector<modp::Vec> radical_mod_p_trace(Order const& O, std::int64_t p);
/* pO + (lift of the radical) */
Lattice4 radical_lattice(Order const& O, std::int64_t p);

EichlerSymbol eichler_symbol(Order const& O, std::int64_t p);
Rational lambda(Order const& O, std::int64_t p);

/* (N/12) * prod_{p | N} lambda(O, p) */
Rational mass_formula(Order const& O);

Order radical_idealizer(Order const& O, std::int64_t p);

bool is_gorenstein(Order const& O);
bool is_bass(Order const& O);
bool is_hereditary(Order const& O);
bool is_maximal(Order const& O);
bool is_eichler(Order const& O);
bool is_p_maximal(Order const& O, std::int64_t p);

/* Every label that holds, in precedence order. */
std::vector<OrderLabel> order_labels(Order const& O);
OrderLabel strongest_label(Order const& O);

/* Orders O' containing O with [O' : O] = p. */
std::vector<Order> index_p_superorders(Order const& O, std::int64_t p);
/* Overorders of O at p that are maximal at p (v_p(N) = v_p(D)). */
std::vector<Order> p_maximal_overorders(Order const& O, std::int64_t p);

/* Z-basis of the trace-zero sublattice. */
std::vector<QuatElement> trace_zero_basis(Order const& O);

struct IsomorphismResult {
    bool isomorphic = false;
    /* alpha with alpha O alpha^-1 = O' */
    std::optional<QuatElement> conjugator;
};
IsomorphismResult order_isomorphism(Order const& O, Order const& Op);
bool order_isomorphic(Order const& O, Order const& Op);
/* The full trace-zero isometry test, without comparing cheap invariants first. */
IsomorphismResult order_isomorphism_full(Order const& O, Order const& Op);

/* alpha O alpha^-1 */
Order conjugate_order(Order const& O, QuatElement const& alpha);

}  // namespace quatorder

#endif
