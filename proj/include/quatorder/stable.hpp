#ifndef QUATORDER_STABLE_HPP
#define QUATORDER_STABLE_HPP

#include "quatorder/ideals.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace quatorder {

/* H_p = nrd(O_p^x) mod p^l inside (Z/p^l)^x, l = 3 at p = 2 and 1 otherwise. */
struct LocalNormGroup {
    std::int64_t p = 0;
    int level = 0;
    std::int64_t modulus = 0;
    std::vector<bool> member;  // indexed by residues mod p^l
    std::vector<std::int64_t> generators;
    /* coset generators of (Z/p^l)^x / H_p, chosen greedily in increasing order */
    std::vector<std::int64_t> coset_generators;
    std::int64_t index = 1;

    bool contains(std::int64_t u) const { return member[static_cast<std::size_t>(modp::reduce(u, modulus))]; }
    /* Bit vector of the coset of a unit u. */
    std::uint32_t eval(std::int64_t u) const;
};

LocalNormGroup local_norm_group(Order const& O, std::int64_t p);

using StableElement = std::vector<std::uint32_t>;  // one bit vector per prime in S

class StableClassGroup {
  public:
    explicit StableClassGroup(Order const& O);

    std::vector<std::int64_t> const& primes() const { return primes_; }
    std::vector<LocalNormGroup> const& locals() const { return locals_; }
    std::int64_t order() const { return order_; }
    /* q > 0 with numerator and denominator prime to every p in S. */
    StableElement eval(Rational const& q) const;
    StableElement identity() const { return StableElement(locals_.size(), 0); }
    /* number of F_2 generators */
    int rank() const;

  private:
    std::vector<std::int64_t> primes_;
    std::vector<LocalNormGroup> locals_;
    std::int64_t order_ = 1;
};

StableClassGroup stable_class_group(Order const& O);
Rational eichler_mass(Order const& O);
StableElement nrd_class(RightIdeal const& I, StableClassGroup const& G);

struct FiberDecomposition {
    std::map<StableElement, std::vector<std::size_t>> fibers;
    std::map<StableElement, Rational> masses;
    std::vector<std::size_t> sizes() const;
};
FiberDecomposition fiber_decomposition(Order const& O);

bool is_hermite(Order const& O);
bool has_cancellation(Order const& O);
Rational stably_free_mass(Order const& O);
/* mass of the fiber over the identity, summed directly over the class set */
Rational trivial_fiber_mass(Order const& O);

/* [O'_p^x : O_p^x] for O inside O' with index a power of p. */
Integer local_unit_index_units(Order const& O, Order const& Op, std::int64_t p);
/* p^m lambda(O, p), times (1 - 1/p)^-1 at ramified p; needs O'_p maximal. */
Rational local_unit_index_closed(Order const& O, Order const& Op, std::int64_t p);
/* Both paths; throws NoConvergence if they disagree. */
Integer local_unit_index(Order const& O, Order const& Op, std::int64_t p);

/* The overorder obtained by running radical idealizer chains at every p | N. */
Order hereditary_closure(Order const& O);
/* tau(O^1)^-1, the inverse Tamagawa volume. */
Rational inverse_tamagawa(Order const& O);
/* 2 [O^x : Z^x] tau(O^1)^-1 == 1 */
bool vigneras_check(Order const& O);

}  // namespace quatorder

#endif
