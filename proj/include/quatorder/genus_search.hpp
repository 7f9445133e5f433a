#ifndef QUATORDER_GENUS_SEARCH_HPP
#define QUATORDER_GENUS_SEARCH_HPP

#include "quatorder/stable.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace quatorder {

/* Squarefree D with an odd number of prime factors and prod (p - 1) <= 2 pi^2. */
std::vector<std::int64_t> discriminant_candidates();

/* Rational bracket lo < pi < hi used for the exact threshold checks. */
struct PiBracket {
    Rational lo, hi;
};
PiBracket pi_bracket();
/* The integer threshold 19, after checking 19 < 2 pi^2 < 20 on the bracket. */
std::int64_t discriminant_threshold();

/* Over Q the field loop has the single member Q; the bound
 * 1 <= 2^(2/3) pi^(4/3) always holds. */
struct FieldGate {
    bool passes = false;
    bool bound_exceeds_seven = false;
    std::vector<std::string> fields;
};
FieldGate field_gate();

Order maximal_order(QuatAlgebra const& A);
std::vector<Order> maximal_order_types(QuatAlgebra const& A);

/* Largest m for which some Eichler symbol makes p^m lambda (ramified
 * correction included) an integer dividing 2^l [O'^x : Z^x]; 0 if none. */
int hermite_index_bound(Order const& Op, std::int64_t p);

/* Unital subrings of O'/pO', lifted to orders O with pO' in O, O != O'. */
std::vector<Order> p_subrings(Order const& Op, std::int64_t p);
/* Suborders with radical idealizer O' at p, plus the level-p hereditary
 * suborders when O' is maximal at a split p; deduplicated up to isomorphism. */
std::vector<Order> p_suborders(Order const& Op, std::int64_t p);
bool is_child(Order const& O, Order const& Op, std::int64_t p);

enum class PruneReason { IndexBound, NotHermite };

struct SearchNode {
    Order order;
    std::optional<std::size_t> parent;
    std::optional<std::size_t> root;
    std::vector<std::int64_t> prime_trail;
    bool hermite = false;
    std::optional<PruneReason> pruned;
};

struct ClassificationRecord {
    explicit ClassificationRecord(Order o) : order(std::move(o)) {}

    Order order;
    std::int64_t D = 0;
    std::int64_t N = 0;
    OrderLabel label = OrderLabel::Maximal;
    bool cancellation = false;
    std::map<std::int64_t, EichlerSymbol> symbols;  // every p | N
    std::int64_t cls = 0;
    std::int64_t stcl = 0;
    std::int64_t t = 0;
    std::int64_t unit_index = 0;
    Rational mass;
};

/* Sort key: (D, N, label, symbols). */
bool record_less(ClassificationRecord const& x, ClassificationRecord const& y);
ClassificationRecord make_record(Order const& O);

struct AuditFailure {
    std::string check;
    std::string detail;
};

/* Identity checks gathered during a search. */
struct SearchAudit {
    std::size_t encountered = 0;
    std::size_t edges = 0;
    std::size_t mass_checks = 0;
    std::size_t fiber_checks = 0;
    std::size_t vigneras_checks = 0;
    std::size_t genus_checks = 0;
    std::size_t unit_index_checks = 0;
    std::size_t stcl_checks = 0;
    std::vector<AuditFailure> failures;
    void merge(SearchAudit const& o);
};

struct SearchOptions {
    bool hermite_prune = true;
    bool audit = true;
    unsigned jobs = 1;
};

struct DiscriminantResult {
    std::int64_t D = 0;
    std::vector<SearchNode> nodes;
    std::vector<std::size_t> hermite_nodes;
    SearchAudit audit;
};

DiscriminantResult search_discriminant(std::int64_t D, SearchOptions const& opts = {});

struct Classification {
    std::vector<ClassificationRecord> records;
    SearchAudit audit;
    std::size_t encountered = 0;
};

Classification classify(std::vector<std::int64_t> const& discriminants, SearchOptions const& opts = {});
Classification classify_all_z(SearchOptions const& opts = {});

}  // namespace quatorder

#endif
