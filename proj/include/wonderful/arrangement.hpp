#pragma once

#include "wonderful/int_poly.hpp"

#include <json.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace wonderful {

struct Stratum {
    std::string id;
    unsigned dim = 0;
    std::string annotation;  // optional pretty name, e.g. "X^2"
};

/// Strata of an arrangement with containment, meets and a building set, all
/// purely dimensional. Stratum 0 is the ambient Y. Immutable once built.
class Arrangement {
public:
    struct Spec {
        Stratum ambient;
        std::vector<Stratum> strata;                                   // excluding the ambient
        std::vector<std::vector<std::string>> contained_in;            // parallel to strata
        std::vector<std::string> building;
        std::optional<std::map<std::string, std::vector<std::string>>> factors;
    };

    /// Validates everything; throws ArrangementError naming the offending ids.
    explicit Arrangement(const Spec& spec);

    static Arrangement from_json(const nlohmann::json& doc);
    nlohmann::ordered_json to_json() const;

    std::size_t size() const { return strata_.size(); }
    const Stratum& stratum(std::size_t i) const { return strata_.at(i); }
    const std::string& id(std::size_t i) const { return strata_.at(i).id; }
    unsigned dim(std::size_t i) const { return strata_.at(i).dim; }
    std::size_t index_of(const std::string& id) const;
    static constexpr std::size_t ambient() { return 0; }

    /// b is contained in a (reflexive).
    bool contains(std::size_t a, std::size_t b) const { return le_[b][a]; }
    bool strictly_contains(std::size_t a, std::size_t b) const { return a != b && le_[b][a]; }

    /// Greatest common lower bound; nullopt when the strata are disjoint.
    std::optional<std::size_t> meet(std::size_t a, std::size_t b) const;
    /// Meet of a family; the empty family meets to Y.
    std::optional<std::size_t> meet(const std::vector<std::size_t>& family) const;

    const std::vector<std::size_t>& building() const { return building_; }
    bool is_building(std::size_t i) const { return in_building_[i]; }
    /// Minimal building elements containing stratum s, ascending index.
    const std::vector<std::size_t>& factors(std::size_t s) const { return factors_[s]; }

private:
    std::vector<Stratum> strata_;
    std::map<std::string, std::size_t> index_;
    std::vector<std::vector<bool>> le_;  // le_[b][a]: b contained in a
    std::vector<std::vector<long>> meet_;  // -1 when disjoint
    std::vector<std::size_t> building_;
    std::vector<bool> in_building_;
    std::vector<std::vector<std::size_t>> factors_;
};

/// Polydiagonal arrangement in X^n, dim X = d: one stratum per set partition,
/// building set the diagonals with one non-singleton block.
Arrangement fm_arrangement(std::size_t n, unsigned d);

/// Stratum id of the polydiagonal for a partition, e.g. "D{1,2}{3,4}".
std::string polydiagonal_id(const std::vector<std::uint32_t>& blocks);

/// A G-nest: sorted stratum indices of building elements.
using GNest = std::vector<std::size_t>;

/// Recursive factor test: the minimal elements must be exactly the factors of
/// their meet, and every upward slice must pass the same test.
bool is_g_nest(const Arrangement& arr, const GNest& t);

/// All non-empty G-nests, by backtracking over building elements in index order.
std::vector<GNest> enumerate_g_nests(const Arrangement& arr);

/// Subsets of the building set passing is_g_nest, by exhaustion. Test oracle;
/// refuses more than 20 building elements.
std::vector<GNest> enumerate_g_nests_bruteforce(const Arrangement& arr);

/// r_G = dim(meet of elements of t strictly containing G) - dim G, with the
/// meet defaulting to Y. Keyed by stratum index.
std::map<std::size_t, unsigned> weight_ranges(const Arrangement& arr, const GNest& t);

struct Summand {
    std::string stratum;
    unsigned dim = 0;
    std::string annotation;
    unsigned twist = 0;
    BigInt multiplicity;
};

class Decomposition {
public:
    void add(std::size_t stratum, unsigned twist, const BigInt& mult);
    const std::map<std::pair<std::size_t, unsigned>, BigInt>& terms() const { return terms_; }
    BigInt total() const;
    /// Sorted by stratum dim descending, then id, then twist ascending.
    std::vector<Summand> summands(const Arrangement& arr) const;
    /// (stratum dim, twist) -> multiplicity.
    std::map<std::pair<unsigned, unsigned>, BigInt> by_dimension(const Arrangement& arr) const;

    friend bool operator==(const Decomposition& a, const Decomposition& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Decomposition& a, const Decomposition& b) { return !(a == b); }

private:
    std::map<std::pair<std::size_t, unsigned>, BigInt> terms_;  // (stratum, twist) -> multiplicity
};

/// h(Y) plus, for each G-nest and each mu in the box prod_G [1, r_G - 1], the
/// summand (meet of the nest, |mu|).
Decomposition decompose(const Arrangement& arr);

/// Replays the blow-ups one building element at a time along `order`
/// (inclusion-compatible: smaller strata first). Throws ArrangementError if the
/// order is not a compatible permutation of the building set.
Decomposition decompose_iterative(const Arrangement& arr, const std::vector<std::string>& order);

/// Canonical compatible order: ascending dim, then index.
std::vector<std::string> default_order(const Arrangement& arr);
bool is_compatible_order(const Arrangement& arr, const std::vector<std::string>& order);
/// Uniformly chosen available element at each step.
std::vector<std::string> random_compatible_order(const Arrangement& arr, std::mt19937_64& rng);
/// Every compatible order; stops after `limit` and reports via the return flag.
bool for_each_compatible_order(const Arrangement& arr, const std::function<void(const std::vector<std::string>&)>& visit,
                               std::size_t limit);

}  // namespace wonderful
