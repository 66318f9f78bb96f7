#include <doctest.h>

#include "wonderful/arrangement.hpp"
#include "wonderful/errors.hpp"
#include "wonderful/fm_motive.hpp"
#include "wonderful/nest.hpp"

#include <fstream>
#include <random>

using namespace wonderful;

namespace {

Arrangement load(const std::string& name) {
    std::ifstream in(std::string(WONDERFUL_DATA_DIR) + "/arrangements/" + name);
    REQUIRE(in);
    return Arrangement::from_json(nlohmann::json::parse(in));
}

Arrangement parse(const char* text) { return Arrangement::from_json(nlohmann::json::parse(text)); }

std::vector<std::string> offending(const char* text) {
    try {
        parse(text);
    } catch (const ArrangementError& e) {
        return e.offending();
    }
    return {"<accepted>"};
}

// Expected decomposition given as (stratum id, twist, mult) triples.
Decomposition expected(const Arrangement& arr, const std::vector<std::tuple<std::string, unsigned, long>>& terms) {
    Decomposition d;
    for (const auto& [id, twist, mult] : terms) d.add(arr.index_of(id), twist, mult);
    return d;
}

std::string single_center(unsigned dim_y, unsigned dim_v) {
    return R"({"ambient": {"id": "Y", "dim": )" + std::to_string(dim_y) + R"(}, "strata": [{"id": "V", "dim": )" +
           std::to_string(dim_v) + R"(, "contained_in": ["Y"]}], "building": ["V"]})";
}

}  // namespace

TEST_CASE("empty building set gives h(Y)") {
    const auto arr = load("empty.json");
    CHECK(decompose(arr) == expected(arr, {{"Y", 0, 1}}));
    CHECK(enumerate_g_nests(arr).empty());
}

TEST_CASE("single center of codimension r") {
    for (unsigned r = 2; r <= 6; ++r) {
        const auto arr = parse(single_center(7, 7 - r).c_str());
        std::vector<std::tuple<std::string, unsigned, long>> terms{{"Y", 0, 1}};
        for (unsigned k = 1; k < r; ++k) terms.emplace_back("V", k, 1);
        CHECK(decompose(arr) == expected(arr, terms));
        CHECK(decompose_iterative(arr, {"V"}) == decompose(arr));
    }
    const auto blowup = load("blowup.json");
    CHECK(decompose(blowup) == expected(blowup, {{"Y", 0, 1}, {"V", 1, 1}, {"V", 2, 1}}));
}

TEST_CASE("chain G1 in G2 in Y by hand") {
    const auto arr = load("chain.json");
    // {G2}: r = 2; {G1}: r = 4; {G1, G2}: r_G2 = 2, r_G1 = 3 - 1 = 2
    CHECK(decompose(arr) ==
          expected(arr, {{"Y", 0, 1}, {"G2", 1, 1}, {"G1", 1, 1}, {"G1", 2, 2}, {"G1", 3, 1}}));
    const auto t = GNest{arr.index_of("G2"), arr.index_of("G1")};
    const auto r = weight_ranges(arr, GNest{std::min(t[0], t[1]), std::max(t[0], t[1])});
    CHECK(r.at(arr.index_of("G1")) == 2);
    CHECK(r.at(arr.index_of("G2")) == 2);
}

TEST_CASE("two lines through a point in a surface") {
    const auto arr = load("two_lines.json");
    CHECK(arr.factors(arr.index_of("P")) == std::vector<std::size_t>{arr.index_of("P")});
    CHECK(decompose(arr) == expected(arr, {{"S", 0, 1}, {"P", 1, 1}}));
    CHECK_FALSE(is_g_nest(arr, {arr.index_of("L1"), arr.index_of("L2")}));
}

TEST_CASE("validation errors name the offending strata") {
    CHECK(offending(R"({"ambient": {"id": "Y", "dim": 3}, "strata": [
        {"id": "A", "dim": 2}, {"id": "B", "dim": 2},
        {"id": "p", "dim": 0, "contained_in": ["A", "B"]}, {"id": "q", "dim": 0, "contained_in": ["A", "B"]}],
        "building": []})") == std::vector<std::string>{"A", "B", "p", "q"});
    CHECK(offending(R"({"ambient": {"id": "Y", "dim": 3}, "strata": [
        {"id": "A", "dim": 2}, {"id": "B", "dim": 2}, {"id": "L", "dim": 0, "contained_in": ["A", "B"]}],
        "building": ["A", "B"]})") == std::vector<std::string>{"L", "A", "B"});
    CHECK(offending(R"({"ambient": {"id": "Y", "dim": 5}, "strata": [{"id": "V", "dim": 5}], "building": ["V"]})") ==
          std::vector<std::string>{"V", "Y"});
    CHECK(offending(R"({"ambient": {"id": "Y", "dim": 5}, "strata": [
        {"id": "A", "dim": 2, "contained_in": ["B"]}, {"id": "B", "dim": 3, "contained_in": ["A"]}], "building": []})")
              .size() == 2);
    CHECK(offending(R"({"ambient": {"id": "Y", "dim": 5}, "strata": [{"id": "Y", "dim": 2}], "building": []})") ==
          std::vector<std::string>{"Y"});
    CHECK(offending(R"({"ambient": {"id": "Y", "dim": 5}, "strata": [{"id": "V", "dim": 2, "contained_in": ["W"]}],
        "building": []})") == std::vector<std::string>{"V", "W"});
    CHECK(offending(R"({"ambient": {"id": "Y", "dim": 5}, "strata": [], "building": ["Y"]})") ==
          std::vector<std::string>{"Y"});
    CHECK(offending(R"({"ambient": {"id": "Y", "dim": 5}, "strata": [{"id": "V", "dim": 2}], "building": ["V"],
        "factors": {"Y": ["V"]}})") == std::vector<std::string>{"Y"});
    CHECK_THROWS_AS(parse(R"({"strata": []})"), ArrangementError);
}

TEST_CASE("fm arrangement structure") {
    const auto a2 = fm_arrangement(2, 3);
    CHECK(a2.size() == 2);
    CHECK(a2.building().size() == 1);
    CHECK(a2.dim(a2.index_of("D{1,2}")) == 3);
    const auto a3 = fm_arrangement(3, 2);
    const auto small = a3.index_of("D{1,2,3}");
    CHECK(a3.dim(small) == 2);
    CHECK(a3.factors(small) == std::vector<std::size_t>{small});
    CHECK(a3.meet(a3.index_of("D{1,2}"), a3.index_of("D{1,3}")) == small);
    const auto a4 = fm_arrangement(4, 1);
    const auto d12_34 = a4.index_of("D{1,2}{3,4}");
    CHECK(a4.factors(d12_34) == std::vector<std::size_t>{a4.index_of("D{1,2}"), a4.index_of("D{3,4}")});
}

TEST_CASE("backtracking G-nest enumeration matches brute force") {
    std::vector<Arrangement> arrs{fm_arrangement(3, 1), fm_arrangement(4, 2), load("chain.json"), load("two_lines.json"),
                                  load("blowup.json")};
    for (const auto& arr : arrs) {
        auto ours = enumerate_g_nests(arr);
        std::sort(ours.begin(), ours.end());
        CHECK(ours == enumerate_g_nests_bruteforce(arr));
    }
}

TEST_CASE("G-nests of the fm arrangement are the nests of [n]") {
    for (std::size_t n = 2; n <= 5; ++n) {
        const unsigned d = 2;
        const auto arr = fm_arrangement(n, d);
        CHECK(enumerate_g_nests(arr).size() + 1 == enumerate_nests(n).size());
        for_each_nest(n, [&](const Nest& s) {
            GNest t;
            for (Block b : s.internal()) t.push_back(arr.index_of(polydiagonal_id({b})));
            std::sort(t.begin(), t.end());
            CHECK(is_g_nest(arr, t));
            const auto st = nest_stats(s);
            const auto r = weight_ranges(arr, t);
            for (Block b : s.internal()) CHECK(r.at(arr.index_of(polydiagonal_id({b}))) == d * (st.children.at(b) - 1));
        });
    }
}

TEST_CASE("closed form aggregates to the fm table") {
    for (std::size_t n = 1; n <= 5; ++n)
        for (unsigned d = 1; d <= 3; ++d) {
            const auto arr = fm_arrangement(n, d);
            std::map<std::pair<std::size_t, long>, BigInt> agg;
            for (const auto& [key, m] : decompose(arr).by_dimension(arr)) agg[{key.first / d, key.second}] += m;
            CHECK(agg == decomposition_table(n, d).entries);
        }
}

TEST_CASE("iterative blow-up is order independent") {
    const auto a3 = fm_arrangement(3, 2);
    std::size_t orders = 0;
    CHECK(for_each_compatible_order(a3, [&](const std::vector<std::string>& o) {
        ++orders;
        CHECK(decompose_iterative(a3, o) == decompose(a3));
    }, 1000));
    CHECK(orders == 6);

    const auto a4 = fm_arrangement(4, 2);
    std::mt19937_64 rng(99);
    const auto closed = decompose(a4);
    for (int i = 0; i < 100; ++i) {
        const auto o = random_compatible_order(a4, rng);
        CHECK(is_compatible_order(a4, o));
        CHECK(decompose_iterative(a4, o) == closed);
    }
}

TEST_CASE("incompatible orders are rejected") {
    const auto a3 = fm_arrangement(3, 2);
    CHECK_THROWS_AS(decompose_iterative(a3, {"D{1,2}", "D{1,2,3}", "D{1,3}", "D{2,3}"}), ArrangementError);
    CHECK_THROWS_AS(decompose_iterative(a3, {"D{1,2,3}", "D{1,2}", "D{1,3}"}), ArrangementError);
    CHECK_THROWS_AS(decompose_iterative(a3, {"D{1,2,3}", "D{1,2}", "D{1,2}", "D{2,3}"}), ArrangementError);
    CHECK(default_order(a3).front() == "D{1,2,3}");
}

TEST_CASE("grading consistency") {
    const auto arr = fm_arrangement(4, 3);
    BigInt boxes = 0;
    for (const auto& t : enumerate_g_nests(arr)) {
        BigInt prod = 1;
        for (const auto& [g, r] : weight_ranges(arr, t)) prod *= r > 1 ? r - 1 : 0;
        boxes += prod;
    }
    const auto dec = decompose(arr);
    CHECK(dec.total() == boxes + 1);
    for (const auto& [key, m] : dec.terms()) {
        CHECK(m > 0);
        if (key.first != Arrangement::ambient()) CHECK(key.second > 0);
    }
}

TEST_CASE("JSON round trip preserves the arrangement") {
    const auto arr = fm_arrangement(4, 2);
    const auto again = Arrangement::from_json(nlohmann::json::parse(arr.to_json().dump()));
    CHECK(again.size() == arr.size());
    CHECK(decompose(again) == decompose(arr));
    CHECK(again.to_json() == arr.to_json());
}
