#include "wonderful/arrangement.hpp"

#include "wonderful/errors.hpp"
#include "wonderful/partitions.hpp"

#include <algorithm>
#include <set>

namespace wonderful {

Arrangement::Arrangement(const Spec& spec) {
    strata_.push_back(spec.ambient);
    for (const auto& s : spec.strata) strata_.push_back(s);
    if (spec.contained_in.size() != spec.strata.size())
        throw ArrangementError("contained_in list count does not match strata count", {});
    for (std::size_t i = 0; i < strata_.size(); ++i) {
        if (strata_[i].id.empty()) throw ArrangementError("empty stratum id", {});
        if (!index_.emplace(strata_[i].id, i).second) throw ArrangementError("duplicate stratum id", {strata_[i].id});
    }
    const std::size_t n = strata_.size();

    le_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        le_[i][i] = true;
        le_[i][0] = true;
    }
    for (std::size_t i = 0; i < spec.strata.size(); ++i)
        for (const auto& parent : spec.contained_in[i]) {
            auto it = index_.find(parent);
            if (it == index_.end()) throw ArrangementError("unknown stratum in contained_in", {strata_[i + 1].id, parent});
            le_[i + 1][it->second] = true;
        }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            if (le_[i][k])
                for (std::size_t j = 0; j < n; ++j)
                    if (le_[k][j]) le_[i][j] = true;

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !le_[i][j]) continue;
            if (le_[j][i]) throw ArrangementError("containment cycle", {strata_[i].id, strata_[j].id});
            if (strata_[i].dim >= strata_[j].dim)
                throw ArrangementError("dimension does not drop along strict containment", {strata_[i].id, strata_[j].id});
        }

    meet_.assign(n, std::vector<long>(n, -1));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            std::vector<std::size_t> lower;
            for (std::size_t c = 0; c < n; ++c)
                if (le_[c][a] && le_[c][b]) lower.push_back(c);
            std::vector<std::size_t> top;
            for (std::size_t c : lower) {
                bool maximal = true;
                for (std::size_t e : lower)
                    if (e != c && le_[c][e]) maximal = false;
                if (maximal) top.push_back(c);
            }
            if (top.size() > 1) {
                std::vector<std::string> ids{strata_[a].id, strata_[b].id};
                for (std::size_t c : top) ids.push_back(strata_[c].id);
                throw ArrangementError("intersection has no unique largest stratum", ids);
            }
            const long m = top.empty() ? -1 : static_cast<long>(top[0]);
            meet_[a][b] = meet_[b][a] = m;
        }

    in_building_.assign(n, false);
    for (const auto& id : spec.building) {
        auto it = index_.find(id);
        if (it == index_.end()) throw ArrangementError("unknown building element", {id});
        if (it->second == ambient()) throw ArrangementError("the ambient stratum cannot be a building element", {id});
        if (in_building_[it->second]) throw ArrangementError("duplicate building element", {id});
        in_building_[it->second] = true;
    }
    for (std::size_t i = 0; i < n; ++i)
        if (in_building_[i]) building_.push_back(i);

    factors_.resize(n);
    const unsigned dim_y = strata_[0].dim;
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> above;
        for (std::size_t g : building_)
            if (le_[s][g]) above.push_back(g);
        for (std::size_t g : above) {
            bool minimal = true;
            for (std::size_t h : above)
                if (h != g && le_[h][g]) minimal = false;
            if (minimal) factors_[s].push_back(g);
        }
        const auto m = meet(factors_[s]);
        if (!m || *m != s) {
            std::vector<std::string> ids{strata_[s].id};
            for (std::size_t g : factors_[s]) ids.push_back(strata_[g].id);
            throw ArrangementError("building factors do not intersect to the stratum", ids);
        }
        unsigned codim = 0;
        for (std::size_t g : factors_[s]) codim += dim_y - strata_[g].dim;
        if (codim != dim_y - strata_[s].dim) {
            std::vector<std::string> ids{strata_[s].id};
            for (std::size_t g : factors_[s]) ids.push_back(strata_[g].id);
            throw ArrangementError("codimension of factors is not additive", ids);
        }
    }

    if (spec.factors) {
        for (const auto& [sid, given] : *spec.factors) {
            auto it = index_.find(sid);
            if (it == index_.end()) throw ArrangementError("unknown stratum in factors", {sid});
            std::set<std::size_t> want;
            for (const auto& g : given) {
                auto git = index_.find(g);
                if (git == index_.end() || !in_building_[git->second])
                    throw ArrangementError("factor is not a building element", {sid, g});
                want.insert(git->second);
            }
            if (want != std::set<std::size_t>(factors_[it->second].begin(), factors_[it->second].end())) {
                std::vector<std::string> ids{sid};
                for (std::size_t g : factors_[it->second]) ids.push_back(strata_[g].id);
                throw ArrangementError("given factors differ from the minimal building elements containing the stratum", ids);
            }
        }
    }
}

std::size_t Arrangement::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw ArrangementError("unknown stratum", {id});
    return it->second;
}

std::optional<std::size_t> Arrangement::meet(std::size_t a, std::size_t b) const {
    const long m = meet_.at(a).at(b);
    if (m < 0) return std::nullopt;
    return static_cast<std::size_t>(m);
}

std::optional<std::size_t> Arrangement::meet(const std::vector<std::size_t>& family) const {
    std::size_t cur = ambient();
    for (std::size_t s : family) {
        auto m = meet(cur, s);
        if (!m) return std::nullopt;
        cur = *m;
    }
    return cur;
}

Arrangement Arrangement::from_json(const nlohmann::json& doc) {
    try {
        Spec spec;
        const auto& amb = doc.at("ambient");
        spec.ambient.id = amb.at("id").get<std::string>();
        spec.ambient.dim = amb.at("dim").get<unsigned>();
        spec.ambient.annotation = amb.value("name", std::string());
        for (const auto& s : doc.value("strata", nlohmann::json::array())) {
            Stratum st;
            st.id = s.at("id").get<std::string>();
            st.dim = s.at("dim").get<unsigned>();
            st.annotation = s.value("name", std::string());
            spec.strata.push_back(st);
            spec.contained_in.push_back(s.value("contained_in", std::vector<std::string>{}));
        }
        spec.building = doc.value("building", std::vector<std::string>{});
        if (doc.contains("factors"))
            spec.factors = doc.at("factors").get<std::map<std::string, std::vector<std::string>>>();
        return Arrangement(spec);
    } catch (const nlohmann::json::exception& e) {
        throw ArrangementError(std::string("malformed arrangement document: ") + e.what(), {});
    }
}

nlohmann::ordered_json Arrangement::to_json() const {
    nlohmann::ordered_json doc;
    nlohmann::ordered_json amb{{"id", strata_[0].id}, {"dim", strata_[0].dim}};
    if (!strata_[0].annotation.empty()) amb["name"] = strata_[0].annotation;
    doc["ambient"] = amb;
    auto strata = nlohmann::ordered_json::array();
    for (std::size_t i = 1; i < strata_.size(); ++i) {
        nlohmann::ordered_json s{{"id", strata_[i].id}, {"dim", strata_[i].dim}};
        if (!strata_[i].annotation.empty()) s["name"] = strata_[i].annotation;
        // covering relations only
        std::vector<std::string> up;
        for (std::size_t a = 1; a < strata_.size(); ++a) {
            if (!strictly_contains(a, i)) continue;
            bool cover = true;
            for (std::size_t c = 1; c < strata_.size(); ++c)
                if (c != a && strictly_contains(a, c) && strictly_contains(c, i)) cover = false;
            if (cover) up.push_back(strata_[a].id);
        }
        s["contained_in"] = up;
        strata.push_back(s);
    }
    doc["strata"] = strata;
    auto b = nlohmann::ordered_json::array();
    for (std::size_t g : building_) b.push_back(strata_[g].id);
    doc["building"] = b;
    return doc;
}

std::string polydiagonal_id(const std::vector<std::uint32_t>& blocks) {
    std::vector<std::uint32_t> big;
    for (auto b : blocks)
        if (popcount(b) >= 2) big.push_back(b);
    std::sort(big.begin(), big.end(), [](std::uint32_t a, std::uint32_t b) { return (a & -a) < (b & -b); });
    std::string id = "D";
    for (auto b : big) {
        id += "{";
        bool first = true;
        for (unsigned e = 0; e < 32; ++e)
            if (b >> e & 1u) {
                if (!first) id += ",";
                id += std::to_string(e + 1);
                first = false;
            }
        id += "}";
    }
    return id;
}

Arrangement fm_arrangement(std::size_t n, unsigned d) {
    if (n < 1) throw std::invalid_argument("fm_arrangement: n must be >= 1");
    if (d < 1) throw std::invalid_argument("fm_arrangement: d must be >= 1");
    auto parts = enumerate_partitions(n);
    auto refines = [](const SetPartition& fine, const SetPartition& coarse) {
        for (Block f : fine) {
            bool inside = false;
            for (Block c : coarse)
                if ((f & ~c) == 0) inside = true;
            if (!inside) return false;
        }
        return true;
    };
    Arrangement::Spec spec;
    spec.ambient = {"Y", static_cast<unsigned>(d * n), "X^" + std::to_string(n)};
    std::vector<const SetPartition*> kept;
    for (const auto& p : parts)
        if (p.size() < n) kept.push_back(&p);
    for (const auto* p : kept) {
        spec.strata.push_back({polydiagonal_id(*p), static_cast<unsigned>(d * p->size()),
                                p->size() == 1 ? "X" : "X^" + std::to_string(p->size())});
        std::vector<std::string> up;
        for (const auto* q : kept)
            if (q != p && refines(*q, *p)) up.push_back(polydiagonal_id(*q));
        spec.contained_in.push_back(std::move(up));
        if (std::count_if(p->begin(), p->end(), [](Block b) { return popcount(b) >= 2; }) == 1)
            spec.building.push_back(spec.strata.back().id);
    }
    return Arrangement(spec);
}

namespace {

std::vector<std::size_t> minimal_elements(const Arrangement& arr, const GNest& t) {
    std::vector<std::size_t> out;
    for (std::size_t g : t) {
        bool minimal = true;
        for (std::size_t h : t)
            if (arr.strictly_contains(g, h)) minimal = false;
        if (minimal) out.push_back(g);
    }
    return out;
}

}  // namespace

bool is_g_nest(const Arrangement& arr, const GNest& t) {
    if (t.empty()) return true;
    const auto mins = minimal_elements(arr, t);
    const auto s = arr.meet(mins);
    if (!s) return false;
    if (std::set<std::size_t>(mins.begin(), mins.end()) !=
        std::set<std::size_t>(arr.factors(*s).begin(), arr.factors(*s).end()))
        return false;
    for (std::size_t a : mins) {
        GNest slice;
        for (std::size_t g : t)
            if (arr.strictly_contains(g, a)) slice.push_back(g);
        if (!is_g_nest(arr, slice)) return false;
    }
    return true;
}

std::vector<GNest> enumerate_g_nests(const Arrangement& arr) {
    std::vector<GNest> out;
    const auto& b = arr.building();
    GNest cur;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        for (std::size_t i = start; i < b.size(); ++i) {
            cur.push_back(b[i]);
            if (is_g_nest(arr, cur)) {
                out.push_back(cur);
                rec(i + 1);
            }
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

std::vector<GNest> enumerate_g_nests_bruteforce(const Arrangement& arr) {
    const auto& b = arr.building();
    if (b.size() > 20) throw CapExceeded("brute-force G-nest enumeration", b.size(), 20);
    std::vector<GNest> out;
    for (std::uint32_t mask = 1; mask < (1u << b.size()); ++mask) {
        GNest t;
        for (std::size_t i = 0; i < b.size(); ++i)
            if (mask >> i & 1u) t.push_back(b[i]);
        if (is_g_nest(arr, t)) out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

unsigned range_for(const Arrangement& arr, const GNest& t, std::size_t g) {
    std::vector<std::size_t> above;
    for (std::size_t h : t)
        if (arr.strictly_contains(h, g)) above.push_back(h);
    const auto m = arr.meet(above);
    if (!m) throw ArrangementError("elements above a nest member do not intersect", {arr.id(g)});
    return arr.dim(*m) - arr.dim(g);
}

IntPoly box_poly(unsigned r) { return IntPoly::range_sum(1, static_cast<long>(r) - 1); }

void add_poly(Decomposition& out, std::size_t stratum, const IntPoly& p) {
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] != 0) out.add(stratum, static_cast<unsigned>(i), c[i]);
}

}  // namespace

std::map<std::size_t, unsigned> weight_ranges(const Arrangement& arr, const GNest& t) {
    std::map<std::size_t, unsigned> r;
    for (std::size_t g : t) r[g] = range_for(arr, t, g);
    return r;
}

void Decomposition::add(std::size_t stratum, unsigned twist, const BigInt& mult) {
    if (mult == 0) return;
    terms_[{stratum, twist}] += mult;
}

BigInt Decomposition::total() const {
    BigInt t = 0;
    for (const auto& [k, v] : terms_) t += v;
    return t;
}

std::vector<Summand> Decomposition::summands(const Arrangement& arr) const {
    std::vector<Summand> out;
    for (const auto& [key, mult] : terms_) {
        const auto& s = arr.stratum(key.first);
        out.push_back({s.id, s.dim, s.annotation, key.second, mult});
    }
    std::sort(out.begin(), out.end(), [](const Summand& a, const Summand& b) {
        if (a.dim != b.dim) return a.dim > b.dim;
        if (a.stratum != b.stratum) return a.stratum < b.stratum;
        return a.twist < b.twist;
    });
    return out;
}

std::map<std::pair<unsigned, unsigned>, BigInt> Decomposition::by_dimension(const Arrangement& arr) const {
    std::map<std::pair<unsigned, unsigned>, BigInt> out;
    for (const auto& [key, mult] : terms_) out[{arr.dim(key.first), key.second}] += mult;
    return out;
}

Decomposition decompose(const Arrangement& arr) {
    Decomposition out;
    out.add(Arrangement::ambient(), 0, 1);
    for (const auto& t : enumerate_g_nests(arr)) {
        IntPoly box(1);
        for (const auto& [g, r] : weight_ranges(arr, t)) box *= box_poly(r);
        if (box.is_zero()) continue;
        const auto s = arr.meet(t);
        if (!s) throw ArrangementError("nest with empty intersection", {arr.id(t.front())});
        add_poly(out, *s, box);
    }
    return out;
}

bool is_compatible_order(const Arrangement& arr, const std::vector<std::string>& order) {
    if (order.size() != arr.building().size()) return false;
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t k = 0; k < order.size(); ++k) {
        std::size_t i;
        try {
            i = arr.index_of(order[k]);
        } catch (const ArrangementError&) {
            return false;
        }
        if (!arr.is_building(i) || !pos.emplace(i, k).second) return false;
    }
    for (std::size_t g : arr.building())
        for (std::size_t h : arr.building())
            if (arr.strictly_contains(h, g) && pos[g] > pos[h]) return false;
    return true;
}

Decomposition decompose_iterative(const Arrangement& arr, const std::vector<std::string>& order) {
    if (!is_compatible_order(arr, order))
        throw ArrangementError("order is not an inclusion-compatible permutation of the building set", order);
    std::map<GNest, IntPoly> state{{GNest{}, IntPoly(1)}};
    for (std::size_t k = order.size(); k-- > 0;) {
        const std::size_t g = arr.index_of(order[k]);
        auto next = state;
        for (const auto& [t, poly] : state) {
            GNest grown = t;
            grown.insert(std::upper_bound(grown.begin(), grown.end(), g), g);
            if (!is_g_nest(arr, grown)) continue;
            const IntPoly box = box_poly(range_for(arr, t, g));
            if (box.is_zero()) continue;
            next[grown] += poly * box;
        }
        state = std::move(next);
    }
    Decomposition out;
    for (const auto& [t, poly] : state) {
        const auto s = arr.meet(t);
        if (!s) throw ArrangementError("nest with empty intersection", {arr.id(t.front())});
        add_poly(out, *s, poly);
    }
    return out;
}

std::vector<std::string> default_order(const Arrangement& arr) {
    auto b = arr.building();
    std::stable_sort(b.begin(), b.end(), [&](std::size_t x, std::size_t y) { return arr.dim(x) < arr.dim(y); });
    std::vector<std::string> out;
    for (std::size_t g : b) out.push_back(arr.id(g));
    return out;
}

namespace {

std::vector<std::size_t> available(const Arrangement& arr, const std::vector<bool>& placed) {
    std::vector<std::size_t> out;
    for (std::size_t g : arr.building()) {
        if (placed[g]) continue;
        bool ready = true;
        for (std::size_t h : arr.building())
            if (!placed[h] && arr.strictly_contains(g, h)) ready = false;
        if (ready) out.push_back(g);
    }
    return out;
}

}  // namespace

std::vector<std::string> random_compatible_order(const Arrangement& arr, std::mt19937_64& rng) {
    std::vector<bool> placed(arr.size(), false);
    std::vector<std::string> out;
    while (out.size() < arr.building().size()) {
        const auto avail = available(arr, placed);
        std::uniform_int_distribution<std::size_t> pick(0, avail.size() - 1);
        const std::size_t g = avail[pick(rng)];
        placed[g] = true;
        out.push_back(arr.id(g));
    }
    return out;
}

bool for_each_compatible_order(const Arrangement& arr, const std::function<void(const std::vector<std::string>&)>& visit,
                               std::size_t limit) {
    std::vector<bool> placed(arr.size(), false);
    std::vector<std::string> cur;
    std::size_t count = 0;
    bool complete = true;
    std::function<void()> rec = [&]() {
        if (!complete) return;
        if (cur.size() == arr.building().size()) {
            if (count == limit) {
                complete = false;
                return;
            }
            ++count;
            visit(cur);
            return;
        }
        for (std::size_t g : available(arr, placed)) {
            placed[g] = true;
            cur.push_back(arr.id(g));
            rec();
            cur.pop_back();
            placed[g] = false;
        }
    };
    rec();
    return complete;
}

}  // namespace wonderful
