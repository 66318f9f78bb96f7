#include "wonderful/cli.hpp"

#include "wonderful/arrangement.hpp"
#include "wonderful/errors.hpp"
#include "wonderful/fm_motive.hpp"
#include "wonderful/macdonald.hpp"
#include "wonderful/symmetric_quotient.hpp"
#include "wonderful/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace wonderful {

namespace {

using ojson = nlohmann::ordered_json;

inline constexpr std::size_t kGenfunOrderCap = 30;
inline constexpr std::size_t kSigmaFormMaxOrder = 10;

ojson big(const BigInt& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

ojson poly_json(const IntPoly& p) {
    auto a = ojson::array();
    for (const auto& c : p.coeffs()) a.push_back(big(c));
    return a;
}

std::string power_name(std::size_t k) { return k == 1 ? "X" : "X^" + std::to_string(k); }

std::string motive(const std::string& space, long twist) {
    std::string s = "h(" + space + ")";
    if (twist != 0) s += "(" + std::to_string(twist) + ")";
    return s;
}

std::string nu_name(const ForestType& nu) {
    std::string s;
    for (std::size_t i = 0; i < nu.size(); ++i) {
        if (i) s += " x ";
        s += nu[i] == 1 ? "X" : "X^(" + std::to_string(nu[i]) + ")";
    }
    return s;
}

// Left-aligned columns, two spaces apart.
std::string columns(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> w;
    for (const auto& r : rows)
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (w.size() <= i) w.push_back(0);
            w[i] = std::max(w[i], r[i].size());
        }
    std::ostringstream os;
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t i = 0; i < r.size(); ++i) {
            line += r[i];
            if (i + 1 < r.size()) line += std::string(w[i] - r[i].size() + 2, ' ');
        }
        os << line << "\n";
    }
    return os.str();
}

std::string csv(const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            const bool quote = r[i].find_first_of(",\"") != std::string::npos;
            if (i) os << ",";
            if (quote) {
                os << '"';
                for (char c : r[i]) os << (c == '"' ? "\"\"" : std::string(1, c));
                os << '"';
            } else {
                os << r[i];
            }
        }
        os << "\n";
    }
    return os.str();
}

struct Rendered {
    ojson result;
    std::string table;
    std::vector<std::vector<std::string>> csv_rows;
    int code = exit_code::ok;
};

std::vector<std::pair<std::pair<std::size_t, long>, BigInt>> sorted_entries(const DecompTable& t) {
    std::vector<std::pair<std::pair<std::size_t, long>, BigInt>> rows(t.entries.begin(), t.entries.end());
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        if (a.first.first != b.first.first) return a.first.first > b.first.first;
        return a.first.second < b.first.second;
    });
    return rows;
}

ojson table_json(const DecompTable& t) {
    ojson entries = ojson::array();
    for (const auto& [key, m] : sorted_entries(t))
        entries.push_back({{"k", key.first}, {"i", key.second}, {"mult", big(m)}});
    return {{"n", t.n}, {"d", t.d}, {"entries", entries}};
}

Rendered fm_decompose(std::size_t n, unsigned d, std::size_t cap) {
    const DecompTable t = decomposition_table(n, d, cap);
    Rendered r;
    r.result = table_json(t);
    std::vector<std::vector<std::string>> rows{{"summand", "k", "i", "mult"}};
    r.csv_rows.push_back({"k", "i", "mult"});
    for (const auto& [key, m] : sorted_entries(t)) {
        rows.push_back({motive(power_name(key.first), key.second), std::to_string(key.first), std::to_string(key.second), m.get_str()});
        r.csv_rows.push_back({std::to_string(key.first), std::to_string(key.second), m.get_str()});
    }
    r.table = "h(X[" + std::to_string(n) + "]), dim X = " + std::to_string(d) + "\n" + columns(rows);
    return r;
}

RankProfile load_ranks(const std::string& source, unsigned d, std::size_t n) {
    if (source == "projective") return RankProfile::projective(d, n);
    std::ifstream in(source);
    if (!in) throw std::invalid_argument("cannot open rank file '" + source + "'");
    const auto doc = nlohmann::json::parse(in);
    if (!doc.is_object()) throw std::invalid_argument("rank file must be a JSON object mapping k to rank");
    RankProfile p;
    for (std::size_t k = 1; k <= n; ++k) {
        const std::string key = std::to_string(k);
        if (!doc.contains(key)) throw std::invalid_argument("rank file has no entry for k=" + key);
        const auto& v = doc.at(key);
        p.ranks.push_back(v.is_string() ? BigInt(v.get<std::string>()) : BigInt(v.get<long>()));
    }
    return p;
}

Rendered fm_rank(std::size_t n, unsigned d, const std::string& source, std::size_t cap) {
    const DecompTable t = decomposition_table(n, d, cap);
    const RankProfile ranks = load_ranks(source, d, n);
    const BigInt total = chow_rank(t, ranks);
    Rendered r;
    ojson breakdown = ojson::array();
    std::vector<std::vector<std::string>> rows{{"summand", "mult", "rank", "contribution"}};
    r.csv_rows.push_back({"k", "i", "mult", "rank", "contribution"});
    for (const auto& [key, m] : sorted_entries(t)) {
        const BigInt& rk = ranks.at(key.first);
        breakdown.push_back({{"k", key.first}, {"i", key.second}, {"mult", big(m)}, {"rank", big(rk)}});
        rows.push_back({motive(power_name(key.first), key.second), m.get_str(), rk.get_str(), BigInt(m * rk).get_str()});
        r.csv_rows.push_back({std::to_string(key.first), std::to_string(key.second), m.get_str(), rk.get_str(),
                              BigInt(m * rk).get_str()});
    }
    auto rank_list = ojson::array();
    for (const auto& v : ranks.ranks) rank_list.push_back(big(v));
    r.result = {{"n", n}, {"d", d}, {"ranks", rank_list}, {"breakdown", breakdown}, {"total", big(total)}};
    r.csv_rows.push_back({"total", "", "", "", total.get_str()});
    r.table = columns(rows) + "total rank: " + total.get_str() + "\n";
    return r;
}

Rendered fm_genfun(unsigned d, std::size_t order, std::size_t order_cap) {
    if (order < 1) throw std::invalid_argument("--order must be >= 1");
    if (order > order_cap) throw CapExceeded("generating function order", order, order_cap);
    const ExpSeries N = solve_N(d, order);
    std::vector<SigmaPoly> sig;
    if (order <= kSigmaFormMaxOrder) sig = sigma_expansion(order);
    Rendered r;
    ojson fs = ojson::array();
    std::ostringstream tbl;
    r.csv_rows.push_back({"n", "f_n", "sigma_form"});
    for (std::size_t n = 1; n <= order; ++n) {
        ojson e{{"n", n}, {"coeffs", poly_json(N[n])}, {"poly", N[n].str()}};
        std::string sform;
        if (!sig.empty()) {
            if (evaluate_sigma(sig[n], d) != N[n])
                throw CrossCheckFailure("sigma form of f_" + std::to_string(n) + " disagrees with the solved series");
            sform = sigma_str(sig[n]);
            e["sigma"] = sform;
        }
        fs.push_back(e);
        tbl << "f" << n << " = " << N[n].str() << "\n";
        if (!sform.empty()) tbl << std::string(std::to_string(n).size() + 2, ' ') << "= " << sform << "\n";
        r.csv_rows.push_back({std::to_string(n), N[n].str(), sform});
    }
    r.result = {{"d", d}, {"order", order}, {"f", fs}};
    r.table = "N(x,t) = sum f_n t^n/n!, dim X = d = " + std::to_string(d) + ", s_j = x + ... + x^(dj-1)\n" + tbl.str();
    return r;
}

BettiVector betti_for(const std::vector<long>& b, std::optional<unsigned> dim) {
    BettiVector bv(b);
    if (dim && bv.dim() != *dim)
        throw std::invalid_argument("Betti vector has length " + std::to_string(b.size()) + " but --dim is " +
                                    std::to_string(*dim));
    return bv;
}

void poincare_render(Rendered& r, const IntPoly& p, const std::string& title) {
    std::vector<std::vector<std::string>> rows{{"j", "b_j"}};
    r.csv_rows.push_back({"j", "b_j"});
    for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
        rows.push_back({std::to_string(j), p.coeffs()[j].get_str()});
        r.csv_rows.push_back({std::to_string(j), p.coeffs()[j].get_str()});
    }
    r.table = title + "\nP(t) = " + p.str("t") + "\n" + columns(rows);
}

Rendered fm_betti(std::size_t n, const BettiVector& b, std::size_t cap) {
    const IntPoly p = poincare(n, b.dim(), b, cap);
    Rendered r;
    r.result = {{"n", n}, {"d", b.dim()}, {"input_duality", b.satisfies_duality()}, {"betti", poly_json(p)},
                {"poincare", p.str("t")}};
    poincare_render(r, p, "Betti numbers of X[" + std::to_string(n) + "]");
    if (!b.satisfies_duality()) r.table += "note: input Betti numbers violate b_i = b_(2d-i)\n";
    return r;
}

std::vector<std::pair<QuotientKey, BigInt>> sorted_quotient(const QuotientDecomp& q) {
    std::vector<std::pair<QuotientKey, BigInt>> rows(q.entries.begin(), q.entries.end());
    std::stable_sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
        const auto& na = a.first.first;
        const auto& nb = b.first.first;
        std::size_t sa = 0, sb = 0;
        for (unsigned v : na) sa += v;
        for (unsigned v : nb) sb += v;
        if (sa != sb) return sa > sb;
        if (na != nb) return na > nb;
        return a.first.second < b.first.second;
    });
    return rows;
}

Rendered quotient_decompose(std::size_t n, unsigned d, bool verbose, std::optional<BettiVector> betti, std::size_t cap) {
    const QuotientDecomp q = quotient_decomposition(n, d, cap);
    Rendered r;
    ojson entries = ojson::array();
    std::vector<std::vector<std::string>> rows{{"summand", "nu", "m", "lambda"}};
    r.csv_rows.push_back({"nu", "m", "lambda"});
    for (const auto& [key, lam] : sorted_quotient(q)) {
        ojson e{{"nu", key.first}, {"m", key.second}, {"lambda", big(lam)}};
        if (verbose) e["forests"] = q.forests.at(key);
        entries.push_back(e);
        std::string nu;
        for (std::size_t i = 0; i < key.first.size(); ++i) nu += (i ? " " : "") + std::to_string(key.first[i]);
        rows.push_back({motive(nu_name(key.first), key.second), "{" + nu + "}", std::to_string(key.second), lam.get_str()});
        r.csv_rows.push_back({nu, std::to_string(key.second), lam.get_str()});
        if (verbose)
            for (const auto& f : q.forests.at(key)) rows.push_back({"", "", "", "  " + f});
    }
    r.result = {{"n", n}, {"d", d}, {"entries", entries}};
    r.table = "h(X[" + std::to_string(n) + "]/S_" + std::to_string(n) + "), dim X = " + std::to_string(d) + "\n" + columns(rows);
    if (betti) {
        const IntPoly p = quotient_poincare(q, *betti);
        r.result["poincare"] = poly_json(p);
        r.table += "P(t) = " + p.str("t") + "\n";
    }
    return r;
}

Rendered quotient_betti(std::size_t n, const BettiVector& b, std::size_t cap) {
    const IntPoly p = quotient_poincare(n, b.dim(), b, cap);
    Rendered r;
    r.result = {{"n", n}, {"d", b.dim()}, {"betti", poly_json(p)}, {"poincare", p.str("t")}};
    poincare_render(r, p, "Betti numbers of X[" + std::to_string(n) + "]/S_" + std::to_string(n));
    return r;
}

std::vector<std::string> split_ids(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, ';'))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

Rendered wonderful_decompose(const std::string& file, const std::string& order_text, bool iterative) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot open arrangement file '" + file + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("arrangement file is not valid JSON: ") + e.what());
    }
    const Arrangement arr = Arrangement::from_json(doc);
    const Decomposition closed = decompose(arr);
    Rendered r;
    ojson summands = ojson::array();
    std::vector<std::vector<std::string>> rows{{"summand", "dim", "twist", "mult"}};
    r.csv_rows.push_back({"stratum", "dim", "twist", "mult"});
    for (const auto& s : closed.summands(arr)) {
        ojson e{{"stratum", s.stratum}, {"dim", s.dim}, {"twist", s.twist}, {"mult", big(s.multiplicity)}};
        if (!s.annotation.empty()) e["name"] = s.annotation;
        summands.push_back(e);
        std::string label = motive(s.stratum, s.twist);
        if (!s.annotation.empty()) label += "  [" + s.annotation + "]";
        rows.push_back({label, std::to_string(s.dim), std::to_string(s.twist), s.multiplicity.get_str()});
        r.csv_rows.push_back({s.stratum, std::to_string(s.dim), std::to_string(s.twist), s.multiplicity.get_str()});
    }
    r.result = {{"nests", enumerate_g_nests(arr).size()}, {"summands", summands}, {"total", big(closed.total())}};
    r.table = columns(rows);
    if (iterative || !order_text.empty()) {
        const auto order = order_text.empty() ? default_order(arr) : split_ids(order_text);
        const Decomposition it = decompose_iterative(arr, order);
        r.result["order"] = order;
        r.result["iterative_agrees"] = it == closed;
        if (it != closed) {
            r.code = exit_code::cross_check;
            r.table += "iterative blow-up along the given order DISAGREES with the closed form\n";
        } else {
            r.table += "iterative blow-up along the given order agrees with the closed form\n";
        }
    }
    return r;
}

Rendered wonderful_export_fm(std::size_t n, unsigned d) {
    const Arrangement arr = fm_arrangement(n, d);
    Rendered r;
    r.result = arr.to_json();
    r.table = arr.to_json().dump(2) + "\n";
    r.csv_rows.push_back({"id", "dim", "building"});
    for (std::size_t i = 0; i < arr.size(); ++i)
        r.csv_rows.push_back({arr.id(i), std::to_string(arr.dim(i)), arr.is_building(i) ? "1" : "0"});
    return r;
}

Rendered verify(const std::string& suite, std::size_t max_n, unsigned max_dim, std::size_t cap) {
    const auto results = run_suite(suite, max_n, max_dim, cap);
    Rendered r;
    ojson checks = ojson::array();
    std::vector<std::vector<std::string>> rows;
    r.csv_rows.push_back({"suite", "check", "cases", "failures"});
    bool all = true;
    for (const auto& c : results) {
        ojson e{{"suite", c.suite}, {"check", c.check}, {"cases", c.cases}, {"failures", c.failures}};
        if (!c.passed()) e["first_failure"] = c.first_failure;
        checks.push_back(e);
        rows.push_back({c.passed() ? "PASS" : "FAIL", c.suite, c.check, std::to_string(c.cases) + " cases"});
        if (!c.passed()) rows.push_back({"", "", "first failure: " + c.first_failure, ""});
        r.csv_rows.push_back({c.suite, c.check, std::to_string(c.cases), std::to_string(c.failures)});
        all = all && c.passed();
    }
    r.result = {{"passed", all}, {"checks", checks}};
    r.table = columns(rows) + (all ? "all checks passed\n" : "SOME CHECKS FAILED\n");
    r.code = all ? exit_code::ok : exit_code::verify_failed;
    return r;
}

std::size_t default_cap() {
    if (const char* env = std::getenv("WONDERFUL_CAP_N")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
        throw std::invalid_argument(std::string("WONDERFUL_CAP_N is not a positive integer: '") + env + "'");
    }
    return kDefaultNestCap;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chow motive decompositions of wonderful compactifications"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", kVersion);

    std::string format = "table";
    std::size_t unsafe_cap = 0;
    app.add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--unsafe-cap", unsafe_cap, "raise the enumeration cap (cost grows exponentially)");

    std::size_t n = 0, order = 0, max_n = 5;
    unsigned dim = 0, max_dim = 3;
    std::string ranks = "projective", file, order_ids, suite = "all";
    std::vector<long> betti;
    bool verbose = false, iterative = false;

    auto* fm = app.add_subcommand("fm", "configuration spaces X[n]");
    fm->require_subcommand(1);
    auto* fm_dec = fm->add_subcommand("decompose", "decomposition table of h(X[n])");
    fm_dec->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    fm_dec->add_option("--dim", dim)->required()->check(CLI::PositiveNumber);
    auto* fm_rk = fm->add_subcommand("rank", "total rank of A(X[n])");
    fm_rk->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    fm_rk->add_option("--dim", dim)->required()->check(CLI::PositiveNumber);
    fm_rk->add_option("--ranks", ranks, "'projective' or a JSON file mapping k to rank A(X^k)");
    auto* fm_gf = fm->add_subcommand("genfun", "coefficients f_n of N(x,t)");
    fm_gf->add_option("--dim", dim)->required()->check(CLI::PositiveNumber);
    fm_gf->add_option("--order", order)->required();
    auto* fm_bt = fm->add_subcommand("betti", "Betti numbers of X[n]");
    fm_bt->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    fm_bt->add_option("--betti", betti, "b_0,...,b_2d of X")->required()->delimiter(',');
    auto* fm_bt_dim = fm_bt->add_option("--dim", dim)->check(CLI::PositiveNumber);

    auto* qt = app.add_subcommand("quotient", "symmetric quotients X[n]/S_n");
    qt->require_subcommand(1);
    auto* qt_dec = qt->add_subcommand("decompose", "lambda(nu, m) table");
    qt_dec->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    qt_dec->add_option("--dim", dim)->required()->check(CLI::PositiveNumber);
    auto* qt_dec_betti = qt_dec->add_option("--betti", betti, "also print the Poincare polynomial")->delimiter(',');
    qt_dec->add_flag("--verbose", verbose, "list canonical forests per summand");
    auto* qt_bt = qt->add_subcommand("betti", "Betti numbers of X[n]/S_n");
    qt_bt->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    qt_bt->add_option("--betti", betti)->required()->delimiter(',');
    auto* qt_bt_dim = qt_bt->add_option("--dim", dim)->check(CLI::PositiveNumber);

    auto* wd = app.add_subcommand("wonderful", "general arrangements");
    wd->require_subcommand(1);
    auto* wd_dec = wd->add_subcommand("decompose", "decomposition of an arrangement file");
    wd_dec->add_option("--file,--arrangement", file)->required()->check(CLI::ExistingFile);
    wd_dec->add_option("--order", order_ids, "building ids separated by ';', smallest strata first");
    wd_dec->add_flag("--iterative", iterative, "replay the blow-ups and compare");
    auto* wd_exp = wd->add_subcommand("export-fm", "print the polydiagonal arrangement of X^n as JSON");
    wd_exp->add_option("--n", n)->required()->check(CLI::PositiveNumber);
    wd_exp->add_option("--dim", dim)->required()->check(CLI::PositiveNumber);

    auto* vf = app.add_subcommand("verify", "run invariant suites");
    std::vector<std::string> suites{"all"};
    for (const auto& s : suite_names()) suites.push_back(s);
    vf->add_option("--suite", suite)->check(CLI::IsMember(suites));
    vf->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
    vf->add_option("--max-dim", max_dim)->check(CLI::PositiveNumber);

    std::vector<std::string> rev(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
    std::reverse(rev.begin(), rev.end());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return exit_code::ok;
        }
        err << "error: " << e.what() << "\n";
        return exit_code::invalid_input;
    }

    std::string command;
    ojson params;
    try {
        const std::size_t cap = unsafe_cap ? unsafe_cap : default_cap();
        const std::size_t order_cap = std::max(kGenfunOrderCap, unsafe_cap);
        Rendered r;
        if (fm_dec->parsed()) {
            command = "fm decompose";
            params = {{"n", n}, {"dim", dim}};
            r = fm_decompose(n, dim, cap);
        } else if (fm_rk->parsed()) {
            command = "fm rank";
            params = {{"n", n}, {"dim", dim}, {"ranks", ranks}};
            r = fm_rank(n, dim, ranks, cap);
        } else if (fm_gf->parsed()) {
            command = "fm genfun";
            params = {{"dim", dim}, {"order", order}};
            r = fm_genfun(dim, order, order_cap);
        } else if (fm_bt->parsed()) {
            command = "fm betti";
            params = {{"n", n}, {"betti", betti}};
            r = fm_betti(n, betti_for(betti, fm_bt_dim->count() ? std::optional<unsigned>(dim) : std::nullopt), cap);
        } else if (qt_dec->parsed()) {
            command = "quotient decompose";
            params = {{"n", n}, {"dim", dim}};
            std::optional<BettiVector> b;
            if (qt_dec_betti->count()) {
                b = betti_for(betti, dim);
                params["betti"] = betti;
            }
            if (verbose) params["verbose"] = true;
            r = quotient_decompose(n, dim, verbose, b, cap);
        } else if (qt_bt->parsed()) {
            command = "quotient betti";
            params = {{"n", n}, {"betti", betti}};
            r = quotient_betti(n, betti_for(betti, qt_bt_dim->count() ? std::optional<unsigned>(dim) : std::nullopt), cap);
        } else if (wd_dec->parsed()) {
            command = "wonderful decompose";
            params = {{"file", file}};
            if (!order_ids.empty()) params["order"] = order_ids;
            if (iterative) params["iterative"] = true;
            r = wonderful_decompose(file, order_ids, iterative);
        } else if (wd_exp->parsed()) {
            command = "wonderful export-fm";
            params = {{"n", n}, {"dim", dim}};
            r = wonderful_export_fm(n, dim);
        } else if (vf->parsed()) {
            command = "verify";
            params = {{"suite", suite}, {"max_n", max_n}, {"max_dim", max_dim}};
            r = verify(suite, max_n, max_dim, cap);
        } else {
            err << "error: no command given\n";
            return exit_code::invalid_input;
        }

        if (format == "json") {
            ojson doc{{"command", command}, {"params", params}, {"result", r.result}, {"version", kVersion}};
            out << doc.dump(2) << "\n";
        } else if (format == "csv") {
            out << csv(r.csv_rows);
        } else {
            out << r.table;
        }
        return r.code;
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << " (raise with --unsafe-cap or WONDERFUL_CAP_N)\n";
        return exit_code::cap_exceeded;
    } catch (const CrossCheckFailure& e) {
        err << "cross-check failure: " << e.what() << "\n";
        return exit_code::cross_check;
    } catch (const InexactDivision& e) {
        err << "cross-check failure: " << e.what() << "\n";
        return exit_code::cross_check;
    } catch (const ArrangementError& e) {
        err << "invalid arrangement: " << e.what() << "\n";
        return exit_code::invalid_input;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::invalid_input;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::invalid_input;
    } catch (const nlohmann::json::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code::invalid_input;
    }
}

}  // namespace wonderful
