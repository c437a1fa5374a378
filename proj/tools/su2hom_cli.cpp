// su2hom: exact cohomology / K-theory tables for spaces of commuting tuples
// in SU(2) and their desingularized models, with built-in cross-verification.
//
// Exit codes: 0 = success, 1 = mathematical mismatch, 2 = usage or guard error.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "su2hom/closed_form.hpp"
#include "su2hom/errors.hpp"
#include "su2hom/json_io.hpp"
#include "su2hom/restriction.hpp"
#include "su2hom/ring.hpp"
#include "su2hom/spaces.hpp"
#include "su2hom/verify.hpp"

using nlohmann::json;
using namespace su2hom;

namespace {

struct Options {
    int n = 0;
    std::string n_range;
    std::string space = "blowup";
    std::string theory = "cohomology-z";
    std::string format = "json";
    std::string out;
    std::string config;
    bool oracle = false;
    int max_n = 0;  // 0 = unset; precedence: flag > config > env > default 6
    std::vector<std::string> checks;
    int degree = 9;
};

struct BoundOptions {
    CLI::Option* n = nullptr;
    CLI::Option* n_range = nullptr;
    CLI::Option* space = nullptr;
    CLI::Option* theory = nullptr;
    CLI::Option* format = nullptr;
    CLI::Option* out = nullptr;
    CLI::Option* oracle = nullptr;
    CLI::Option* max_n = nullptr;
    CLI::Option* checks = nullptr;
    CLI::Option* degree = nullptr;
};

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// flags > config file > environment > defaults
void merge_config(Options& o, const BoundOptions& b) {
    json cfg;
    if (!o.config.empty()) {
        std::ifstream in(o.config);
        if (!in) throw UsageError("cannot open config file " + o.config);
        try {
            in >> cfg;
        } catch (const json::parse_error& e) {
            throw UsageError("config file is not valid JSON: " + std::string(e.what()));
        }
    }
    auto absent = [](CLI::Option* opt) { return opt != nullptr && opt->count() == 0; };
    auto take = [&](CLI::Option* opt, const char* key, auto& slot) {
        if (absent(opt) && cfg.contains(key)) cfg.at(key).get_to(slot);
    };
    take(b.n, "n", o.n);
    take(b.n_range, "n-range", o.n_range);
    take(b.space, "space", o.space);
    take(b.theory, "theory", o.theory);
    take(b.format, "format", o.format);
    take(b.out, "out", o.out);
    take(b.oracle, "oracle", o.oracle);
    take(b.max_n, "max-n", o.max_n);
    take(b.degree, "degree", o.degree);
    if (absent(b.checks) && cfg.contains("check")) {
        if (cfg.at("check").is_string()) o.checks = {cfg.at("check").get<std::string>()};
        else cfg.at("check").get_to(o.checks);
    }
    if (o.max_n == 0) {
        if (const char* env = std::getenv("SU2HOM_MAX_N")) {
            try {
                o.max_n = std::stoi(env);
            } catch (const std::exception&) {
                throw UsageError("SU2HOM_MAX_N is not an integer: " + std::string(env));
            }
        }
    }
    if (o.max_n == 0) o.max_n = kDefaultOracleGuard;
    if (o.max_n < 1) throw UsageError("max-n guard must be >= 1");
}

std::pair<int, int> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(s);
            return {v, v};
        }
        return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
    } catch (const std::exception&) {
        throw UsageError("cannot parse range '" + s + "' (expected A..B)");
    }
}

std::pair<int, int> resolve_range(const Options& o, std::pair<int, int> fallback) {
    std::pair<int, int> r = fallback;
    if (!o.n_range.empty()) r = parse_range(o.n_range);
    else if (o.n > 0) r = {o.n, o.n};
    if (r.first < 1 || r.second < r.first)
        throw UsageError("range must satisfy 1 <= first <= last");
    return r;
}

void emit(const Options& o, const std::string& body) {
    if (o.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write to " + o.out);
    f << body;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

ProgressFn stderr_progress() {
    return [](const std::string& line) { std::cerr << "  .. " << line << "\n"; };
}

Space parse_space(const std::string& s) {
    if (s == "blowup") return Space::Blowup;
    if (s == "yn") return Space::Yn;
    throw UsageError("space must be 'blowup' or 'yn'");
}

Theory parse_theory(const std::string& t) {
    if (t == "cohomology-z") return Theory::CohomologyZ;
    if (t == "cohomology-z2") return Theory::CohomologyZ2;
    if (t == "k") return Theory::K;
    throw UsageError("theory must be 'cohomology-z', 'cohomology-z2', or 'k'");
}

// ---- groups -------------------------------------------------------------

int run_groups(const Options& o) {
    if (o.n < 1) throw UsageError("groups requires --n >= 1");
    const Space space = parse_space(o.space);
    const Theory theory = parse_theory(o.theory);
    const GroupTable table = make_group_table(space, theory, o.n);

    GroupTable oracle_table;
    std::vector<std::string> mismatches;
    if (o.oracle) {
        if (theory == Theory::K)
            throw UsageError("no cellular oracle for K tables; use a cohomology theory");
        const ChainComplex c =
            space == Space::Blowup ? blowup_complex(o.n, o.max_n) : collapse_to_yn(o.n, o.max_n);
        const auto groups = c.cohomology(
            theory == Theory::CohomologyZ ? Coefficients::Z : Coefficients::Z2,
            [](int k, const AbelianGroup& g) {
                std::cerr << "  .. oracle H^" << k << " = " << g.to_string() << "\n";
            });
        oracle_table.space = table.space;
        oracle_table.theory = table.theory;
        oracle_table.n = o.n;
        for (int i = 0; i < static_cast<int>(groups.size()); ++i)
            oracle_table.rows.push_back({i, groups[i], "cellular oracle"});
        for (std::size_t i = 0; i < table.rows.size(); ++i) {
            const AbelianGroup& want = table.rows[i].group;
            const AbelianGroup got =
                i < oracle_table.rows.size() ? oracle_table.rows[i].group : AbelianGroup();
            if (got != want)
                mismatches.push_back("degree " + std::to_string(table.rows[i].degree) +
                                     ": oracle " + got.to_string() + " != closed form " +
                                     want.to_string());
        }
    }
    const std::string verdict =
        !o.oracle ? "" : (mismatches.empty() ? "all degrees agree" : "MISMATCH");

    if (o.format == "json") {
        json doc{{"command", "groups"}, {"guard", o.max_n}, {"table", to_json(table)}};
        if (o.oracle) {
            doc["oracle"] = to_json(oracle_table);
            doc["match"] = json{{"verdict", verdict}, {"mismatches", mismatches}};
        }
        emit(o, dump(doc));
    } else if (o.format == "csv") {
        std::string body = group_table_csv(table);
        if (o.oracle) body += group_table_csv(oracle_table);
        emit(o, body);
    } else {
        std::string body = group_table_markdown(table);
        if (o.oracle) {
            body += "\n" + group_table_markdown(oracle_table);
            body += "\nmatch verdict: " + verdict + "\n";
            for (const auto& m : mismatches) body += "- " + m + "\n";
        }
        emit(o, body);
    }
    return mismatches.empty() ? 0 : 1;
}

// ---- ring ---------------------------------------------------------------

int run_ring(const Options& o) {
    if (o.n < 1) throw UsageError("ring requires --n >= 1");
    if (o.n > o.max_n)
        throw GuardExceeded("full multiplication tables are guarded at n <= " +
                            std::to_string(o.max_n));
    const Space space = parse_space(o.space);
    const auto ring = space == Space::Blowup ? RingPresentation::blowup_ring(o.n)
                                             : RingPresentation::yn_ring(o.n);
    const auto gens = ring.generators();

    json jgens = json::array();
    for (const auto& g : gens)
        jgens.push_back({{"symbol", g.to_string()}, {"about", RingPresentation::describe(g)}});

    json jbasis{{"even", json::array()}, {"odd", json::array()}};
    for (Parity p : {Parity::Even, Parity::Odd})
        for (const Monomial& m : ring.basis(p))
            jbasis[p == Parity::Even ? "even" : "odd"].push_back(ring.monomial_name(m));

    struct Row {
        std::string left, right, value;
        bool undetermined;
    };
    std::vector<Row> rows;
    for (const auto& gi : gens)
        for (const auto& gj : gens) {
            const auto prod = ring.multiply(ring.generator(gi), ring.generator(gj));
            rows.push_back(
                {gi.to_string(), gj.to_string(), ring.to_string(prod), !prod.determined()});
        }

    if (o.format == "json") {
        json jrows = json::array();
        for (const auto& r : rows)
            jrows.push_back({{"left", r.left},
                             {"right", r.right},
                             {"undetermined", r.undetermined},
                             {"value", r.value}});
        emit(o, dump(json{{"command", "ring"},
                          {"space", o.space},
                          {"n", o.n},
                          {"generators", jgens},
                          {"basis", jbasis},
                          {"products", jrows}}));
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "left,right,value,undetermined\n";
        for (const auto& r : rows)
            os << csv_escape(r.left) << ',' << csv_escape(r.right) << ',' << csv_escape(r.value)
               << ',' << (r.undetermined ? "yes" : "no") << '\n';
        emit(o, os.str());
    } else {
        std::ostringstream os;
        os << "### " << o.space << " ring, n = " << o.n << "\n\n";
        os << "generators:";
        for (const auto& g : gens) os << " " << g.to_string();
        os << "\n\n| left | right | product |\n|---|---|---|\n";
        for (const auto& r : rows)
            os << "| " << r.left << " | " << r.right << " | " << r.value
               << (r.undetermined ? " (undetermined)" : "") << " |\n";
        emit(o, os.str());
    }
    return 0;
}

// ---- verify -------------------------------------------------------------

int run_verify(const Options& o) {
    std::vector<std::string> names = o.checks.empty() ? check_names() : o.checks;
    for (const auto& name : names)
        if (std::find(check_names().begin(), check_names().end(), name) == check_names().end())
            throw UsageError("unknown check '" + name + "'");
    const auto range = resolve_range(o, {1, 4});

    std::vector<CheckResult> results;
    for (const auto& name : names) {
        bool ran = false;
        if (!check_depends_on_n(name)) {
            results.push_back(run_named_check(name, 0, o.max_n, stderr_progress()));
            ran = true;
        } else {
            for (int n = range.first; n <= range.second; ++n) {
                if (!check_applicable(name, n, o.max_n)) continue;
                results.push_back(run_named_check(name, n, o.max_n, stderr_progress()));
                ran = true;
            }
        }
        if (!ran && !o.checks.empty())
            throw GuardExceeded("check '" + name + "' is not applicable in range " +
                                std::to_string(range.first) + ".." +
                                std::to_string(range.second) + " under guard " +
                                std::to_string(o.max_n));
    }

    int failed = 0;
    for (const auto& r : results) failed += r.pass ? 0 : 1;

    if (o.format == "json") {
        json jchecks = json::array();
        for (const auto& r : results)
            jchecks.push_back({{"name", r.name},
                               {"n", r.n},
                               {"pass", r.pass},
                               {"detail", r.detail},
                               {"ms", r.ms}});
        emit(o, dump(json{{"command", "verify"},
                          {"guard", o.max_n},
                          {"range", {range.first, range.second}},
                          {"checks", jchecks},
                          {"failed", failed},
                          {"pass", failed == 0}}));
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "check,n,pass,ms,detail\n";
        for (const auto& r : results)
            os << r.name << ',' << r.n << ',' << (r.pass ? "pass" : "FAIL") << ',' << r.ms << ','
               << csv_escape(r.detail) << '\n';
        emit(o, os.str());
    } else {
        std::ostringstream os;
        os << "| check | n | result | ms | detail |\n|---|---|---|---|---|\n";
        for (const auto& r : results)
            os << "| " << r.name << " | " << r.n << " | " << (r.pass ? "pass" : "FAIL") << " | "
               << r.ms << " | " << r.detail << " |\n";
        os << "\n" << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) FAILED")
           << "\n";
        emit(o, os.str());
    }
    return failed == 0 ? 0 : 1;
}

// ---- restrict -----------------------------------------------------------

int run_restrict(const Options& o) {
    if (o.n < 1) throw UsageError("restrict requires --n >= 1");
    if (o.n > 20) throw UsageError("restriction tables are capped at n <= 20");
    const Mod2Matrix m = restriction_matrix(o.n);
    const int rank = m.rank();
    const int expected = 1 + o.n + o.n * (o.n - 1) / 2;

    std::vector<std::string> row_labels{"u"};
    for (int i = 1; i <= o.n; ++i) row_labels.push_back("v(" + std::to_string(i) + ")");
    for (int i = 1; i <= o.n; ++i)
        for (int j = i + 1; j <= o.n; ++j)
            row_labels.push_back("x(" + std::to_string(i) + "," + std::to_string(j) + ")");

    std::vector<std::string> col_labels;
    for (int c = 0; c < m.cols(); ++c) {
        std::string s;
        for (int v : sign_vector_at(o.n, c)) s += v == 1 ? '+' : '-';
        col_labels.push_back(s);
    }
    std::vector<std::string> bits;
    for (int i = 0; i < m.rows(); ++i) {
        std::string s;
        for (int j = 0; j < m.cols(); ++j) s += m.get(i, j) ? '1' : '0';
        bits.push_back(s);
    }

    if (o.format == "json") {
        emit(o, dump(json{{"command", "restrict"},
                          {"n", o.n},
                          {"row_labels", row_labels},
                          {"column_labels", col_labels},
                          {"matrix", bits},
                          {"rank", rank},
                          {"expected_rank", expected},
                          {"full_rank", rank == expected}}));
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "generator";
        for (const auto& c : col_labels) os << ',' << c;
        os << '\n';
        for (int i = 0; i < m.rows(); ++i) {
            os << row_labels[i];
            for (int j = 0; j < m.cols(); ++j) os << ',' << (m.get(i, j) ? 1 : 0);
            os << '\n';
        }
        os << "rank," << rank << "\nexpected," << expected << "\nfull_rank,"
           << (rank == expected ? "yes" : "no") << '\n';
        emit(o, os.str());
    } else {
        std::ostringstream os;
        os << "### restriction matrix, n = " << o.n << "\n\n| generator |";
        for (const auto& c : col_labels) os << " " << c << " |";
        os << "\n|---|";
        for (std::size_t c = 0; c < col_labels.size(); ++c) os << "---|";
        os << "\n";
        for (int i = 0; i < m.rows(); ++i) {
            os << "| " << row_labels[i] << " |";
            for (int j = 0; j < m.cols(); ++j) os << " " << (m.get(i, j) ? 1 : 0) << " |";
            os << "\n";
        }
        os << "\nrank " << rank << " (expected " << expected << ")\n";
        emit(o, os.str());
    }
    return rank == expected ? 0 : 1;
}

// ---- fi-growth ----------------------------------------------------------

int run_fi_growth(const Options& o) {
    const auto range = resolve_range(o, {1, 12});
    const int len = range.second - range.first + 1;
    if (o.degree < 0) throw UsageError("degree must be >= 0");
    if (len < o.degree + 2)
        throw InsufficientData("need at least degree+2 = " + std::to_string(o.degree + 2) +
                               " samples, got " + std::to_string(len));

    std::vector<long long> torsion_seq, free_seq;
    for (int n = range.first; n <= range.second; ++n) {
        torsion_seq.push_back(yn_mod2_betti(n, 3));
        free_seq.push_back(yn_cohomology(n, 3).free_rank);
    }

    // finite differences of the mod-2 sequence, one level per tested degree
    std::vector<std::vector<long long>> differences{torsion_seq};
    for (int d = 0; d <= o.degree; ++d) {
        const auto& prev = differences.back();
        if (prev.size() < 2) break;
        std::vector<long long> next(prev.size() - 1);
        for (std::size_t i = 0; i + 1 < prev.size(); ++i) next[i] = prev[i + 1] - prev[i];
        differences.push_back(std::move(next));
    }

    int poly_degree = -1;  // smallest degree that fits, -1 = none up to o.degree
    for (int d = 0; d <= o.degree; ++d) {
        if (polynomial_growth_test(torsion_seq, d)) {
            poly_degree = d;
            break;
        }
    }
    const std::string torsion_verdict =
        poly_degree < 0 ? "non-polynomial through degree " + std::to_string(o.degree)
                        : "fits a polynomial of degree " + std::to_string(poly_degree);
    const bool free_linear = polynomial_growth_test(free_seq, 1);
    const std::string free_verdict =
        free_linear ? "polynomial of degree <= 1" : "not linear";

    if (o.format == "json") {
        emit(o, dump(json{{"command", "fi-growth"},
                          {"range", {range.first, range.second}},
                          {"degree", o.degree},
                          {"torsion_sequence", torsion_seq},
                          {"free_sequence", free_seq},
                          {"differences", differences},
                          {"torsion_verdict", torsion_verdict},
                          {"free_verdict", free_verdict}}));
    } else if (o.format == "csv") {
        std::ostringstream os;
        os << "n,mod2_dim_degree3,free_rank_degree3\n";
        for (int i = 0; i < len; ++i)
            os << range.first + i << ',' << torsion_seq[i] << ',' << free_seq[i] << '\n';
        emit(o, os.str());
    } else {
        std::ostringstream os;
        os << "### growth of degree-3 cohomology, n = " << range.first << ".." << range.second
           << "\n\n| n | dim_Z2 H^3 | free rank H^3 |\n|---|---|---|\n";
        for (int i = 0; i < len; ++i)
            os << "| " << range.first + i << " | " << torsion_seq[i] << " | " << free_seq[i]
               << " |\n";
        os << "\nmod-2 sequence: " << torsion_verdict << "\n";
        os << "free-rank sequence: " << free_verdict << "\n";
        emit(o, os.str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "exact cohomology and K-theory of spaces of commuting tuples in SU(2)\n"
        "and of their desingularized models, computed two independent ways"};
    app.require_subcommand(1);
    app.get_formatter()->column_width(34);

    Options o;
    std::map<CLI::App*, BoundOptions> bounds;  // per subcommand, for config merging

    auto add_common = [&](CLI::App* sub, bool with_n, bool with_range) -> BoundOptions& {
        BoundOptions& b = bounds[sub];
        if (with_n) b.n = sub->add_option("--n", o.n, "number of circle factors");
        if (with_range)
            b.n_range = sub->add_option("--n-range", o.n_range, "inclusive range A..B");
        b.format = sub->add_option("--format", o.format, "json | csv | markdown")
                       ->check(CLI::IsMember({"json", "csv", "markdown"}));
        b.out = sub->add_option("--out", o.out, "write the report to a file");
        b.max_n = sub->add_option("--max-n", o.max_n, "guard for cell-level runs (default 6)");
        sub->add_option("--config", o.config, "JSON config file (flags take precedence)");
        return b;
    };

    CLI::App* groups = app.add_subcommand("groups", "closed-form group tables, optionally "
                                                    "cross-checked against the cellular oracle");
    {
        BoundOptions& b = add_common(groups, true, false);
        b.space = groups->add_option("--space", o.space, "blowup | yn")
                      ->check(CLI::IsMember({"blowup", "yn"}));
        b.theory = groups->add_option("--theory", o.theory, "cohomology-z | cohomology-z2 | k")
                       ->check(CLI::IsMember({"cohomology-z", "cohomology-z2", "k"}));
        b.oracle = groups->add_flag("--oracle", o.oracle, "also run the cellular oracle");
    }

    CLI::App* ring = app.add_subcommand("ring", "generators, canonical basis, and the full "
                                                "multiplication table of a presented K-ring");
    {
        BoundOptions& b = add_common(ring, true, false);
        b.space = ring->add_option("--space", o.space, "blowup | yn")
                      ->check(CLI::IsMember({"blowup", "yn"}));
    }

    CLI::App* verify = app.add_subcommand("verify", "run cross-checks between the independent "
                                                    "computations");
    {
        BoundOptions& b = add_common(verify, true, true);
        b.checks = verify->add_option("--check", o.checks, "run only the named checks");
    }

    CLI::App* restrict_cmd =
        app.add_subcommand("restrict", "restriction matrix to the projective-plane pieces");
    add_common(restrict_cmd, true, false);

    CLI::App* fi = app.add_subcommand("fi-growth", "growth of the degree-3 cohomology across n");
    {
        BoundOptions& b = add_common(fi, false, true);
        b.degree = fi->add_option("--degree", o.degree, "largest polynomial degree to reject");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        CLI::App* active = nullptr;
        for (auto& [sub, b] : bounds)
            if (sub->parsed()) active = sub;
        if (active == nullptr) return 2;
        merge_config(o, bounds[active]);
        if (groups->parsed()) return run_groups(o);
        if (ring->parsed()) return run_ring(o);
        if (verify->parsed()) return run_verify(o);
        if (restrict_cmd->parsed()) return run_restrict(o);
        if (fi->parsed()) return run_fi_growth(o);
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GuardExceeded& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 2;
    } catch (const InsufficientData& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
