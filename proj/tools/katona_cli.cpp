// Command-line front end. Subcommands: verify (theorem bounds over a
// parameter grid), search (free-form problem from JSON), lym / average
// (exact fraction computations on a family), construct (named families as
// JSON), list-theorems. Formats: json is canonical (one object per line),
// csv is a fixed projection documented per command in --help, human is an
// aligned table.
//
// Exit codes: 0 success, 1 usage or domain error, 2 falsified bound or
// failed tightness claim, 3 budget exhausted. Grid points that violate a
// theorem's hypothesis are skipped with a warning on stderr and do not
// affect the exit code. A point that is non-tight counts as a failure
// unless the theorem itself marks the boundary with a "cannot be attained"
// note. Reports are computed per point, then emitted in grid order, so
// output is bit-identical for equal configurations at any --jobs value.

#include "katona/averaging.hpp"
#include "katona/circle.hpp"
#include "katona/constructions.hpp"
#include "katona/errors.hpp"
#include "katona/json_io.hpp"
#include "katona/predicates.hpp"
#include "katona/rational.hpp"
#include "katona/search.hpp"
#include "katona/theorems.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

namespace {

using namespace katona;
using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFalsified = 2;
constexpr int kExitBudget = 3;

// ---- grid parsing -------------------------------------------------------
// Axis syntax: comma-separated items, each "v" or "lo..hi".

std::vector<int> parse_int_axis(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw DomainError("empty item in --" + flag);
        auto dots = item.find("..");
        try {
            std::size_t pos = 0;
            if (dots == std::string::npos) {
                int v = std::stoi(item, &pos);
                if (pos != item.size()) throw std::invalid_argument(item);
                out.push_back(v);
            } else {
                std::string lo_s = item.substr(0, dots), hi_s = item.substr(dots + 2);
                int lo = std::stoi(lo_s, &pos);
                if (pos != lo_s.size()) throw std::invalid_argument(item);
                int hi = std::stoi(hi_s, &pos);
                if (pos != hi_s.size()) throw std::invalid_argument(item);
                if (lo > hi) throw DomainError("--" + flag + " range " + item + " is empty");
                for (int v = lo; v <= hi; ++v) out.push_back(v);
            }
        } catch (const std::invalid_argument&) {
            throw DomainError("--" + flag + " expects integers or lo..hi ranges, got '" +
                              item + "'");
        } catch (const std::out_of_range&) {
            throw DomainError("--" + flag + " value out of range: '" + item + "'");
        }
    }
    if (out.empty()) throw DomainError("--" + flag + " has no values");
    return out;
}

std::vector<Rational> parse_rational_axis(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        out.push_back(rational_from_string(item));
    if (out.empty()) throw DomainError("--c has no values");
    return out;
}

// Length tuples: items joined with '+', tuples separated by commas,
// e.g. "3+4,2+2+3".
std::vector<std::vector<int>> parse_lengths_axis(const std::string& text) {
    std::vector<std::vector<int>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::vector<int> tuple;
        std::stringstream ts(item);
        std::string part;
        while (std::getline(ts, part, '+')) {
            try {
                std::size_t pos = 0;
                int v = std::stoi(part, &pos);
                if (pos != part.size()) throw std::invalid_argument(part);
                tuple.push_back(v);
            } catch (const std::exception&) {
                throw DomainError("--lengths expects tuples like 3+4, got '" + item + "'");
            }
        }
        if (tuple.empty()) throw DomainError("--lengths has an empty tuple");
        out.push_back(std::move(tuple));
    }
    if (out.empty()) throw DomainError("--lengths has no values");
    return out;
}

// ---- shared options -----------------------------------------------------

struct CommonOpts {
    std::string format = "human";
    std::string n_axis, k_axis, l_axis, s_axis, r_axis, q_axis, c_axis, lengths_axis;
    std::uint64_t budget_nodes = 0;
    double budget_seconds = 0;
    int jobs = 1;
    std::uint64_t seed = 1;
    int sample = 0;
    bool timings = false;
};

void add_common_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--format", o.format, "Output format: json, csv, human")
        ->check(CLI::IsMember({"json", "csv", "human"}));
    cmd->add_option("--budget-nodes", o.budget_nodes, "Node budget per search");
    cmd->add_option("--budget-seconds", o.budget_seconds,
                    "Time budget per search in seconds (default from "
                    "KATONA_BUDGET_SECONDS)");
    cmd->add_option("--jobs", o.jobs, "Worker threads for grid evaluation")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", o.seed, "Random seed for sampled averaging");
    cmd->add_option("--sample", o.sample,
                    "Monte Carlo trial count; 0 means exact enumeration");
    cmd->add_flag("--timings", o.timings,
                  "Include wall-clock seconds (off keeps output bit-stable)");
}

void add_grid_flags(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--n", o.n_axis, "Grid for n: '8' or '3..8' or '3,5,7'");
    cmd->add_option("--k", o.k_axis, "Grid for k");
    cmd->add_option("--l", o.l_axis, "Grid for l");
    cmd->add_option("--s", o.s_axis, "Grid for s");
    cmd->add_option("--r", o.r_axis, "Grid for r");
    cmd->add_option("--q", o.q_axis, "Alias of --s (family-count parameter)");
    cmd->add_option("--c", o.c_axis, "Grid for c: fractions like '1,5/2'");
    cmd->add_option("--lengths", o.lengths_axis,
                    "Grid of slot-length tuples: '3+4,2+2+3'");
}

SearchBudget make_budget(const CommonOpts& o) {
    SearchBudget b;
    if (o.budget_nodes > 0) b.max_nodes = o.budget_nodes;
    if (o.budget_seconds > 0) {
        b.max_seconds = o.budget_seconds;
    } else if (const char* env = std::getenv("KATONA_BUDGET_SECONDS")) {
        try {
            b.max_seconds = std::stod(env);
        } catch (const std::exception&) {
            throw DomainError("KATONA_BUDGET_SECONDS is not a number");
        }
    }
    return b;
}

std::string read_input(const std::vector<std::string>& files) {
    if (files.empty()) {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(files.front());
    if (!in) throw DomainError("cannot open input file " + files.front());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

// ---- verify -------------------------------------------------------------

struct GridPoint {
    TheoremParams params;
    // Outcome, exactly one of these set:
    bool skipped = false;
    bool violated = false;
    bool budget_hit = false;
    std::string detail;        // skip reason, violation text, or partial bound
    std::string witness_json;  // counterexample for violations
    TheoremResult result;      // valid when none of the flags is set
};

std::string params_brief(const TheoremParams& p, const std::string& names) {
    std::ostringstream os;
    std::stringstream ss(names);
    std::string name;
    while (ss >> name) {
        if (name == "n") os << " n=" << p.n;
        else if (name == "k") os << " k=" << p.k;
        else if (name == "l") os << " l=" << p.l;
        else if (name == "s") os << " s=" << p.s;
        else if (name == "r") os << " r=" << p.r;
        else if (name == "c") os << " c=" << fraction_string(p.c);
        else if (name == "lengths") {
            os << " lengths=";
            for (std::size_t i = 0; i < p.lengths.size(); ++i)
                os << (i ? "+" : "") << p.lengths[i];
        }
    }
    std::string s = os.str();
    return s.empty() ? s : s.substr(1);
}

bool boundary_note(const TheoremResult& res) {
    for (const auto& note : res.notes)
        if (note.find("cannot be attained") != std::string::npos) return true;
    return false;
}

int run_verify(const std::string& id, const CommonOpts& opts) {
    const Theorem& thm = find_theorem(id);   // DomainError when unknown

    // The theorem's parameter list decides which axes are required; any
    // other provided axis is an error rather than a silent ignore.
    std::vector<std::string> names;
    {
        std::stringstream ss(thm.param_names);
        std::string w;
        while (ss >> w) names.push_back(w);
    }
    auto wants = [&](const std::string& w) {
        return std::find(names.begin(), names.end(), w) != names.end();
    };
    std::string s_axis = opts.s_axis;
    if (!opts.q_axis.empty()) {
        if (!s_axis.empty())
            throw DomainError("--q is an alias of --s; give only one");
        s_axis = opts.q_axis;
    }
    struct Axis {
        const char* name;
        const std::string* text;
    };
    const Axis axes[] = {{"n", &opts.n_axis}, {"k", &opts.k_axis},
                         {"l", &opts.l_axis}, {"s", &s_axis},
                         {"r", &opts.r_axis}, {"c", &opts.c_axis},
                         {"lengths", &opts.lengths_axis}};
    for (const Axis& ax : axes) {
        if (wants(ax.name) && ax.text->empty() && std::string(ax.name) != "c")
            throw DomainError("theorem " + id + " needs --" + ax.name +
                              " (parameters: " + thm.param_names + ")");
        if (!wants(ax.name) && !ax.text->empty())
            throw DomainError("theorem " + id + " does not take --" + ax.name +
                              " (parameters: " + thm.param_names + ")");
    }

    std::vector<int> ns = parse_int_axis(opts.n_axis, "n");
    std::vector<int> ks = wants("k") ? parse_int_axis(opts.k_axis, "k") : std::vector<int>{0};
    std::vector<int> ls = wants("l") ? parse_int_axis(opts.l_axis, "l") : std::vector<int>{0};
    std::vector<int> ss_ = wants("s") ? parse_int_axis(s_axis, "s") : std::vector<int>{0};
    std::vector<int> rs = wants("r") ? parse_int_axis(opts.r_axis, "r") : std::vector<int>{0};
    std::vector<Rational> cs = wants("c") && !opts.c_axis.empty()
                                   ? parse_rational_axis(opts.c_axis)
                                   : std::vector<Rational>{Rational(1)};
    std::vector<std::vector<int>> lens =
        wants("lengths") ? parse_lengths_axis(opts.lengths_axis)
                         : std::vector<std::vector<int>>{{}};

    std::vector<GridPoint> grid;
    for (int n : ns)
        for (int k : ks)
            for (int l : ls)
                for (int s : ss_)
                    for (int r : rs)
                        for (const Rational& c : cs)
                            for (const auto& len : lens) {
                                GridPoint pt;
                                pt.params.n = n;
                                pt.params.k = k;
                                pt.params.l = l;
                                pt.params.s = s;
                                pt.params.r = r;
                                pt.params.c = c;
                                pt.params.lengths = len;
                                grid.push_back(std::move(pt));
                            }

    SearchBudget budget = make_budget(opts);
    std::atomic<std::size_t> next(0);
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            GridPoint& pt = grid[i];
            try {
                thm.require(pt.params);
            } catch (const DomainError& e) {
                pt.skipped = true;
                pt.detail = e.what();
                continue;
            }
            try {
                pt.result = verify_bound(id, pt.params, budget);
            } catch (const BudgetExceeded& e) {
                pt.budget_hit = true;
                pt.detail = e.partial_bound;
            } catch (const BoundViolation& e) {
                pt.violated = true;
                pt.detail = e.what();
                pt.witness_json = e.witness_json;
            } catch (const PropertyViolation& e) {
                pt.violated = true;
                pt.detail = e.what();
                pt.witness_json = e.detail_json;
            }
        }
    };
    int jobs = std::max(1, std::min<int>(opts.jobs, (int)grid.size()));
    std::vector<std::thread> pool;
    for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    bool any_violation = false, any_budget = false;
    if (opts.format == "csv")
        std::cout << "theorem,n,k,l,s,r,c,lengths,bound,achieved,tight,"
                     "witnesses,nodes,seconds,status\n";
    for (const GridPoint& pt : grid) {
        const std::string brief = params_brief(pt.params, thm.param_names);
        if (pt.skipped) {
            std::cerr << "skip: " << id << " " << brief
                      << ": hypothesis fails: " << pt.detail << "\n";
            continue;
        }
        bool tight_fail = !pt.skipped && !pt.violated && !pt.budget_hit &&
                          !thm.informational && !pt.result.tight &&
                          !boundary_note(pt.result);
        if (pt.violated || tight_fail) any_violation = true;
        if (pt.budget_hit) any_budget = true;

        if (opts.format == "json") {
            if (pt.violated) {
                Json j;
                j["theorem"] = id;
                j["params"] = Json::parse(
                    verify_report_json(id, pt.params, TheoremResult{}))["params"];
                j["violation"] = pt.detail;
                j["counterexample"] =
                    pt.witness_json.empty() ? Json() : Json::parse(pt.witness_json);
                std::cout << j.dump() << "\n";
            } else if (pt.budget_hit) {
                Json j;
                j["theorem"] = id;
                j["params"] = Json::parse(
                    verify_report_json(id, pt.params, TheoremResult{}))["params"];
                j["budget_exceeded"] = true;
                j["exact"] = false;
                j["partial_bound"] = pt.detail;
                std::cout << j.dump() << "\n";
            } else {
                Json j = Json::parse(verify_report_json(id, pt.params, pt.result));
                if (!opts.timings) j.erase("seconds");
                if (tight_fail) j["tightness_failure"] = true;
                std::cout << j.dump() << "\n";
            }
        } else if (opts.format == "csv") {
            const TheoremResult& r = pt.result;
            std::ostringstream len_s;
            for (std::size_t i = 0; i < pt.params.lengths.size(); ++i)
                len_s << (i ? "+" : "") << pt.params.lengths[i];
            std::string status = pt.violated   ? "violated"
                                 : pt.budget_hit ? "budget"
                                 : tight_fail    ? "tightness-failure"
                                                 : "ok";
            std::cout << id << ',' << pt.params.n << ',' << pt.params.k << ','
                      << pt.params.l << ',' << pt.params.s << ',' << pt.params.r
                      << ',' << fraction_string(pt.params.c) << ','
                      << len_s.str() << ',' << fraction_string(r.bound) << ','
                      << fraction_string(r.achieved) << ',' << (r.tight ? 1 : 0)
                      << ','
                      << (r.witnesses.size() + r.set_witnesses.size()) << ','
                      << r.nodes << ',';
            if (opts.timings) std::cout << r.seconds;
            std::cout << ',' << status << "\n";
        } else {
            if (pt.violated) {
                std::cout << id << "  " << brief << "  BOUND VIOLATED: " << pt.detail
                          << "\n";
                if (!pt.witness_json.empty())
                    std::cout << "  counterexample: " << pt.witness_json << "\n";
            } else if (pt.budget_hit) {
                std::cout << id << "  " << brief
                          << "  budget exhausted (partial, non-exact): " << pt.detail
                          << "\n";
            } else {
                const TheoremResult& r = pt.result;
                std::cout << id << "  " << brief << "  bound="
                          << fraction_string(r.bound)
                          << " achieved=" << fraction_string(r.achieved)
                          << (r.tight ? " tight" : " NOT TIGHT")
                          << (tight_fail ? " (FAILURE)" : "") << " witnesses="
                          << (r.witnesses.size() + r.set_witnesses.size())
                          << " nodes=" << r.nodes << "\n";
                for (const auto& note : r.notes)
                    std::cout << "  note: " << note << "\n";
            }
        }
    }
    if (any_violation) return kExitFalsified;
    if (any_budget) return kExitBudget;
    return kExitOk;
}

// ---- search -------------------------------------------------------------

int run_search(const std::vector<std::string>& files, const CommonOpts& opts) {
    SearchProblem prob = search_problem_from_json(read_input(files));
    try {
        SearchReport rep = maximize(prob, make_budget(opts));
        if (opts.format == "json") {
            Json j = Json::parse(to_json_string(rep));
            if (!opts.timings) j.erase("seconds");
            std::cout << j.dump() << "\n";
        } else if (opts.format == "csv") {
            std::cout << "optimum,feasible,witnesses,nodes,seconds\n"
                      << fraction_string(rep.optimum) << ','
                      << (rep.feasible ? 1 : 0) << ',' << rep.witnesses.size()
                      << ',' << rep.nodes << ',';
            if (opts.timings) std::cout << rep.seconds;
            std::cout << "\n";
        } else {
            std::cout << "optimum " << fraction_string(rep.optimum)
                      << (rep.feasible ? "" : " (no feasible assignment)")
                      << ", " << rep.witnesses.size()
                      << " witness orbit(s), " << rep.nodes << " nodes\n";
            for (const auto& tup : rep.witnesses) {
                std::cout << "  ";
                for (std::size_t s = 0; s < tup.size(); ++s)
                    std::cout << (s ? " | " : "") << to_json_string(tup[s]);
                std::cout << "\n";
            }
        }
        return kExitOk;
    } catch (const BudgetExceeded& e) {
        Json j;
        j["budget_exceeded"] = true;
        j["exact"] = false;
        j["partial_bound"] = e.partial_bound;
        j["nodes"] = e.nodes_explored;
        if (opts.format == "json")
            std::cout << j.dump() << "\n";
        else
            std::cout << "budget exhausted after " << e.nodes_explored
                      << " nodes; partial (non-exact): " << e.partial_bound << "\n";
        return kExitBudget;
    }
}

// ---- lym / average ------------------------------------------------------

int run_lym(const std::vector<std::string>& files, const std::string& mode_name,
            const CommonOpts& opts) {
    SetFamily fam = any_family_from_json(read_input(files));
    LymMode mode = mode_name == "shifted"  ? LymMode::Shifted
                   : mode_name == "circle" ? LymMode::Circle
                                           : LymMode::Standard;
    Rational v = lym_sum(fam, mode);
    if (opts.format == "json") {
        Json j;
        j["mode"] = mode_name;
        j["lym"] = Json::parse(to_json_string(v));
        std::cout << j.dump() << "\n";
    } else if (opts.format == "csv") {
        std::cout << "mode,fraction,decimal\n"
                  << mode_name << ',' << fraction_string(v) << ','
                  << decimal_string(v) << "\n";
    } else {
        std::cout << "lym (" << mode_name << ") = " << fraction_string(v) << " = "
                  << decimal_string(v) << "\n";
    }
    return kExitOk;
}

int run_average(const std::vector<std::string>& files, int k, const CommonOpts& opts) {
    SetFamily fam = any_family_from_json(read_input(files));
    if (opts.sample > 0) {
        SampleReport rep = sample_average(fam, k, opts.sample, opts.seed);
        if (opts.format == "json") {
            std::cout << to_json_string(rep) << "\n";
        } else if (opts.format == "csv") {
            std::cout << "estimate,exact_target,std_error,trials\n"
                      << decimal_string(rep.estimate) << ','
                      << fraction_string(rep.exact_target) << ',' << rep.std_error
                      << ',' << rep.trials << "\n";
        } else {
            std::cout << "sampled average " << decimal_string(rep.estimate)
                      << " (exact target " << fraction_string(rep.exact_target)
                      << ", std error " << rep.std_error << ", " << rep.trials
                      << " trials)\n";
        }
        return kExitOk;
    }
    AverageReport rep;
    try {
        rep = exact_average(fam, k);
    } catch (const DomainError& e) {
        // Surface the enumeration limit with the way out.
        throw DomainError(std::string(e.what()) +
                          " (use --sample N for a Monte Carlo estimate)");
    }
    if (opts.format == "json") {
        std::cout << to_json_string(rep) << "\n";
    } else if (opts.format == "csv") {
        std::cout << "fraction,decimal,max_trace,orders\n"
                  << fraction_string(rep.average) << ',' << decimal_string(rep.average)
                  << ',' << rep.max_trace << ',' << rep.order_count.str() << "\n";
    } else {
        std::cout << "average " << fraction_string(rep.average) << " = "
                  << decimal_string(rep.average) << " over " << rep.order_count.str()
                  << " cyclic orders; max trace " << rep.max_trace << "\n";
    }
    return kExitOk;
}

// ---- construct / list-theorems ------------------------------------------

int run_construct(const std::string& id, const CommonOpts& opts) {
    Construction built = build_construction(id);
    std::string text = std::visit(
        [&](const auto& fam) { return to_json_string(fam, opts.format == "human" ? 2 : -1); },
        built);
    if (opts.format == "csv") {
        bool is_arc = std::holds_alternative<ArcFamily>(built);
        int n = std::visit([](const auto& f) { return f.n(); }, built);
        int size = std::visit([](const auto& f) { return f.size(); }, built);
        std::cout << "id,kind,n,size,family\n"
                  << csv_escape(id) << ',' << (is_arc ? "arcs" : "sets") << ','
                  << n << ',' << size << ',' << csv_escape(text) << "\n";
    } else {
        std::cout << text << "\n";
    }
    return kExitOk;
}

int run_list(const CommonOpts& opts) {
    const auto& reg = theorem_registry();
    if (opts.format == "json") {
        for (const auto& t : reg) {
            Json j;
            j["id"] = t.id;
            j["params"] = t.param_names;
            j["informational"] = t.informational;
            j["summary"] = t.summary;
            std::cout << j.dump() << "\n";
        }
    } else if (opts.format == "csv") {
        std::cout << "id,params,informational,summary\n";
        for (const auto& t : reg)
            std::cout << csv_escape(t.id) << ',' << csv_escape(t.param_names) << ','
                      << (t.informational ? 1 : 0) << ',' << csv_escape(t.summary)
                      << "\n";
    } else {
        std::size_t width = 0;
        for (const auto& t : reg) width = std::max(width, t.id.size());
        for (const auto& t : reg) {
            std::cout << t.id << std::string(width + 2 - t.id.size(), ' ') << "["
                      << t.param_names << "]"
                      << (t.informational ? " (informational)" : "") << "  "
                      << t.summary << "\n";
        }
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exhaustive small-n verification of extremal set theory on the cycle"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string theorem_id, construct_id, lym_mode = "standard";
    int avg_k = 0;
    std::vector<std::string> input_files;

    CLI::App* verify = app.add_subcommand(
        "verify", "Check one theorem's bound over a parameter grid.\n"
                  "CSV columns: theorem,n,k,l,s,r,c,lengths,bound,achieved,"
                  "tight,witnesses,nodes,seconds,status");
    verify->add_option("theorem", theorem_id, "Theorem id (see list-theorems)")
        ->required();
    add_grid_flags(verify, opts);
    add_common_flags(verify, opts);

    CLI::App* search = app.add_subcommand(
        "search", "Maximize a search problem given as JSON on stdin or a file.\n"
                  "CSV columns: optimum,feasible,witnesses,nodes,seconds");
    search->add_option("file", input_files, "Problem JSON file (default stdin)");
    add_common_flags(search, opts);

    CLI::App* lym = app.add_subcommand(
        "lym", "Level-weighted mass of a family given as JSON on stdin or a file.\n"
               "CSV columns: mode,fraction,decimal");
    lym->add_option("file", input_files, "Family JSON file (default stdin)");
    lym->add_option("--mode", lym_mode, "Weighting: standard, shifted, circle")
        ->check(CLI::IsMember({"standard", "shifted", "circle"}));
    add_common_flags(lym, opts);

    CLI::App* average = app.add_subcommand(
        "average", "Average trace over cyclic orders of a k-uniform family.\n"
                   "CSV columns: fraction,decimal,max_trace,orders "
                   "(sampled: estimate,exact_target,std_error,trials)");
    average->add_option("file", input_files, "Family JSON file (default stdin)");
    average->add_option("--k", avg_k, "Member size of the uniform family")->required();
    add_common_flags(average, opts);

    CLI::App* construct = app.add_subcommand(
        "construct", "Emit a named family as JSON.\n"
                     "CSV columns: id,kind,n,size,family\nKnown ids:\n  " +
                         [] {
                             std::string s;
                             for (const auto& u : construction_usage()) {
                                 if (!s.empty()) s += "\n  ";
                                 s += u;
                             }
                             return s;
                         }());
    construct->add_option("id", construct_id, "Construction id, e.g. m_pq:6,3,3,5")
        ->required();
    add_common_flags(construct, opts);

    CLI::App* list = app.add_subcommand("list-theorems", "Show the theorem registry.\n"
                                        "CSV columns: id,params,informational,summary");
    add_common_flags(list, opts);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(theorem_id, opts);
        if (search->parsed()) return run_search(input_files, opts);
        if (lym->parsed()) return run_lym(input_files, lym_mode, opts);
        if (average->parsed()) return run_average(input_files, avg_k, opts);
        if (construct->parsed()) return run_construct(construct_id, opts);
        if (list->parsed()) return run_list(opts);
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BoundViolation& e) {
        std::cerr << "bound violated: " << e.what() << "\n"
                  << e.witness_json << "\n";
        return kExitFalsified;
    } catch (const PropertyViolation& e) {
        std::cerr << "property violated: " << e.what() << "\n"
                  << e.detail_json << "\n";
        return kExitFalsified;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exhausted: " << e.what() << " ("
                  << e.partial_bound << ")\n";
        return kExitBudget;
    }
    return kExitUsage;
}
