// edgeflex: certify edge-polytope constructions on graph corpora.
//
//   edgeflex certify   --family 'connected(3..6)'
//   edgeflex normality --input g.txt --format csv
//   edgeflex batch     --family 'connected(5)' --jobs 4 --out report.json
//   edgeflex reduce    --input matrix.txt
//   edgeflex facets    --input polytope.txt
//   edgeflex lattice-points --input polytope.txt --dilation 2
//
// Exit status: 0 ok, 1 operational error, 2 theorem disagreement.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "edgeflex/report.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace edgeflex;

namespace {

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::vector<std::string> families;
    std::optional<std::uint64_t> n_max;
    std::size_t cycle_cap = CycleLimits{}.cap;
    std::uint64_t point_budget = kDefaultPointBudget;
    unsigned jobs = 1;
    std::uint64_t seed = 1;
    std::string format = "json";
    std::string out;
    std::uint64_t dilation = 1;
    bool timings = false;
};

// A graph to analyse, or the reason it could not be produced.
struct Item {
    std::string id;
    std::optional<Graph> graph;
    std::string error;
};

std::string pad(std::size_t i, std::size_t total) {
    const std::size_t width = std::to_string(total == 0 ? 0 : total - 1).size();
    std::ostringstream s;
    s << std::setw(static_cast<int>(width)) << std::setfill('0') << i;
    return s.str();
}

std::vector<double> spec_args(const std::string& spec, std::string& name) {
    static const std::regex re(R"(^\s*([a-z_]+)\s*\(([^)]*)\)\s*$)");
    std::smatch m;
    if (!std::regex_match(spec, m, re)) throw ParseError(0, "bad family spec '" + spec + "'");
    name = m[1];
    std::vector<double> args;
    std::string body = m[2];
    std::replace(body.begin(), body.end(), ',', ' ');
    std::istringstream in(body);
    for (std::string tok; in >> tok;) {
        const auto dots = tok.find("..");
        if (dots != std::string::npos) {
            // a..b expands to every integer in the range
            const long a = std::stol(tok.substr(0, dots));
            const long b = std::stol(tok.substr(dots + 2));
            if (args.size() || a > b) throw ParseError(0, "range must be the only argument: '" + spec + "'");
            for (long v = a; v <= b; ++v) args.push_back(static_cast<double>(v));
            args.push_back(-1);  // marks a range
            continue;
        }
        args.push_back(std::stod(tok));
    }
    return args;
}

std::size_t as_count(double x) {
    if (x < 0 || x != static_cast<double>(static_cast<std::size_t>(x))) throw ParseError(0, "expected a non-negative integer");
    return static_cast<std::size_t>(x);
}

std::vector<Item> expand_family(const std::string& spec, std::uint64_t seed) {
    std::string name;
    auto args = spec_args(spec, name);
    const bool range = !args.empty() && args.back() == -1;
    if (range) args.pop_back();
    auto want = [&](std::size_t k) {
        if (range || args.size() != k) throw ParseError(0, "family '" + name + "' takes " + std::to_string(k) + " argument(s)");
    };
    std::vector<Graph> graphs;
    if (name == "connected") {
        if (!range && args.size() != 1) throw ParseError(0, "connected(n) or connected(a..b)");
        for (double n : args) {
            for (auto& g : connected_graphs(as_count(n))) graphs.push_back(std::move(g));
        }
    } else if (name == "sample") {
        // sample(n, count, p): non-isomorphic connected G(n, p) graphs
        want(3);
        graphs = sample_connected_graphs(as_count(args[0]), as_count(args[1]), args[2], seed);
    } else if (name == "cycle") {
        want(1);
        graphs.push_back(cycle_graph(as_count(args[0])));
    } else if (name == "complete") {
        want(1);
        graphs.push_back(complete_graph(as_count(args[0])));
    } else if (name == "complete_bipartite") {
        want(2);
        graphs.push_back(complete_bipartite_graph(as_count(args[0]), as_count(args[1])));
    } else if (name == "dumbbell") {
        want(2);
        graphs.push_back(dumbbell_graph(as_count(args[0]), as_count(args[1])));
    } else if (name == "random") {
        if (range || (args.size() != 2 && args.size() != 3)) throw ParseError(0, "random(n, p) or random(n, p, seed)");
        graphs.push_back(random_graph(as_count(args[0]), args[1], args.size() == 3 ? as_count(args[2]) : seed));
    } else {
        throw ParseError(0, "unknown family '" + name + "'");
    }
    std::vector<Item> out;
    std::string stem = spec;
    stem.erase(std::remove_if(stem.begin(), stem.end(), ::isspace), stem.end());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        out.push_back({graphs.size() == 1 ? stem : stem + "#" + pad(i, graphs.size()), std::move(graphs[i]), {}});
    }
    return out;
}

std::vector<Item> collect_inputs(const RunConfig& cfg, std::size_t& operational_errors) {
    std::vector<Item> items;
    std::vector<fs::path> files;
    for (const auto& in : cfg.inputs) {
        const fs::path p(in);
        if (fs::is_directory(p)) {
            for (const auto& e : fs::directory_iterator(p)) {
                // dotfiles are placeholders, not graphs
                if (e.is_regular_file() && !e.path().filename().string().starts_with('.')) files.push_back(e.path());
            }
        } else {
            files.push_back(p);
        }
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        Item it{f.string(), std::nullopt, {}};
        std::ifstream s(f);
        if (!s) {
            it.error = "cannot open file";
        } else {
            try {
                it.graph = parse_edge_list(s);
            } catch (const ParseError& e) {
                it.error = e.line() ? "line " + std::to_string(e.line()) + ": " + e.what() : e.what();
            } catch (const std::exception& e) {
                it.error = e.what();
            }
        }
        items.push_back(std::move(it));
    }
    for (const auto& spec : cfg.families) {
        try {
            for (auto& it : expand_family(spec, cfg.seed)) items.push_back(std::move(it));
        } catch (const std::exception& e) {
            items.push_back({spec, std::nullopt, e.what()});
        }
    }
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.id < b.id; });
    for (const auto& it : items) operational_errors += it.graph ? 0 : 1;
    return items;
}

// ---------------------------------------------------------------------------
// JSON

json big(const BigInt& x) {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(x);
    }
    return x.str();
}

json cycle_pair(const std::optional<OddCyclePair>& p) {
    if (!p) return nullptr;
    return {{"cycle1", p->cycle1}, {"cycle2", p->cycle2}, {"bridged", p->bridged}};
}

json idp_json(const IdpReport& r) {
    json j{{"holds", r.holds}, {"checked_up_to", r.checked_up_to}, {"degree_one_points", r.degree_one_points}};
    j["witness"] = r.witness ? json{{"dilation", r.witness->dilation}, {"point", r.witness->point}, {"verified", r.witness_verified}}
                             : json(nullptr);
    if (r.degree_one_structural_match) j["degree_one_structural_match"] = *r.degree_one_structural_match;
    return j;
}

json report_json(const GraphReport& r, bool timings) {
    json j{{"id", r.id}, {"n", r.n}, {"m", r.m}, {"connected", r.connected}};
    if (r.certify) {
        const auto& c = *r.certify;
        j["c0"] = c.c0;
        j["dim_formula"] = c.dim_formula;
        j["dim_rank"] = c.dim_rank;
        j["copy_verified"] = c.copy_verified;
        j["omega_facets"] = c.omega_facets;
        j["reflexive"] = c.reflexive;
        j["unique_interior_point"] = c.unique_interior_point ? json(*c.unique_interior_point) : json(nullptr);
        j["reflexive_dimension_bound"] = c.reflexive_dimension_bound;
        j["facet_embedding"] = c.facet_embedding;
    }
    if (r.normality) {
        const auto& nr = *r.normality;
        j["two_disjoint_odd_cycles"] = nr.two_disjoint_odd_cycles;
        j["disjoint_pair"] = cycle_pair(nr.disjoint_pair);
        j["ohsugi_hibi"] = nr.ohsugi_hibi;
        j["unbridged_pair"] = cycle_pair(nr.unbridged_pair);
        j["idp_q"] = idp_json(nr.idp_q);
        j["idp_omega"] = idp_json(nr.idp_omega);
        j["explicit_witness"] = nr.explicit_witness
                                    ? json{{"dilation", nr.explicit_dilation},
                                           {"point", *nr.explicit_witness},
                                           {"in_dilate", nr.explicit_witness_in_dilate},
                                           {"indecomposable", nr.explicit_witness_indecomposable}}
                                    : json(nullptr);
        j["criteria_agree"] = nr.q_agrees() && nr.omega_agrees();
    }
    j["disagreement"] = r.disagreement();
    j["error"] = r.error ? json(*r.error) : json(nullptr);
    if (timings) j["seconds"] = r.seconds;
    return j;
}

std::string csv_cell(const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; }

std::string reports_csv(const std::vector<GraphReport>& reps) {
    std::ostringstream o;
    o << "id,n,m,c0,dim,reflexive,reflexive_dimension_bound,two_disjoint_odd_cycles,ohsugi_hibi,idp_q,idp_omega,disagreement,error\n";
    for (const auto& r : reps) {
        auto quoted = [](std::string s) {
            std::string q = "\"";
            for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
            return q + "\"";
        };
        o << quoted(r.id) << ',' << r.n << ',' << r.m << ',';
        if (r.certify) {
            o << r.certify->c0 << ',' << r.certify->dim_formula << ',' << csv_cell(r.certify->reflexive) << ','
              << r.certify->reflexive_dimension_bound << ',';
        } else {
            o << ",,,,";
        }
        if (r.normality) {
            o << csv_cell(r.normality->two_disjoint_odd_cycles) << ',' << csv_cell(r.normality->ohsugi_hibi) << ','
              << csv_cell(r.normality->idp_q.holds) << ',' << csv_cell(r.normality->idp_omega.holds) << ',';
        } else {
            o << ",,,,";
        }
        o << csv_cell(r.disagreement()) << ',' << (r.error ? quoted(*r.error) : "") << '\n';
    }
    return o.str();
}

void emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + cfg.out);
    f << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json config_json(const RunConfig& cfg) {
    return {{"inputs", cfg.inputs},
            {"families", cfg.families},
            {"nmax", cfg.n_max ? json(*cfg.n_max) : json(nullptr)},
            {"cycle_cap", cfg.cycle_cap},
            {"point_budget", cfg.point_budget},
            {"seed", cfg.seed}};
}

// ---------------------------------------------------------------------------
// Subcommands

int run_graphs(const RunConfig& cfg, Mode mode) {
    std::size_t op_errors = 0;
    auto items = collect_inputs(cfg, op_errors);
    Limits lim;
    lim.cycles.cap = cfg.cycle_cap;
    lim.point_budget = cfg.point_budget;
    lim.n_max = cfg.n_max;

    std::vector<GraphReport> reports(items.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < items.size();) {
            auto& it = items[i];
            if (!it.graph) {
                reports[i].id = it.id;
                reports[i].error = it.error;
                continue;
            }
            Mode m = mode;
            if (mode == Mode::normality && !it.graph->is_connected()) {
                reports[i] = GraphReport{it.id, it.graph->n(), it.graph->m(), false, {}, {}, "normality checks need a connected graph", 0};
                continue;
            }
            reports[i] = analyse(it.id, *it.graph, m, lim);
        }
    };
    {
        std::vector<std::jthread> pool;
        const unsigned jobs = std::max(1U, cfg.jobs);
        for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
        worker();
    }

    std::size_t errors = 0;
    std::size_t disagreements = 0;
    std::size_t reflexive = 0;
    std::size_t certified = 0;
    for (const auto& r : reports) {
        errors += r.error ? 1 : 0;
        disagreements += r.disagreement() ? 1 : 0;
        if (r.certify) {
            ++certified;
            reflexive += r.certify->reflexive ? 1 : 0;
        }
    }
    if (cfg.format == "csv") {
        emit(cfg, reports_csv(reports));
    } else {
        json j{{"schema", 1}, {"command", cfg.command}, {"config", config_json(cfg)}};
        j["reports"] = json::array();
        for (const auto& r : reports) j["reports"].push_back(report_json(r, cfg.timings));
        j["summary"] = {{"items", reports.size()},
                        {"errors", errors},
                        {"disagreements", disagreements},
                        {"certified", certified},
                        {"reflexive", reflexive}};
        emit(cfg, dump(j));
    }
    if (disagreements) return 2;
    return errors ? 1 : 0;
}

std::ifstream open_single(const RunConfig& cfg) {
    if (cfg.inputs.size() != 1) throw std::runtime_error(cfg.command + " takes exactly one --input");
    std::ifstream in(cfg.inputs.front());
    if (!in) throw std::runtime_error("cannot open " + cfg.inputs.front());
    return in;
}

// Matrix file: "r c", then r rows of c integers.
IntegerMatrix parse_matrix(std::istream& in) {
    const auto lines = detail::content_lines(in);
    if (lines.empty()) throw ParseError(0, "empty matrix file");
    const auto header = detail::parse_integers(lines[0].second, lines[0].first);
    if (header.size() != 2 || header[0] < 0 || header[1] < 0) throw ParseError(lines[0].first, "header must be 'rows cols'");
    const auto r = static_cast<std::size_t>(header[0]);
    const auto c = static_cast<std::size_t>(header[1]);
    if (lines.size() - 1 != r) throw ParseError(0, "header announces " + std::to_string(r) + " rows");
    IntegerMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        const auto xs = detail::parse_integers(lines[i + 1].second, lines[i + 1].first);
        if (xs.size() != c) throw ParseError(lines[i + 1].first, "expected " + std::to_string(c) + " entries");
        for (std::size_t j = 0; j < c; ++j) m(i, j) = xs[j];
    }
    return m;
}

int run_reduce(const RunConfig& cfg) {
    auto in = open_single(cfg);
    const IntegerMatrix a = parse_matrix(in);
    json j{{"schema", 1}, {"command", "reduce"}};
    try {
        const ReductionResult r = reduce_type_matrix(a);
        if (cfg.format == "csv") {
            // one line per operation: op,first,second,factor
            std::ostringstream o;
            o << "op,first,second,factor\n";
            for (const auto& op : r.trace) o << to_string(op.kind) << ',' << op.first << ',' << op.second << ',' << op.factor << '\n';
            emit(cfg, o.str());
            return 0;
        }
        j["d"] = r.size;
        j["s"] = r.s;
        j["abs_determinant"] = big(r.abs_determinant());
        j["half_inverse_integral"] = half_inverse_is_integral(a);
        j["replay_matches"] = replay(a, r.trace) == r.normal_form();
        json trace = json::array();
        for (const auto& op : r.trace) {
            json o{{"op", to_string(op.kind)}};
            switch (op.kind) {
            case OpKind::swap_rows:
            case OpKind::swap_cols: o["i"] = op.first; o["j"] = op.second; break;
            case OpKind::add_row_multiple:
            case OpKind::add_col_multiple: o["src"] = op.first; o["dst"] = op.second; o["factor"] = big(op.factor); break;
            case OpKind::negate_row:
            case OpKind::negate_col: o["i"] = op.first; break;
            }
            trace.push_back(std::move(o));
        }
        j["trace"] = std::move(trace);
        j["error"] = nullptr;
    } catch (const RowShapeError& e) {
        j["error"] = e.what();
        j["row"] = e.row();
        emit(cfg, dump(j));
        return 1;
    }
    emit(cfg, dump(j));
    return 0;
}

int run_facets(const RunConfig& cfg) {
    auto in = open_single(cfg);
    const LatticePolytope p = parse_polytope(in);
    const HRepresentation& h = facet_enumeration(p);
    if (cfg.format == "text") {
        emit(cfg, to_hrep_text(h));
        return 0;
    }
    if (cfg.format == "csv") {
        std::ostringstream o;
        for (const auto& f : h.facets) {
            for (const auto& a : f.normal) o << a << ',';
            o << f.rhs << '\n';
        }
        emit(cfg, o.str());
        return 0;
    }
    const ReflexivityCertificate c = reflexivity_certificate(p);
    json facets = json::array();
    for (const auto& f : h.facets) {
        json normal = json::array();
        for (const auto& a : f.normal) normal.push_back(big(a));
        facets.push_back({{"normal", normal}, {"rhs", f.rhs.str()}});
    }
    json j{{"schema", 1}, {"command", "facets"}, {"dim", h.dim}, {"vertices", p.vertices()}, {"facets", facets},
           {"origin_interior", c.origin_interior}, {"all_rhs_one", c.all_rhs_one}, {"reflexive", c.verdict}};
    emit(cfg, dump(j));
    return 0;
}

int run_lattice_points(const RunConfig& cfg) {
    auto in = open_single(cfg);
    const LatticePolytope p = parse_polytope(in);
    const LatticePointSet s = lattice_points(p, cfg.dilation, cfg.point_budget);
    if (cfg.format == "csv") {
        std::ostringstream o;
        for (const auto& x : s.points) {
            for (std::size_t i = 0; i < x.size(); ++i) o << (i ? "," : "") << x[i];
            o << '\n';
        }
        emit(cfg, o.str());
        return 0;
    }
    json j{{"schema", 1}, {"command", "lattice-points"}, {"dim", s.dim}, {"dilation", s.dilation}, {"count", s.points.size()},
           {"points", s.points}};
    emit(cfg, dump(j));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    if (const char* env = std::getenv("EDGEFLEX_POINT_BUDGET")) {
        try {
            cfg.point_budget = std::stoull(env);
        } catch (const std::exception&) {
            std::cerr << "edgeflex: ignoring malformed EDGEFLEX_POINT_BUDGET\n";
        }
    }

    CLI::App app{"Edge polytopes, Omega(P,Q) reflexivity and normality certificates"};
    app.require_subcommand(1);
    auto add_common = [&](CLI::App* sub, bool graphs) {
        sub->add_option("--input", cfg.inputs, "input file(s) or directories")->expected(1, -1);
        sub->add_option("--format", cfg.format, "json or csv (facets also accepts text)");
        sub->add_option("--out", cfg.out, "write the report here instead of stdout");
        sub->add_option("--point-budget", cfg.point_budget, "maximum lattice points per enumeration");
        if (!graphs) return;
        sub->add_option("--family", cfg.families,
                        "cycle(n) complete(n) complete_bipartite(a,b) dumbbell(k,l) random(n,p[,seed]) "
                        "connected(n|a..b) sample(n,count,p)");
        sub->add_option("--nmax", cfg.n_max, "largest dilation for IDP checks (default dim-1)");
        sub->add_option("--cycle-cap", cfg.cycle_cap, "maximum odd cycles per graph");
        sub->add_option("--jobs", cfg.jobs, "worker threads");
        sub->add_option("--seed", cfg.seed, "seed for random families");
        sub->add_flag("--timings", cfg.timings, "include per-graph seconds (breaks byte-identical output)");
    };
    auto* certify = app.add_subcommand("certify", "reflexivity of Omega(Q_G) and dimension data");
    auto* normality = app.add_subcommand("normality", "graph criteria against brute-force normality");
    auto* batch = app.add_subcommand("batch", "certify and normality over a corpus");
    auto* reduce = app.add_subcommand("reduce", "reduce a {0,1,2} type matrix with a replayable trace");
    auto* facets = app.add_subcommand("facets", "facet enumeration of a polytope file");
    auto* points = app.add_subcommand("lattice-points", "lattice points of a dilated polytope file");
    for (auto* s : {certify, normality, batch}) add_common(s, true);
    for (auto* s : {reduce, facets, points}) add_common(s, false);
    points->add_option("--dilation", cfg.dilation, "dilation factor N")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    const bool text_ok = cfg.command == "facets";
    if (cfg.format != "json" && cfg.format != "csv" && !(text_ok && cfg.format == "text")) {
        std::cerr << "edgeflex: unknown format '" << cfg.format << "'\n";
        return 1;
    }

    try {
        if (cfg.command == "certify") return run_graphs(cfg, Mode::certify);
        if (cfg.command == "normality") return run_graphs(cfg, Mode::normality);
        if (cfg.command == "batch") return run_graphs(cfg, Mode::both);
        if (cfg.command == "reduce") return run_reduce(cfg);
        if (cfg.command == "facets") return run_facets(cfg);
        return run_lattice_points(cfg);
    } catch (const std::exception& e) {
        std::cerr << "edgeflex: " << e.what() << '\n';
        return 1;
    }
}
