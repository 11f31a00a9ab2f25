// ifpt: recognise, solve, generate and self-check interval editing instances.
//
// Exit codes: 0 interval / yes / match, 1 non-interval / no, 2 input error,
// 3 oracle mismatch or structure violation (a bundle is written for both).

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <intervalfpt/completion.hpp>
#include <intervalfpt/deletion.hpp>
#include <intervalfpt/generators.hpp>
#include <intervalfpt/instance_io.hpp>
#include <intervalfpt/oracle.hpp>
#include <intervalfpt/properties.hpp>
#include <intervalfpt/recognition.hpp>
#include <intervalfpt/run_record.hpp>

namespace fs = std::filesystem;
using namespace ifpt;

namespace {

constexpr int exit_yes = 0, exit_no = 1, exit_input = 2, exit_mismatch = 3;

std::string join_ids(const std::vector<VertexId>& v) {
    std::string out;
    for (auto x : v) out += (out.empty() ? "" : " ") + std::to_string(x);
    return out;
}

void write_file(const fs::path& path, const std::string& text) {
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

// Writes text to the path, or stdout for "-".
void emit(const std::string& path, const std::string& text) {
    if (path == "-" || path.empty())
        std::cout << text;
    else
        write_file(path, text);
}

fs::path bundle_dir(const std::string& report_dir, const std::string& tag, const std::string& instance) {
    std::string stem = fs::path(instance).stem().string();
    if (stem.empty()) stem = "stdin";
    fs::path dir = fs::path(report_dir) / (tag + "-" + stem);
    fs::create_directories(dir);
    return dir;
}

Graph load(const std::string& path) {
    if (path == "-") return read_instance(std::cin);
    return read_instance_file(path);
}

// ---- recognize ---------------------------------------------------------

int cmd_recognize(const std::string& input) {
    Graph g = load(input);
    auto chordal = is_chordal(g);
    std::cout << "vertices: " << g.order() << "\nedges: " << g.edge_count() << "\n";
    std::cout << "chordal: " << (chordal.chordal ? "yes" : "no") << "\n";
    if (!chordal.chordal) {
        std::cout << "interval: no\n";
        std::cout << "hole of length " << chordal.hole.size() << ": " << join_ids(chordal.hole) << "\n";
        return exit_no;
    }
    if (auto at = find_at(g)) {
        std::cout << "interval: no\n";
        std::cout << "asteroidal triple: " << at->a << " " << at->b << " " << at->c << "\n";
        return exit_no;
    }
    std::cout << "interval: yes\n";
    return exit_yes;
}

// ---- solve -------------------------------------------------------------

struct SolveArgs {
    std::string problem;
    std::string input;
    std::optional<int> k;
    bool optimize = false;
    int kmax = -1;
    bool compare_oracle = false;
    std::string json;
    std::string report_dir = "ifpt-report";
    bool parallel = false;
    std::optional<std::uint64_t> seed;
};

struct Outcome {
    int k = 0;
    std::optional<VertexSet> vertices;
    std::optional<EdgeSet> edges;
    SearchStats stats;
    bool yes() const { return vertices || edges; }
};

Outcome run_solver(const Graph& g, const SolveArgs& a) {
    SolveOptions opt;
    opt.parallel = a.parallel;
    Outcome out;
    int kmax = a.kmax >= 0 ? a.kmax : static_cast<int>(g.order());
    if (a.problem == "deletion") {
        if (a.optimize) {
            auto [k, r] = optimize_deletion(g, kmax, opt);
            out.k = k;
            out.vertices = r.solution;
            out.stats = r.stats;
        } else {
            auto r = interval_deletion(g, *a.k, opt);
            out.k = *a.k;
            out.vertices = r.solution;
            out.stats = r.stats;
        }
    } else {
        if (a.optimize) {
            kmax = a.kmax >= 0 ? a.kmax : static_cast<int>(g.order() * (g.order() - (g.order() ? 1 : 0)) / 2);
            auto [k, r] = optimize_completion(g, kmax, opt);
            out.k = k;
            out.edges = r.solution;
            out.stats = r.stats;
        } else {
            auto r = interval_completion(g, *a.k, opt);
            out.k = *a.k;
            out.edges = r.solution;
            out.stats = r.stats;
        }
    }
    return out;
}

// Oracle optimum up to `limit`; nullopt inside means "above limit".
std::optional<std::size_t> oracle_optimum(const Graph& g, const std::string& problem, std::size_t limit) {
    if (problem == "deletion") {
        auto r = brute_force_min_deletion(g, limit);
        return r ? std::optional<std::size_t>(r->size) : std::nullopt;
    }
    auto r = brute_force_min_completion(g, limit);
    return r ? std::optional<std::size_t>(r->size) : std::nullopt;
}

int cmd_solve(const SolveArgs& a) {
    if (!a.optimize && !a.k) throw CLI::ValidationError("solve", "give --k or --optimize");
    if (a.k && *a.k < 0) throw CLI::ValidationError("--k", "must be >= 0");
    Graph g = load(a.input);
    for (std::size_t i = 0; i < g.order(); ++i)
        if (g.id(i) != i) throw ContractViolation("instance ids must be 0..n-1");

    RunRecord rec;
    rec.problem = a.problem;
    rec.instance = a.input == "-" ? "stdin" : fs::path(a.input).filename().string();
    rec.optimize = a.optimize;
    rec.seed = a.seed;

    Outcome out;
    try {
        out = run_solver(g, a);
    } catch (const StructureViolation& e) {
        fs::path dir = bundle_dir(a.report_dir, "structure-" + a.problem, a.input);
        write_file(dir / "instance.txt", write_instance(g));
        write_file(dir / "error.txt", std::string(e.what()) + "\n");
        std::cerr << "structure violation: " << e.what() << "\nbundle written to " << dir.string() << "\n";
        return exit_mismatch;
    }
    rec.k = out.k;
    rec.outcome = out.yes() ? "yes" : "no";
    rec.stats = out.stats;
    Graph fixed = g;
    if (out.vertices) {
        rec.vertices = std::vector<VertexId>(out.vertices->begin(), out.vertices->end());
        fixed = remove_vertices(g, *out.vertices);
    }
    if (out.edges) {
        std::vector<std::pair<VertexId, VertexId>> es;
        for (const auto& e : *out.edges) es.emplace_back(e.u, e.v);
        rec.edges = es;
        fixed = add_edges(g, *out.edges);
    }
    if (out.yes()) {
        rec.verified_recognition = is_interval(fixed);
        OracleLimits lim;
        if (fixed.order() <= lim.max_vertices) rec.verified_oracle = oracle_is_interval(fixed, lim);
    }

    bool mismatch = false;
    std::string oracle_note;
    if (a.compare_oracle) {
        try {
            // optimum up to the solver's k: enough to check a yes/no and optimality
            std::size_t limit = static_cast<std::size_t>(out.k);
            auto opt = oracle_optimum(g, a.problem, limit);
            bool oracle_yes = opt.has_value();
            if (opt) rec.oracle_optimum = static_cast<int>(*opt);
            if (a.optimize)
                mismatch = oracle_yes != out.yes() || (opt && static_cast<int>(*opt) != out.k);
            else
                mismatch = oracle_yes != out.yes();
            rec.oracle = mismatch ? "mismatch" : "match";
            oracle_note = opt ? "oracle optimum " + std::to_string(*opt) : "oracle: no solution within " + std::to_string(limit);
        } catch (const WorkBoundExceeded& e) {
            rec.oracle = "skipped";
            std::cerr << "warning: oracle comparison skipped: " << e.what() << "\n";
        }
    }
    if ((rec.verified_recognition && !*rec.verified_recognition) || (rec.verified_oracle && !*rec.verified_oracle))
        mismatch = true;

    std::string json = to_json(rec);
    std::cout << "problem: " << rec.problem << "\nk: " << rec.k << "\noutcome: " << rec.outcome << "\n";
    if (rec.vertices) std::cout << "delete: " << join_ids(*rec.vertices) << "\n";
    if (rec.edges) {
        std::cout << "add:";
        for (auto [u, v] : *rec.edges) std::cout << " " << u << "-" << v;
        std::cout << "\n";
    }
    std::cout << "nodes: " << rec.stats.nodes << "  max depth: " << rec.stats.max_depth
              << "  max degree: " << rec.stats.max_degree << "\n";
    if (rec.oracle) std::cout << "oracle: " << *rec.oracle << (oracle_note.empty() ? "" : " (" + oracle_note + ")") << "\n";
    if (!a.json.empty()) emit(a.json, json + "\n");

    if (mismatch) {
        fs::path dir = bundle_dir(a.report_dir, "mismatch-" + a.problem, a.input);
        write_file(dir / "instance.txt", write_instance(g));
        write_file(dir / "solver.json", json + "\n");
        write_file(dir / "oracle.txt", oracle_note + "\n");
        std::cerr << "mismatch: bundle written to " << dir.string() << "\n";
        return exit_mismatch;
    }
    return out.yes() ? exit_yes : exit_no;
}

// ---- gen ---------------------------------------------------------------

struct GenArgs {
    std::string family;
    std::size_t p = 7;
    std::size_t levels = 2;
    std::size_t length = 9;
    std::size_t n = 12;
    double prob = 0.3;
    std::uint64_t seed = 1;
    std::string output = "-";
};

int cmd_gen(const GenArgs& a) {
    Rng rng(a.seed);
    Graph g;
    if (a.family == "gadget-type1" || a.family == "gadget-type2") {
        if (a.p < big_at_min_path) throw CLI::ValidationError("--p", "gadgets need p >= 7");
        g = make_gadget(a.family == "gadget-type1" ? ATKind::Type1 : ATKind::Type2, a.p).graph;
    } else if (a.family == "nested-gadget") {
        if (a.p < big_at_min_path) throw CLI::ValidationError("--p", "gadgets need p >= 7");
        if (a.levels < 1) throw CLI::ValidationError("--levels", "must be >= 1");
        g = make_nested_gadget(a.levels, a.p).graph;
    } else if (a.family == "long-cycle") {
        if (a.length < 4) throw CLI::ValidationError("--length", "cycle needs length >= 4");
        g = make_cycle(a.length);
    } else if (a.family == "random-chordal") {
        g = make_random_chordal(a.n, rng);
    } else {
        if (a.prob < 0 || a.prob > 1) throw CLI::ValidationError("--prob", "must lie in [0, 1]");
        g = make_gnp(a.n, a.prob, rng);
    }
    emit(a.output, write_instance(g));
    return 0;
}

// ---- verifyprops -------------------------------------------------------

int cmd_verifyprops(const std::string& suite, std::size_t count, std::uint64_t seed, bool corrupt,
                    const std::string& report_dir) {
    SuiteReport rep = suite == "structure" ? run_structure_suite(count, seed, corrupt)
                      : suite == "cycles"  ? run_cycles_suite(count, seed, corrupt)
                                           : run_completion_suite(count, seed, corrupt);
    std::cout << "suite: " << rep.suite << "\ninstances: " << rep.instances << "\nchecks: " << rep.checks
              << "\nrejected samples: " << rep.rejected << "\nfailures: " << rep.failures.size() << "\n";
    if (rep.failures.empty()) {
        std::cout << "PASS\n";
        return 0;
    }
    const auto& f = rep.failures.front();
    std::cout << "FAIL\nfirst failure: " << f.property << "\ninstance: " << f.instance << "\nmessage: " << f.message
              << "\nminimized instance (" << f.minimized.order() << " vertices):\n";
    Graph small = relabel_compact(f.minimized);
    std::cout << write_instance(small);
    if (!report_dir.empty()) {
        fs::path dir = fs::path(report_dir) / ("props-" + rep.suite);
        fs::create_directories(dir);
        write_file(dir / "instance.txt", write_instance(relabel_compact(f.graph)));
        write_file(dir / "minimized.txt", write_instance(small));
        write_file(dir / "failure.txt", f.property + "\n" + f.instance + "\n" + f.message + "\n");
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Interval vertex deletion and completion by bounded search"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "ifpt 0.1");

    std::string rec_input;
    auto* rec = app.add_subcommand("recognize", "Test whether a graph is interval");
    rec->add_option("--input,input", rec_input, "instance file, - for stdin")->required();

    SolveArgs sa;
    auto* solve = app.add_subcommand("solve", "Run the deletion or completion solver");
    solve->add_option("problem", sa.problem, "deletion or completion")
        ->required()
        ->check(CLI::IsMember({"deletion", "completion"}));
    solve->add_option("--input,input", sa.input, "instance file, - for stdin")->required();
    auto* kopt = solve->add_option("--k", sa.k, "budget");
    auto* optflag = solve->add_flag("--optimize", sa.optimize, "smallest k with a yes answer");
    kopt->excludes(optflag);
    solve->add_option("--kmax", sa.kmax, "largest k tried by --optimize (default: no limit)");
    solve->add_flag("--compare-oracle", sa.compare_oracle, "check the answer against brute force");
    solve->add_option("--json", sa.json, "write the run record here (- for stdout)");
    solve->add_option("--report-dir", sa.report_dir, "where counterexample bundles go");
    solve->add_flag("--parallel", sa.parallel, "explore the root's branches on threads");
    solve->add_option("--seed", sa.seed, "seed of the generated instance, copied into the record");

    GenArgs ga;
    auto* gen = app.add_subcommand("gen", "Generate an instance");
    gen->add_option("family", ga.family)
        ->required()
        ->check(CLI::IsMember({"gadget-type1", "gadget-type2", "nested-gadget", "long-cycle", "random-chordal", "gnp"}));
    gen->add_option("--p", ga.p, "path length of gadgets");
    gen->add_option("--levels", ga.levels, "nesting depth of nested-gadget");
    gen->add_option("--length,-L", ga.length, "cycle length");
    gen->add_option("--n", ga.n, "vertex count for random families");
    gen->add_option("--prob", ga.prob, "edge probability for gnp");
    gen->add_option("--seed", ga.seed, "random seed");
    gen->add_option("--output,-o", ga.output, "output file (default stdout)");

    std::string suite = "structure", props_report;
    std::size_t count = 100;
    std::uint64_t pseed = 1;
    bool corrupt = false;
    auto* props = app.add_subcommand("verifyprops", "Run a randomised property suite");
    props->add_option("--suite", suite)->check(CLI::IsMember({"structure", "cycles", "completion"}));
    props->add_option("--count", count, "instances to generate");
    props->add_option("--seed", pseed, "random seed");
    props->add_flag("--corrupt", corrupt, "remove one template edge from every instance (negative control)");
    props->add_option("--report-dir", props_report, "write the first failure here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_input;
    }
    try {
        if (*rec) return cmd_recognize(rec_input);
        if (*solve) return cmd_solve(sa);
        if (*gen) return cmd_gen(ga);
        return cmd_verifyprops(suite, count, pseed, corrupt, props_report);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "invalid arguments: " << e.what() << "\n";
        return exit_input;
    } catch (const ContractViolation& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return exit_input;
    } catch (const StructureViolation& e) {
        std::cerr << "structure violation: " << e.what() << "\n";
        return exit_mismatch;
    }
}
