// hypercol: build, verify and colour the degenerate triangle-free hypergraphs.
//
// Exit codes: 0 pass, 1 property failure, 2 size refusal, 3 budget,
// 64 usage, 65 parse.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hypercol/certify.hpp"
#include "hypercol/cnf.hpp"
#include "hypercol/construction.hpp"
#include "hypercol/hgr_io.hpp"

namespace {

using namespace hypercol;

enum Exit : int {
    kPass = 0,
    kFail = 1,
    kRefused = 2,
    kBudget = 3,
    kUsage = 64,
    kParse = 65,
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Hypergraph load(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    return parse_hgr(in);
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot write " + path);
    return out;
}

std::string join_colors(const Coloring& c) {
    std::ostringstream s;
    s << "coloring " << c.num_used();
    for (auto col : c.colors())
        s << ' ' << col;
    return s.str();
}

// ---------------------------------------------------------------- build

struct BuildArgs {
    std::size_t r = 0, d = 0;
    std::string out, provenance, cap = "1000000";
    bool force = false;
};

int cmd_build(const BuildArgs& a) {
    if (a.r < 2 || a.d < 1)
        throw UsageError("need --r >= 2 and --d >= 1");
    BigInt cap;
    try {
        cap = BigInt(a.cap);
    } catch (const std::exception&) {
        throw UsageError("bad --cap value " + a.cap);
    }
    std::optional<Construction> built;
    try {
        built = build_with_provenance({a.r, a.d}, cap);
    } catch (const SizeRefused& e) {
        if (!a.force) {
            const auto& p = e.predicted();
            std::cerr << "refused: predicted V=" << p.vertices << " E=" << p.edges
                      << " numS=" << p.num_s << " exceeds cap " << e.cap()
                      << " (pass --force to build anyway)\n";
            return kRefused;
        }
        const auto& p = e.predicted();
        built = build_with_provenance({a.r, a.d}, p.vertices + p.edges);
    }
    if (a.out.empty()) {
        write_hgr(std::cout, built->graph);
    } else {
        auto out = open_out(a.out);
        write_hgr(out, built->graph);
        std::cout << "built V=" << built->graph.num_vertices() << " E=" << built->graph.num_edges()
                  << '\n';
    }
    if (!a.provenance.empty()) {
        auto out = open_out(a.provenance);
        write_provenance(out, built->provenance);
    }
    return kPass;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::string file, provenance;
    std::optional<std::size_t> degeneracy, new_vertex_degree;
    bool triangle_free = false;
};

int cmd_verify(const VerifyArgs& a) {
    const auto h = load(a.file);
    bool ok = true;
    std::cout << "hypergraph n=" << h.num_vertices() << " m=" << h.num_edges()
              << " r=" << h.uniformity() << '\n';

    if (a.degeneracy) {
        const auto res = degeneracy(h);
        const bool pass = res.degeneracy <= *a.degeneracy && check_elimination_order(h, res.order);
        ok = ok && pass;
        std::cout << "degeneracy " << res.degeneracy << " <= " << *a.degeneracy << ' '
                  << (pass ? "PASS" : "FAIL") << '\n';
        std::cout << "order";
        for (auto v : res.order.order)
            std::cout << ' ' << v + 1;
        std::cout << '\n';
    }

    if (a.triangle_free) {
        const auto t = find_triangle(h);
        ok = ok && !t;
        if (!t) {
            std::cout << "triangle-free PASS\n";
        } else {
            std::cout << "triangle-free FAIL edges " << t->edge_indices[0] << ' '
                      << t->edge_indices[1] << ' ' << t->edge_indices[2] << " vertices";
            for (auto v : t->vertices)
                std::cout << ' ' << v + 1;
            std::cout << '\n';
        }
    }

    if (a.new_vertex_degree) {
        if (a.provenance.empty())
            throw UsageError("--new-vertex-degree needs --provenance");
        std::ifstream in(a.provenance);
        if (!in)
            throw UsageError("cannot open " + a.provenance);
        const auto prov = parse_provenance(in);
        if (prov.size() != h.num_vertices())
            throw ParseError(prov.size(), "provenance lists " + std::to_string(prov.size()) +
                                              " vertices, hypergraph has " +
                                              std::to_string(h.num_vertices()));
        auto is_new = [&](VertexId v) { return prov[v].kind == VertexProvenance::Kind::kNew; };
        std::size_t count = 0;
        std::optional<VertexId> bad_vertex;
        std::optional<std::size_t> bad_edge;
        for (VertexId v = 0; v < h.num_vertices(); ++v) {
            if (!is_new(v))
                continue;
            ++count;
            if (!bad_vertex && degree(h, v) != *a.new_vertex_degree)
                bad_vertex = v;
        }
        for (std::size_t i = 0; i < h.num_edges() && !bad_edge; ++i) {
            const auto e = h.edge(i);
            if (std::count_if(e.begin(), e.end(), is_new) > 1)
                bad_edge = i;
        }
        const bool pass = !bad_vertex && !bad_edge;
        ok = ok && pass;
        std::cout << "new-vertex-degree " << *a.new_vertex_degree << ' ' << (pass ? "PASS" : "FAIL")
                  << " new=" << count;
        if (bad_vertex)
            std::cout << " vertex " << *bad_vertex + 1 << " degree " << degree(h, *bad_vertex);
        if (bad_edge)
            std::cout << " edge " << *bad_edge << " has several new vertices";
        std::cout << '\n';
    }
    return ok ? kPass : kFail;
}

// ---------------------------------------------------------------- colouring

struct SearchArgs {
    std::string file, solver_cmd;
    std::optional<std::size_t> max_k;
    std::uint64_t budget = 100'000'000;
    bool parallel = false;
};

// Smallest k with a proper colouring; budget-exhausted k are handed to the
// external solver when one is configured.
std::optional<Coloring> search_optimal(const Hypergraph& h, const SearchArgs& a, int& status) {
    const std::size_t kmax = a.max_k.value_or(std::max<std::size_t>(h.num_vertices(), 1));
    SolverOptions opts{a.budget, a.parallel};
    for (std::size_t k = 1; k <= kmax; ++k) {
        auto res = k_colorable(h, k, opts);
        if (res.status == SearchStatus::kBudgetExceeded && !a.solver_cmd.empty()) {
            std::cerr << "k=" << k << ": internal budget exhausted, delegating to external solver\n";
            res = k_colorable_external(h, k, a.solver_cmd);
        }
        if (res.status == SearchStatus::kColorable)
            return Coloring(res.coloring->colors(), k);
        if (res.status != SearchStatus::kNotColorable) {
            std::cerr << "k=" << k << ": undecided within budget " << a.budget << '\n';
            status = kBudget;
            return std::nullopt;
        }
    }
    std::cout << "chromatic >" << kmax << '\n';
    status = kFail;
    return std::nullopt;
}

int cmd_chromatic(const SearchArgs& a) {
    const auto h = load(a.file);
    int status = kPass;
    if (auto c = search_optimal(h, a, status)) {
        std::cout << "chromatic " << c->palette() << '\n';
    }
    return status;
}

int cmd_color(const SearchArgs& a, bool greedy) {
    const auto h = load(a.file);
    if (greedy) {
        const auto res = degeneracy(h);
        std::cout << join_colors(greedy_color(h, res.order)) << '\n';
        return kPass;
    }
    int status = kPass;
    if (auto c = search_optimal(h, a, status))
        std::cout << join_colors(*c) << '\n';
    return status;
}

struct LemmaArgs {
    std::string file;
    std::size_t k = 0;
    std::optional<std::size_t> min;
    std::uint64_t budget = 100'000'000;
};

int cmd_lemma_check(const LemmaArgs& a) {
    if (a.k < 1)
        throw UsageError("--k must be at least 1");
    const auto h = load(a.file);
    const auto smallest = min_color_class_size(h, a.k, a.budget);
    if (!smallest) {
        std::cout << "lemma-min-class none\n";
        return kFail;
    }
    std::cout << "lemma-min-class " << *smallest << '\n';
    return a.min && *smallest < *a.min ? kFail : kPass;
}

struct EncodeArgs {
    std::string file, out;
    std::size_t k = 0;
    bool symmetry_break = false;
};

int cmd_encode(const EncodeArgs& a) {
    if (a.k < 1)
        throw UsageError("--k must be at least 1");
    const auto h = load(a.file);
    const auto f = encode_k_coloring(h, a.k, a.symmetry_break);
    auto out = open_out(a.out);
    write_dimacs(out, f);
    std::cout << "cnf vars=" << f.num_vars << " clauses=" << f.clauses.size() << '\n';
    return kPass;
}

int cmd_stats(std::size_t r, std::size_t d) {
    if (r < 2 || d < 1)
        throw UsageError("need --r >= 2 and --d >= 1");
    const auto s = predict_sizes(r, d);
    std::cout << "stats V=" << s.vertices << " E=" << s.edges << " numS=" << s.num_s << '\n';
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Build and certify triangle-free d-degenerate r-uniform hypergraphs"};
    app.require_subcommand(1);

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "Construct G_d for uniformity r");
    build->add_option("--r", build_args.r, "Uniformity (>= 2)")->required();
    build->add_option("--d", build_args.d, "Degeneracy (>= 1)")->required();
    build->add_option("--out", build_args.out, "Output hgr file (default: stdout)");
    build->add_option("--provenance", build_args.provenance, "Write the provenance sidecar here");
    build->add_option("--cap", build_args.cap, "Refuse when predicted V+E exceeds this")
        ->capture_default_str();
    build->add_flag("--force", build_args.force, "Build even when the cap is exceeded");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Check degeneracy, triangle-freeness, new-vertex degrees");
    verify->add_option("file", verify_args.file, "hgr file")->required();
    verify->add_option("--degeneracy", verify_args.degeneracy, "Require degeneracy <= D");
    verify->add_flag("--triangle-free", verify_args.triangle_free, "Require no triangle");
    verify->add_option("--new-vertex-degree", verify_args.new_vertex_degree,
                       "Require every NEW vertex to have degree D");
    verify->add_option("--provenance", verify_args.provenance, "Provenance sidecar");

    SearchArgs chrom_args;
    auto* chromatic = app.add_subcommand("chromatic", "Exact chromatic number");
    chromatic->add_option("file", chrom_args.file, "hgr file")->required();
    chromatic->add_option("--max-k", chrom_args.max_k, "Largest k to try");
    chromatic->add_option("--budget", chrom_args.budget, "Search-node budget per k")
        ->capture_default_str();
    chromatic->add_flag("--parallel", chrom_args.parallel, "Multi-threaded search");
    chromatic->add_option("--solver-cmd", chrom_args.solver_cmd,
                          "External SAT solver command, `{cnf}` is replaced by the CNF path");

    SearchArgs color_args;
    bool greedy = false, exact = false;
    auto* color = app.add_subcommand("color", "Print a proper colouring");
    color->add_option("file", color_args.file, "hgr file")->required();
    auto* g = color->add_flag("--greedy", greedy, "Reverse min-degree elimination order greedy");
    auto* x = color->add_flag("--exact", exact, "Colouring with the minimum number of colours");
    g->excludes(x);
    color->add_option("--max-k", color_args.max_k, "Largest k to try (exact)");
    color->add_option("--budget", color_args.budget, "Search-node budget per k (exact)");
    color->add_flag("--parallel", color_args.parallel, "Multi-threaded search (exact)");
    color->add_option("--solver-cmd", color_args.solver_cmd, "External SAT solver (exact)");

    LemmaArgs lemma_args;
    auto* lemma = app.add_subcommand("lemma-check", "Smallest colour class over all proper k-colourings");
    lemma->add_option("file", lemma_args.file, "hgr file")->required();
    lemma->add_option("--k", lemma_args.k, "Number of colours")->required();
    lemma->add_option("--min", lemma_args.min, "Fail unless the result is at least this");
    lemma->add_option("--budget", lemma_args.budget, "Search-node budget")->capture_default_str();

    EncodeArgs encode_args;
    auto* encode = app.add_subcommand("encode", "Write k-colourability as DIMACS CNF");
    encode->add_option("file", encode_args.file, "hgr file")->required();
    encode->add_option("--k", encode_args.k, "Number of colours")->required();
    encode->add_option("--out", encode_args.out, "Output CNF file")->required();
    encode->add_flag("--symmetry-break", encode_args.symmetry_break, "Add the unit clause x(1,0)");

    std::size_t stats_r = 0, stats_d = 0;
    auto* stats = app.add_subcommand("stats", "Predicted sizes of G_d");
    stats->add_option("--r", stats_r, "Uniformity")->required();
    stats->add_option("--d", stats_d, "Degeneracy")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (build->parsed())
            return cmd_build(build_args);
        if (verify->parsed())
            return cmd_verify(verify_args);
        if (chromatic->parsed())
            return cmd_chromatic(chrom_args);
        if (color->parsed()) {
            if (!greedy && !exact)
                throw UsageError("color needs --greedy or --exact");
            return cmd_color(color_args, greedy);
        }
        if (lemma->parsed())
            return cmd_lemma_check(lemma_args);
        if (encode->parsed())
            return cmd_encode(encode_args);
        if (stats->parsed())
            return cmd_stats(stats_r, stats_d);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << '\n';
        return kBudget;
    } catch (const DecodeError& e) {
        std::cerr << "solver: " << e.what() << '\n';
        return kFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFail;
    }
    return kUsage;
}
