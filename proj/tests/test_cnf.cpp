#include <doctest.h>

#include <random>
#include <sstream>

#include "hypercol/certify.hpp"
#include "hypercol/cnf.hpp"
#include "hypercol/construction.hpp"
#include "oracles.hpp"

using namespace hypercol;

namespace {

const Hypergraph kK2(2, 2, {{0, 1}});

// Tiny DPLL used only to decide the formulas produced here.
bool dpll(const CnfFormula& f, std::vector<int>& val, std::size_t next = 1) {
    for (const auto& cl : f.clauses) {
        bool sat = false, open = false;
        for (auto lit : cl) {
            const int v = val[static_cast<std::size_t>(std::abs(lit))];
            if (v == 0)
                open = true;
            else if ((v > 0) == (lit > 0))
                sat = true;
        }
        if (!sat && !open)
            return false;
    }
    if (next > f.num_vars)
        return true;
    for (int choice : {1, -1}) {
        val[next] = choice;
        if (dpll(f, val, next + 1))
            return true;
    }
    val[next] = 0;
    return false;
}

std::optional<std::vector<bool>> solve(const CnfFormula& f) {
    std::vector<int> val(f.num_vars + 1, 0);
    if (!dpll(f, val))
        return std::nullopt;
    std::vector<bool> model(f.num_vars);
    for (std::size_t i = 1; i <= f.num_vars; ++i)
        model[i - 1] = val[i] > 0;
    return model;
}

}  // namespace

TEST_CASE("encoding layout") {
    const auto f = encode_k_coloring(kK2, 2, false);
    CHECK(f.num_vars == 4);
    CHECK(f.clauses == std::vector<Clause>{{1, 2}, {3, 4}, {-1, -3}, {-2, -4}});
    f.validate();

    const auto g = encode_k_coloring(kK2, 2, true);
    CHECK(g.clauses.size() == 5);
    CHECK(g.clauses.back() == Clause{1});

    std::ostringstream out;
    write_dimacs(out, f);
    CHECK(out.str() == "p cnf 4 4\n1 2 0\n3 4 0\n-1 -3 0\n-2 -4 0\n");

    CHECK_THROWS_AS(encode_k_coloring(kK2, 0), InputError);
    CHECK_THROWS_AS(encode_k_coloring(Hypergraph(), 2), InputError);
}

TEST_CASE("formula validation") {
    CHECK_THROWS_AS((CnfFormula{2, {{}}}).validate(), InputError);
    CHECK_THROWS_AS((CnfFormula{2, {{1, 3}}}).validate(), InputError);
    CHECK_THROWS_AS((CnfFormula{2, {{1, -1}}}).validate(), InputError);
    CHECK_NOTHROW((CnfFormula{2, {{1, -2}, {2}}}).validate());
}

TEST_CASE("constructed instances") {
    CHECK_FALSE(solve(encode_k_coloring(build({2, 2}), 2)));
    const auto base = build_base(3);
    auto model = solve(encode_k_coloring(base, 2));
    REQUIRE(model);
    CHECK(is_proper(base, decode(*model, base, 2)));
}

TEST_CASE("decoding") {
    CHECK(decode({true, false, false, true}, kK2, 2).colors() == std::vector<std::uint32_t>{0, 1});
    // Several true colours: the smallest wins.
    CHECK(decode({true, true, false, true}, kK2, 2).colors() == std::vector<std::uint32_t>{0, 1});
    CHECK_THROWS_AS(decode({false, false, false, false}, kK2, 2), DecodeError);
    CHECK_THROWS_AS(decode({true, false}, kK2, 2), DecodeError);
}

TEST_CASE("satisfiable iff k-colourable; models decode to proper colourings") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 2 + rng() % 2;
        const std::size_t n = r + rng() % (10 - r + 1);
        const auto h = oracle::random_hypergraph(rng, n, r, rng() % 20);
        for (std::size_t k = 1; k <= 3; ++k) {
            for (bool sym : {false, true}) {
                const auto f = encode_k_coloring(h, k, sym);
                f.validate();
                const auto model = solve(f);
                const bool internal = k_colorable(h, k).status == SearchStatus::kColorable;
                CHECK(model.has_value() == internal);
                CHECK(internal == oracle::colorable(h, k).has_value());
                if (model) {
                    const auto c = decode(*model, h, k);
                    CHECK(is_proper(h, c));
                }
            }
        }
    }
}

TEST_CASE("DIMACS round trip preserves clause order") {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 20; ++trial) {
        const auto h = oracle::random_hypergraph(rng, 3 + rng() % 6, 2 + rng() % 2, rng() % 10);
        const auto f = encode_k_coloring(h, 1 + rng() % 4, trial % 2 == 0);
        std::stringstream ss;
        write_dimacs(ss, f);
        CHECK(parse_dimacs(ss) == f);
    }
}

TEST_CASE("DIMACS parse errors") {
    std::istringstream noheader("1 2 0\n");
    CHECK_THROWS_AS(parse_dimacs(noheader), ParseError);
    std::istringstream count("p cnf 2 2\n1 2 0\n");
    CHECK_THROWS_AS(parse_dimacs(count), ParseError);
    std::istringstream range("c hi\np cnf 2 1\n1 3 0\n");
    CHECK_THROWS_AS(parse_dimacs(range), ParseError);
    std::istringstream junk("p cnf 2 1\n1 x 0\n");
    try {
        parse_dimacs(junk);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("solver output") {
    auto out = parse_solver_output("s UNSATISFIABLE\n");
    CHECK(out.status == SolverOutcome::Status::kUnsat);

    out = parse_solver_output("c comment\ns SATISFIABLE\nv 1 -2 3 -4 0\n");
    CHECK(out.status == SolverOutcome::Status::kSat);
    CHECK(out.model == std::vector<bool>{true, false, true, false});

    out = parse_solver_output("s SATISFIABLE\nv 1 -2\nv 3 -4 0\n");
    CHECK(out.model == std::vector<bool>{true, false, true, false});

    CHECK(parse_solver_output("s UNKNOWN\n").status == SolverOutcome::Status::kUnknown);
    CHECK(parse_solver_output("c nothing decided\n").status == SolverOutcome::Status::kUnknown);

    try {
        parse_solver_output("c ok\ns SATISFIABLE\nv 1 two 0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_solver_output("s MAYBE\n"), ParseError);
    CHECK_THROWS_AS(parse_solver_output("garbage\n"), ParseError);
    CHECK_THROWS_AS(parse_solver_output("s UNSATISFIABLE\nv 1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_solver_output("s SATISFIABLE\ns UNSATISFIABLE\n"), ParseError);
}

TEST_CASE("external solver plumbing") {
    // Canned answers through the shell stand in for a real solver.
    const auto f = encode_k_coloring(kK2, 2);
    auto out = run_external_solver(f, "test -s {cnf} && printf 's SATISFIABLE\\nv 1 -2 -3 4 0\\n'");
    CHECK(out.status == SolverOutcome::Status::kSat);

    auto res = k_colorable_external(kK2, 2, "grep -q '^p cnf 4 5$' {cnf} && echo 's UNSATISFIABLE'");
    CHECK(res.status == SearchStatus::kNotColorable);

    res = k_colorable_external(kK2, 2, "cat {cnf} >/dev/null; printf 's SATISFIABLE\\nv 1 -2 -3 4 0\\n'");
    REQUIRE(res.status == SearchStatus::kColorable);
    CHECK(res.coloring->colors() == std::vector<std::uint32_t>{0, 1});

    // A model that colours the edge monochromatically is rejected.
    CHECK_THROWS_AS(
        k_colorable_external(kK2, 2, "true {cnf}; printf 's SATISFIABLE\\nv 1 -2 3 -4 0\\n'"),
        DecodeError);

    res = k_colorable_external(kK2, 2, "true {cnf}; echo 's UNKNOWN'");
    CHECK(res.status == SearchStatus::kUnknown);

    CHECK_THROWS_AS(run_external_solver(f, "echo no placeholder"), InputError);
}
