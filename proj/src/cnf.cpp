#include "hypercol/cnf.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

namespace hypercol {

void CnfFormula::validate() const {
    const auto limit = static_cast<std::int64_t>(num_vars);
    for (std::size_t i = 0; i < clauses.size(); ++i) {
        const auto& cl = clauses[i];
        if (cl.empty())
            throw InputError("clause " + std::to_string(i) + " is empty");
        std::unordered_set<std::int64_t> seen;
        for (auto lit : cl) {
            if (lit == 0 || lit > limit || lit < -limit)
                throw InputError("clause " + std::to_string(i) + " has literal " +
                                 std::to_string(lit) + " outside 1.." + std::to_string(num_vars));
            if (seen.contains(-lit))
                throw InputError("clause " + std::to_string(i) + " is tautological");
            seen.insert(lit);
        }
    }
}

CnfFormula encode_k_coloring(const Hypergraph& h, std::size_t k, bool symmetry_break) {
    if (k < 1)
        throw InputError("k must be at least 1");
    if (h.num_vertices() == 0)
        throw InputError("cannot encode a hypergraph without vertices");
    CnfFormula f;
    f.num_vars = h.num_vertices() * k;
    f.clauses.reserve(h.num_vertices() + h.num_edges() * k + 1);
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
        Clause cl;
        for (std::size_t c = 0; c < k; ++c)
            cl.push_back(color_var(v, c, k));
        f.clauses.push_back(std::move(cl));
    }
    for (std::size_t i = 0; i < h.num_edges(); ++i)
        for (std::size_t c = 0; c < k; ++c) {
            Clause cl;
            for (VertexId v : h.edge(i))
                cl.push_back(-color_var(v, c, k));
            f.clauses.push_back(std::move(cl));
        }
    if (symmetry_break)
        f.clauses.push_back({color_var(0, 0, k)});
    return f;
}

Coloring decode(const std::vector<bool>& assignment, const Hypergraph& h, std::size_t k) {
    std::vector<std::uint32_t> colors(h.num_vertices());
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
        std::size_t c = 0;
        while (c < k) {
            const auto idx = static_cast<std::size_t>(color_var(v, c, k) - 1);
            if (idx < assignment.size() && assignment[idx])
                break;
            ++c;
        }
        if (c == k)
            throw DecodeError("vertex " + std::to_string(v + 1) + " has no true colour variable");
        colors[v] = static_cast<std::uint32_t>(c);
    }
    return Coloring(std::move(colors), k);
}

void write_dimacs(std::ostream& out, const CnfFormula& f) {
    out << "p cnf " << f.num_vars << ' ' << f.clauses.size() << '\n';
    for (const auto& cl : f.clauses) {
        for (auto lit : cl)
            out << lit << ' ';
        out << "0\n";
    }
}

CnfFormula parse_dimacs(std::istream& in) {
    CnfFormula f;
    std::string line;
    std::size_t lineno = 0;
    bool header = false;
    std::size_t declared = 0;
    Clause pending;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream ss(line);
        if (line[0] == 'p') {
            std::string p, fmt;
            if (header || !(ss >> p >> fmt >> f.num_vars >> declared) || fmt != "cnf")
                throw ParseError(lineno, "bad `p cnf` header");
            header = true;
            continue;
        }
        if (!header)
            throw ParseError(lineno, "clause before header");
        std::string tok;
        while (ss >> tok) {
            std::int64_t lit = 0;
            try {
                std::size_t used = 0;
                lit = std::stoll(tok, &used);
                if (used != tok.size())
                    throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw ParseError(lineno, "bad literal `" + tok + "`");
            }
            if (lit == 0) {
                f.clauses.push_back(std::move(pending));
                pending.clear();
            } else {
                pending.push_back(lit);
            }
        }
    }
    if (!header)
        throw ParseError(lineno, "missing `p cnf` header");
    if (!pending.empty())
        throw ParseError(lineno, "unterminated clause");
    if (f.clauses.size() != declared)
        throw ParseError(lineno, "header declares " + std::to_string(declared) + " clauses, found " +
                                     std::to_string(f.clauses.size()));
    try {
        f.validate();
    } catch (const InputError& e) {
        throw ParseError(lineno, e.what());
    }
    return f;
}

SolverOutcome parse_solver_output(std::string_view text) {
    SolverOutcome out;
    bool have_status = false;
    bool model_done = false;
    std::size_t lineno = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == 'c')
            continue;
        if (line.size() < 2 || line[1] != ' ')
            throw ParseError(lineno, "unrecognised solver output line");
        std::istringstream ss(line.substr(2));
        if (line[0] == 's') {
            std::string status;
            std::getline(ss >> std::ws, status);
            while (!status.empty() && status.back() == ' ')
                status.pop_back();
            if (have_status)
                throw ParseError(lineno, "second status line");
            if (status == "SATISFIABLE")
                out.status = SolverOutcome::Status::kSat;
            else if (status == "UNSATISFIABLE")
                out.status = SolverOutcome::Status::kUnsat;
            else if (status == "UNKNOWN")
                out.status = SolverOutcome::Status::kUnknown;
            else
                throw ParseError(lineno, "unknown status `" + status + "`");
            have_status = true;
        } else if (line[0] == 'v') {
            if (model_done)
                throw ParseError(lineno, "model continues after terminating 0");
            std::string tok;
            while (ss >> tok) {
                std::int64_t lit = 0;
                try {
                    std::size_t used = 0;
                    lit = std::stoll(tok, &used);
                    if (used != tok.size())
                        throw std::invalid_argument(tok);
                } catch (const std::exception&) {
                    throw ParseError(lineno, "bad model literal `" + tok + "`");
                }
                if (lit == 0) {
                    model_done = true;
                    continue;
                }
                if (model_done)
                    throw ParseError(lineno, "literal after terminating 0");
                const auto var = static_cast<std::size_t>(lit < 0 ? -lit : lit);
                if (out.model.size() < var)
                    out.model.resize(var, false);
                out.model[var - 1] = lit > 0;
            }
        } else {
            throw ParseError(lineno, "unrecognised solver output line");
        }
    }
    if (!out.model.empty() && out.status != SolverOutcome::Status::kSat)
        throw ParseError(lineno, "model given without `s SATISFIABLE`");
    return out;
}

namespace {

struct PipeCloser {
    void operator()(FILE* f) const { pclose(f); }
};

class TempFile {
public:
    TempFile() {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() /
                ("hypercol-" + std::to_string(rd()) + "-" + std::to_string(rd()) + ".cnf");
    }
    ~TempFile() {
        std::error_code ec;
        std::filesystem::remove(path_, ec);
    }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;

    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

std::string shell_quote(const std::string& s) {
    std::string out = "'";
    for (char ch : s) {
        if (ch == '\'')
            out += "'\\''";
        else
            out += ch;
    }
    return out + "'";
}

}  // namespace

SolverOutcome run_external_solver(const CnfFormula& f, const std::string& command_template) {
    TempFile cnf;
    {
        std::ofstream out(cnf.path());
        if (!out)
            throw std::runtime_error("cannot write " + cnf.path().string());
        write_dimacs(out, f);
    }
    std::string cmd = command_template;
    const std::string placeholder = "{cnf}";
    const auto quoted = shell_quote(cnf.path().string());
    if (cmd.find(placeholder) == std::string::npos)
        throw InputError("solver command template lacks {cnf}");
    for (auto pos = cmd.find(placeholder); pos != std::string::npos;
         pos = cmd.find(placeholder, pos + quoted.size()))
        cmd.replace(pos, placeholder.size(), quoted);

    std::unique_ptr<FILE, PipeCloser> pipe(popen(cmd.c_str(), "r"));
    if (!pipe)
        throw std::runtime_error("failed to start solver: " + cmd);
    std::string text;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe.get())) > 0)
        text.append(buf.data(), got);
    return parse_solver_output(text);
}

ColorSearch k_colorable_external(const Hypergraph& h, std::size_t k,
                                 const std::string& command_template, bool symmetry_break) {
    const auto f = encode_k_coloring(h, k, symmetry_break);
    const auto outcome = run_external_solver(f, command_template);
    switch (outcome.status) {
    case SolverOutcome::Status::kSat: {
        auto coloring = decode(outcome.model, h, k);
        if (!is_proper(h, coloring))
            throw DecodeError("solver model decodes to an improper colouring");
        return {SearchStatus::kColorable, std::move(coloring), 0};
    }
    case SolverOutcome::Status::kUnsat:
        return {SearchStatus::kNotColorable, std::nullopt, 0};
    case SolverOutcome::Status::kUnknown:
        break;
    }
    return {SearchStatus::kUnknown, std::nullopt, 0};
}

}  // namespace hypercol
