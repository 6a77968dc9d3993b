#include "sepkit/cnf.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "sepkit/errors.hpp"

namespace sepkit {

Assignment Assignment::from_mask(std::uint32_t mask, int num_vars) {
    std::vector<bool> values(num_vars);
    for (int k = 0; k < num_vars; ++k) values[k] = (mask >> k) & 1u;
    return Assignment(std::move(values));
}

bool satisfies(const Clause& c, const Assignment& a) {
    for (const Literal& lit : c)
        if (a.value(lit.var) != lit.negated) return true;
    return false;
}

bool satisfies(const Cnf3& f, const Assignment& a) {
    for (const Clause& c : f.clauses)
        if (!satisfies(c, a)) return false;
    return true;
}

bool is_traversable(const Clause& c, const Assignment& a) {
    bool negative_zero = false, positive_one = false;
    for (const Literal& lit : c) {
        if (lit.negated && !a.value(lit.var)) negative_zero = true;
        if (!lit.negated && a.value(lit.var)) positive_one = true;
    }
    return negative_zero && positive_one;
}

bool is_normalized(const Cnf3& f) {
    if (f.clause_count() < 2 || f.num_vars < 1) return false;
    std::vector<bool> used(f.num_vars, false);
    for (const Clause& c : f.clauses) {
        for (const Literal& lit : c) {
            if (lit.var < 1 || lit.var > f.num_vars) return false;
            used[lit.var - 1] = true;
        }
        if (c[0].var == c[1].var || c[0].var == c[2].var ||
            c[1].var == c[2].var)
            return false;
    }
    return std::all_of(used.begin(), used.end(), [](bool u) { return u; });
}

Cnf3 parse_dimacs_cnf(std::istream& in) {
    int num_vars = -1, num_clauses = -1;
    std::string line;
    std::vector<int> pending;
    std::vector<Clause> clauses;

    while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string first;
        if (!(fields >> first)) continue;
        if (first == "c") continue;
        if (first == "p") {
            if (num_vars >= 0) throw parse_error("dimacs: duplicate header");
            std::string fmt;
            if (!(fields >> fmt >> num_vars >> num_clauses) || fmt != "cnf" ||
                num_vars < 1 || num_clauses < 0)
                throw parse_error("dimacs: malformed 'p cnf n m' header");
            continue;
        }
        if (num_vars < 0)
            throw parse_error("dimacs: clause data before header");
        fields.clear();
        fields.str(line);
        int lit;
        while (fields >> lit) {
            if (lit == 0) {
                if (pending.size() != 3)
                    throw parse_error(
                        "dimacs: clause " + std::to_string(clauses.size() + 1) +
                        " has " + std::to_string(pending.size()) +
                        " literals, expected 3");
                Clause c;
                for (int i = 0; i < 3; ++i)
                    c[i] = Literal{std::abs(pending[i]), pending[i] < 0};
                clauses.push_back(c);
                pending.clear();
            } else {
                if (std::abs(lit) > num_vars)
                    throw parse_error("dimacs: literal " + std::to_string(lit) +
                                      " exceeds declared variable count");
                pending.push_back(lit);
            }
        }
        if (!fields.eof())
            throw parse_error("dimacs: non-integer token in clause data");
    }
    if (num_vars < 0) throw parse_error("dimacs: missing header");
    if (!pending.empty()) throw parse_error("dimacs: unterminated clause");
    if (clauses.empty()) throw parse_error("dimacs: formula has no clauses");
    if (static_cast<int>(clauses.size()) != num_clauses)
        throw parse_error("dimacs: header declares " +
                          std::to_string(num_clauses) + " clauses, found " +
                          std::to_string(clauses.size()));
    return Cnf3{num_vars, std::move(clauses)};
}

Cnf3 parse_dimacs_cnf(const std::string& text) {
    std::istringstream in(text);
    return parse_dimacs_cnf(in);
}

Cnf3 parse_dimacs_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open cnf file: " + path);
    return parse_dimacs_cnf(in);
}

std::string to_dimacs(const Cnf3& f) {
    std::ostringstream out;
    out << "p cnf " << f.num_vars << ' ' << f.clause_count() << '\n';
    for (const Clause& c : f.clauses) {
        for (const Literal& lit : c) out << (lit.negated ? -lit.var : lit.var) << ' ';
        out << "0\n";
    }
    return out.str();
}

Cnf3 normalize(const Cnf3& f) {
    if (f.clauses.empty())
        throw std::invalid_argument("normalize: formula has no clauses");

    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
        const Clause& c = f.clauses[j];
        if (c[0].var == c[1].var || c[0].var == c[2].var ||
            c[1].var == c[2].var)
            throw std::invalid_argument(
                "normalize: clause " + std::to_string(j + 1) +
                " repeats a variable");
        for (const Literal& lit : c)
            if (lit.var < 1 || lit.var > f.num_vars)
                throw std::invalid_argument(
                    "normalize: clause " + std::to_string(j + 1) +
                    " uses a variable outside 1..n");
    }

    // Surviving variables keep their relative order under renumbering.
    std::vector<bool> used(f.num_vars + 1, false);
    for (const Clause& c : f.clauses)
        for (const Literal& lit : c) used[lit.var] = true;
    std::vector<int> remap(f.num_vars + 1, 0);
    int next = 0;
    for (int v = 1; v <= f.num_vars; ++v)
        if (used[v]) remap[v] = ++next;

    Cnf3 out;
    out.num_vars = next;
    out.clauses.reserve(std::max<std::size_t>(f.clauses.size(), 2));
    for (const Clause& c : f.clauses) {
        Clause r = c;
        for (Literal& lit : r) lit.var = remap[lit.var];
        out.clauses.push_back(r);
    }
    if (out.clauses.size() == 1) out.clauses.push_back(out.clauses.front());
    return out;
}

namespace {

void require_sat_cap(const Cnf3& f, int max_vars) {
    if (f.num_vars > max_vars)
        throw budget_error("sat oracle refused: " +
                           std::to_string(f.num_vars) +
                           " variables exceeds the cap of " +
                           std::to_string(max_vars));
    if (f.num_vars < 1)
        throw std::invalid_argument("sat oracle: formula has no variables");
}

} // namespace

std::optional<Assignment> brute_force_sat(const Cnf3& f, int max_vars) {
    require_sat_cap(f, max_vars);
    const std::uint64_t end = std::uint64_t{1} << f.num_vars;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        Assignment a =
            Assignment::from_mask(static_cast<std::uint32_t>(mask), f.num_vars);
        if (satisfies(f, a)) return a;
    }
    return std::nullopt;
}

std::vector<Assignment> enumerate_satisfying(const Cnf3& f, int max_vars) {
    require_sat_cap(f, max_vars);
    std::vector<Assignment> models;
    const std::uint64_t end = std::uint64_t{1} << f.num_vars;
    for (std::uint64_t mask = 0; mask < end; ++mask) {
        Assignment a =
            Assignment::from_mask(static_cast<std::uint32_t>(mask), f.num_vars);
        if (satisfies(f, a)) models.push_back(std::move(a));
    }
    return models;
}

std::string assignment_line(const Assignment& a) {
    std::ostringstream out;
    out << 'v';
    for (int var = 1; var <= a.num_vars(); ++var)
        out << ' ' << (a.value(var) ? var : -var);
    out << " 0";
    return out.str();
}

} // namespace sepkit
