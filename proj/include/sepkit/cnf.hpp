#ifndef SEPKIT_CNF_HPP
#define SEPKIT_CNF_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sepkit {

struct Literal {
    int var = 1;     // 1-based variable index
    bool negated = false;

    bool operator==(const Literal&) const = default;
};

using Clause = std::array<Literal, 3>;

/// 3-CNF formula. Normal form (established by normalize): every clause
/// has three distinct variables, at least two clauses, and every
/// variable in 1..num_vars occurs somewhere.
struct Cnf3 {
    int num_vars = 0;
    std::vector<Clause> clauses;

    int clause_count() const { return static_cast<int>(clauses.size()); }
    bool operator==(const Cnf3&) const = default;
};

/// Total truth assignment over variables 1..num_vars.
class Assignment {
public:
    Assignment() = default;
    explicit Assignment(std::vector<bool> values) : values_(std::move(values)) {}
    static Assignment from_mask(std::uint32_t mask, int num_vars);

    int num_vars() const { return static_cast<int>(values_.size()); }
    bool value(int var) const { return values_[var - 1]; }
    const std::vector<bool>& values() const { return values_; }

    bool operator==(const Assignment&) const = default;

private:
    std::vector<bool> values_;
};

bool satisfies(const Clause& c, const Assignment& a);
bool satisfies(const Cnf3& f, const Assignment& a);

/// True iff the clause is satisfied through both polarities: it has a
/// negative literal whose variable is 0 and a positive literal whose
/// variable is 1 under the assignment.
bool is_traversable(const Clause& c, const Assignment& a);

bool is_normalized(const Cnf3& f);

// DIMACS CNF reader: "p cnf n m" header, 'c' comment lines,
// 0-terminated clauses of exactly three literals.
Cnf3 parse_dimacs_cnf(std::istream& in);
Cnf3 parse_dimacs_cnf(const std::string& text);
Cnf3 parse_dimacs_file(const std::string& path);
std::string to_dimacs(const Cnf3& f);

/// Rejects clauses with repeated variables, drops variables that occur in
/// no clause (renumbering densely), and duplicates a lone clause so the
/// result has at least two. Satisfiability is preserved.
Cnf3 normalize(const Cnf3& f);

/// First satisfying assignment in ascending mask order (variable k is
/// bit k-1), or nullopt. Refuses formulas over more than max_vars
/// variables.
std::optional<Assignment> brute_force_sat(const Cnf3& f, int max_vars = 24);

/// Every satisfying assignment, ascending mask order, same cap.
std::vector<Assignment> enumerate_satisfying(const Cnf3& f, int max_vars = 24);

/// Model line in solver style: "v 1 -2 3 0".
std::string assignment_line(const Assignment& a);

} // namespace sepkit

#endif
