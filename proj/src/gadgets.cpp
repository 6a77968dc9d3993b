#include "sepkit/gadgets.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "sepkit/errors.hpp"
#include "sepkit/separators.hpp"

namespace sepkit {

std::pair<Graph, BannerLabels> banner() {
    BannerLabels l;
    Graph g(5, {{l.a, l.b}, {l.b, l.c}, {l.c, l.d}, {l.a, l.d}, {l.d, l.e}});
    return {std::move(g), l};
}

std::pair<Graph, MelonLabels> melon(int n) {
    if (n < 1) throw std::invalid_argument("melon: n must be at least 1");
    MelonLabels l;
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(4 * n);
    for (int i = 0; i < n; ++i) {
        const Vertex u = 2 + 3 * i, v = u + 1, w = u + 2;
        l.paths.push_back({u, v, w});
        edges.emplace_back(l.a, u);
        edges.emplace_back(u, v);
        edges.emplace_back(v, w);
        edges.emplace_back(l.b, w);
    }
    return {Graph(3 * n + 2, edges), std::move(l)};
}

std::pair<Graph, std::map<Vertex, Vertex>> add_pendants(
    const Graph& g, const VertexSet& targets) {
    const int n = g.vertex_count();
    for (Vertex t : targets)
        if (t < 0 || t >= n)
            throw std::invalid_argument("add_pendants: target out of range");
    std::vector<std::pair<Vertex, Vertex>> edges = g.edges();
    std::map<Vertex, Vertex> pendant;
    Vertex next = n;
    for (Vertex t : targets) {
        pendant[t] = next;
        edges.emplace_back(t, next);
        ++next;
    }
    return {Graph(next, edges), std::move(pendant)};
}

PendantMelon melon_with_pendants(int n) {
    auto [g, labels] = melon(n);
    std::vector<Vertex> all(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) all[v] = v;
    auto [pg, pendants] = add_pendants(g, VertexSet(std::move(all)));
    return PendantMelon{std::move(pg), std::move(labels), std::move(pendants)};
}

std::string GadgetLabels::role_name(Vertex id) const {
    const RoleRef& r = role_of.at(static_cast<std::size_t>(id));
    switch (r.role) {
        case Role::a: return "a";
        case Role::b: return "b";
        case Role::u: return "u." + std::to_string(r.i) + "." + std::to_string(r.j);
        case Role::v: return "v." + std::to_string(r.i) + "." + std::to_string(r.j);
        case Role::w: return "w." + std::to_string(r.i) + "." + std::to_string(r.j);
        case Role::c: return "c." + std::to_string(r.j);
        case Role::y: return "y." + std::to_string(r.j);
        case Role::z: return "z.of." + role_name(r.host);
    }
    return "?";
}

VertexSet GadgetLabels::cuw_candidates() const {
    std::vector<Vertex> ids;
    for (const ClauseBlock& cb : clauses) {
        for (int i = 0; i < 3; ++i) {
            ids.push_back(cb.u[i]);
            ids.push_back(cb.w[i]);
        }
        ids.push_back(cb.c);
    }
    return VertexSet(std::move(ids));
}

std::pair<Graph, GadgetLabels> sat_to_graph(const Cnf3& f) {
    if (!is_normalized(f))
        throw std::invalid_argument(
            "sat_to_graph requires a normalized formula (three distinct "
            "variables per clause, at least two clauses, every variable "
            "used)");

    const int m = f.clause_count();
    GadgetLabels labels;
    labels.var_count = f.num_vars;

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int j = 0; j < m; ++j) {
        GadgetLabels::ClauseBlock cb;
        const Vertex base = 2 + 10 * j;
        cb.c = base + 9;
        for (int i = 0; i < 3; ++i) {
            cb.u[i] = base + 3 * i;
            cb.v[i] = base + 3 * i + 1;
            cb.w[i] = base + 3 * i + 2;
            cb.var[i] = f.clauses[j][i].var;
            cb.negated[i] = f.clauses[j][i].negated;
            edges.emplace_back(cb.u[i], cb.v[i]);
            edges.emplace_back(cb.v[i], cb.w[i]);
            edges.emplace_back(labels.a, cb.u[i]);
            edges.emplace_back(labels.b, cb.w[i]);
            edges.emplace_back(cb.c, cb.negated[i] ? cb.u[i] : cb.w[i]);
        }
        labels.clauses.push_back(cb);
    }

    // Conflicting pairs (u_i^j, w_i'^j') over a shared variable, j != j',
    // in lexicographic (j, i, j', i') order; one connector each.
    Vertex next = 2 + 10 * m;
    for (int j = 0; j < m; ++j)
        for (int i = 0; i < 3; ++i)
            for (int j2 = 0; j2 < m; ++j2) {
                if (j2 == j) continue;
                for (int i2 = 0; i2 < 3; ++i2) {
                    if (labels.clauses[j].var[i] != labels.clauses[j2].var[i2])
                        continue;
                    GadgetLabels::Connector conn;
                    conn.y = next++;
                    conn.u = labels.clauses[j].u[i];
                    conn.w = labels.clauses[j2].w[i2];
                    conn.var = labels.clauses[j].var[i];
                    edges.emplace_back(conn.y, conn.u);
                    edges.emplace_back(conn.y, conn.w);
                    labels.connectors.push_back(conn);
                }
            }

    std::vector<Vertex> hosts{labels.a, labels.b};
    for (const auto& cb : labels.clauses)
        for (int i = 0; i < 3; ++i) hosts.push_back(cb.v[i]);
    for (const auto& conn : labels.connectors) hosts.push_back(conn.y);
    std::sort(hosts.begin(), hosts.end());
    for (Vertex host : hosts) {
        labels.pendants.emplace_back(host, next);
        edges.emplace_back(host, next);
        ++next;
    }

    labels.role_of.resize(next);
    labels.role_of[labels.a] = {GadgetLabels::Role::a, 0, 0, -1};
    labels.role_of[labels.b] = {GadgetLabels::Role::b, 0, 0, -1};
    for (int j = 0; j < m; ++j) {
        const auto& cb = labels.clauses[j];
        for (int i = 0; i < 3; ++i) {
            labels.role_of[cb.u[i]] = {GadgetLabels::Role::u, i + 1, j + 1, -1};
            labels.role_of[cb.v[i]] = {GadgetLabels::Role::v, i + 1, j + 1, -1};
            labels.role_of[cb.w[i]] = {GadgetLabels::Role::w, i + 1, j + 1, -1};
        }
        labels.role_of[cb.c] = {GadgetLabels::Role::c, 0, j + 1, -1};
    }
    for (std::size_t k = 0; k < labels.connectors.size(); ++k)
        labels.role_of[labels.connectors[k].y] = {GadgetLabels::Role::y, 0,
                                                  static_cast<int>(k + 1), -1};
    for (const auto& [host, z] : labels.pendants)
        labels.role_of[z] = {GadgetLabels::Role::z, 0, 0, host};

    return {Graph(next, edges), std::move(labels)};
}

VertexSet assignment_to_separator(const Cnf3& f, const GadgetLabels& labels,
                                  const Assignment& assignment) {
    if (assignment.num_vars() != labels.var_count)
        throw std::invalid_argument(
            "assignment_to_separator: assignment arity mismatch");
    if (!satisfies(f, assignment))
        throw std::invalid_argument(
            "assignment_to_separator: assignment does not satisfy the "
            "formula");

    std::vector<Vertex> ids;
    for (int j = 0; j < labels.clause_count(); ++j) {
        const auto& cb = labels.clauses[j];
        for (int i = 0; i < 3; ++i)
            ids.push_back(assignment.value(cb.var[i]) ? cb.u[i] : cb.w[i]);
        if (is_traversable(f.clauses[j], assignment)) ids.push_back(cb.c);
    }
    return VertexSet(std::move(ids));
}

Assignment separator_to_assignment(const Graph& g, const GadgetLabels& labels,
                                   const VertexSet& separator) {
    if (separator.size() < 4)
        throw std::invalid_argument(
            "separator_to_assignment requires a set of size at least 4");

    // Classify before the (more expensive) minimality check so that
    // contradiction alarms fire on hand-built invalid sets too.
    enum : unsigned { kNone = 0, kTrue = 1, kFalse = 2 };
    std::vector<unsigned> evidence(labels.var_count + 1, kNone);
    for (Vertex v : separator) {
        const auto& r = labels.role_of.at(static_cast<std::size_t>(v));
        int var = 0;
        unsigned mark = kNone;
        switch (r.role) {
            case GadgetLabels::Role::u:
                var = labels.clauses[r.j - 1].var[r.i - 1];
                mark = kTrue;
                break;
            case GadgetLabels::Role::w:
                var = labels.clauses[r.j - 1].var[r.i - 1];
                mark = kFalse;
                break;
            case GadgetLabels::Role::c:
                continue;
            default:
                throw contradiction_error(
                    "separator_to_assignment: vertex " +
                    labels.role_name(v) +
                    " lies outside the c/u/w candidate set");
        }
        if (evidence[var] & (mark ^ (kTrue | kFalse)))
            throw contradiction_error(
                "separator_to_assignment: conflicting evidence for variable " +
                std::to_string(var));
        evidence[var] |= mark;
    }

    if (!is_inclusion_wise_minimal_separator(g, separator))
        throw std::invalid_argument(
            "separator_to_assignment requires an inclusion-wise minimal "
            "separator");

    std::vector<bool> values(labels.var_count);
    for (int var = 1; var <= labels.var_count; ++var)
        values[var - 1] = (evidence[var] & kTrue) != 0;
    return Assignment(std::move(values));
}

namespace {

nlohmann::json graph_roles_header(const std::string& kind) {
    nlohmann::json j;
    j["kind"] = kind;
    j["roles"] = nlohmann::json::object();
    return j;
}

} // namespace

std::string labels_to_json(const BannerLabels& labels) {
    nlohmann::json j = graph_roles_header("banner");
    auto& r = j["roles"];
    r["a"] = labels.a;
    r["b"] = labels.b;
    r["c"] = labels.c;
    r["d"] = labels.d;
    r["e"] = labels.e;
    return j.dump(2);
}

std::string labels_to_json(const MelonLabels& labels) {
    nlohmann::json j = graph_roles_header("melon");
    auto& r = j["roles"];
    r["a"] = labels.a;
    r["b"] = labels.b;
    for (std::size_t i = 0; i < labels.paths.size(); ++i) {
        const std::string suffix = "." + std::to_string(i + 1);
        r["u" + suffix] = labels.paths[i][0];
        r["v" + suffix] = labels.paths[i][1];
        r["w" + suffix] = labels.paths[i][2];
    }
    return j.dump(2);
}

std::string labels_to_json(const MelonLabels& labels,
                           const std::map<Vertex, Vertex>& pendants) {
    nlohmann::json j = nlohmann::json::parse(labels_to_json(labels));
    j["kind"] = "melon-pendants";
    std::map<Vertex, std::string> name_of;
    for (auto& [role, id] : j["roles"].items())
        name_of[id.get<Vertex>()] = role;
    for (const auto& [host, z] : pendants)
        j["roles"]["z.of." + name_of[host]] = z;
    return j.dump(2);
}

std::string labels_to_json(const GadgetLabels& labels) {
    nlohmann::json j = graph_roles_header("sat-gadget");
    j["clause_count"] = labels.clause_count();
    j["var_count"] = labels.var_count;
    auto& r = j["roles"];
    const int total = static_cast<int>(labels.role_of.size());
    for (Vertex v = 0; v < total; ++v) r[labels.role_name(v)] = v;
    auto& conns = j["connectors"] = nlohmann::json::array();
    for (const auto& c : labels.connectors)
        conns.push_back({{"y", c.y}, {"u", c.u}, {"w", c.w}, {"var", c.var}});
    return j.dump(2);
}

} // namespace sepkit
