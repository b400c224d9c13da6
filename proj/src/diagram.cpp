#include "nilflat/diagram.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "nilflat/error.hpp"

namespace nilflat {

namespace {

std::string arrow_str(const Arrow& a) {
    std::ostringstream os;
    os << a.source << " -[" << a.label << "]-> " << a.target;
    return os.str();
}

} // namespace

NiceDiagram::NiceDiagram(int nodes, std::vector<Arrow> arrows, bool complete_symmetric)
    : nodes_(nodes), arrows_(std::move(arrows)) {
    if (nodes < 0)
        throw domain_error("negative node count");
    for (const Arrow& a : arrows_)
        if (a.source < 1 || a.source > nodes || a.label < 1 || a.label > nodes ||
            a.target < 1 || a.target > nodes)
            throw domain_error("arrow index out of range: " + arrow_str(a));
    if (complete_symmetric) {
        size_t given = arrows_.size();
        for (size_t idx = 0; idx < given; ++idx) {
            Arrow a = arrows_[idx];
            arrows_.push_back({a.label, a.source, a.target});
        }
    }
    std::sort(arrows_.begin(), arrows_.end());
    arrows_.erase(std::unique(arrows_.begin(), arrows_.end()), arrows_.end());
}

bool NiceDiagram::has_arrow(int source, int label, int target) const {
    return std::binary_search(arrows_.begin(), arrows_.end(), Arrow{source, label, target});
}

bool NiceDiagram::has_source_label(int source, int label) const {
    auto it = std::lower_bound(arrows_.begin(), arrows_.end(), Arrow{source, label, 0});
    return it != arrows_.end() && it->source == source && it->label == label;
}

bool NiceDiagram::has_label_target(int label, int target) const {
    for (const Arrow& a : arrows_)
        if (a.label == label && a.target == target)
            return true;
    return false;
}

bool NiceDiagram::has_source_target(int source, int target) const {
    for (const Arrow& a : arrows_)
        if (a.source == source && a.target == target)
            return true;
    return false;
}

int NiceDiagram::bracket_target(int i, int j) const {
    auto it = std::lower_bound(arrows_.begin(), arrows_.end(), Arrow{i, j, 0});
    if (it != arrows_.end() && it->source == i && it->label == j)
        return it->target;
    return 0;
}

std::vector<ConditionReport> NiceDiagram::validate() const {
    std::vector<ConditionReport> report;

    // acyclicity of the source -> target graph
    {
        ConditionReport r{"acyclic", true, ""};
        std::vector<int> state(nodes_ + 1, 0); // 0 unvisited, 1 on stack, 2 done
        std::vector<int> stack, path;
        for (int start = 1; start <= nodes_ && r.pass; ++start) {
            if (state[start] != 0)
                continue;
            // iterative DFS carrying the current path
            std::vector<std::pair<int, size_t>> frames{{start, 0}};
            path.assign(1, start);
            state[start] = 1;
            while (!frames.empty() && r.pass) {
                auto& [v, next] = frames.back();
                bool advanced = false;
                for (size_t idx = next; idx < arrows_.size(); ++idx) {
                    const Arrow& a = arrows_[idx];
                    if (a.source != v)
                        continue;
                    next = idx + 1;
                    if (state[a.target] == 1) {
                        std::ostringstream os;
                        os << "cycle through node " << a.target << ": ";
                        auto at = std::find(path.begin(), path.end(), a.target);
                        for (auto it = at; it != path.end(); ++it)
                            os << *it << " -> ";
                        os << a.target;
                        r = {"acyclic", false, os.str()};
                        break;
                    }
                    if (state[a.target] == 0) {
                        state[a.target] = 1;
                        path.push_back(a.target);
                        frames.push_back({a.target, 0});
                        advanced = true;
                        break;
                    }
                }
                if (!advanced && r.pass) {
                    state[v] = 2;
                    path.pop_back();
                    frames.pop_back();
                }
            }
        }
        report.push_back(std::move(r));
    }

    // no two arrows share source and target
    {
        ConditionReport r{"no-multi-arrow", true, ""};
        for (size_t i = 0; i < arrows_.size() && r.pass; ++i)
            for (size_t j = i + 1; j < arrows_.size(); ++j) {
                if (arrows_[i].source == arrows_[j].source &&
                    arrows_[i].target == arrows_[j].target) {
                    r = {"no-multi-arrow", false,
                         arrow_str(arrows_[i]) + " and " + arrow_str(arrows_[j])};
                    break;
                }
            }
        report.push_back(std::move(r));
    }

    // N1: distinct arrows with equal source have distinct labels
    {
        ConditionReport r{"N1", true, ""};
        for (size_t i = 0; i < arrows_.size() && r.pass; ++i)
            for (size_t j = i + 1; j < arrows_.size(); ++j) {
                if (arrows_[i].source == arrows_[j].source &&
                    arrows_[i].label == arrows_[j].label) {
                    r = {"N1", false, arrow_str(arrows_[i]) + " and " + arrow_str(arrows_[j])};
                    break;
                }
            }
        report.push_back(std::move(r));
    }

    // N2: distinct arrows with equal target have distinct labels
    {
        ConditionReport r{"N2", true, ""};
        for (size_t i = 0; i < arrows_.size() && r.pass; ++i)
            for (size_t j = i + 1; j < arrows_.size(); ++j) {
                if (arrows_[i].target == arrows_[j].target &&
                    arrows_[i].label == arrows_[j].label) {
                    r = {"N2", false, arrow_str(arrows_[i]) + " and " + arrow_str(arrows_[j])};
                    break;
                }
            }
        report.push_back(std::move(r));
    }

    // N3: source differs from label and the mirrored arrow is present
    {
        ConditionReport r{"N3", true, ""};
        for (const Arrow& a : arrows_) {
            if (a.source == a.label) {
                r = {"N3", false, arrow_str(a) + ": source equals label"};
                break;
            }
            if (!has_arrow(a.label, a.source, a.target)) {
                r = {"N3", false, arrow_str(a) + ": missing mirror arrow"};
                break;
            }
        }
        report.push_back(std::move(r));
    }

    // N4: for distinct nodes x,y,z and a fourth node w, the number of
    // composite paths among x -[y,z]-> w, y -[z,x]-> w, z -[x,y]-> w must not
    // be exactly one. A composite a -[b,c]-> w holds when some u has arrows
    // b -[c]-> u (or c -[b]-> u) and a -[u]-> w.
    {
        ConditionReport r{"N4", true, ""};
        auto composite = [&](int a, int b, int c, int w) {
            for (const Arrow& ar : arrows_) {
                bool bracket_bc = (ar.source == b && ar.label == c) ||
                                  (ar.source == c && ar.label == b);
                if (bracket_bc && has_arrow(a, ar.target, w))
                    return true;
            }
            return false;
        };
        for (int x = 1; x <= nodes_ && r.pass; ++x)
            for (int y = x + 1; y <= nodes_ && r.pass; ++y)
                for (int z = y + 1; z <= nodes_ && r.pass; ++z)
                    for (int w = 1; w <= nodes_; ++w) {
                        if (w == x || w == y || w == z)
                            continue;
                        int count = composite(x, y, z, w) + composite(y, z, x, w) +
                                    composite(z, x, y, w);
                        if (count == 1) {
                            std::ostringstream os;
                            os << "nodes x=" << x << " y=" << y << " z=" << z << " w=" << w
                               << ": exactly one composite path";
                            r = {"N4", false, os.str()};
                            break;
                        }
                    }
        report.push_back(std::move(r));
    }

    return report;
}

bool NiceDiagram::is_nice() const {
    for (const auto& r : validate())
        if (!r.pass)
            return false;
    return true;
}

void NiceDiagram::require_nice() const {
    for (const auto& r : validate())
        if (!r.pass)
            throw domain_error("diagram fails " + r.condition + ": " + r.witness);
}

QMatrix NiceDiagram::root_matrix() const {
    require_nice();
    std::vector<const Arrow*> pairs;
    for (const Arrow& a : arrows_)
        if (a.source < a.label)
            pairs.push_back(&a);
    QMatrix m(int(pairs.size()), nodes_);
    for (size_t r = 0; r < pairs.size(); ++r) {
        m.at(int(r), pairs[r]->source - 1) -= 1;
        m.at(int(r), pairs[r]->label - 1) -= 1;
        m.at(int(r), pairs[r]->target - 1) += 1;
    }
    return m;
}

std::string NiceDiagram::str() const {
    std::ostringstream os;
    os << "nodes: " << nodes_ << "\n";
    for (const Arrow& a : arrows_)
        os << arrow_str(a) << "\n";
    return os.str();
}

FactorSet pq_factors(const NiceDiagram& d) {
    d.require_nice();
    FactorSet f;
    for (const Arrow& a : d.arrows()) {
        if (a.source < a.label)
            f.p_factors.push_back({a.source, a.label});
        f.q_factors.push_back({a.source, a.target});
    }
    std::sort(f.p_factors.begin(), f.p_factors.end());
    std::sort(f.q_factors.begin(), f.q_factors.end());
    return f;
}

std::optional<std::vector<int>> diagram_leq(const NiceDiagram& a, const NiceDiagram& b) {
    if (a.nodes() != b.nodes())
        throw domain_error("diagram_leq requires equal node counts");
    const int n = a.nodes();
    if (n > 10)
        throw domain_error("diagram_leq limited to 10 nodes");

    // degree compatibility: v can only map to w with componentwise larger degrees
    auto degrees = [n](const NiceDiagram& d) {
        std::vector<std::array<int, 3>> deg(n + 1, {0, 0, 0});
        for (const Arrow& ar : d.arrows()) {
            deg[ar.source][0]++;
            deg[ar.label][1]++;
            deg[ar.target][2]++;
        }
        return deg;
    };
    auto da = degrees(a), db = degrees(b);

    std::vector<int> phi(n + 1, 0);
    std::vector<bool> used(n + 1, false);

    // arrows of a grouped by their largest endpoint, so each is checked as
    // soon as it is fully mapped
    std::vector<std::vector<Arrow>> by_max(n + 1);
    for (const Arrow& ar : a.arrows())
        by_max[std::max({ar.source, ar.label, ar.target})].push_back(ar);

    auto search = [&](auto&& self, int v) -> bool {
        if (v > n)
            return true;
        for (int w = 1; w <= n; ++w) {
            if (used[w])
                continue;
            if (da[v][0] > db[w][0] || da[v][1] > db[w][1] || da[v][2] > db[w][2])
                continue;
            phi[v] = w;
            used[w] = true;
            bool ok = true;
            for (const Arrow& ar : by_max[v])
                if (!b.has_arrow(phi[ar.source], phi[ar.label], phi[ar.target])) {
                    ok = false;
                    break;
                }
            if (ok && self(self, v + 1))
                return true;
            used[w] = false;
            phi[v] = 0;
        }
        return false;
    };
    if (!search(search, 1))
        return std::nullopt;
    return std::vector<int>(phi.begin() + 1, phi.end());
}

std::vector<Arrow> extension_candidates(const NiceDiagram& d) {
    d.require_nice();
    const int n = d.nodes();
    std::vector<Arrow> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = 1; k <= n; ++k) {
                if (k == i || k == j)
                    continue;
                if (d.has_source_label(i, j) || d.has_source_label(j, i))
                    continue;
                std::vector<Arrow> extended = d.arrows();
                extended.push_back({i, j, k});
                extended.push_back({j, i, k});
                if (NiceDiagram(n, std::move(extended), false).is_nice())
                    out.push_back({i, j, k});
            }
    return out;
}

NiceDiagram parse_diagram(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int nodes = -1;
    std::vector<Arrow> arrows;
    int lineno = 0;
    auto fail = [&lineno](const std::string& msg) {
        throw parse_error("diagram line " + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos)
            continue;
        if (nodes < 0) {
            std::istringstream ls(line);
            std::string head;
            ls >> head;
            if (head != "nodes:")
                fail("expected 'nodes: <count>'");
            if (!(ls >> nodes) || nodes < 0)
                fail("bad node count");
            std::string tail;
            if (ls >> tail)
                fail("trailing text '" + tail + "'");
            continue;
        }
        // "i -[j]-> k"
        std::istringstream ls(line);
        int i = 0, j = 0, k = 0;
        std::string mid, tail;
        if (!(ls >> i >> mid >> k) || mid.size() < 6 || mid.substr(0, 2) != "-[" ||
            mid.substr(mid.size() - 3) != "]->")
            fail("expected 'i -[j]-> k'");
        try {
            size_t used = 0;
            j = std::stoi(mid.substr(2, mid.size() - 5), &used);
            if (used != mid.size() - 5)
                fail("bad label");
        } catch (const std::exception&) {
            fail("bad label");
        }
        if (ls >> tail)
            fail("trailing text '" + tail + "'");
        arrows.push_back({i, j, k});
    }
    if (nodes < 0)
        throw parse_error("diagram text missing 'nodes:' header");
    try {
        return NiceDiagram(nodes, std::move(arrows));
    } catch (const domain_error& e) {
        throw parse_error(e.what());
    }
}

} // namespace nilflat
