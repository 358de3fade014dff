#include "dcatforge/rdf/isomorphism.hpp"

#include "dcatforge/util/ids.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace dcatforge::rdf {

namespace {

using HashMap = std::map<std::string, std::uint64_t>;

std::string encode_term(const Term& t, const HashMap& hashes) {
    if (t.is_blank()) {
        const auto it = hashes.find(t.value());
        return "~" + util::hex64(it == hashes.end() ? 0 : it->second);
    }
    return to_string(t);
}

// One refinement round: each blank node's hash becomes a digest of its
// incident triples, with neighbouring blanks represented by their previous
// hash.
HashMap refine(const Graph& g, const HashMap& previous) {
    std::map<std::string, std::vector<std::string>> tokens;
    for (const auto& label : previous) tokens[label.first];
    for (const auto& t : g.triples()) {
        if (t.subject.is_blank()) {
            tokens[t.subject.value()].push_back("S|" + t.predicate.value() + "|" +
                                                encode_term(t.object, previous));
        }
        if (t.object.is_blank()) {
            tokens[t.object.value()].push_back("O|" + t.predicate.value() + "|" +
                                               encode_term(t.subject, previous));
        }
    }
    HashMap next;
    for (auto& [label, list] : tokens) {
        std::sort(list.begin(), list.end());
        std::uint64_t h = previous.at(label);
        for (const auto& token : list) h = util::fnv1a64(token, h * 1099511628211ULL + 1);
        next[label] = h;
    }
    return next;
}

HashMap stable_hashes(const Graph& g) {
    HashMap hashes;
    for (const auto& label : g.blank_labels()) hashes[label] = 1;
    const std::size_t rounds = std::max<std::size_t>(hashes.size(), 1);
    for (std::size_t i = 0; i < rounds; ++i) {
        HashMap next = refine(g, hashes);
        if (next == hashes) break;
        hashes = std::move(next);
    }
    return hashes;
}

void check_blank_bound(const Graph& g, const char* which) {
    const std::size_t count = g.blank_labels().size();
    if (count > kMaxBlankNodes) {
        throw ComplexityLimit(std::string("graph ") + which + " has " + std::to_string(count) +
                              " blank nodes; the isomorphism search is bounded at " +
                              std::to_string(kMaxBlankNodes));
    }
}

Term map_term(const Term& t, const std::map<std::string, std::string>& mapping) {
    if (!t.is_blank()) return t;
    return Term::blank(mapping.at(t.value()));
}

// Checks every a-triple whose blanks are all assigned; unassigned blanks make
// a triple unverifiable for now.
bool partial_consistent(const Graph& a, const Graph& b,
                        const std::map<std::string, std::string>& mapping) {
    for (const auto& t : a.triples()) {
        if (t.subject.is_blank() && !mapping.contains(t.subject.value())) continue;
        if (t.object.is_blank() && !mapping.contains(t.object.value())) continue;
        if (!b.contains(Triple{map_term(t.subject, mapping), t.predicate,
                               map_term(t.object, mapping)}))
            return false;
    }
    return true;
}

bool search(const Graph& a, const Graph& b, const std::vector<std::string>& order,
            const std::map<std::string, std::vector<std::string>>& candidates, std::size_t depth,
            std::map<std::string, std::string>& mapping, std::set<std::string>& used) {
    if (depth == order.size()) return partial_consistent(a, b, mapping);
    const std::string& blank = order[depth];
    for (const auto& candidate : candidates.at(blank)) {
        if (used.contains(candidate)) continue;
        mapping[blank] = candidate;
        used.insert(candidate);
        if (partial_consistent(a, b, mapping) &&
            search(a, b, order, candidates, depth + 1, mapping, used))
            return true;
        mapping.erase(blank);
        used.erase(candidate);
    }
    return false;
}

} // namespace

bool graph_isomorphic(const Graph& a, const Graph& b) {
    check_blank_bound(a, "a");
    check_blank_bound(b, "b");
    if (a.size() != b.size()) return false;

    Graph ground_a, ground_b;
    for (const auto& t : a.triples()) {
        if (!t.subject.is_blank() && !t.object.is_blank()) ground_a.add(t);
    }
    for (const auto& t : b.triples()) {
        if (!t.subject.is_blank() && !t.object.is_blank()) ground_b.add(t);
    }
    if (!(ground_a == ground_b)) return false;

    const HashMap ha = stable_hashes(a);
    const HashMap hb = stable_hashes(b);
    if (ha.size() != hb.size()) return false;
    if (ha.empty()) return true; // fully ground graphs already matched

    // Hash classes must agree in size before any search is worth running.
    std::map<std::uint64_t, std::vector<std::string>> classes_b;
    for (const auto& [label, h] : hb) classes_b[h].push_back(label);
    std::map<std::uint64_t, std::size_t> sizes_a;
    for (const auto& [label, h] : ha) ++sizes_a[h];
    for (const auto& [h, n] : sizes_a) {
        const auto it = classes_b.find(h);
        if (it == classes_b.end() || it->second.size() != n) return false;
    }

    std::map<std::string, std::vector<std::string>> candidates;
    std::vector<std::string> order;
    for (const auto& [label, h] : ha) {
        candidates[label] = classes_b.at(h);
        order.push_back(label);
    }
    // Most-constrained blanks first keeps the search shallow.
    std::sort(order.begin(), order.end(), [&](const std::string& x, const std::string& y) {
        const auto sx = candidates.at(x).size(), sy = candidates.at(y).size();
        return sx != sy ? sx < sy : x < y;
    });

    std::map<std::string, std::string> mapping;
    std::set<std::string> used;
    return search(a, b, order, candidates, 0, mapping, used);
}

std::map<std::string, std::size_t> canonical_blank_ranks(const Graph& g) {
    const HashMap hashes = stable_hashes(g);
    std::vector<std::pair<std::uint64_t, std::string>> ordered;
    ordered.reserve(hashes.size());
    for (const auto& [label, h] : hashes) ordered.emplace_back(h, label);
    std::sort(ordered.begin(), ordered.end());
    std::map<std::string, std::size_t> ranks;
    for (std::size_t i = 0; i < ordered.size(); ++i) ranks[ordered[i].second] = i;
    return ranks;
}

} // namespace dcatforge::rdf
