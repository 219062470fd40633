#include "rcb/combin.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace rcb {

// --- Partition ------------------------------------------------------------

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1) throw std::invalid_argument("partition parts must be positive");
        if (k > 0 && parts_[k] > parts_[k - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0) return c;
    return a.parts_ <=> b.parts_;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(parts_[k]);
    }
    return out + ")";
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        cur.push_back(part);
        partitions_rec(remaining - part, part, cur, out);
        cur.pop_back();
    }
}

void compositions_rec(int remaining, int slots, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (slots == 1) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int first = remaining; first >= 0; --first) {
        cur.push_back(first);
        compositions_rec(remaining - first, slots - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

// --- Multipartition -------------------------------------------------------

Multipartition::Multipartition(std::vector<Partition> components) : components_(std::move(components)) {
    if (components_.empty()) throw std::invalid_argument("a multipartition needs m >= 1 components");
}

int Multipartition::size() const {
    int s = 0;
    for (const auto& p : components_) s += p.size();
    return s;
}

std::vector<int> Multipartition::size_vector() const {
    std::vector<int> v;
    for (const auto& p : components_) v.push_back(p.size());
    return v;
}

std::strong_ordering operator<=>(const Multipartition& a, const Multipartition& b) {
    return std::lexicographical_compare_three_way(a.components_.begin(), a.components_.end(),
                                                  b.components_.begin(), b.components_.end());
}

std::string Multipartition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i) out += ",";
        out += components_[i].to_string();
    }
    return out + ")";
}

nlohmann::json Multipartition::to_json() const {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& p : components_) j.push_back(p.parts());
    return j;
}

std::vector<Box> boxes(const Multipartition& lambda) {
    std::vector<Box> out;
    for (int beta = 0; beta < lambda.m(); ++beta) {
        const auto& parts = lambda.component(beta).parts();
        for (std::size_t r = 0; r < parts.size(); ++r)
            for (int c = 1; c <= parts[r]; ++c) out.push_back({beta, static_cast<int>(r) + 1, c});
    }
    return out;
}

ResiduePoly residue(const Partition& lambda) {
    ResiduePoly res;
    for (int r = 1; r <= lambda.length(); ++r)
        for (int c = 1; c <= lambda.row_length(r); ++c) ++res[c - r];
    return res;
}

std::vector<Multipartition> enumerate_multipartitions(int m, int n) {
    if (m < 1) throw std::invalid_argument("enumerate_multipartitions: m must be >= 1");
    if (n < 0) throw std::invalid_argument("enumerate_multipartitions: n must be >= 0");
    std::vector<std::vector<Partition>> by_size;
    for (int k = 0; k <= n; ++k) by_size.push_back(enumerate_partitions(k));

    std::vector<std::vector<int>> sizes;
    std::vector<int> cur;
    compositions_rec(n, m, cur, sizes);

    std::vector<Multipartition> out;
    for (const auto& sv : sizes) {
        // Mixed-radix walk over the per-component partition lists.
        std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
        while (true) {
            std::vector<Partition> comps;
            comps.reserve(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) comps.push_back(by_size[static_cast<std::size_t>(sv[i])][idx[i]]);
            out.emplace_back(std::move(comps));
            int pos = m - 1;
            while (pos >= 0) {
                auto& list = by_size[static_cast<std::size_t>(sv[pos])];
                if (++idx[static_cast<std::size_t>(pos)] < list.size()) break;
                idx[static_cast<std::size_t>(pos)] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    return out;
}

// --- tableaux -------------------------------------------------------------

bool StandardTableau::is_valid() const {
    const int n = shape.size();
    if (size() != n) return false;
    std::set<Box> seen;
    std::map<Box, int> entry_at;
    for (int i = 0; i < n; ++i) {
        const Box& b = placement[static_cast<std::size_t>(i)];
        if (b.component < 0 || b.component >= shape.m()) return false;
        const auto& p = shape.component(b.component);
        if (b.row < 1 || b.row > p.length() || b.col < 1 || b.col > p.row_length(b.row)) return false;
        if (!seen.insert(b).second) return false;
        entry_at[b] = i + 1;
    }
    for (const auto& [b, e] : entry_at) {
        auto right = entry_at.find({b.component, b.row, b.col + 1});
        if (right != entry_at.end() && right->second <= e) return false;
        auto below = entry_at.find({b.component, b.row + 1, b.col});
        if (below != entry_at.end() && below->second <= e) return false;
    }
    return true;
}

nlohmann::json StandardTableau::to_json() const {
    // Same nesting as the shape, with entries in place of row lengths.
    nlohmann::json j = nlohmann::json::array();
    for (int beta = 0; beta < shape.m(); ++beta) {
        const auto& p = shape.component(beta);
        nlohmann::json comp = nlohmann::json::array();
        for (int r = 1; r <= p.length(); ++r) comp.push_back(std::vector<int>(static_cast<std::size_t>(p.row_length(r)), 0));
        j.push_back(comp);
    }
    for (std::size_t i = 0; i < placement.size(); ++i) {
        const Box& b = placement[i];
        j[static_cast<std::size_t>(b.component)][static_cast<std::size_t>(b.row - 1)]
         [static_cast<std::size_t>(b.col - 1)] = static_cast<int>(i) + 1;
    }
    return j;
}

namespace {

void tableaux_rec(std::vector<std::vector<int>>& shape, int n, std::vector<Box>& placement,
                  const Multipartition& full, std::vector<StandardTableau>& out) {
    if (n == 0) {
        // placement was filled from entry n downwards.
        std::vector<Box> forward(placement.rbegin(), placement.rend());
        out.push_back({full, std::move(forward)});
        return;
    }
    for (std::size_t beta = 0; beta < shape.size(); ++beta) {
        auto& rows = shape[beta];
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r] == 0) continue;
            const bool corner = r + 1 == rows.size() || rows[r + 1] < rows[r];
            if (!corner) continue;
            placement.push_back({static_cast<int>(beta), static_cast<int>(r) + 1, rows[r]});
            --rows[r];
            tableaux_rec(shape, n - 1, placement, full, out);
            ++rows[r];
            placement.pop_back();
        }
    }
}

}  // namespace

std::vector<StandardTableau> enumerate_standard_tableaux(const Multipartition& lambda) {
    std::vector<std::vector<int>> shape;
    for (const auto& p : lambda.components()) shape.push_back(p.parts());
    std::vector<StandardTableau> out;
    std::vector<Box> placement;
    tableaux_rec(shape, lambda.size(), placement, lambda, out);
    return out;
}

BoxData tableau_box_data(const StandardTableau& t, int entry) {
    if (entry < 1 || entry > t.size())
        throw std::out_of_range("tableau entry " + std::to_string(entry) + " outside [1, " + std::to_string(t.size()) + "]");
    const Box& b = t.placement[static_cast<std::size_t>(entry - 1)];
    return {content(b), b.component};
}

// --- rotation -------------------------------------------------------------

namespace {

int checked_period(int m, int d) {
    if (d < 1 || m % d != 0)
        throw NotADivisor("d=" + std::to_string(d) + " does not divide m=" + std::to_string(m));
    return m / d;
}

}  // namespace

Multipartition delta_action(const Multipartition& lambda, int d) {
    const int m = lambda.m();
    const int p = checked_period(m, d);
    std::vector<Partition> out(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) out[static_cast<std::size_t>(k)] = lambda.component(((k - p) % m + m) % m);
    return Multipartition(std::move(out));
}

Orbit orbit_and_stabilizer(const Multipartition& lambda, int d) {
    checked_period(lambda.m(), d);
    std::set<Multipartition> members;
    Multipartition cur = lambda;
    for (int k = 0; k < d; ++k) {
        members.insert(cur);
        cur = delta_action(cur, d);
    }
    Orbit o;
    o.members.assign(members.begin(), members.end());
    o.stabilizer_order = d / static_cast<int>(o.members.size());
    return o;
}

bool is_d_stuttering(const Multipartition& lambda, int d) {
    const int p = checked_period(lambda.m(), d);
    for (int block = 1; block < d; ++block)
        for (int k = 0; k < p; ++k)
            if (!(lambda.component(block * p + k) == lambda.component(k))) return false;
    return true;
}

// --- literals -------------------------------------------------------------

Multipartition multipartition_from_json(const nlohmann::json& j, int m) {
    if (!j.is_array() || j.empty())
        throw MultipartitionParseError("multipartition must be a non-empty JSON array of arrays");
    std::vector<Partition> comps;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& c = j[i];
        if (!c.is_array()) throw MultipartitionParseError("component " + std::to_string(i) + " is not an array");
        std::vector<int> parts;
        for (const auto& v : c) {
            if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 1'000'000)
                throw MultipartitionParseError("component " + std::to_string(i) + " has a non-positive or non-integer part");
            parts.push_back(v.get<int>());
        }
        for (std::size_t k = 1; k < parts.size(); ++k) {
            if (parts[k] > parts[k - 1])
                throw MultipartitionParseError("component " + std::to_string(i) +
                                               " is not weakly decreasing: " + c.dump());
        }
        comps.emplace_back(std::move(parts));
    }
    if (m > 0 && static_cast<int>(comps.size()) != m)
        throw MultipartitionParseError("expected " + std::to_string(m) + " components, got " +
                                       std::to_string(comps.size()));
    return Multipartition(std::move(comps));
}

Multipartition parse_multipartition(std::string_view text, int m) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw MultipartitionParseError("malformed multipartition JSON '" + std::string(text) + "': " + e.what());
    }
    return multipartition_from_json(j, m);
}

}  // namespace rcb
