#pragma once

#include <compare>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace rcb {

/// Weakly decreasing list of positive parts. Ordered by number of parts,
/// then lexicographically on the parts.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    bool empty() const { return parts_.empty(); }
    int row_length(int row) const { return parts_.at(static_cast<std::size_t>(row - 1)); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

/// All partitions of n, largest first in lexicographic order.
std::vector<Partition> enumerate_partitions(int n);

/// An m-tuple of partitions (lambda^0, ..., lambda^{m-1}).
class Multipartition {
public:
    Multipartition() = default;
    explicit Multipartition(std::vector<Partition> components);
    static Multipartition empty(int m) { return Multipartition(std::vector<Partition>(static_cast<std::size_t>(m))); }

    int m() const { return static_cast<int>(components_.size()); }
    int size() const;
    const std::vector<Partition>& components() const { return components_; }
    const Partition& component(int i) const { return components_.at(static_cast<std::size_t>(i)); }
    std::vector<int> size_vector() const;

    friend bool operator==(const Multipartition&, const Multipartition&) = default;
    friend std::strong_ordering operator<=>(const Multipartition& a, const Multipartition& b);

    /// "((3,3),(2,1,1))", with "()" for empty components.
    std::string to_string() const;
    nlohmann::json to_json() const;

private:
    std::vector<Partition> components_;
};

/// A box of a multipartition: component beta, 1-based row and column.
struct Box {
    int component = 0;
    int row = 1;
    int col = 1;
    friend bool operator==(const Box&, const Box&) = default;
    friend auto operator<=>(const Box&, const Box&) = default;
};

/// col - row.
inline int content(const Box& b) { return b.col - b.row; }

/// Boxes ordered by component, then row, then column.
std::vector<Box> boxes(const Multipartition& lambda);

/// Exponent -> multiplicity map of Res_lambda(x) = sum_b x^{ct(b)}.
using ResiduePoly = std::map<int, int>;
ResiduePoly residue(const Partition& lambda);

/// Multipartitions of n with m components. Size vectors are visited in
/// decreasing lexicographic order and each component's partitions largest first.
std::vector<Multipartition> enumerate_multipartitions(int m, int n);

/// A standard tableau: placement[i-1] is the box holding entry i.
struct StandardTableau {
    Multipartition shape;
    std::vector<Box> placement;

    int size() const { return static_cast<int>(placement.size()); }
    /// Row/column increase within every component and bijectivity onto boxes.
    bool is_valid() const;
    nlohmann::json to_json() const;
};

/// All standard tableaux on lambda, ordered by the (component, row) sequence
/// of the boxes holding n, n-1, ..., 1.
std::vector<StandardTableau> enumerate_standard_tableaux(const Multipartition& lambda);

struct BoxData {
    int content;
    int component;
    friend bool operator==(const BoxData&, const BoxData&) = default;
};

BoxData tableau_box_data(const StandardTableau& t, int entry);

// --- C_d rotation ---------------------------------------------------------

/// Thrown when d does not divide m.
class NotADivisor : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// delta . (l^0, ..., l^{m-1}) = (l^{m-p}, ..., l^{m-1}, l^0, ..., l^{m-p-1}), p = m/d.
Multipartition delta_action(const Multipartition& lambda, int d);

struct Orbit {
    std::vector<Multipartition> members;  // sorted ascending
    int stabilizer_order = 1;
    const Multipartition& representative() const { return members.front(); }
};

Orbit orbit_and_stabilizer(const Multipartition& lambda, int d);

bool is_d_stuttering(const Multipartition& lambda, int d);

/// Irreducible G(m,d,n)-module label ({lambda}, epsilon).
struct OrbitLabel {
    Multipartition representative;
    int epsilon = 0;
    friend bool operator==(const OrbitLabel&, const OrbitLabel&) = default;
    friend auto operator<=>(const OrbitLabel&, const OrbitLabel&) = default;
};

// --- literals -------------------------------------------------------------

/// Thrown for malformed multipartition literals.
class MultipartitionParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Parses a JSON array of arrays such as "[[3,3],[2,1,1]]". When m > 0 the
/// component count must equal m.
Multipartition parse_multipartition(std::string_view text, int m = 0);
Multipartition multipartition_from_json(const nlohmann::json& j, int m = 0);

}  // namespace rcb
