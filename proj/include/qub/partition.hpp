#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qub/rational.hpp"

namespace qub {

// Integer partition: weakly decreasing positive parts, empty = the zero partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<long> parts);

    const std::vector<long>& parts() const { return parts_; }
    long size() const;           // |lambda|
    int length() const { return int(parts_.size()); }
    long part(int u) const { return u < length() ? parts_[u] : 0; }  // 0-based, 0 beyond length
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;
    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    std::string str() const;

private:
    std::vector<long> parts_;
};

// Box (row, col) of component `comp`, all 1-based.
struct Node {
    int row = 1;
    int col = 1;
    int comp = 1;
    bool operator==(const Node&) const = default;
    auto operator<=>(const Node&) const = default;
};

// A partition with an integer charge; stands for the infinite beta-set
// { lambda_u + s + 1 - u : u >= 1 }.
struct ChargedBetaSet {
    Partition partition;
    long charge = 0;

    bool operator==(const ChargedBetaSet&) const = default;
    auto operator<=>(const ChargedBetaSet&) const = default;

    // First `count` entries, strictly decreasing.
    std::vector<long> entries(int count) const;
    bool contains(long v) const;
    // Every value <= tail_top() lies in the set.
    long tail_top() const { return charge - partition.length(); }
};

struct ChargedMultiPartition {
    std::vector<Partition> components;
    std::vector<long> charges;

    int levels() const { return int(components.size()); }
    long size() const;
    bool operator==(const ChargedMultiPartition&) const = default;
};

std::vector<long> beta_set(const Partition& lambda, long s, int count);

// Inverse of beta_set. `head` lists the strictly decreasing known entries,
// implicitly followed by head.back()-1, head.back()-2, ...
// Throws std::invalid_argument on malformed input.
ChargedBetaSet partition_from_beta(const std::vector<long>& head);

// Same, from an unordered window of entries plus a floor: every value
// <= tail_top is in the set, entries at or below it are redundant.
ChargedBetaSet beta_from_entries(std::vector<long> entries, long tail_top);

// Builds (lambda, s) back from per-component charged beta-sets under
// beta_s(lambda) = union_p (p - l + l*beta_{s_p}(lambda^p)).
ChargedBetaSet beta_from_quotient(const ChargedMultiPartition& quotient);

struct CoreQuotient {
    Partition core;
    ChargedMultiPartition quotient;
    long weight = 0;  // |quotient|
};

CoreQuotient e_core_and_quotient(const Partition& lambda, long s, int e);

// Shifted content s_p + col - row of a node.
long content_of(const Node& node, const std::vector<long>& charges);

// Addable/removable boxes of a multipartition whose shifted content is `c` mod e
// (e == 0 means no reduction). Components are 1-based in the returned nodes.
struct AddRemove {
    std::vector<Node> addable;
    std::vector<Node> removable;
};
AddRemove addable_removable_nodes(const std::vector<Partition>& comps,
                                  const std::vector<long>& charges, long c, long e);

// Number of standard Young tableaux, by the hook length formula.
Int syt_count(const Partition& lambda);

std::vector<Partition> partitions_of(long n);
std::vector<std::vector<Partition>> multipartitions_of(long n, int l);

Partition partition_from_string(const std::string& csv);  // "3,1" -> (3,1)

}  // namespace qub
