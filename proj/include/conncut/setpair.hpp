#pragma once

#include <vector>

namespace conncut {

/// Ordered pair of disjoint element subsets over a ground set [0, ground).
/// Components are kept sorted and duplicate-free. This is the carrier for
/// every cut family in the toolkit: cut sides, terminal partitions, and
/// the pieces produced by uncrossing.
struct SetPair {
    std::vector<int> first;
    std::vector<int> second;
    int ground = 0;

    SetPair() = default;
    SetPair(std::vector<int> f, std::vector<int> s, int g);

    bool contains_first(int x) const;
    bool contains_second(int x) const;

    friend bool operator==(const SetPair&, const SetPair&) = default;
};

/// (X1 U X2, Y1 n Y2) -- the lattice's least upper bound.
SetPair meet(const SetPair& a, const SetPair& b);

/// (X1 n X2, Y1 U Y2) -- the lattice's greatest lower bound.
SetPair join(const SetPair& a, const SetPair& b);

/// (X, Y) -> (Y, X).
SetPair transpose(const SetPair& a);

/// a precedes b: a.first within b.first and b.second within a.second.
bool leq(const SetPair& a, const SetPair& b);

/// a cuts b in the S-cut sense: b.first within a.first, b.second within a.second.
bool cuts(const SetPair& cut, const SetPair& terminals);

bool subset_of(const std::vector<int>& a, const std::vector<int>& b);
bool sets_disjoint(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_intersect(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b);

/// Three-way lexicographic compare of sorted id vectors.
int cmp_lex(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace conncut
