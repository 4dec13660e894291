#include "conncut/setpair.hpp"

#include <algorithm>
#include <cassert>

#include "conncut/error.hpp"

namespace conncut {

static std::vector<int> normalized(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

SetPair::SetPair(std::vector<int> f, std::vector<int> s, int g)
    : first(normalized(std::move(f))), second(normalized(std::move(s))), ground(g) {
    if (!sets_disjoint(first, second))
        throw ContractViolation("set-pair components are not disjoint");
    if ((!first.empty() && (first.front() < 0 || first.back() >= g)) ||
        (!second.empty() && (second.front() < 0 || second.back() >= g)))
        throw ContractViolation("set-pair element outside ground set");
}

bool SetPair::contains_first(int x) const {
    return std::binary_search(first.begin(), first.end(), x);
}

bool SetPair::contains_second(int x) const {
    return std::binary_search(second.begin(), second.end(), x);
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r;
    r.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

std::vector<int> set_intersect(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool sets_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() && j != b.end()) {
        if (*i == *j) return false;
        if (*i < *j)
            ++i;
        else
            ++j;
    }
    return true;
}

SetPair meet(const SetPair& a, const SetPair& b) {
    assert(a.ground == b.ground);
    return SetPair(set_union(a.first, b.first), set_intersect(a.second, b.second), a.ground);
}

SetPair join(const SetPair& a, const SetPair& b) {
    assert(a.ground == b.ground);
    return SetPair(set_intersect(a.first, b.first), set_union(a.second, b.second), a.ground);
}

SetPair transpose(const SetPair& a) { return SetPair(a.second, a.first, a.ground); }

bool leq(const SetPair& a, const SetPair& b) {
    return subset_of(a.first, b.first) && subset_of(b.second, a.second);
}

bool cuts(const SetPair& cut, const SetPair& terminals) {
    return subset_of(terminals.first, cut.first) && subset_of(terminals.second, cut.second);
}

int cmp_lex(const std::vector<int>& a, const std::vector<int>& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

}  // namespace conncut
