#pragma once

#include <algorithm>
#include <map>
#include <vector>

namespace modplab {

// Socle-filtration shaped output: layers[0] is the socle. Flattening gives
// the JH multiset.
template <class T>
struct Layered {
    std::vector<std::vector<T>> layers;

    std::vector<T> flatten() const {
        std::vector<T> all;
        for (auto& l : layers) all.insert(all.end(), l.begin(), l.end());
        return all;
    }
    size_t total() const {
        size_t n = 0;
        for (auto& l : layers) n += l.size();
        return n;
    }
    bool multiplicity_free() const {
        auto all = flatten();
        std::sort(all.begin(), all.end());
        return std::adjacent_find(all.begin(), all.end()) == all.end();
    }
};

template <class T>
std::map<T, long> as_multiset(const std::vector<T>& v) {
    std::map<T, long> m;
    for (auto& x : v) ++m[x];
    return m;
}

template <class T>
std::map<T, long> multiset_union(std::map<T, long> a, const std::map<T, long>& b) {
    for (auto& [k, n] : b) a[k] += n;
    return a;
}

}  // namespace modplab
