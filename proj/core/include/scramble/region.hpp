#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace scramble {

// A subsystem of the chain: strictly increasing 1-based site indices.
class Region {
  public:
    Region() = default;

    explicit Region(std::vector<int> sites) : sites_(std::move(sites)) {
        for (std::size_t i = 0; i < sites_.size(); ++i) {
            if (sites_[i] < 1)
                throw std::invalid_argument("region sites are 1-based");
            if (i > 0 && sites_[i] <= sites_[i - 1])
                throw std::invalid_argument("region sites must be strictly increasing");
        }
    }

    // Sites 1..len.
    static Region prefix(int len) {
        std::vector<int> s(static_cast<std::size_t>(std::max(len, 0)));
        for (int i = 0; i < len; ++i) s[static_cast<std::size_t>(i)] = i + 1;
        return Region(std::move(s));
    }

    // Sites lo..hi inclusive.
    static Region range(int lo, int hi) {
        if (lo > hi) throw std::invalid_argument("empty region range");
        std::vector<int> s;
        s.reserve(static_cast<std::size_t>(hi - lo + 1));
        for (int i = lo; i <= hi; ++i) s.push_back(i);
        return Region(std::move(s));
    }

    const std::vector<int>& sites() const { return sites_; }
    int size() const { return static_cast<int>(sites_.size()); }
    bool empty() const { return sites_.empty(); }

    bool contains(int site) const {
        return std::binary_search(sites_.begin(), sites_.end(), site);
    }

    bool within(int n_qubits) const {
        return sites_.empty() || sites_.back() <= n_qubits;
    }

    Region complement(int n_qubits) const {
        std::vector<int> s;
        s.reserve(static_cast<std::size_t>(n_qubits) - sites_.size());
        for (int i = 1; i <= n_qubits; ++i)
            if (!contains(i)) s.push_back(i);
        return Region(std::move(s));
    }

    std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < sites_.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(sites_[i]);
        }
        return out + "}";
    }

  private:
    std::vector<int> sites_;
};

} // namespace scramble
