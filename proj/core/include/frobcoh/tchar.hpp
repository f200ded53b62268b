#pragma once

#include <map>
#include <ostream>
#include <sstream>

#include "frobcoh/weight.hpp"

namespace frobcoh {

/* Formal character of a T-module: weights with positive multiplicities. */
class TChar {
  public:
    using Map = std::map<Weight, long long>;

    TChar() = default;

    void add(const Weight& w, long long mult = 1) {
        if (mult == 0) return;
        auto it = m_.find(w);
        if (it == m_.end()) {
            m_.emplace(w, mult);
        } else {
            it->second += mult;
            if (it->second == 0) m_.erase(it);
        }
    }

    long long mult(const Weight& w) const {
        auto it = m_.find(w);
        return it == m_.end() ? 0 : it->second;
    }

    long long total_dim() const {
        long long s = 0;
        for (const auto& [w, k] : m_) s += k;
        return s;
    }

    bool empty() const { return m_.empty(); }
    std::size_t support_size() const { return m_.size(); }
    const Map& entries() const& { return m_; }
    Map entries() && { return std::move(m_); } // no dangling ref off a temporary

    TChar& operator+=(const TChar& o) {
        for (const auto& [w, k] : o.m_) add(w, k);
        return *this;
    }
    friend TChar operator+(TChar a, const TChar& b) { return a += b; }

    /* multiset difference this - other, clamped below at zero */
    TChar minus_clamped(const TChar& o) const {
        TChar r;
        for (const auto& [w, k] : m_) {
            long long d = k - o.mult(w);
            if (d > 0) r.add(w, d);
        }
        return r;
    }

    /* pointwise product of characters (tensor product of T-modules) */
    TChar tensor(const TChar& o) const {
        TChar r;
        for (const auto& [w1, k1] : m_)
            for (const auto& [w2, k2] : o.m_) r.add(w1 + w2, k1 * k2);
        return r;
    }

    TChar twist(long long q) const { // Frobenius twist: multiply weights by q
        TChar r;
        for (const auto& [w, k] : m_) r.add(q * w, k);
        return r;
    }

    friend bool operator==(const TChar& a, const TChar& b) { return a.m_ == b.m_; }
    friend bool operator!=(const TChar& a, const TChar& b) { return !(a == b); }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [w, k] : m_) {
            if (!first) os << " + ";
            first = false;
            os << w.str();
            if (k != 1) os << "^" << k;
        }
        if (first) os << "0";
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const TChar& c) { return os << c.str(); }

  private:
    Map m_;
};

} // namespace frobcoh
