#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace frobcoh {

/* A weight in X(T), stored by its coordinates in the fundamental-weight
   basis: c[i] = <lambda, alpha_i^vee>.  Coordinates are exact integers;
   simple-root coordinates (rational in general) live in RootSystem. */
class Weight {
  public:
    Weight() = default;
    explicit Weight(std::size_t rank) : c_(rank, 0) {}
    Weight(std::initializer_list<long long> c) : c_(c) {}
    explicit Weight(std::vector<long long> c) : c_(std::move(c)) {}

    std::size_t rank() const { return c_.size(); }
    long long operator[](std::size_t i) const { return c_[i]; }
    long long& operator[](std::size_t i) { return c_[i]; }
    const std::vector<long long>& coords() const { return c_; }

    bool is_zero() const {
        for (long long x : c_)
            if (x != 0) return false;
        return true;
    }

    bool is_dominant() const {
        for (long long x : c_)
            if (x < 0) return false;
        return true;
    }

    /* lambda in X_r(T) up to dominance: all coordinates in [0, p^r). */
    bool is_restricted(long long q) const {
        for (long long x : c_)
            if (x < 0 || x >= q) return false;
        return true;
    }

    bool divisible_by(long long m) const {
        for (long long x : c_)
            if (x % m != 0) return false;
        return true;
    }

    Weight& operator+=(const Weight& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    Weight& operator-=(const Weight& o) {
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    Weight& operator*=(long long m) {
        for (auto& x : c_) x *= m;
        return *this;
    }

    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(long long m, Weight a) { return a *= m; }
    friend Weight operator-(Weight a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
    friend bool operator<(const Weight& a, const Weight& b) { return a.c_ < b.c_; }

    Weight divided(long long m) const {
        Weight w(*this);
        for (auto& x : w.c_) x /= m;
        return w;
    }

    std::string str() const {
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (i) os << ',';
            os << c_[i];
        }
        os << ')';
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

  private:
    std::vector<long long> c_;
};

inline Weight fundamental_weight(std::size_t rank, std::size_t i) {
    Weight w(rank);
    w[i] = 1;
    return w;
}

} // namespace frobcoh
