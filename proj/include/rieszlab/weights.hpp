#pragma once

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "rieszlab/errors.hpp"

namespace rieszlab {

/// Weakly decreasing real weight kappa = (k_1 >= ... >= k_m), the index
/// of the generalized power q_kappa. Ordering is enforced at
/// construction; densities state their existence conditions for ordered
/// weights.
class WeightVector {
public:
    explicit WeightVector(std::vector<double> entries) : k_(std::move(entries)) {
        if (k_.empty()) throw DomainError("WeightVector: empty weight");
        for (size_t i = 0; i < k_.size(); ++i) {
            if (!std::isfinite(k_[i])) throw DomainError("WeightVector: non-finite entry");
            if (i > 0 && k_[i] > k_[i - 1] + 0.0)
                throw DomainError("WeightVector: entries must be weakly decreasing");
        }
    }

    static WeightVector zero(int m) { return WeightVector(std::vector<double>(m, 0.0)); }
    static WeightVector constant(int m, double p) {
        return WeightVector(std::vector<double>(m, p));
    }

    int size() const { return static_cast<int>(k_.size()); }
    double operator[](int i) const { return k_[i]; }
    const std::vector<double>& entries() const { return k_; }

    double sum() const { return std::accumulate(k_.begin(), k_.end(), 0.0); }
    double first() const { return k_.front(); }
    double last() const { return k_.back(); }

    bool is_zero() const {
        for (double v : k_)
            if (v != 0.0) return false;
        return true;
    }

    /// -kappa* : reverse the order and negate. Weakly decreasing again,
    /// the weight appearing in the inversion identity for q_kappa.
    WeightVector negated_reversed() const {
        std::vector<double> r(k_.rbegin(), k_.rend());
        for (double& v : r) v = -v;
        return WeightVector(std::move(r));
    }

    WeightVector operator+(const WeightVector& o) const {
        if (o.size() != size()) throw DomainError("WeightVector: size mismatch in sum");
        std::vector<double> r(k_);
        for (int i = 0; i < size(); ++i) r[i] += o.k_[i];
        return WeightVector(std::move(r));
    }

    WeightVector shifted(double p) const {
        std::vector<double> r(k_);
        for (double& v : r) v += p;
        return WeightVector(std::move(r));
    }

private:
    std::vector<double> k_;
};

/// Integer partition tau = (t_1 >= ... >= t_l >= 0), the index set of the
/// zonal/Jack polynomials. Trailing zeros are trimmed.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : t_(std::move(parts)) {
        for (size_t i = 0; i < t_.size(); ++i) {
            if (t_[i] < 0) throw DomainError("Partition: parts must be nonnegative");
            if (i > 0 && t_[i] > t_[i - 1])
                throw DomainError("Partition: parts must be weakly decreasing");
        }
        while (!t_.empty() && t_.back() == 0) t_.pop_back();
    }

    int length() const { return static_cast<int>(t_.size()); }
    int weight() const { return std::accumulate(t_.begin(), t_.end(), 0); }
    int operator[](int i) const { return i < length() ? t_[i] : 0; }
    const std::vector<int>& parts() const { return t_; }

    bool operator==(const Partition& o) const { return t_ == o.t_; }
    bool operator<(const Partition& o) const { return t_ < o.t_; }

    /// As a weight vector padded with zeros to length m.
    WeightVector as_weight(int m) const {
        if (length() > m) throw TooManyParts("Partition: more parts than dimension");
        std::vector<double> k(m, 0.0);
        for (int i = 0; i < length(); ++i) k[i] = t_[i];
        return WeightVector(std::move(k));
    }

    std::string to_string() const {
        std::string s = "(";
        for (int i = 0; i < length(); ++i) s += (i ? "," : "") + std::to_string(t_[i]);
        return s + ")";
    }

    /// All partitions of weight k in decreasing lexicographic order.
    static std::vector<Partition> all_of_weight(int k) {
        std::vector<Partition> out;
        std::vector<int> cur;
        enumerate(k, k, cur, out);
        return out;
    }

private:
    static void enumerate(int remaining, int max_part, std::vector<int>& cur,
                          std::vector<Partition>& out) {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            enumerate(remaining - p, p, cur, out);
            cur.pop_back();
        }
    }

    std::vector<int> t_;
};

} // namespace rieszlab
