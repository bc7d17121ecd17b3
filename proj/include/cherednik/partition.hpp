#pragma once

// Integer partitions (identified with their Young diagrams, English
// orientation: row 1 on top), integer weight vectors of fixed length,
// dominance, the level bound kappa - m - lambda_1 + lambda_m >= 0, and
// enumeration of the parameter sets Lambda^+_kappa(m, n).

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace cherednik {

// A weight vector is an integer m-tuple; dominance is a predicate on it,
// not an invariant.
using WeightVector = std::vector<long long>;

class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0)
                throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    // "2,1" -> Partition({2,1}); "" -> empty partition
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::stringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) throw std::invalid_argument("Partition: empty part in '" + text + "'");
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size())
                throw std::invalid_argument("Partition: bad part '" + tok + "'");
            parts.push_back(v);
        }
        return Partition(parts);
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

    // 1-based; zero beyond the length, so part(m) is the padded lambda_m
    int part(int i) const {
        if (i < 1) throw std::invalid_argument("Partition: part index must be >= 1");
        return i <= length() ? parts_[i - 1] : 0;
    }

    // zero-padded to `rows` entries; rows must cover the whole shape
    WeightVector padded(int rows) const {
        if (rows < length())
            throw std::invalid_argument("Partition: cannot pad to fewer rows than the length");
        WeightVector w(rows, 0);
        for (int i = 0; i < length(); ++i) w[i] = parts_[i];
        return w;
    }

    Partition conjugate() const {
        std::vector<int> cols;
        for (int c = 1; c <= part(1); ++c) {
            int h = 0;
            while (h < length() && parts_[h] >= c) ++h;
            cols.push_back(h);
        }
        return Partition(cols);
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < length(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;
};

inline bool is_dominant(const WeightVector& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] > w[i - 1]) return false;
    return true;
}

// Membership in X_m^+(kappa): kappa - m - lambda_1 + lambda_m >= 0.
// Rejects non-dominant input.
inline bool is_level_bounded(const WeightVector& w, long long kappa) {
    if (w.empty()) throw std::invalid_argument("is_level_bounded: empty weight vector");
    if (!is_dominant(w)) throw std::invalid_argument("is_level_bounded: weight vector is not dominant");
    long long m = static_cast<long long>(w.size());
    return kappa - m - w.front() + w.back() >= 0;
}

// All partitions of n with parts <= max_part, in lexicographically
// decreasing order. partitions_of(0) is the singleton {empty}.
inline std::vector<Partition> partitions_of(int n, int max_part) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int remaining, int cap) {
        if (remaining == 0) {
            out.push_back(Partition(cur));
            return;
        }
        for (int p = std::min(remaining, cap); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, max_part);
    return out;
}

inline std::vector<Partition> partitions_of(int n) { return partitions_of(n, n); }

// Lambda^+_kappa(m, n): partitions of n with exactly m positive parts and
// lambda_1 - lambda_m <= kappa - m, in lexicographically decreasing order.
inline std::vector<Partition> enumerate_lambda_plus(int kappa, int m, int n) {
    if (kappa < 1 || m < 1 || n < 1)
        throw std::invalid_argument("enumerate_lambda_plus: kappa, m, n must be >= 1");
    std::vector<Partition> out;
    const int spread = kappa - m; // admissible lambda_1 - lambda_m
    if (spread < 0 || m > n) return out;

    std::vector<int> cur;
    std::function<void(int, int, int)> rec = [&](int pos, int remaining, int prev) {
        if (pos == m) {
            if (remaining == 0) out.push_back(Partition(cur));
            return;
        }
        const int slots_after = m - pos - 1;
        for (int p = std::min(prev, remaining - slots_after); p >= 1; --p) {
            // every later part lies in [floor, p]
            const int floor_part = std::max(1, (pos == 0 ? p : cur[0]) - spread);
            if (p < floor_part) break;
            const int rest = remaining - p;
            if (rest < slots_after * floor_part) continue;
            if (rest > slots_after * p) continue;
            cur.push_back(p);
            rec(pos + 1, rest, p);
            cur.pop_back();
        }
    };
    rec(0, n, n - m + 1);
    return out;
}

} // namespace cherednik
