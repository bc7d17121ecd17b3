#pragma once

// Standard Young tableaux: enumeration in a fixed order, prefix shapes,
// the level-restriction predicate, and the two statistics (cocharge and
// the classical charge of the reading word, kept as an independent oracle).

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cherednik/partition.hpp"

namespace cherednik {

// Level parameter: a nonnegative integer or the UNBOUNDED sentinel
// (restriction vacuous).
class Level {
public:
    static Level unbounded() { return Level(true, 0); }
    static Level of(int value) {
        if (value < 0) throw std::invalid_argument("Level: value must be >= 0");
        return Level(false, value);
    }

    bool is_unbounded() const { return unbounded_; }
    int value() const {
        if (unbounded_) throw std::logic_error("Level: unbounded level has no value");
        return value_;
    }

    std::string to_string() const { return unbounded_ ? "inf" : std::to_string(value_); }

    friend bool operator==(const Level& a, const Level& b) {
        return a.unbounded_ == b.unbounded_ && (a.unbounded_ || a.value_ == b.value_);
    }

private:
    Level(bool unbounded, int value) : unbounded_(unbounded), value_(value) {}
    bool unbounded_;
    int value_;
};

// Bijective filling of a Young diagram by 1..n, strictly increasing along
// rows (left to right) and columns (top to bottom). Rows are 0-based
// internally; "below" means larger row index.
class StandardTableau {
public:
    explicit StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        std::vector<int> shape;
        int n = 0;
        for (const auto& r : rows_) {
            shape.push_back(static_cast<int>(r.size()));
            n += static_cast<int>(r.size());
        }
        shape_ = Partition(shape); // validates weak decrease
        pos_.assign(n + 1, {-1, -1});
        for (int a = 0; a < static_cast<int>(rows_.size()); ++a) {
            for (int b = 0; b < static_cast<int>(rows_[a].size()); ++b) {
                int v = rows_[a][b];
                if (v < 1 || v > n || pos_[v].first != -1)
                    throw std::invalid_argument("StandardTableau: entries must be a bijection onto 1..n");
                pos_[v] = {a, b};
                if (b > 0 && rows_[a][b - 1] >= v)
                    throw std::invalid_argument("StandardTableau: rows must strictly increase");
                if (a > 0 && rows_[a - 1][b] >= v)
                    throw std::invalid_argument("StandardTableau: columns must strictly increase");
            }
        }
    }

    const Partition& shape() const { return shape_; }
    int size() const { return static_cast<int>(pos_.size()) - 1; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }

    int row_of(int entry) const { return at(entry).first; }
    int column_of(int entry) const { return at(entry).second; }
    int entry_at(int row, int col) const { return rows_.at(row).at(col); }

    // rows concatenated bottom row first, each left to right
    std::vector<int> reading_word() const {
        std::vector<int> w;
        for (auto it = rows_.rbegin(); it != rows_.rend(); ++it)
            w.insert(w.end(), it->begin(), it->end());
        return w;
    }

    // entries read row by row, top row first (the enumeration sort key)
    std::vector<int> row_reading() const {
        std::vector<int> w;
        for (const auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
        return w;
    }

    // "12/3": rows separated by '/', entries concatenated (comma separated
    // once entries can exceed one digit)
    std::string to_string() const {
        const char* sep = size() > 9 ? "," : "";
        std::string s;
        for (std::size_t a = 0; a < rows_.size(); ++a) {
            if (a) s += "/";
            for (std::size_t b = 0; b < rows_[a].size(); ++b) {
                if (b) s += sep;
                s += std::to_string(rows_[a][b]);
            }
        }
        return s;
    }

    friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
        return a.rows_ == b.rows_;
    }

private:
    std::pair<int, int> at(int entry) const {
        if (entry < 1 || entry > size())
            throw std::invalid_argument("StandardTableau: entry out of range");
        return pos_[entry];
    }

    std::vector<std::vector<int>> rows_;
    Partition shape_;
    std::vector<std::pair<int, int>> pos_; // pos_[k] = (row, col) of entry k
};

// Number of standard tableaux by the hook length formula (exact for n <= 20).
inline long long syt_count(const Partition& shape) {
    const int n = shape.weight();
    const Partition conj = shape.conjugate();
    long long num = 1;
    std::vector<long long> hooks;
    for (int a = 1; a <= shape.length(); ++a)
        for (int b = 1; b <= shape.part(a); ++b)
            hooks.push_back(shape.part(a) - b + conj.part(b) - a + 1);
    // divide n! by the hooks incrementally to keep intermediates small
    for (int k = 2; k <= n; ++k) {
        num *= k;
        for (auto& h : hooks) {
            if (h > 1 && num % h == 0) {
                num /= h;
                h = 1;
            }
        }
    }
    for (auto h : hooks) {
        if (h > 1) {
            if (num % h != 0) throw std::logic_error("syt_count: hook division failed");
            num /= h;
        }
    }
    return num;
}

// Every standard tableau of the given shape exactly once, sorted
// lexicographically on the entry sequence read row by row (top row first).
inline std::vector<StandardTableau> enumerate_syt(const Partition& shape) {
    if (shape.empty()) throw std::invalid_argument("enumerate_syt: shape must be nonempty");
    const int n = shape.weight();
    const int rows = shape.length();
    std::vector<StandardTableau> out;
    std::vector<std::vector<int>> cur(rows);
    std::vector<int> filled(rows, 0);
    std::function<void(int)> rec = [&](int k) {
        if (k > n) {
            out.push_back(StandardTableau(cur));
            return;
        }
        for (int r = 0; r < rows; ++r) {
            if (filled[r] >= shape.part(r + 1)) continue;
            if (r > 0 && filled[r] >= filled[r - 1]) continue; // keep columns strict
            cur[r].push_back(k);
            ++filled[r];
            rec(k + 1);
            --filled[r];
            cur[r].pop_back();
        }
    };
    rec(1);
    std::sort(out.begin(), out.end(), [](const StandardTableau& a, const StandardTableau& b) {
        return a.row_reading() < b.row_reading();
    });
    return out;
}

// Row counts of the cells holding entries <= i, zero padded to m rows.
// Always dominant by column strictness.
inline WeightVector prefix_shape(const StandardTableau& t, int i, int m) {
    if (i < 1 || i > t.size()) throw std::invalid_argument("prefix_shape: index out of range");
    if (m < t.shape().length())
        throw std::invalid_argument("prefix_shape: m must cover the shape");
    WeightVector w(m, 0);
    for (int k = 1; k <= i; ++k) ++w[t.row_of(k)];
    return w;
}

// Every prefix shape, padded to m rows, must satisfy first - last <= level.
inline bool is_l_restricted(const StandardTableau& t, int m, Level level) {
    if (m < t.shape().length())
        throw std::invalid_argument("is_l_restricted: m must cover the shape");
    if (level.is_unbounded()) return true;
    const int bound = level.value();
    std::vector<int> counts(m, 0);
    for (int k = 1; k <= t.size(); ++k) {
        ++counts[t.row_of(k)];
        if (counts[0] - counts[m - 1] > bound) return false;
    }
    return true;
}

// 1 iff entry i+1 sits in a strictly lower row than entry i; defined for
// i in [1, n-1] (the i = n summand of the cocharge carries factor zero).
inline int descent_indicator(const StandardTableau& t, int i) {
    if (i < 1 || i >= t.size())
        throw std::invalid_argument("descent_indicator: i must lie in [1, n-1]");
    return t.row_of(i + 1) > t.row_of(i) ? 1 : 0;
}

// sum of (n - i) over descents i; between 0 and n(n-1)/2
inline long long cocharge(const StandardTableau& t) {
    const int n = t.size();
    long long d = 0;
    for (int i = 1; i < n; ++i)
        if (descent_indicator(t, i)) d += n - i;
    return d;
}

// Classical charge of the reading word: index(1) = 0, index(k+1) =
// index(k) + 1 exactly when k+1 occurs to the right of k; charge is the
// sum of the indices.
inline long long charge(const StandardTableau& t) {
    const int n = t.size();
    std::vector<int> word = t.reading_word();
    std::vector<int> pos(n + 1, 0);
    for (int p = 0; p < n; ++p) pos[word[p]] = p;
    long long total = 0;
    long long index = 0;
    for (int k = 2; k <= n; ++k) {
        if (pos[k] > pos[k - 1]) ++index;
        total += index;
    }
    return total;
}

} // namespace cherednik
