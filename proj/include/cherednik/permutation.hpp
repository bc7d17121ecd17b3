#pragma once

// Permutations of [1, n] stored in one-line notation (0-based internally).
// Composition is (a * b)(i) = a(b(i)).

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace cherednik {

class Permutation {
public:
    explicit Permutation(int n) : img_(n) {
        if (n < 1) throw std::invalid_argument("Permutation: rank must be >= 1");
        std::iota(img_.begin(), img_.end(), 0);
    }

    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
                throw std::invalid_argument("Permutation: images must be a bijection");
            seen[v] = true;
        }
    }

    // transposition of 0-based positions i and j
    static Permutation transposition(int n, int i, int j) {
        Permutation p(n);
        if (i < 0 || j < 0 || i >= n || j >= n || i == j)
            throw std::invalid_argument("Permutation: bad transposition");
        std::swap(p.img_[i], p.img_[j]);
        return p;
    }

    // adjacent transposition s_i (0-based i, swaps i and i+1)
    static Permutation simple(int n, int i) { return transposition(n, i, i + 1); }

    int rank() const { return static_cast<int>(img_.size()); }
    int operator()(int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const {
        for (int i = 0; i < rank(); ++i)
            if (img_[i] != i) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<int> inv(img_.size());
        for (int i = 0; i < rank(); ++i) inv[img_[i]] = i;
        return Permutation(std::move(inv));
    }

    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        if (a.rank() != b.rank()) throw std::invalid_argument("Permutation: rank mismatch");
        std::vector<int> img(a.rank());
        for (int i = 0; i < a.rank(); ++i) img[i] = a.img_[b.img_[i]];
        return Permutation(std::move(img));
    }

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.img_ == b.img_; }
    friend bool operator!=(const Permutation& a, const Permutation& b) { return !(a == b); }
    friend bool operator<(const Permutation& a, const Permutation& b) { return a.img_ < b.img_; }

    // 0-based simple reflection indices, w = s[0] * s[1] * ... (left to right)
    std::vector<int> reduced_word() const {
        std::vector<int> word;
        std::vector<int> cur = img_;
        bool progress = true;
        while (progress) {
            progress = false;
            for (int i = 0; i + 1 < rank(); ++i) {
                if (cur[i] > cur[i + 1]) { // right-multiplying by s_i clears the descent
                    std::swap(cur[i], cur[i + 1]);
                    word.push_back(i);
                    progress = true;
                    break;
                }
            }
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    // "[2 1 3]" (1-based one-line notation)
    std::string one_line() const {
        std::string s = "[";
        for (int i = 0; i < rank(); ++i) {
            if (i) s += " ";
            s += std::to_string(img_[i] + 1);
        }
        return s + "]";
    }

private:
    std::vector<int> img_;
};

// act(w, e)[w(i)] = e[i]: pushes an exponent vector through a permutation,
// matching w * x^e = x^{act(w, e)} * w.
template <typename T>
std::vector<T> act(const Permutation& w, const std::vector<T>& e) {
    std::vector<T> out(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) out[w(static_cast<int>(i))] = e[i];
    return out;
}

// all n! permutations, lexicographic on one-line notation
inline std::vector<Permutation> all_permutations(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(img));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

} // namespace cherednik
