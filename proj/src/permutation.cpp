#include "catmix/permutation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "catmix/errors.hpp"

namespace catmix {

Permutation::Permutation(std::vector<int> labels) : lab_(std::move(labels)) {
    int n = size();
    std::vector<bool> seen(n + 1, false);
    for (int v : lab_) {
        if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of 1..n");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    Permutation p;
    p.lab_ = std::move(v);
    return p;
}

Permutation Permutation::reversal(int n) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = n - i;
    Permutation p;
    p.lab_ = std::move(v);
    return p;
}

Permutation Permutation::parse(const std::string& text) {
    std::vector<int> v;
    std::string tok;
    for (char ch : text) {
        if (ch == '[' || ch == ']' || ch == ',' || ch == ' ') {
            if (!tok.empty()) { v.push_back(std::stoi(tok)); tok.clear(); }
        } else {
            tok.push_back(ch);
        }
    }
    if (!tok.empty()) v.push_back(std::stoi(tok));
    return Permutation(std::move(v));
}

int Permutation::position_of(int label) const {
    for (int i = 0; i < size(); ++i)
        if (lab_[i] == label) return i + 1;
    throw std::invalid_argument("label out of range");
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(size());
    for (int i = 0; i < size(); ++i) inv[lab_[i] - 1] = i + 1;
    Permutation p;
    p.lab_ = std::move(inv);
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size()) throw std::invalid_argument("size mismatch");
    std::vector<int> v(size());
    for (int i = 0; i < size(); ++i) v[i] = lab_[other.lab_[i] - 1];
    Permutation p;
    p.lab_ = std::move(v);
    return p;
}

void Permutation::swap_positions(int x, int y) { std::swap(lab_[x - 1], lab_[y - 1]); }

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (int i = 0; i < size(); ++i) {
        if (i) os << ',';
        os << lab_[i];
    }
    os << ']';
    return os.str();
}

HeightTable::HeightTable(const Permutation& sigma) : n_(sigma.size()), c_((n_ + 1) * (n_ + 1), 0) {
    for (int x = 1; x <= n_; ++x) {
        int lab = sigma.label_at(x);
        int* row = &c_[x * (n_ + 1)];
        const int* prev = &c_[(x - 1) * (n_ + 1)];
        for (int y = 0; y <= n_; ++y) row[y] = prev[y] + (lab <= y ? 1 : 0);
    }
}

static void check_xy(int n, int x, int y) {
    if (x < 1 || x > n || y < 1 || y > n) throw std::invalid_argument("x or y out of 1..n");
}

double centered_height(const Permutation& sigma, int x, int y) {
    check_xy(sigma.size(), x, y);
    int c = 0;
    for (int z = 1; z <= x; ++z) c += sigma.label_at(z) <= y ? 1 : 0;
    return c - double(x) * y / sigma.size();
}

Rational centered_height_exact(const Permutation& sigma, int x, int y) {
    check_xy(sigma.size(), x, y);
    int c = 0;
    for (int z = 1; z <= x; ++z) c += sigma.label_at(z) <= y ? 1 : 0;
    return Rational(c) - Rational(std::int64_t(x) * y, sigma.size());
}

bool order_leq(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("size mismatch");
    HeightTable ta(a), tb(b);
    int n = a.size();
    for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y)
            if (ta.count(x, y) > tb.count(x, y)) return false;
    return true;
}

BlockPartition::BlockPartition(int n_, int K_) : n(n_), K(K_) {
    if (n < 1 || K < 1 || K > n) throw std::invalid_argument("need 1 <= K <= n");
    cut.resize(K + 1);
    for (int i = 0; i <= K; ++i) cut[i] = int(std::int64_t(i) * n / K);
    for (int i = 1; i <= K; ++i)
        if (cut[i] <= cut[i - 1]) throw std::invalid_argument("degenerate block");
}

int BlockPartition::block_of_label(int label) const {
    for (int i = 1; i <= K; ++i)
        if (label <= cut[i]) return i;
    throw std::invalid_argument("label out of range");
}

std::int64_t BlockPartition::subgroup_size() const {
    std::int64_t s = 1;
    for (int i = 1; i <= K; ++i) {
        int d = cut[i] - cut[i - 1];
        for (int j = 2; j <= d; ++j) s *= j;
    }
    return s;
}

std::vector<std::vector<double>> project_columns(const Permutation& sigma, const BlockPartition& part) {
    HeightTable t(sigma);
    std::vector<std::vector<double>> out(part.n, std::vector<double>(part.K));
    for (int x = 1; x <= part.n; ++x)
        for (int j = 1; j <= part.K; ++j)
            out[x - 1][j - 1] = t.centered(x, part.cut[j]);
    return out;
}

std::vector<std::vector<double>> project_grid(const Permutation& sigma, const BlockPartition& part) {
    HeightTable t(sigma);
    std::vector<std::vector<double>> out(part.K, std::vector<double>(part.K));
    for (int i = 1; i <= part.K; ++i)
        for (int j = 1; j <= part.K; ++j)
            out[i - 1][j - 1] = t.centered(part.cut[i], part.cut[j]);
    return out;
}

bool preserves_blocks(const Permutation& sigma, const BlockPartition& part) {
    for (int i = 1; i <= part.K; ++i)
        for (int x = part.cut[i - 1] + 1; x <= part.cut[i]; ++x) {
            int lab = sigma.label_at(x);
            if (lab <= part.cut[i - 1] || lab > part.cut[i]) return false;
        }
    return true;
}

std::vector<Permutation> block_subgroup(const BlockPartition& part) {
    if (part.subgroup_size() > 500000)
        throw capacity_error("block subgroup too large to enumerate (|T| > 5e5)");
    // odometer over per-block permutations of the label intervals
    std::vector<std::vector<int>> blocks(part.K);
    for (int i = 1; i <= part.K; ++i)
        for (int v = part.cut[i - 1] + 1; v <= part.cut[i]; ++v) blocks[i - 1].push_back(v);

    std::vector<Permutation> out;
    std::vector<std::vector<int>> cur = blocks;
    while (true) {
        std::vector<int> labels(part.n);
        int pos = 0;
        for (auto& blk : cur)
            for (int v : blk) labels[pos++] = v;
        out.emplace_back(labels);
        int i = part.K - 1;
        while (i >= 0 && !std::next_permutation(cur[i].begin(), cur[i].end())) {
            cur[i] = blocks[i]; // wrapped; carry to the previous block
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

} // namespace catmix
