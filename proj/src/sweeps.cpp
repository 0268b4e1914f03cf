#include "catmix/sweeps.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace catmix {

SweepRandomness SweepRandomness::draw(int n, rng::Stream& s) {
    SweepRandomness r;
    r.direction = s.next_bit() ? Direction::RightToLeft : Direction::LeftToRight;
    r.bits.resize(n - 1);
    for (auto& b : r.bits) b = s.next_bit() ? 1 : 0;
    return r;
}

SweepRandomness SweepRandomness::from_word(int n, Direction dir, std::uint64_t word) {
    SweepRandomness r;
    r.direction = dir;
    r.bits.resize(n - 1);
    for (int i = 0; i < n - 1; ++i) r.bits[i] = (word >> i) & 1;
    return r;
}

namespace {

void check_bits(const Permutation& sigma, const SweepRandomness& r) {
    if (int(r.bits.size()) != sigma.size() - 1)
        throw std::invalid_argument("sweep needs exactly n-1 bits");
}

inline int edge_at_step(int n, Direction dir, int step) {
    return dir == Direction::LeftToRight ? step + 1 : n - 1 - step;
}

} // namespace

Permutation sweep(const Permutation& sigma, const SweepRandomness& r) {
    check_bits(sigma, r);
    Permutation p = sigma;
    int n = p.size();
    for (int i = 0; i < n - 1; ++i) {
        int e = edge_at_step(n, r.direction, i);
        if (r.bits[i]) p.swap_positions(e, e + 1);
    }
    return p;
}

Permutation monotone_sweep(const Permutation& sigma, const SweepRandomness& r) {
    check_bits(sigma, r);
    Permutation p = sigma;
    int n = p.size();
    for (int i = 0; i < n - 1; ++i) {
        int e = edge_at_step(n, r.direction, i);
        bool ascending = p.label_at(e) < p.label_at(e + 1);
        if (ascending != bool(r.bits[i])) p.swap_positions(e, e + 1);
    }
    return p;
}

Permutation censored_sweep(const Permutation& sigma, const SweepRandomness& r,
                           const CensoringScheme& scheme, std::int64_t sweep_index) {
    check_bits(sigma, r);
    Permutation p = sigma;
    int n = p.size();
    for (int i = 0; i < n - 1; ++i) {
        int e = edge_at_step(n, r.direction, i);
        if (scheme.censored(sweep_index, e)) continue;
        bool ascending = p.label_at(e) < p.label_at(e + 1);
        if (ascending != bool(r.bits[i])) p.swap_positions(e, e + 1);
    }
    return p;
}

std::pair<Permutation, Permutation> coupled_sweep(const Permutation& sigma, const Permutation& sigma2,
                                                  const SweepRandomness& r,
                                                  const std::vector<std::uint8_t>& aux_bits) {
    if (sigma.size() != sigma2.size()) throw std::invalid_argument("size mismatch");
    check_bits(sigma, r);
    if (aux_bits.size() != r.bits.size()) throw std::invalid_argument("need n-1 aux bits");
    Permutation a = sigma, b = sigma2;
    int n = a.size();
    for (int i = 0; i < n - 1; ++i) {
        int e = edge_at_step(n, r.direction, i);
        bool crossed = a.label_at(e) == b.label_at(e + 1) || a.label_at(e + 1) == b.label_at(e);
        if (crossed) {
            // opposite moves: exactly one deck swaps
            if (aux_bits[i]) a.swap_positions(e, e + 1);
            else             b.swap_positions(e, e + 1);
        } else if (r.bits[i]) {
            a.swap_positions(e, e + 1);
            b.swap_positions(e, e + 1);
        }
    }
    return {a, b};
}

Permutation single_directional_sweep(const Permutation& sigma, const std::vector<std::uint8_t>& bits) {
    SweepRandomness r;
    r.direction = Direction::LeftToRight;
    r.bits = bits;
    return sweep(sigma, r);
}

Permutation at_step(const Permutation& sigma, rng::Stream& s) {
    int n = sigma.size();
    if (n < 2) throw std::invalid_argument("need n >= 2");
    int e = 1 + int(s.next_below(n - 1));
    Permutation p = sigma;
    if (s.next_bit()) p.swap_positions(e, e + 1);
    return p;
}

CensoringScheme::CensoringScheme(std::vector<int> edges,
                                 std::vector<std::pair<std::int64_t, std::int64_t>> windows)
    : edges_(std::move(edges)), windows_(std::move(windows)) {
    std::sort(edges_.begin(), edges_.end());
}

CensoringScheme CensoringScheme::three_phase(int n, double eta) {
    double unit = double(n) * n * n / (2 * 3.14159265358979323846 * 3.14159265358979323846)
                  * std::log(double(n)) / (n - 1); // sweeps per unit of the schedule
    auto s1 = std::int64_t(eta / 3 * unit);
    auto s2 = std::int64_t((1 + 2 * eta / 3) * unit);
    auto s3 = std::int64_t((1 + eta) * unit);
    int K = std::max(1, int(1.0 / eta));
    BlockPartition part(n, std::min(K, n));
    std::vector<int> edges(part.cut.begin() + 1, part.cut.end() - 1);
    return CensoringScheme(std::move(edges), {{0, s1 + 1}, {s2, s3 + 1}});
}

CensoringScheme CensoringScheme::three_phase_scaled(int n, double eta, std::int64_t total_sweeps) {
    double tot = 1 + eta;
    auto s1 = std::int64_t(eta / 3 / tot * total_sweeps);
    auto s2 = std::int64_t((1 + 2 * eta / 3) / tot * total_sweeps);
    int K = std::max(1, int(1.0 / eta));
    BlockPartition part(n, std::min(K, n));
    std::vector<int> edges(part.cut.begin() + 1, part.cut.end() - 1);
    return CensoringScheme(std::move(edges), {{0, s1 + 1}, {s2, total_sweeps + 1}});
}

CensoringScheme CensoringScheme::everything(int n) {
    std::vector<int> edges(n - 1);
    for (int i = 0; i < n - 1; ++i) edges[i] = i + 1;
    return CensoringScheme(std::move(edges), {{0, std::int64_t(1) << 62}});
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) { out.push_back(cur); cur.clear(); }
        else cur.push_back(c);
    }
    out.push_back(cur);
    return out;
}

} // namespace

CensoringScheme CensoringScheme::parse(const std::string& text, int n) {
    if (text.empty() || text == "none") return CensoringScheme();
    if (text == "everything") return everything(n);
    if (text.rfind("three-phase:", 0) == 0) {
        double eta = -1;
        std::int64_t sweeps = -1;
        for (const auto& kv : split(text.substr(12), ',')) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("bad scheme parameter: " + kv);
            std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
            if (key == "eta") eta = std::stod(val);
            else if (key == "sweeps") sweeps = std::stoll(val);
            else throw std::invalid_argument("unknown scheme parameter: " + key);
        }
        if (!(eta > 0)) throw std::invalid_argument("three-phase scheme needs eta>0");
        return sweeps > 0 ? three_phase_scaled(n, eta, sweeps) : three_phase(n, eta);
    }
    // explicit form: edges=2,4;windows=0-100,400-500
    std::vector<int> edges;
    std::vector<std::pair<std::int64_t, std::int64_t>> windows;
    for (const auto& section : split(text, ';')) {
        auto eq = section.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad scheme section: " + section);
        std::string key = section.substr(0, eq), val = section.substr(eq + 1);
        if (key == "edges") {
            for (const auto& tok : split(val, ',')) edges.push_back(std::stoi(tok));
        } else if (key == "windows") {
            for (const auto& tok : split(val, ',')) {
                auto dash = tok.find('-');
                if (dash == std::string::npos) throw std::invalid_argument("bad window: " + tok);
                windows.emplace_back(std::stoll(tok.substr(0, dash)), std::stoll(tok.substr(dash + 1)) + 1);
            }
        } else {
            throw std::invalid_argument("unknown scheme section: " + key);
        }
    }
    for (int e : edges)
        if (e < 1 || e > n - 1) throw std::invalid_argument("scheme edge out of 1..n-1");
    if (edges.empty() != windows.empty()) throw std::invalid_argument("scheme needs both edges and windows");
    return CensoringScheme(std::move(edges), std::move(windows));
}

bool CensoringScheme::censored(std::int64_t sweep, int edge) const {
    if (edges_.empty()) return false;
    bool in_window = false;
    for (const auto& [a, b] : windows_)
        if (sweep >= a && sweep < b) { in_window = true; break; }
    if (!in_window) return false;
    return std::binary_search(edges_.begin(), edges_.end(), edge);
}

} // namespace catmix
