// Shared successive-cancellation traversals, parameterized over the message
// algebra so the float, lookup-table and uniform-baseline decoders run the
// same machinery.
//
// Ops policy requirements:
//   using Message;
//   Message f(Message a, Message b, int level, int node) const;
//   Message g(Message a, Message b, int u, int level, int node) const;
//   double leaf_value(Message m, int leaf) const;
// `node` is the tree-node index at `level` (f-children even, g-children odd);
// `leaf` is the bit index.
#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polarq/code.hpp"
#include "polarq/float_decode.hpp"

namespace polarq::detail {

// Depth-first SC pass over spans; hard decisions re-encode on the way up.
template <class Ops>
BitBlock sc_decode_with(const CodeConfig& config, const Ops& ops,
                        const std::vector<typename Ops::Message>& channel) {
    using Message = typename Ops::Message;
    if (static_cast<int>(channel.size()) != config.code_len)
        throw std::invalid_argument("sc_decode: message length != N");

    const int n = config.n_bits;
    std::vector<std::vector<Message>> scratch(n + 1);
    for (int level = 1; level <= n; ++level) scratch[level].resize(config.code_len >> level);
    std::vector<std::uint8_t> decisions(config.code_len, 0);
    std::vector<std::uint8_t> hard(config.code_len, 0);

    auto recurse = [&](auto&& self, int level, int node, const Message* in,
                       std::uint8_t* hard_out) -> void {
        const int size = config.code_len >> level;
        if (size == 1) {
            double value = ops.leaf_value(in[0], node);
            int u = hard_decision(value, !config.is_info[node]);
            decisions[node] = static_cast<std::uint8_t>(u);
            hard_out[0] = static_cast<std::uint8_t>(u);
            return;
        }
        const int half = size / 2;
        Message* buf = scratch[level + 1].data();
        for (int j = 0; j < half; ++j) buf[j] = ops.f(in[j], in[j + half], level + 1, 2 * node);
        self(self, level + 1, 2 * node, buf, hard_out);
        for (int j = 0; j < half; ++j)
            buf[j] = ops.g(in[j], in[j + half], hard_out[j], level + 1, 2 * node + 1);
        self(self, level + 1, 2 * node + 1, buf, hard_out + half);
        for (int j = 0; j < half; ++j) hard_out[j] ^= hard_out[j + half];
    };
    recurse(recurse, 0, 0, channel.data(), hard.data());

    BitBlock info(config.info_len);
    for (int i = 0; i < config.info_len; ++i) info[i] = decisions[config.info_set[i]];
    return info;
}

// LLR-domain list decoder with per-path state and path-metric pruning.
template <class Ops>
class ListDecoder {
public:
    using Message = typename Ops::Message;

    ListDecoder(const CodeConfig& config, Ops ops, int list_size)
        : config_(config), ops_(std::move(ops)), list_size_(list_size) {
        if (list_size_ < 1) throw std::invalid_argument("scl_decode: list_size must be >= 1");
    }

    BitBlock decode(const std::vector<Message>& channel) {
        if (static_cast<int>(channel.size()) != config_.code_len)
            throw std::invalid_argument("scl_decode: message length != N");
        const int n = config_.n_bits;

        paths_.clear();
        paths_.push_back(make_path(channel));

        for (int phi = 0; phi < config_.code_len; ++phi) {
            for (auto& p : paths_) calc_llr(p, n, phi);
            if (config_.is_info[phi]) {
                fork_and_prune(phi);
            } else {
                for (auto& p : paths_) {
                    double value = ops_.leaf_value(p.llr[n][0], phi);
                    p.pm = pm_update(p.pm, value, 0);
                    record_decision(p, phi, 0);
                }
            }
            if (phi & 1)
                for (auto& p : paths_) update_csum(p, n, phi);
        }

        int best = 0;
        for (int i = 1; i < static_cast<int>(paths_.size()); ++i)
            if (paths_[i].pm < paths_[best].pm) best = i;

        BitBlock info(config_.info_len);
        for (int i = 0; i < config_.info_len; ++i)
            info[i] = paths_[best].decisions[config_.info_set[i]];
        return info;
    }

private:
    struct Path {
        std::vector<std::vector<Message>> llr;        // llr[level]: size N >> level
        std::vector<std::vector<std::uint8_t>> csum;  // csum[level]: two sibling blocks
        std::vector<std::uint8_t> decisions;
        double pm = 0.0;
    };

    Path make_path(const std::vector<Message>& channel) {
        Path p;
        const int n = config_.n_bits;
        p.llr.resize(n + 1);
        p.csum.resize(n + 1);
        p.llr[0] = channel;
        for (int level = 0; level <= n; ++level) {
            if (level > 0) p.llr[level].resize(config_.code_len >> level);
            p.csum[level].assign(2 * (config_.code_len >> level), 0);
        }
        p.decisions.assign(config_.code_len, 0);
        return p;
    }

    void calc_llr(Path& p, int level, int phi) {
        if (level == 0) return;
        const int node = phi >> (config_.n_bits - level);
        if ((node & 1) == 0) calc_llr(p, level - 1, phi);
        const int size = config_.code_len >> level;
        const auto& in = p.llr[level - 1];
        auto& out = p.llr[level];
        if ((node & 1) == 0) {
            for (int j = 0; j < size; ++j) out[j] = ops_.f(in[j], in[j + size], level, node);
        } else {
            const auto& cs = p.csum[level];
            for (int j = 0; j < size; ++j)
                out[j] = ops_.g(in[j], in[j + size], cs[j], level, node);
        }
    }

    void record_decision(Path& p, int phi, int u) {
        p.decisions[phi] = static_cast<std::uint8_t>(u);
        p.csum[config_.n_bits][phi & 1] = static_cast<std::uint8_t>(u);
    }

    // After an odd node finishes, fold the two sibling blocks into the parent
    // slot one level up.
    void update_csum(Path& p, int level, int node) {
        const int size = config_.code_len >> level;
        const int parent = node >> 1;
        const auto& cs = p.csum[level];
        auto& up = p.csum[level - 1];
        const int slot = (parent & 1) * (2 * size);
        for (int j = 0; j < size; ++j) {
            up[slot + j] = cs[j] ^ cs[size + j];
            up[slot + size + j] = cs[size + j];
        }
        if (parent & 1) update_csum(p, level - 1, parent);
    }

    void fork_and_prune(int phi) {
        struct Candidate {
            double pm;
            int path;
            int bit;
        };
        std::vector<Candidate> cands;
        cands.reserve(2 * paths_.size());
        for (int i = 0; i < static_cast<int>(paths_.size()); ++i) {
            double value = ops_.leaf_value(paths_[i].llr[config_.n_bits][0], phi);
            cands.push_back({pm_update(paths_[i].pm, value, 0), i, 0});
            cands.push_back({pm_update(paths_[i].pm, value, 1), i, 1});
        }
        // Stable sort keeps (path index, bit) order on equal metrics.
        std::stable_sort(cands.begin(), cands.end(),
                         [](const Candidate& a, const Candidate& b) { return a.pm < b.pm; });
        cands.resize(std::min<std::size_t>(list_size_, cands.size()));

        std::vector<int> uses(paths_.size(), 0);
        for (const auto& c : cands) ++uses[c.path];

        std::vector<Path> next;
        next.reserve(cands.size());
        for (const auto& c : cands) {
            if (--uses[c.path] > 0)
                next.push_back(paths_[c.path]);
            else
                next.push_back(std::move(paths_[c.path]));
            next.back().pm = c.pm;
            record_decision(next.back(), phi, c.bit);
        }
        paths_ = std::move(next);
    }

    const CodeConfig& config_;
    Ops ops_;
    int list_size_;
    std::vector<Path> paths_;
};

}  // namespace polarq::detail
