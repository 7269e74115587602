#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "oopred/ir.hpp"
#include "oopred/util.hpp"

namespace oopred {

// ---------------------------------------------------------------------------
// Control-flow graphs. Blocks are numbered densely in instruction order with
// a synthetic entry block first and a synthetic exit block last, so an edge
// is a back edge exactly when its target id is <= its source id.
// ---------------------------------------------------------------------------

enum class BlockKind { Entry, Exit, Ordinary };

struct BasicBlock {
    int id = 0;
    int first = 0; // half-open instruction range [first, last)
    int last = 0;
    BlockKind kind = BlockKind::Ordinary;

    bool operator==(const BasicBlock&) const = default;
};

enum class EdgeDirection { Forward, Backward };

struct CfgEdge {
    int src = 0;
    int dst = 0;
    EdgeDirection direction = EdgeDirection::Forward;
    std::optional<double> frequency; // profile count, kept raw for reporting

    bool operator==(const CfgEdge&) const = default;
};

struct Cfg {
    std::string method;
    std::vector<BasicBlock> blocks; // index == id
    std::vector<CfgEdge> edges;

    int entry_id() const { return 0; }
    int exit_id() const { return static_cast<int>(blocks.size()) - 1; }
};

// Observed taken-counts keyed by (method id, src block id, dst block id).
struct ProfileData {
    std::map<std::tuple<std::string, int, int>, long long> counts;

    std::optional<long long> lookup(const std::string& method, int src, int dst) const {
        auto it = counts.find({method, src, dst});
        if (it == counts.end()) return std::nullopt;
        return it->second;
    }
};

// Line format: method<TAB>src_block<TAB>dst_block<TAB>count
inline ProfileData parse_profile(std::string_view text) {
    ProfileData profile;
    int lineno = 0;
    for (const auto& line : split(text, '\n')) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        auto cols = split(line, '\t');
        if (cols.size() != 4)
            throw ParseError(lineno, 1, "profile line must have 4 tab-separated fields");
        try {
            int src = std::stoi(cols[1]);
            int dst = std::stoi(cols[2]);
            long long count = std::stoll(cols[3]);
            if (count < 0) throw ParseError(lineno, 1, "profile count must be non-negative");
            profile.counts[{cols[0], src, dst}] += count;
        } catch (const std::invalid_argument&) {
            throw ParseError(lineno, 1, "profile line has a non-numeric field");
        } catch (const std::out_of_range&) {
            throw ParseError(lineno, 1, "profile value out of range");
        }
    }
    return profile;
}

inline std::string serialize_profile(const ProfileData& profile) {
    std::string out;
    for (const auto& [key, count] : profile.counts) {
        out += std::get<0>(key) + "\t" + std::to_string(std::get<1>(key)) + "\t" +
               std::to_string(std::get<2>(key)) + "\t" + std::to_string(count) + "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// Construction: standard leader algorithm. Branches end blocks, branch
// targets start them; duplicate (src, dst) pairs collapse to one edge.
// ---------------------------------------------------------------------------

inline Cfg build_cfg(const MethodDef& m) {
    Cfg cfg;
    cfg.method = m.id();

    const int n = static_cast<int>(m.instructions.size());
    cfg.blocks.push_back({0, 0, 0, BlockKind::Entry});

    std::set<int> leaders;
    if (n > 0) {
        leaders.insert(0);
        for (int i = 0; i < n; ++i) {
            const Instruction& ins = m.instructions[static_cast<std::size_t>(i)];
            if (ins.op == Opcode::IfLt || ins.op == Opcode::Goto)
                leaders.insert(m.labels.at(ins.label));
            if (ins.is_branch() && i + 1 < n) leaders.insert(i + 1);
        }
    }

    std::map<int, int> block_at; // leader instruction index -> block id
    for (auto it = leaders.begin(); it != leaders.end(); ++it) {
        int first = *it;
        auto next = std::next(it);
        int last = next == leaders.end() ? n : *next;
        int id = static_cast<int>(cfg.blocks.size());
        cfg.blocks.push_back({id, first, last, BlockKind::Ordinary});
        block_at[first] = id;
    }

    const int exit_id = static_cast<int>(cfg.blocks.size());
    cfg.blocks.push_back({exit_id, n, n, BlockKind::Exit});

    std::set<std::pair<int, int>> seen;
    auto add_edge = [&](int src, int dst) {
        if (!seen.insert({src, dst}).second) return;
        EdgeDirection dir = dst <= src ? EdgeDirection::Backward : EdgeDirection::Forward;
        cfg.edges.push_back({src, dst, dir, std::nullopt});
    };

    if (n == 0) {
        add_edge(0, exit_id);
        return cfg;
    }

    add_edge(0, block_at.at(0));
    for (const auto& block : cfg.blocks) {
        if (block.kind != BlockKind::Ordinary) continue;
        const Instruction& last = m.instructions[static_cast<std::size_t>(block.last - 1)];
        auto target_block = [&](int instr) { return instr >= n ? exit_id : block_at.at(instr); };
        switch (last.op) {
            case Opcode::Return:
                add_edge(block.id, exit_id);
                break;
            case Opcode::Goto:
                add_edge(block.id, target_block(m.labels.at(last.label)));
                break;
            case Opcode::IfLt:
                add_edge(block.id, target_block(m.labels.at(last.label)));
                add_edge(block.id, target_block(block.last));
                break;
            default: // fall-through; past the last instruction means implicit return
                add_edge(block.id, target_block(block.last));
                break;
        }
    }
    return cfg;
}

// ---------------------------------------------------------------------------
// Edge weights
// ---------------------------------------------------------------------------

struct StaticWeightPolicy {
    double back_edge_probability = 0.9;
};

using EdgeWeights = std::map<std::pair<int, int>, double>;

// Per-block stochastic weights. Profile counts are used when they cover every
// outgoing edge of a block and sum to a positive total; otherwise the static
// policy applies to that whole block. Raw counts are recorded on the edges.
inline EdgeWeights edge_weights(Cfg& cfg, const ProfileData* profile,
                                const StaticWeightPolicy& policy) {
    if (!(policy.back_edge_probability > 0.0 && policy.back_edge_probability < 1.0))
        throw InputError("back_edge_probability must be in (0,1)");

    if (profile) {
        std::set<std::pair<int, int>> edge_set;
        for (const auto& e : cfg.edges) edge_set.insert({e.src, e.dst});
        for (const auto& [key, count] : profile->counts) {
            if (std::get<0>(key) != cfg.method) continue;
            if (!edge_set.count({std::get<1>(key), std::get<2>(key)}))
                throw InputError("profile references nonexistent edge " + cfg.method + " " +
                                 std::to_string(std::get<1>(key)) + "->" +
                                 std::to_string(std::get<2>(key)));
        }
    }

    std::map<int, std::vector<CfgEdge*>> by_src;
    for (auto& e : cfg.edges) by_src[e.src].push_back(&e);

    EdgeWeights weights;
    for (auto& [src, edges] : by_src) {
        bool covered = profile != nullptr;
        long long total = 0;
        for (CfgEdge* e : edges) {
            auto count = profile ? profile->lookup(cfg.method, e->src, e->dst) : std::nullopt;
            if (count) {
                e->frequency = static_cast<double>(*count);
                total += *count;
            } else {
                covered = false;
            }
        }
        if (covered && total > 0) {
            for (CfgEdge* e : edges)
                weights[{e->src, e->dst}] = *e->frequency / static_cast<double>(total);
            continue;
        }
        int backward = 0;
        for (CfgEdge* e : edges)
            if (e->direction == EdgeDirection::Backward) ++backward;
        int forward = static_cast<int>(edges.size()) - backward;
        for (CfgEdge* e : edges) {
            double w;
            if (backward == 0 || forward == 0) {
                w = 1.0 / static_cast<double>(edges.size());
            } else if (e->direction == EdgeDirection::Backward) {
                w = policy.back_edge_probability / backward;
            } else {
                w = (1.0 - policy.back_edge_probability) / forward;
            }
            weights[{e->src, e->dst}] = w;
        }
    }
    return weights;
}

} // namespace oopred
