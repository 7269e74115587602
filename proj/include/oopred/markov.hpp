#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "oopred/cfg.hpp"
#include "oopred/ir.hpp"
#include "oopred/util.hpp"

namespace oopred {

// ---------------------------------------------------------------------------
// The compressed Markov-chain prediction model. One state per basic block,
// carrying that block's field accesses in instruction order; empty states
// other than the entry/exit states are bypassed away.
// ---------------------------------------------------------------------------

struct MarkovState {
    int id = 0;
    std::vector<OOAccess> accesses;
    std::map<int, double> outgoing; // target state id -> probability
    bool is_initial = false;
    bool is_final = false;

    bool operator==(const MarkovState&) const = default;
};

struct MarkovChain {
    std::string method;
    std::map<int, MarkovState> states;
    int initial = 0;
    std::vector<int> finals;

    bool is_final(int id) const {
        return std::find(finals.begin(), finals.end(), id) != finals.end();
    }

    bool operator==(const MarkovChain&) const = default;
};

enum class SelfLoopPolicy {
    Equal,        // self-loop weight split in equal shares over the other edges
    Proportional, // self-loop weight distributed proportionally to their weights
};

// Weights this small after rewiring are floating-point dust; they are pruned
// and the rest of the state's outgoing mass renormalized.
inline constexpr double kWeightDust = 1e-12;

// ---------------------------------------------------------------------------
// Construction from a weighted CFG. Transitions with zero weight (possible
// under profiles with zero counts) are dropped; any ordinary state left
// unreachable from the entry state is pruned so chain invariants hold.
// ---------------------------------------------------------------------------

inline MarkovChain build_chain(const Program& p, const MethodDef& m, const Cfg& cfg,
                               const EdgeWeights& weights) {
    MarkovChain chain;
    chain.method = cfg.method;
    for (const auto& block : cfg.blocks) {
        MarkovState state;
        state.id = block.id;
        state.is_initial = block.kind == BlockKind::Entry;
        state.is_final = block.kind == BlockKind::Exit;
        for (int i = block.first; i < block.last; ++i) {
            const Instruction& ins = m.instructions[static_cast<std::size_t>(i)];
            if (ins.is_access()) state.accesses.push_back(to_oo_access(p, ins));
        }
        if (state.is_initial) chain.initial = block.id;
        if (state.is_final) chain.finals.push_back(block.id);
        chain.states[block.id] = std::move(state);
    }
    for (const auto& edge : cfg.edges) {
        double w = weights.at({edge.src, edge.dst});
        if (w > 0.0) chain.states[edge.src].outgoing[edge.dst] += w;
    }

    // Drop ordinary states unreachable from the initial state (weight-0 edges
    // can disconnect them). Initial and final states are always retained.
    std::set<int> reachable{chain.initial};
    std::vector<int> work{chain.initial};
    while (!work.empty()) {
        int id = work.back();
        work.pop_back();
        for (const auto& [target, w] : chain.states[id].outgoing) {
            if (reachable.insert(target).second) work.push_back(target);
        }
    }
    for (auto it = chain.states.begin(); it != chain.states.end();) {
        if (!reachable.count(it->first) && !it->second.is_initial && !it->second.is_final)
            it = chain.states.erase(it);
        else
            ++it;
    }
    return chain;
}

// ---------------------------------------------------------------------------
// Bypass: remove an empty state, rewiring each incoming edge to the state's
// successors with multiplied probabilities. A self-loop on the state is
// removed first and its weight redistributed over the remaining outgoing
// edges according to the policy.
// ---------------------------------------------------------------------------

inline bool is_bypassable(const MarkovChain& chain, int id) {
    auto it = chain.states.find(id);
    if (it == chain.states.end()) return false;
    const MarkovState& s = it->second;
    if (!s.accesses.empty() || s.is_initial || s.is_final) return false;
    for (const auto& [target, w] : s.outgoing)
        if (target != id) return true; // needs at least one non-self successor
    return false;
}

inline void bypass_in_place(MarkovChain& chain, int id,
                            SelfLoopPolicy policy = SelfLoopPolicy::Equal) {
    auto it = chain.states.find(id);
    if (it == chain.states.end()) throw std::logic_error("bypass: no such state");
    MarkovState& s = it->second;
    if (!s.accesses.empty()) throw std::logic_error("bypass: state is not empty");
    if (s.is_initial || s.is_final) throw std::logic_error("bypass: state is initial or final");
    if (!is_bypassable(chain, id))
        throw std::logic_error("bypass: state has no successor other than itself");

    auto self = s.outgoing.find(id);
    if (self != s.outgoing.end()) {
        double w = self->second;
        s.outgoing.erase(self);
        if (policy == SelfLoopPolicy::Equal) {
            double share = w / static_cast<double>(s.outgoing.size());
            for (auto& [target, weight] : s.outgoing) weight += share;
        } else {
            for (auto& [target, weight] : s.outgoing) weight += w * weight / (1.0 - w);
        }
    }

    for (auto& [pid, pred] : chain.states) {
        if (pid == id) continue;
        auto in = pred.outgoing.find(id);
        if (in == pred.outgoing.end()) continue;
        double a = in->second;
        pred.outgoing.erase(in);
        for (const auto& [target, b] : s.outgoing) pred.outgoing[target] += a * b;

        bool pruned = false;
        for (auto e = pred.outgoing.begin(); e != pred.outgoing.end();) {
            if (e->second < kWeightDust) {
                e = pred.outgoing.erase(e);
                pruned = true;
            } else {
                ++e;
            }
        }
        if (pruned && !pred.outgoing.empty()) {
            double sum = 0.0;
            for (const auto& [target, w] : pred.outgoing) sum += w;
            for (auto& [target, w] : pred.outgoing) w /= sum;
        }
    }
    chain.states.erase(id);
}

inline MarkovChain bypass(const MarkovChain& chain, int id,
                          SelfLoopPolicy policy = SelfLoopPolicy::Equal) {
    MarkovChain out = chain;
    bypass_in_place(out, id, policy);
    return out;
}

// Bypasses all empty non-initial/non-final states, in ascending id order for
// determinism. States whose only outgoing edge is a self-loop cannot be
// bypassed (the redistribution would divide by zero); they are retained and
// surface via retained_empty_states().
inline MarkovChain compress(const MarkovChain& chain,
                            SelfLoopPolicy policy = SelfLoopPolicy::Equal) {
    MarkovChain out = chain;
    std::vector<int> candidates;
    for (const auto& [id, state] : out.states) {
        if (state.accesses.empty() && !state.is_initial && !state.is_final)
            candidates.push_back(id);
    }
    for (int id : candidates) {
        if (is_bypassable(out, id)) bypass_in_place(out, id, policy);
    }
    return out;
}

// Empty non-initial/non-final states surviving compression (only-self-loop
// successors). Reported in the build manifest.
inline std::vector<int> retained_empty_states(const MarkovChain& chain) {
    std::vector<int> out;
    for (const auto& [id, state] : chain.states) {
        if (state.accesses.empty() && !state.is_initial && !state.is_final) out.push_back(id);
    }
    return out;
}

inline int total_accesses(const MarkovChain& chain) {
    int n = 0;
    for (const auto& [id, state] : chain.states) n += static_cast<int>(state.accesses.size());
    return n;
}

// ---------------------------------------------------------------------------
// JSON model files. Schema:
//   { "method": str, "initial": int, "finals": [int],
//     "states": [ { "id": int,
//                   "accesses": [{"class": str, "field": str, "type": str}],
//                   "transitions": [{"target": int, "weight": float}] } ] }
// Weights round-trip exactly (shortest-representation doubles).
// ---------------------------------------------------------------------------

inline std::string model_to_json(const MarkovChain& chain) {
    nlohmann::ordered_json doc;
    doc["method"] = chain.method;
    doc["initial"] = chain.initial;
    std::vector<int> finals = chain.finals;
    std::sort(finals.begin(), finals.end());
    doc["finals"] = finals;
    doc["states"] = nlohmann::ordered_json::array();
    for (const auto& [id, state] : chain.states) {
        nlohmann::ordered_json js;
        js["id"] = id;
        js["accesses"] = nlohmann::ordered_json::array();
        for (const auto& acc : state.accesses) {
            js["accesses"].push_back(
                {{"class", acc.class_name}, {"field", acc.field_name}, {"type", acc.value_type}});
        }
        js["transitions"] = nlohmann::ordered_json::array();
        for (const auto& [target, weight] : state.outgoing) {
            js["transitions"].push_back({{"target", target}, {"weight", weight}});
        }
        doc["states"].push_back(std::move(js));
    }
    return doc.dump(2) + "\n";
}

inline MarkovChain model_from_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("malformed model JSON: ") + e.what());
    }
    auto require = [&](const nlohmann::json& obj, const char* key) -> const nlohmann::json& {
        if (!obj.is_object() || !obj.contains(key))
            throw InputError(std::string("model schema: missing '") + key + "'");
        return obj.at(key);
    };

    MarkovChain chain;
    const auto& method = require(doc, "method");
    if (!method.is_string()) throw InputError("model schema: 'method' must be a string");
    chain.method = method.get<std::string>();
    const auto& initial = require(doc, "initial");
    if (!initial.is_number_integer()) throw InputError("model schema: 'initial' must be an integer");
    chain.initial = initial.get<int>();
    const auto& finals = require(doc, "finals");
    if (!finals.is_array()) throw InputError("model schema: 'finals' must be an array");
    for (const auto& f : finals) {
        if (!f.is_number_integer()) throw InputError("model schema: final ids must be integers");
        chain.finals.push_back(f.get<int>());
    }
    const auto& states = require(doc, "states");
    if (!states.is_array()) throw InputError("model schema: 'states' must be an array");
    for (const auto& js : states) {
        MarkovState state;
        const auto& id = require(js, "id");
        if (!id.is_number_integer()) throw InputError("model schema: state 'id' must be an integer");
        state.id = id.get<int>();
        for (const auto& ja : require(js, "accesses")) {
            OOAccess acc;
            acc.class_name = require(ja, "class").get<std::string>();
            acc.field_name = require(ja, "field").get<std::string>();
            acc.value_type = require(ja, "type").get<std::string>();
            if (acc.class_name.empty() || acc.field_name.empty() || acc.value_type.empty())
                throw InputError("model schema: access fields must be non-empty");
            state.accesses.push_back(std::move(acc));
        }
        for (const auto& jt : require(js, "transitions")) {
            int target = require(jt, "target").get<int>();
            double weight = require(jt, "weight").get<double>();
            if (!std::isfinite(weight) || weight <= 0.0)
                throw InputError("model schema: transition weights must be positive and finite");
            if (!state.outgoing.emplace(target, weight).second)
                throw InputError("model schema: duplicate transition target " +
                                 std::to_string(target) + " in state " + std::to_string(state.id));
        }
        if (chain.states.count(state.id))
            throw InputError("model schema: duplicate state id " + std::to_string(state.id));
        chain.states[state.id] = std::move(state);
    }

    auto pos = chain.states.find(chain.initial);
    if (pos == chain.states.end()) throw InputError("model schema: initial state not present");
    pos->second.is_initial = true;
    for (int f : chain.finals) {
        auto fit = chain.states.find(f);
        if (fit == chain.states.end()) throw InputError("model schema: final state not present");
        fit->second.is_final = true;
    }

    for (const auto& [id, state] : chain.states) {
        if (state.outgoing.empty()) continue;
        double sum = 0.0;
        for (const auto& [target, w] : state.outgoing) {
            if (!chain.states.count(target))
                throw InputError("model schema: transition to unknown state " +
                                 std::to_string(target));
            sum += w;
        }
        if (std::abs(sum - 1.0) > 1e-6)
            throw InputError("model state " + std::to_string(id) +
                             " transition weights are not stochastic (sum " + format_double(sum) +
                             ")");
    }

    std::set<int> reachable{chain.initial};
    std::vector<int> work{chain.initial};
    while (!work.empty()) {
        int id = work.back();
        work.pop_back();
        for (const auto& [target, w] : chain.states.at(id).outgoing)
            if (reachable.insert(target).second) work.push_back(target);
    }
    for (const auto& [id, state] : chain.states) {
        if (!reachable.count(id) && !state.is_final)
            throw InputError("model schema: state " + std::to_string(id) +
                             " unreachable from initial");
    }
    return chain;
}

} // namespace oopred
