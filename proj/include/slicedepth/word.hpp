#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "slicedepth/continued_fraction.hpp"

namespace slicedepth {

/// Word over the alphabet {O, E}, stored as a string of 'O' and 'E'
/// characters. The empty word is valid.
using OEWord = std::string;

enum class Rule { InitialE, PairOO, PairEE };

inline const char* rule_name(Rule r) {
    switch (r) {
        case Rule::InitialE: return "initial E";
        case Rule::PairOO: return "pair OO";
        case Rule::PairEE: return "pair EE";
    }
    return "?";
}

/// One rewrite step: the rule applied, the index of the deleted letter
/// (for pairs, of its left letter), and the word it produced.
struct ReductionStep {
    Rule rule = Rule::InitialE;
    std::size_t position = 0;
    OEWord word_after;
};

struct ReductionWitness {
    std::vector<ReductionStep> steps;
};

struct ReductionResult {
    bool accepted = false;
    std::optional<ReductionWitness> witness;
};

inline bool is_oe_word(std::string_view w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == 'O' || c == 'E'; });
}

inline void require_oe_word(std::string_view w) {
    if (!is_oe_word(w)) throw Error("word: letters must be O or E, got \"" + std::string(w) + "\"");
}

/// A word is accepting when it is empty or the single letter O.
inline bool is_terminal(std::string_view w) { return w.empty() || w == "O"; }

/// Word w_k of the knot C(a_1, ..., a_m): reduce each a_i mod 4 into
/// {0, 2}, drop the 0 residues, and map residue 2 to O at odd i and to
/// E at even i (1-based).
inline OEWord build_word(std::span<const Int> coefficients) {
    if (coefficients.size() % 2 != 0) throw OddLengthError();
    OEWord w;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        const Int& a = coefficients[i];
        if (a == 0) throw Error("build_word: coefficients must be nonzero");
        if (a % 2 != 0) throw NotEvenError("build_word: odd coefficient " + a.str());
        Int residue = ((a % 4) + 4) % 4;
        if (residue == 2) w += (i % 2 == 0) ? 'O' : 'E';
    }
    return w;
}

inline OEWord build_word(const std::vector<Int>& coefficients) {
    return build_word(std::span<const Int>(coefficients.data(), coefficients.size()));
}

inline OEWord build_word(const EvenCF& cf) { return build_word(cf.coefficients()); }

/// Words reachable from w by one rule application, in a fixed order:
/// the initial-E deletion first, then pair deletions left to right.
inline std::vector<ReductionStep> successors(const OEWord& w) {
    std::vector<ReductionStep> out;
    if (!w.empty() && w.front() == 'E') out.push_back({Rule::InitialE, 0, w.substr(1)});
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] != w[i + 1]) continue;
        OEWord next = w.substr(0, i) + w.substr(i + 2);
        out.push_back({w[i] == 'O' ? Rule::PairOO : Rule::PairEE, i, std::move(next)});
    }
    return out;
}

/// Decides whether some sequence of rule applications turns `word`
/// into the empty word or the single letter O. Breadth-first search
/// over the reachable words; every rule shortens the word, so the
/// search space is finite. Returns a shortest witness when accepted.
inline ReductionResult reduces(const OEWord& word) {
    require_oe_word(word);
    if (is_terminal(word)) return {true, ReductionWitness{}};

    std::unordered_map<OEWord, std::pair<OEWord, ReductionStep>> parent;
    std::unordered_set<OEWord> visited{word};
    std::deque<OEWord> queue{word};
    while (!queue.empty()) {
        OEWord u = std::move(queue.front());
        queue.pop_front();
        for (ReductionStep& s : successors(u)) {
            if (visited.count(s.word_after)) continue;
            OEWord reached = s.word_after;
            visited.insert(reached);
            parent.emplace(reached, std::make_pair(u, std::move(s)));
            if (is_terminal(reached)) {
                ReductionWitness witness;
                OEWord cur = reached;
                while (cur != word) {
                    auto& [prev, step] = parent.at(cur);
                    witness.steps.push_back(step);
                    cur = prev;
                }
                std::reverse(witness.steps.begin(), witness.steps.end());
                return {true, std::move(witness)};
            }
            queue.push_back(std::move(reached));
        }
    }
    return {false, std::nullopt};
}

/// All irreducible words reachable from `word` (irreducible: no rule
/// applies). Exploration oracle for the rewriting system; independent
/// of the search in reduces().
inline std::set<OEWord> normal_forms(const OEWord& word) {
    require_oe_word(word);
    std::unordered_map<OEWord, std::set<OEWord>> memo;
    auto rec = [&memo](auto&& self, const OEWord& u) -> const std::set<OEWord>& {
        auto it = memo.find(u);
        if (it != memo.end()) return it->second;
        std::set<OEWord> acc;
        std::vector<ReductionStep> succ = successors(u);
        if (succ.empty()) {
            acc.insert(u);
        } else {
            for (const ReductionStep& s : succ) {
                const std::set<OEWord>& sub = self(self, s.word_after);
                acc.insert(sub.begin(), sub.end());
            }
        }
        return memo.emplace(u, std::move(acc)).first->second;
    };
    return rec(rec, word);
}

/// Replays a witness from `start`, checking that every step applies
/// the named rule at the named position and reproduces the recorded
/// word, and that the final word is accepting.
inline bool replay_witness(const OEWord& start, const ReductionWitness& witness) {
    if (!is_oe_word(start)) return false;
    OEWord cur = start;
    for (const ReductionStep& s : witness.steps) {
        switch (s.rule) {
            case Rule::InitialE:
                if (s.position != 0 || cur.empty() || cur.front() != 'E') return false;
                cur.erase(0, 1);
                break;
            case Rule::PairOO:
                if (s.position + 1 >= cur.size() || cur[s.position] != 'O' ||
                    cur[s.position + 1] != 'O')
                    return false;
                cur.erase(s.position, 2);
                break;
            case Rule::PairEE:
                if (s.position + 1 >= cur.size() || cur[s.position] != 'E' ||
                    cur[s.position + 1] != 'E')
                    return false;
                cur.erase(s.position, 2);
                break;
        }
        if (cur != s.word_after) return false;
    }
    return is_terminal(cur);
}

}  // namespace slicedepth
