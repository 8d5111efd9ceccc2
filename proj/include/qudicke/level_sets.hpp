// Copyright 2026 The qudicke Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Level sets A^i(k): vectors a with 0 <= a_j <= k_j and sum a = i, labeled
 * in reverse lexicographic order (label 0 is the lexicographically largest).
 */
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "core.hpp"

namespace qudicke {

using Occupation = std::vector<std::size_t>;

class LevelSetIndex {
  public:
    explicit LevelSetIndex(Occupation kvec) : kvec_(std::move(kvec)) {
        detail::require(!kvec_.empty(), "level sets: empty occupation vector");
        n_ = std::accumulate(kvec_.begin(), kvec_.end(), std::size_t{0});
        levels_.resize(n_ + 1);
        Occupation cur(kvec_.size(), 0);
        enumerate(0, 0, cur);
        labels_.resize(n_ + 1);
        for (std::size_t i = 0; i <= n_; ++i) {
            std::sort(levels_[i].begin(), levels_[i].end(), std::greater<>());
            for (std::size_t p = 0; p < levels_[i].size(); ++p) {
                labels_[i].emplace(levels_[i][p], p);
            }
        }
    }

    [[nodiscard]] const Occupation &kvec() const { return kvec_; }
    [[nodiscard]] std::size_t n() const { return n_; }
    [[nodiscard]] std::size_t d() const { return kvec_.size(); }

    /// Elements of A^i in label order.
    [[nodiscard]] const std::vector<Occupation> &level(std::size_t i) const {
        return levels_.at(i);
    }

    /// D^i(k) = |A^i(k)|.
    [[nodiscard]] std::size_t cardinality(std::size_t i) const {
        return levels_.at(i).size();
    }

    [[nodiscard]] bool contains(std::size_t i, const Occupation &a) const {
        return i < labels_.size() && labels_[i].count(a) != 0;
    }

    /// J^i(a); throws if a is not in A^i.
    [[nodiscard]] std::size_t label(std::size_t i, const Occupation &a) const {
        detail::require(contains(i, a), "vector is not in level set " +
                                            std::to_string(i));
        return labels_[i].at(a);
    }

    /// Bond dimension D^{floor(n/2)}(k).
    [[nodiscard]] std::size_t chi() const { return cardinality(n_ / 2); }

    [[nodiscard]] std::size_t max_cardinality() const {
        std::size_t m = 0;
        for (const auto &l : levels_) {
            m = std::max(m, l.size());
        }
        return m;
    }

  private:
    void enumerate(std::size_t pos, std::size_t sum, Occupation &cur) {
        if (pos == kvec_.size()) {
            levels_[sum].push_back(cur);
            return;
        }
        for (std::size_t v = 0; v <= kvec_[pos]; ++v) {
            cur[pos] = v;
            enumerate(pos + 1, sum + v, cur);
        }
        cur[pos] = 0;
    }

    Occupation kvec_;
    std::size_t n_ = 0;
    std::vector<std::vector<Occupation>> levels_;
    std::vector<std::map<Occupation, std::size_t>> labels_;
};

inline LevelSetIndex build_level_sets(const Occupation &kvec) {
    return LevelSetIndex(kvec);
}

struct PropositionWitness {
    std::size_t i;
    Occupation a;
    std::size_t label_a;       ///< J^i(a)
    std::size_t label_shifted; ///< J^{i+1}(a + e_0)
    std::string violated;
};

struct PropositionCheck {
    bool holds = true;
    std::size_t pairs_checked = 0;
    std::size_t equality_cases = 0;
    std::size_t strict_cases = 0;
    std::optional<PropositionWitness> counterexample;
};

/**
 * Brute-force check of J^{i+1}(a + e_0) <= J^i(a) for every a in A^i with
 * a + e_0 in A^{i+1}; equality is required when i+1 <= k_0 and strict
 * inequality otherwise.
 */
inline PropositionCheck verify_level_set_proposition(const Occupation &kvec) {
    const LevelSetIndex idx(kvec);
    PropositionCheck out;
    for (std::size_t i = 0; i < idx.n(); ++i) {
        for (const auto &a : idx.level(i)) {
            Occupation shifted = a;
            ++shifted[0];
            if (!idx.contains(i + 1, shifted)) {
                continue;
            }
            ++out.pairs_checked;
            const auto ja = idx.label(i, a);
            const auto js = idx.label(i + 1, shifted);
            const bool equality_regime = i + 1 <= kvec[0];
            std::string violated;
            if (js > ja) {
                violated = "J^{i+1}(a+e0) <= J^i(a)";
            } else if (equality_regime && js != ja) {
                violated = "equality when i+1 <= k_0";
            } else if (!equality_regime && js >= ja) {
                violated = "strict inequality when i+1 > k_0";
            }
            if (!violated.empty()) {
                out.holds = false;
                if (!out.counterexample) {
                    out.counterexample = PropositionWitness{i, a, ja, js, violated};
                }
                continue;
            }
            (equality_regime ? out.equality_cases : out.strict_cases) += 1;
        }
    }
    return out;
}

} // namespace qudicke
