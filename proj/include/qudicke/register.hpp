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
 * Mixed-radix qudit registers.
 *
 * Wire 0 is the least significant digit of the flattened index, so a ket
 * written |m_n ... m_2 m_1> has m_1 on wire 0 and reads right-to-left in
 * amplitude order:
 *
 *     index = d_0 + dim_0 * (d_1 + dim_1 * (d_2 + ...))
 */
#pragma once

#include <initializer_list>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"

namespace qudicke {

struct Wire {
    std::size_t dim;
    std::string label;
};

class QuditRegister {
  public:
    QuditRegister() = default;

    explicit QuditRegister(std::vector<Wire> wires) : wires_(std::move(wires)) {
        init();
    }

    QuditRegister(std::initializer_list<std::size_t> dims)
        : QuditRegister(std::vector<std::size_t>(dims)) {}

    explicit QuditRegister(const std::vector<std::size_t> &dims) {
        wires_.reserve(dims.size());
        for (std::size_t w = 0; w < dims.size(); ++w) {
            wires_.push_back({dims[w], "q" + std::to_string(w)});
        }
        init();
    }

    [[nodiscard]] std::size_t size() const { return wires_.size(); }
    [[nodiscard]] std::size_t dim(std::size_t w) const { return wires_.at(w).dim; }
    [[nodiscard]] const std::string &label(std::size_t w) const {
        return wires_.at(w).label;
    }
    [[nodiscard]] const std::vector<Wire> &wires() const { return wires_; }
    [[nodiscard]] index_t stride(std::size_t w) const {
        require_indexable();
        return strides_.at(w);
    }

    /// Registers past 2^62 amplitudes can be built and inspected but not indexed.
    [[nodiscard]] bool indexable() const { return overflow_wire_.empty(); }

    [[nodiscard]] index_t total_dimension() const {
        require_indexable();
        return total_;
    }

    [[nodiscard]] std::vector<std::size_t> dims() const {
        std::vector<std::size_t> out;
        out.reserve(wires_.size());
        for (const auto &w : wires_) {
            out.push_back(w.dim);
        }
        return out;
    }

    /// Product of the dimensions of wires [0, count).
    [[nodiscard]] index_t prefix_dimension(std::size_t count) const {
        require_indexable();
        return count < wires_.size() ? strides_[count] : total_;
    }

    [[nodiscard]] std::size_t digit(index_t idx, std::size_t w) const {
        return static_cast<std::size_t>((idx / strides_[w]) % wires_[w].dim);
    }

    [[nodiscard]] index_t flatten(std::span<const std::size_t> digits) const {
        detail::require(digits.size() == wires_.size(),
                        "digit count does not match register size");
        require_indexable();
        index_t idx = 0;
        for (std::size_t w = 0; w < wires_.size(); ++w) {
            detail::require(digits[w] < wires_[w].dim,
                            "digit " + std::to_string(digits[w]) +
                                " out of range on wire '" + wires_[w].label +
                                "' of dimension " +
                                std::to_string(wires_[w].dim));
            idx += digits[w] * strides_[w];
        }
        return idx;
    }

    [[nodiscard]] Digits unflatten(index_t idx) const {
        Digits out(wires_.size());
        for (std::size_t w = 0; w < wires_.size(); ++w) {
            out[w] = digit(idx, w);
        }
        return out;
    }

    [[nodiscard]] bool same_shape(const QuditRegister &other) const {
        if (other.size() != size()) {
            return false;
        }
        for (std::size_t w = 0; w < size(); ++w) {
            if (other.dim(w) != dim(w)) {
                return false;
            }
        }
        return true;
    }

  private:
    void init() {
        strides_.resize(wires_.size());
        index_t total = 1;
        for (std::size_t w = 0; w < wires_.size(); ++w) {
            detail::require(wires_[w].dim >= 2,
                            "wire '" + wires_[w].label +
                                "' must have dimension >= 2");
            strides_[w] = total;
            if (overflow_wire_.empty() && total > (index_t{1} << 62) / wires_[w].dim) {
                overflow_wire_ = wires_[w].label;
            }
            total = overflow_wire_.empty() ? total * wires_[w].dim : total;
        }
        total_ = total;
    }

    void require_indexable() const {
        if (!overflow_wire_.empty()) {
            throw CapacityError("register dimension exceeds 2^62 at wire '" +
                                overflow_wire_ + "'");
        }
    }

    std::vector<Wire> wires_;
    std::vector<index_t> strides_;
    index_t total_ = 1;
    std::string overflow_wire_;
};

/// Digits joined with '_' in ket order (highest wire first).
inline std::string ket_string(const Digits &digits) {
    std::string out;
    for (std::size_t w = digits.size(); w-- > 0;) {
        out += std::to_string(digits[w]);
        if (w != 0) {
            out += '_';
        }
    }
    return out;
}

} // namespace qudicke
