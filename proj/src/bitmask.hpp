/*
 * Copyright 2025-2026 the cheatbot authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <bit>
#include <cstdint>

namespace cheatbot {

/**
 * Fixed two-word vertex mask. Solvers cap the arena at 128 vertices, so two
 * words cover every state table; keeping the type trivially copyable keeps
 * the fixed-point inner loops branch-light.
 */
struct Mask128 {
    uint64_t w0 = 0;
    uint64_t w1 = 0;

    static Mask128 none() { return {}; }
    static Mask128 all(int n) {
        Mask128 m;
        if (n >= 64) {
            m.w0 = ~0ULL;
            m.w1 = (n == 128) ? ~0ULL : ((1ULL << (n - 64)) - 1);
        } else {
            m.w0 = (n == 64) ? ~0ULL : ((1ULL << n) - 1);
        }
        return m;
    }
    static Mask128 bit(int i) {
        Mask128 m;
        if (i < 64)
            m.w0 = 1ULL << i;
        else
            m.w1 = 1ULL << (i - 64);
        return m;
    }

    void set(int i) {
        if (i < 64)
            w0 |= 1ULL << i;
        else
            w1 |= 1ULL << (i - 64);
    }
    void clear(int i) {
        if (i < 64)
            w0 &= ~(1ULL << i);
        else
            w1 &= ~(1ULL << (i - 64));
    }
    bool test(int i) const { return i < 64 ? (w0 >> i) & 1 : (w1 >> (i - 64)) & 1; }

    bool empty() const { return (w0 | w1) == 0; }
    int count() const { return std::popcount(w0) + std::popcount(w1); }

    Mask128 operator&(Mask128 o) const { return {w0 & o.w0, w1 & o.w1}; }
    Mask128 operator|(Mask128 o) const { return {w0 | o.w0, w1 | o.w1}; }
    Mask128 operator~() const { return {~w0, ~w1}; }  // callers mask with all(n)
    Mask128& operator&=(Mask128 o) {
        w0 &= o.w0;
        w1 &= o.w1;
        return *this;
    }
    Mask128& operator|=(Mask128 o) {
        w0 |= o.w0;
        w1 |= o.w1;
        return *this;
    }
    bool operator==(const Mask128&) const = default;

    bool intersects(Mask128 o) const { return ((w0 & o.w0) | (w1 & o.w1)) != 0; }
    bool subset_of(Mask128 o) const { return (w0 & ~o.w0) == 0 && (w1 & ~o.w1) == 0; }

    // Lowest set bit; undefined on empty masks.
    int lowest() const { return w0 ? std::countr_zero(w0) : 64 + std::countr_zero(w1); }

    template <typename F>
    void for_each(F&& f) const {
        uint64_t a = w0;
        while (a) {
            f(std::countr_zero(a));
            a &= a - 1;
        }
        uint64_t b = w1;
        while (b) {
            f(64 + std::countr_zero(b));
            b &= b - 1;
        }
    }
};

}  // namespace cheatbot
