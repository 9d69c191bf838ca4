#ifndef FLAGDECK_FACE_HPP
#define FLAGDECK_FACE_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

#include "error.hpp"

namespace flagdeck {

using VertexId = std::uint32_t;

/// Ground sets are capped at 64 vertices so that every face is one word.
inline constexpr VertexId kMaxVertices = 64;

inline void check_vertex(VertexId v)
{
    if (v >= kMaxVertices)
        throw Error("vertex id " + std::to_string(v) +
                    " out of range: ground sets are limited to ids 0..63");
}

/**
 * A face is a finite set of vertex ids stored as a 64-bit mask.
 *
 * Value equality is set equality. The canonical total order compares the
 * sorted vertex tuples lexicographically, so {0,1} < {0,1,2} < {0,2} < {1}.
 */
class Face {
public:
    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t bits) : bits_(bits) {}

    Face(std::initializer_list<VertexId> vertices)
    {
        for (VertexId v : vertices) {
            check_vertex(v);
            if (bits_ & bit(v))
                throw Error("duplicate vertex " + std::to_string(v) + " in face");
            bits_ |= bit(v);
        }
    }

    static Face from_vertices(const std::vector<VertexId>& vertices)
    {
        Face f;
        for (VertexId v : vertices) {
            check_vertex(v);
            if (f.bits_ & bit(v))
                throw Error("duplicate vertex " + std::to_string(v) + " in face");
            f.bits_ |= bit(v);
        }
        return f;
    }

    static constexpr Face single(VertexId v) { return Face(bit(v)); }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr int size() const noexcept { return std::popcount(bits_); }
    constexpr int dim() const noexcept { return size() - 1; }
    constexpr bool empty() const noexcept { return bits_ == 0; }

    constexpr bool contains(VertexId v) const noexcept
    {
        return v < kMaxVertices && (bits_ & bit(v)) != 0;
    }
    constexpr bool subset_of(Face other) const noexcept
    {
        return (bits_ & ~other.bits_) == 0;
    }
    constexpr bool disjoint(Face other) const noexcept
    {
        return (bits_ & other.bits_) == 0;
    }

    constexpr Face with(VertexId v) const noexcept { return Face(bits_ | bit(v)); }
    constexpr Face without(VertexId v) const noexcept { return Face(bits_ & ~bit(v)); }

    constexpr VertexId min_vertex() const noexcept
    {
        return static_cast<VertexId>(std::countr_zero(bits_));
    }
    constexpr VertexId max_vertex() const noexcept
    {
        return static_cast<VertexId>(63 - std::countl_zero(bits_));
    }

    std::vector<VertexId> vertices() const
    {
        std::vector<VertexId> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(static_cast<VertexId>(std::countr_zero(b)));
        return out;
    }

    /// Calls fn(sub) for every subset of this face, including the empty set
    /// and the face itself.
    template <typename Fn>
    void for_each_subset(Fn&& fn) const
    {
        std::uint64_t sub = bits_;
        while (true) {
            fn(Face(sub));
            if (sub == 0)
                break;
            sub = (sub - 1) & bits_;
        }
    }

    std::string to_string() const
    {
        std::string s = "{";
        bool first = true;
        for (VertexId v : vertices()) {
            if (!first)
                s += ",";
            s += std::to_string(v);
            first = false;
        }
        return s + "}";
    }

    friend constexpr Face operator|(Face a, Face b) noexcept { return Face(a.bits_ | b.bits_); }
    friend constexpr Face operator&(Face a, Face b) noexcept { return Face(a.bits_ & b.bits_); }
    friend constexpr Face operator-(Face a, Face b) noexcept { return Face(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(Face a, Face b) noexcept = default;

    /// Lexicographic order on sorted vertex tuples.
    friend constexpr bool operator<(Face a, Face b) noexcept
    {
        const std::uint64_t x = a.bits_ ^ b.bits_;
        if (x == 0)
            return false;
        const int w = std::countr_zero(x);
        // Below w both tuples agree. The one holding w is smaller unless the
        // other one has run out of elements.
        if (a.bits_ & (std::uint64_t{1} << w))
            return (b.bits_ >> w) != 0;
        return (a.bits_ >> w) == 0;
    }

private:
    static constexpr std::uint64_t bit(VertexId v) { return std::uint64_t{1} << v; }

    std::uint64_t bits_ = 0;
};

/// Orders faces by size first and then lexicographically; used for face bases.
struct BySizeThenLex {
    bool operator()(Face a, Face b) const noexcept
    {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

} // namespace flagdeck

template <>
struct std::hash<flagdeck::Face> {
    std::size_t operator()(flagdeck::Face f) const noexcept
    {
        return std::hash<std::uint64_t>{}(f.bits() * 0x9E3779B97F4A7C15ull);
    }
};

#endif
