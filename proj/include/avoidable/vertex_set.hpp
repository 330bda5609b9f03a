#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <vector>

namespace avoidable {

using VertexId = std::uint32_t;

// Bit set over the vertex universe [0, universe). Iteration is ascending.
class VertexSet {
public:
    class const_iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = VertexId;
        using difference_type = std::ptrdiff_t;
        using pointer = const VertexId*;
        using reference = VertexId;

        const_iterator() = default;
        const_iterator(const VertexSet* set, std::size_t pos) : set_(set), pos_(pos) { }

        VertexId operator*() const { return static_cast<VertexId>(pos_); }
        const_iterator& operator++()
        {
            pos_ = set_->next_from(pos_ + 1);
            return *this;
        }
        const_iterator operator++(int)
        {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

    private:
        const VertexSet* set_ = nullptr;
        std::size_t pos_ = 0;
    };

    VertexSet() = default;
    explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) { }
    VertexSet(std::size_t universe, std::initializer_list<VertexId> members) : VertexSet(universe)
    {
        for (auto v : members)
            insert(v);
    }

    static VertexSet full(std::size_t universe)
    {
        VertexSet s(universe);
        for (auto& w : s.words_)
            w = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    template <typename Range>
    static VertexSet from_range(std::size_t universe, const Range& members)
    {
        VertexSet s(universe);
        for (auto v : members)
            s.insert(static_cast<VertexId>(v));
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(VertexId v) const
    {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1u);
    }
    void insert(VertexId v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
    void erase(VertexId v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    void clear()
    {
        for (auto& w : words_)
            w = 0;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    std::optional<VertexId> first() const
    {
        auto p = next_from(0);
        if (p >= universe_)
            return std::nullopt;
        return static_cast<VertexId>(p);
    }

    bool intersects(const VertexSet& other) const
    {
        for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }
    bool is_subset_of(const VertexSet& other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto o = i < other.words_.size() ? other.words_[i] : 0;
            if (words_[i] & ~o)
                return false;
        }
        return true;
    }

    VertexSet& operator|=(const VertexSet& other)
    {
        for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
        return *this;
    }
    // set difference
    VertexSet& operator-=(const VertexSet& other)
    {
        for (std::size_t i = 0; i < words_.size() && i < other.words_.size(); ++i)
            words_[i] &= ~other.words_[i];
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    const_iterator begin() const { return {this, next_from(0)}; }
    const_iterator end() const { return {this, universe_}; }

    std::vector<VertexId> to_vector() const
    {
        std::vector<VertexId> out;
        for (auto v : *this)
            out.push_back(v);
        return out;
    }

private:
    std::size_t next_from(std::size_t pos) const
    {
        if (pos >= universe_)
            return universe_;
        std::size_t i = pos >> 6;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << (pos & 63));
        while (true) {
            if (w) {
                auto p = (i << 6) + static_cast<std::size_t>(std::countr_zero(w));
                return p < universe_ ? p : universe_;
            }
            if (++i == words_.size())
                return universe_;
            w = words_[i];
        }
    }

    void trim()
    {
        if (universe_ & 63)
            words_.back() &= (std::uint64_t{1} << (universe_ & 63)) - 1;
    }

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace avoidable
