#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace cfml {

/*
 * Vector with inline storage for up to N elements, spilling to the heap
 * beyond that. Decode paths scan label entries millions of times on randomly
 * chosen labels; keeping the entries inside the label record saves one
 * pointer chase (and usually one cache miss) per label touched. T must be
 * trivially copyable.
 */
template <typename T, unsigned N>
class InlineVec {
public:
    InlineVec() = default;

    void push_back(const T& v)
    {
        if (size_ < N) {
            inline_[size_++] = v;
            return;
        }
        if (size_ == N) {
            spill_.assign(inline_, inline_ + N);
            spill_.reserve(2 * N);
        }
        spill_.push_back(v);
        ++size_;
    }

    template <typename It>
    void append(It first, It last)
    {
        for (; first != last; ++first)
            push_back(*first);
    }

    size_t size() const { return size_; }
    bool empty() const { return size_ == 0; }

    const T* data() const { return size_ <= N ? inline_ : spill_.data(); }
    const T& operator[](size_t i) const { return data()[i]; }
    const T& back() const { return data()[size_ - 1]; }

    std::span<const T> view() const { return {data(), size_}; }

    bool operator==(const InlineVec& o) const
    {
        if (size_ != o.size_)
            return false;
        const T* a = data();
        const T* b = o.data();
        for (size_t i = 0; i < size_; ++i)
            if (!(a[i] == b[i]))
                return false;
        return true;
    }

private:
    T inline_[N] = {};
    std::uint32_t size_ = 0;
    std::vector<T> spill_; // holds everything once size_ > N
};

} // namespace cfml
