#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace polyexp {

// Raw index vector. Unlike Composition it may be empty or hold zeros, which
// shows up in intermediate oplus chains.
using IndexVector = std::vector<int>;

// Ordered sequence of positive integers (s_1, ..., s_n), n >= 1.
class Composition {
public:
    Composition() = delete;
    Composition(std::initializer_list<int> parts);
    explicit Composition(IndexVector parts);

    const IndexVector& parts() const noexcept { return parts_; }
    int level() const noexcept { return static_cast<int>(parts_.size()); }
    int weight() const noexcept;
    int operator[](std::size_t i) const { return parts_[i]; }
    int front() const { return parts_.front(); }
    int back() const { return parts_.back(); }

    // (s_2, ..., s_n); empty when level == 1.
    IndexVector tail() const { return IndexVector(parts_.begin() + 1, parts_.end()); }

    // "2,1,3"
    std::string to_string() const;
    static Composition parse(std::string_view text);

    auto operator<=>(const Composition&) const = default;
    bool operator==(const Composition&) const = default;

private:
    IndexVector parts_;
};

std::string to_string(const IndexVector& v);

// Every composition of the given weight, lexicographic by parts.
std::vector<Composition> compositions_of_weight(int weight);
// Every composition with weight in [1, max_weight].
std::vector<Composition> compositions_up_to_weight(int max_weight);

}  // namespace polyexp
