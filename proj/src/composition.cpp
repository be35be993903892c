#include "polyexp/composition.hpp"

#include <charconv>
#include <numeric>

#include "polyexp/error.hpp"

namespace polyexp {

namespace {

void validate(const IndexVector& parts) {
    if (parts.empty()) throw DomainError("composition must have at least one part");
    for (int p : parts)
        if (p < 1) throw DomainError("composition parts must be positive, got " + std::to_string(p));
}

void append_compositions(int remaining, IndexVector& prefix, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int first = 1; first <= remaining; ++first) {
        prefix.push_back(first);
        append_compositions(remaining - first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

Composition::Composition(std::initializer_list<int> parts) : parts_(parts) { validate(parts_); }

Composition::Composition(IndexVector parts) : parts_(std::move(parts)) { validate(parts_); }

int Composition::weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Composition::to_string() const { return polyexp::to_string(parts_); }

Composition Composition::parse(std::string_view text) {
    IndexVector parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view field = text.substr(pos, comma - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        int value = 0;
        auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || end != field.data() + field.size())
            throw ParseError("malformed composition '" + std::string(text) + "'");
        if (value < 1) throw ParseError("composition parts must be positive in '" + std::string(text) + "'");
        parts.push_back(value);
        pos = comma + 1;
    }
    return Composition(std::move(parts));
}

std::string to_string(const IndexVector& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<Composition> compositions_of_weight(int weight) {
    std::vector<Composition> out;
    if (weight < 1) return out;
    IndexVector prefix;
    append_compositions(weight, prefix, out);
    return out;
}

std::vector<Composition> compositions_up_to_weight(int max_weight) {
    std::vector<Composition> out;
    for (int w = 1; w <= max_weight; ++w) {
        auto batch = compositions_of_weight(w);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

}  // namespace polyexp
