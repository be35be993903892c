#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>

namespace polyexp {

// Entry bound for every memo table, read once from POLYEXP_CACHE_LIMIT.
std::size_t cache_limit();

// Thread-safe memo table. Once the bound is reached the table is flushed, so
// memory stays bounded during long table builds.
template <class Key, class Value>
class BoundedCache {
public:
    std::optional<Value> find(const Key& key) const {
        std::lock_guard lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }

    void insert(const Key& key, const Value& value) {
        std::lock_guard lock(mutex_);
        if (map_.size() >= cache_limit()) map_.clear();
        map_.insert_or_assign(key, value);
    }

    template <class Fn>
    Value get_or_compute(const Key& key, Fn&& compute) {
        if (auto hit = find(key)) return *hit;
        Value v = compute();
        insert(key, v);
        return v;
    }

    std::size_t size() const {
        std::lock_guard lock(mutex_);
        return map_.size();
    }

    void clear() {
        std::lock_guard lock(mutex_);
        map_.clear();
    }

private:
    mutable std::mutex mutex_;
    std::map<Key, Value> map_;
};

}  // namespace polyexp
