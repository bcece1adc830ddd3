#pragma once

#include <list>
#include <map>
#include <mutex>
#include <optional>
#include <shared_mutex>

namespace jacklab {

/// Bounded memo cache with least-recently-used eviction. Lookups take a
/// shared lock; insertion (and the recency bump) is serialized.
template <class Key, class Value>
class LruCache {
public:
    explicit LruCache(std::size_t max_entries = 4096) : max_entries_(max_entries) {}

    std::optional<Value> get(const Key& key) {
        {
            std::shared_lock lock(mutex_);
            auto it = index_.find(key);
            if (it == index_.end()) return std::nullopt;
        }
        std::unique_lock lock(mutex_);
        auto it = index_.find(key);
        if (it == index_.end()) return std::nullopt;
        order_.splice(order_.begin(), order_, it->second.second);
        return it->second.first;
    }

    void put(const Key& key, Value value) {
        std::unique_lock lock(mutex_);
        auto it = index_.find(key);
        if (it != index_.end()) {
            it->second.first = std::move(value);
            order_.splice(order_.begin(), order_, it->second.second);
            return;
        }
        order_.push_front(key);
        index_.emplace(key, std::make_pair(std::move(value), order_.begin()));
        if (index_.size() > max_entries_) {
            index_.erase(order_.back());
            order_.pop_back();
        }
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return index_.size();
    }

private:
    std::size_t max_entries_;
    mutable std::shared_mutex mutex_;
    std::list<Key> order_;
    std::map<Key, std::pair<Value, typename std::list<Key>::iterator>> index_;
};

}  // namespace jacklab
