#pragma once

#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace twc {

/// Write-once memo table. Values are computed outside the lock, so
/// recursive lookups into other tables never deadlock; a racing duplicate
/// computation is discarded in favour of the first insert.
template <class Key, class Value>
class Memo {
 public:
  template <class Compute>
  const Value &get(const Key &key, Compute &&compute) {
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    Value value = compute();
    std::lock_guard lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

  void insert(const Key &key, Value value) {
    std::lock_guard lock(mutex_);
    table_.emplace(key, std::move(value));
  }

  std::map<Key, Value> snapshot() const {
    std::lock_guard lock(mutex_);
    return table_;
  }

  std::vector<Key> keys() const {
    std::lock_guard lock(mutex_);
    std::vector<Key> out;
    for (const auto &entry : table_) out.push_back(entry.first);
    return out;
  }

 private:
  mutable std::mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace twc
