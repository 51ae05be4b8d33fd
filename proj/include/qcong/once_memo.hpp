#pragma once

#include <atomic>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <mutex>

namespace qcong {

/// Thread-safe memo table with once-per-key population.
///
/// Lookups take a short lock to find or create the slot; the value itself is
/// computed outside the lock under std::call_once, so independent keys can be
/// populated concurrently and recursive lookups of other keys do not
/// deadlock. An optional weight budget clears the table when exceeded;
/// callers keep their shared_ptr, so clearing never invalidates a value.
template <typename Key, typename Value>
class OnceMemo {
 public:
  using Weigher = std::function<std::size_t(const Value&)>;

  OnceMemo() = default;
  OnceMemo(std::size_t budget, Weigher weigher) : budget_(budget), weigher_(std::move(weigher)) {}

  template <typename Compute>
  std::shared_ptr<const Value> get(const Key& key, Compute&& compute) {
    std::shared_ptr<Slot> slot;
    {
      std::lock_guard lock(mu_);
      auto& s = table_[key];
      if (!s) s = std::make_shared<Slot>();
      slot = s;
    }
    bool computed_here = false;
    std::call_once(slot->once, [&] {
      slot->value = std::make_shared<const Value>(compute());
      computed_here = true;
    });
    if (computed_here && weigher_) {
      weight_ += weigher_(*slot->value);
      if (budget_ != 0 && weight_ > budget_) clear();
    }
    return slot->value;
  }

  void clear() {
    std::lock_guard lock(mu_);
    table_.clear();
    weight_ = 0;
  }

  std::size_t size() const {
    std::lock_guard lock(mu_);
    return table_.size();
  }

  std::size_t weight() const { return weight_.load(); }

 private:
  struct Slot {
    std::once_flag once;
    std::shared_ptr<const Value> value;
  };

  mutable std::mutex mu_;
  std::map<Key, std::shared_ptr<Slot>> table_;
  std::size_t budget_ = 0;
  Weigher weigher_;
  std::atomic<std::size_t> weight_{0};
};

}  // namespace qcong
