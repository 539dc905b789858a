#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "graphkit/errors.hpp"

namespace graphkit {

/// LIFO container with a pop that removes and returns.
template <class T>
class lifo_stack {
public:
  void push(T v) { data_.push_back(std::move(v)); }
  T pop() {
    if (empty()) throw usage_error("lifo_stack: pop on empty stack");
    T v = std::move(data_.back());
    data_.pop_back();
    return v;
  }
  const T& top() const {
    if (empty()) throw usage_error("lifo_stack: top on empty stack");
    return data_.back();
  }
  bool empty() const { return data_.empty(); }
  std::size_t size() const { return data_.size(); }
  void clear() { data_.clear(); }

  /// Bottom-to-top view, for inspection and trace snapshots.
  const std::vector<T>& items() const { return data_; }

private:
  std::vector<T> data_;
};

/// FIFO container with the same removing pop.
template <class T>
class fifo_queue {
public:
  void append(T v) { data_.push_back(std::move(v)); }
  T pop() {
    if (empty()) throw usage_error("fifo_queue: pop on empty queue");
    T v = std::move(data_.front());
    data_.pop_front();
    return v;
  }
  const T& front() const {
    if (empty()) throw usage_error("fifo_queue: front on empty queue");
    return data_.front();
  }
  bool empty() const { return data_.empty(); }
  std::size_t size() const { return data_.size(); }
  void clear() { data_.clear(); }

  const std::deque<T>& items() const { return data_; }

private:
  std::deque<T> data_;
};

/// Binary min-heap with handle-based decrease-key.
///
/// insert returns a stable item handle; decrease_key addresses the item
/// through it. Ties are broken by insertion sequence so extraction order is
/// deterministic. The contract is what algorithms rely on; the heap is just
/// one realization of it and can be swapped for a better one.
template <class Priority, class Payload>
class binary_heap_pq {
public:
  using item_handle = std::int32_t;
  static constexpr item_handle null_item = -1;

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

  item_handle insert(Priority pri, Payload payload) {
    item_handle id;
    if (!free_.empty()) {
      id = free_.back();
      free_.pop_back();
    } else {
      id = static_cast<item_handle>(items_.size());
      items_.emplace_back();
    }
    items_[id] = {std::move(pri), std::move(payload), seq_++, static_cast<std::uint32_t>(heap_.size())};
    heap_.push_back(id);
    sift_up(heap_.size() - 1);
    return id;
  }

  void decrease_key(item_handle id, Priority pri) {
    item& it = checked(id);
    if (pri > it.pri) throw usage_error("binary_heap_pq: decrease_key would increase priority");
    it.pri = std::move(pri);
    sift_up(it.pos);
  }

  const Payload& find_min() const {
    if (empty()) throw usage_error("binary_heap_pq: find_min on empty queue");
    return items_[heap_[0]].payload;
  }
  const Priority& min_priority() const {
    if (empty()) throw usage_error("binary_heap_pq: min_priority on empty queue");
    return items_[heap_[0]].pri;
  }

  Payload extract_min() {
    if (empty()) throw usage_error("binary_heap_pq: extract_min on empty queue");
    item_handle id = heap_[0];
    Payload out = std::move(items_[id].payload);
    remove_at(0);
    free_.push_back(id);
    return out;
  }

private:
  struct item {
    Priority pri{};
    Payload payload{};
    std::uint64_t seq = 0;
    std::uint32_t pos = 0;
  };

  item& checked(item_handle id) {
    if (id < 0 || static_cast<std::size_t>(id) >= items_.size())
      throw usage_error("binary_heap_pq: bad item handle");
    return items_[id];
  }

  bool less(item_handle a, item_handle b) const {
    const item& x = items_[a];
    const item& y = items_[b];
    if (x.pri != y.pri) return x.pri < y.pri;
    return x.seq < y.seq;
  }

  void place(std::size_t pos, item_handle id) {
    heap_[pos] = id;
    items_[id].pos = static_cast<std::uint32_t>(pos);
  }

  void sift_up(std::size_t pos) {
    item_handle id = heap_[pos];
    while (pos > 0) {
      std::size_t parent = (pos - 1) / 2;
      if (!less(id, heap_[parent])) break;
      place(pos, heap_[parent]);
      pos = parent;
    }
    place(pos, id);
  }

  void sift_down(std::size_t pos) {
    item_handle id = heap_[pos];
    for (;;) {
      std::size_t child = 2 * pos + 1;
      if (child >= heap_.size()) break;
      if (child + 1 < heap_.size() && less(heap_[child + 1], heap_[child])) ++child;
      if (!less(heap_[child], id)) break;
      place(pos, heap_[child]);
      pos = child;
    }
    place(pos, id);
  }

  void remove_at(std::size_t pos) {
    item_handle last = heap_.back();
    heap_.pop_back();
    if (pos < heap_.size()) {
      place(pos, last);
      sift_down(pos);
      sift_up(items_[last].pos);
    }
  }

  std::vector<item> items_;
  std::vector<item_handle> heap_;
  std::vector<item_handle> free_;
  std::uint64_t seq_ = 0;
};

}  // namespace graphkit
