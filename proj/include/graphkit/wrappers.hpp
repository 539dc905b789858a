#pragma once

#include <cstddef>
#include <utility>

#include "graphkit/errors.hpp"

namespace graphkit {

/// Wraps any iterator with a predicate; items failing it are skipped by the
/// successor step. Creation keeps the initial position as-is, so a caller
/// wanting a filtered head steps once if the head fails the predicate.
template <class It, class Pred>
class filter_iterator {
public:
  using inner_type = It;

  filter_iterator(It it, Pred pred) : it_(std::move(it)), pred_(std::move(pred)) {}

  bool valid() const { return it_.valid(); }
  bool eol() const { return !valid(); }
  const It& base() const { return it_; }

  auto get_node() const { return it_.get_node(); }
  auto get_edge() const { return it_.get_edge(); }

  filter_iterator& operator++() {
    if (!valid()) throw usage_error("filter_iterator: succ on invalid iterator");
    do {
      ++it_;
    } while (it_.valid() && !pred_(it_));
    return *this;
  }

  friend bool operator==(const filter_iterator& a, const filter_iterator& b) {
    return a.it_ == b.it_;
  }

private:
  It it_;
  Pred pred_;
};

template <class It, class Pred>
filter_iterator(It, Pred) -> filter_iterator<It, Pred>;

/// Wraps any iterator with an observer that is told about creation and
/// every successful succ (one that lands on a valid item). The observer is
/// held by reference so state such as counters accumulates across copies of
/// the sequence position.
template <class It, class Obs>
class observer_iterator {
public:
  observer_iterator(It it, Obs& obs) : it_(std::move(it)), obs_(&obs) {
    obs_->notify_creation(it_);
  }

  bool valid() const { return it_.valid(); }
  bool eol() const { return !valid(); }
  const It& base() const { return it_; }

  auto get_node() const { return it_.get_node(); }
  auto get_edge() const { return it_.get_edge(); }

  observer_iterator& operator++() {
    if (!valid()) throw usage_error("observer_iterator: succ on invalid iterator");
    ++it_;
    if (it_.valid()) obs_->notify_succ(it_);
    return *this;
  }

  friend bool operator==(const observer_iterator& a, const observer_iterator& b) {
    return a.it_ == b.it_;
  }

private:
  It it_;
  Obs* obs_;
};

/// Counts successor steps; the classic operation-counting observer.
class counting_observer {
public:
  template <class It>
  void notify_creation(const It&) {
    counter_ = 0;
  }
  template <class It>
  void notify_succ(const It&) {
    ++counter_;
  }
  std::size_t counter() const { return counter_; }

private:
  std::size_t counter_ = 0;
};

/// Single-attribute adapter: pairs an iterator with one data accessor so the
/// position dereferences to that attribute, STL style.
template <class It, class DA>
class attribute_iterator {
public:
  attribute_iterator(It it, DA da) : it_(std::move(it)), da_(std::move(da)) {}

  bool valid() const { return it_.valid(); }
  auto value() const { return da_.get(it_); }
  auto operator*() const { return value(); }

  const It& base() const { return it_; }

  attribute_iterator& operator++() {
    ++it_;
    return *this;
  }

  friend bool operator==(const attribute_iterator& a, const attribute_iterator& b) {
    return a.it_ == b.it_;
  }

private:
  It it_;
  DA da_;
};

}  // namespace graphkit
