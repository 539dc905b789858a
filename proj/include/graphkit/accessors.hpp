#pragma once

#include <type_traits>
#include <utility>

#include "graphkit/errors.hpp"

namespace graphkit {

// Object accessors select which facet of an iterator an attribute hangs off.
// Adjacency iterators carry both a node and an edge, so the choice is fixed
// when the data accessor is built, not at access time.

struct node_facet {
  template <class It>
  static auto object(const It& it) {
    return it.get_node();
  }
};

struct edge_facet {
  template <class It>
  static auto object(const It& it) {
    return it.get_edge();
  }
};

/// Attribute lives in an external map ("handler"): anything with operator[]
/// over the facet's handle type and a value_type typedef. Copies of the
/// accessor share the handler.
template <class Handler, class Facet = node_facet>
class handler_accessor {
public:
  using value_type = typename Handler::value_type;

  explicit handler_accessor(Handler& handler) : handler_(&handler) {}

  template <class It>
  value_type get(const It& it) const {
    return (*handler_)[Facet::object(it)];
  }
  template <class It>
  void set(const It& it, value_type value) const {
    (*handler_)[Facet::object(it)] = value;
  }

  Handler& handler() const { return *handler_; }

private:
  Handler* handler_;
};

template <class Handler>
auto node_da(Handler& h) {
  return handler_accessor<Handler, node_facet>(h);
}
template <class Handler>
auto edge_da(Handler& h) {
  return handler_accessor<Handler, edge_facet>(h);
}

/// Attribute is one field of a record attached to the item. The handler maps
/// the facet's handle to the record; get and set target the same field.
template <class Handler, class Record, class T, class Facet = node_facet>
class member_accessor {
public:
  using value_type = T;

  member_accessor(Handler& handler, T Record::*field) : handler_(&handler), field_(field) {}

  template <class It>
  value_type get(const It& it) const {
    return (*handler_)[Facet::object(it)].*field_;
  }
  template <class It>
  void set(const It& it, value_type value) const {
    (*handler_)[Facet::object(it)].*field_ = value;
  }

private:
  Handler* handler_;
  T Record::*field_;
};

template <class Facet = node_facet, class Handler, class Record, class T>
auto member_da(Handler& h, T Record::*field) {
  return member_accessor<Handler, Record, T, Facet>(h, field);
}

/// Attribute is computed on demand from the item itself. Read-only: there is
/// no set member, so writable_accessor rejects it at compile time.
template <class F, class Facet = node_facet>
class computed_accessor {
public:
  explicit computed_accessor(F fn) : fn_(std::move(fn)) {}

  template <class It>
  auto get(const It& it) const {
    return fn_(Facet::object(it));
  }

private:
  F fn_;
};

template <class Facet = node_facet, class F>
auto computed_da(F fn) {
  return computed_accessor<F, Facet>(std::move(fn));
}

/// Attribute is the same constant for every item. Read-only by definition.
template <class T>
class constant_accessor {
public:
  using value_type = T;
  explicit constant_accessor(T cval) : cval_(std::move(cval)) {}

  template <class It>
  value_type get(const It&) const {
    return cval_;
  }

private:
  T cval_;
};

/// Edge attribute computed from two source accessors, one reading the
/// source-node facet and one the edge facet. The calculator combines
/// (source-node value, target-node value) into the edge value; read-only.
template <class SrcDA, class TgtDA, class Calc>
class calc_accessor {
public:
  calc_accessor(SrcDA s, TgtDA t, Calc calc) : s_(std::move(s)), t_(std::move(t)), calc_(std::move(calc)) {}

  template <class It>
  auto get(const It& it) const {
    return calc_(s_.get(it), t_.get(it));
  }

private:
  SrcDA s_;
  TgtDA t_;
  Calc calc_;
};

template <class SrcDA, class TgtDA, class Calc>
auto calc_da(SrcDA s, TgtDA t, Calc calc) {
  return calc_accessor<SrcDA, TgtDA, Calc>(std::move(s), std::move(t), std::move(calc));
}

/// Decorates an accessor with a bottom and a top value so algorithms can
/// speak of "unreached" and "absent" without numeric-limits assumptions
/// about the attribute type.
template <class DA>
class bounded_accessor {
public:
  using value_type = typename DA::value_type;
  value_type value_null;
  value_type value_max;

  bounded_accessor(DA da, value_type null_val, value_type max_val)
      : value_null(std::move(null_val)), value_max(std::move(max_val)), da_(std::move(da)) {}

  template <class It>
  value_type get(const It& it) const {
    return da_.get(it);
  }
  template <class It>
  void set(const It& it, value_type value) const {
    da_.set(it, value);
  }

private:
  DA da_;
};

template <class DA, class T>
auto with_bounds(DA da, T null_val, T max_val) {
  return bounded_accessor<DA>(std::move(da), std::move(null_val), std::move(max_val));
}

// Uniform free-function spelling; algorithms use these so any object with
// get/set members of the right shape is an accessor.

template <class DA, class It>
auto get(const DA& da, const It& it) {
  return da.get(it);
}
template <class DA, class It, class T>
void set(const DA& da, const It& it, T&& value) {
  da.set(it, std::forward<T>(value));
}

template <class DA, class It>
concept readable_accessor = requires(const DA& da, const It& it) { da.get(it); };

template <class DA, class It>
concept writable_accessor = readable_accessor<DA, It> && requires(const DA& da, const It& it) {
  da.set(it, std::declval<typename DA::value_type>());
};

}  // namespace graphkit
