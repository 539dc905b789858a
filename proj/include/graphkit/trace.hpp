#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace graphkit {

/// Observer that renders a search run as a step table: one line per action
/// with the stack/queue snapshot and the visited set, tab separated.
///
/// Attach it to the stepper after construction so snapshots can read the
/// container; the stepper must not move afterwards.
///
///   step <TAB> action <TAB> container (bottom to top) <TAB> visited
template <class AI>
class search_table_tracer {
public:
  using node_handle = std::remove_cvref_t<decltype(std::declval<AI>().get_node())>;
  using edge_handle = std::remove_cvref_t<decltype(std::declval<AI>().get_edge())>;
  using node_namer = std::function<std::string(node_handle)>;
  using edge_namer = std::function<std::string(edge_handle)>;

  search_table_tracer(std::ostream& os, node_namer nn, edge_namer en)
      : os_(&os), node_name_(std::move(nn)), edge_name_(std::move(en)) {}

  template <class Stepper>
  void attach_stack(const Stepper& s) {
    snapshot_ = [&s] { return s.stack().items(); };
  }
  template <class Stepper>
  void attach_queue(const Stepper& s) {
    snapshot_ = [&s] {
      const auto& q = s.queue().items();
      return std::vector<AI>(q.begin(), q.end());
    };
  }

  void on_seed(const AI& it) {
    discovered_.push_back(it.get_node());
    row("adjacency iterator " + pos(it) + " into stack");
  }
  void on_pop(const AI& it) { row("pop " + pos(it)); }
  void on_valid_check(const AI& it, bool ok) {
    row(pos(it) + " valid? => " + (ok ? "yes" : "no"));
  }
  void on_curr_adj(const AI& from, const AI& to) {
    row("current adjacency iterator of " + pos(from) + " is " + pos(to));
  }
  void on_seen_check(const AI& it, bool seen) {
    if (!seen) discovered_.push_back(it.get_node());
    row(pos(it) + " seen? => " + (seen ? "yes" : "no"));
  }
  void on_append(const AI& it) { row("append " + pos(it) + " to stack"); }
  void on_advance(const AI& before, const AI& after) {
    row("advance(" + pos(before) + ") = " + pos(after));
  }

private:
  std::string pos(const AI& it) const {
    std::string e = it.valid() ? edge_name_(it.get_edge()) : "-";
    return "(" + node_name_(it.get_node()) + "," + e + ")";
  }

  void row(const std::string& action) {
    *os_ << step_++ << '\t' << action << '\t';
    std::vector<AI> items = snapshot_ ? snapshot_() : std::vector<AI>{};
    if (items.empty()) {
      *os_ << '-';
    } else {
      for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) *os_ << ", ";
        *os_ << pos(items[i]);
      }
    }
    *os_ << '\t';
    for (std::size_t i = 0; i < discovered_.size(); ++i) {
      if (i) *os_ << ',';
      *os_ << node_name_(discovered_[i]);
    }
    *os_ << '\n';
  }

  std::ostream* os_;
  node_namer node_name_;
  edge_namer edge_name_;
  std::function<std::vector<AI>()> snapshot_;
  std::vector<node_handle> discovered_;
  std::size_t step_ = 0;
};

}  // namespace graphkit
