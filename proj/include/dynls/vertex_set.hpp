#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <stdexcept>
#include <vector>

#include "types.hpp"

namespace dynls {

// Set of vertices over a fixed universe 0..n-1.
//
// Membership is kept in an intrusive doubly linked list threaded through two
// index arrays, which gives O(1) contains/insert/erase and iteration in
// insertion order. Memory is O(universe) regardless of the set size.
class VertexSet {
 public:
  static constexpr Vertex kNone = static_cast<Vertex>(-1);

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    Vertex operator*() const { return cur_; }
    const_iterator& operator++() {
      cur_ = owner_->next_[cur_];
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& o) const { return cur_ == o.cur_; }
    bool operator!=(const const_iterator& o) const { return cur_ != o.cur_; }

   private:
    friend class VertexSet;
    const_iterator(const VertexSet* owner, Vertex cur) : owner_(owner), cur_(cur) {}
    const VertexSet* owner_ = nullptr;
    Vertex cur_ = kNone;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : prev_(universe, kNone), next_(universe, kNone), in_(universe, 0) {}

  template <typename Range>
  static VertexSet from(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  std::size_t universe() const { return in_.size(); }
  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool contains(Vertex v) const { return v < in_.size() && in_[v] != 0; }

  // Returns false when v was already a member.
  bool insert(Vertex v) {
    check(v);
    if (in_[v]) return false;
    in_[v] = 1;
    prev_[v] = tail_;
    next_[v] = kNone;
    if (tail_ == kNone) {
      head_ = v;
    } else {
      next_[tail_] = v;
    }
    tail_ = v;
    ++size_;
    return true;
  }

  // Returns false when v was not a member.
  bool erase(Vertex v) {
    check(v);
    if (!in_[v]) return false;
    in_[v] = 0;
    if (prev_[v] == kNone) {
      head_ = next_[v];
    } else {
      next_[prev_[v]] = next_[v];
    }
    if (next_[v] == kNone) {
      tail_ = prev_[v];
    } else {
      prev_[next_[v]] = prev_[v];
    }
    prev_[v] = next_[v] = kNone;
    --size_;
    return true;
  }

  void clear() {
    Vertex v = head_;
    while (v != kNone) {
      Vertex nx = next_[v];
      in_[v] = 0;
      prev_[v] = next_[v] = kNone;
      v = nx;
    }
    head_ = tail_ = kNone;
    size_ = 0;
  }

  const_iterator begin() const { return {this, head_}; }
  const_iterator end() const { return {this, kNone}; }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  std::vector<Vertex> sorted() const {
    auto out = to_vector();
    std::sort(out.begin(), out.end());
    return out;
  }

  // Same universe and same members; insertion order is ignored.
  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    if (a.universe() != b.universe() || a.size() != b.size()) return false;
    for (Vertex v : a)
      if (!b.contains(v)) return false;
    return true;
  }

 private:
  void check(Vertex v) const {
    if (v >= in_.size()) throw std::out_of_range("VertexSet: vertex out of range");
  }

  std::vector<Vertex> prev_;
  std::vector<Vertex> next_;
  std::vector<unsigned char> in_;
  Vertex head_ = kNone;
  Vertex tail_ = kNone;
  std::size_t size_ = 0;
};

}  // namespace dynls
