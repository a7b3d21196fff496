#pragma once

#include <functional>
#include <map>
#include <sstream>
#include <string>

#include "cobar/ring.hpp"

namespace cobar {

// Finitely supported function Key -> Coefficient with zero terms pruned.
// std::map keys give deterministic iteration for printing and comparison.
template <class Key>
class FormalSum {
 public:
  explicit FormalSum(Ring r) : ring_(r) {}

  static FormalSum single(Ring r, const Key& k) {
    FormalSum s(r);
    s.add(k, Coefficient::one(r));
    return s;
  }

  const Ring& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // rvalue overload returns by value so `for (... : f(x).terms())` stays safe
  // in C++20, where the temporary sum would otherwise die before the loop body.
  const std::map<Key, Coefficient>& terms() const& { return terms_; }
  std::map<Key, Coefficient> terms() && { return std::move(terms_); }

  Coefficient coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Coefficient::zero(ring_) : it->second;
  }

  void add(const Key& k, const Coefficient& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FormalSum& operator+=(const FormalSum& o) {
    check_ring(o);
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
  }
  FormalSum& operator-=(const FormalSum& o) {
    check_ring(o);
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
  }
  FormalSum operator+(const FormalSum& o) const { FormalSum s(*this); s += o; return s; }
  FormalSum operator-(const FormalSum& o) const { FormalSum s(*this); s -= o; return s; }

  FormalSum operator*(const Coefficient& c) const {
    FormalSum s(ring_);
    for (const auto& [k, v] : terms_) s.add(k, v * c);
    return s;
  }

  bool operator==(const FormalSum& o) const { return ring_ == o.ring_ && terms_ == o.terms_; }
  bool operator!=(const FormalSum& o) const { return !(*this == o); }

  // Pushes every term through a key-to-sum map, scaling by the term coefficient.
  template <class K2>
  FormalSum<K2> bind(const std::function<FormalSum<K2>(const Key&)>& f) const {
    FormalSum<K2> out(ring_);
    for (const auto& [k, c] : terms_) {
      FormalSum<K2> img = f(k);
      for (const auto& [k2, c2] : img.terms()) out.add(k2, c2 * c);
    }
    return out;
  }

  std::string to_string(const std::function<std::string(const Key&)>& show) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      std::string cs = c.to_string();
      bool neg = !cs.empty() && cs[0] == '-';
      if (first) {
        if (neg) { os << "-"; cs = cs.substr(1); }
      } else {
        os << (neg ? " - " : " + ");
        if (neg) cs = cs.substr(1);
      }
      first = false;
      if (cs == "1") os << show(k);
      else os << cs << "*" << show(k);
    }
    return os.str();
  }

 private:
  void check_ring(const FormalSum& o) const {
    if (ring_ != o.ring_) throw validation_error("ring mismatch in formal sum");
  }
  Ring ring_;
  std::map<Key, Coefficient> terms_;
};

}  // namespace cobar
