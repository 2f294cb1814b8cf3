// Copyright 2026 The omlprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "oml/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

#include "detail/bitset.hpp"
#include "oml/error.hpp"

namespace oml {

namespace {

std::string pair_name(Element a, Element b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

// Greatest element of `candidates` under `data`, if it dominates every other
// candidate. `down_count[x]` is the number of elements below x and picks the
// only possible answer in O(|candidates|).
std::optional<Element> greatest(const OrderData& data, const std::vector<Element>& candidates,
                                const std::vector<std::size_t>& down_count) {
  if (candidates.empty()) return std::nullopt;
  Element best = candidates.front();
  for (Element c : candidates) {
    if (down_count[c] > down_count[best]) best = c;
  }
  for (Element c : candidates) {
    if (!data.at(c, best)) return std::nullopt;
  }
  return best;
}

std::optional<Element> least(const OrderData& data, const std::vector<Element>& candidates,
                             const std::vector<std::size_t>& up_count) {
  if (candidates.empty()) return std::nullopt;
  Element best = candidates.front();
  for (Element c : candidates) {
    if (up_count[c] > up_count[best]) best = c;
  }
  for (Element c : candidates) {
    if (!data.at(best, c)) return std::nullopt;
  }
  return best;
}

struct Counts {
  std::vector<std::size_t> down;
  std::vector<std::size_t> up;
};

Counts count_bounds(const OrderData& data) {
  Counts counts{std::vector<std::size_t>(data.size, 0), std::vector<std::size_t>(data.size, 0)};
  for (Element a = 0; a < data.size; ++a) {
    for (Element b = 0; b < data.size; ++b) {
      if (data.at(a, b)) {
        ++counts.down[b];
        ++counts.up[a];
      }
    }
  }
  return counts;
}

std::optional<Element> glb(const OrderData& data, const Counts& counts, Element a, Element b) {
  std::vector<Element> lower;
  for (Element c = 0; c < data.size; ++c) {
    if (data.at(c, a) && data.at(c, b)) lower.push_back(c);
  }
  return greatest(data, lower, counts.down);
}

std::optional<Element> lub(const OrderData& data, const Counts& counts, Element a, Element b) {
  std::vector<Element> upper;
  for (Element c = 0; c < data.size; ++c) {
    if (data.at(a, c) && data.at(b, c)) upper.push_back(c);
  }
  return least(data, upper, counts.up);
}

LawReport check_partial_order(const OrderData& data) {
  const auto n = static_cast<Element>(data.size);
  for (Element a = 0; a < n; ++a) {
    if (!data.at(a, a)) return LawReport::violation(Law::PartialOrder, {a}, "not reflexive");
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (a != b && data.at(a, b) && data.at(b, a)) {
        return LawReport::violation(Law::PartialOrder, {a, b}, "not antisymmetric");
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!data.at(a, b)) continue;
      for (Element c = 0; c < n; ++c) {
        if (data.at(b, c) && !data.at(a, c)) {
          return LawReport::violation(Law::PartialOrder, {a, b, c}, "not transitive");
        }
      }
    }
  }
  return LawReport::pass(Law::PartialOrder);
}

LawReport check_bounds(const OrderData& data) {
  if (data.bottom >= data.size || data.top >= data.size) {
    return LawReport::violation(Law::Bounds, {}, "bottom or top out of range");
  }
  for (Element x = 0; x < data.size; ++x) {
    if (!data.at(data.bottom, x) || !data.at(x, data.top)) {
      return LawReport::violation(Law::Bounds, {x}, "element outside [bottom, top]");
    }
  }
  return LawReport::pass(Law::Bounds);
}

}  // namespace

const char* to_string(Law law) noexcept {
  switch (law) {
    case Law::PartialOrder: return "partial-order";
    case Law::Bounds: return "bounds";
    case Law::UniqueMeet: return "unique-meet";
    case Law::UniqueJoin: return "unique-join";
    case Law::OrthoInvolution: return "ortho-involution";
    case Law::OrthoOrderReversing: return "ortho-order-reversing";
    case Law::ComplementJoin: return "complement-join";
    case Law::ComplementMeet: return "complement-meet";
    case Law::Orthomodular: return "orthomodular";
    case Law::Modular: return "modular";
    case Law::Distributive: return "distributive";
    case Law::StateBottom: return "state-bottom";
    case Law::StateTop: return "state-top";
    case Law::StateAdditivity: return "state-additivity";
    case Law::StateComplement: return "state-complement";
    case Law::StateRange: return "state-range";
    case Law::StateMonotone: return "state-monotone";
    case Law::CoxNonnegative: return "cox-nonnegative";
    case Law::CoxOrderPreserving: return "cox-order-preserving";
    case Law::CoxNullity: return "cox-nullity";
    case Law::CoxComplement: return "cox-complement";
    case Law::CoxFamilyAdditivity: return "cox-family-additivity";
  }
  return "unknown";
}

OrthoLattice OrthoLattice::from_order(const OrderData& data, std::vector<std::string> labels) {
  const std::size_t n = data.size;
  if (n < 2) fail(ErrorKind::Size, "lattice needs at least 2 elements (bottom != top)");
  if (n > kMaxExplicitElements) {
    fail(ErrorKind::Size, "lattice has " + std::to_string(n) + " elements; cap is " +
                              std::to_string(kMaxExplicitElements));
  }
  if (data.leq.size() != n * n || data.ortho.size() != n) {
    fail(ErrorKind::InvalidArgument, "order data dimensions do not match element count");
  }
  if (!labels.empty() && labels.size() != n) {
    fail(ErrorKind::InvalidArgument, "label count does not match element count");
  }
  for (Element a = 0; a < n; ++a) {
    if (data.ortho[a] >= n) {
      fail(ErrorKind::DanglingReference,
           "ortho of element " + std::to_string(a) + " is out of range");
    }
  }
  if (auto report = check_partial_order(data); !report.holds) {
    throw Error(ErrorKind::Validation, std::string("partial-order violated: ") + report.detail);
  }
  if (auto report = check_bounds(data); !report.holds) {
    throw Error(ErrorKind::Validation, std::string("bounds violated: ") + report.detail);
  }

  OrthoLattice lattice;
  lattice.size_ = n;
  lattice.bottom_ = data.bottom;
  lattice.top_ = data.top;
  lattice.leq_ = data.leq;
  lattice.ortho_ = data.ortho;
  lattice.labels_ = std::move(labels);
  lattice.meet_.assign(n * n, 0);
  lattice.join_.assign(n * n, 0);

  // Down-sets and up-sets as bitsets: the meet of (a, b) is the element of
  // down(a) & down(b) whose own down-set contains all of it.
  std::vector<detail::Bitset> down(n, detail::Bitset(n));
  std::vector<detail::Bitset> up(n, detail::Bitset(n));
  std::vector<std::size_t> down_count(n, 0);
  std::vector<std::size_t> up_count(n, 0);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (data.at(a, b)) {
        down[b].set(a);
        up[a].set(b);
        ++down_count[b];
        ++up_count[a];
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = a; b < n; ++b) {
      const auto lower = down[a] & down[b];
      Element best = data.bottom;
      for (Element c = 0; c < n; ++c) {
        if (lower.test(c) && down_count[c] > down_count[best]) best = c;
      }
      if (!lower.subset_of(down[best])) {
        fail(ErrorKind::NotALattice, "no unique meet for pair " + pair_name(a, b));
      }
      const auto upper = up[a] & up[b];
      Element least_upper = data.top;
      for (Element c = 0; c < n; ++c) {
        if (upper.test(c) && up_count[c] > up_count[least_upper]) least_upper = c;
      }
      if (!upper.subset_of(up[least_upper])) {
        fail(ErrorKind::NotALattice, "no unique join for pair " + pair_name(a, b));
      }
      lattice.meet_[a * n + b] = lattice.meet_[b * n + a] = static_cast<std::uint16_t>(best);
      lattice.join_[a * n + b] = lattice.join_[b * n + a] =
          static_cast<std::uint16_t>(least_upper);
    }
  }
  return lattice;
}

OrthoLattice OrthoLattice::boolean_algebra(unsigned outcomes) {
  if (outcomes == 0) fail(ErrorKind::Size, "Boolean algebra needs at least one outcome");
  if (outcomes > kMaxBooleanAtoms) {
    fail(ErrorKind::Size, "Boolean algebra capped at " + std::to_string(kMaxBooleanAtoms) +
                              " outcomes");
  }
  OrthoLattice lattice;
  lattice.size_ = std::size_t{1} << outcomes;
  lattice.bottom_ = 0;
  lattice.top_ = static_cast<Element>(lattice.size_ - 1);
  lattice.boolean_outcomes_ = outcomes;
  return lattice;
}

void OrthoLattice::check(Element a) const {
  if (a >= size_) {
    fail(ErrorKind::OutOfRange, "element " + std::to_string(a) + " out of range (size " +
                                    std::to_string(size_) + ")");
  }
}

bool OrthoLattice::leq(Element a, Element b) const {
  check(a);
  check(b);
  if (boolean_outcomes_) return (a & ~b) == 0;
  return leq_[std::size_t(a) * size_ + b] != 0;
}

Element OrthoLattice::meet(Element a, Element b) const {
  check(a);
  check(b);
  if (boolean_outcomes_) return a & b;
  return meet_[std::size_t(a) * size_ + b];
}

Element OrthoLattice::join(Element a, Element b) const {
  check(a);
  check(b);
  if (boolean_outcomes_) return a | b;
  return join_[std::size_t(a) * size_ + b];
}

Element OrthoLattice::ortho(Element a) const {
  check(a);
  if (boolean_outcomes_) return top_ & ~a;
  return ortho_[a];
}

std::string OrthoLattice::label(Element a) const {
  check(a);
  if (boolean_outcomes_) {
    std::string out = "{";
    bool first = true;
    for (unsigned i = 0; i < *boolean_outcomes_; ++i) {
      if ((a >> i) & 1U) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
      }
    }
    return out + "}";
  }
  if (labels_.empty()) return std::to_string(a);
  return labels_[a];
}

std::optional<Element> OrthoLattice::find(const std::string& name) const {
  if (boolean_outcomes_ || !labels_.empty()) {
    if (boolean_outcomes_ && size_ <= kMaxExplicitElements) {
      for (Element a = 0; a < size_; ++a) {
        if (label(a) == name) return a;
      }
    } else if (!labels_.empty()) {
      auto it = std::find(labels_.begin(), labels_.end(), name);
      if (it != labels_.end()) return static_cast<Element>(it - labels_.begin());
    }
  }
  Element index = 0;
  const char* end = name.data() + name.size();
  auto [ptr, ec] = std::from_chars(name.data(), end, index);
  if (ec == std::errc() && ptr == end && index < size_) return index;
  return std::nullopt;
}

std::vector<Element> OrthoLattice::covers_of(Element a) const {
  check(a);
  std::vector<Element> out;
  if (boolean_outcomes_) {
    for (unsigned i = 0; i < *boolean_outcomes_; ++i) {
      if (!((a >> i) & 1U)) out.push_back(a | (Element{1} << i));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  for (Element b = 0; b < size_; ++b) {
    if (b == a || !leq(a, b)) continue;
    bool direct = true;
    for (Element c = 0; c < size_ && direct; ++c) {
      if (c != a && c != b && leq(a, c) && leq(c, b)) direct = false;
    }
    if (direct) out.push_back(b);
  }
  return out;
}

OrderData OrthoLattice::order_data() const {
  if (size_ > kMaxExplicitElements) {
    fail(ErrorKind::Size, "lattice too large to materialize its order relation");
  }
  OrderData data;
  data.size = size_;
  data.bottom = bottom_;
  data.top = top_;
  data.leq.resize(size_ * size_);
  data.ortho.resize(size_);
  for (Element a = 0; a < size_; ++a) {
    data.ortho[a] = ortho(a);
    for (Element b = 0; b < size_; ++b) data.leq[std::size_t(a) * size_ + b] = leq(a, b) ? 1 : 0;
  }
  return data;
}

bool operator==(const OrthoLattice& lhs, const OrthoLattice& rhs) {
  if (lhs.size_ != rhs.size_ || lhs.bottom_ != rhs.bottom_ || lhs.top_ != rhs.top_) return false;
  if (lhs.size_ > kMaxExplicitElements) {
    return lhs.boolean_outcomes_ == rhs.boolean_outcomes_;
  }
  for (Element a = 0; a < lhs.size_; ++a) {
    if (lhs.ortho(a) != rhs.ortho(a) || lhs.label(a) != rhs.label(a)) return false;
    for (Element b = 0; b < lhs.size_; ++b) {
      if (lhs.leq(a, b) != rhs.leq(a, b)) return false;
    }
  }
  return true;
}

std::vector<LawReport> validate_ortholattice(const OrderData& data) {
  std::vector<LawReport> reports;
  const auto n = static_cast<Element>(data.size);
  const bool shaped = data.size > 0 && data.leq.size() == data.size * data.size &&
                      data.ortho.size() == data.size;
  if (!shaped) {
    for (Law law : {Law::PartialOrder, Law::Bounds, Law::UniqueMeet, Law::UniqueJoin,
                    Law::OrthoInvolution, Law::OrthoOrderReversing, Law::ComplementJoin,
                    Law::ComplementMeet}) {
      reports.push_back(LawReport::violation(law, {}, "malformed order data"));
    }
    return reports;
  }
  reports.push_back(check_partial_order(data));
  reports.push_back(check_bounds(data));

  const Counts counts = count_bounds(data);
  auto first_pair_failure = [&](Law law, auto&& bound) {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (!bound(data, counts, a, b)) {
          return LawReport::violation(law, {a, b}, "no unique bound for " + pair_name(a, b));
        }
      }
    }
    return LawReport::pass(law);
  };
  reports.push_back(first_pair_failure(Law::UniqueMeet, glb));
  reports.push_back(first_pair_failure(Law::UniqueJoin, lub));

  auto ortho_ok = [&](Element a) { return data.ortho[a] < n; };

  LawReport involution = LawReport::pass(Law::OrthoInvolution);
  for (Element a = 0; a < n; ++a) {
    if (!ortho_ok(a) || !ortho_ok(data.ortho[a]) || data.ortho[data.ortho[a]] != a) {
      involution = LawReport::violation(Law::OrthoInvolution, {a}, "~~a != a");
      break;
    }
  }
  reports.push_back(involution);

  LawReport reversing = LawReport::pass(Law::OrthoOrderReversing);
  for (Element a = 0; a < n && reversing.holds; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!data.at(a, b)) continue;
      if (!ortho_ok(a) || !ortho_ok(b) || !data.at(data.ortho[b], data.ortho[a])) {
        reversing = LawReport::violation(Law::OrthoOrderReversing, {a, b}, "a <= b but not ~b <= ~a");
        break;
      }
    }
  }
  reports.push_back(reversing);

  LawReport complement_join = LawReport::pass(Law::ComplementJoin);
  LawReport complement_meet = LawReport::pass(Law::ComplementMeet);
  for (Element a = 0; a < n; ++a) {
    if (!ortho_ok(a)) {
      if (complement_join.holds) {
        complement_join = LawReport::violation(Law::ComplementJoin, {a}, "ortho out of range");
      }
      if (complement_meet.holds) {
        complement_meet = LawReport::violation(Law::ComplementMeet, {a}, "ortho out of range");
      }
      continue;
    }
    if (complement_join.holds) {
      auto j = lub(data, counts, a, data.ortho[a]);
      if (!j || *j != data.top) {
        complement_join = LawReport::violation(Law::ComplementJoin, {a}, "a v ~a != 1");
      }
    }
    if (complement_meet.holds) {
      auto m = glb(data, counts, a, data.ortho[a]);
      if (!m || *m != data.bottom) {
        complement_meet = LawReport::violation(Law::ComplementMeet, {a}, "a ^ ~a != 0");
      }
    }
  }
  reports.push_back(complement_join);
  reports.push_back(complement_meet);
  return reports;
}

std::vector<LawReport> validate_ortholattice(const OrthoLattice& lattice) {
  if (lattice.is_implicit_boolean() && lattice.size() > kMaxExplicitElements) {
    std::vector<LawReport> reports;
    for (Law law : {Law::PartialOrder, Law::Bounds, Law::UniqueMeet, Law::UniqueJoin,
                    Law::OrthoInvolution, Law::OrthoOrderReversing, Law::ComplementJoin,
                    Law::ComplementMeet}) {
      auto report = LawReport::pass(law);
      report.detail = "holds for every power-set algebra";
      reports.push_back(report);
    }
    return reports;
  }
  // Order, bounds and bound uniqueness were enforced at construction; the
  // orthocomplement laws are checked against the tabulated operations.
  const auto n = static_cast<Element>(lattice.size());
  std::vector<LawReport> reports{LawReport::pass(Law::PartialOrder), LawReport::pass(Law::Bounds),
                                 LawReport::pass(Law::UniqueMeet), LawReport::pass(Law::UniqueJoin)};

  LawReport involution = LawReport::pass(Law::OrthoInvolution);
  for (Element a = 0; a < n; ++a) {
    if (lattice.ortho(lattice.ortho(a)) != a) {
      involution = LawReport::violation(Law::OrthoInvolution, {a}, "~~a != a");
      break;
    }
  }
  reports.push_back(involution);

  LawReport reversing = LawReport::pass(Law::OrthoOrderReversing);
  for (Element a = 0; a < n && reversing.holds; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (lattice.leq(a, b) && !lattice.leq(lattice.ortho(b), lattice.ortho(a))) {
        reversing = LawReport::violation(Law::OrthoOrderReversing, {a, b}, "a <= b but not ~b <= ~a");
        break;
      }
    }
  }
  reports.push_back(reversing);

  LawReport complement_join = LawReport::pass(Law::ComplementJoin);
  LawReport complement_meet = LawReport::pass(Law::ComplementMeet);
  for (Element a = 0; a < n; ++a) {
    if (complement_join.holds && lattice.join(a, lattice.ortho(a)) != lattice.top()) {
      complement_join = LawReport::violation(Law::ComplementJoin, {a}, "a v ~a != 1");
    }
    if (complement_meet.holds && lattice.meet(a, lattice.ortho(a)) != lattice.bottom()) {
      complement_meet = LawReport::violation(Law::ComplementMeet, {a}, "a ^ ~a != 0");
    }
  }
  reports.push_back(complement_join);
  reports.push_back(complement_meet);
  return reports;
}

LawReport is_orthomodular(const OrthoLattice& lattice) {
  const auto n = static_cast<Element>(lattice.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (!lattice.leq(a, b)) continue;
      if (lattice.join(a, lattice.meet(lattice.ortho(a), b)) != b) {
        return LawReport::violation(Law::Orthomodular, {a, b},
                                    "a <= b but a v (~a ^ b) != b for " + pair_name(a, b));
      }
    }
  }
  return LawReport::pass(Law::Orthomodular);
}

LawReport is_modular(const OrthoLattice& lattice) {
  const auto n = static_cast<Element>(lattice.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (!lattice.leq(a, c)) continue;
        if (lattice.join(a, lattice.meet(b, c)) != lattice.meet(lattice.join(a, b), c)) {
          return LawReport::violation(Law::Modular, {a, b, c}, "a <= c but a v (b ^ c) != (a v b) ^ c");
        }
      }
    }
  }
  return LawReport::pass(Law::Modular);
}

LawReport is_distributive(const OrthoLattice& lattice) {
  const auto n = static_cast<Element>(lattice.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (lattice.meet(a, lattice.join(b, c)) !=
            lattice.join(lattice.meet(a, b), lattice.meet(a, c))) {
          return LawReport::violation(Law::Distributive, {a, b, c},
                                      "a ^ (b v c) != (a ^ b) v (a ^ c)");
        }
      }
    }
  }
  return LawReport::pass(Law::Distributive);
}

bool witness_violates(const OrthoLattice& L, Law law, const std::vector<Element>& w) {
  auto arity = [&](std::size_t k) {
    if (w.size() != k) fail(ErrorKind::InvalidArgument, "witness has wrong arity");
  };
  switch (law) {
    case Law::PartialOrder:
    case Law::Bounds:
    case Law::UniqueMeet:
    case Law::UniqueJoin:
      // Enforced at construction; a constructed lattice never violates them.
      return false;
    case Law::OrthoInvolution:
      arity(1);
      return L.ortho(L.ortho(w[0])) != w[0];
    case Law::OrthoOrderReversing:
      arity(2);
      return L.leq(w[0], w[1]) && !L.leq(L.ortho(w[1]), L.ortho(w[0]));
    case Law::ComplementJoin:
      arity(1);
      return L.join(w[0], L.ortho(w[0])) != L.top();
    case Law::ComplementMeet:
      arity(1);
      return L.meet(w[0], L.ortho(w[0])) != L.bottom();
    case Law::Orthomodular:
      arity(2);
      return L.leq(w[0], w[1]) && L.join(w[0], L.meet(L.ortho(w[0]), w[1])) != w[1];
    case Law::Modular:
      arity(3);
      return L.leq(w[0], w[2]) &&
             L.join(w[0], L.meet(w[1], w[2])) != L.meet(L.join(w[0], w[1]), w[2]);
    case Law::Distributive:
      arity(3);
      return L.meet(w[0], L.join(w[1], w[2])) != L.join(L.meet(w[0], w[1]), L.meet(w[0], w[2]));
    default:
      fail(ErrorKind::InvalidArgument, std::string("not a lattice law: ") + to_string(law));
  }
}

std::vector<Element> atoms(const OrthoLattice& lattice) {
  std::vector<Element> out;
  if (lattice.is_implicit_boolean()) {
    for (Element bit = 1; bit <= lattice.top(); bit <<= 1) out.push_back(bit);
    return out;
  }
  const auto n = static_cast<Element>(lattice.size());
  for (Element x = 0; x < n; ++x) {
    if (x == lattice.bottom()) continue;
    bool minimal = true;
    for (Element y = 0; y < n && minimal; ++y) {
      if (y != x && y != lattice.bottom() && lattice.leq(y, x)) minimal = false;
    }
    if (minimal) out.push_back(x);
  }
  return out;
}

OrthoLattice horizontal_sum(const OrthoLattice& lhs, const OrthoLattice& rhs) {
  std::vector<Element> lmid;
  std::vector<Element> rmid;
  for (Element a = 0; a < lhs.size(); ++a) {
    if (a != lhs.bottom() && a != lhs.top()) lmid.push_back(a);
  }
  for (Element a = 0; a < rhs.size(); ++a) {
    if (a != rhs.bottom() && a != rhs.top()) rmid.push_back(a);
  }
  const std::size_t n = 2 + lmid.size() + rmid.size();
  if (n > kMaxExplicitElements) fail(ErrorKind::Size, "horizontal sum exceeds element cap");

  // Layout: bottom, left middles, right middles, top.
  std::vector<Element> lmap(lhs.size());
  std::vector<Element> rmap(rhs.size());
  lmap[lhs.bottom()] = 0;
  rmap[rhs.bottom()] = 0;
  lmap[lhs.top()] = static_cast<Element>(n - 1);
  rmap[rhs.top()] = static_cast<Element>(n - 1);
  for (std::size_t i = 0; i < lmid.size(); ++i) lmap[lmid[i]] = static_cast<Element>(1 + i);
  for (std::size_t i = 0; i < rmid.size(); ++i) {
    rmap[rmid[i]] = static_cast<Element>(1 + lmid.size() + i);
  }

  OrderData data;
  data.size = n;
  data.bottom = 0;
  data.top = static_cast<Element>(n - 1);
  data.leq.assign(n * n, 0);
  data.ortho.assign(n, 0);
  for (Element a = 0; a < n; ++a) {
    data.leq[a] = 1;                       // bottom <= a
    data.leq[std::size_t(a) * n + n - 1] = 1;  // a <= top
  }
  for (Element a = 0; a < lhs.size(); ++a) {
    data.ortho[lmap[a]] = lmap[lhs.ortho(a)];
    for (Element b = 0; b < lhs.size(); ++b) {
      if (lhs.leq(a, b)) data.leq[std::size_t(lmap[a]) * n + lmap[b]] = 1;
    }
  }
  for (Element a = 0; a < rhs.size(); ++a) {
    data.ortho[rmap[a]] = rmap[rhs.ortho(a)];
    for (Element b = 0; b < rhs.size(); ++b) {
      if (rhs.leq(a, b)) data.leq[std::size_t(rmap[a]) * n + rmap[b]] = 1;
    }
  }

  std::vector<std::string> labels(n);
  std::unordered_set<std::string> left_names;
  labels[0] = lhs.label(lhs.bottom());
  labels[n - 1] = lhs.label(lhs.top());
  for (Element a : lmid) {
    labels[lmap[a]] = lhs.label(a);
    left_names.insert(lhs.label(a));
  }
  for (Element a : rmid) {
    auto name = rhs.label(a);
    labels[rmap[a]] = left_names.count(name) ? "r." + name : name;
  }
  return OrthoLattice::from_order(data, std::move(labels));
}

}  // namespace oml
