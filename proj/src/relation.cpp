#include "sbci/relation.hpp"

#include <string>

#include "sbci/error.hpp"

namespace sbci {

RelationMatrix::RelationMatrix(std::size_t n) : n_(n), rel_(n * n, false) { recompute_flags(); }

RelationMatrix::RelationMatrix(std::size_t n, std::vector<bool> rel) : n_(n), rel_(std::move(rel)) {
  if (rel_.size() != n_ * n_) throw InvalidAlgebra("relation matrix has the wrong size");
  recompute_flags();
}

void RelationMatrix::set(Elem x, Elem y, bool value) {
  rel_[x * n_ + y] = value;
  recompute_flags();
}

void RelationMatrix::recompute_flags() {
  const auto& r = *this;
  reflexive_witness_.reset();
  antisymmetric_witness_.reset();
  transitive_witness_.reset();
  for (Elem x = 0; x < n_ && !reflexive_witness_; ++x) {
    if (!r(x, x)) reflexive_witness_ = x;
  }
  for (Elem x = 0; x < n_ && !antisymmetric_witness_; ++x) {
    for (Elem y = 0; y < n_; ++y) {
      if (x != y && r(x, y) && r(y, x)) {
        antisymmetric_witness_ = ElemPair{x, y};
        break;
      }
    }
  }
  for (Elem x = 0; x < n_ && !transitive_witness_; ++x) {
    for (Elem y = 0; y < n_ && !transitive_witness_; ++y) {
      if (!r(x, y)) continue;
      for (Elem z = 0; z < n_; ++z) {
        if (r(y, z) && !r(x, z)) {
          transitive_witness_ = std::vector<Elem>{x, y, z};
          break;
        }
      }
    }
  }
}

RelationMatrix derive_relation(const FiniteAlgebra& alg, Which which) {
  const Table& t = alg.table(which);
  const std::size_t n = alg.size();
  std::vector<bool> rel(n * n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) rel[x * n + y] = t(x, y) == alg.top();
  }
  return RelationMatrix(n, std::move(rel));
}

MeetStructure compute_meet(const RelationMatrix& order) {
  if (!order.is_partial_order()) {
    std::string why = !order.reflexive()       ? "not reflexive"
                      : !order.antisymmetric() ? "not antisymmetric"
                                               : "not transitive";
    throw NotPartialOrder("relation is " + why);
  }
  const std::size_t n = order.size();
  Table meet(n);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      std::optional<Elem> glb;
      for (Elem z = 0; z < n; ++z) {
        if (!order(z, x) || !order(z, y)) continue;
        bool greatest = true;
        for (Elem w = 0; w < n && greatest; ++w) {
          if (order(w, x) && order(w, y) && !order(w, z)) greatest = false;
        }
        if (greatest) {
          glb = z;
          break;
        }
      }
      if (!glb) return MeetStructure{std::nullopt, ElemPair{x, y}};
      meet.at(x, y) = *glb;
    }
  }
  return MeetStructure{std::move(meet), std::nullopt};
}

}  // namespace sbci
