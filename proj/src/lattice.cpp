#include "li/lattice.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

namespace li {

namespace {

constexpr std::size_t kBlockBits = 64;

std::size_t block_count(std::size_t atom_count) {
  return (atom_count + kBlockBits - 1) / kBlockBits;
}

void require_same_shape(const Element& x, const Element& y) {
  if (x.atom_count() != y.atom_count()) {
    throw DimensionError("elements belong to lattices of different size (" +
                         std::to_string(x.atom_count()) + " vs " +
                         std::to_string(y.atom_count()) + " atoms)");
  }
}

}  // namespace

Element::Element(std::size_t atom_count)
    : atom_count_(atom_count), blocks_(block_count(atom_count), 0) {}

bool Element::contains(std::size_t atom) const {
  if (atom >= atom_count_) {
    throw DimensionError("atom index " + std::to_string(atom) +
                         " out of range for " + std::to_string(atom_count_) +
                         "-atom lattice");
  }
  return (blocks_[atom / kBlockBits] >> (atom % kBlockBits)) & 1u;
}

std::size_t Element::popcount() const {
  std::size_t n = 0;
  for (std::uint64_t b : blocks_) n += static_cast<std::size_t>(std::popcount(b));
  return n;
}

std::vector<std::size_t> Element::atoms() const {
  std::vector<std::size_t> out;
  out.reserve(popcount());
  for (std::size_t i = 0; i < atom_count_; ++i) {
    if ((blocks_[i / kBlockBits] >> (i % kBlockBits)) & 1u) out.push_back(i);
  }
  return out;
}

Lattice::Lattice(std::vector<std::string> atom_labels)
    : labels_(std::move(atom_labels)) {
  if (labels_.empty()) {
    throw DomainError("a lattice needs at least one atom");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw DomainError("duplicate atom label '" + label + "'");
    }
  }
}

Lattice::Lattice(std::size_t atom_count) : includes_bottom_(true) {
  if (atom_count == 0) throw DomainError("a lattice needs at least one atom");
  labels_.reserve(atom_count);
  for (std::size_t i = 0; i < atom_count; ++i) {
    labels_.push_back("a" + std::to_string(i + 1));
  }
}

std::size_t Lattice::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw DomainError("unknown atom label '" + label + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

Element Lattice::bottom() const { return Element(atom_count()); }

Element Lattice::top() const {
  Element e(atom_count());
  for (std::size_t i = 0; i < atom_count(); ++i) {
    e.blocks_[i / kBlockBits] |= std::uint64_t{1} << (i % kBlockBits);
  }
  return e;
}

Element Lattice::atom(std::size_t index) const {
  if (index >= atom_count()) {
    throw DimensionError("atom index " + std::to_string(index) +
                         " out of range");
  }
  Element e(atom_count());
  e.blocks_[index / kBlockBits] |= std::uint64_t{1} << (index % kBlockBits);
  return e;
}

Element Lattice::element(const std::vector<std::size_t>& atom_indices) const {
  Element e(atom_count());
  for (std::size_t i : atom_indices) {
    if (i >= atom_count()) {
      throw DimensionError("atom index " + std::to_string(i) + " out of range");
    }
    e.blocks_[i / kBlockBits] |= std::uint64_t{1} << (i % kBlockBits);
  }
  return e;
}

Element Lattice::element_from_labels(
    const std::vector<std::string>& labels) const {
  std::vector<std::size_t> idx;
  idx.reserve(labels.size());
  for (const auto& label : labels) idx.push_back(index_of(label));
  return element(idx);
}

std::vector<Element> Lattice::enumerate_elements() const {
  if (atom_count() > 20) {
    throw DomainError("exhaustive enumeration is only offered for <= 20 atoms");
  }
  std::vector<Element> out;
  const std::size_t total = std::size_t{1} << atom_count();
  out.reserve(total);
  for (std::size_t mask = 0; mask < total; ++mask) {
    Element e(atom_count());
    e.blocks_[0] = mask;
    out.push_back(std::move(e));
  }
  return out;
}

Element join(const Element& x, const Element& y) {
  require_same_shape(x, y);
  Element out = x;
  for (std::size_t i = 0; i < out.blocks_.size(); ++i) {
    out.blocks_[i] |= y.blocks_[i];
  }
  return out;
}

Element meet(const Element& x, const Element& y) {
  require_same_shape(x, y);
  Element out = x;
  for (std::size_t i = 0; i < out.blocks_.size(); ++i) {
    out.blocks_[i] &= y.blocks_[i];
  }
  return out;
}

bool leq(const Element& x, const Element& y) {
  require_same_shape(x, y);
  for (std::size_t i = 0; i < x.blocks_.size(); ++i) {
    if (x.blocks_[i] & ~y.blocks_[i]) return false;
  }
  return true;
}

int zeta(const Element& x, const Element& y) { return leq(x, y) ? 1 : 0; }

bool disjoint(const Element& x, const Element& y) {
  return meet(x, y).empty();
}

namespace {

std::vector<std::string> composite_labels(const Lattice& l1,
                                          const Lattice& l2) {
  std::vector<std::string> labels;
  labels.reserve(l1.atom_count() * l2.atom_count());
  for (const auto& a : l1.atom_labels()) {
    for (const auto& b : l2.atom_labels()) {
      labels.push_back(a + "×" + b);
    }
  }
  return labels;
}

}  // namespace

ProductLattice::ProductLattice(Lattice left, Lattice right)
    : left_(std::move(left)),
      right_(std::move(right)),
      composite_(composite_labels(left_, right_)) {}

std::size_t ProductLattice::index_of(std::size_t left_atom,
                                     std::size_t right_atom) const {
  if (left_atom >= left_.atom_count() || right_atom >= right_.atom_count()) {
    throw DimensionError("factor atom index out of range");
  }
  return left_atom * right_.atom_count() + right_atom;
}

std::pair<std::size_t, std::size_t> ProductLattice::pair_of(
    std::size_t composite_atom) const {
  if (composite_atom >= composite_.atom_count()) {
    throw DimensionError("composite atom index out of range");
  }
  return {composite_atom / right_.atom_count(),
          composite_atom % right_.atom_count()};
}

Element ProductLattice::element_product(const Element& x,
                                        const Element& y) const {
  if (x.atom_count() != left_.atom_count() ||
      y.atom_count() != right_.atom_count()) {
    throw DimensionError("factor elements do not match the product's factors");
  }
  std::vector<std::size_t> idx;
  for (std::size_t i : x.atoms()) {
    for (std::size_t j : y.atoms()) {
      idx.push_back(index_of(i, j));
    }
  }
  return composite_.element(idx);
}

ProductLattice direct_product(const Lattice& l1, const Lattice& l2) {
  return ProductLattice(l1, l2);
}

}  // namespace li
