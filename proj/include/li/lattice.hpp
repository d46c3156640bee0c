#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "li/errors.hpp"

namespace li {

class Lattice;

/// An element of a finite Boolean lattice: a subset of the atoms, stored as
/// a block bit-vector. Up to 64 atoms fit in a single block; larger lattices
/// spill into further blocks. Elements are immutable values.
class Element {
 public:
  Element() = default;

  std::size_t atom_count() const { return atom_count_; }
  bool contains(std::size_t atom) const;
  std::size_t popcount() const;
  bool empty() const { return popcount() == 0; }

  /// Atom indices in increasing order.
  std::vector<std::size_t> atoms() const;

  bool operator==(const Element& other) const = default;

 private:
  friend class Lattice;
  friend Element join(const Element&, const Element&);
  friend Element meet(const Element&, const Element&);
  friend bool leq(const Element&, const Element&);

  explicit Element(std::size_t atom_count);

  std::size_t atom_count_ = 0;
  std::vector<std::uint64_t> blocks_;
};

/// A finite Boolean lattice described by its atoms. The bottom element is
/// always representable (the empty subset) and carries value zero under any
/// measure. Atom identity is positional; labels are metadata.
class Lattice {
 public:
  explicit Lattice(std::vector<std::string> atom_labels);
  explicit Lattice(std::size_t atom_count);  // labels a1..aN

  std::size_t atom_count() const { return labels_.size(); }
  const std::vector<std::string>& atom_labels() const { return labels_; }
  bool includes_bottom() const { return includes_bottom_; }

  /// Index of a label; throws DomainError if absent.
  std::size_t index_of(const std::string& label) const;

  Element bottom() const;
  Element top() const;
  Element atom(std::size_t index) const;
  Element element(const std::vector<std::size_t>& atom_indices) const;
  Element element_from_labels(const std::vector<std::string>& labels) const;

  /// All 2^N elements in subset-mask order. Only offered for N <= 20.
  std::vector<Element> enumerate_elements() const;

  bool same_shape(const Lattice& other) const {
    return atom_count() == other.atom_count();
  }

 private:
  std::vector<std::string> labels_;
  bool includes_bottom_ = true;
};

Element join(const Element& x, const Element& y);
Element meet(const Element& x, const Element& y);

/// Lattice order: true iff atoms(x) is a subset of atoms(y).
bool leq(const Element& x, const Element& y);

/// Order indicator: 1 if x <= y, 0 otherwise.
int zeta(const Element& x, const Element& y);

/// True iff x and y share no atom (their meet is bottom).
bool disjoint(const Element& x, const Element& y);

/// The composite lattice of two independent factors. Factor atom pair (i, j)
/// maps to composite atom i * M + j, M being the right factor's atom count.
class ProductLattice {
 public:
  ProductLattice(Lattice left, Lattice right);

  const Lattice& left() const { return left_; }
  const Lattice& right() const { return right_; }
  const Lattice& composite() const { return composite_; }

  std::size_t index_of(std::size_t left_atom, std::size_t right_atom) const;
  std::pair<std::size_t, std::size_t> pair_of(std::size_t composite_atom) const;

  /// Composite element with atoms {(i, j) : i in x, j in y}.
  Element element_product(const Element& x, const Element& y) const;

 private:
  Lattice left_;
  Lattice right_;
  Lattice composite_;
};

ProductLattice direct_product(const Lattice& l1, const Lattice& l2);

}  // namespace li
