#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qgrass {

/// An arrow between 0-based vertex indices.
struct Arrow {
  std::size_t source;
  std::size_t target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// A finite acyclic quiver. Vertices are 0-based in the C++ API; the file
/// format and the command line use 1-based vertices.
///
/// Construction rejects out-of-range endpoints and oriented cycles (loops
/// included). Parallel arrows are allowed.
class Quiver {
 public:
  Quiver() = default;
  Quiver(std::size_t vertex_count, std::vector<Arrow> arrows);

  /// The equioriented A_n quiver 0 -> 1 -> ... -> n-1; arrow k is k -> k+1.
  static Quiver equioriented_a(std::size_t n);
  /// Two vertices with `m` parallel arrows 0 -> 1.
  static Quiver kronecker(std::size_t m = 2);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_.at(a); }

  /// A fixed topological order (smallest available vertex first).
  const std::vector<std::size_t>& topological_order() const noexcept { return topo_; }
  std::vector<std::size_t> out_arrows(std::size_t v) const;
  std::vector<std::size_t> in_arrows(std::size_t v) const;

  /// Same vertices, every arrow reversed (arrow indices preserved).
  Quiver opposite() const;

  /// All paths from `from` to `to`, each as a sequence of arrow indices.
  /// The trivial path is the empty sequence and exists iff from == to.
  std::vector<std::vector<std::size_t>> paths(std::size_t from, std::size_t to) const;

  /// True when this is A_n with arrow k : k -> k+1 for every k.
  bool is_equioriented_a() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.n_ == b.n_ && a.arrows_ == b.arrows_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Arrow> arrows_;
  std::vector<std::size_t> topo_;
};

/// Per-vertex natural numbers. Arithmetic is componentwise; subtraction
/// that would go negative throws.
class DimVector {
 public:
  DimVector() = default;
  explicit DimVector(std::size_t n) : v_(n, 0) {}
  DimVector(std::initializer_list<long> xs);
  explicit DimVector(std::vector<long> xs);

  static DimVector unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return v_.size(); }
  long operator[](std::size_t i) const { return v_.at(i); }
  long& operator[](std::size_t i) { return v_.at(i); }
  const std::vector<long>& entries() const noexcept { return v_; }
  long total() const;
  bool is_zero() const;

  /// Componentwise <=.
  bool fits_in(const DimVector& d) const;

  DimVector operator+(const DimVector& o) const;
  DimVector operator-(const DimVector& o) const;

  friend bool operator==(const DimVector&, const DimVector&) = default;
  friend auto operator<=>(const DimVector&, const DimVector&) = default;

 private:
  std::vector<long> v_;
};

std::string to_string(const DimVector& d);

/// Euler form: sum_i e_i d_i - sum_arrows e_s d_t. Accepts signed vectors.
long euler_form(const Quiver& q, const std::vector<long>& e, const std::vector<long>& d);
long euler_form(const Quiver& q, const DimVector& e, const DimVector& d);

/// All dimension vectors f with 0 <= f <= d, last coordinate fastest.
std::vector<DimVector> sub_dimension_vectors(const DimVector& d);

}  // namespace qgrass
