#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qf {

struct Arrow {
  std::string id;
  std::size_t tail;  // t(a), source vertex
  std::size_t head;  // h(a), target vertex
};

/// Q = (V, A, h, t). Loops and multiple arrows are allowed.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  static std::shared_ptr<const Quiver> kronecker(int arrows);
  static std::shared_ptr<const Quiver> jordan();
  static std::shared_ptr<const Quiver> a2();
  static std::shared_ptr<const Quiver> discrete(int vertices);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(std::size_t a) const { return arrows_[a]; }
  std::size_t vertex_index(const std::string& name) const;
  std::size_t arrow_index(const std::string& id) const;
  /// One vertex carrying exactly one loop.
  bool is_single_loop() const { return vertices_.size() == 1 && arrows_.size() == 1; }
  /// Stable textual fingerprint, used to key golden files.
  std::string fingerprint() const;

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

/// d_v per vertex.
using DimVector = std::vector<int>;
/// Stability parameter, one integer per vertex.
using Theta = std::vector<long>;

int total_dimension(const DimVector& d);
/// mu_theta(e) = (sum theta_v e_v) / (sum e_v). Throws DomainError for e = 0.
mpq_class slope(const DimVector& e, const Theta& theta);
/// e | d_v for every v
bool divisible_by(const DimVector& d, int e);
std::string to_string(const DimVector& d);

}  // namespace qf
