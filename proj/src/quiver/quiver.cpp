#include "qf/quiver/quiver.hpp"

#include "qf/errors.hpp"

#include <numeric>
#include <set>

namespace qf {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  std::set<std::string> names(vertices_.begin(), vertices_.end());
  if (names.size() != vertices_.size()) throw DomainError("duplicate vertex name");
  std::set<std::string> ids;
  for (const auto& a : arrows_) {
    if (a.tail >= vertices_.size() || a.head >= vertices_.size())
      throw DomainError("arrow '" + a.id + "' refers to an unknown vertex");
    if (!ids.insert(a.id).second) throw DomainError("duplicate arrow id '" + a.id + "'");
  }
}

QuiverPtr Quiver::kronecker(int arrows) {
  std::vector<Arrow> as;
  for (int k = 0; k < arrows; ++k) as.push_back({"a" + std::to_string(k + 1), 0, 1});
  return std::make_shared<const Quiver>(std::vector<std::string>{"1", "2"}, std::move(as));
}

QuiverPtr Quiver::jordan() {
  return std::make_shared<const Quiver>(std::vector<std::string>{"1"}, std::vector<Arrow>{{"x", 0, 0}});
}

QuiverPtr Quiver::a2() {
  return std::make_shared<const Quiver>(std::vector<std::string>{"1", "2"}, std::vector<Arrow>{{"a", 0, 1}});
}

QuiverPtr Quiver::discrete(int vertices) {
  std::vector<std::string> vs;
  for (int k = 0; k < vertices; ++k) vs.push_back(std::to_string(k + 1));
  return std::make_shared<const Quiver>(std::move(vs), std::vector<Arrow>{});
}

std::size_t Quiver::vertex_index(const std::string& name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i] == name) return i;
  }
  throw DomainError("unknown vertex '" + name + "'");
}

std::size_t Quiver::arrow_index(const std::string& id) const {
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    if (arrows_[i].id == id) return i;
  }
  throw DomainError("unknown arrow '" + id + "'");
}

std::string Quiver::fingerprint() const {
  std::string out = "v" + std::to_string(vertices_.size());
  for (const auto& a : arrows_) out += "_" + std::to_string(a.tail) + "-" + std::to_string(a.head);
  return out;
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertices_ != b.vertices_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i) {
    const auto& x = a.arrows_[i];
    const auto& y = b.arrows_[i];
    if (x.id != y.id || x.tail != y.tail || x.head != y.head) return false;
  }
  return true;
}

int total_dimension(const DimVector& d) { return std::accumulate(d.begin(), d.end(), 0); }

mpq_class slope(const DimVector& e, const Theta& theta) {
  if (e.size() != theta.size()) throw DomainError("slope: theta has the wrong length");
  long num = 0;
  long den = 0;
  for (std::size_t v = 0; v < e.size(); ++v) {
    if (e[v] < 0) throw DomainError("slope: negative dimension");
    num += theta[v] * e[v];
    den += e[v];
  }
  if (den == 0) throw DomainError("slope of the zero dimension vector");
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

bool divisible_by(const DimVector& d, int e) {
  for (int x : d) {
    if (x % e != 0) return false;
  }
  return true;
}

std::string to_string(const DimVector& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
  return out + ")";
}

}  // namespace qf
