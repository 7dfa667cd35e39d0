#include "hgw/poset.hpp"

#include <algorithm>

#include "hgw/errors.hpp"

namespace hgw {

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
  const std::size_t n = labels_.size();
  if (leq_.size() != n) throw DimensionMismatch("poset relation size");
  for (const auto& row : leq_)
    if (row.size() != n) throw DimensionMismatch("poset relation size");
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq_[a][a]) throw ValidationFailure("poset relation is not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq_[a][b] && leq_[b][a]) throw ValidationFailure("poset relation is not antisymmetric");
      if (!leq_[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (leq_[b][c] && !leq_[a][c]) throw ValidationFailure("poset relation is not transitive");
    }
  }
}

FinitePoset FinitePoset::from_relation(std::vector<std::string> labels,
                                       const std::function<bool(std::size_t, std::size_t)>& leq) {
  const std::size_t n = labels.size();
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) rel[a][b] = leq(a, b);
  return FinitePoset(std::move(labels), std::move(rel));
}

GaloisConnectionReport check_connection(const FinitePoset& p, const FinitePoset& q, const std::vector<std::size_t>& f,
                                        const std::vector<std::size_t>& g) {
  if (f.size() != p.size() || g.size() != q.size()) throw DimensionMismatch("connection maps must be total");
  for (auto v : f)
    if (v >= q.size()) throw DimensionMismatch("forward map out of range");
  for (auto v : g)
    if (v >= p.size()) throw DimensionMismatch("backward map out of range");
  GaloisConnectionReport r;
  r.forward = f;
  r.backward = g;
  auto& bad = r.law_violations;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = 0; b < p.size(); ++b)
      if (p.leq(a, b) && !q.leq(f[b], f[a])) bad.push_back({"forward antitone", {a, b}});
  for (std::size_t a = 0; a < q.size(); ++a)
    for (std::size_t b = 0; b < q.size(); ++b)
      if (q.leq(a, b) && !p.leq(g[b], g[a])) bad.push_back({"backward antitone", {a, b}});
  for (std::size_t a = 0; a < p.size(); ++a)
    if (!p.leq(a, g[f[a]])) bad.push_back({"GF >= id", {a}});
  for (std::size_t a = 0; a < q.size(); ++a)
    if (!q.leq(a, f[g[a]])) bad.push_back({"FG >= id", {a}});

  for (std::size_t a = 0; a < p.size(); ++a)
    if (g[f[a]] == a) r.closed_left.push_back(a);
  for (std::size_t a = 0; a < q.size(); ++a)
    if (f[g[a]] == a) r.closed_right.push_back(a);

  auto sorted_image = [](const std::vector<std::size_t>& m) {
    std::vector<std::size_t> img = m;
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    return img;
  };
  bool ok = true;
  if (sorted_image(g) != r.closed_left) {
    bad.push_back({"closed left elements differ from the image of G", {}});
    ok = false;
  }
  if (sorted_image(f) != r.closed_right) {
    bad.push_back({"closed right elements differ from the image of F", {}});
    ok = false;
  }
  for (auto a : r.closed_left)
    if (f[a] >= q.size() || g[f[a]] != a || f[g[f[a]]] != f[a]) ok = false;
  for (auto b : r.closed_right)
    if (f[g[b]] != b) ok = false;
  r.bijection_on_closed = ok && r.closed_left.size() == r.closed_right.size();
  return r;
}

}  // namespace hgw
