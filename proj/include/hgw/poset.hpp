#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace hgw {

class FinitePoset {
 public:
  FinitePoset() = default;
  // Throws ValidationFailure unless leq is reflexive, antisymmetric and transitive.
  FinitePoset(std::vector<std::string> labels, std::vector<std::vector<bool>> leq);
  // Order induced by a predicate on indices.
  static FinitePoset from_relation(std::vector<std::string> labels, const std::function<bool(std::size_t, std::size_t)>& leq);

  std::size_t size() const noexcept { return labels_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return leq_[a][b]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<bool>> leq_;
};

struct LawViolation {
  std::string law;
  std::vector<std::size_t> witness;  // element indices, left poset first where it applies
};

struct GaloisConnectionReport {
  std::vector<std::size_t> forward;   // left -> right
  std::vector<std::size_t> backward;  // right -> left
  std::vector<LawViolation> law_violations;
  std::vector<std::size_t> closed_left;   // fixed points of backward o forward
  std::vector<std::size_t> closed_right;  // fixed points of forward o backward
  bool bijection_on_closed = false;

  bool laws_hold() const { return law_violations.empty(); }
  bool all_closed() const { return closed_left.size() == forward.size() && closed_right.size() == backward.size(); }
};

// Antitone maps f : P -> Q and g : Q -> P. Checks antitonicity, g f >= id,
// f g >= id, closed sets = images, and that f and g restrict to mutually
// inverse bijections between the closed sets.
GaloisConnectionReport check_connection(const FinitePoset& p, const FinitePoset& q, const std::vector<std::size_t>& f,
                                        const std::vector<std::size_t>& g);

}  // namespace hgw
