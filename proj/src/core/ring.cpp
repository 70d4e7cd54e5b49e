#include "qfano/ring.hpp"

#include <stdexcept>

#include "qfano/rational.hpp"

namespace qfano {

VarRegistry& VarRegistry::instance() {
  static VarRegistry registry;
  return registry;
}

std::size_t VarRegistry::intern(std::string_view name) {
  std::lock_guard lock(mu_);
  auto it = ids_.find(std::string(name));
  if (it != ids_.end()) return it->second;
  std::size_t id = names_.size();
  names_.emplace_back(name);
  ids_.emplace(std::string(name), id);
  return id;
}

std::string VarRegistry::name(std::size_t id) const {
  std::lock_guard lock(mu_);
  return names_.at(id);
}

std::size_t VarRegistry::size() const {
  std::lock_guard lock(mu_);
  return names_.size();
}

Ring::Ring(std::vector<std::string> names, std::vector<int> weights,
           std::vector<Grading> gradings)
    : names_(std::move(names)),
      weights_(std::move(weights)),
      gradings_(std::move(gradings)) {
  if (names_.size() != weights_.size())
    throw std::invalid_argument("ring: weights length differs from variables");
  for (int w : weights_)
    if (w <= 0) throw std::invalid_argument("ring: weights must be positive");
  for (const auto& g : gradings_)
    if (g.weights.size() != names_.size())
      throw std::invalid_argument("ring: grading '" + g.label + "' has wrong length");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!lookup_.emplace(names_[i], i).second)
      throw std::invalid_argument("ring: duplicate variable " + names_[i]);
    symbols_.push_back(VarRegistry::instance().intern(names_[i]));
  }
}

std::optional<std::size_t> Ring::find(std::string_view name) const {
  auto it = lookup_.find(std::string(name));
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Ring::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw std::out_of_range("ring: unknown variable " + std::string(name));
  return *i;
}

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights,
                  std::vector<Grading> gradings) {
  return std::make_shared<const Ring>(std::move(names), std::move(weights),
                                      std::move(gradings));
}

std::vector<std::string> numbered(std::string_view stem, int first, int last) {
  std::vector<std::string> out;
  for (int i = first; i <= last; ++i) out.push_back(std::string(stem) + std::to_string(i));
  return out;
}

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t' && c != '+') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + std::string(text));
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  r.canonicalize();
  return r;
}

}  // namespace qfano
