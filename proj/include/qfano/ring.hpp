#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace qfano {

// Process-wide symbol table so that "x1" names one symbol in every ring.
class VarRegistry {
 public:
  static VarRegistry& instance();
  std::size_t intern(std::string_view name);
  std::string name(std::size_t id) const;
  std::size_t size() const;

 private:
  VarRegistry() = default;
  mutable std::mutex mu_;
  std::unordered_map<std::string, std::size_t> ids_;
  std::vector<std::string> names_;
};

// An extra integer grading, e.g. one row of a torus weight table.
struct Grading {
  std::string label;
  std::vector<int> weights;
};

class Ring {
 public:
  Ring(std::vector<std::string> names, std::vector<int> weights,
       std::vector<Grading> gradings = {});

  std::size_t arity() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  int weight(std::size_t i) const { return weights_.at(i); }
  const std::vector<int>& weights() const { return weights_; }
  std::size_t symbol(std::size_t i) const { return symbols_.at(i); }
  const std::vector<Grading>& gradings() const { return gradings_; }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws std::out_of_range for unknown names.
  std::size_t index(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::vector<int> weights_;
  std::vector<std::size_t> symbols_;
  std::vector<Grading> gradings_;
  std::unordered_map<std::string, std::size_t> lookup_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> names, std::vector<int> weights,
                  std::vector<Grading> gradings = {});

// Convenience for names like x1..xn sharing one weight.
std::vector<std::string> numbered(std::string_view stem, int first, int last);

}  // namespace qfano
