#include "nichols/generators.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "nichols/lyndon.hpp"
#include "nichols/sequences.hpp"

namespace nichols {

namespace {

Word rep12(int k) {
  Word w;
  for (int j = 0; j < k; ++j) w = w.concat(Word::parse("12"));
  return w;
}

[[noreturn]] void bad(const std::string& name, int n) {
  throw std::invalid_argument("no generator " + name + " with index " +
                              std::to_string(n));
}

FreeElement build(const std::string& name, int n) {
  if (name == "X") {
    if (n < 1) bad(name, n);
    return superletter(Word::letter(1).concat(rep12(n - 1)));
  }
  if (name == "Y") {
    if (n < 1) bad(name, n);
    return superletter(rep12(n - 1).concat(Word::letter(2)));
  }
  if (name == "L") {
    if (n < 0) bad(name, n);
    if (n == 0) return FreeElement::unit().scaled(theta().inv());
    return braided_bracket(generator("X", 1), generator("Y", n));
  }
  if (name == "Lp") {
    if (n < 0) bad(name, n);
    if (n <= 1) return generator("L", n);
    return braided_bracket(generator("X", 2), generator("Y", n - 1));
  }
  if (name == "Ltilde") {
    if (n < 0) return FreeElement::zero();
    return (generator("L", n) + generator("Lp", n)).scaled(Scalar::frac(1, 2));
  }
  if (name == "Lhat") {
    if (n < 2) bad(name, n);
    return braided_bracket(generator("L", n - 1), generator("L", 1));
  }
  if (name == "M") {
    if (n < 1 || n % 2 == 0) bad(name, n);
    if (n == 1) return generator("L", 1);
    return braided_bracket(generator("L", 2), generator("M", n - 2));
  }
  bad(name, n);
}

}  // namespace

const FreeElement& generator(const std::string& name, int n) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, std::unique_ptr<FreeElement>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({name, n});
    if (it != cache.end()) return *it->second;
  }
  FreeElement e = build(name, n);
  std::lock_guard<std::mutex> lock(mu);
  auto [it, fresh] =
      cache.emplace(std::make_pair(name, n), std::make_unique<FreeElement>(std::move(e)));
  (void)fresh;
  return *it->second;
}

NamedGenerator named_generator(const std::string& name, int n) {
  return {name, n, generator(name, n)};
}

}  // namespace nichols
