#include "ekchains/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ekc {

DegreeMismatch::DegreeMismatch(std::size_t lhs, std::size_t rhs)
    : std::invalid_argument("permutation degree mismatch: " + std::to_string(lhs) +
                            " vs " + std::to_string(rhs)) {}

CycleParseError::CycleParseError(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position) {}

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point y : images) {
    if (y >= images.size() || seen[y])
      throw std::invalid_argument("image table is not a bijection");
    seen[y] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Point>>& cycles) {
  Permutation result(degree);
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    const auto& cyc = *it;
    Permutation c(degree);
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (cyc[i] >= degree)
        throw std::invalid_argument("cycle point " + std::to_string(cyc[i]) +
                                    " outside degree " + std::to_string(degree));
      c.images_[cyc[i]] = cyc[(i + 1) % cyc.size()];
    }
    // Reject repeated points inside one cycle.
    std::vector<Point> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("repeated point in cycle");
    result = compose(c, result);
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t x = 0; x < images_.size(); ++x)
    if (images_[x] != x)
      return false;
  return true;
}

Permutation Permutation::extended(std::size_t degree) const {
  if (degree < images_.size())
    throw std::invalid_argument("cannot shrink a permutation");
  Permutation p(degree);
  std::copy(images_.begin(), images_.end(), p.images_.begin());
  return p;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw DegreeMismatch(a.degree(), b.degree());
  std::vector<Point> out(a.degree());
  for (std::size_t x = 0; x < out.size(); ++x)
    out[x] = a(b(static_cast<Point>(x)));
  return Permutation::from_images(std::move(out));
}

Permutation inverse(const Permutation& a) {
  std::vector<Point> out(a.degree());
  for (std::size_t x = 0; x < out.size(); ++x)
    out[a(static_cast<Point>(x))] = static_cast<Point>(x);
  return Permutation::from_images(std::move(out));
}

Permutation commutator(const Permutation& g, const Permutation& h) {
  return inverse(g) * (inverse(h) * (g * h));
}

Permutation conjugate(const Permutation& h, const Permutation& g) {
  return inverse(g) * (h * g);
}

std::vector<Point> support(const Permutation& a) {
  std::vector<Point> moved;
  for (std::size_t x = 0; x < a.degree(); ++x)
    if (a(static_cast<Point>(x)) != x)
      moved.push_back(static_cast<Point>(x));
  return moved;
}

std::vector<std::vector<Point>> cycles(const Permutation& a) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(a.degree(), false);
  for (Point x = 0; x < a.degree(); ++x) {
    if (seen[x] || a(x) == x)
      continue;
    std::vector<Point> cyc;
    for (Point y = x; !seen[y]; y = a(y)) {
      seen[y] = true;
      cyc.push_back(y);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> parsed;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };

  skip_ws();
  if (pos == text.size())
    throw CycleParseError("empty cycle text", pos);

  while (pos < text.size()) {
    if (text[pos] != '(')
      throw CycleParseError(std::string("expected '(' but found '") + text[pos] + "'", pos);
    ++pos;
    std::vector<Point> cyc;
    for (;;) {
      skip_ws();
      if (pos == text.size())
        throw CycleParseError("unterminated cycle", pos);
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw CycleParseError(std::string("unexpected character '") + text[pos] + "'", pos);
      std::size_t start = pos;
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > 0xFFFFFFFFull)
          throw CycleParseError("point too large", start);
        ++pos;
      }
      if (value >= degree)
        throw CycleParseError("point " + std::to_string(value) + " >= degree " +
                                  std::to_string(degree),
                              start);
      auto p = static_cast<Point>(value);
      if (std::find(cyc.begin(), cyc.end(), p) != cyc.end())
        throw CycleParseError("repeated point " + std::to_string(p) + " in cycle", start);
      cyc.push_back(p);
    }
    if (cyc.size() >= 2)
      parsed.push_back(std::move(cyc));
    skip_ws();
  }
  return Permutation::from_cycles(degree, parsed);
}

std::string format_cycles(const Permutation& a) {
  auto cs = cycles(a);
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (const auto& c : cs) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i)
      os << (i ? " " : "") << c[i];
    os << ')';
  }
  return os.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image table.
  std::uint64_t h = 1469598103934665603ull;
  for (Point y : p.images()) {
    h ^= y;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace ekc
