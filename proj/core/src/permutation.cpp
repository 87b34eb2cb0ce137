#include "drg/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "drg/error.hpp"

namespace drg {

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  if (images_.empty())
    throw InputError("permutation must have degree >= 1");
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x])
      throw InputError("image sequence is not a bijection");
    seen[x] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree == 0)
    throw InputError("permutation must have degree >= 1");
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  return Permutation(std::move(img), Unchecked{});
}

Permutation Permutation::from_cycles(std::size_t degree, std::string_view text,
                                     bool one_based) {
  if (degree == 0)
    throw InputError("permutation must have degree >= 1");
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw InputError("cycle string: expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<Point> cyc;
    for (;;) {
      skip_ws();
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        ++i;
      if (start == i)
        throw InputError("cycle string: expected a point in \"" + std::string(text) + "\"");
      long long v = std::stoll(std::string(text.substr(start, i - start)));
      if (one_based)
        --v;
      if (v < 0 || static_cast<std::size_t>(v) >= degree)
        throw InputError("cycle string: point out of range in \"" + std::string(text) + "\"");
      if (used[v])
        throw InputError("cycle string: point repeated in \"" + std::string(text) + "\"");
      used[v] = true;
      cyc.push_back(static_cast<Point>(v));
      skip_ws();
      if (i < text.size() && text[i] == ',')
        ++i;
    }
    for (std::size_t k = 0; k < cyc.size(); ++k)
      img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return Permutation(std::move(img), Unchecked{});
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles(*this);
  if (cs.empty())
    return "()";
  std::ostringstream os;
  for (const auto &c : cs) {
    os << '(';
    for (std::size_t k = 0; k < c.size(); ++k)
      os << (k ? "," : "") << c[k];
    os << ')';
  }
  return os.str();
}

Permutation compose(const Permutation &p, const Permutation &q) {
  if (p.degree() != q.degree())
    throw InputError("compose: degree mismatch");
  std::vector<Point> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[i] = q.images_[p.images_[i]];
  return Permutation(std::move(img), Permutation::Unchecked{});
}

Permutation inverse(const Permutation &p) {
  std::vector<Point> img(p.degree());
  for (std::size_t i = 0; i < img.size(); ++i)
    img[p.images_[i]] = static_cast<Point>(i);
  return Permutation(std::move(img), Permutation::Unchecked{});
}

Permutation power(const Permutation &p, std::int64_t k) {
  Permutation base = k < 0 ? inverse(p) : p;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  Permutation result = Permutation::identity(p.degree());
  while (e) {
    if (e & 1)
      result = compose(result, base);
    e >>= 1;
    if (e)
      base = compose(base, base);
  }
  return result;
}

Permutation conjugate(const Permutation &p, const Permutation &g) {
  return compose(compose(inverse(g), p), g);
}

std::vector<std::vector<Point>> cycles(const Permutation &p) {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i)
      continue;
    std::vector<Point> c;
    for (Point j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::size_t> cycle_type(const Permutation &p) {
  std::vector<std::size_t> lens;
  std::vector<bool> seen(p.degree(), false);
  for (Point i = 0; i < p.degree(); ++i) {
    if (seen[i])
      continue;
    std::size_t len = 0;
    for (Point j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

bool is_derangement(const Permutation &p) {
  for (Point i = 0; i < p.degree(); ++i)
    if (p[i] == i)
      return false;
  return true;
}

std::size_t fixed_point_count(const Permutation &p) {
  std::size_t n = 0;
  for (Point i = 0; i < p.degree(); ++i)
    n += p[i] == i;
  return n;
}

std::uint64_t element_order(const Permutation &p) {
  std::uint64_t o = 1;
  for (std::size_t len : cycle_type(p))
    o = std::lcm(o, static_cast<std::uint64_t>(len));
  return o;
}

std::size_t PermutationHash::operator()(const Permutation &p) const noexcept {
  // FNV-1a over the image words
  std::uint64_t h = 1469598103934665603ull;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

} // namespace drg
