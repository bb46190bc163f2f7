#include "opk/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "opk/errors.hpp"

namespace opk {

Permutation::Permutation(int n) : img_(n) {
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 1 || v > n() || seen[v - 1])
      throw input_error("not a permutation of 1..n");
    seen[v - 1] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if (image(i) != i) return false;
  return true;
}

std::string Permutation::label() const {
  std::ostringstream os;
  if (n() <= 9) {
    for (int v : img_) os << v;
  } else {
    for (size_t i = 0; i < img_.size(); ++i) os << (i ? "," : "") << img_[i];
  }
  return os.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.n() != q.n()) throw input_error("compose: size mismatch");
  std::vector<int> img(p.n());
  for (int i = 1; i <= p.n(); ++i) img[i - 1] = p.image(q.image(i));
  return Permutation(img);
}

Permutation inverse(const Permutation& p) {
  std::vector<int> img(p.n());
  for (int i = 1; i <= p.n(); ++i) img[p.image(i) - 1] = i;
  return Permutation(img);
}

long long inversion_count(const Permutation& p) {
  long long inv = 0;
  for (int i = 1; i <= p.n(); ++i)
    for (int j = i + 1; j <= p.n(); ++j)
      if (p.image(i) > p.image(j)) ++inv;
  return inv;
}

int parity(const Permutation& p) {
  return static_cast<int>(inversion_count(p) % 2);
}

Permutation block_sum(const std::vector<Permutation>& parts) {
  int total = 0;
  for (const auto& t : parts) total += t.n();
  std::vector<int> img;
  img.reserve(total);
  int off = 0;
  for (const auto& t : parts) {
    for (int i = 1; i <= t.n(); ++i) img.push_back(off + t.image(i));
    off += t.n();
  }
  return Permutation(img);
}

Permutation transposition(int n, int a, int b) {
  Permutation e(n);
  std::vector<int> img = e.images();
  std::swap(img[a - 1], img[b - 1]);
  return Permutation(img);
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

Permutation perm_from_label(const std::string& label) {
  std::vector<int> img;
  if (label.find(',') != std::string::npos) {
    std::istringstream is(label);
    std::string tok;
    while (std::getline(is, tok, ',')) img.push_back(std::stoi(tok));
  } else {
    for (char c : label) {
      if (c < '1' || c > '9') throw input_error("bad permutation label");
      img.push_back(c - '0');
    }
  }
  return Permutation(img);
}

}  // namespace opk
