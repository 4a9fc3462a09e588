#include "icx/involution.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace icx {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  int n = static_cast<int>(img_.size());
  if (n < 1) raise(ErrorKind::Shape, "permutation must be nonempty");
  std::vector<bool> seen(n, false);
  for (int v : img_) {
    if (v < 1 || v > n)
      raise(ErrorKind::InvalidSpec, "permutation image out of range");
    if (seen[v - 1]) raise(ErrorKind::InvalidSpec, "permutation image repeated");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i + 1;
  return Permutation(std::move(img));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  int n = size();
  std::vector<bool> visited(n, false);
  std::vector<std::vector<int>> out;
  for (int start = 1; start <= n; ++start) {
    if (visited[start - 1]) continue;
    std::vector<int> cyc;
    int cur = start;
    do {
      visited[cur - 1] = true;
      cyc.push_back(cur);
      cur = image(cur);
    } while (cur != start);
    out.push_back(std::move(cyc));
  }
  return out;
}

bool is_involutory(const Permutation& p) {
  for (int i = 1; i <= p.size(); ++i)
    if (p.image(p.image(i)) != i) return false;
  return true;
}

Involution::Involution(Permutation p) : p_(std::move(p)) {
  if (!is_involutory(p_))
    raise(ErrorKind::NotInvolutory,
          "permutation " + format_cycles(p_) + " has a cycle longer than two");
}

namespace {

std::vector<int> group_elements(const std::string& body) {
  bool separated = body.find(' ') != std::string::npos ||
                   body.find(',') != std::string::npos;
  std::vector<int> elems;
  if (separated) {
    std::string tmp = body;
    std::replace(tmp.begin(), tmp.end(), ',', ' ');
    std::istringstream is(tmp);
    int v;
    while (is >> v) elems.push_back(v);
    if (!is.eof()) raise(ErrorKind::Parse, "bad cycle element in (" + body + ")");
  } else {
    for (char ch : body) {
      if (!std::isdigit(static_cast<unsigned char>(ch)) || ch == '0')
        raise(ErrorKind::Parse, "bad cycle element in (" + body + ")");
      elems.push_back(ch - '0');
    }
  }
  if (elems.empty()) raise(ErrorKind::Parse, "empty cycle ()");
  return elems;
}

}  // namespace

Permutation parse_cycles(const std::string& text, int size) {
  if (size < 1) raise(ErrorKind::Shape, "permutation size must be positive");
  std::vector<int> img(size);
  for (int i = 0; i < size; ++i) img[i] = i + 1;
  std::vector<bool> used(size, false);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      raise(ErrorKind::Parse, "expected '(' in cycle notation");
    size_t close = text.find(')', pos);
    if (close == std::string::npos)
      raise(ErrorKind::Parse, "unbalanced '(' in cycle notation");
    std::vector<int> cyc = group_elements(text.substr(pos + 1, close - pos - 1));
    for (size_t k = 0; k < cyc.size(); ++k) {
      int from = cyc[k];
      int to = cyc[(k + 1) % cyc.size()];
      if (from < 1 || from > size)
        raise(ErrorKind::Parse, "cycle element " + std::to_string(from) +
                                    " out of range [1, " + std::to_string(size) + "]");
      if (used[from - 1])
        raise(ErrorKind::Parse,
              "element " + std::to_string(from) + " appears in two cycles");
      used[from - 1] = true;
      img[from - 1] = to;
    }
    pos = close + 1;
    skip_ws();
  }
  return Permutation(std::move(img));
}

std::string format_cycles(const Permutation& p) {
  bool compact = p.size() <= 9;
  std::ostringstream os;
  for (const auto& cyc : p.cycles()) {
    os << '(';
    for (size_t k = 0; k < cyc.size(); ++k) {
      if (k && !compact) os << ' ';
      os << cyc[k];
    }
    os << ')';
  }
  return os.str();
}

Mat to_matrix(const Permutation& p, Field field) {
  Mat m(p.size(), p.size(), field);
  for (int i = 1; i <= p.size(); ++i) m(p.image(i) - 1, i - 1) = 1;
  return m;
}

Mat fixed_point_projector(const Involution& c, Field field) {
  Mat m(c.size(), c.size(), field);
  for (int i = 1; i <= c.size(); ++i)
    if (c.is_fixed(i)) m(i - 1, i - 1) = 1;
  return m;
}

Mat commuting_y(const Involution& c, Field field) {
  Mat i = Mat::identity(c.size(), field);
  Mat cm = to_matrix(c.perm(), field);
  return i + cm - fixed_point_projector(c, field);
}

bool commutes(const Mat& a, const Mat& c) {
  if (a.rows() != a.cols() || c.rows() != c.cols() || a.rows() != c.rows())
    raise(ErrorKind::DimensionMismatch, "commutation needs equal square matrices");
  return a * c == c * a;
}

}  // namespace icx
