// Test-only oracles, kept independent of the library paths they check.
#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace testsupport {

// Composite Simpson quadrature on [lo, hi]; n is rounded up to even.
inline double simpson(const std::function<double(double)>& f, double lo,
                      double hi, std::size_t n = 200000) {
  if (n % 2) ++n;
  const double h = (hi - lo) / static_cast<double>(n);
  double acc = f(lo) + f(hi);
  for (std::size_t i = 1; i < n; ++i)
    acc += f(lo + h * static_cast<double>(i)) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

// Kronecker product chain for explicit small-system Hamiltonians.
inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a,
                             const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Eigen::MatrixXcd pauli(char axis) {
  Eigen::MatrixXcd m(2, 2);
  // Basis order |0>, |1>; the library maps bit value 1 to |1> (spin up).
  switch (axis) {
    case 'x': m << 0, 1, 1, 0; break;
    case 'y': m << 0, std::complex<double>(0, -1), std::complex<double>(0, 1), 0; break;
    case 'z': m << -1, 0, 0, 1; break;
    default: m << 1, 0, 0, 1; break;
  }
  return m;
}

// Operator acting with `axis` on `bit` of an n_bits register whose basis
// index IS the bitmask (bit 0 least significant).
inline Eigen::MatrixXcd one_site(int n_bits, int bit, char axis) {
  Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(1, 1);
  for (int b = n_bits - 1; b >= 0; --b)
    op = kron(op, b == bit ? pauli(axis) : pauli('1')).eval();
  return op;
}

// Shallow well-formedness check for the generated XML subset: balanced
// tags, quoted attributes, single root.
inline bool xml_well_formed(const std::string& text) {
  std::vector<std::string> stack;
  std::size_t pos = 0;
  int roots = 0;
  while ((pos = text.find('<', pos)) != std::string::npos) {
    const std::size_t end = text.find('>', pos);
    if (end == std::string::npos) return false;
    std::string tag = text.substr(pos + 1, end - pos - 1);
    pos = end + 1;
    if (tag.rfind("?", 0) == 0) continue;  // declaration
    bool closing = false, self_closing = false;
    if (!tag.empty() && tag.front() == '/') {
      closing = true;
      tag.erase(0, 1);
    }
    if (!tag.empty() && tag.back() == '/') {
      self_closing = true;
      tag.pop_back();
    }
    // Attribute quotes must pair up.
    int quotes = 0;
    for (char c : tag)
      if (c == '"') ++quotes;
    if (quotes % 2) return false;
    const std::string name = tag.substr(0, tag.find_first_of(" \t\n"));
    if (name.empty()) return false;
    if (closing) {
      if (stack.empty() || stack.back() != name) return false;
      stack.pop_back();
    } else if (!self_closing) {
      if (stack.empty() && ++roots > 1) return false;
      stack.push_back(name);
    } else if (stack.empty()) {
      return false;  // self-closing element outside the root
    }
  }
  return stack.empty() && roots == 1;
}

}  // namespace testsupport
