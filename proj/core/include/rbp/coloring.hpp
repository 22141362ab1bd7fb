#pragma once

#include <string>
#include <vector>

#include "rbp/errors.hpp"
#include "rbp/instance.hpp"

namespace rbp {

// One bit per pair: bit i set means p_i is red (hence q_i blue). By
// representation every pair has exactly one node of each color.
struct Coloring {
  std::vector<bool> p_red;

  int n_pairs() const { return static_cast<int>(p_red.size()); }

  bool node_is_red(int node) const {
    bool r = p_red[MetricInstance::pair_of(node)];
    return (node & 1) ? !r : r;
  }

  Coloring flipped() const {
    Coloring c = *this;
    c.p_red.flip();
    return c;
  }

  // "0101..." with position i holding pair i's bit.
  std::string to_bits() const {
    std::string s(p_red.size(), '0');
    for (size_t i = 0; i < p_red.size(); ++i)
      if (p_red[i]) s[i] = '1';
    return s;
  }

  static Coloring from_bits(const std::string& bits) {
    Coloring c;
    c.p_red.reserve(bits.size());
    for (char ch : bits) {
      if (ch != '0' && ch != '1')
        throw ParseError("coloring bits must be 0/1, got '" +
                         std::string(1, ch) + "'");
      c.p_red.push_back(ch == '1');
    }
    return c;
  }

  // Class members in increasing node order.
  std::vector<int> class_nodes(bool red) const {
    std::vector<int> out;
    out.reserve(p_red.size());
    for (int i = 0; i < n_pairs(); ++i) {
      int p = MetricInstance::p_node(i), q = MetricInstance::q_node(i);
      out.push_back(p_red[i] == red ? p : q);
    }
    return out;
  }
};

}  // namespace rbp
