#include "syzimp/ring.hpp"

#include <algorithm>

namespace syzimp {

const std::vector<std::string>& var_names(RingKind k) {
  static const std::vector<std::string> binary = {"s", "t"};
  static const std::vector<std::string> ternary = {"s", "t", "u"};
  static const std::vector<std::string> bihom = {"s", "u", "t", "v"};
  switch (k) {
    case RingKind::binary: return binary;
    case RingKind::ternary: return ternary;
    case RingKind::bihom: return bihom;
  }
  return binary;
}

const std::vector<std::string>& var_names(TargetKind k) {
  static const std::vector<std::string> none = {};
  static const std::vector<std::string> p2 = {"x", "y", "z"};
  static const std::vector<std::string> p3 = {"x", "y", "z", "w"};
  switch (k) {
    case TargetKind::none: return none;
    case TargetKind::p2: return p2;
    case TargetKind::p3: return p3;
  }
  return none;
}

int mono_count(RingKind k, Deg d) {
  if (d.empty()) return 0;
  switch (k) {
    case RingKind::binary: return d.a + 1;
    case RingKind::ternary: return (d.a + 1) * (d.a + 2) / 2;
    case RingKind::bihom: return (d.a + 1) * (d.b + 1);
  }
  return 0;
}

std::vector<Mono> monomials(RingKind k, Deg d) {
  std::vector<Mono> out;
  if (d.empty()) return out;
  out.reserve(mono_count(k, d));
  switch (k) {
    case RingKind::binary:
      for (int es = d.a; es >= 0; --es) out.push_back({es, d.a - es, 0, 0});
      break;
    case RingKind::ternary:
      for (int es = d.a; es >= 0; --es)
        for (int et = d.a - es; et >= 0; --et)
          out.push_back({es, et, d.a - es - et, 0});
      break;
    case RingKind::bihom:
      for (int es = d.a; es >= 0; --es)
        for (int et = d.b; et >= 0; --et)
          out.push_back({es, d.a - es, et, d.b - et});
      break;
  }
  return out;
}

int mono_index(RingKind k, Deg d, const Mono& m) {
  switch (k) {
    case RingKind::binary:
      return m[1];  // exponent of t
    case RingKind::ternary: {
      int block = d.a - m[0];
      return block * (block + 1) / 2 + m[2];  // offset by exponent of u
    }
    case RingKind::bihom:
      return (d.a - m[0]) * (d.b + 1) + (d.b - m[2]);
  }
  return -1;
}

Deg mono_degree(RingKind k, const Mono& m) {
  switch (k) {
    case RingKind::binary: return {m[0] + m[1], 0};
    case RingKind::ternary: return {m[0] + m[1] + m[2], 0};
    case RingKind::bihom: return {m[0] + m[1], m[2] + m[3]};
  }
  return {};
}

std::vector<TMono> target_monomials(TargetKind k, int d) {
  std::vector<TMono> out;
  if (d < 0) return out;
  if (k == TargetKind::p2) {
    for (int x = d; x >= 0; --x)
      for (int y = d - x; y >= 0; --y) out.push_back({x, y, d - x - y, 0});
  } else if (k == TargetKind::p3) {
    for (int x = d; x >= 0; --x)
      for (int y = d - x; y >= 0; --y)
        for (int z = d - x - y; z >= 0; --z)
          out.push_back({x, y, z, d - x - y - z});
  }
  return out;
}

}  // namespace syzimp
