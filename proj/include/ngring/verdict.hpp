#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ngring {

enum class NGKind {
  Gorenstein,
  NearlyGorensteinNotGorenstein,
  NotNearlyGorenstein,
  Unknown,
};

struct Evidence {
  std::string rule;
  std::string detail;
};

struct NGVerdict {
  NGKind kind = NGKind::Unknown;
  std::vector<Evidence> evidence;
  std::optional<long> witness_degree;  // first failing degree for NotNearlyGorenstein

  bool nearly_gorenstein() const {
    return kind == NGKind::Gorenstein || kind == NGKind::NearlyGorensteinNotGorenstein;
  }
};

std::string ng_kind_str(NGKind k);

}  // namespace ngring
