#include "seqcal/vertex.hpp"

#include <cctype>

namespace seqcal {

std::strong_ordering natural_compare(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  auto digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; };
  while (i < a.size() && j < b.size()) {
    if (digit(a[i]) && digit(b[j])) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && digit(a[ie])) ++ie;
      while (je < b.size() && digit(b[je])) ++je;
      // Strip leading zeros, then longer run is larger.
      std::size_t is = i, js = j;
      while (is + 1 < ie && a[is] == '0') ++is;
      while (js + 1 < je && b[js] == '0') ++js;
      if (ie - is != je - js) return (ie - is) <=> (je - js);
      for (std::size_t k = 0; k < ie - is; ++k)
        if (a[is + k] != b[js + k]) return a[is + k] <=> b[js + k];
      if (ie - i != je - j) return (ie - i) <=> (je - j);
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return a[i] <=> b[j];
    ++i;
    ++j;
  }
  return (a.size() - i) <=> (b.size() - j);
}

std::string render(const ElabVertex& v, const VertexNamer& name) {
  return "<" + render(v.aft, name) + ", " + render(v.fore, name) + ">";
}

std::string render_slash(const ElabVertex& v, const VertexNamer& name) {
  return render(v.aft, name) + " / " + render(v.fore, name);
}

}  // namespace seqcal
