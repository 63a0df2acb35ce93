#include "iwasawa/satake.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <sstream>

#include "iwasawa/errors.hpp"

namespace iwasawa {
namespace {

using Arrows = std::vector<std::pair<std::size_t, std::size_t>>;

struct Entry {
  std::string label;
  SatakeDiagram diagram;
};

std::string encode(const std::string& type, const std::vector<NodeColor>& colors, const Arrows& arrows) {
  std::string out = type + "|";
  for (auto c : colors) out += c == NodeColor::White ? 'o' : '*';
  for (const auto& [a, b] : arrows) out += "|" + std::to_string(a) + "-" + std::to_string(b);
  return out;
}

/// Diagram of a simple type from 1-based white nodes and arrows.
SatakeDiagram make(const std::string& type, const std::vector<int>& white, const std::vector<std::pair<int, int>>& arrows) {
  SatakeDiagram d;
  d.dynkin.matrix = standard_cartan(type);
  d.dynkin.type = type;
  d.colors.assign(d.dynkin.matrix.size(), NodeColor::Black);
  for (int w : white) d.colors[w - 1] = NodeColor::White;
  for (const auto& [a, b] : arrows) d.arrows.emplace_back(std::min(a, b) - 1, std::max(a, b) - 1);
  std::sort(d.arrows.begin(), d.arrows.end());
  return d;
}

std::vector<int> range(int from, int to) {
  std::vector<int> v;
  for (int i = from; i <= to; ++i) v.push_back(i);
  return v;
}

SatakeDiagram a1xa1(bool arrow) {
  SatakeDiagram d;
  d.dynkin.matrix = {{2, 0}, {0, 2}};
  d.dynkin.type = "A1xA1";
  d.colors = {NodeColor::White, NodeColor::White};
  if (arrow) d.arrows = {{0, 1}};
  return d;
}

constexpr int kMaxTableRank = 8;

std::vector<Entry> build_table() {
  std::vector<Entry> t;
  auto add = [&](const std::string& label, const SatakeDiagram& d) {
    for (const auto& e : t)
      if (e.label == label) return;
    t.push_back({label, canonicalize(d)});
  };
  auto su = [](int p, int q) {
    const int n = p + q - 1;
    std::vector<std::pair<int, int>> arrows;
    std::vector<int> white;
    if (p == q) {
      white = range(1, n);
      for (int i = 1; i < q; ++i) arrows.emplace_back(i, n + 1 - i);
    } else {
      white = range(1, q);
      for (int i = n - q + 1; i <= n; ++i) white.push_back(i);
      for (int i = 1; i <= q; ++i) arrows.emplace_back(i, n + 1 - i);
    }
    return make("A" + std::to_string(n), white, arrows);
  };
  auto so_b = [](int n, int q) { return make("B" + std::to_string(n), range(1, q), {}); };
  // shipped catalog labels first, so they win on coincident diagrams
  add("sl(2,R)", make("A1", {1}, {}));
  add("sl(3,R)", make("A2", {1, 2}, {}));
  add("su(2,1)", su(2, 1));
  add("su(3,1)", su(3, 1));
  add("so(3,1)", a1xa1(true));
  add("so(4,1)", so_b(2, 1));
  add("sp(4,R)", make("B2", {1, 2}, {}));
  add("so(2,1)", make("A1", {1}, {}));
  add("su(1,1)", make("A1", {1}, {}));
  add("sp(2,R)", make("A1", {1}, {}));
  add("so(2,2)", a1xa1(false));
  add("so(3,2)", make("B2", {1, 2}, {}));
  add("sp(1,1)", so_b(2, 1));
  add("so(3,3)", make("A3", {1, 2, 3}, {}));
  add("so(4,2)", su(2, 2));
  add("so(5,1)", make("A3", {2}, {}));
  for (int n = 1; n <= kMaxTableRank; ++n) {
    add("sl(" + std::to_string(n + 1) + ",R)", make("A" + std::to_string(n), range(1, n), {}));
    for (int q = 1; 2 * q <= n + 1; ++q) add("su(" + std::to_string(n + 1 - q) + "," + std::to_string(q) + ")", su(n + 1 - q, q));
    if ((n + 1) % 2 == 0 && n >= 3) {
      std::vector<int> white;
      for (int i = 2; i <= n; i += 2) white.push_back(i);
      add("sl(" + std::to_string((n + 1) / 2) + ",H)", make("A" + std::to_string(n), white, {}));
    }
  }
  for (int n = 2; n <= kMaxTableRank; ++n)
    for (int q = n; q >= 1; --q) add("so(" + std::to_string(2 * n + 1 - q) + "," + std::to_string(q) + ")", so_b(n, q));
  for (int n = 3; n <= kMaxTableRank; ++n) {
    const std::string c = "C" + std::to_string(n);
    add("sp(" + std::to_string(2 * n) + ",R)", make(c, range(1, n), {}));
    for (int q = 1; 2 * q <= n; ++q) {
      std::vector<int> white;
      for (int i = 1; i <= q; ++i) white.push_back(2 * i);
      add("sp(" + std::to_string(n - q) + "," + std::to_string(q) + ")", make(c, white, {}));
    }
  }
  for (int n = 4; n <= kMaxTableRank; ++n) {
    const std::string d = "D" + std::to_string(n);
    for (int q = n; q >= 1; --q) {
      std::string label = "so(" + std::to_string(2 * n - q) + "," + std::to_string(q) + ")";
      if (q == n) add(label, make(d, range(1, n), {}));
      else if (q == n - 1) add(label, make(d, range(1, n), {{n - 1, n}}));
      else add(label, make(d, range(1, q), {}));
    }
    std::vector<int> white;
    for (int i = 2; i <= n - (n % 2 ? 2 : 0); i += 2) white.push_back(i);
    if (n % 2) {
      white.push_back(n - 1);
      white.push_back(n);
      add("so*(" + std::to_string(2 * n) + ")", make(d, white, {{n - 1, n}}));
    } else {
      add("so*(" + std::to_string(2 * n) + ")", make(d, white, {}));
    }
  }
  add("EI", make("E6", range(1, 6), {}));
  add("EII", make("E6", range(1, 6), {{1, 6}, {3, 5}}));
  add("EIII", make("E6", {1, 2, 6}, {{1, 6}}));
  add("EIV", make("E6", {1, 6}, {}));
  add("EV", make("E7", range(1, 7), {}));
  add("EVIII", make("E8", range(1, 8), {}));
  add("FI", make("F4", range(1, 4), {}));
  add("G", make("G2", {1, 2}, {}));
  return t;
}

const std::vector<Entry>& table() {
  static const std::vector<Entry> t = build_table();
  return t;
}

}  // namespace

bool SatakeDiagram::same_diagram(const SatakeDiagram& o) const {
  return dynkin.matrix == o.dynkin.matrix && dynkin.type == o.dynkin.type && colors == o.colors && arrows == o.arrows;
}

QVec project_rho(const ComplexRoot& root, std::size_t split_rank) {
  QVec out;
  for (std::size_t i = 0; i < split_rank; ++i) out.push_back(root.functional[i].re());
  return out;
}

std::vector<NodeColor> color_nodes(const std::vector<QVec>& rho) {
  std::vector<NodeColor> out;
  for (const auto& r : rho) out.push_back(is_zero_vec(r) ? NodeColor::Black : NodeColor::White);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> detect_arrows(const std::vector<QVec>& rho,
                                                               const std::vector<NodeColor>& colors) {
  std::map<QVec, std::vector<std::size_t>> fibers;
  for (std::size_t i = 0; i < rho.size(); ++i)
    if (colors[i] == NodeColor::White) fibers[rho[i]].push_back(i);
  Arrows out;
  for (const auto& [r, nodes] : fibers) {
    if (nodes.size() > 2)
      throw InconsistencyError("detect_arrows: " + std::to_string(nodes.size()) + " white simple roots share a restriction");
    if (nodes.size() == 2) out.emplace_back(nodes[0], nodes[1]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SatakeDiagram canonicalize(const SatakeDiagram& d) {
  const auto& m = d.dynkin.matrix;
  auto comps = dynkin_components(m);
  std::sort(comps.begin(), comps.end(), [](const DynkinComponent& a, const DynkinComponent& b) { return a.type < b.type; });
  std::vector<std::vector<std::vector<std::size_t>>> options;
  for (const auto& c : comps) {
    std::vector<std::size_t> nodes = c.nodes;
    std::sort(nodes.begin(), nodes.end());
    options.push_back(bourbaki_labelings(m, nodes, c.type));
  }
  std::vector<std::size_t> perm(comps.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<std::pair<std::string, std::vector<std::size_t>>> best;
  do {
    bool sorted = true;
    for (std::size_t i = 1; i < perm.size(); ++i) sorted = sorted && comps[perm[i - 1]].type <= comps[perm[i]].type;
    if (!sorted) continue;
    std::vector<std::size_t> choice(comps.size(), 0);
    while (true) {
      std::vector<std::size_t> order;
      for (std::size_t i = 0; i < perm.size(); ++i) {
        const auto& lab = options[perm[i]][choice[perm[i]]];
        order.insert(order.end(), lab.begin(), lab.end());
      }
      std::vector<std::size_t> pos(order.size());
      for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
      std::vector<NodeColor> colors;
      for (auto o : order) colors.push_back(d.colors[o]);
      Arrows arrows;
      for (const auto& [a, b] : d.arrows) arrows.emplace_back(std::min(pos[a], pos[b]), std::max(pos[a], pos[b]));
      std::sort(arrows.begin(), arrows.end());
      std::string key = encode("", colors, arrows);
      if (!best || key < best->first) best = std::make_pair(key, order);
      std::size_t k = 0;
      while (k < choice.size() && ++choice[k] == options[k].size()) choice[k++] = 0;
      if (k == choice.size()) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  const auto& order = best->second;
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  SatakeDiagram out;
  out.dynkin.matrix.assign(order.size(), std::vector<int>(order.size()));
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = 0; j < order.size(); ++j) out.dynkin.matrix[i][j] = m[order[i]][order[j]];
    out.colors.push_back(d.colors[order[i]]);
  }
  for (const auto& [a, b] : d.arrows) out.arrows.emplace_back(std::min(pos[a], pos[b]), std::max(pos[a], pos[b]));
  std::sort(out.arrows.begin(), out.arrows.end());
  for (std::size_t i = 0; i < comps.size(); ++i) out.dynkin.type += (i ? "x" : "") + comps[i].type;
  out.real_form_label = d.real_form_label;
  return out;
}

std::optional<std::string> identify_real_form(const SatakeDiagram& d) {
  SatakeDiagram c = canonicalize(d);
  for (const auto& e : table())
    if (e.diagram.same_diagram(c)) return e.label;
  return std::nullopt;
}

SatakeDiagram assemble_satake(const CartanMatrixData& dynkin, const std::vector<NodeColor>& colors,
                              const std::vector<std::pair<std::size_t, std::size_t>>& arrows) {
  const std::size_t n = dynkin.matrix.size();
  if (colors.size() != n) throw PreconditionError("assemble_satake: one color per node required");
  std::vector<int> used(n, 0);
  for (const auto& [a, b] : arrows) {
    if (a >= n || b >= n || a == b) throw PreconditionError("assemble_satake: arrow endpoints out of range");
    if (colors[a] != NodeColor::White || colors[b] != NodeColor::White)
      throw PreconditionError("assemble_satake: arrows must join white nodes");
    if (++used[a] > 1 || ++used[b] > 1) throw PreconditionError("assemble_satake: node in more than one arrow");
  }
  SatakeDiagram d;
  d.dynkin = dynkin;
  d.colors = colors;
  d.arrows = arrows;
  SatakeDiagram c = canonicalize(d);
  c.real_form_label = identify_real_form(c);
  return c;
}

SatakeDiagram satake_for_label(const std::string& label) {
  for (const auto& e : table())
    if (e.label == label) {
      SatakeDiagram d = e.diagram;
      d.real_form_label = label;
      return d;
    }
  throw PreconditionError("no Satake diagram known for '" + label + "'");
}

std::vector<std::string> known_real_forms() {
  std::vector<std::string> out;
  for (const auto& e : table()) out.push_back(e.label);
  return out;
}

std::string color_string(const SatakeDiagram& d) {
  std::string s;
  for (auto c : d.colors) s += c == NodeColor::White ? 'o' : '*';
  return s;
}

std::string render(const SatakeDiagram& d, const std::string& format) {
  std::ostringstream os;
  if (format == "text") {
    os << "type: " << d.dynkin.type << "\n";
    os << "nodes: " << color_string(d) << "\n";
    os << "arrows:";
    if (d.arrows.empty()) os << " none";
    for (const auto& [a, b] : d.arrows) os << " " << a + 1 << "-" << b + 1;
    os << "\n";
    os << "label: " << d.real_form_label.value_or("unknown") << "\n";
    return os.str();
  }
  if (format == "json") {
    nlohmann::ordered_json j;
    j["type"] = d.dynkin.type;
    j["colors"] = nlohmann::json::array();
    for (auto c : d.colors) j["colors"].push_back(c == NodeColor::White ? "w" : "b");
    j["arrows"] = nlohmann::json::array();
    for (const auto& [a, b] : d.arrows) j["arrows"].push_back({a + 1, b + 1});
    if (d.real_form_label) j["label"] = *d.real_form_label;
    else j["label"] = nullptr;
    return j.dump();
  }
  if (format == "dot") {
    const std::size_t n = d.colors.size();
    os << "graph satake {\n";
    if (d.real_form_label) os << "  label=\"" << *d.real_form_label << " (" << d.dynkin.type << ")\";\n";
    else os << "  label=\"" << d.dynkin.type << "\";\n";
    os << "  node [shape=circle, width=0.3, fixedsize=true, style=filled];\n";
    for (std::size_t i = 0; i < n; ++i)
      os << "  n" << i + 1 << " [label=\"" << i + 1 << "\", fillcolor="
         << (d.colors[i] == NodeColor::White ? "white, fontcolor=black" : "black, fontcolor=white") << "];\n";
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        int bond = d.dynkin.matrix[i][j] * d.dynkin.matrix[j][i];
        if (bond == 0) continue;
        os << "  n" << i + 1 << " -- n" << j + 1;
        if (bond > 1) {
          std::string color = "black";
          for (int b = 1; b < bond; ++b) color += ":black";
          os << " [color=\"" << color << "\"]";
        }
        os << ";\n";
      }
    for (const auto& [a, b] : d.arrows)
      os << "  n" << a + 1 << " -- n" << b + 1 << " [style=dashed, dir=both, constraint=false];\n";
    os << "}\n";
    return os.str();
  }
  throw PreconditionError("unknown render format '" + format + "' (expected text, dot or json)");
}

}  // namespace iwasawa
