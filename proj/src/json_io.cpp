#include "lrpic/json_io.hpp"

#include "lrpic/error.hpp"

namespace lrpic {

void to_json(json& j, const Cell& c) { j = json::array({c.row, c.col}); }

void from_json(const json& j, Cell& c) {
  if (!j.is_array() || j.size() != 2) throw Error(Errc::InvalidCell, "expected [row, col], got " + j.dump());
  c = make_cell(j.at(0).get<int>(), j.at(1).get<int>());
}

void to_json(json& j, const Partition& p) { j = p.parts(); }

void from_json(const json& j, Partition& p) { p = Partition(j.get<std::vector<int>>()); }

void to_json(json& j, const SkewShape& s) { j = json{{"outer", s.outer()}, {"inner", s.inner()}}; }

void from_json(const json& j, SkewShape& s) {
  s = SkewShape(j.at("outer").get<Partition>(), j.at("inner").get<Partition>());
}

void to_json(json& j, const Tableau& t) { j = json{{"shape", t.shape()}, {"rows", t.rows()}}; }

void from_json(const json& j, Tableau& t) {
  t = Tableau(j.at("shape").get<Partition>(), j.at("rows").get<std::vector<std::vector<int>>>());
}

void to_json(json& j, const Word& w) { j = json{{"letters", w.letters}, {"cells", w.cells}}; }

void from_json(const json& j, Word& w) {
  w.letters = j.at("letters").get<std::vector<int>>();
  w.cells = j.at("cells").get<std::vector<Cell>>();
  if (w.letters.size() != w.cells.size()) {
    throw Error(Errc::SizeMismatch, "word has " + std::to_string(w.letters.size()) + " letters and " +
                                        std::to_string(w.cells.size()) + " cells");
  }
}

void to_json(json& j, const TotalOrder& o) { j = json{{"cells", o.cells()}}; }

void from_json(const json& j, TotalOrder& o) { o = TotalOrder(j.at("cells").get<std::vector<Cell>>()); }

void to_json(json& j, const Picture& f) {
  json pairs = json::array();
  for (const auto& [x, y] : f.pairs()) pairs.push_back(json::array({x, y}));
  j = json{{"pairs", std::move(pairs)}};
}

void from_json(const json& j, Picture& f) {
  std::vector<CellPair> pairs;
  for (const auto& p : j.at("pairs")) {
    if (!p.is_array() || p.size() != 2) throw Error(Errc::InvalidCell, "expected [[r,c],[r,c]], got " + p.dump());
    pairs.emplace_back(p.at(0).get<Cell>(), p.at(1).get<Cell>());
  }
  f = Picture(std::move(pairs));
}

void to_json(json& j, const LRInstance& inst) {
  j = json{{"lambda", inst.lambda()}, {"mu", inst.mu()}, {"nu", inst.nu()}, {"rank", inst.rank_bound()}};
}

void from_json(const json& j, LRInstance& inst) {
  std::optional<int> rank;
  if (j.contains("rank")) rank = j.at("rank").get<int>();
  inst = LRInstance(j.at("lambda").get<Partition>(), j.at("mu").get<Partition>(), j.at("nu").get<Partition>(),
                    rank);
}

json count_report(const LRInstance& inst, const CountTriple& counts, const BijectionReport& bijection) {
  json j;
  j["instance"] = inst;
  j["counts"] = {{"pictures", counts.pictures}, {"crystals", counts.crystals}, {"lattice", counts.lattice}};
  j["bijection"] = bijection.ok ? "ok" : "failed";
  j["counterexample"] = bijection.ok ? json(nullptr) : json(bijection.counterexample);
  return j;
}

}  // namespace lrpic
