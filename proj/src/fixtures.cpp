#include "seqcal/fixtures.hpp"

#include "seqcal/embedded_data.hpp"
#include "seqcal/error.hpp"

namespace seqcal::fixtures {

const std::vector<std::pair<std::string, std::string_view>>& shipped_files() {
  static const std::vector<std::pair<std::string, std::string_view>> files{
      {"counter.cg", embedded::k_counter_cg},
      {"carry-conjecture.cg", embedded::k_carry_conjecture_cg},
      {"fig6.cg", embedded::k_fig6_cg},
      {"fig9.cg", embedded::k_fig9_cg},
      {"fig9.replay", embedded::k_fig9_replay},
      {"fig14.cg", embedded::k_fig14_cg},
      {"fig14.replay", embedded::k_fig14_replay},
      {"paper.scl", embedded::k_paper_scl},
  };
  return files;
}

std::string_view shipped(std::string_view file_name) {
  for (const auto& [name, text] : shipped_files())
    if (name == file_name) return text;
  throw Error("no shipped file named '" + std::string(file_name) + "'");
}

BooleanGraph counter() { return parse_graph(embedded::k_counter_cg); }

SetGraph counter_sets() {
  auto s = [](std::initializer_list<std::size_t> m) { return StateSet(16, m); };
  StateSet q0 = s({2, 3, 6, 7, 10, 11, 14, 15});
  StateSet nq0 = s({0, 1, 4, 5, 8, 9, 12, 13});
  return make_set_graph(16, {
                                {"v0", s({9, 10, 11, 13, 14, 15}), "v1"},
                                {"v2", q0, "v3"},
                                {"v3", q0, "v4"},
                                {"v5", nq0, "v6"},
                                {"v6", nq0, "v7"},
                                {"v8", s({0, 2, 4, 6, 8, 10, 12, 14}), "v9"},
                                {"v9", s({1, 2, 5, 6, 9, 10, 13, 14}), "v10"},
                                {"v11", s({1, 3, 5, 7, 9, 11, 13, 15}), "v12"},
                                {"v12", s({0, 3, 4, 7, 8, 11, 12, 15}), "v13"},
                                {"v14", s({4, 5, 7, 8, 9, 11}), "v15"},
                                {"v16", s({2, 14}), "v17"},
                            });
}

BooleanGraph carry_conjecture() { return parse_graph(embedded::k_carry_conjecture_cg); }

Elaboration counter_normalized() { return parse_elaboration(embedded::k_fig6_cg, counter()); }

BooleanGraph resolution_example() { return parse_graph(embedded::k_fig9_cg); }
std::vector<ResolutionStep> resolution_replay() { return parse_replay(embedded::k_fig9_replay); }
BooleanGraph induction_example() { return parse_graph(embedded::k_fig14_cg); }
std::vector<ResolutionStep> induction_replay() { return parse_replay(embedded::k_fig14_replay); }

namespace {

// c0 <- {b1,b2}, c1 <- {b0,b1}, c2 <- {b0,b2}
BinaryRelation shared_rbc() {
  return {3, 3, {{1, 0}, {2, 0}, {0, 1}, {1, 1}, {0, 2}, {2, 2}}};
}

}  // namespace

RelationPair composite_not_total() {
  return {{2, 3, {{0, 0}, {0, 1}, {1, 2}}}, shared_rbc()};
}

RelationPair composite_total() {
  return {{3, 3, {{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 2}}}, shared_rbc()};
}

ConstraintFile paper_constraints() { return parse_scl(embedded::k_paper_scl); }

}  // namespace seqcal::fixtures
