// SPDX-License-Identifier: Apache-2.0
// Formulas over the Points/Lines language used by the meaning-preservation
// checks: the atomic ones and shallow quantified ones up to depth 3.
#pragma once

#include <string>
#include <vector>

#include "sigrel/folkit.hpp"

namespace sigrel::fixtures {

inline std::vector<folkit::Formula> lines_formulas() {
  folkit::Signature s = folkit::lines_spec().source;
  folkit::SortMap lines{{"l", "Lines"}, {"h", "Lines"}, {"x", "Points"}, {"y", "Points"}};
  std::vector<std::string> texts = {
      "(I x l)",
      "(= l h)",
      "(= x y)",
      "(exists (l Lines) (and (I x l) (I y l)))",
      "(forall (x Points) (-> (I x l) (I x h)))",
      "(exists (x Points) (and (I x l) (I x h)))",
      "(exists (h Lines) (and (I x h) (forall (y Points) (-> (I y h) (I y l)))))",
      "(exists (h Lines) (and (I x h) (not (exists (y Points) (and (I y l) (I y h))))))",
      "(forall ((x Points) (y Points)) (exists (l Lines) (and (I x l) (I y l))))",
      "(forall (l Lines) (exists ((x Points) (y Points)) (and (not (= x y)) (I x l) (I y l))))",
  };
  std::vector<folkit::Formula> out;
  for (const auto& t : texts) out.push_back(folkit::parse(t, s, lines));
  return out;
}

}  // namespace sigrel::fixtures
