#pragma once

#include "lr/dual_flow.hpp"
#include "lr/filling.hpp"
#include "lr/hive.hpp"
#include "lr/honeycomb.hpp"
#include "lr/summation.hpp"

#include "json.hpp"

namespace lr {

// All readers throw std::invalid_argument on a malformed document.

// {"mu":[...],"nu":[...],"lambda":[...],"k":[[k11],[k12,k22],...]}
// Row j of "k" holds k_{1j}..k_{jj}.  Shape-checked on read, LR conditions
// are the caller's business.
nlohmann::json filling_to_json(const LRFilling& f);
LRFilling filling_from_json(const nlohmann::json& j);

// {"h":[[0],[h10,h11],...]}
nlohmann::json hive_to_json(const Hive& hv);
Hive hive_from_json(const nlohmann::json& j);

// {"vertices":[[x,y],...],
//  "segments":[{"a":[x,y],"b":[x,y],"class":"mu","mult":1} |
//              {"ray":[x,y],"class":"nu","mult":2}, ...]}
nlohmann::json honeycomb_to_json(const Honeycomb& h);
Honeycomb honeycomb_from_json(const nlohmann::json& j);

// Edge list of the dual graph with the flow's loads:
// [{"face_a":"D(2,0)","face_b":"U(2,0)","class":"mu","capacity":5,
//   "loads":{"mu2":3,"c1":2}}, ...].  Boundary ends read "mu_stub(p)",
// "nu_stub(c)" or "lambda_stub(p)".
nlohmann::json flow_to_json(const WeightedDualGraph& g, const Flow& fl);

// Ordered steps [{"kind":"word","strand_a":[[r,c],...],
//                 "strand_b":[[r,c],...],"labels":[i,j]}, ...]
nlohmann::json trace_to_json(const StepTrace& t);
StepTrace trace_from_json(const nlohmann::json& j);

}  // namespace lr
