#pragma once

#include <json.hpp>

#include "slbethe/bae.hpp"
#include "slbethe/bethe_data.hpp"
#include "slbethe/certify.hpp"
#include "slbethe/duality.hpp"
#include "slbethe/grading.hpp"
#include "slbethe/residues.hpp"
#include "slbethe/shapes.hpp"

namespace slbethe {

// JSON conventions used everywhere: exact rationals are strings "n/d",
// complex numbers are [re, im] pairs, every top-level document carries
// "schema": 1. Key order is fixed so identical inputs give identical bytes.
using ojson = nlohmann::ordered_json;

ojson make_envelope(const std::string& command);

ojson to_json(const CD& z);
CD complex_from_json(const ojson& j);

ojson to_json(const Grading& g);
Grading grading_from_json(const ojson& j);

ojson to_json(const Partition& p);
Partition partition_from_json(const ojson& j);

ojson to_json(const SkewShape& sh);
SkewShape skew_from_json(const ojson& j);

ojson to_json(const BetheData<Rat>& d);
ojson to_json(const BetheData<CD>& d);
BetheData<Rat> bethe_data_rat_from_json(const ojson& j);
BetheData<CD> bethe_data_cd_from_json(const ojson& j);

ojson to_json(const BAESystem& sys);
BAESystem bae_system_from_json(const ojson& j);

ojson to_json(const BAESolution& sol);
ojson to_json(const SolveInfo& info);

ojson to_json(const Certificate& cert);
ojson to_json(const ResidueReport& rep);
ojson to_json(const CancellationReport& rep);
ojson to_json(const DualityResult& res);
ojson to_json(const DualReport& rep);

}  // namespace slbethe
