#pragma once

#include <json.hpp>

#include "coopinf/cooperative.hpp"
#include "coopinf/cross_ratio.hpp"
#include "coopinf/matrix.hpp"
#include "coopinf/pattern.hpp"
#include "coopinf/perturbation.hpp"
#include "coopinf/sinkhorn.hpp"
#include "coopinf/stable_witness.hpp"

namespace coopinf {

nlohmann::json to_json(const Matrix& m);
nlohmann::json to_json(const SinkhornResult& res);
nlohmann::json to_json(const Matrix& m, const SupportClassification& sc);
nlohmann::json to_json(const CIBounds& b);
nlohmann::json to_json(const BvNDecomposition& dec);
nlohmann::json to_json(const CrossRatioProfile& prof);
nlohmann::json to_json(const PerturbationReport& rep);
nlohmann::json to_json(const StableWitness& w);

}  // namespace coopinf
