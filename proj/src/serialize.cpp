#include "coopinf/serialize.hpp"

namespace coopinf {

using nlohmann::json;

namespace {

json index_pairs(const Pattern& p) {
  json out = json::array();
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (p.at(i, j)) out.push_back({i, j});
  return out;
}

}  // namespace

json to_json(const Matrix& m) {
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", m.data()}};
}

json to_json(const SinkhornResult& res) {
  json out;
  out["L"] = to_json(res.limit.L);
  out["T"] = to_json(res.limit.T);
  out["iterations"] = res.iterations;
  out["residual"] = res.residual;
  out["converged"] = res.converged;
  if (!res.history.empty()) out["history"] = res.history;
  return out;
}

json to_json(const Matrix& m, const SupportClassification& sc) {
  json out;
  out["on_diagonal"] = index_pairs(sc.on_diagonal);
  out["off_diagonal"] = index_pairs(sc.off_diagonal);
  out["max_partial_pattern"] = index_pairs(sc.max_partial_pattern);
  std::size_t eta = 0;
  for (double v : m.data())
    if (v > 0.0) ++eta;
  out["eta"] = eta;
  if (m.square() && sc.max_partial_pattern.count() > 0)
    out["tau"] = count_indecomposable_components(apply_max_pattern(m));
  else
    out["tau"] = nullptr;
  return out;
}

json to_json(const CIBounds& b) {
  json out;
  out["ci"] = b.ci;
  out["n"] = b.n;
  out["eta"] = b.eta;
  out["tau"] = b.tau;
  out["uniform"] = b.bound_uniform;
  out["structural"] = b.bound_structural;
  if (b.d) {
    out["d"] = *b.d;
    out["diagonals"] = *b.bound_diagonals;
  } else {
    out["d"] = nullptr;
    out["diagonals"] = nullptr;
  }
  if (b.eta_bar != b.eta || b.tau_bar != b.tau) {
    out["eta_bar"] = b.eta_bar;
    out["tau_bar"] = b.tau_bar;
    out["structural_bar"] =
        1.0 / static_cast<double>(b.eta_bar - 2 * b.n + b.tau_bar + 1);
  }
  if (b.low_confidence) out["low_confidence"] = true;
  return out;
}

json to_json(const BvNDecomposition& dec) {
  json terms = json::array();
  for (const auto& t : dec.terms) terms.push_back({{"theta", t.theta}, {"perm", t.perm}});
  return {{"terms", terms}};
}

json to_json(const CrossRatioProfile& prof) {
  json ratios = json::array();
  for (std::size_t k = 0; k < prof.diagonals.size(); ++k)
    ratios.push_back({{"sigma", prof.diagonals[k].sigma},
                      {"product", prof.diagonals[k].product},
                      {"cr", prof.ratios[k]}});
  return {{"base", prof.base_sigma}, {"ratios", ratios}};
}

json to_json(const PerturbationReport& rep) {
  return {{"row", rep.row},
          {"col", rep.col},
          {"eps", rep.epsilon},
          {"kind", to_string(rep.kind)},
          {"input_distance", rep.input_distance},
          {"limit_distance", rep.limit_distance},
          {"ci_before", rep.ci_before},
          {"ci_after", rep.ci_after}};
}

json to_json(const StableWitness& w) {
  json blocks = json::array();
  for (const auto& b : w.blocks) blocks.push_back({{"rows", b.rows}, {"cols", b.cols}});
  return {{"A", to_json(w.a)},
          {"row_perm", w.row_perm},
          {"col_perm", w.col_perm},
          {"blocks", blocks}};
}

}  // namespace coopinf
