#pragma once

#include <json.hpp>

#include "selfsim/dense_poly.hpp"
#include "selfsim/matrix.hpp"
#include "selfsim/multi_laurent.hpp"
#include "selfsim/sfraction.hpp"

namespace selfsim {

// Polynomials are ascending coefficient arrays. Fractions are
// {"num": [...], "den": [e_0, ...]}, or a bare array when the denominator is
// trivial. Multivariate elements are {"terms": [[[e_1, ...], c], ...],
// "den": [z_1, ...]}.

nlohmann::json to_json(const DensePoly &f);
DensePoly poly_from_json(Residue p, const nlohmann::json &j);

nlohmann::json to_json(const SFraction &a);
SFraction sfraction_from_json(const RingPtr &ring, const nlohmann::json &j);

nlohmann::json to_json(const MultiLaurent &a);
MultiLaurent multi_laurent_from_json(Residue p, std::size_t d, const nlohmann::json &j);

nlohmann::json to_json(const MultiSFraction &a);
MultiSFraction multi_sfraction_from_json(const MultiRingPtr &ring, const nlohmann::json &j);

nlohmann::json to_json(const PolyMat &m);
PolyMat poly_mat_from_json(Residue p, const nlohmann::json &j);

nlohmann::json to_json(const ColumnVec &v);
ColumnVec column_from_json(Residue p, const nlohmann::json &j);

} // namespace selfsim
