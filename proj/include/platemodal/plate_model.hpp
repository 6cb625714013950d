#pragma once

#include "platemodal/galerkin.hpp"
#include "platemodal/params.hpp"

namespace platemodal {

/// End-to-end workflow: per-direction bases, coupling matrices, assembly,
/// eigendecomposition.  Returns all modes sorted by ascending lambda.
ModalModel build_modal_model(const PlateConfig& config);

/// Closed-form eigenvalue of the fully simply supported plate for sine mode
/// numbers k, j >= 1 (the validation route for SSSS configurations).
double navier_lambda(const PlateConfig& config, int k, int j);

}  // namespace platemodal
