# Copyright 2026 The TrotterLab Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Python front end for the trotterlab simulator."""

import json

from ._trotterlab import (
    AngleConvention,
    ChainSpec,
    ConfigError,
    GateFamily,
    InvalidState,
    NumericalError,
    TrotterCircuitSpec,
    UnsupportedMapping,
    ZLayerSpec,
    __version__,
    build_circuit,
    chain_from_circuit,
    circuit_from_chain,
    continuous_probabilities,
    convergence_study,
    dense_occupation,
    figure_ids,
    find_peaks,
    ipr,
    p001_closed_form,
    p01_closed_form,
    realize_z_layer,
    resonance_chain,
    subspace_probabilities,
    tail_prob,
    verify,
)
from . import _trotterlab


def run_sweep(config, threads=1):
    """Run a sweep described by a run-configuration dict; returns the decoded result."""
    text = config if isinstance(config, str) else json.dumps(config)
    return json.loads(_trotterlab.run_sweep_json(text, threads))


def run_figure(figure_id, threads=1, seed=None):
    """Run a bundled figure recipe; returns the decoded result."""
    return json.loads(_trotterlab.run_figure_json(figure_id, threads, seed))


__all__ = [
    "AngleConvention",
    "ChainSpec",
    "ConfigError",
    "GateFamily",
    "InvalidState",
    "NumericalError",
    "TrotterCircuitSpec",
    "UnsupportedMapping",
    "ZLayerSpec",
    "__version__",
    "build_circuit",
    "chain_from_circuit",
    "circuit_from_chain",
    "continuous_probabilities",
    "convergence_study",
    "dense_occupation",
    "figure_ids",
    "find_peaks",
    "ipr",
    "p001_closed_form",
    "p01_closed_form",
    "realize_z_layer",
    "resonance_chain",
    "run_figure",
    "run_sweep",
    "subspace_probabilities",
    "tail_prob",
    "verify",
]
