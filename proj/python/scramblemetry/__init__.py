# Copyright 2026 The scramblemetry authors
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

"""Scrambling measures of operators and unitaries.

The package quantifies how a unitary scrambles quantum information through
three operator measures -- average Pauli weight, Fourier entropy, and their
sum, the operator complexity -- together with the extremal operator, the
exact entropy-versus-weight frontier, and growth measures of unitaries
(exact enumeration over weight-1 Pauli seeds, plus certified lower bounds
from a projected-ascent search).
"""

from ._core import (  # noqa: F401
    DEFAULT_BASE,
    DEFAULT_N_MAX,
    DEFAULT_PTM_N_MAX,
    Circuit,
    CircuitClassification,
    CircuitParseError,
    GrowthReport,
    LimitError,
    MeasureReport,
    PauliSpectrum,
    PauliString,
    PlanePoint,
    PropertyResult,
    SelftestReport,
    SignedPauli,
    SnIdentity,
    __version__,
    avg_weight,
    build_unitary,
    classify,
    commutes,
    complexity,
    complexity_of_probabilities,
    conjugate,
    decompose,
    format_circuit,
    format_operator,
    fourier_entropy,
    frontier_at_beta,
    frontier_max_entropy,
    growth_pauli_exact,
    growth_search,
    growth_tilde,
    landmark_points,
    multiply,
    normalize,
    omax_closed,
    omax_spectrum,
    parse_circuit,
    parse_operator,
    pauli_from_letters,
    pauli_from_sites,
    pauli_site_label,
    qubits_of,
    random_circuit,
    read_circuit_file,
    read_operator_file,
    reconstruct,
    require_unitary,
    run_selftest,
    sn_identity_check,
    tensor_spectrum,
    transfer_matrix,
    weight,
    weight_census,
    weight_census_all,
)

__all__ = [name for name in dir() if not name.startswith("_")]
