# Copyright 2026 The stinekit developers
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

"""Quantum channel representations, GKSL semigroups, and type-I Stinespring
dilation curves."""

from stinekit._core import (
    Channel,
    StinespringCurve,
    StinespringDilation,
    __version__,
    bijectivity_failures,
    build_curve_from_lindblad,
    channel_from_choi,
    channel_from_kraus,
    channel_from_stinespring,
    choi_distance,
    dissipator,
    generator_superop,
    is_completely_positive,
    is_trace_preserving,
    kraus_from_choi,
    kraus_from_stinespring,
    make_curve,
    operator_partial_trace,
    p_divisibility_change_points,
    recurrence_detect,
    semigroup_deviation,
    semigroup_evolve,
    stinespring_from_kraus,
)

__all__ = [
    "Channel",
    "StinespringCurve",
    "StinespringDilation",
    "__version__",
    "bijectivity_failures",
    "build_curve_from_lindblad",
    "channel_from_choi",
    "channel_from_kraus",
    "channel_from_stinespring",
    "choi_distance",
    "dissipator",
    "generator_superop",
    "is_completely_positive",
    "is_trace_preserving",
    "kraus_from_choi",
    "kraus_from_stinespring",
    "make_curve",
    "operator_partial_trace",
    "p_divisibility_change_points",
    "recurrence_detect",
    "semigroup_deviation",
    "semigroup_evolve",
    "stinespring_from_kraus",
]
