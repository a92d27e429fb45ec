# Copyright 2026 The gaen-sim Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exposure-notification simulator and attack harness (C++ core)."""

import json as _json

from ._core import (
    INTERVAL_SECONDS,
    ROLLING_PERIOD,
    AlignmentError,
    ConfigError,
    DomainError,
    LengthError,
    RadioDomainError,
    attenuation,
    decode,
    decrypt_aem,
    derive_aemk,
    derive_rpik,
    encode_gaen,
    encrypt_aem,
    generate_rpi,
    interval_number,
    metadata,
    propagate,
    simulate_coverage,
    test_vectors,
)
from ._core import run_scenario as _run_scenario

__all__ = [
    "INTERVAL_SECONDS",
    "ROLLING_PERIOD",
    "AlignmentError",
    "ConfigError",
    "DomainError",
    "LengthError",
    "RadioDomainError",
    "attenuation",
    "decode",
    "decrypt_aem",
    "derive_aemk",
    "derive_rpik",
    "encode_gaen",
    "encrypt_aem",
    "generate_rpi",
    "interval_number",
    "metadata",
    "propagate",
    "run_scenario",
    "simulate_coverage",
    "test_vectors",
]


def run_scenario(path, out_dir=None, seed=None):
    """Run a scenario file; returns summary, notification rows and written files."""
    r = _run_scenario(str(path), None if out_dir is None else str(out_dir), seed)
    r["summary"] = _json.loads(r["summary"])
    return r
