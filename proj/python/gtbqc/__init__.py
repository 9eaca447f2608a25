# Copyright 2026 The gtbqc Authors
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

"""Gate-teleportation blind quantum computation simulator."""

import json

from ._core import (
    ConfigError,
    InsufficientSamplesError,
    NoSolutionError,
    ParseError,
    ProtocolAbort,
    cli,
    entangling_certificate,
    mixing_check,
    r_gate,
)
from . import _core

__all__ = [
    "ConfigError",
    "InsufficientSamplesError",
    "NoSolutionError",
    "ParseError",
    "ProtocolAbort",
    "cli",
    "entangling_certificate",
    "mixing_check",
    "r_gate",
    "random_program",
    "run",
    "run_oneway",
]


def random_program(num_qubits, num_layers, gate_set_size, seed):
    """Random brickwork program as a gtbqc-program/1 dict."""
    return json.loads(_core._random_program(num_qubits, num_layers, gate_set_size, seed))


def run(variant, program, seed, cheat="honest", batch_pairs=False):
    """Runs one protocol variant on a program dict; returns a result dict."""
    return json.loads(_core._run(variant, json.dumps(program), seed, cheat, batch_pairs))


def run_oneway(angles, seed, mode="table"):
    """Blind one-way computation on a cluster chain."""
    return json.loads(_core._run_oneway(list(angles), seed, mode))
