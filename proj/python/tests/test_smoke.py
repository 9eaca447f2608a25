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


import json
import math

import numpy as np
import pytest

import gtbqc

H = np.array([[1, 1], [1, -1]], dtype=complex) / math.sqrt(2)


def test_run_matches_direct_simulation():
    program = gtbqc.random_program(3, 4, 8, seed=1)
    result = gtbqc.run("trapfree", program, seed=7)
    assert result["fidelity"] > 1 - 1e-9
    assert len(result["decoded_bits"]) == 3
    header = json.loads(result["transcript"].splitlines()[0])
    assert header["schema"] == "gtbqc-transcript/1"


def test_run_is_deterministic():
    program = gtbqc.random_program(2, 3, 3, seed=2)
    a = gtbqc.run("haar", program, seed=11)
    b = gtbqc.run("haar", program, seed=11)
    assert a["transcript"] == b["transcript"]


def test_stochastic_batching_is_rejected():
    program = gtbqc.random_program(2, 2, 3, seed=3)
    with pytest.raises(gtbqc.ConfigError):
        gtbqc.run("stochastic", program, seed=1, batch_pairs=True)


def test_oneway():
    r = gtbqc.run_oneway([math.pi / 4, math.pi / 2, -math.pi / 4], seed=5)
    assert r["byproduct"] in "IXYZ"
    assert r["output_fidelity"] > 1 - 1e-9
    with pytest.raises(ValueError):
        gtbqc.run_oneway([0.3], seed=5)


def test_mixing_and_certificate():
    assert gtbqc.mixing_check(H) < 1e-12
    cz = np.diag([1, 1, 1, -1]).astype(complex)
    cert = gtbqc.entangling_certificate(cz)
    assert cert["cnot_class"] and cert["schmidt_rank"] == 2
    product = gtbqc.entangling_certificate(gtbqc.r_gate(np.eye(2, dtype=complex)))
    assert not product["entangling"]


def test_cli_exit_codes():
    code, out, err = gtbqc.cli(["run", "--variant", "haar", "--program", "missing.json"])
    assert code == 2 and "seed" in err
