# Copyright 2026 The CIC Broker Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import os
import pathlib
import random

import pytest

import cicbroker

ROOT = pathlib.Path(os.environ.get("CIC_SOURCE_DIR", pathlib.Path(__file__).resolve().parents[2]))


def matmul(a, b, n, p):
    return [sum(a[i * n + k] * b[k * n + j] for k in range(n)) % p for i in range(n) for j in range(n)]


def test_field_matches_python_ints():
    f = cicbroker.Field()
    p = f.modulus
    assert p == 2**61 - 1
    rng = random.Random(3)
    for _ in range(200):
        a, b = rng.randrange(p), rng.randrange(p)
        assert f.mul(a, b) == a * b % p
        assert f.add(a, b) == (a + b) % p
        assert f.sub(a, b) == (a - b) % p
        if a:
            assert f.mul(a, f.inv(a)) == 1
    assert cicbroker.Field(7).pow(3, 6) == 1


def test_zero_has_no_inverse():
    with pytest.raises(cicbroker.CicError, match="InversionOfZero"):
        cicbroker.Field(7).inv(0)


def test_matmul_round_trip():
    rng = random.Random(5)
    n, p = 3, 2**61 - 1
    a = [rng.randrange(1000) for _ in range(n * n)]
    b = [rng.randrange(1000) for _ in range(n * n)]
    r = cicbroker.prove("matmul", a + b, seed=9, n=n)
    assert r["outputs"] == matmul(a, b, n, p)
    assert len(r["proof"]) == cicbroker.PROOF_BYTES == 79
    assert cicbroker.verify(r["vk"], r["public_io"], r["proof"])

    forged = list(r["public_io"])
    forged[-1] = (forged[-1] + 1) % p
    assert not cicbroker.verify(r["vk"], forged, r["proof"])


def test_proof_from_another_key_is_rejected():
    inputs = [1, 2, 3, 4, 5, 6, 7, 8]
    r1 = cicbroker.prove("matmul", inputs, seed=1, n=2)
    r2 = cicbroker.prove("matmul", inputs, seed=2, n=2)
    assert not cicbroker.verify(r1["vk"], r1["public_io"], r2["proof"])


@pytest.mark.parametrize("name", sorted(p.name for p in (ROOT / "inputs").glob("*.txt")))
def test_shipped_inputs_prove(name):
    r = cicbroker.prove_file(str(ROOT / "inputs" / name), seed=4)
    assert cicbroker.verify(r["vk"], r["public_io"], r["proof"])


def test_reference_apps():
    assert cicbroker.run_reference("matmul", [1, 2, 3, 4, 5, 6, 7, 8], n=2) == [19, 22, 43, 50]
    # f(x) = 1 + 3 x  with m = 1, k = 1 at x = 2
    assert cicbroker.run_reference("multipoly", [1, 3, 2], degree=1, vars=1) == [7]
    inf = 2**15 - 1
    assert cicbroker.run_reference("floyd_warshall", [0, 2, inf, 0], n=2) == [0, 2, inf, 0]


def test_bad_inputs_raise():
    with pytest.raises(cicbroker.CicError, match="InputArityMismatch"):
        cicbroker.prove("matmul", [1, 2, 3], n=2)
    with pytest.raises(cicbroker.CicError):
        cicbroker.prove("no_such_app", [1])


def test_gas_exceeds_block():
    gas = cicbroker.estimate_gas("image_match", width=85, height=85, kernel_width=3, kernel_height=3)
    assert 70_000_000 <= gas <= 280_000_000
    assert cicbroker.block_ratio(gas) >= 10
    assert cicbroker.estimate_gas("matmul", n=0) == 21_000


def test_matmul_constraint_count():
    assert cicbroker.constraint_count("matmul", n=2) == 12


@pytest.mark.parametrize("script,state", [("happy.scn", "PAID"), ("tamper.scn", "SLASHED"), ("stall.scn", "SLASHED")])
def test_scenarios_replay(script, state):
    path = str(ROOT / "scenarios" / script)
    first = cicbroker.run_scenario(path, seed=8)
    assert cicbroker.run_scenario(path, seed=8)["trace"] == first["trace"]
    assert first["jobs"][1] == state
