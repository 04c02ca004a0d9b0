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

"""Verifiable outsourced computation: QAP prover and verifier, the four
benchmark apps, gas estimates, and broker scenario replay.

    >>> import cicbroker
    >>> r = cicbroker.prove("matmul", [1, 2, 3, 4, 5, 6, 7, 8], n=2)
    >>> r["outputs"]
    [19, 22, 43, 50]
    >>> cicbroker.verify(r["vk"], r["public_io"], r["proof"])
    True
"""

from ._cicbroker import (
    BLOCK_GAS_LIMIT,
    PROOF_BYTES,
    VERIFY_PAIRINGS,
    CicError,
    Field,
    apps,
    block_ratio,
    constraint_count,
    estimate_gas,
    prove,
    prove_file,
    run_reference,
    run_scenario,
    verify,
)

__all__ = [
    "BLOCK_GAS_LIMIT",
    "PROOF_BYTES",
    "VERIFY_PAIRINGS",
    "CicError",
    "Field",
    "apps",
    "block_ratio",
    "constraint_count",
    "estimate_gas",
    "prove",
    "prove_file",
    "run_reference",
    "run_scenario",
    "verify",
]

__version__ = "0.1.0"
