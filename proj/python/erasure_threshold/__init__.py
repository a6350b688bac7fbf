# Copyright 2026 The Erasure Threshold Authors
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

"""Exact and sampled erasure fault-tolerance thresholds of the Steane code.

Rational inputs accept ``fractions.Fraction``, ``int`` or decimal strings;
exact results come back as ``fractions.Fraction``.
"""

import json
from fractions import Fraction

from . import _core
from ._core import ClassUnsound, NoSignChange, census, classify

__version__ = _core.__version__

__all__ = [
    "ClassUnsound",
    "NoSignChange",
    "census",
    "classify",
    "encoded_failure",
    "measurement_recursion",
    "run_cli",
    "series",
    "simulate",
    "threshold",
]


def _rational(x):
    if isinstance(x, float):
        x = Fraction(x)
    return str(x)


def _config(config):
    if config is None:
        return ""
    return config if isinstance(config, str) else json.dumps(config)


def series(model, order=7, config=None):
    """Power-series coefficients c0..c_order of the level-1 recursion."""
    return [Fraction(c) for c in _core.series(model, order, _config(config))]


def measurement_recursion(delta):
    """Exact probability that at least 3 of 7 detectors lose their photon."""
    return Fraction(_core.measurement_recursion(_rational(delta)))


def encoded_failure(model, eps, delta=0, config=None):
    """Exact encoded failure probability after one level of encoding."""
    return Fraction(_core.encoded_failure(model, _rational(eps), _rational(delta), _config(config)))


def simulate(model, eps, delta=0.0, trials=100000, seed=1, threads=0, config=None):
    """Monte Carlo estimate of the encoded failure probability."""
    return _core.simulate(model, float(eps), float(delta), trials, seed, threads, _config(config))


def run_cli(*args):
    """Runs the command line tool in-process; returns (exit_code, stdout, stderr)."""
    return _core.run_cli([str(a) for a in args])


def threshold(model="ideal", fixture="full-chain", tol="1/1000000"):
    """Break-even threshold as the JSON report of the ``threshold`` command."""
    code, out, err = run_cli("threshold", "--model", model, "--fixture", fixture, "--tol", tol)
    if code != 0:
        raise ValueError(json.loads(err)["message"])
    return json.loads(out)
