"""Critical-line zeros by sign-change scanning and bisection."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .lfunctions import CompletedValue, LFunctionSpec, hardy_z_many

__all__ = [
    "ZeroScanResult",
    "LowestZeroResult",
    "EvenOrderZeroError",
    "scan_zeros",
    "lowest_zero",
    "tau_quadratic",
    "detect_central_zero",
    "zero_list_for_explicit_formula",
    "DEFAULT_GRID_STEP",
    "BRACKET_WIDTH",
]

log = logging.getLogger(__name__)

DEFAULT_GRID_STEP = 1.0 / 64
BRACKET_WIDTH = 1e-9
CENTRAL_THRESHOLD = 1e-8
DIP_THRESHOLD = 1e-4
# grid points evaluated per call while looking for the first sign change
_CHUNK = 16

Evaluator = Callable[[Sequence[float]], list]


class EvenOrderZeroError(RuntimeError):
    pass


@dataclass
class ZeroScanResult:
    spec: object
    zeros: list[tuple[float, float]]
    t_max: float
    grid_step: float
    suspected_even_order: list[float] = field(default_factory=list)
    evaluations: int = 0

    @property
    def ordinates(self) -> list[float]:
        return [g for g, _ in self.zeros]


@dataclass
class LowestZeroResult:
    tau: float | None
    status: str
    central_value: float
    bracket_width: float | None = None
    t_max: float = 0.0


def _default_evaluator(spec: LFunctionSpec) -> Evaluator:
    return lambda ts: hardy_z_many(spec, ts)


class _Counter:
    def __init__(self, evaluator: Evaluator):
        self.evaluator = evaluator
        self.calls = 0

    def __call__(self, ts) -> list[CompletedValue]:
        ts = list(ts)
        self.calls += len(ts)
        return self.evaluator(ts)


def _refine(evaluate: _Counter, brackets: list[tuple[float, float, float, float]]):
    """Bisect all brackets together down to BRACKET_WIDTH, then one secant step."""
    brackets = [list(b) for b in brackets]
    while True:
        live = [b for b in brackets if b[1] - b[0] > BRACKET_WIDTH]
        if not live:
            break
        mids = [0.5 * (b[0] + b[1]) for b in live]
        vals = evaluate(mids)
        for b, m, v in zip(live, mids, vals):
            fm = v.lambda_value
            if fm == 0.0:
                b[0] = b[1] = m
                b[2] = b[3] = 0.0
            elif (fm < 0) == (b[2] < 0):
                b[0], b[2] = m, fm
            else:
                b[1], b[3] = m, fm
    out = []
    for a, b, fa, fb in brackets:
        if a == b or fa == fb:
            gamma = 0.5 * (a + b)
        else:
            gamma = a - fa * (b - a) / (fb - fa)
            gamma = min(max(gamma, a), b)
        out.append((gamma, b - a))
    return out


def _sign_brackets(ts: np.ndarray, vals: np.ndarray, skip_first: bool):
    brackets, exact = [], []
    start = 1 if skip_first else 0
    for k in range(start, len(ts)):
        if vals[k] == 0.0 and k > 0:
            exact.append(float(ts[k]))
    for k in range(start, len(ts) - 1):
        if vals[k] != 0.0 and vals[k + 1] != 0.0 and (vals[k] < 0) != (vals[k + 1] < 0):
            brackets.append((float(ts[k]), float(ts[k + 1]), float(vals[k]), float(vals[k + 1])))
    return brackets, exact


def _dips(ts, vals, scales) -> list[float]:
    out = []
    for k in range(1, len(ts) - 1):
        a, b, c = abs(vals[k - 1]), abs(vals[k]), abs(vals[k + 1])
        same_sign = (vals[k - 1] < 0) == (vals[k] < 0) == (vals[k + 1] < 0)
        if same_sign and b < a and b < c and b < DIP_THRESHOLD * scales[k]:
            out.append(float(ts[k]))
    return out


def _grid(t_lo: float, t_hi: float, step: float) -> np.ndarray:
    n = int(math.ceil((t_hi - t_lo) / step - 1e-12))
    ts = t_lo + step * np.arange(n + 1)
    ts[-1] = min(ts[-1], t_hi)
    return ts


def scan_zeros(
    spec,
    t_max: float,
    grid_step: float = DEFAULT_GRID_STEP,
    evaluator: Evaluator | None = None,
    t_min: float = 0.0,
    first_only: bool = False,
) -> ZeroScanResult:
    """All sign-change zeros with ``t_min < gamma <= t_max``.

    The grid is evaluated, every sign change is bisected to a bracket of
    width ``<= 1e-9`` and polished by one secant step.  Local minima of
    ``|Z|`` below ``1e-4 * scale`` without a sign change are reported as
    suspected even-order zeros, never refined.
    """
    if not 0 < grid_step <= 0.05:
        raise ValueError("grid_step must lie in (0, 0.05]")
    if t_max > 100:
        raise ValueError("t_max <= 100 required")
    evaluate = _Counter(evaluator or _default_evaluator(spec))
    result = ZeroScanResult(spec, [], t_max, grid_step)
    if t_max <= t_min:
        return result
    ts = _grid(t_min, t_max, grid_step)
    central = t_min == 0.0
    vals = np.empty(0)
    scales = np.empty(0)
    done = 0
    while done < len(ts):
        hi = len(ts) if not first_only else min(len(ts), done + _CHUNK)
        block = evaluate(ts[done:hi])
        vals = np.concatenate([vals, [v.lambda_value for v in block]])
        scales = np.concatenate([scales, [v.scale for v in block]])
        done = hi
        if first_only:
            skip = central and abs(vals[0]) < CENTRAL_THRESHOLD * scales[0]
            br, exact = _sign_brackets(ts[:done], vals, skip)
            if br or exact:
                break
    ts = ts[: len(vals)]
    skip = central and abs(vals[0]) < CENTRAL_THRESHOLD * scales[0]
    brackets, exact = _sign_brackets(ts, vals, skip)
    refined = _refine(evaluate, brackets)
    zeros = sorted(refined + [(g, 0.0) for g in exact])
    if first_only and zeros:
        zeros = zeros[:1]
    result.zeros = [(g, w) for g, w in zeros if t_min < g <= t_max]
    result.suspected_even_order = _dips(ts, vals, scales)
    result.evaluations = evaluate.calls
    return result


def detect_central_zero(spec, evaluator: Evaluator | None = None) -> tuple[bool, float]:
    """Whether the completed function vanishes at ``s = 1/2``."""
    v = (evaluator or _default_evaluator(spec))([0.0])[0]
    return abs(v.lambda_value) < CENTRAL_THRESHOLD * v.scale, v.lambda_value


def lowest_zero(
    spec,
    t_max: float = 20.0,
    grid_step: float = DEFAULT_GRID_STEP,
    evaluator: Evaluator | None = None,
) -> LowestZeroResult:
    """Smallest positive zero ordinate up to ``t_max``.

    ``(0, 1]`` is scanned with a four times finer grid first, since large
    conductors push the lowest zero close to the real axis.
    """
    if t_max < 0.05:
        raise ValueError("t_max >= 0.05 required")
    ev = evaluator or _default_evaluator(spec)
    central, central_value = detect_central_zero(spec, ev)
    first = scan_zeros(spec, min(1.0, t_max), grid_step / 4, ev, first_only=True)
    if not first.zeros and t_max > 1.0:
        first = scan_zeros(spec, t_max, grid_step, ev, t_min=1.0, first_only=True)
    if first.zeros:
        gamma, width = first.zeros[0]
        status = "central_zero_detected" if central else "found"
        return LowestZeroResult(gamma, status, central_value, width, t_max)
    status = "central_zero_detected" if central else "none_below_ceiling"
    return LowestZeroResult(None, status, central_value, None, t_max)


def tau_quadratic(d: int, t_max: float = 20.0, grid_step: float = DEFAULT_GRID_STEP):
    """Lowest zero of ``zeta_K = zeta * L(s, chi_d)``.

    Returns ``(LowestZeroResult, source)`` with source ``"chi"`` or ``"zeta"``.
    """
    chi_res = lowest_zero(LFunctionSpec.dirichlet(d), t_max, grid_step)
    zeta_ceiling = t_max if chi_res.tau is None else min(t_max, chi_res.tau)
    zeta_res = None
    if zeta_ceiling >= 0.05:
        zeta_res = lowest_zero(LFunctionSpec.zeta(), zeta_ceiling, grid_step)
    if zeta_res is not None and zeta_res.tau is not None and (
        chi_res.tau is None or zeta_res.tau < chi_res.tau
    ):
        return zeta_res, "zeta"
    return chi_res, "chi"


def zero_list_for_explicit_formula(spec, height: float, grid_step: float = DEFAULT_GRID_STEP) -> list[float]:
    """Ordinates ``0 < gamma <= height`` (simple zeros assumed)."""
    if height > 100:
        raise ValueError("height <= 100 required")
    if height <= 0.05:
        return []
    res = scan_zeros(spec, height, grid_step)
    if res.suspected_even_order:
        raise EvenOrderZeroError(
            f"{spec.label}: suspected even-order zeros near {res.suspected_even_order}"
        )
    return res.ordinates
