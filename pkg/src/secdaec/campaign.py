"""Monte Carlo fault-injection campaigns.

Each trial draws a uniformly random data word, encodes it, applies one error
pattern from the chosen model and decodes. Trial ``i`` uses its own RNG
stream seeded from ``(seed, i)``, so results do not depend on how trials are
split across workers.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .codec import Kind, decode, encode
from .gf2 import BitVector
from .registry import CodeSpec, builtin

MODELS = ("single", "adjacent-double", "random-double", "bernoulli")
OUTCOMES = ("corrected", "silent_miscorrection", "detected", "missed")


@dataclass(frozen=True)
class CampaignConfig:
    code: str
    mode: str = "daec"
    trials: int = 10_000
    model: str = "adjacent-double"
    p: float = 0.0
    seed: int = 0

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be at least 1")
        if self.model not in MODELS:
            raise ValueError(f"unknown error model {self.model!r}; choose from {MODELS}")
        if not 0.0 <= self.p <= 1.0:
            raise ValueError(f"bernoulli probability {self.p} outside [0, 1]")
        if self.mode not in ("secded", "daec"):
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass(frozen=True)
class CampaignReport:
    config: CampaignConfig
    corrected: int
    silent_miscorrection: int
    detected: int
    missed: int

    @property
    def trials(self) -> int:
        return self.corrected + self.silent_miscorrection + self.detected + self.missed

    @property
    def residual_word_error_rate(self) -> float:
        """Fraction of trials that delivered wrong data without any flag."""
        return (self.silent_miscorrection + self.missed) / self.trials

    def as_dict(self) -> dict:
        return {
            "config": asdict(self.config),
            "counts": {name: getattr(self, name) for name in OUTCOMES},
            "residual_word_error_rate": self.residual_word_error_rate,
        }


def error_pattern(rng: np.random.Generator, n: int, model: str, p: float = 0.0) -> int:
    """Packed flip mask for one trial (bit j flips position j+1)."""
    if model == "single":
        return 1 << int(rng.integers(n))
    if model == "adjacent-double":
        return 0b11 << int(rng.integers(n - 1))
    if model == "random-double":
        i, j = rng.choice(n, size=2, replace=False)
        return (1 << int(i)) | (1 << int(j))
    if model == "bernoulli":
        flips = rng.random(n) < p
        return int(sum(1 << j for j in np.flatnonzero(flips)))
    raise ValueError(f"unknown error model {model!r}")


def classify_trial(spec: CodeSpec, mode: str, data: BitVector, mask: int) -> str:
    cw = encode(spec, data)
    received = BitVector.from_int(cw.to_int() ^ mask, spec.n)
    out = decode(spec, received, mode)
    if out.kind == Kind.DETECTED_UNCORRECTABLE:
        return "detected"
    if out.data == data:
        return "corrected"
    if out.kind == Kind.NO_ERROR:
        return "missed"
    return "silent_miscorrection"


def _run_range(config: CampaignConfig, start: int, stop: int) -> dict:
    spec = builtin(config.code)
    counts = dict.fromkeys(OUTCOMES, 0)
    for i in range(start, stop):
        rng = np.random.default_rng([config.seed, i])
        data = BitVector.from_int(int(rng.integers(1 << spec.k)), spec.k)
        mask = error_pattern(rng, spec.n, config.model, config.p)
        counts[classify_trial(spec, config.mode, data, mask)] += 1
    return counts


def run_campaign(config: CampaignConfig, jobs: int = 1) -> CampaignReport:
    builtin(config.code)  # fail fast on unknown names
    if jobs <= 1:
        counts = _run_range(config, 0, config.trials)
    else:
        step = -(-config.trials // jobs)
        bounds = [(s, min(s + step, config.trials)) for s in range(0, config.trials, step)]
        counts = dict.fromkeys(OUTCOMES, 0)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [pool.submit(_run_range, config, a, b) for a, b in bounds]
            for fut in futures:
                for key, value in fut.result().items():
                    counts[key] += value
    return CampaignReport(config, **counts)
