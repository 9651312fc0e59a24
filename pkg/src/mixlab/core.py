"""Shared domain symbols, validated probabilities, and binary-entropy utilities.

Packet colors and the per-slot arrival/output alphabets live here, together
with the binary entropy function, its inverse on [0, 1/2], and the resulting
detection-error lower bound for a binary source. Everything is pure and safe
to call concurrently.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

LOG2_3 = math.log2(3.0)
LOG2_5 = math.log2(5.0)


class MixlabError(Exception):
    """Base class for all package-specific errors."""


class DomainError(MixlabError, ValueError):
    """An input lies outside its documented domain."""


class NonstationaryRegime(MixlabError):
    """Stationary analysis refused: it requires both arrival rates below 1.

    At rate 1 on both flows no stationary policy exists (the relative value
    of the full queue diverges) and the long-run behavior depends on the
    initial queue contents.
    """


class ConvergenceError(MixlabError):
    """The fixed-point iteration did not converge within its budget."""

    def __init__(self, message: str, last_iterate=None):
        super().__init__(message)
        self.last_iterate = last_iterate


class SingularRates(MixlabError):
    """Equal arrival rates on the two-output mix: the traffic ratio is 1 and
    no stable maximum-throughput policy exists without relaxing the drop rate.
    """


class StabilityError(MixlabError):
    """A drop profile never drops with certainty, so the backlog is unstable."""


class DelayViolation(MixlabError):
    """A strategy held a packet beyond the strict delay bound (strict mode)."""


class DegenerateInputWarning(UserWarning):
    """No traffic on either flow: anonymity is undefined and reported as 0."""


class Probability(float):
    """A float validated at construction to lie in [0, 1]; NaN is rejected."""

    __slots__ = ()

    def __new__(cls, value) -> "Probability":
        v = float(value)
        if math.isnan(v) or v < 0.0 or v > 1.0:
            raise DomainError(f"probability must be in [0, 1], got {value!r}")
        return super().__new__(cls, v)


class Packets(enum.IntFlag):
    """A slot's worth of packets: at most one red and one blue.

    Doubles as the arrival symbol (what showed up this slot) and as the
    delay-1 queue state (what is still held from the previous slot).
    """

    EMPTY = 0
    R = 1
    B = 2
    RB = 3

    @property
    def has_r(self) -> bool:
        return bool(self & Packets.R)

    @property
    def has_b(self) -> bool:
        return bool(self & Packets.B)

    @property
    def count(self) -> int:
        return int(self).bit_count()

    @property
    def label(self) -> str:
        return _PACKET_LABELS[int(self)]

    @classmethod
    def from_label(cls, label: str) -> "Packets":
        try:
            return _PACKETS_BY_LABEL[label.strip().upper() or "EMPTY"]
        except KeyError:
            raise DomainError(f"unknown packet-set label {label!r}") from None


_PACKET_LABELS = {0: "empty", 1: "R", 2: "B", 3: "RB"}
_PACKETS_BY_LABEL = {
    "EMPTY": Packets.EMPTY,
    "": Packets.EMPTY,
    "R": Packets.R,
    "B": Packets.B,
    "RB": Packets.RB,
}

ArrivalSymbol = Packets


class OutputWord(enum.IntEnum):
    """What leaves the mix in one slot, order included: the observer sees only
    how many packets left (the word's cardinality), never their colors."""

    EMPTY = 0
    R = 1
    B = 2
    RR = 3
    BB = 4
    RB = 5
    BR = 6

    @property
    def r_count(self) -> int:
        return _WORD_COUNTS[int(self)][0]

    @property
    def b_count(self) -> int:
        return _WORD_COUNTS[int(self)][1]

    @property
    def cardinality(self) -> int:
        r, b = _WORD_COUNTS[int(self)]
        return r + b

    @property
    def label(self) -> str:
        return "empty" if self is OutputWord.EMPTY else self.name

    @classmethod
    def from_label(cls, label: str) -> "OutputWord":
        s = label.strip().upper()
        if s in ("", "EMPTY"):
            return OutputWord.EMPTY
        try:
            return cls[s]
        except KeyError:
            raise DomainError(f"unknown output word {label!r}") from None


# (red count, blue count) per word, indexed by enum value
_WORD_COUNTS = {0: (0, 0), 1: (1, 0), 2: (0, 1), 3: (2, 0), 4: (0, 2), 5: (1, 1), 6: (1, 1)}


@dataclass(frozen=True)
class RatePair:
    """Bernoulli arrival rates of the red and blue flows."""

    lambda_r: float
    lambda_b: float

    def __post_init__(self):
        object.__setattr__(self, "lambda_r", float(Probability(self.lambda_r)))
        object.__setattr__(self, "lambda_b", float(Probability(self.lambda_b)))

    @property
    def both(self) -> float:
        """Probability that both flows deliver a packet in a slot."""
        return self.lambda_r * self.lambda_b

    @property
    def r_only(self) -> float:
        return self.lambda_r * (1.0 - self.lambda_b)

    @property
    def b_only(self) -> float:
        return self.lambda_b * (1.0 - self.lambda_r)

    @property
    def total(self) -> float:
        return self.lambda_r + self.lambda_b

    def swapped(self) -> "RatePair":
        return RatePair(self.lambda_b, self.lambda_r)


def binary_entropy(p: float) -> float:
    """Binary entropy in bits, with the continuity convention 0*log(0) = 0."""
    p = float(p)
    if math.isnan(p) or p < 0.0 or p > 1.0:
        raise DomainError(f"binary_entropy requires p in [0, 1], got {p!r}")
    if p == 0.0 or p == 1.0:
        return 0.0
    return -p * math.log2(p) - (1.0 - p) * math.log2(1.0 - p)


def inverse_binary_entropy(h: float, tol: float = 1e-12) -> Probability:
    """The unique p in [0, 1/2] with binary_entropy(p) = h, by bisection.

    Endpoints are returned exactly; elsewhere the bracket is narrowed to
    absolute width `tol`.
    """
    h = float(h)
    if math.isnan(h) or h < 0.0 or h > 1.0:
        raise DomainError(f"entropy values lie in [0, 1], got {h!r}")
    if h == 0.0:
        return Probability(0.0)
    if h == 1.0:
        return Probability(0.5)
    lo, hi = 0.0, 0.5
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if binary_entropy(mid) < h:
            lo = mid
        else:
            hi = mid
    return Probability(0.5 * (lo + hi))


def fano_error_lower_bound(anonymity: float) -> Probability:
    """Per-packet detection-error lower bound for a two-color source.

    An observer assigning colors to outgoing packets errs with probability at
    least H^{-1}(A) when the per-packet anonymity is A bits. More than 1 bit
    is impossible with two colors.
    """
    a = float(anonymity)
    if math.isnan(a) or a < 0.0 or a > 1.0:
        raise DomainError(
            f"anonymity of a two-color source lies in [0, 1] bits/packet, got {anonymity!r}"
        )
    return inverse_binary_entropy(a)
