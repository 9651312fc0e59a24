"""Stationary mixing policies for the two-input/one-output mix at strict delay 1.

The mix may hold packets for at most one slot, so its state is what is still
buffered from the previous slot: nothing, a red, a blue, or one of each. A
held pair must be flushed (as a uniformly random permutation) and a held
single must be sent, so the policy's freedom sits in thirteen probabilities:

  state empty  alpha, beta     queue a lone red / blue arrival
               s, y, p         on a double arrival: transmit at all (s), send
                               only one given a transmission (y), send the red
                               one given a single goes out (p)
  state R      gamma           queue a fresh red and send the held one
               a               flush held red with a fresh blue as a random
                               permutation (vs. sending the red alone)
               t, d            on a double arrival: transmit two (t), make the
                               pair same-colored (d) instead of a permutation
  state B      delta, b, z, r  mirror images of gamma, a, t, d

`step` samples one slot of the mix, `transition_row` is the exact queue
kernel, and `reward` is the expected per-slot entropy of the output word as
seen by an observer who knows the arrivals and the word length.

The zero-delay mix is simpler: its only lever is permuting a double arrival,
and `anonymity_t0` gives the resulting bits-per-packet in closed form.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, fields

from .core import (
    DegenerateInputWarning,
    OutputWord,
    Packets,
    Probability,
    RatePair,
    binary_entropy,
)

QueueState = Packets

_E, _R, _B, _RB = Packets.EMPTY, Packets.R, Packets.B, Packets.RB
_STATES = (_E, _R, _B, _RB)


@dataclass(frozen=True)
class ParametricPolicyT1:
    """The thirteen per-state action probabilities of a delay-1 policy."""

    alpha: float
    beta: float
    s: float
    y: float
    p: float
    gamma: float
    a: float
    t: float
    d: float
    delta: float
    b: float
    z: float
    r: float

    def __post_init__(self):
        for f in fields(self):
            object.__setattr__(self, f.name, float(Probability(getattr(self, f.name))))

    def as_tuple(self) -> tuple[float, ...]:
        return (
            self.alpha, self.beta, self.s, self.y, self.p,
            self.gamma, self.a, self.t, self.d,
            self.delta, self.b, self.z, self.r,
        )


@dataclass(frozen=True)
class MixStep:
    """One sampled slot: the emitted word and what stays queued for the next."""

    output: OutputWord
    next_queue: Packets


def optimal_policy_t1(p_star: float, d_star: float, r_star: float) -> ParametricPolicyT1:
    """The optimal-policy shape: every transmission gate open, only the three
    randomization probabilities (p, d, r) free."""
    return ParametricPolicyT1(
        alpha=1.0, beta=1.0, s=1.0, y=1.0, p=p_star,
        gamma=1.0, a=1.0, t=1.0, d=d_star,
        delta=1.0, b=1.0, z=1.0, r=r_star,
    )


def step_entropy(q: Packets, arrival: Packets, policy: ParametricPolicyT1) -> float:
    """Entropy (bits) of the output word given state, arrival, and word length.

    Only four (state, arrival) pairs carry entropy; every other combination
    produces a deterministic word once its length is known.
    """
    if q == _RB:
        return 1.0
    if q == _E and arrival == _RB:
        return policy.s * (policy.y * binary_entropy(policy.p) + 1.0 - policy.y)
    if q == _R:
        if arrival == _B:
            return policy.a
        if arrival == _RB:
            return policy.t * (binary_entropy(policy.d) + 1.0 - policy.d)
    if q == _B:
        if arrival == _R:
            return policy.b
        if arrival == _RB:
            return policy.z * (binary_entropy(policy.r) + 1.0 - policy.r)
    return 0.0


def reward(q: Packets, policy: ParametricPolicyT1, rates: RatePair) -> float:
    """Expected per-slot output entropy from state q, averaged over arrivals."""
    if q == _E:
        return rates.both * policy.s * (
            policy.y * binary_entropy(policy.p) + 1.0 - policy.y
        )
    if q == _R:
        return rates.b_only * policy.a + rates.both * policy.t * (
            binary_entropy(policy.d) + 1.0 - policy.d
        )
    if q == _B:
        return rates.r_only * policy.b + rates.both * policy.z * (
            binary_entropy(policy.r) + 1.0 - policy.r
        )
    return 1.0


def transition_row(
    q: Packets, policy: ParametricPolicyT1, rates: RatePair
) -> dict[Packets, float]:
    """Next-queue distribution from state q; the empty-state entry closes the row."""
    ro, bo, both = rates.r_only, rates.b_only, rates.both
    if q == _E:
        pr = ro * policy.alpha + both * policy.s * policy.y * (1.0 - policy.p)
        pb = bo * policy.beta + both * policy.s * policy.y * policy.p
        prb = both * (1.0 - policy.s)
    elif q == _R:
        pr = ro * policy.gamma + both * policy.t * (1.0 - policy.d)
        pb = bo * (1.0 - policy.a) + both * policy.t * policy.d
        prb = both * (1.0 - policy.t)
    elif q == _B:
        pr = ro * (1.0 - policy.b) + both * policy.z * policy.r
        pb = bo * policy.delta + both * policy.z * (1.0 - policy.r)
        prb = both * (1.0 - policy.z)
    else:
        pr, pb, prb = ro, bo, both
    return {_E: 1.0 - pr - pb - prb, _R: pr, _B: pb, _RB: prb}


def outcomes(
    q: Packets, arrival: Packets, policy: ParametricPolicyT1
) -> list[tuple[float, OutputWord, Packets]]:
    """Full (probability, word, next queue) enumeration for one state/arrival.

    Zero-probability branches are kept so the support is explicit; the held
    packets always depart, so the next queue is a subset of the arrival.
    """
    W = OutputWord
    if q == _RB:
        return [(0.5, W.RB, arrival), (0.5, W.BR, arrival)]
    if q == _E:
        if arrival == _E:
            return [(1.0, W.EMPTY, _E)]
        if arrival == _R:
            return [(policy.alpha, W.EMPTY, _R), (1.0 - policy.alpha, W.R, _E)]
        if arrival == _B:
            return [(policy.beta, W.EMPTY, _B), (1.0 - policy.beta, W.B, _E)]
        s, y, p = policy.s, policy.y, policy.p
        return [
            (1.0 - s, W.EMPTY, _RB),
            (s * (1.0 - y) * 0.5, W.RB, _E),
            (s * (1.0 - y) * 0.5, W.BR, _E),
            (s * y * p, W.R, _B),
            (s * y * (1.0 - p), W.B, _R),
        ]
    if q == _R:
        if arrival == _E:
            return [(1.0, W.R, _E)]
        if arrival == _R:
            return [(policy.gamma, W.R, _R), (1.0 - policy.gamma, W.RR, _E)]
        if arrival == _B:
            a = policy.a
            return [(a * 0.5, W.RB, _E), (a * 0.5, W.BR, _E), (1.0 - a, W.R, _B)]
        t, d = policy.t, policy.d
        return [
            (1.0 - t, W.R, _RB),
            (t * d, W.RR, _B),
            (t * (1.0 - d) * 0.5, W.RB, _R),
            (t * (1.0 - d) * 0.5, W.BR, _R),
        ]
    # q == B, mirror of q == R
    if arrival == _E:
        return [(1.0, W.B, _E)]
    if arrival == _B:
        return [(policy.delta, W.B, _B), (1.0 - policy.delta, W.BB, _E)]
    if arrival == _R:
        b = policy.b
        return [(b * 0.5, W.RB, _E), (b * 0.5, W.BR, _E), (1.0 - b, W.B, _R)]
    z, r = policy.z, policy.r
    return [
        (1.0 - z, W.B, _RB),
        (z * r, W.BB, _R),
        (z * (1.0 - r) * 0.5, W.RB, _B),
        (z * (1.0 - r) * 0.5, W.BR, _B),
    ]


def output_distribution(
    q: Packets, arrival: Packets, policy: ParametricPolicyT1
) -> dict[OutputWord, float]:
    """Distribution of the emitted word given state and arrival."""
    dist: dict[OutputWord, float] = {}
    for prob, word, _ in outcomes(q, arrival, policy):
        dist[word] = dist.get(word, 0.0) + prob
    return dist


def step(q: Packets, arrival: Packets, policy: ParametricPolicyT1, rng) -> MixStep:
    """Sample one slot of the mix.

    Decisions are drawn hierarchically, matching the policy parameterization
    (transmit-or-queue first, then how many leave, then which color or which
    permutation), so each parameter is observable in isolation.
    """
    W = OutputWord
    if q == _RB:
        word = W.RB if rng.random() < 0.5 else W.BR
        return MixStep(word, arrival)
    if q == _E:
        if arrival == _E:
            return MixStep(W.EMPTY, _E)
        if arrival == _R:
            if rng.random() < policy.alpha:
                return MixStep(W.EMPTY, _R)
            return MixStep(W.R, _E)
        if arrival == _B:
            if rng.random() < policy.beta:
                return MixStep(W.EMPTY, _B)
            return MixStep(W.B, _E)
        if rng.random() >= policy.s:
            return MixStep(W.EMPTY, _RB)
        if rng.random() >= policy.y:
            return MixStep(W.RB if rng.random() < 0.5 else W.BR, _E)
        if rng.random() < policy.p:
            return MixStep(W.R, _B)
        return MixStep(W.B, _R)
    if q == _R:
        if arrival == _E:
            return MixStep(W.R, _E)
        if arrival == _R:
            if rng.random() < policy.gamma:
                return MixStep(W.R, _R)
            return MixStep(W.RR, _E)
        if arrival == _B:
            if rng.random() < policy.a:
                return MixStep(W.RB if rng.random() < 0.5 else W.BR, _E)
            return MixStep(W.R, _B)
        if rng.random() >= policy.t:
            return MixStep(W.R, _RB)
        if rng.random() < policy.d:
            return MixStep(W.RR, _B)
        return MixStep(W.RB if rng.random() < 0.5 else W.BR, _R)
    # q == B
    if arrival == _E:
        return MixStep(W.B, _E)
    if arrival == _B:
        if rng.random() < policy.delta:
            return MixStep(W.B, _B)
        return MixStep(W.BB, _E)
    if arrival == _R:
        if rng.random() < policy.b:
            return MixStep(W.RB if rng.random() < 0.5 else W.BR, _E)
        return MixStep(W.B, _R)
    if rng.random() >= policy.z:
        return MixStep(W.B, _RB)
    if rng.random() < policy.r:
        return MixStep(W.BB, _R)
    return MixStep(W.RB if rng.random() < 0.5 else W.BR, _B)


def anonymity_t0(rates: RatePair) -> float:
    """Best achievable anonymity with zero delay, in bits per packet.

    With same-slot forwarding the only source of confusion is permuting a
    double arrival, worth one bit, so the rate is lambda_r*lambda_b bits/slot
    spread over lambda_r + lambda_b packets. With no traffic at all the ratio
    is undefined; 0 is returned under a DegenerateInputWarning.
    """
    if rates.total == 0.0:
        warnings.warn(
            "both arrival rates are zero: anonymity is undefined, returning 0",
            DegenerateInputWarning,
            stacklevel=2,
        )
        return 0.0
    return rates.both / rates.total
