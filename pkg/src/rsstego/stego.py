"""Hide a secret message inside a codeword's error-correction budget.

Embedding overwrites the symbols at key-selected positions with message
symbols; to the RS decoder those substitutions are ordinary errors, so as
long as substitutions plus genuine channel errors stay within t, the
carrier data always survives.  Extraction reads the raw received values at
the key positions (a channel error landing on a stego position therefore
corrupts that message symbol) and decodes the rest normally.

By default positions are drawn from the parity block only, keeping the
visible data symbols untouched; pass pool="any" to allow every position.
Position selection is a pure function of (seed, geometry, count) via
SplitMix64, so both endpoints derive the same key from a shared seed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .rng import SplitMix64
from .rs import (
    CodeParams,
    Codeword,
    DecodeResult,
    LengthMismatchError,
    decode,
)

SecretMessage = Sequence[int]


class BudgetExceededError(ValueError):
    """Stego substitutions plus reserved channel errors would exceed t."""


@dataclass(frozen=True)
class StegoKey:
    """Shared secret: where the message symbols live inside a codeword."""

    positions: tuple[int, ...]
    seed: int | None = None

    def __len__(self) -> int:
        return len(self.positions)


def derive_positions(
    params: CodeParams,
    seed: int,
    count: int,
    *,
    pool: str = "parity",
    channel_budget: int = 0,
) -> StegoKey:
    """Deterministically pick ``count`` distinct hiding positions.

    Draws ``next_u64() % pool_size`` from SplitMix64(seed), keeping first
    occurrences, until ``count`` distinct indices are collected.  The pool
    is the parity block by default ("parity") or the whole codeword
    ("any").
    """
    if pool == "parity":
        pool_size = params.n_parity
    elif pool == "any":
        pool_size = params.n
    else:
        raise ValueError(f"pool must be 'parity' or 'any', got {pool!r}")
    if count < 0:
        raise ValueError(f"count must be non-negative, got {count}")
    if count + channel_budget > params.t:
        raise BudgetExceededError(
            f"{count} stego symbols + {channel_budget} reserved channel errors "
            f"> t = {params.t}"
        )
    if count > pool_size:
        raise BudgetExceededError(
            f"cannot pick {count} distinct positions from a pool of {pool_size}"
        )
    rng = SplitMix64(seed)
    positions: list[int] = []
    seen = set()
    while len(positions) < count:
        idx = rng.below(pool_size)
        if idx not in seen:
            seen.add(idx)
            positions.append(idx)
    return StegoKey(positions=tuple(positions), seed=seed)


def embed(
    clean: Codeword,
    key: StegoKey,
    message: SecretMessage,
    *,
    channel_budget: int = 0,
) -> Codeword:
    """Substitute the symbols at the key positions with message symbols.

    A message symbol equal to the clean symbol is fine: it produces a
    zero-magnitude "error" and extraction still reads it back, because
    extraction reads received values rather than deltas.
    """
    params = clean.params
    if len(message) != len(key.positions):
        raise LengthMismatchError(
            f"message has {len(message)} symbols for {len(key.positions)} positions"
        )
    if len(set(key.positions)) != len(key.positions):
        raise ValueError("stego positions must be distinct")
    if len(key.positions) + channel_budget > params.t:
        raise BudgetExceededError(
            f"{len(key.positions)} stego symbols + {channel_budget} reserved "
            f"channel errors > t = {params.t}"
        )
    q = params.field.q
    symbols = list(clean.symbols)
    for pos, sym in zip(key.positions, message):
        if not 0 <= pos < params.n:
            raise ValueError(f"position {pos} outside [0, {params.n})")
        if not 0 <= sym < q:
            raise ValueError(f"message symbol {sym} outside GF({q})")
        symbols[pos] = sym
    return Codeword(params, symbols)


class ExtractResult(NamedTuple):
    data: list[int]
    message: list[int]
    diagnostics: DecodeResult


def extract(received: Codeword, key: StegoKey, params: CodeParams) -> ExtractResult:
    """Read the message at the key positions, then RS-decode the carrier.

    The message symbols are the received (pre-correction) values, so a
    channel error on a stego position corrupts that message symbol even
    though the carrier data still decodes.
    """
    message = [received.symbols[p] for p in key.positions]
    diagnostics = decode(params, received)
    return ExtractResult(
        data=diagnostics.corrected.data,
        message=message,
        diagnostics=diagnostics,
    )
