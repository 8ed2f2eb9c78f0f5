"""Monte-Carlo harness: encode -> embed -> noise -> decode -> extract.

Each trial draws fresh random carrier data and a fresh random message,
derives per-trial stego positions, pushes the stego codeword through the
channel and compares what comes back with what was sent.  Aggregated
metrics:

* pct_decoded_info          - % of trials whose k data symbols all survived;
* pct_decoded_secret        - % of message SYMBOLS recovered across all
                              trials (primary accounting);
* pct_decoded_secret_trials - % of trials whose whole message survived
                              (secondary, stricter accounting);
* error_location_hist       - channel-error count per codeword position;
* stego_location_hist       - stego-position count per codeword position.

Everything is a deterministic function of master_seed: purpose-tagged
SplitMix64 substreams drive data, messages, keys and the channel.  The
rng_seed on the config's ChannelSpec is ignored and re-derived from
master_seed, so identical master seeds give identical reports.  Trials are
independent, so they could run concurrently; aggregation is ordered by
trial index either way.
"""

from __future__ import annotations

import csv
from dataclasses import dataclass, replace
from pathlib import Path

from .channel import ChannelSpec, apply_noise, max_affected_symbols
from .rng import SplitMix64, fork
from .rs import CodeParams, encode
from .stego import BudgetExceededError, derive_positions, embed, extract

# substream purpose tags
_DATA, _MESSAGE, _KEY, _CHANNEL = 0, 1, 2, 3


@dataclass(frozen=True)
class ExperimentConfig:
    """One experiment: geometry, stego load, channel and trial count."""

    params: CodeParams
    stego_count: int = 2
    channel: ChannelSpec = ChannelSpec(mode="single_symbol")
    trials: int = 100
    master_seed: int = 0
    pool: str = "parity"

    def __post_init__(self):
        budget = max_affected_symbols(self.channel, self.params.field.m)
        if self.stego_count + budget > self.params.t:
            raise BudgetExceededError(
                f"{self.stego_count} stego symbols + worst-case {budget} channel "
                f"symbols > t = {self.params.t}"
            )
        if self.trials < 0:
            raise ValueError(f"trials must be non-negative, got {self.trials}")


@dataclass
class TrialRecord:
    trial_index: int
    data_ok: bool
    message_symbols_ok: int
    stego_positions: tuple[int, ...]
    error_positions: tuple[int, ...]
    decode_failed: bool = False


@dataclass
class ExperimentReport:
    pct_decoded_info: float
    pct_decoded_secret: float
    pct_decoded_secret_trials: float
    error_location_hist: list[int]
    stego_location_hist: list[int]
    trials: int
    stego_count: int


def _trial_channel(config: ExperimentConfig) -> ChannelSpec:
    return replace(config.channel, rng_seed=fork(config.master_seed, _CHANNEL))


def run_trial(config: ExperimentConfig, trial_index: int) -> TrialRecord:
    """Execute one full pipeline pass and compare against what was sent."""
    params = config.params
    q = params.field.q
    master = config.master_seed

    data_rng = SplitMix64(fork(fork(master, _DATA), trial_index))
    msg_rng = SplitMix64(fork(fork(master, _MESSAGE), trial_index))
    data = [data_rng.below(q) for _ in range(params.k)]
    message = [msg_rng.below(q) for _ in range(config.stego_count)]

    budget = max_affected_symbols(config.channel, params.field.m)
    key = derive_positions(
        params,
        fork(fork(master, _KEY), trial_index),
        config.stego_count,
        pool=config.pool,
        channel_budget=budget,
    )

    clean = encode(params, data)
    carrier = embed(clean, key, message, channel_budget=budget)
    noisy, event = apply_noise(carrier, _trial_channel(config), trial_index)
    recovered = extract(noisy, key, params)

    return TrialRecord(
        trial_index=trial_index,
        data_ok=recovered.data == data,
        message_symbols_ok=sum(a == b for a, b in zip(recovered.message, message)),
        stego_positions=key.positions,
        error_positions=tuple(sorted(event.affected_positions)),
        decode_failed=recovered.diagnostics.failure,
    )


def run_experiment(config: ExperimentConfig) -> ExperimentReport:
    """Run all trials and aggregate; deterministic given master_seed."""
    n = config.params.n
    error_hist = [0] * n
    stego_hist = [0] * n
    data_ok = 0
    symbols_ok = 0
    whole_msg_ok = 0
    for trial in range(config.trials):
        rec = run_trial(config, trial)
        data_ok += rec.data_ok
        symbols_ok += rec.message_symbols_ok
        whole_msg_ok += rec.message_symbols_ok == config.stego_count
        for p in rec.error_positions:
            error_hist[p] += 1
        for p in rec.stego_positions:
            stego_hist[p] += 1

    trials = config.trials
    total_symbols = trials * config.stego_count
    return ExperimentReport(
        pct_decoded_info=100.0 * data_ok / trials if trials else 100.0,
        pct_decoded_secret=(
            100.0 * symbols_ok / total_symbols if total_symbols else 100.0
        ),
        pct_decoded_secret_trials=(
            100.0 * whole_msg_ok / trials if trials else 100.0
        ),
        error_location_hist=error_hist,
        stego_location_hist=stego_hist,
        trials=trials,
        stego_count=config.stego_count,
    )


def export_report(report: ExperimentReport, out_dir) -> dict[str, Path]:
    """Write report.csv plus the two location histograms for re-plotting."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    paths = {
        "report": out / "report.csv",
        "error_hist": out / "error_hist.csv",
        "stego_hist": out / "stego_hist.csv",
    }
    with open(paths["report"], "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["metric", "value"])
        w.writerow(["pct_decoded_info", report.pct_decoded_info])
        w.writerow(["pct_decoded_secret", report.pct_decoded_secret])
        w.writerow(["pct_decoded_secret_trials", report.pct_decoded_secret_trials])
        w.writerow(["trials", report.trials])
        w.writerow(["stego_count", report.stego_count])
    hists = [
        ("error_hist", report.error_location_hist),
        ("stego_hist", report.stego_location_hist),
    ]
    for name, hist in hists:
        with open(paths[name], "w", newline="") as fh:
            w = csv.writer(fh)
            w.writerow(["position", "count"])
            for pos, count in enumerate(hist):
                w.writerow([pos, count])
    return paths
