"""Reproduce the decoding-rate experiments end to end.

Both experiments run RS(31,19) with 2 hidden message symbols per codeword
and 100 trials of encode -> embed -> noise -> decode -> extract:

  1. one random symbol error per codeword (single_symbol mode);
  2. one 6-bit burst per codeword (burst mode).

%D_i is the share of trials whose 19 carrier symbols all survived; with
2 stego + at most 2 channel symbols <= t = 6 it is exactly 100 every
time.  %DS_M counts recovered message symbols and dips below 100 exactly
as often as the channel happens to hit a stego position.

Pass --trials to change the sample size (e.g. 10000 to see the rates
converge: single -> ~96.8, burst -> ~94.7).
"""

import argparse

from rsstego import ChannelSpec, CodeParams, ExperimentConfig, GF2m, run_experiment

parser = argparse.ArgumentParser()
parser.add_argument("--trials", type=int, default=100)
parser.add_argument("--seed", type=int, default=42)
args = parser.parse_args()

params = CodeParams(field=GF2m(5), n=31, k=19)


def bar(count, scale=1.0):
    return "#" * max(1, round(count * scale)) if count else ""


print(f"{'experiment':<22} {'trials':>6} {'%D_i':>6} {'%DS_M':>7}")
reports = {}
for label, mode in [("single symbol error", "single_symbol"),
                    ("6-bit burst error", "burst")]:
    config = ExperimentConfig(
        params=params,
        stego_count=2,
        channel=ChannelSpec(mode=mode, burst_bits=6),
        trials=args.trials,
        master_seed=args.seed,
    )
    report = run_experiment(config)
    reports[label] = report
    print(f"{label:<22} {report.trials:>6} {report.pct_decoded_info:>6.1f} "
          f"{report.pct_decoded_secret:>7.2f}")

single = reports["single symbol error"]
scale = 31 / max(1, 2 * args.trials)
print("\nwhere the channel errors landed (flat by construction):")
for pos, count in enumerate(single.error_location_hist):
    print(f"  {pos:2d} {bar(count, scale * 2)}")

print("\nwhere the stego symbols hid (parity block, positions 0-11):")
for pos, count in enumerate(single.stego_location_hist):
    print(f"  {pos:2d} {bar(count, scale)}")

print("\nsame flags, same numbers, every run: the whole pipeline is a")
print("deterministic function of the master seed")
