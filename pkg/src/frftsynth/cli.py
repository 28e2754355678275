"""Command-line entry point.

Exit codes: 0 success, 1 usage error, 2 data/format error, 3 verification failure.
"""
from __future__ import annotations

import argparse
import sys

from .analysis import stft_spectrogram
from .errors import DataError, InvalidArgumentError, UsageError, WavFormatError
from .framing import PROJECTIONS, OrderSchedule
from .presets import PRESETS, run_preset
from .render import RenderConfig, load_config, run_render
from .verify import verify
from .wavio import load_wav, write_spectrogram_csv, write_spectrogram_png

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_VERIFY = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _add_render_args(p: argparse.ArgumentParser, with_schedule: bool) -> None:
    p.add_argument("--config", help="JSON file with RenderConfig fields")
    p.add_argument("--input", dest="input_wav", help="source WAV (instead of a sine)")
    p.add_argument("--frequency", type=float, help="sine frequency in Hz")
    p.add_argument("--duration", type=float, help="sine duration in seconds")
    p.add_argument("--amplitude", type=float)
    p.add_argument("--window", type=int, help="frame length in samples")
    p.add_argument("--hop", type=int, help="hop in samples (default: half the window)")
    p.add_argument("--analysis-window", choices=("rectangular", "hann"))
    p.add_argument("--synthesis-window", choices=("rectangular", "hann"))
    if with_schedule:
        p.add_argument("--order", type=float, help="transform order (ramp start with --order-end)")
        p.add_argument("--order-end", type=float, help="ramp the order linearly to this value")
        p.add_argument("--projection", choices=PROJECTIONS)
    p.add_argument("--impl", choices=("fast", "direct"))
    p.add_argument("--sample-rate", type=int)
    p.add_argument("--out", help="output WAV")
    p.add_argument("--csv", help="output spectrogram CSV")
    p.add_argument("--png", help="output spectrogram PNG")
    p.add_argument("--format", dest="wav_format", choices=("pcm16", "float32"))
    p.add_argument("--no-normalize", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="frftsynth", description="Fractional Fourier sound synthesis")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("frft", help="transform a whole WAV at one order")
    p.add_argument("input")
    p.add_argument("--order", type=float, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--projection", choices=("real", "imaginary"), default="real")
    p.add_argument("--impl", choices=("fast", "direct"), default="fast")
    p.add_argument("--format", dest="wav_format", choices=("pcm16", "float32"), default="pcm16")
    p.add_argument("--no-normalize", action="store_true")

    _add_render_args(sub.add_parser("synth", help="alpha-synthesis"), with_schedule=True)

    p = sub.add_parser("filter", help="alpha-filtering")
    _add_render_args(p, with_schedule=False)
    p.add_argument("--order", type=float, help="order at which the kernel multiplies")
    p.add_argument("--bandwidth", type=float, help="Gaussian bandwidth b in 1/s")
    p.add_argument("--center", type=float, help="center frequency in Hz (sweep start)")
    p.add_argument("--center-end", type=float, help="exponential sweep end in Hz")

    p = sub.add_parser("spectrogram", help="WAV to spectrogram CSV/PNG")
    p.add_argument("input")
    p.add_argument("--csv")
    p.add_argument("--png")
    p.add_argument("--window", type=int, default=2048)
    p.add_argument("--hop", type=int)
    p.add_argument("--window-fn", choices=("hann", "rectangular"), default="hann")

    p = sub.add_parser("preset", help="render one of the example grids")
    p.add_argument("name", choices=PRESETS)
    p.add_argument("--out-dir", default="renders")

    p = sub.add_parser("verify", help="run the property self-checks")
    p.add_argument("--full", action="store_true")
    return parser


def _config_from_args(args: argparse.Namespace, method: str) -> RenderConfig:
    data = load_config(args.config) if args.config else {}
    data["method"] = method
    rate = args.sample_rate or data.get("sample_rate", 44100)
    data["sample_rate"] = rate

    if args.input_wav:
        data["input_wav"] = args.input_wav
        data.pop("sine", None)
    elif args.frequency is not None or args.duration is not None or args.amplitude is not None:
        sine = dict(data.get("sine") or {})
        for key in ("frequency", "duration", "amplitude"):
            if getattr(args, key) is not None:
                sine[key] = getattr(args, key)
        data["sine"] = sine

    window = dict(data.get("window") or {})
    for key, attr in (("length_samples", "window"), ("hop_samples", "hop"),
                      ("analysis_window", "analysis_window"),
                      ("synthesis_crossfade", "synthesis_window")):
        if getattr(args, attr) is not None:
            window[key] = getattr(args, attr)
    if window:
        data["window"] = window

    if method == "alpha_synthesis":
        if args.order is not None:
            if args.order_end is not None:
                data["schedule"] = {"kind": "linear_ramp", "start": args.order, "end": args.order_end}
            else:
                data["schedule"] = {"kind": "constant", "start": args.order}
        if args.projection:
            data["projection"] = args.projection
    else:
        filt = dict(data.get("filter") or {})
        center = dict(filt.get("center") or {})
        if args.order is not None:
            filt["order"] = args.order
        if args.bandwidth is not None:
            filt["bandwidth_b"] = args.bandwidth
        if args.center is not None:
            center["start"] = args.center
        if args.center_end is not None:
            center["kind"], center["end"] = "exponential", args.center_end
        if center:
            filt["center"] = center
        data["filter"] = filt

    for key, value in (("impl", args.impl), ("output_wav", args.out), ("output_csv", args.csv),
                       ("output_png", args.png), ("wav_format", args.wav_format)):
        if value is not None:
            data[key] = value
    if args.no_normalize:
        data["normalize"] = False
    return RenderConfig.from_dict(data)


def _run(args: argparse.Namespace) -> int:
    if args.command == "verify":
        return EXIT_OK if verify("full" if args.full else "quick") else EXIT_VERIFY

    if args.command == "preset":
        manifest = run_preset(args.name, args.out_dir, log=print)
        print(f"{len(manifest['renders'])} renders written to {args.out_dir}/{args.name}")
        return EXIT_OK

    if args.command == "spectrogram":
        if not (args.csv or args.png):
            raise UsageError("give --csv and/or --png")
        x, rate = load_wav(args.input)
        grid = stft_spectrogram(x, args.window, args.hop, args.window_fn, rate)
        if args.csv:
            write_spectrogram_csv(grid, args.csv)
        if args.png:
            write_spectrogram_png(grid, args.png)
        return EXIT_OK

    if args.command == "frft":
        cfg = RenderConfig(
            input_wav=args.input,
            method="frft_raw",
            schedule=OrderSchedule.constant(args.order),
            projection=args.projection,
            impl=args.impl,
            output_wav=args.out,
            wav_format=args.wav_format,
            normalize=not args.no_normalize,
        )
    else:
        cfg = _config_from_args(args, "alpha_synthesis" if args.command == "synth" else "alpha_filter")
    if not (cfg.output_wav or cfg.output_csv or cfg.output_png):
        raise UsageError("no output requested (--out, --csv or --png)")
    run_render(cfg)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _run(args)
    except UsageError as exc:
        print(f"frftsynth: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (WavFormatError, DataError, InvalidArgumentError, OSError) as exc:
        print(f"frftsynth: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
