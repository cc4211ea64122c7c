"""Command-line interface: extract, modulate, render-static."""

from __future__ import annotations

import argparse
import sys

from . import emit, pipeline
from .audio import decode_wav
from .config import PipelineConfig, apply_overrides, load_config
from .errors import ProsotypeError
from .transcript import parse_transcript

EXIT_OK = 0
EXIT_INTERNAL = 1
EXIT_INPUT = 2


class _InputError(Exception):
    """Wraps any user-input problem with the offending path."""


def _read_bytes(path) -> bytes:
    try:
        with open(path, "rb") as handle:
            return handle.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _read_text(path) -> str:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return handle.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise _InputError(f"cannot read {path}: {exc}") from exc


def _write_output(text: str, out_path):
    if out_path is None:
        sys.stdout.write(text)
        return
    try:
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise _InputError(f"cannot write {out_path}: {exc.strerror or exc}") from exc


def _load_pipeline_config(args) -> PipelineConfig:
    if args.config is not None:
        try:
            cfg = load_config(args.config)
        except OSError as exc:
            raise _InputError(f"cannot read {args.config}: {exc.strerror or exc}") from exc
        except ProsotypeError as exc:
            raise _InputError(f"{args.config}: {exc}") from exc
    else:
        cfg = PipelineConfig()
    overrides = {
        "pitch.f_min_hz": getattr(args, "pitch_min", None),
        "pitch.f_max_hz": getattr(args, "pitch_max", None),
        "window.look_back": getattr(args, "lookback", None),
        "window.look_ahead": getattr(args, "lookahead", None),
        "map.weight_min": getattr(args, "weight_min", None),
        "map.weight_max": getattr(args, "weight_max", None),
        "map.baseline_max_em": getattr(args, "baseline_max", None),
        "map.spacing_max_em": getattr(args, "spacing_max", None),
    }
    try:
        return apply_overrides(cfg, overrides)
    except ProsotypeError as exc:
        raise _InputError(str(exc)) from exc


def _load_inputs(args, cfg):
    audio_bytes = _read_bytes(args.audio)
    align_text = _read_text(args.align)
    try:
        buffer = decode_wav(audio_bytes)
    except ProsotypeError as exc:
        raise _InputError(f"{args.audio}: {exc}") from exc
    try:
        transcript = parse_transcript(align_text)
    except ProsotypeError as exc:
        raise _InputError(f"{args.align}: {exc}") from exc
    for i, utterance in enumerate(transcript.utterances):
        if utterance.span.end_sec > buffer.duration_sec + 0.5 / buffer.sample_rate:
            raise _InputError(
                f"{args.align}: utterances[{i}] ends at {utterance.span.end_sec}s, "
                f"after the audio ends at {buffer.duration_sec:.6f}s"
            )
    return buffer, transcript


def _cmd_extract(args) -> int:
    cfg = _load_pipeline_config(args)
    buffer, transcript = _load_inputs(args, cfg)
    try:
        rows = pipeline.feature_rows(buffer, transcript, cfg.pitch)
    except ProsotypeError as exc:
        raise _InputError(str(exc)) from exc
    _write_output(emit._canonical_bytes({"rows": rows}).decode("utf-8"), args.out)
    return EXIT_OK


def _cmd_modulate(args) -> int:
    cfg = _load_pipeline_config(args)
    buffer, transcript = _load_inputs(args, cfg)
    try:
        doc = pipeline.modulate(buffer, transcript, cfg)
    except ProsotypeError as exc:
        raise _InputError(str(exc)) from exc
    _write_output(emit.serialize_doc(doc).decode("utf-8"), args.out)
    return EXIT_OK


def _cmd_render_static(args) -> int:
    data = _read_bytes(args.doc)
    try:
        doc = emit.parse_doc(data)
    except ProsotypeError as exc:
        raise _InputError(f"{args.doc}: {exc}") from exc
    _write_output(emit.emit_static_markup(doc), args.out)
    return EXIT_OK


def _add_common(parser):
    parser.add_argument("--out", help="output path (default: stdout)")
    parser.add_argument("--config", help="TOML config file")


def _add_pitch_flags(parser):
    parser.add_argument("--pitch-min", type=float, help="pitch search floor in Hz")
    parser.add_argument("--pitch-max", type=float, help="pitch search ceiling in Hz")


def _add_modulate_flags(parser):
    parser.add_argument("--weight-min", type=float, help="font weight at zero loudness")
    parser.add_argument("--weight-max", type=float, help="font weight at full loudness")
    parser.add_argument("--baseline-max", type=float, help="baseline shift bound in em")
    parser.add_argument("--spacing-max", type=float, help="letter-spacing bound in em")
    parser.add_argument("--lookback", type=int, help="window syllables before the current one")
    parser.add_argument("--lookahead", type=int, help="window syllables after the current one")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="prosotype",
        description="Derive per-syllable typography (weight, baseline shift, "
        "letter spacing) from speech prosody.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_extract = sub.add_parser("extract", help="write the raw per-syllable feature table")
    p_extract.add_argument("audio", help="input .wav file")
    p_extract.add_argument("align", help="input .align.json file")
    _add_common(p_extract)
    _add_pitch_flags(p_extract)
    p_extract.set_defaults(func=_cmd_extract)

    p_mod = sub.add_parser("modulate", help="write the modulated caption document (.smt.json)")
    p_mod.add_argument("audio", help="input .wav file")
    p_mod.add_argument("align", help="input .align.json file")
    _add_common(p_mod)
    _add_pitch_flags(p_mod)
    _add_modulate_flags(p_mod)
    p_mod.set_defaults(func=_cmd_modulate)

    p_render = sub.add_parser("render-static", help="render a caption document to static HTML")
    p_render.add_argument("doc", help="input .smt.json file")
    p_render.add_argument("--out", help="output path (default: stdout)")
    p_render.set_defaults(func=_cmd_render_static)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"prosotype: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # never a traceback for the caller
        print(f"prosotype: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
