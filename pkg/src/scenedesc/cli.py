"""Command-line interface: score, lint, stats, serve.

Exit codes: 0 on success, 1 on lint or data validation failure, 2 on usage
errors (click's convention for bad invocations).
"""

from __future__ import annotations

import json
import sys
from pathlib import Path

import click

from .dataset import ManifestError, load_manifest, vocabulary
from .lint import LintConfig, lint_set
from .scoring import METRICS, RENDERERS, ScoringError, load_candidates, score_candidates


@click.group()
@click.version_option(package_name="scenedesc")
def main() -> None:
    """Traffic-scene description dataset toolkit."""


def _load_manifest_or_fail(path: str, strict: bool = True, lint_config: LintConfig | None = None):
    try:
        return load_manifest(path, strict=strict, lint_config=lint_config)
    except (ManifestError, OSError) as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(1)


@main.command()
@click.option("--candidates", "candidates_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--manifest", "manifest_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--metrics", default=",".join(METRICS), show_default=True, help="Comma-separated metric names.")
@click.option("--format", "output_format", type=click.Choice(sorted(RENDERERS)), default="csv", show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False), default=None, help="Write to a file instead of stdout.")
@click.option("--workers", default=1, show_default=True, help="Parallel scoring workers.")
def score(candidates_path, manifest_path, metrics, output_format, out_path, workers):
    """Score a candidates file against a manifest's reference sets."""
    selected = tuple(m.strip() for m in metrics.split(",") if m.strip())
    unknown = [m for m in selected if m not in METRICS]
    if unknown:
        raise click.UsageError(f"unknown metrics {unknown}; choose from {list(METRICS)}")
    manifest = _load_manifest_or_fail(manifest_path)
    try:
        candidates = load_candidates(candidates_path)
        report = score_candidates(candidates, manifest, selected, workers=workers)
    except ScoringError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(1)
    if len(manifest.seen_records) == 1 and "cider" in selected and candidates:
        click.echo(
            "warning: single-image manifest; consensus IDF weights all vanish and "
            "cider returns 0.0 regardless of quality",
            err=True,
        )
    rendered = RENDERERS[output_format](report)
    if out_path:
        Path(out_path).write_text(rendered, encoding="utf-8")
    else:
        click.echo(rendered, nl=False)


@main.command()
@click.option("--manifest", "manifest_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--format", "output_format", type=click.Choice(["text", "jsonl"]), default="text", show_default=True)
@click.option("--config", "config_path", type=click.Path(exists=True, dir_okay=False), default=None)
def lint(manifest_path, output_format, config_path):
    """Lint every annotated record; exit 1 if any error-severity rule fails."""
    config = LintConfig.from_file(config_path) if config_path else LintConfig()
    manifest = _load_manifest_or_fail(manifest_path, strict=False)
    failed = False
    for record in manifest.records:
        if record.category != "seen":
            continue
        report = lint_set(record, config)
        failed = failed or not report.passed
        for diagnostic in report.diagnostics:
            if output_format == "jsonl":
                payload = {"record": record.id, **diagnostic.to_dict()}
                click.echo(json.dumps(payload, sort_keys=True, ensure_ascii=False))
            else:
                location = record.id if diagnostic.sentence is None else f"{record.id}[{diagnostic.sentence}]"
                span = f" @{diagnostic.span[0]}..{diagnostic.span[1]}" if diagnostic.span else ""
                click.echo(f"{diagnostic.severity}: {location}{span}: {diagnostic.rule}: {diagnostic.message}")
    sys.exit(1 if failed else 0)


@main.command()
@click.option("--manifest", "manifest_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--min-freq", default=5, show_default=True, help="Vocabulary frequency threshold.")
@click.option("--top", default=10, show_default=True, help="How many top-frequency tokens to print.")
def stats(manifest_path, min_freq, top):
    """Corpus statistics: record counts, token totals, retained vocabulary."""
    try:
        manifest = load_manifest(manifest_path)
        vocab = vocabulary(manifest, min_frequency=min_freq)
    except (ManifestError, OSError, ValueError) as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(1)
    for category in ("seen", "unseen", "out_of_domain"):
        click.echo(f"records[{category}]: {len(manifest.by_category(category))}")
    click.echo(f"token total: {vocab.total_tokens}")
    click.echo(f"distinct tokens: {len(vocab.frequencies)}")
    click.echo(f"retained vocabulary (min_freq={min_freq}): {vocab.retained_size}")
    click.echo(f"special tokens: {' '.join(vocab.special_tokens)}")
    for token, count in vocab.top(top):
        click.echo(f"  {count:6d}  {token}")


@main.command()
@click.option("--manifest", "manifest_path", required=True, type=click.Path(exists=True, dir_okay=False))
@click.option("--port", default=8000, show_default=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--static", "static_dir", type=click.Path(exists=True, file_okay=False), default=None,
              help="Directory with the annotation workbench build to serve at /.")
def serve(manifest_path, port, host, static_dir):
    """Run the annotation service backed by a manifest file."""
    import uvicorn

    from .service.app import create_app
    from .service.store import ManifestStore

    try:
        store = ManifestStore(manifest_path)
    except ManifestError as err:
        click.echo(f"error: {err}", err=True)
        sys.exit(1)
    app = create_app(store, static_dir=static_dir)
    uvicorn.run(app, host=host, port=port, log_level="info")


if __name__ == "__main__":
    main()
