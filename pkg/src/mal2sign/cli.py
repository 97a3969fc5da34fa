"""Command-line front end; a thin layer over pipeline and service.

Exit codes: 0 success, 1 resource or validation failure, 2 usage error
(click's default for bad invocations).
"""

from __future__ import annotations

import sys
import unicodedata
from pathlib import Path

import click

from .errors import Mal2SignError
from .lexicon import fingerspell as fingerspell_op
from .lexicon import load_lexicon
from .pipeline import load_resources, serialize_translation, translate
from .animation import serialize_timeline


@click.group()
@click.option(
    "--config",
    "config_path",
    type=click.Path(path_type=Path),
    envvar="MAL2SIGN_CONFIG",
    default=None,
    help="Config document naming the rule table and lexicon (default: bundled demo).",
)
@click.option(
    "--rules",
    "rules_path",
    type=click.Path(path_type=Path),
    default=None,
    help="Rule-table path, overriding the config entry.",
)
@click.option(
    "--lexicon",
    "lexicon_path",
    type=click.Path(path_type=Path),
    default=None,
    help="Lexicon path, overriding the config entry.",
)
@click.pass_context
def main(ctx: click.Context, config_path, rules_path, lexicon_path):
    """Translate Malayalam text into sign-language animation timelines."""
    ctx.obj = (config_path, rules_path, lexicon_path)


def _resources(ctx: click.Context):
    config_path, rules_path, lexicon_path = ctx.obj
    try:
        return load_resources(config_path, rules_path, lexicon_path)
    except Mal2SignError as e:
        click.echo(str(e), err=True)
        sys.exit(1)


def _emit(text: str, out: Path | None):
    if out is None:
        click.echo(text, nl=False)
    else:
        out.write_text(text, encoding="utf-8")


@main.command("translate")
@click.option("--text", required=True, help="Input text to translate.")
@click.option(
    "--format",
    "fmt",
    type=click.Choice(["gloss", "stages", "timeline"]),
    default="timeline",
    show_default=True,
)
@click.option("--out", type=click.Path(path_type=Path), default=None, help="Write to FILE instead of stdout.")
@click.pass_context
def translate_cmd(ctx: click.Context, text: str, fmt: str, out: Path | None):
    """Translate text and print glosses, all stage outputs, or the timeline."""
    result = translate(text, _resources(ctx))
    if fmt == "gloss":
        _emit("".join(g.gloss + "\n" for g in result.glosses), out)
    elif fmt == "stages":
        _emit(serialize_translation(result), out)
    else:
        _emit(serialize_timeline(result.timeline), out)


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", default=8080, show_default=True, type=int)
@click.option(
    "--static",
    "static_dir",
    type=click.Path(exists=True, file_okay=False, path_type=Path),
    default=None,
    help="Serve a built viewer bundle from this directory at /.",
)
@click.pass_context
def serve(ctx: click.Context, host: str, port: int, static_dir: Path | None):
    """Start the HTTP service (and viewer, when --static is given)."""
    import uvicorn

    from .service import create_app

    app = create_app(_resources(ctx), static_dir=static_dir)
    uvicorn.run(app, host=host, port=port)


@main.group()
def lexicon():
    """Lexicon maintenance commands."""


@lexicon.command()
@click.argument("path", type=click.Path(path_type=Path))
def validate(path: Path):
    """Validate a lexicon document; list every violation."""
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as e:
        click.echo(str(e), err=True)
        sys.exit(1)
    try:
        lex = load_lexicon(text)
    except Mal2SignError as e:
        violations = getattr(e, "violations", None)
        if violations is not None:
            for violation in violations:
                click.echo(str(violation))
        else:
            click.echo(str(e))
        sys.exit(1)
    click.echo(f"OK: {len(lex.entries)} entries, {len(lex.fingerspell_entries)} fingerspelling keys")


@main.command()
@click.option("--text", required=True, help="Text to fingerspell code point by code point.")
@click.pass_context
def fingerspell(ctx: click.Context, text: str):
    """Print the fingerspelling gloss ids for TEXT, one per line."""
    res = _resources(ctx)
    for gloss in fingerspell_op(unicodedata.normalize("NFC", text), res.lexicon):
        click.echo(gloss)


if __name__ == "__main__":
    main()
