"""Thin CLI client over the service operations.

By default commands run in-process; with --server URL they POST the same
request to a running polychar service.  Output is a single deterministic
JSON document on stdout, or human-readable tables with --pretty.
"""

from __future__ import annotations

import json
import sys

import click

from . import api
from .api import CrossCheckError
from .branching import DecompositionError, EmbeddingError
from .rootsystem import InvalidAlgebraError


def _post(server: str, path: str, payload: dict) -> dict:
    import httpx

    resp = httpx.post(server.rstrip("/") + path, json=payload, timeout=300.0)
    if resp.status_code != 200:
        detail = resp.json().get("detail", resp.text)
        raise click.ClickException(f"server error {resp.status_code}: {detail}")
    return resp.json()


def _execute(server, path, payload, fn, *args, **kwargs) -> dict:
    if server:
        return _post(server, path, payload)
    try:
        return fn(*args, **kwargs)
    except (ValueError, InvalidAlgebraError, EmbeddingError) as exc:
        raise click.ClickException(str(exc))
    except (CrossCheckError, DecompositionError) as exc:
        click.echo(f"cross-check failed: {exc}", err=True)
        sys.exit(2)


def _emit(doc: dict, pretty: bool) -> None:
    if not pretty:
        click.echo(json.dumps(doc, sort_keys=True, separators=(",", ":")))
        return
    click.echo(f"{doc['command']}  {doc['algebra']}  {doc['inputs']}")
    for key, value in doc["result"].items():
        if isinstance(value, dict):
            click.echo(f"{key}:")
            for k in sorted(value):
                click.echo(f"  {k:>12}  {value[k]}")
        elif isinstance(value, list):
            click.echo(f"{key}: [{len(value)} entries]")
        else:
            click.echo(f"{key}: {value}")


server_option = click.option("--server", default=None, metavar="URL",
                             help="POST to a running polychar service instead "
                                  "of computing in-process.")
pretty_option = click.option("--pretty", is_flag=True, help="human-readable tables")
height_bound_option = click.option(
    "--height-bound", default=None, type=int,
    help="reject weights deeper than this many simple-root steps")


@click.group()
def main():
    """Polytope expansion of Lie characters (exact arithmetic)."""


@main.command()
@click.argument("algebra")
@click.argument("weight")
@height_bound_option
@server_option
@pretty_option
def mults(algebra, weight, height_bound, server, pretty):
    """Dominant weight multiplicities and the dimension of L(WEIGHT)."""
    payload = {"algebra": algebra, "weight": weight, "height_bound": height_bound}
    doc = _execute(server, "/mults", payload,
                   api.cmd_mults, algebra, weight, height_bound)
    _emit(doc, pretty)


@main.command()
@click.argument("algebra")
@click.argument("weight")
@height_bound_option
@server_option
@pretty_option
def polytope(algebra, weight, height_bound, server, pretty):
    """Polytope expansion of the character: multiplicities, the explicit
    inverse row, the polytope dimension, and recovered weight mults."""
    payload = {"algebra": algebra, "weight": weight, "height_bound": height_bound}
    doc = _execute(server, "/polytope", payload,
                   api.cmd_polytope, algebra, weight, height_bound)
    _emit(doc, pretty)


@main.command()
@click.argument("algebra")
@click.argument("left")
@click.argument("right")
@click.option("--method", default="all", type=click.Choice(api.TENSOR_METHODS))
@server_option
@pretty_option
def tensor(algebra, left, right, method, server, pretty):
    """Tensor product decomposition of L(LEFT) x L(RIGHT)."""
    payload = {"algebra": algebra, "left": left, "right": right, "method": method}
    doc = _execute(server, "/tensor", payload,
                   api.cmd_tensor, algebra, left, right, method)
    _emit(doc, pretty)


@main.command()
@click.argument("algebra")
@click.argument("embedding")
@click.argument("weight")
@click.option("--method", default="all", type=click.Choice(api.BRANCH_METHODS))
@server_option
@pretty_option
def branch(algebra, embedding, weight, method, server, pretty):
    """Branching of L(WEIGHT) under EMBEDDING ("principal-a1",
    "subdiagram:1,3", or a JSON embedding file)."""
    payload = {"algebra": algebra, "embedding": embedding,
               "weight": weight, "method": method}
    doc = _execute(server, "/branch", payload,
                   api.cmd_branch, algebra, embedding, weight, method)
    _emit(doc, pretty)


@main.command("brion-check")
@click.argument("algebra")
@click.argument("weight")
@click.option("--seed", default=0, type=int, help="RNG seed for directions")
@click.option("--directions", default=api.BRION_DEFAULT_DIRECTIONS, type=int)
@server_option
@pretty_option
def brion_check(algebra, weight, seed, directions, server, pretty):
    """Numeric vertex-cone identity check for the polytope sum."""
    payload = {"algebra": algebra, "weight": weight,
               "seed": seed, "directions": directions}
    doc = _execute(server, "/brion-check", payload,
                   api.cmd_brion_check, algebra, weight, seed, directions)
    _emit(doc, pretty)


if __name__ == "__main__":
    main()
