"""Benchmark graphs from the Network Repository and their known counts.

Graph files are not shipped; ``fetch`` downloads them into the data
directory (``$CISE_DATA``, default ``./data``).  ``KNOWN_COUNTS`` maps
graph name to ``{k: |CIS(G, k)|}`` for the published values.

    python -m cise.datasets fetch ca-sandi_auths bio-celegans bio-diseasome
"""

from __future__ import annotations

import argparse
import io
import os
import sys
import urllib.request
import zipfile
from dataclasses import dataclass
from pathlib import Path

from .graph import Graph, read_graph

__all__ = ["BenchmarkGraph", "GRAPHS", "KNOWN_COUNTS", "data_dir", "locate", "load", "fetch"]

DOWNLOAD_URL = "https://nrvis.com/download/data/{category}/{name}.zip"


@dataclass(frozen=True)
class BenchmarkGraph:
    name: str
    category: str
    n: int
    m: int
    counts: dict


GRAPHS = {
    g.name: g
    for g in [
        BenchmarkGraph("ca-sandi_auths", "ca", 86, 124, {
            2: 124, 3: 379, 4: 1422, 5: 5740, 6: 23718,
            83: 36407, 84: 1837, 85: 61}),
        BenchmarkGraph("inf-USAir97", "inf", 332, 2126, {
            2: 2126, 3: 67827, 4: 2269621, 5: 68484518,
            329: 4685705, 330: 46371, 331: 305}),
        BenchmarkGraph("ca-netscience", "ca", 379, 914, {
            2: 914, 3: 4575, 4: 31665, 5: 244418, 6: 1917058,
            376: 5512665, 377: 51681, 378: 322}),
        BenchmarkGraph("bio-celegans", "bio", 453, 2025, {
            2: 2025, 3: 72605, 4: 3806083, 5: 195573511,
            450: 14194614, 451: 97014, 452: 441}),
        BenchmarkGraph("bio-diseasome", "bio", 516, 1188, {
            2: 1188, 3: 6758, 4: 65695, 5: 765557, 6: 9062333,
            513: 10914883, 514: 81422, 515: 404}),
        BenchmarkGraph("soc-wiki-Vote", "soc", 889, 2914, {
            2: 2914, 3: 45680, 4: 1121962, 5: 31308165, 6: 892820902,
            887: 263965, 888: 727}),
        BenchmarkGraph("bio-yeast", "bio", 1458, 1948, {
            2: 1948, 3: 11524, 4: 105733, 5: 1104980, 6: 11718959,
            1456: 558202, 1457: 1057}),
        BenchmarkGraph("inf-power", "inf", 4941, 6594, {
            2: 6594, 3: 17631, 4: 63401, 5: 268694, 6: 1260958,
            4940: 3712}),
        BenchmarkGraph("bio-dmela", "bio", 7393, 25569, {
            2: 25569, 3: 575169, 4: 20943036, 7392: 6184}),
        BenchmarkGraph("ca-HepPh", "ca", 11204, 117619, {
            2: 117619, 3: 8560145, 11203: 10082}),
        BenchmarkGraph("ca-AstroPh", "ca", 17903, 196972, {
            2: 196972, 3: 10044854, 17902: 16836}),
        BenchmarkGraph("soc-brightkite", "soc", 56739, 212945, {
            2: 212945, 3: 12432832, 56738: 44033}),
    ]
}

KNOWN_COUNTS = {name: g.counts for name, g in GRAPHS.items()}


def data_dir() -> Path:
    return Path(os.environ.get("CISE_DATA", "data"))


def locate(name: str, directory: Path | None = None) -> Path | None:
    """Path of a fetched graph file, or None when it is not present."""
    directory = Path(directory) if directory else data_dir()
    for suffix in (".mtx", ".edges"):
        candidate = directory / f"{name}{suffix}"
        if candidate.is_file():
            return candidate
    return None


def load(name: str, directory: Path | None = None, with_bitrows: bool = False) -> Graph:
    path = locate(name, directory)
    if path is None:
        raise FileNotFoundError(
            f"{name} not found in {directory or data_dir()}; "
            f"run `python -m cise.datasets fetch {name}`")
    return read_graph(path, with_bitrows=with_bitrows)


def fetch(name: str, directory: Path | None = None, timeout: float = 60.0) -> Path:
    """Download and unpack one graph; returns the extracted file path."""
    info = GRAPHS[name]
    directory = Path(directory) if directory else data_dir()
    directory.mkdir(parents=True, exist_ok=True)
    existing = locate(name, directory)
    if existing is not None:
        return existing
    url = DOWNLOAD_URL.format(category=info.category, name=name)
    with urllib.request.urlopen(url, timeout=timeout) as resp:
        payload = resp.read()
    with zipfile.ZipFile(io.BytesIO(payload)) as zf:
        members = [m for m in zf.namelist() if m.endswith((".mtx", ".edges"))]
        if not members:
            raise ValueError(f"{url} contains no .mtx or .edges file")
        member = members[0]
        target = directory / (name + Path(member).suffix)
        target.write_bytes(zf.read(member))
    return target


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="python -m cise.datasets")
    sub = parser.add_subparsers(dest="command", required=True)
    f = sub.add_parser("fetch", help="download benchmark graphs")
    f.add_argument("names", nargs="*", help="graph names (default: all)")
    f.add_argument("--dir", type=Path, default=None)
    sub.add_parser("list", help="show known graphs and counts")
    args = parser.parse_args(argv)

    if args.command == "list":
        for g in GRAPHS.values():
            print(f"{g.name:16s} n={g.n:<6d} m={g.m:<7d} counts={g.counts}")
        return 0
    status = 0
    for name in args.names or list(GRAPHS):
        if name not in GRAPHS:
            print(f"unknown graph {name}", file=sys.stderr)
            status = 2
            continue
        try:
            path = fetch(name, args.dir)
        except OSError as exc:
            print(f"{name}: download failed: {exc}", file=sys.stderr)
            status = 1
            continue
        print(path)
    return status


if __name__ == "__main__":
    sys.exit(main())
