"""Named fixture states for the command line.

Fixture references look like ``name`` or ``name:params``::

    ghz  ghz4  ghzN  w  bell  product  chain  chain:0.6,0.8

Non-parametric fixtures ship as PureState JSON files next to this module
(``data/fixtures``) together with a SHA-256 manifest.  They are regenerated
from the constructors in :mod:`qlink.qstate` with ``python -m qlink.fixtures
--write DIR``; the test suite checks the regenerated bytes against the
manifest.
"""

import argparse
import hashlib
import json
import math
import os
import re
from pathlib import Path

from qlink.errors import BadParameters
from qlink.qstate import PureState, bell, chain, ghz, tensor, w3, ket0

PACKAGED_DIR = Path(__file__).parent / "data" / "fixtures"
MANIFEST = "SHA256SUMS.json"
ENV_VAR = "QLINK_FIXTURES"

_S2 = 1 / math.sqrt(2)

BUILDERS = {
    "ghz": lambda: ghz(3),
    "ghz4": lambda: ghz(4),
    "w": w3,
    "bell": bell,
    "product": lambda: tensor(ket0(), ket0(), ket0()),
    "chain": lambda: chain(_S2, _S2),
}

_REF = re.compile(r"^(?P<name>[a-z][a-z0-9_]*)(?::(?P<params>[^:]*))?$")


def fixture_bytes(state):
    return (json.dumps(state.to_dict(), indent=2, sort_keys=True) + "\n").encode()


def write_fixtures(directory):
    """Write every named fixture plus the checksum manifest into ``directory``."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    sums = {}
    for name, build in sorted(BUILDERS.items()):
        data = fixture_bytes(build())
        (directory / f"{name}.json").write_bytes(data)
        sums[f"{name}.json"] = hashlib.sha256(data).hexdigest()
    (directory / MANIFEST).write_text(json.dumps(sums, indent=2, sort_keys=True) + "\n")
    return sums


def fixture_dir(override=None):
    if override:
        return Path(override)
    env = os.environ.get(ENV_VAR)
    return Path(env) if env else PACKAGED_DIR


def is_fixture_ref(text):
    m = _REF.match(text.strip())
    if not m:
        return False
    name = m.group("name")
    return name in BUILDERS or re.fullmatch(r"ghz\d+", name) is not None


def resolve(text, directory=None):
    """Return the PureState named by a fixture reference."""
    m = _REF.match(text.strip())
    if not m:
        raise BadParameters(f"not a fixture reference: {text!r}")
    name, params = m.group("name"), m.group("params")
    if name == "chain" and params:
        try:
            a, b = (float(x) for x in params.split(","))
        except ValueError:
            raise BadParameters(f"chain fixture needs 'chain:a,b', got {text!r}") from None
        return chain(a, b)
    if params:
        raise BadParameters(f"fixture {name!r} takes no parameters")
    path = fixture_dir(directory) / f"{name}.json"
    if path.is_file():
        return PureState.from_json(path.read_text())
    if name in BUILDERS:
        return BUILDERS[name]()
    ghz_n = re.fullmatch(r"ghz(\d+)", name)
    if ghz_n:
        return ghz(int(ghz_n.group(1)))
    raise BadParameters(f"unknown fixture {name!r}")


def verify(directory=None):
    """Names of fixture files whose SHA-256 differs from the manifest (empty when all match)."""
    directory = fixture_dir(directory)
    sums = json.loads((directory / MANIFEST).read_text())
    bad = []
    for fname, digest in sorted(sums.items()):
        path = directory / fname
        if not path.is_file() or hashlib.sha256(path.read_bytes()).hexdigest() != digest:
            bad.append(fname)
    return bad


def main(argv=None):
    parser = argparse.ArgumentParser(description="Regenerate or verify the qlink fixture files.")
    parser.add_argument("--write", metavar="DIR", help="write fixtures and manifest into DIR")
    parser.add_argument("--verify", metavar="DIR", nargs="?", const="", help="check files against the manifest")
    args = parser.parse_args(argv)
    if args.write:
        for fname, digest in write_fixtures(args.write).items():
            print(f"{digest}  {fname}")
    if args.verify is not None:
        bad = verify(args.verify or None)
        for fname in bad:
            print(f"MISMATCH {fname}")
        return 1 if bad else 0
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
