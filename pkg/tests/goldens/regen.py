"""Regenerate the golden CLI transcripts.

Run from the repository root:

    python3 tests/goldens/regen.py

Timing lines are stripped and the fixtures directory is replaced by the
placeholder FIXTURES so the files are stable across machines.
"""

import contextlib
import io
import os
import sys

HERE = os.path.dirname(os.path.abspath(__file__))
FIXTURES = os.path.join(os.path.dirname(HERE), "fixtures")

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(HERE)), "src"))

from lfcheck.cli import main  # noqa: E402

COMMANDS = {
    "verify_sos": ["verify", "sos"],
    "case_4_1": ["verify", "case", "4.1"],
    "case_4_4_3": ["verify", "case", "4.4.3"],
    "bridge": ["verify", "bridge"],
    "expand": ["expand", "Ad(pi) (x) Ad(pi) tw chi"],
    "scan_small": [
        "scan", "--form1", "delta", "--form2", "11a",
        "--char", "kronecker:-4", "--xmax", "60", "--lmax", "2",
    ],
    "poles": [
        "poles", "Sym^4(pi) tw omega^-2 (x) Ad(pi')",
        "--hyp", os.path.join(FIXTURES, "octa_octa.hyp"),
    ],
}


def normalize(text: str) -> str:
    lines = [
        ln for ln in text.splitlines() if not ln.startswith("elapsed:")
    ]
    return ("\n".join(lines)).replace(FIXTURES, "FIXTURES") + "\n"


def run(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


if __name__ == "__main__":
    for name, argv in COMMANDS.items():
        code, out = run(argv)
        path = os.path.join(HERE, f"{name}.txt")
        with open(path, "w") as fh:
            fh.write(f"# exit {code}\n")
            fh.write(normalize(out))
        print(f"wrote {name}.txt (exit {code})")
