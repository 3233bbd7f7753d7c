#!/usr/bin/env python3
"""Format (or check) the sources with isort and black, optionally run pyright."""

import argparse
import importlib.util
import subprocess
import sys
from typing import List

TOOLS = ("isort", "black")


def run_tool(cmd: List[str], name: str) -> bool:
    print(f"Running: {name}")
    try:
        result = subprocess.run(cmd, capture_output=True, text=True)
    except FileNotFoundError:
        print(f"Command not found: {cmd[0]}")
        return False
    output = (result.stdout + result.stderr).strip()
    if output:
        print(output)
    return result.returncode == 0


def main():
    parser = argparse.ArgumentParser(
        description="Format spiderforge with isort and black"
    )
    parser.add_argument(
        "--check",
        action="store_true",
        help="don't write changes, fail when formatting is needed",
    )
    parser.add_argument(
        "--types", action="store_true", help="also type check with pyright"
    )
    parser.add_argument("paths", nargs="*", default=["src"])
    args = parser.parse_args()

    missing = [tool for tool in TOOLS if importlib.util.find_spec(tool) is None]
    if missing:
        print(f"missing {', '.join(missing)}: pip install --editable '.[dev]'")
        sys.exit(1)

    isort_cmd = [sys.executable, "-m", "isort"]
    black_cmd = [sys.executable, "-m", "black"]
    if args.check:
        isort_cmd.append("--check-only")
        black_cmd.append("--check")

    results = {
        "isort": run_tool(isort_cmd + args.paths, "isort"),
        "black": run_tool(black_cmd + args.paths, "black"),
    }
    if args.types:
        results["pyright"] = run_tool(["pyright", *args.paths], "pyright")

    for name, ok in results.items():
        print(f"------- {name} {'passed' if ok else 'FAILED'} ----------")
    if not all(results.values()):
        if args.check:
            print("Run 'python format_project.py' to fix formatting issues.")
        sys.exit(1)


if __name__ == "__main__":
    main()

#  LocalWords:  isort pyright
