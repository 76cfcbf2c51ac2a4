#!/usr/bin/env python3
"""Run every identity-verification suite and exit nonzero on any failure.

    python3 scripts/run_verify.py [suite]
"""

import sys

from sre_purity.verification import SUITES, run_suite


def main():
    suite = sys.argv[1] if len(sys.argv) > 1 else "all"
    if suite != "all" and suite not in SUITES:
        print(f"unknown suite {suite!r}; choose from {sorted(SUITES)} or 'all'")
        return 2
    results = run_suite(suite)
    for res in results:
        print(res.line())
    passed = sum(r.passed for r in results)
    print(f"{passed}/{len(results)} checks passed")
    return 0 if passed == len(results) else 1


if __name__ == "__main__":
    sys.exit(main())
