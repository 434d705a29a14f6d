"""Recompute every published worked example and print one line per claim."""

import sys

from skewcode.reference_claims import FAIL, run_claims


def main():
    claims = run_claims()
    width = max(len(c.status) for c in claims)
    for c in claims:
        extra = f"  [{c.detail}]" if c.detail else ""
        print(f"{c.status:<{width}}  {c.suite}: {c.name}{extra}")
    counts = {s: sum(c.status == s for c in claims) for s in sorted({c.status for c in claims})}
    print(", ".join(f"{k}={v}" for k, v in counts.items()))
    return 1 if counts.get(FAIL) else 0


if __name__ == "__main__":
    sys.exit(main())
