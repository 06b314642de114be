"""Run the acceptance checks outside pytest and print one line per criterion.

Exit status is the number of failing criteria.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

from acceptance_checks import CRITERIA  # noqa: E402


def main() -> int:
    failed = 0
    for number in sorted(CRITERIA):
        title, fn = CRITERIA[number]
        passed, detail = fn()
        failed += not passed
        print(f"criterion {number:>2} {'PASS' if passed else 'FAIL'}: {title} | {detail}")
    return failed


if __name__ == "__main__":
    sys.exit(main())
