"""Run the acceptance suite and print its PASS/FAIL summary lines."""

import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def main():
    proc = subprocess.run([sys.executable, "-m", "pytest", "-q", str(ROOT / "tests" / "test_acceptance.py")],
                          capture_output=True, text=True, cwd=ROOT)
    lines = [l for l in proc.stdout.splitlines() if l.startswith("ACCEPTANCE")]
    print("\n".join(lines))
    print(proc.stdout.strip().splitlines()[-1])
    sys.exit(proc.returncode)


if __name__ == "__main__":
    main()
